#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "bifre/bifre.hpp"

// Shared regression instances and small helpers for the test suites.
namespace fixtures {

inline bifre::UnitRational ur(const std::string& s) { return bifre::parse_unit_scalar(s); }

inline bifre::CandidateSolution sol(std::initializer_list<const char*> parts) {
    bifre::CandidateSolution x;
    for (const char* p : parts) x.push_back(ur(p));
    return x;
}

/// One equation, two unknowns; has both a greatest and a least solution.
inline bifre::BipolarSystem single_2var() {
    return bifre::BipolarSystem::from_strings({{"0.8", "0.5"}}, {{"0.1", "0.4"}}, {"0.4"});
}

/// Variant of single_2var with the second negative coefficient lowered;
/// has a greatest solution and exactly two minimal solutions.
inline bifre::BipolarSystem single_2var_alt() {
    return bifre::BipolarSystem::from_strings({{"0.8", "0.5"}}, {{"0.1", "0.3"}}, {"0.4"});
}

/// Two rows over one unknown that pin the column to both sides of any
/// would-be feasible pair; unsolvable although both rows are fine alone.
inline bifre::BipolarSystem pinned_conflict() {
    return bifre::BipolarSystem::from_strings({{"0.5"}, {"0.1"}}, {{"0.2"}, {"0.8"}},
                                              {"0.5", "0.4"});
}

/// Three rows, three unknowns; two maximal solutions and a least one.
inline bifre::BipolarSystem system_3x3() {
    return bifre::BipolarSystem::from_strings(
        {{"0.1", "0.25", "0.4"}, {"0.1", "0.3", "0.3"}, {"0.3", "0.4", "0.8"}},
        {{"0.3", "0.3", "0.4"}, {"0.8", "0.6", "0.5"}, {"0.8", "0.5", "0.8"}},
        {"0.2", "0.4", "0.4"});
}

inline bifre::UnitRational random_scalar(std::mt19937_64& rng, unsigned d) {
    return bifre::UnitRational(bifre::Integer(rng() % (d + 1)), bifre::Integer(d));
}

/// Random instance that is solvable by construction: draws a random
/// assignment on the grid and takes b as the attained row values.
inline bifre::BipolarSystem random_solvable(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                            unsigned d) {
    bifre::BipolarSystem sys;
    sys.rows = n;
    sys.cols = m;
    for (std::size_t k = 0; k < n * m; ++k) sys.a_plus.push_back(random_scalar(rng, d));
    for (std::size_t k = 0; k < n * m; ++k) sys.a_minus.push_back(random_scalar(rng, d));
    bifre::CandidateSolution x;
    for (std::size_t j = 0; j < m; ++j) x.push_back(random_scalar(rng, d));
    for (std::size_t i = 0; i < n; ++i)
        sys.b.push_back(bifre::eval_bipolar_row(sys.plus_row(i), sys.minus_row(i), x));
    return sys;
}

inline std::vector<bifre::CandidateSolution> sorted(std::vector<bifre::CandidateSolution> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace fixtures
