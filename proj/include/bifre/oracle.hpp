#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bifre/algebra.hpp"
#include "bifre/system.hpp"

namespace bifre {

struct OracleLimits {
    std::size_t cap = 14;  // maximum columns for the 2^m sweep
};

/// Ground truth extracted by brute force. Every extreme assignment
/// (slot j is x̄_j or 1 - ȳ_j) is evaluated directly against every row;
/// any solution can be pushed to such an assignment without leaving the
/// solution set, so the sweep decides solvability and the extremal
/// antichains exactly.
struct OracleReport {
    bool solvable = false;
    std::vector<CandidateSolution> extreme_solutions;  // deduplicated, lexicographic
    std::vector<CandidateSolution> maximal;
    std::vector<CandidateSolution> minimal;
};

/// Per-row evaluation of one candidate.
struct RowCheck {
    UnitRational attained;
    bool matches = false;
};

struct VerificationReport {
    std::vector<RowCheck> rows;
    bool verdict = false;
};

inline VerificationReport verify_solution(const BipolarSystem& sys, const CandidateSolution& x) {
    if (x.size() != sys.cols)
        throw DimensionError("verify_solution: expected " + std::to_string(sys.cols) +
                             " components, got " + std::to_string(x.size()));
    VerificationReport report;
    report.verdict = true;
    for (std::size_t i = 0; i < sys.rows; ++i) {
        RowCheck check;
        check.attained = eval_bipolar_row(sys.plus_row(i), sys.minus_row(i), x);
        check.matches = check.attained == sys.b[i];
        report.verdict = report.verdict && check.matches;
        report.rows.push_back(std::move(check));
    }
    return report;
}

namespace oracle_detail {

inline bool leq(const CandidateSolution& a, const CandidateSolution& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

} // namespace oracle_detail

/// Exhaustive sweep over the 2^m extreme assignments. The candidate
/// bounds (x̄, ȳ) are recomputed here from the residuum alone, and the
/// solvability of the relaxation is decided by direct substitution, so
/// this path shares nothing with the solver beyond the scalar algebra.
inline OracleReport oracle_solve(const BipolarSystem& sys, const OracleLimits& limits = {}) {
    if (sys.cols > limits.cap)
        throw CapExceededError("instance too large for the oracle sweep: " +
                               std::to_string(sys.cols) + " columns exceeds cap " +
                               std::to_string(limits.cap));

    std::vector<UnitRational> upper(sys.cols, UnitRational::one());  // x̄
    std::vector<UnitRational> lower(sys.cols);                       // 1 - ȳ
    {
        std::vector<UnitRational> y_bar(sys.cols, UnitRational::one());
        for (std::size_t i = 0; i < sys.rows; ++i)
            for (std::size_t j = 0; j < sys.cols; ++j) {
                upper[j] = std::min(upper[j], residuum(sys.plus(i, j), sys.b[i]));
                y_bar[j] = std::min(y_bar[j], residuum(sys.minus(i, j), sys.b[i]));
            }
        for (std::size_t i = 0; i < sys.rows; ++i)
            if (eval_fre_row(sys.plus_row(i), sys.minus_row(i), upper, y_bar) != sys.b[i])
                return {};  // relaxation unsolvable, so the instance is too
        for (std::size_t j = 0; j < sys.cols; ++j) lower[j] = negate(y_bar[j]);
    }

    OracleReport report;
    const std::uint64_t end = std::uint64_t{1} << sys.cols;
    CandidateSolution x(sys.cols);
    for (std::uint64_t bits = 0; bits < end; ++bits) {
        for (std::size_t j = 0; j < sys.cols; ++j) x[j] = (bits >> j & 1) ? upper[j] : lower[j];
        bool ok = true;
        for (std::size_t i = 0; ok && i < sys.rows; ++i)
            ok = eval_bipolar_row(sys.plus_row(i), sys.minus_row(i), x) == sys.b[i];
        if (ok) report.extreme_solutions.push_back(x);
    }
    std::sort(report.extreme_solutions.begin(), report.extreme_solutions.end());
    report.extreme_solutions.erase(
        std::unique(report.extreme_solutions.begin(), report.extreme_solutions.end()),
        report.extreme_solutions.end());
    report.solvable = !report.extreme_solutions.empty();

    for (const CandidateSolution& s : report.extreme_solutions) {
        bool is_max = true, is_min = true;
        for (const CandidateSolution& other : report.extreme_solutions) {
            if (&other == &s) continue;
            if (other != s && oracle_detail::leq(s, other)) is_max = false;
            if (other != s && oracle_detail::leq(other, s)) is_min = false;
        }
        if (is_max) report.maximal.push_back(s);
        if (is_min) report.minimal.push_back(s);
    }
    return report;
}

/// Coarse-grid secondary sampler: evaluates every assignment on the grid
/// {0, 1/d, ..., d/d}^m and returns the ones that solve the system. The
/// extreme-assignment sweep above is the authoritative oracle; this one
/// only cross-checks that no off-lattice solution escapes the band
/// between the minimal and maximal solutions. (d+1)^m evaluations, so
/// the column cap is tighter.
inline std::vector<CandidateSolution> grid_sample_solutions(const BipolarSystem& sys, unsigned d,
                                                            std::size_t cap = 6) {
    if (d == 0) throw ContractViolation("grid_sample_solutions requires d >= 1");
    if (sys.cols > cap)
        throw CapExceededError("instance too large for the grid sweep: " +
                               std::to_string(sys.cols) + " columns exceeds cap " +
                               std::to_string(cap));
    std::vector<UnitRational> grid;
    grid.reserve(d + 1);
    for (unsigned v = 0; v <= d; ++v) grid.push_back(UnitRational(Integer(v), Integer(d)));

    std::vector<CandidateSolution> found;
    std::vector<unsigned> odometer(sys.cols, 0);
    CandidateSolution x(sys.cols, UnitRational::zero());
    while (true) {
        for (std::size_t j = 0; j < sys.cols; ++j) x[j] = grid[odometer[j]];
        bool ok = true;
        for (std::size_t i = 0; ok && i < sys.rows; ++i)
            ok = eval_bipolar_row(sys.plus_row(i), sys.minus_row(i), x) == sys.b[i];
        if (ok) found.push_back(x);

        std::size_t j = 0;
        while (j < sys.cols && ++odometer[j] > d) odometer[j++] = 0;
        if (j == sys.cols) break;
    }
    return found;
}

/// Deterministic pseudo-random instance with every scalar drawn uniformly
/// from {0, 1/d, ..., d/d}. Fill order: a_plus row-major, a_minus
/// row-major, then b; the same seed always reproduces the same instance.
inline BipolarSystem random_instance(std::uint64_t seed, std::size_t cols, std::size_t rows,
                                     unsigned grid_denominator) {
    if (cols == 0 || rows == 0 || grid_denominator == 0)
        throw ContractViolation("random_instance requires m >= 1, n >= 1, d >= 1");
    std::mt19937_64 engine(seed);
    const auto draw = [&] {
        return UnitRational(Integer(engine() % (grid_denominator + 1)), Integer(grid_denominator));
    };
    BipolarSystem sys;
    sys.rows = rows;
    sys.cols = cols;
    sys.a_plus.reserve(rows * cols);
    sys.a_minus.reserve(rows * cols);
    sys.b.reserve(rows);
    for (std::size_t k = 0; k < rows * cols; ++k) sys.a_plus.push_back(draw());
    for (std::size_t k = 0; k < rows * cols; ++k) sys.a_minus.push_back(draw());
    for (std::size_t k = 0; k < rows; ++k) sys.b.push_back(draw());
    return sys;
}

} // namespace bifre
