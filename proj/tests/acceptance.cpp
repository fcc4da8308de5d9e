// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All expected values are exact rationals; comparisons carry no tolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bifre/bifre.hpp"
#include "fixtures.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using bifre::BipolarSystem;
using bifre::UnitRational;
using fixtures::sol;
using fixtures::ur;

struct Criterion {
    bool passed = true;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& message) {
        if (!cond) {
            passed = false;
            if (failures.size() < 5) failures.push_back(message);
        }
    }
};

double best_of_three_ms(const std::function<void()>& body) {
    double best = 1e18;
    for (int k = 0; k < 3; ++k) {
        const auto t0 = Clock::now();
        body();
        const std::chrono::duration<double, std::milli> dt = Clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

// ---- criterion bodies ------------------------------------------------------

void criterion_1(Criterion& c) {
    const BipolarSystem eq = fixtures::single_2var();
    const auto fre = bifre::greatest_fre_candidate(eq);
    c.require(fre.x_bar == sol({"1/2", "4/5"}) && fre.y_bar == sol({"1", "1"}),
              "relaxation greatest solution != (1/2, 1, 4/5, 1)");
    c.require(fre.fre_solvable, "relaxation reported unsolvable");

    const auto report = bifre::extremal_system(eq);
    c.require(report.greatest && *report.greatest == sol({"1/2", "4/5"}),
              "greatest solution != (1/2, 4/5)");
    c.require(report.least && *report.least == sol({"0", "0"}), "least solution != (0, 0)");

    const double ms = best_of_three_ms([&] {
        const auto f = bifre::greatest_fre_candidate(eq);
        const auto r = bifre::extremal_system(eq);
        (void)f;
        (void)r;
    });
    c.require(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
}

void criterion_2(Criterion& c) {
    const auto a = bifre::analyze_single(fixtures::single_2var_alt());
    c.require(a.greatest && *a.greatest == sol({"1/2", "4/5"}), "greatest != (1/2, 4/5)");
    c.require(a.minimal.size() == 2, "expected exactly two minimal solutions");
    c.require(fixtures::sorted(a.minimal) ==
                  std::vector{sol({"0", "4/5"}), sol({"1/2", "0"})},
              "minimal set != {(1/2, 0), (0, 4/5)}");
    c.require(a.k_plus.size() == 2, "|K+| != 2");
    c.require(a.minimal.size() == a.k_plus.size(), "minimal count != |K+|");
}

void criterion_3(Criterion& c) {
    const auto report = bifre::verify_solution(fixtures::single_2var(), sol({"0.4", "0.5"}));
    c.require(report.rows.size() == 1, "expected one row");
    c.require(report.rows[0].attained == UnitRational(8, 25), "row value != 8/25");
    c.require(!report.verdict, "(0.4, 0.5) accepted as a solution");
}

void criterion_4(Criterion& c) {
    const BipolarSystem sys = fixtures::pinned_conflict();
    const auto fre = bifre::greatest_fre_candidate(sys);
    c.require(fre.x_bar == sol({"1"}) && fre.y_bar == sol({"1/2"}),
              "relaxation greatest solution != (1, 1/2)");

    const auto verdict = bifre::system_solvable(sys);
    c.require(!verdict.solvable, "pinned-conflict instance reported solvable");
    if (!verdict.witness) {
        c.require(false, "missing witness");
        return;
    }
    const auto& w = *verdict.witness;
    c.require(w.kind == bifre::FailureKind::no_feasible_pair && w.forced_conflict,
              "witness is not a row-forced conflict");
    c.require(w.column == 0, "conflict column != 1");
    c.require(w.row_plus == 0, "forcing row for J+ != 1");
    c.require(w.row_minus == 1, "forcing row for J- != 2");
    c.require(w.gap_sum == bifre::Rational(3, 2), "x_bar + y_bar != 3/2");
}

void criterion_5(Criterion& c) {
    const BipolarSystem sys = fixtures::system_3x3();
    const auto fre = bifre::greatest_fre_candidate(sys);
    c.require(fre.x_bar == sol({"1", "4/5", "1/2"}) && fre.y_bar == sol({"1/2", "2/3", "1/2"}),
              "relaxation greatest solution != (1, 1/2, 4/5, 2/3, 1/2, 1/2)");

    c.require(bifre::is_feasible_pair(sys, {1}, {0, 2}), "({2}, {1,3}) not certified feasible");

    const auto fam = bifre::enumerate_families(sys);
    const std::vector<bifre::IndexSet> s_plus{{}, {0}, {1}, {2}, {0, 2}, {1, 2}};
    const std::vector<bifre::IndexSet> s_minus{{0}, {1}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    c.require(fam.s_plus == s_plus, "S+ mismatch");
    c.require(fam.s_minus == s_minus, "S- mismatch");

    const auto report = bifre::extremal_system(sys);
    c.require(fixtures::sorted(report.maximal) ==
                  std::vector{sol({"1/2", "4/5", "1/2"}), sol({"1", "1/3", "1/2"})},
              "maximal solutions mismatch");
    c.require(report.least && *report.least == sol({"1/2", "1/3", "1/2"}),
              "least solution != (1/2, 1/3, 1/2)");
    c.require(report.maximal.size() == report.families.s_plus_maximal.size(),
              "|maximal| != |maximal elements of S+|");
    c.require(report.minimal.size() == report.families.s_minus_maximal.size(),
              "|minimal| != |maximal elements of S-|");

    const double ms = best_of_three_ms([&] {
        const auto f = bifre::greatest_fre_candidate(sys);
        const auto r = bifre::extremal_system(sys);
        (void)f;
        (void)r;
    });
    c.require(ms < 10.0, "runtime " + std::to_string(ms) + " ms >= 10 ms");
}

void criterion_6(Criterion& c) {
    std::mt19937_64 rng(601);
    int solvable_seen = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t m = 1 + rng() % 6;
        const unsigned d = 1 + rng() % 4;
        BipolarSystem eq = bifre::random_instance(rng(), m, 1, d);
        // Bias towards zero coefficients so both branches appear often.
        for (auto& v : eq.a_plus)
            if (rng() % 3 == 0) v = UnitRational::zero();
        for (auto& v : eq.a_minus)
            if (rng() % 3 == 0) v = UnitRational::zero();
        eq.b[0] = UnitRational::zero();
        eq = bifre::preprocess(eq).system;

        bool criterion_holds = true;  // every column has a zero side
        for (std::size_t j = 0; j < eq.cols; ++j)
            if (!eq.plus(0, j).is_zero() && !eq.minus(0, j).is_zero()) criterion_holds = false;

        const auto oracle = bifre::oracle_solve(eq);
        c.require(oracle.solvable == criterion_holds,
                  "coefficient criterion disagrees with the oracle");
        c.require(bifre::solvable_single(eq).solvable == criterion_holds,
                  "solvable_single disagrees with the coefficient criterion");
        if (!criterion_holds) continue;
        ++solvable_seen;
        const auto unique = bifre::zero_rhs_solution(eq);
        c.require(oracle.extreme_solutions.size() == 1, "zero-rhs solution not unique");
        c.require(!oracle.extreme_solutions.empty() && oracle.extreme_solutions.front() == unique,
                  "unique solution differs from the closed form");
    }
    c.require(solvable_seen >= 100, "too few solvable zero-rhs instances generated");
}

void criterion_7(Criterion& c) {
    const auto started = Clock::now();
    std::mt19937_64 rng(701);
    int solvable_seen = 0;
    const int total = 5000;
    for (int k = 0; k < total; ++k) {
        const std::size_t m = 1 + k % 5;
        const std::size_t n = 1 + (k / 5) % 4;
        const unsigned d = 1 + (k / 20) % 6;
        const BipolarSystem sys = bifre::preprocess(bifre::random_instance(rng(), m, n, d)).system;

        const auto oracle = bifre::oracle_solve(sys);
        const auto verdict = bifre::system_solvable(sys);
        const auto report = bifre::extremal_system(sys);
        c.require(verdict.solvable == oracle.solvable, "verdict mismatch at instance " + std::to_string(k));
        c.require(report.solvable == oracle.solvable, "report verdict mismatch at instance " + std::to_string(k));
        if (!oracle.solvable) continue;
        ++solvable_seen;
        c.require(fixtures::sorted(report.maximal) == fixtures::sorted(oracle.maximal),
                  "maximal antichain mismatch at instance " + std::to_string(k));
        c.require(fixtures::sorted(report.minimal) == fixtures::sorted(oracle.minimal),
                  "minimal antichain mismatch at instance " + std::to_string(k));
    }
    const std::chrono::duration<double> elapsed = Clock::now() - started;
    c.require(solvable_seen > 200, "too few solvable instances in the stream");
    c.require(elapsed.count() < 60.0,
              "suite took " + std::to_string(elapsed.count()) + " s >= 60 s");
}

void criterion_8(Criterion& c) {
    std::mt19937_64 rng(801);
    for (int k = 0; k < 10000; ++k) {
        const unsigned d = 1 + rng() % 30;
        const UnitRational a = fixtures::random_scalar(rng, d);
        const UnitRational b = fixtures::random_scalar(rng, d);
        const UnitRational z = fixtures::random_scalar(rng, d);
        c.require((bifre::tnorm(a, z) <= b) == (z <= bifre::residuum(a, b)),
                  "adjointness fails for a=" + a.str() + " b=" + b.str() + " z=" + z.str());
        c.require(bifre::negate(bifre::negate(a)) == a, "negation not involutive at " + a.str());
    }
    for (int k = 0; k < 10000; ++k) {
        const std::size_t m = 1 + rng() % 4;
        const unsigned d = 1 + rng() % 8;
        std::vector<UnitRational> ap, am, x, y;
        for (std::size_t j = 0; j < m; ++j) {
            ap.push_back(fixtures::random_scalar(rng, d));
            am.push_back(fixtures::random_scalar(rng, d));
            x.push_back(fixtures::random_scalar(rng, d));
        }
        for (const auto& v : x) y.push_back(bifre::negate(v));
        c.require(bifre::eval_bipolar_row(ap, am, x) == bifre::eval_fre_row(ap, am, x, y),
                  "bipolar row differs from relaxed row with negated unknowns");
    }
}

void criterion_9(Criterion& c) {
    std::mt19937_64 rng(901);
    int pairs_tested = 0, extensions_tested = 0;
    for (int k = 0; k < 400; ++k) {
        const std::size_t m = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % 3;
        const unsigned d = 1 + rng() % 4;
        const BipolarSystem sys = bifre::preprocess(fixtures::random_solvable(rng, m, n, d)).system;
        if (sys.cols == 0) continue;
        if (!bifre::system_solvable(sys).solvable) continue;

        const auto fre = bifre::greatest_fre_candidate(sys);
        bifre::IndexSet tight;
        for (std::size_t j = 0; j < sys.cols; ++j)
            if (fre.x_bar[j].value() + fre.y_bar[j].value() == 1) tight.push_back(j);

        const auto fam = bifre::enumerate_families(sys);
        for (const bifre::IndexSet& jp : fam.s_plus) {
            // Maximal admissible partner for this first component.
            bifre::IndexSet jm;
            for (std::size_t j = 0; j < sys.cols; ++j) {
                const bool in_plus = std::binary_search(jp.begin(), jp.end(), j);
                const bool is_tight = std::binary_search(tight.begin(), tight.end(), j);
                if (!in_plus || is_tight) jm.push_back(j);
            }
            if (!bifre::is_feasible_pair(sys, jp, jm)) {
                c.require(false, "family member lost its certificate");
                continue;
            }
            ++pairs_tested;
            for (std::size_t t : tight) {
                bifre::IndexSet plus = jp;
                if (!std::binary_search(plus.begin(), plus.end(), t)) {
                    plus.insert(std::upper_bound(plus.begin(), plus.end(), t), t);
                }
                bifre::IndexSet minus = jm;
                if (!std::binary_search(minus.begin(), minus.end(), t)) {
                    minus.insert(std::upper_bound(minus.begin(), minus.end(), t), t);
                }
                c.require(bifre::is_feasible_pair(sys, plus, jm),
                          "extension of J+ by a tight column broke feasibility");
                c.require(bifre::is_feasible_pair(sys, jp, minus),
                          "extension of J- by a tight column broke feasibility");
                extensions_tested += 2;
            }
        }
    }
    c.require(pairs_tested > 100, "too few feasible pairs exercised");
    c.require(extensions_tested > 50, "too few tight-column extensions exercised");
}

void criterion_10(Criterion& c) {
    std::mt19937_64 rng(1001);
    int solvable_seen = 0, single_checked = 0;
    for (int k = 0; k < 600; ++k) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t n = 1 + rng() % 4;
        const unsigned d = 1 + rng() % 5;
        const BipolarSystem sys = bifre::preprocess(fixtures::random_solvable(rng, m, n, d)).system;
        if (sys.cols == 0) continue;
        const auto report = bifre::extremal_system(sys);
        if (!report.solvable) continue;  // solvable by construction, but stay defensive
        ++solvable_seen;
        c.require(report.maximal.size() == report.families.s_plus_maximal.size(),
                  "|maximal| != |maximal elements of S+|");
        c.require(report.minimal.size() == report.families.s_minus_maximal.size(),
                  "|minimal| != |maximal elements of S-|");

        if (sys.rows == 1) {
            ++single_checked;
            const auto single = bifre::analyze_single(sys);
            c.require(fixtures::sorted(report.maximal) == fixtures::sorted(single.maximal),
                      "single/system maximal antichains differ");
            c.require(fixtures::sorted(report.minimal) == fixtures::sorted(single.minimal),
                      "single/system minimal antichains differ");
        }
    }
    c.require(solvable_seen > 300, "too few solvable instances");
    c.require(single_checked > 30, "too few single-row instances");
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<void(Criterion&)> body;
    };
    const std::vector<Entry> entries = {
        {1, "1x2 regression: relaxation greatest, bipolar greatest/least, < 1 ms", criterion_1},
        {2, "1x2 variant: greatest plus exactly two minimal solutions", criterion_2},
        {3, "non-solution check reports exact row value 8/25", criterion_3},
        {4, "pinned conflict: unsolvable with row-forced witness", criterion_4},
        {5, "3x3 regression: relaxation, families, extremal solutions, < 10 ms", criterion_5},
        {6, "zero right-hand side: criterion and unique solution on 1000 instances", criterion_6},
        {7, "oracle equivalence on 5000 seeded instances, < 60 s", criterion_7},
        {8, "algebraic laws on 10000 random samples", criterion_8},
        {9, "feasible pairs extend along tight columns", criterion_9},
        {10, "count identities and single/system agreement", criterion_10},
    };

    int failed = 0;
    for (const Entry& entry : entries) {
        Criterion c;
        entry.body(c);
        if (c.passed) {
            std::printf("[PASS] criterion %2d: %s\n", entry.id, entry.title);
        } else {
            ++failed;
            std::printf("[FAIL] criterion %2d: %s\n", entry.id, entry.title);
            for (const std::string& f : c.failures) std::printf("       - %s\n", f.c_str());
        }
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
