#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bifre/fre.hpp"
#include "bifre/system.hpp"
#include "bifre/verdict.hpp"

namespace bifre {

/// Sorted 0-based column indices.
using IndexSet = std::vector<std::size_t>;

/// A pair of index sets (J+, J-) certifying solvability: every row
/// attains b_i through some x̄_j with j in J+ or some ȳ_j with j in J-,
/// and x̄_j + ȳ_j = 1 on the intersection.
struct FeasiblePair {
    IndexSet j_plus;
    IndexSet j_minus;
};

/// The families S+ and S- of first/second components of feasible pairs,
/// with their maximal elements under inclusion. Neither family is closed
/// upward or downward in general, so the maximal elements are extracted
/// by explicit inclusion checks. Ordering: (cardinality, lexicographic).
struct FeasibleFamilies {
    std::vector<IndexSet> s_plus;
    std::vector<IndexSet> s_minus;
    std::vector<IndexSet> s_plus_maximal;
    std::vector<IndexSet> s_minus_maximal;
};

/// Caps on the exhaustive 2^m sweeps. Exceeding a cap raises
/// CapExceededError rather than truncating.
struct SolverLimits {
    std::size_t solvable_cap = 20;  // feasible-pair existence search
    std::size_t family_cap = 16;    // full S+/S- enumeration
};

struct SystemSolvability {
    bool solvable = false;
    std::optional<FeasiblePair> certificate;
    std::optional<UnsolvableWitness> witness;
};

/// Solvability verdict, extremal solutions and the families generating
/// them. Maximal/minimal solution lists follow the order of the family
/// antichains they are assembled from.
struct ExtremalReport {
    bool solvable = false;
    std::optional<CandidateSolution> greatest;
    std::optional<CandidateSolution> least;
    std::vector<CandidateSolution> maximal;
    std::vector<CandidateSolution> minimal;
    FeasibleFamilies families;
    std::optional<UnsolvableWitness> witness;
};

namespace detail {

// Per-row hit masks: bit j of plus_hits[i] is set when a+_ij * x̄_j = b_i,
// bit j of minus_hits[i] when a-_ij * ȳ_j = b_i. tight marks columns with
// x̄_j + ȳ_j = 1.
struct CoverTables {
    std::size_t m = 0;
    std::vector<std::uint64_t> plus_hits;
    std::vector<std::uint64_t> minus_hits;
    std::uint64_t tight = 0;
    std::uint64_t all = 0;
};

inline CoverTables build_cover_tables(const BipolarSystem& sys, const FreGreatestSolution& fre) {
    CoverTables t;
    t.m = sys.cols;
    t.all = sys.cols == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << sys.cols) - 1);
    t.plus_hits.assign(sys.rows, 0);
    t.minus_hits.assign(sys.rows, 0);
    for (std::size_t j = 0; j < sys.cols; ++j) {
        if (fre.x_bar[j].value() + fre.y_bar[j].value() == 1) t.tight |= std::uint64_t{1} << j;
        for (std::size_t i = 0; i < sys.rows; ++i) {
            if (tnorm(sys.plus(i, j), fre.x_bar[j]) == sys.b[i])
                t.plus_hits[i] |= std::uint64_t{1} << j;
            if (tnorm(sys.minus(i, j), fre.y_bar[j]) == sys.b[i])
                t.minus_hits[i] |= std::uint64_t{1} << j;
        }
    }
    return t;
}

// The partner may contain every column outside J and the tight columns
// inside it; coverage is monotone in the partner, so testing against this
// maximal partner decides family membership exactly.
inline std::uint64_t max_partner(const CoverTables& t, std::uint64_t j) {
    return (~j & t.all) | (j & t.tight);
}

inline bool masks_cover(const CoverTables& t, std::uint64_t jp, std::uint64_t jm) {
    for (std::size_t i = 0; i < t.plus_hits.size(); ++i)
        if (!(jp & t.plus_hits[i]) && !(jm & t.minus_hits[i])) return false;
    return true;
}

inline IndexSet mask_to_set(std::uint64_t mask) {
    IndexSet s;
    for (std::size_t j = 0; mask; ++j, mask >>= 1)
        if (mask & 1) s.push_back(j);
    return s;
}

inline bool set_order(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Maximal elements under inclusion: sweep in decreasing cardinality and
// keep a mask only if no kept mask is a strict superset.
inline std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::uint64_t> kept;
    for (std::uint64_t c : masks) {
        bool dominated = false;
        for (std::uint64_t k : kept)
            if ((c & k) == c) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(c);
    }
    return kept;
}

inline std::vector<IndexSet> to_sorted_sets(const std::vector<std::uint64_t>& masks) {
    std::vector<IndexSet> sets;
    sets.reserve(masks.size());
    for (std::uint64_t m : masks) sets.push_back(mask_to_set(m));
    std::sort(sets.begin(), sets.end(), set_order);
    return sets;
}

inline bool all_rhs_zero(const BipolarSystem& sys) {
    for (const UnitRational& v : sys.b)
        if (!v.is_zero()) return false;
    return true;
}

inline bool solves(const BipolarSystem& sys, const CandidateSolution& x) {
    for (std::size_t i = 0; i < sys.rows; ++i)
        if (eval_bipolar_row(sys.plus_row(i), sys.minus_row(i), x) != sys.b[i]) return false;
    return true;
}

inline void check_enumeration_cap(const BipolarSystem& sys, std::size_t cap) {
    if (sys.cols > cap || sys.cols > 63)
        throw CapExceededError("instance too large for exhaustive enumeration: " +
                               std::to_string(sys.cols) + " columns exceeds cap " +
                               std::to_string(std::min<std::size_t>(cap, 63)));
}

// Columns pinned into J+ (J-) by a row whose only hit is that column on
// that side. A pinned non-tight column appearing on both sides rules out
// every pair.
inline std::optional<UnsolvableWitness> forced_conflict(const BipolarSystem& sys,
                                                        const FreGreatestSolution& fre,
                                                        const CoverTables& t) {
    std::vector<std::optional<std::size_t>> plus_row(sys.cols), minus_row(sys.cols);
    for (std::size_t i = 0; i < sys.rows; ++i) {
        if (t.minus_hits[i] == 0 && std::popcount(t.plus_hits[i]) == 1) {
            const std::size_t j = static_cast<std::size_t>(std::countr_zero(t.plus_hits[i]));
            if (!plus_row[j]) plus_row[j] = i;
        }
        if (t.plus_hits[i] == 0 && std::popcount(t.minus_hits[i]) == 1) {
            const std::size_t j = static_cast<std::size_t>(std::countr_zero(t.minus_hits[i]));
            if (!minus_row[j]) minus_row[j] = i;
        }
    }
    for (std::size_t j = 0; j < sys.cols; ++j) {
        if (plus_row[j] && minus_row[j] && !(t.tight >> j & 1)) {
            return UnsolvableWitness{.kind = FailureKind::no_feasible_pair,
                                     .column = j,
                                     .gap_sum = fre.x_bar[j].value() + fre.y_bar[j].value(),
                                     .forced_conflict = true,
                                     .row_plus = *plus_row[j],
                                     .row_minus = *minus_row[j]};
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Checks the two feasibility conditions for an explicit pair of index
/// sets. Unlike the enumeration entry points this works for any number of
/// columns. Requires a solvable corresponding relaxation.
inline bool is_feasible_pair(const BipolarSystem& sys, const IndexSet& j_plus,
                             const IndexSet& j_minus) {
    for (std::size_t j : j_plus)
        if (j >= sys.cols) throw DimensionError("J+ index " + std::to_string(j + 1) + " out of range");
    for (std::size_t j : j_minus)
        if (j >= sys.cols) throw DimensionError("J- index " + std::to_string(j + 1) + " out of range");

    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    if (!fre.fre_solvable)
        throw ContractViolation("is_feasible_pair requires a solvable corresponding relaxation");
    if (sys.cols == 0) return true;  // all b_i are zero here; rows hold vacuously

    for (std::size_t j : j_plus) {
        if (std::find(j_minus.begin(), j_minus.end(), j) != j_minus.end() &&
            fre.x_bar[j].value() + fre.y_bar[j].value() != 1)
            return false;
    }
    for (std::size_t i = 0; i < sys.rows; ++i) {
        bool covered = false;
        for (std::size_t j : j_plus)
            if (tnorm(sys.plus(i, j), fre.x_bar[j]) == sys.b[i]) {
                covered = true;
                break;
            }
        for (std::size_t k = 0; !covered && k < j_minus.size(); ++k)
            if (tnorm(sys.minus(i, j_minus[k]), fre.y_bar[j_minus[k]]) == sys.b[i]) covered = true;
        if (!covered) return false;
    }
    return true;
}

/// Decides solvability: the corresponding relaxation must be solvable,
/// every column must satisfy 1 <= x̄_j + ȳ_j, and a feasible pair must
/// exist. Returns a certifying pair on success and the first failed
/// condition on failure. The pair search sweeps subsets J+ against their
/// maximal admissible partner, so it is capped by limits.solvable_cap.
inline SystemSolvability system_solvable(const BipolarSystem& sys, const SolverLimits& limits = {}) {
    if (sys.cols == 0) {
        if (detail::all_rhs_zero(sys)) return {true, FeasiblePair{}, std::nullopt};
        return {false, std::nullopt, UnsolvableWitness{.kind = FailureKind::fre_unsolvable}};
    }

    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    if (!fre.fre_solvable)
        return {false, std::nullopt, UnsolvableWitness{.kind = FailureKind::fre_unsolvable}};
    for (std::size_t j = 0; j < sys.cols; ++j) {
        const Rational sum = fre.x_bar[j].value() + fre.y_bar[j].value();
        if (sum < 1)
            return {false, std::nullopt,
                    UnsolvableWitness{.kind = FailureKind::negation_gap, .column = j, .gap_sum = sum}};
    }

    const detail::CoverTables tables = detail::build_cover_tables(sys, fre);
    if (auto conflict = detail::forced_conflict(sys, fre, tables))
        return {false, std::nullopt, conflict};

    detail::check_enumeration_cap(sys, limits.solvable_cap);
    const std::uint64_t end = std::uint64_t{1} << sys.cols;
    for (std::uint64_t jp = 0; jp < end; ++jp) {
        const std::uint64_t jm = detail::max_partner(tables, jp);
        if (detail::masks_cover(tables, jp, jm))
            return {true, FeasiblePair{detail::mask_to_set(jp), detail::mask_to_set(jm)}, std::nullopt};
    }
    return {false, std::nullopt, UnsolvableWitness{.kind = FailureKind::no_feasible_pair}};
}

/// Assembles the solution a feasible pair certifies: x_j = x̄_j for
/// j in J+ and x_j = 1 - ȳ_j otherwise.
inline CandidateSolution pair_to_solution(const BipolarSystem& sys, const FeasiblePair& pair) {
    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    if (!fre.fre_solvable)
        throw ContractViolation("pair_to_solution requires a solvable corresponding relaxation");
    for (std::size_t j = 0; j < sys.cols; ++j)
        if (fre.x_bar[j].value() + fre.y_bar[j].value() < 1)
            throw ContractViolation("pair_to_solution requires 1 <= x_bar + y_bar on every column");
    if (!is_feasible_pair(sys, pair.j_plus, pair.j_minus))
        throw ContractViolation("pair_to_solution requires a feasible pair");

    CandidateSolution x;
    x.reserve(sys.cols);
    for (std::size_t j = 0; j < sys.cols; ++j) {
        const bool in_plus = std::find(pair.j_plus.begin(), pair.j_plus.end(), j) != pair.j_plus.end();
        x.push_back(in_plus ? fre.x_bar[j] : negate(fre.y_bar[j]));
    }
    return x;
}

/// Enumerates S+ and S- over all 2^m subsets. Membership of J in S+ is
/// decided against the maximal admissible partner, and dually for S-.
/// Requires a solvable instance; capped by limits.family_cap.
inline FeasibleFamilies enumerate_families(const BipolarSystem& sys, const SolverLimits& limits = {}) {
    FeasibleFamilies fam;
    if (sys.cols == 0) {
        if (!detail::all_rhs_zero(sys))
            throw ContractViolation("enumerate_families requires a solvable instance");
        fam.s_plus = fam.s_minus = {IndexSet{}};
        fam.s_plus_maximal = fam.s_minus_maximal = {IndexSet{}};
        return fam;
    }

    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    if (!fre.fre_solvable)
        throw ContractViolation("enumerate_families requires a solvable instance");
    for (std::size_t j = 0; j < sys.cols; ++j)
        if (fre.x_bar[j].value() + fre.y_bar[j].value() < 1)
            throw ContractViolation("enumerate_families requires a solvable instance");

    detail::check_enumeration_cap(sys, limits.family_cap);
    const detail::CoverTables tables = detail::build_cover_tables(sys, fre);
    std::vector<std::uint64_t> plus_masks, minus_masks;
    const std::uint64_t end = std::uint64_t{1} << sys.cols;
    for (std::uint64_t j = 0; j < end; ++j) {
        const std::uint64_t partner = detail::max_partner(tables, j);
        if (detail::masks_cover(tables, j, partner)) plus_masks.push_back(j);
        if (detail::masks_cover(tables, partner, j)) minus_masks.push_back(j);
    }
    if (plus_masks.empty())
        throw ContractViolation("enumerate_families requires a solvable instance");

    fam.s_plus = detail::to_sorted_sets(plus_masks);
    fam.s_minus = detail::to_sorted_sets(minus_masks);
    fam.s_plus_maximal = detail::to_sorted_sets(detail::maximal_masks(plus_masks));
    fam.s_minus_maximal = detail::to_sorted_sets(detail::maximal_masks(minus_masks));
    return fam;
}

/// Full analysis: solvability witness, or the extremal antichains. Each
/// maximal element of S+ assembles one maximal solution (J+ slots take
/// x̄_j, the rest 1 - ȳ_j); the greatest solution exists exactly when S+
/// has a single maximal element. Dually, each maximal element of S-
/// assembles one minimal solution (J- slots take 1 - ȳ_j, the rest x̄_j).
inline ExtremalReport extremal_system(const BipolarSystem& sys, const SolverLimits& limits = {}) {
    ExtremalReport report;

    if (sys.cols == 0) {
        if (!detail::all_rhs_zero(sys)) {
            report.witness = UnsolvableWitness{.kind = FailureKind::fre_unsolvable};
            return report;
        }
        report.solvable = true;
        report.greatest = CandidateSolution{};
        report.least = CandidateSolution{};
        report.maximal = {CandidateSolution{}};
        report.minimal = {CandidateSolution{}};
        report.families.s_plus = report.families.s_minus = {IndexSet{}};
        report.families.s_plus_maximal = report.families.s_minus_maximal = {IndexSet{}};
        return report;
    }

    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    if (!fre.fre_solvable) {
        report.witness = UnsolvableWitness{.kind = FailureKind::fre_unsolvable};
        return report;
    }
    for (std::size_t j = 0; j < sys.cols; ++j) {
        const Rational sum = fre.x_bar[j].value() + fre.y_bar[j].value();
        if (sum < 1) {
            report.witness =
                UnsolvableWitness{.kind = FailureKind::negation_gap, .column = j, .gap_sum = sum};
            return report;
        }
    }

    const detail::CoverTables tables = detail::build_cover_tables(sys, fre);
    if (auto conflict = detail::forced_conflict(sys, fre, tables)) {
        report.witness = conflict;
        return report;
    }

    detail::check_enumeration_cap(sys, limits.family_cap);
    std::vector<std::uint64_t> plus_masks, minus_masks;
    const std::uint64_t end = std::uint64_t{1} << sys.cols;
    for (std::uint64_t j = 0; j < end; ++j) {
        const std::uint64_t partner = detail::max_partner(tables, j);
        if (detail::masks_cover(tables, j, partner)) plus_masks.push_back(j);
        if (detail::masks_cover(tables, partner, j)) minus_masks.push_back(j);
    }
    if (plus_masks.empty()) {
        report.witness = UnsolvableWitness{.kind = FailureKind::no_feasible_pair};
        return report;
    }

    report.solvable = true;
    report.families.s_plus = detail::to_sorted_sets(plus_masks);
    report.families.s_minus = detail::to_sorted_sets(minus_masks);
    report.families.s_plus_maximal = detail::to_sorted_sets(detail::maximal_masks(plus_masks));
    report.families.s_minus_maximal = detail::to_sorted_sets(detail::maximal_masks(minus_masks));

    const auto assemble = [&](const IndexSet& members, bool plus_side) {
        CandidateSolution x;
        x.reserve(sys.cols);
        for (std::size_t j = 0; j < sys.cols; ++j) {
            const bool in_set = std::binary_search(members.begin(), members.end(), j);
            const bool take_upper = plus_side ? in_set : !in_set;
            x.push_back(take_upper ? fre.x_bar[j] : negate(fre.y_bar[j]));
        }
        return x;
    };
    for (const IndexSet& jp : report.families.s_plus_maximal)
        report.maximal.push_back(assemble(jp, true));
    for (const IndexSet& jm : report.families.s_minus_maximal)
        report.minimal.push_back(assemble(jm, false));
    if (report.maximal.size() == 1) report.greatest = report.maximal.front();
    if (report.minimal.size() == 1) report.least = report.minimal.front();
    return report;
}

/// Raises a solution into extreme form: keeps x_j where it already equals
/// 1 - ȳ_j and lifts every other slot to x̄_j. The result solves the
/// system and dominates the input.
inline CandidateSolution push_up(const BipolarSystem& sys, const CandidateSolution& x) {
    if (x.size() != sys.cols) throw DimensionError("push_up: solution arity mismatch");
    if (!detail::solves(sys, x)) throw ContractViolation("push_up requires a solution");
    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    CandidateSolution out;
    out.reserve(sys.cols);
    for (std::size_t j = 0; j < sys.cols; ++j)
        out.push_back(x[j] == negate(fre.y_bar[j]) ? x[j] : fre.x_bar[j]);
    return out;
}

/// Lowers a solution into extreme form: keeps x_j where it already equals
/// x̄_j and drops every other slot to 1 - ȳ_j. The result solves the
/// system and is dominated by the input.
inline CandidateSolution push_down(const BipolarSystem& sys, const CandidateSolution& x) {
    if (x.size() != sys.cols) throw DimensionError("push_down: solution arity mismatch");
    if (!detail::solves(sys, x)) throw ContractViolation("push_down requires a solution");
    const FreGreatestSolution fre = greatest_fre_candidate(sys);
    CandidateSolution out;
    out.reserve(sys.cols);
    for (std::size_t j = 0; j < sys.cols; ++j)
        out.push_back(x[j] == fre.x_bar[j] ? x[j] : negate(fre.y_bar[j]));
    return out;
}

} // namespace bifre
