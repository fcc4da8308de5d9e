#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bifre/fre.hpp"
#include "bifre/system.hpp"
#include "bifre/verdict.hpp"

namespace bifre {

/// Complete analysis of a single bipolar equation (one row).
///
/// k_plus lists the columns with a+_k * x̄_k = b and k_minus those with
/// a-_k * ȳ_k = b. When solvable, maximal and minimal are nonempty
/// antichains; greatest is present exactly when maximal is a singleton,
/// and dually for least/minimal.
struct SingleAnalysis {
    bool solvable = false;
    std::vector<std::size_t> k_plus;
    std::vector<std::size_t> k_minus;
    std::optional<CandidateSolution> greatest;
    std::optional<CandidateSolution> least;
    std::vector<CandidateSolution> maximal;  // sorted lexicographically
    std::vector<CandidateSolution> minimal;
    std::optional<UnsolvableWitness> witness;
};

struct SingleSolvability {
    bool solvable = false;
    std::optional<UnsolvableWitness> witness;
};

namespace detail {

inline void require_single_row(const BipolarSystem& eq) {
    if (eq.rows != 1)
        throw ContractViolation("single-equation analysis requires exactly one row");
}

} // namespace detail

/// Solvability of one equation: the corresponding relaxation must be
/// solvable and every column must satisfy 1 <= x̄_j + ȳ_j. On failure the
/// witness carries the first violating column, or marks the relaxation
/// itself unsolvable.
inline SingleSolvability solvable_single(const BipolarSystem& eq) {
    detail::require_single_row(eq);
    const FreGreatestSolution fre = greatest_fre_candidate(eq);
    if (!fre.fre_solvable)
        return {false, UnsolvableWitness{.kind = FailureKind::fre_unsolvable}};
    for (std::size_t j = 0; j < eq.cols; ++j) {
        const Rational sum = fre.x_bar[j].value() + fre.y_bar[j].value();
        if (sum < 1)
            return {false, UnsolvableWitness{.kind = FailureKind::negation_gap,
                                             .column = j,
                                             .gap_sum = sum}};
    }
    return {true, std::nullopt};
}

/// The unique solution of a solvable equation with b = 0: x_j = 1 where
/// a+_j = 0 and x_j = 0 where a-_j = 0. Exactly one case applies per
/// column once fully-null columns are preprocessed away.
inline CandidateSolution zero_rhs_solution(const BipolarSystem& eq) {
    detail::require_single_row(eq);
    if (!eq.b[0].is_zero())
        throw ContractViolation("zero_rhs_solution requires b = 0");
    if (!solvable_single(eq).solvable)
        throw ContractViolation("zero_rhs_solution requires a solvable equation");
    CandidateSolution x;
    x.reserve(eq.cols);
    for (std::size_t j = 0; j < eq.cols; ++j)
        x.push_back(eq.plus(0, j).is_zero() ? UnitRational::one() : UnitRational::zero());
    return x;
}

/// Extremal solutions of a solvable equation with b != 0, in closed form.
/// If K+ is nonempty the greatest solution is x̄ itself; otherwise every
/// k in K- yields one maximal solution by lowering slot k of x̄ to
/// 1 - ȳ_k, and there are exactly |K-| of them. Dually for least/minimal
/// with the roles of K-, ȳ swapped.
inline SingleAnalysis extremal_single(const BipolarSystem& eq) {
    detail::require_single_row(eq);
    if (eq.b[0].is_zero())
        throw ContractViolation("extremal_single requires b != 0");
    const SingleSolvability check = solvable_single(eq);
    if (!check.solvable)
        throw ContractViolation("extremal_single requires a solvable equation");

    const FreGreatestSolution fre = greatest_fre_candidate(eq);
    const UnitRational& rhs = eq.b[0];

    SingleAnalysis out;
    out.solvable = true;
    for (std::size_t j = 0; j < eq.cols; ++j) {
        if (tnorm(eq.plus(0, j), fre.x_bar[j]) == rhs) out.k_plus.push_back(j);
        if (tnorm(eq.minus(0, j), fre.y_bar[j]) == rhs) out.k_minus.push_back(j);
    }

    CandidateSolution upper = fre.x_bar;
    CandidateSolution lower;
    lower.reserve(eq.cols);
    for (const UnitRational& y : fre.y_bar) lower.push_back(negate(y));

    if (!out.k_plus.empty()) {
        out.greatest = upper;
        out.maximal = {upper};
    } else {
        for (std::size_t k : out.k_minus) {
            CandidateSolution m = upper;
            m[k] = lower[k];
            out.maximal.push_back(std::move(m));
        }
        std::sort(out.maximal.begin(), out.maximal.end());
    }

    if (!out.k_minus.empty()) {
        out.least = lower;
        out.minimal = {lower};
    } else {
        for (std::size_t k : out.k_plus) {
            CandidateSolution m = lower;
            m[k] = upper[k];
            out.minimal.push_back(std::move(m));
        }
        std::sort(out.minimal.begin(), out.minimal.end());
    }
    return out;
}

/// Full analysis of one equation: routes b = 0 to the unique-solution
/// construction, b != 0 to the extremal closed forms, and reports an
/// unsolvability witness otherwise.
inline SingleAnalysis analyze_single(const BipolarSystem& eq) {
    detail::require_single_row(eq);
    const SingleSolvability check = solvable_single(eq);
    if (!check.solvable) {
        SingleAnalysis out;
        out.witness = check.witness;
        return out;
    }
    if (!eq.b[0].is_zero()) return extremal_single(eq);

    // b = 0: a unique solution, reported as greatest = least.
    SingleAnalysis out;
    out.solvable = true;
    const FreGreatestSolution fre = greatest_fre_candidate(eq);
    for (std::size_t j = 0; j < eq.cols; ++j) {
        if (tnorm(eq.plus(0, j), fre.x_bar[j]).is_zero()) out.k_plus.push_back(j);
        if (tnorm(eq.minus(0, j), fre.y_bar[j]).is_zero()) out.k_minus.push_back(j);
    }
    CandidateSolution x = zero_rhs_solution(eq);
    out.greatest = x;
    out.least = x;
    out.maximal = {x};
    out.minimal = {std::move(x)};
    return out;
}

} // namespace bifre
