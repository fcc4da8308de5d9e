#pragma once

#include <span>
#include <vector>

#include "bifre/algebra.hpp"
#include "bifre/system.hpp"

namespace bifre {

/// Componentwise-greatest candidate (x̄, ȳ) for the corresponding
/// relaxation of an instance, plus whether it actually solves it.
///
/// Whether or not fre_solvable holds, the candidate is safe:
/// a+_ij * x̄_j <= b_i and a-_ij * ȳ_j <= b_i for every i, j. When
/// fre_solvable holds, every solution (x, y) of the relaxation satisfies
/// x <= x̄ and y <= ȳ componentwise.
struct FreGreatestSolution {
    std::vector<UnitRational> x_bar;
    std::vector<UnitRational> y_bar;
    bool fre_solvable = false;
};

/// True iff every row of the corresponding relaxation evaluates exactly
/// to b_i under (x, y).
inline bool is_fre_solution(const BipolarSystem& system,
                            std::span<const UnitRational> x,
                            std::span<const UnitRational> y) {
    if (x.size() != system.cols || y.size() != system.cols)
        throw DimensionError("is_fre_solution: vectors must have one entry per column");
    for (std::size_t i = 0; i < system.rows; ++i) {
        if (eval_fre_row(system.plus_row(i), system.minus_row(i), x, y) != system.b[i])
            return false;
    }
    return true;
}

/// Residual construction of the greatest candidate:
///   x̄_j = min_i residuum(a+_ij, b_i),   ȳ_j = min_i residuum(a-_ij, b_i).
/// Solvability of the relaxation is decided by substituting the candidate
/// back into every row; exact arithmetic makes this an O(n*m) check.
inline FreGreatestSolution greatest_fre_candidate(const BipolarSystem& system) {
    FreGreatestSolution out;
    out.x_bar.assign(system.cols, UnitRational::one());
    out.y_bar.assign(system.cols, UnitRational::one());
    for (std::size_t i = 0; i < system.rows; ++i) {
        for (std::size_t j = 0; j < system.cols; ++j) {
            out.x_bar[j] = std::min(out.x_bar[j], residuum(system.plus(i, j), system.b[i]));
            out.y_bar[j] = std::min(out.y_bar[j], residuum(system.minus(i, j), system.b[i]));
        }
    }
    out.fre_solvable = is_fre_solution(system, out.x_bar, out.y_bar);
    return out;
}

} // namespace bifre
