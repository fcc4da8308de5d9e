#pragma once

#include <cstddef>
#include <string>

#include "bifre/unit_rational.hpp"

namespace bifre {

/// Why an instance has no solution.
enum class FailureKind {
    fre_unsolvable,    ///< the corresponding relaxation itself has no solution
    negation_gap,      ///< some column has x̄_j + ȳ_j < 1
    no_feasible_pair,  ///< no pair of index sets covers every row
};

/// Machine-checkable unsolvability witness. Indices are 0-based; the
/// describe() text uses 1-based positions.
struct UnsolvableWitness {
    FailureKind kind = FailureKind::fre_unsolvable;
    std::size_t column = 0;  // negation_gap or forced conflict column
    Rational gap_sum{};      // x̄_column + ȳ_column

    // Set when two rows pin the same non-tight column to both sides of a
    // would-be feasible pair.
    bool forced_conflict = false;
    std::size_t row_plus = 0;
    std::size_t row_minus = 0;

    std::string describe() const {
        switch (kind) {
        case FailureKind::fre_unsolvable:
            return "the corresponding relaxed system has no solution";
        case FailureKind::negation_gap:
            return "column " + std::to_string(column + 1) + ": x_bar + y_bar = " +
                   fraction_string(gap_sum) + " < 1";
        case FailureKind::no_feasible_pair:
            if (forced_conflict)
                return "row-forced conflict at column " + std::to_string(column + 1) +
                       ": row " + std::to_string(row_plus + 1) + " forces column " +
                       std::to_string(column + 1) + " into J+, row " +
                       std::to_string(row_minus + 1) + " forces it into J-, but x_bar + y_bar = " +
                       fraction_string(gap_sum) + " != 1";
            return "no feasible pair of index sets covers every row";
        }
        return "unsolvable";
    }
};

} // namespace bifre
