#pragma once

#include <span>

#include "bifre/errors.hpp"
#include "bifre/unit_rational.hpp"

namespace bifre {

/// Product t-norm: a * b.
inline UnitRational tnorm(const UnitRational& a, const UnitRational& b) {
    return UnitRational(a.value() * b.value());
}

/// Residuum of the product t-norm: the greatest z in [0, 1] with
/// tnorm(a, z) <= b. Equals 1 when a <= b (in particular for a = 0),
/// and b/a otherwise.
inline UnitRational residuum(const UnitRational& a, const UnitRational& b) {
    if (a.value() <= b.value()) return UnitRational::one();
    return UnitRational(b.value() / a.value());
}

/// Standard negation: 1 - x.
inline UnitRational negate(const UnitRational& x) {
    return UnitRational(1 - x.value());
}

/// Left-hand side of one bipolar row,
///   max_j (a+_j * x_j) v (a-_j * (1 - x_j)).
/// An empty row evaluates to 0.
inline UnitRational eval_bipolar_row(std::span<const UnitRational> a_plus,
                                     std::span<const UnitRational> a_minus,
                                     std::span<const UnitRational> x) {
    if (a_plus.size() != a_minus.size() || a_plus.size() != x.size())
        throw DimensionError("bipolar row: mismatched vector lengths");
    UnitRational best;
    for (std::size_t j = 0; j < x.size(); ++j) {
        best = std::max(best, tnorm(a_plus[j], x[j]));
        best = std::max(best, tnorm(a_minus[j], negate(x[j])));
    }
    return best;
}

/// Left-hand side of one row of the corresponding relaxation, where each
/// negated unknown is replaced by an independent unknown y_j:
///   max_j (a+_j * x_j) v (a-_j * y_j).
inline UnitRational eval_fre_row(std::span<const UnitRational> a_plus,
                                 std::span<const UnitRational> a_minus,
                                 std::span<const UnitRational> x,
                                 std::span<const UnitRational> y) {
    if (a_plus.size() != a_minus.size() || a_plus.size() != x.size() || x.size() != y.size())
        throw DimensionError("relaxed row: mismatched vector lengths");
    UnitRational best;
    for (std::size_t j = 0; j < x.size(); ++j) {
        best = std::max(best, tnorm(a_plus[j], x[j]));
        best = std::max(best, tnorm(a_minus[j], y[j]));
    }
    return best;
}

} // namespace bifre
