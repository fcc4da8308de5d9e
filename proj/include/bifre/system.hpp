#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bifre/errors.hpp"
#include "bifre/unit_rational.hpp"

namespace bifre {

/// One candidate assignment for the unknowns x_1..x_m.
using CandidateSolution = std::vector<UnitRational>;

/// A bipolar max-product instance over exact unit rationals. Row i reads
///   max_j (a+_ij * x_j) v (a-_ij * (1 - x_j)) = b_i.
/// A single equation is the rows = 1 case.
struct BipolarSystem {
    std::size_t rows = 0;  // equations, n
    std::size_t cols = 0;  // unknowns, m
    std::vector<UnitRational> a_plus;   // row-major, rows * cols
    std::vector<UnitRational> a_minus;  // row-major, rows * cols
    std::vector<UnitRational> b;        // rows

    const UnitRational& plus(std::size_t i, std::size_t j) const {
        return a_plus[i * cols + j];
    }
    const UnitRational& minus(std::size_t i, std::size_t j) const {
        return a_minus[i * cols + j];
    }
    std::span<const UnitRational> plus_row(std::size_t i) const {
        return {a_plus.data() + i * cols, cols};
    }
    std::span<const UnitRational> minus_row(std::size_t i) const {
        return {a_minus.data() + i * cols, cols};
    }

    /// Builds an instance from per-row scalar strings ("0.8" or "4/5").
    static BipolarSystem from_strings(const std::vector<std::vector<std::string>>& plus_rows,
                                      const std::vector<std::vector<std::string>>& minus_rows,
                                      const std::vector<std::string>& rhs) {
        BipolarSystem sys;
        sys.rows = plus_rows.size();
        sys.cols = plus_rows.empty() ? 0 : plus_rows.front().size();
        if (minus_rows.size() != sys.rows || rhs.size() != sys.rows)
            throw DimensionError("from_strings: row counts differ");
        sys.a_plus.reserve(sys.rows * sys.cols);
        sys.a_minus.reserve(sys.rows * sys.cols);
        for (std::size_t i = 0; i < sys.rows; ++i) {
            if (plus_rows[i].size() != sys.cols || minus_rows[i].size() != sys.cols)
                throw DimensionError("from_strings: ragged matrix row " + std::to_string(i + 1));
            for (const auto& s : plus_rows[i]) sys.a_plus.push_back(parse_unit_scalar(s));
            for (const auto& s : minus_rows[i]) sys.a_minus.push_back(parse_unit_scalar(s));
        }
        for (const auto& s : rhs) sys.b.push_back(parse_unit_scalar(s));
        return sys;
    }
};

/// Checks dimensional consistency and nonemptiness of a parsed instance;
/// returns its argument unchanged. Scalar range is already enforced by
/// the UnitRational invariant.
inline const BipolarSystem& validate(const BipolarSystem& system) {
    if (system.rows == 0) throw DimensionError("instance has no equations");
    if (system.cols == 0) throw DimensionError("instance has no unknowns");
    if (system.a_plus.size() != system.rows * system.cols)
        throw DimensionError("a_plus has " + std::to_string(system.a_plus.size()) +
                             " entries, expected " + std::to_string(system.rows * system.cols));
    if (system.a_minus.size() != system.rows * system.cols)
        throw DimensionError("a_minus has " + std::to_string(system.a_minus.size()) +
                             " entries, expected " + std::to_string(system.rows * system.cols));
    if (system.b.size() != system.rows)
        throw DimensionError("b has " + std::to_string(system.b.size()) +
                             " entries, expected " + std::to_string(system.rows));
    return system;
}

/// Which columns preprocessing removed and how retained columns map back
/// to original positions (0-based).
struct PreprocessReport {
    std::size_t original_cols = 0;
    std::vector<std::size_t> dropped_columns;
    std::vector<std::size_t> column_map;  // retained index -> original index

    bool empty() const { return dropped_columns.empty(); }
};

struct PreprocessResult {
    BipolarSystem system;
    PreprocessReport report;
};

/// Removes every column whose coefficients are zero in all rows; such an
/// unknown never influences any row and may take any value in [0, 1].
/// Dropped slots are reported back so solutions can be re-expanded with
/// explicit free markers. Idempotent. May return an instance with zero
/// columns; rows with b_i > 0 are then unsolvable downstream.
inline PreprocessResult preprocess(const BipolarSystem& system) {
    PreprocessResult out;
    out.report.original_cols = system.cols;
    for (std::size_t j = 0; j < system.cols; ++j) {
        bool null_column = true;
        for (std::size_t i = 0; i < system.rows && null_column; ++i)
            null_column = system.plus(i, j).is_zero() && system.minus(i, j).is_zero();
        if (null_column)
            out.report.dropped_columns.push_back(j);
        else
            out.report.column_map.push_back(j);
    }

    if (out.report.dropped_columns.empty()) {
        out.system = system;
        return out;
    }

    BipolarSystem& kept = out.system;
    kept.rows = system.rows;
    kept.cols = out.report.column_map.size();
    kept.b = system.b;
    kept.a_plus.reserve(kept.rows * kept.cols);
    kept.a_minus.reserve(kept.rows * kept.cols);
    for (std::size_t i = 0; i < system.rows; ++i) {
        for (std::size_t j : out.report.column_map) {
            kept.a_plus.push_back(system.plus(i, j));
            kept.a_minus.push_back(system.minus(i, j));
        }
    }
    return out;
}

/// Re-expands a solution over retained columns to the original arity;
/// dropped (free) slots come back as nullopt.
inline std::vector<std::optional<UnitRational>> expand_with_free(const CandidateSolution& x,
                                                                 const PreprocessReport& report) {
    if (x.size() != report.column_map.size())
        throw DimensionError("solution arity does not match the preprocess report");
    std::vector<std::optional<UnitRational>> full(report.original_cols);
    for (std::size_t k = 0; k < x.size(); ++k) full[report.column_map[k]] = x[k];
    return full;
}

} // namespace bifre
