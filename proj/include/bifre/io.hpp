#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bifre/oracle.hpp"
#include "bifre/system.hpp"
#include "bifre/system_solver.hpp"
#include "bifre/verdict.hpp"

namespace bifre {

using json = nlohmann::ordered_json;

/// On-disk problem instance: all scalars are strings, either decimal
/// ("0.25") or fraction ("1/4") form, parsed exactly.
struct ProblemDocument {
    std::string schema_version = "1";
    std::vector<std::vector<std::string>> a_plus;
    std::vector<std::vector<std::string>> a_minus;
    std::vector<std::string> b;
    std::vector<std::string> row_labels;     // optional
    std::vector<std::string> column_labels;  // optional

    friend bool operator==(const ProblemDocument&, const ProblemDocument&) = default;
};

namespace io_detail {

inline std::vector<std::string> string_array(const json& node, const std::string& key) {
    std::vector<std::string> out;
    if (!node.is_array()) throw ParseError(key + " must be an array of strings");
    for (const auto& cell : node) {
        if (!cell.is_string()) throw ParseError(key + " must contain only strings");
        out.push_back(cell.get<std::string>());
    }
    return out;
}

inline std::vector<std::vector<std::string>> string_matrix(const json& node, const std::string& key) {
    std::vector<std::vector<std::string>> out;
    if (!node.is_array()) throw ParseError(key + " must be an array of rows");
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(string_array(node[i], key + " row " + std::to_string(i + 1)));
    return out;
}

inline UnitRational scalar_at(const std::string& text, const std::string& location) {
    try {
        return parse_unit_scalar(text);
    } catch (const ParseError& e) {
        throw ParseError(location + ": " + e.what());
    } catch (const RangeError& e) {
        throw RangeError(location + ": " + e.what());
    }
}

} // namespace io_detail

inline ProblemDocument parse_problem_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");
    for (const char* key : {"a_plus", "a_minus", "b"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

    ProblemDocument out;
    if (doc.contains("schema_version")) {
        if (!doc["schema_version"].is_string()) throw ParseError("schema_version must be a string");
        out.schema_version = doc["schema_version"].get<std::string>();
    }
    out.a_plus = io_detail::string_matrix(doc["a_plus"], "a_plus");
    out.a_minus = io_detail::string_matrix(doc["a_minus"], "a_minus");
    out.b = io_detail::string_array(doc["b"], "b");
    if (doc.contains("row_labels")) out.row_labels = io_detail::string_array(doc["row_labels"], "row_labels");
    if (doc.contains("column_labels"))
        out.column_labels = io_detail::string_array(doc["column_labels"], "column_labels");
    return out;
}

inline std::string render_problem_document(const ProblemDocument& doc) {
    json j;
    j["schema_version"] = doc.schema_version;
    j["a_plus"] = doc.a_plus;
    j["a_minus"] = doc.a_minus;
    j["b"] = doc.b;
    if (!doc.row_labels.empty()) j["row_labels"] = doc.row_labels;
    if (!doc.column_labels.empty()) j["column_labels"] = doc.column_labels;
    return j.dump(2) + "\n";
}

/// Converts a document to an exact instance; errors carry the offending
/// cell in 1-based "a_plus[i][j]" form.
inline BipolarSystem document_to_system(const ProblemDocument& doc) {
    BipolarSystem sys;
    sys.rows = doc.a_plus.size();
    sys.cols = doc.a_plus.empty() ? 0 : doc.a_plus.front().size();
    if (doc.a_minus.size() != sys.rows)
        throw DimensionError("a_minus has " + std::to_string(doc.a_minus.size()) +
                             " rows, expected " + std::to_string(sys.rows));
    if (doc.b.size() != sys.rows)
        throw DimensionError("b has " + std::to_string(doc.b.size()) + " entries, expected " +
                             std::to_string(sys.rows));
    for (std::size_t i = 0; i < sys.rows; ++i) {
        if (doc.a_plus[i].size() != sys.cols)
            throw DimensionError("a_plus row " + std::to_string(i + 1) + " has " +
                                 std::to_string(doc.a_plus[i].size()) + " entries, expected " +
                                 std::to_string(sys.cols));
        if (doc.a_minus[i].size() != sys.cols)
            throw DimensionError("a_minus row " + std::to_string(i + 1) + " has " +
                                 std::to_string(doc.a_minus[i].size()) + " entries, expected " +
                                 std::to_string(sys.cols));
        for (std::size_t j = 0; j < sys.cols; ++j) {
            const std::string at = "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
            sys.a_plus.push_back(io_detail::scalar_at(doc.a_plus[i][j], "a_plus" + at));
            sys.a_minus.push_back(io_detail::scalar_at(doc.a_minus[i][j], "a_minus" + at));
        }
    }
    for (std::size_t i = 0; i < sys.rows; ++i)
        sys.b.push_back(io_detail::scalar_at(doc.b[i], "b[" + std::to_string(i + 1) + "]"));
    return validate(sys);
}

inline ProblemDocument system_to_document(const BipolarSystem& sys) {
    ProblemDocument doc;
    for (std::size_t i = 0; i < sys.rows; ++i) {
        std::vector<std::string> plus_row, minus_row;
        for (std::size_t j = 0; j < sys.cols; ++j) {
            plus_row.push_back(sys.plus(i, j).str());
            minus_row.push_back(sys.minus(i, j).str());
        }
        doc.a_plus.push_back(std::move(plus_row));
        doc.a_minus.push_back(std::move(minus_row));
    }
    for (const UnitRational& v : sys.b) doc.b.push_back(v.str());
    return doc;
}

/// Parses a solution given as "(0.4, 0.5)", "0.4,0.5" or a JSON array of
/// scalar strings.
inline CandidateSolution parse_solution_text(const std::string& text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty solution");

    CandidateSolution x;
    if (s.front() == '[') {
        json arr;
        try {
            arr = json::parse(s);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what());
        }
        if (!arr.is_array()) throw ParseError("solution must be a JSON array of scalar strings");
        for (const auto& cell : arr) {
            if (!cell.is_string()) throw ParseError("solution entries must be scalar strings");
            x.push_back(parse_unit_scalar(cell.get<std::string>()));
        }
        return x;
    }

    if (s.front() == '(' && s.back() == ')') {
        s.remove_prefix(1);
        s.remove_suffix(1);
    }
    std::size_t start = 0;
    const std::string body(s);
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::string cell =
            body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        x.push_back(parse_unit_scalar(cell));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Report rendering. All numeric fields are exact fraction strings; decimal
// renderings appear only as annotations in the text format. Output is
// byte-deterministic for a given input and flag set.
// ---------------------------------------------------------------------------

/// Everything the solve command reports. The solver artifacts are over
/// retained columns; the preprocess report re-expands them to original
/// arity with "free" markers.
struct SolveArtifacts {
    FreGreatestSolution fre;
    ExtremalReport extremal;
    PreprocessReport preprocess;
    std::optional<std::int64_t> timing_ms;
};

namespace io_detail {

inline json expanded_solution(const CandidateSolution& x, const PreprocessReport& pre) {
    json arr = json::array();
    std::size_t next = 0;
    for (std::size_t j = 0; j < pre.original_cols; ++j) {
        if (next < pre.column_map.size() && pre.column_map[next] == j)
            arr.push_back(x[next++].str());
        else
            arr.push_back("free");
    }
    return arr;
}

inline json expanded_vector(const std::vector<UnitRational>& v, const PreprocessReport& pre) {
    return expanded_solution(v, pre);
}

inline json index_sets(const std::vector<IndexSet>& sets, const PreprocessReport& pre) {
    json arr = json::array();
    for (const IndexSet& s : sets) {
        json one = json::array();
        for (std::size_t j : s) one.push_back(pre.column_map[j] + 1);
        arr.push_back(std::move(one));
    }
    return arr;
}

inline json witness_json(const UnsolvableWitness& w, const PreprocessReport& pre) {
    const auto original_column = [&](std::size_t j) {
        return j < pre.column_map.size() ? pre.column_map[j] + 1 : j + 1;
    };
    json out;
    switch (w.kind) {
    case FailureKind::fre_unsolvable:
        out["kind"] = "relaxation-unsolvable";
        break;
    case FailureKind::negation_gap:
        out["kind"] = "negation-gap";
        out["column"] = original_column(w.column);
        out["sum"] = fraction_string(w.gap_sum);
        break;
    case FailureKind::no_feasible_pair:
        out["kind"] = "no-feasible-pair";
        if (w.forced_conflict) {
            out["column"] = original_column(w.column);
            out["row_plus"] = w.row_plus + 1;
            out["row_minus"] = w.row_minus + 1;
            out["sum"] = fraction_string(w.gap_sum);
        }
        break;
    }
    out["message"] = w.describe();
    return out;
}

inline std::string tuple_text(const json& arr) {
    std::string s = "(";
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (k) s += ", ";
        s += arr[k].get<std::string>();
    }
    s += ")";
    return s;
}

inline std::string set_text(const json& arr) {
    std::string s = "{";
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(arr[k].get<std::size_t>());
    }
    s += "}";
    return s;
}

} // namespace io_detail

inline json solve_report_json(const SolveArtifacts& art) {
    const PreprocessReport& pre = art.preprocess;
    json out;
    out["schema_version"] = "1";
    out["verdict"] = art.extremal.solvable ? "solvable" : "unsolvable";
    out["witness"] =
        art.extremal.witness ? io_detail::witness_json(*art.extremal.witness, pre) : json(nullptr);
    out["fre_greatest"] = {{"solvable", art.fre.fre_solvable},
                           {"x_bar", io_detail::expanded_vector(art.fre.x_bar, pre)},
                           {"y_bar", io_detail::expanded_vector(art.fre.y_bar, pre)}};
    json free_cols = json::array();
    for (std::size_t j : pre.dropped_columns) free_cols.push_back(j + 1);
    out["free_columns"] = std::move(free_cols);
    out["families"] = {
        {"s_plus_maximal", io_detail::index_sets(art.extremal.families.s_plus_maximal, pre)},
        {"s_minus_maximal", io_detail::index_sets(art.extremal.families.s_minus_maximal, pre)}};
    json solutions;
    solutions["greatest"] = art.extremal.greatest
                                ? io_detail::expanded_solution(*art.extremal.greatest, pre)
                                : json(nullptr);
    solutions["least"] =
        art.extremal.least ? io_detail::expanded_solution(*art.extremal.least, pre) : json(nullptr);
    json maximal = json::array();
    for (const CandidateSolution& s : art.extremal.maximal)
        maximal.push_back(io_detail::expanded_solution(s, pre));
    json minimal = json::array();
    for (const CandidateSolution& s : art.extremal.minimal)
        minimal.push_back(io_detail::expanded_solution(s, pre));
    solutions["maximal"] = std::move(maximal);
    solutions["minimal"] = std::move(minimal);
    out["solutions"] = std::move(solutions);
    if (art.timing_ms) out["timing_ms"] = *art.timing_ms;
    return out;
}

inline std::string solve_report_text(const SolveArtifacts& art) {
    const json j = solve_report_json(art);
    std::string s;
    s += "verdict: " + j["verdict"].get<std::string>() + "\n";
    if (!j["witness"].is_null())
        s += "witness: " + j["witness"]["message"].get<std::string>() + "\n";
    s += "relaxation greatest solution (solvable: ";
    s += art.fre.fre_solvable ? "yes" : "no";
    s += "):\n";
    s += "  x_bar = " + io_detail::tuple_text(j["fre_greatest"]["x_bar"]) + "\n";
    s += "  y_bar = " + io_detail::tuple_text(j["fre_greatest"]["y_bar"]) + "\n";
    if (art.extremal.solvable) {
        s += "families:\n  S+ maximal:";
        for (const auto& set : j["families"]["s_plus_maximal"]) s += " " + io_detail::set_text(set);
        s += "\n  S- maximal:";
        for (const auto& set : j["families"]["s_minus_maximal"]) s += " " + io_detail::set_text(set);
        s += "\nsolutions:\n";
        s += "  greatest: ";
        s += j["solutions"]["greatest"].is_null() ? "none"
                                                  : io_detail::tuple_text(j["solutions"]["greatest"]);
        s += "\n  maximal: ";
        for (const auto& sol : j["solutions"]["maximal"]) s += " " + io_detail::tuple_text(sol);
        s += "\n  least:    ";
        s += j["solutions"]["least"].is_null() ? "none" : io_detail::tuple_text(j["solutions"]["least"]);
        s += "\n  minimal: ";
        for (const auto& sol : j["solutions"]["minimal"]) s += " " + io_detail::tuple_text(sol);
        s += "\n";
    }
    if (!j["free_columns"].empty()) {
        s += "free columns (any value in [0,1]):";
        for (const auto& c : j["free_columns"]) s += " " + std::to_string(c.get<std::size_t>());
        s += "\n";
    }
    if (art.timing_ms) s += "timing_ms: " + std::to_string(*art.timing_ms) + "\n";
    return s;
}

inline json families_report_json(const FeasibleFamilies& fam, const PreprocessReport& pre) {
    json out;
    out["schema_version"] = "1";
    out["verdict"] = "solvable";
    out["s_plus"] = io_detail::index_sets(fam.s_plus, pre);
    out["s_minus"] = io_detail::index_sets(fam.s_minus, pre);
    out["s_plus_maximal"] = io_detail::index_sets(fam.s_plus_maximal, pre);
    out["s_minus_maximal"] = io_detail::index_sets(fam.s_minus_maximal, pre);
    return out;
}

inline std::string families_report_text(const FeasibleFamilies& fam, const PreprocessReport& pre) {
    const json j = families_report_json(fam, pre);
    std::string s;
    const auto line = [&](const char* name, const json& sets) {
        std::string t = name;
        t += ":";
        for (const auto& set : sets) t += " " + io_detail::set_text(set);
        return t + "\n";
    };
    s += line("S+", j["s_plus"]);
    s += line("S-", j["s_minus"]);
    s += line("S+ maximal", j["s_plus_maximal"]);
    s += line("S- maximal", j["s_minus_maximal"]);
    return s;
}

inline json oracle_report_json(const OracleReport& report, const PreprocessReport& pre) {
    json out;
    out["schema_version"] = "1";
    out["verdict"] = report.solvable ? "solvable" : "unsolvable";
    const auto solution_list = [&](const std::vector<CandidateSolution>& list) {
        json arr = json::array();
        for (const CandidateSolution& s : list) arr.push_back(io_detail::expanded_solution(s, pre));
        return arr;
    };
    out["extreme_solutions"] = solution_list(report.extreme_solutions);
    out["maximal"] = solution_list(report.maximal);
    out["minimal"] = solution_list(report.minimal);
    return out;
}

inline std::string oracle_report_text(const OracleReport& report, const PreprocessReport& pre) {
    const json j = oracle_report_json(report, pre);
    std::string s = "verdict: " + j["verdict"].get<std::string>() + "\n";
    s += "extreme solutions (" + std::to_string(j["extreme_solutions"].size()) + "):\n";
    for (const auto& sol : j["extreme_solutions"]) s += "  " + io_detail::tuple_text(sol) + "\n";
    s += "maximal:";
    for (const auto& sol : j["maximal"]) s += " " + io_detail::tuple_text(sol);
    s += "\nminimal:";
    for (const auto& sol : j["minimal"]) s += " " + io_detail::tuple_text(sol);
    s += "\n";
    return s;
}

inline json check_report_json(const BipolarSystem& sys, const VerificationReport& report) {
    json out;
    out["schema_version"] = "1";
    out["verdict"] = report.verdict ? "solution" : "not-a-solution";
    json rows = json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        rows.push_back({{"row", i + 1},
                        {"attained", report.rows[i].attained.str()},
                        {"expected", sys.b[i].str()},
                        {"matches", report.rows[i].matches}});
    }
    out["rows"] = std::move(rows);
    return out;
}

inline std::string check_report_text(const BipolarSystem& sys, const VerificationReport& report) {
    const json j = check_report_json(sys, report);
    std::string s;
    for (const auto& row : j["rows"]) {
        s += "row " + std::to_string(row["row"].get<std::size_t>()) + ": attained " +
             row["attained"].get<std::string>() + " (" +
             decimal_string(parse_unit_scalar(row["attained"].get<std::string>()).value()) +
             "), expected " + row["expected"].get<std::string>() + " -> " +
             (row["matches"].get<bool>() ? "match" : "mismatch") + "\n";
    }
    s += "verdict: " + j["verdict"].get<std::string>() + "\n";
    return s;
}

} // namespace bifre
