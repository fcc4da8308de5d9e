#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bifre/bifre.hpp"

namespace {

// Exit codes: 0 solvable / check passed, 1 unsolvable / check failed,
// 2 usage or input error, 3 enumeration cap exceeded.
constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bifre::ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bifre::BipolarSystem load_system(const std::string& path) {
    return bifre::document_to_system(bifre::parse_problem_document(read_file(path)));
}

void emit(const bifre::json& structured, const std::string& text, const std::string& format) {
    if (format == "structured")
        std::cout << structured.dump(2) << "\n";
    else
        std::cout << text;
}

int run_solve(const std::string& path, const std::string& format, const bifre::SolverLimits& limits,
              bool timing) {
    const bifre::BipolarSystem original = load_system(path);
    const auto started = std::chrono::steady_clock::now();
    const bifre::PreprocessResult pre = bifre::preprocess(original);

    bifre::SolveArtifacts art;
    art.preprocess = pre.report;
    art.fre = bifre::greatest_fre_candidate(pre.system);
    art.extremal = bifre::extremal_system(pre.system, limits);
    if (timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        art.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    emit(bifre::solve_report_json(art), bifre::solve_report_text(art), format);
    return art.extremal.solvable ? kExitSolvable : kExitUnsolvable;
}

int run_check(const std::string& path, const std::string& solution_arg, const std::string& format) {
    const bifre::BipolarSystem sys = load_system(path);
    const std::string solution_text =
        std::filesystem::exists(solution_arg) ? read_file(solution_arg) : solution_arg;
    const bifre::CandidateSolution x = bifre::parse_solution_text(solution_text);
    const bifre::VerificationReport report = bifre::verify_solution(sys, x);
    emit(bifre::check_report_json(sys, report), bifre::check_report_text(sys, report), format);
    return report.verdict ? kExitSolvable : kExitUnsolvable;
}

int run_pairs(const std::string& path, const std::string& format, const bifre::SolverLimits& limits) {
    const bifre::BipolarSystem original = load_system(path);
    const bifre::PreprocessResult pre = bifre::preprocess(original);
    const bifre::SystemSolvability verdict = bifre::system_solvable(pre.system, limits);
    if (!verdict.solvable) {
        bifre::json out;
        out["schema_version"] = "1";
        out["verdict"] = "unsolvable";
        out["witness"] = bifre::io_detail::witness_json(*verdict.witness, pre.report);
        emit(out, "verdict: unsolvable\nwitness: " + verdict.witness->describe() + "\n", format);
        return kExitUnsolvable;
    }
    const bifre::FeasibleFamilies fam = bifre::enumerate_families(pre.system, limits);
    emit(bifre::families_report_json(fam, pre.report),
         "verdict: solvable\n" + bifre::families_report_text(fam, pre.report), format);
    return kExitSolvable;
}

int run_oracle(const std::string& path, const std::string& format, const bifre::OracleLimits& limits) {
    const bifre::BipolarSystem original = load_system(path);
    const bifre::PreprocessResult pre = bifre::preprocess(original);
    const bifre::OracleReport report = bifre::oracle_solve(pre.system, limits);
    emit(bifre::oracle_report_json(report, pre.report),
         bifre::oracle_report_text(report, pre.report), format);
    return report.solvable ? kExitSolvable : kExitUnsolvable;
}

int run_gen(std::uint64_t seed, std::size_t m, std::size_t n, unsigned grid, const std::string& out) {
    const bifre::BipolarSystem sys = bifre::random_instance(seed, m, n, grid);
    const std::string text = bifre::render_problem_document(bifre::system_to_document(sys));
    if (out == "-") {
        std::cout << text;
        return kExitSolvable;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw bifre::ParseError("cannot write '" + out + "'");
    file << text;
    return kExitSolvable;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for bipolar max-product fuzzy relation equations"};
    app.require_subcommand(1);

    std::string format = "text";
    std::size_t max_enum = 0;  // 0 keeps the library defaults
    std::size_t max_oracle = 0;
    bool timing = false;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
    };
    const auto add_max_enum = [&](CLI::App* cmd) {
        cmd->add_option("--max-enum", max_enum, "cap on columns for exhaustive enumeration")
            ->check(CLI::Range(std::size_t{1}, std::size_t{32}));
    };

    std::string path, solution_arg, out_path = "-";
    std::uint64_t seed = 1;
    std::size_t gen_m = 3, gen_n = 2;
    unsigned grid = 10;

    CLI::App* solve = app.add_subcommand("solve", "decide solvability and list extremal solutions");
    solve->add_option("file", path, "problem file")->required();
    add_format(solve);
    add_max_enum(solve);
    solve->add_flag("--timing", timing, "include elapsed milliseconds in the report");

    CLI::App* check = app.add_subcommand("check", "verify a candidate solution row by row");
    check->add_option("file", path, "problem file")->required();
    check->add_option("solution", solution_arg, "solution tuple or file")->required();
    add_format(check);

    CLI::App* pairs = app.add_subcommand("pairs", "enumerate the families S+ and S-");
    pairs->add_option("file", path, "problem file")->required();
    add_format(pairs);
    add_max_enum(pairs);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force sweep over extreme assignments");
    oracle->add_option("file", path, "problem file")->required();
    add_format(oracle);
    oracle->add_option("--max-oracle", max_oracle, "cap on columns for the oracle sweep")
        ->check(CLI::Range(std::size_t{1}, std::size_t{32}));

    CLI::App* gen = app.add_subcommand("gen", "write a deterministic random instance");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--m", gen_m, "unknowns")->check(CLI::PositiveNumber);
    gen->add_option("--n", gen_n, "equations")->check(CLI::PositiveNumber);
    gen->add_option("--grid", grid, "grid denominator d; scalars are multiples of 1/d")
        ->check(CLI::PositiveNumber);
    gen->add_option("out", out_path, "output file, or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    bifre::SolverLimits limits;
    if (max_enum != 0) {
        limits.solvable_cap = max_enum;
        limits.family_cap = max_enum;
    }
    bifre::OracleLimits oracle_limits;
    if (max_oracle != 0) oracle_limits.cap = max_oracle;

    try {
        if (app.got_subcommand(solve)) return run_solve(path, format, limits, timing);
        if (app.got_subcommand(check)) return run_check(path, solution_arg, format);
        if (app.got_subcommand(pairs)) return run_pairs(path, format, limits);
        if (app.got_subcommand(oracle)) return run_oracle(path, format, oracle_limits);
        if (app.got_subcommand(gen)) return run_gen(seed, gen_m, gen_n, grid, out_path);
    } catch (const bifre::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
