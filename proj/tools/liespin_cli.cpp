// Command-line front end: validate and analyze metric Lie algebras, reproduce
// the catalog tables, run the su(2) weight counters and check Clifford
// representations. Exit codes: 0 success, 1 validation failure, 2 parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "liespin/liespin.hpp"

namespace {

using liespin::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw liespin::ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

liespin::BuiltAlgebra built_from_options(const std::string& file, const std::string& catalog_name,
                                         const std::string& params_text) {
    if (!catalog_name.empty()) {
        json source;
        source["catalog"] = catalog_name;
        if (!params_text.empty()) {
            try {
                source["params"] = json::parse(params_text);
            } catch (const json::parse_error& err) {
                throw liespin::ParseError(std::string("--params: ") + err.what());
            }
        }
        return liespin::build_spec(liespin::parse_spec(source));
    }
    if (file.empty()) throw liespin::ParseError("expected an input file or --catalog NAME");
    return liespin::build_spec(liespin::parse_spec_text(read_file(file)));
}

json parse_params_option(const std::string& params_text) {
    if (params_text.empty()) return json::object();
    try {
        return json::parse(params_text);
    } catch (const json::parse_error& err) {
        throw liespin::ParseError(std::string("--params: ") + err.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curvature, holonomy and parallel-spinor analysis of metric Lie algebras"};
    app.require_subcommand(1);

    std::string file, catalog_name, params_text, rep_kind = "rho";
    bool as_json = false, as_markdown = false, run_check = false;
    int table_number = 6;
    std::size_t k_max = 10, cliff_neg = 0, cliff_pos = 2;

    auto* validate_cmd = app.add_subcommand("validate", "check an algebra specification file");
    validate_cmd->add_option("file", file, "JSON algebra spec")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "full analysis pipeline");
    analyze_cmd->add_option("file", file, "JSON algebra spec");
    analyze_cmd->add_option("--catalog", catalog_name, "catalog entry name");
    analyze_cmd->add_option("--params", params_text, "catalog parameters as JSON");
    analyze_cmd->add_flag("--json", as_json, "canonical JSON output");
    analyze_cmd->add_flag("--markdown", as_markdown, "markdown table output");

    auto* table_cmd = app.add_subcommand("table", "reproduce a catalog table");
    table_cmd->add_option("number", table_number, "table number 1..6")->required();
    table_cmd->add_option("--params", params_text, "parameter overrides as JSON");
    table_cmd->add_flag("--json", as_json, "canonical JSON output");
    table_cmd->add_flag("--markdown", as_markdown, "markdown output");

    auto* su2_cmd = app.add_subcommand("su2", "weight-multiplicity counters for su(2) representations");
    su2_cmd->add_option("--rep", rep_kind, "rho or sigma")->check(CLI::IsMember({"rho", "sigma"}));
    su2_cmd->add_option("--kmax", k_max, "largest k (rho <= 24, sigma <= 12)");
    su2_cmd->add_flag("--json", as_json, "JSON output");

    auto* cliff_cmd = app.add_subcommand("clifford", "build Clifford generators for a signature");
    cliff_cmd->add_option("--neg", cliff_neg, "number of -1 signs")->required();
    cliff_cmd->add_option("--pos", cliff_pos, "number of +1 signs")->required();
    cliff_cmd->add_flag("--check", run_check, "verify the anticommutator table");
    cliff_cmd->add_flag("--json", as_json, "emit the generator matrices as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            const liespin::BuiltAlgebra built = built_from_options(file, "", "");
            const liespin::ValidationReport report = liespin::validate(built.algebra);
            json out;
            out["valid"] = report.ok();
            out["violations"] = report.violations;
            out["notes"] = report.notes;
            std::cout << out.dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }
        if (analyze_cmd->parsed()) {
            const liespin::BuiltAlgebra built = built_from_options(file, catalog_name, params_text);
            const liespin::AnalysisReport report = liespin::analyze(built);
            if (as_markdown && !as_json) {
                std::cout << liespin::report_to_markdown(report);
            } else {
                std::cout << liespin::report_to_json(report).dump(2) << "\n";
            }
            return report.validation.ok() ? 0 : 1;
        }
        if (table_cmd->parsed()) {
            const auto rows = liespin::reproduce_table(table_number, parse_params_option(params_text));
            if (as_json && !as_markdown) {
                std::cout << liespin::table_to_json(rows).dump(2) << "\n";
            } else {
                std::cout << liespin::table_to_markdown(rows);
            }
            return 0;
        }
        if (su2_cmd->parsed()) {
            const auto kind =
                rep_kind == "rho" ? liespin::Su2RepKind::rho : liespin::Su2RepKind::sigma;
            const auto rows = liespin::su2_table(kind, k_max);
            if (as_json) {
                json out = json::array();
                for (const auto& row : rows) out.push_back({{"k", row.k}, {"count", row.count}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "| k | N0 - N2 |\n|---|---|\n";
                for (const auto& row : rows)
                    std::cout << "| " << row.k << " | " << row.count << " |\n";
            }
            return 0;
        }
        if (cliff_cmd->parsed()) {
            const liespin::CliffordRep rep = liespin::clifford_generators(cliff_neg, cliff_pos);
            const bool ok = !run_check || liespin::clifford_relations_hold(rep);
            if (as_json) {
                json out;
                out["signature"] = json::array({cliff_neg, cliff_pos});
                out["spinor_dim"] = rep.spinor_dim();
                if (run_check) out["relations_ok"] = ok;
                json gammas = json::array();
                for (const auto& g : rep.gamma) gammas.push_back(liespin::matrix_to_json(g));
                out["generators"] = gammas;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "clifford(" << cliff_neg << "," << cliff_pos << "): " << rep.dimension()
                          << " generators of size " << rep.spinor_dim() << "x" << rep.spinor_dim();
                if (run_check) std::cout << (ok ? ", relations ok" : ", RELATIONS VIOLATED");
                std::cout << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const liespin::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 2;
    } catch (const liespin::UnsupportedMetricError& err) {
        std::cerr << "unsupported metric: " << err.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
