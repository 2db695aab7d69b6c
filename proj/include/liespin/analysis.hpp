#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "liespin/geometry.hpp"
#include "liespin/holonomy.hpp"
#include "liespin/json_io.hpp"
#include "liespin/spin.hpp"
#include "liespin/weights.hpp"

namespace liespin {

struct BuiltAlgebra {
    json identity;  // {"catalog": name, "params": ...} or {"hash": ...}
    MetricLieAlgebra algebra;
    std::optional<ExtensionData> extension;
    std::optional<NormalDerivationSet> tower;
};

namespace detail {

inline std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace detail

inline BuiltAlgebra build_spec(const AlgebraSpec& spec) {
    BuiltAlgebra out;
    if (spec.catalog_name) {
        CatalogEntry entry = [&] {
            try {
                return catalog(*spec.catalog_name, spec.params);
            } catch (const std::invalid_argument& err) {
                // unknown names and out-of-range parameters are input errors
                throw ParseError(err.what());
            }
        }();
        out.identity["catalog"] = *spec.catalog_name;
        if (spec.source.contains("params")) out.identity["params"] = spec.source["params"];
        out.algebra = std::move(entry.algebra);
        out.extension = std::move(entry.extension);
        out.tower = std::move(entry.tower);
    } else if (spec.extension) {
        out.identity["hash"] = detail::fnv1a_hex(spec.source.dump());
        out.extension = spec.extension;
        out.algebra = double_extend(*spec.extension);
    } else if (spec.explicit_algebra) {
        out.identity["hash"] = detail::fnv1a_hex(spec.source.dump());
        out.algebra = *spec.explicit_algebra;
    } else {
        throw ParseError("build_spec: empty spec");
    }
    return out;
}

struct AnalysisReport {
    json identity;
    std::size_t dim = 0;
    FormSignature signature;
    ValidationReport validation;
    // Fields below are filled only when validation passes.
    std::size_t center_dim = 0;
    std::size_t derived_dim = 0;
    Matrix killing;
    Matrix ricci_form;
    Scalar scalar;
    GeometryFlags flags;
    std::size_t holonomy_dim = 0;
    bool holonomy_abelian = false;
    std::optional<std::size_t> parallel_spinors;  // empty: no exact frame in Q(sqrt2)
    std::optional<SpinorBoundResult> spinor_bound;
    std::optional<bool> killing_blocks_ok;
    std::vector<std::string> notes;
};

inline AnalysisReport analyze(const BuiltAlgebra& built) {
    AnalysisReport report;
    report.identity = built.identity;
    report.dim = built.algebra.dim();
    report.validation = validate(built.algebra);
    if (built.algebra.metric.rows() == report.dim && built.algebra.metric.is_symmetric() &&
        built.algebra.metric.is_real()) {
        report.signature = form_signature(built.algebra.metric);
    }
    if (!report.validation.ok()) return report;

    const MetricLieAlgebra& a = built.algebra;
    report.center_dim = center(a).size();
    report.derived_dim = derived_subalgebra(a).size();
    report.killing = killing_form(a);
    const CurvatureReport geometry = classify(a);
    report.ricci_form = geometry.ricci;
    report.scalar = geometry.scalar;
    report.flags = geometry.flags;
    const HolonomyResult hol = holonomy_algebra(a);
    report.holonomy_dim = hol.dimension;
    report.holonomy_abelian = hol.abelian;
    try {
        report.parallel_spinors = parallel_spinor_dim(a);
    } catch (const UnsupportedMetricError& err) {
        report.notes.push_back(err.what());
    }
    if (built.extension) {
        report.killing_blocks_ok = extension_killing_blocks(*built.extension).consistent();
        if (is_abelian(built.extension->h) || is_semisimple(built.extension->h)) {
            try {
                report.spinor_bound = parallel_spinor_bound(*built.extension);
            } catch (const UnsupportedMetricError& err) {
                report.notes.push_back(err.what());
            }
        }
    }
    return report;
}

inline json report_to_json(const AnalysisReport& r) {
    json j;
    j["identity"] = r.identity;
    j["dim"] = r.dim;
    j["signature"] = json::array({r.signature.neg, r.signature.pos});
    if (r.signature.zero > 0) j["signature_zero"] = r.signature.zero;
    j["valid"] = r.validation.ok();
    j["violations"] = r.validation.violations;
    if (!r.validation.ok()) return j;
    j["center_dim"] = r.center_dim;
    j["derived_dim"] = r.derived_dim;
    j["killing"] = matrix_to_json(r.killing);
    j["ricci"] = matrix_to_json(r.ricci_form);
    j["scalar_curvature"] = scalar_to_json(r.scalar);
    j["flags"] = {{"flat", r.flags.flat},
                  {"ricci_flat", r.flags.ricci_flat},
                  {"ricci_2step_nilpotent", r.flags.ricci_2step_nilpotent},
                  {"einstein", r.flags.einstein}};
    j["flags"]["einstein_constant"] =
        r.flags.einstein_constant ? scalar_to_json(*r.flags.einstein_constant) : json();
    j["holonomy"] = {{"dim", r.holonomy_dim}, {"abelian", r.holonomy_abelian}};
    j["parallel_spinors"] = r.parallel_spinors ? json(*r.parallel_spinors) : json();
    if (r.spinor_bound) {
        j["spinor_bound"] = {{"lower_bound", r.spinor_bound->lower_bound}, {"dim", r.spinor_bound->exact}};
    }
    if (r.killing_blocks_ok) j["killing_blocks_consistent"] = *r.killing_blocks_ok;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline std::string geometry_summary(const AnalysisReport& r) {
    std::vector<std::string> parts;
    if (r.flags.flat) parts.push_back("flat");
    else if (r.flags.ricci_flat) parts.push_back("Ricci-flat, non-flat");
    if (r.flags.einstein && !r.flags.ricci_flat)
        parts.push_back("Einstein, R = " + r.scalar.str());
    if (!r.flags.einstein && r.scalar.is_zero()) parts.push_back("R = 0");
    if (r.flags.ricci_2step_nilpotent && !r.flags.ricci_flat) parts.push_back("Ric^2 = 0");
    if (r.holonomy_dim == 0) parts.push_back("holonomy 0");
    else if (r.holonomy_abelian)
        parts.push_back("abelian holonomy R^" + std::to_string(r.holonomy_dim));
    else parts.push_back("holonomy dim " + std::to_string(r.holonomy_dim));
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
    return out;
}

inline std::string identity_label(const json& identity) {
    if (identity.contains("catalog")) {
        std::string out = identity["catalog"].get<std::string>();
        if (identity.contains("params")) out += " " + identity["params"].dump();
        return out;
    }
    if (identity.contains("hash")) return "spec#" + identity["hash"].get<std::string>();
    return identity.dump();
}

inline std::string report_to_markdown(const AnalysisReport& r) {
    std::ostringstream out;
    out << "| algebra | dim | signature | dim P | geometry |\n";
    out << "|---|---|---|---|---|\n";
    out << "| " << identity_label(r.identity) << " | " << r.dim << " | (" << r.signature.neg << ","
        << r.signature.pos << ") | "
        << (r.parallel_spinors ? std::to_string(*r.parallel_spinors) : std::string("-")) << " | ";
    if (!r.validation.ok()) {
        out << "INVALID: " << r.validation.violations.front() << " |\n";
    } else {
        out << geometry_summary(r) << " |\n";
    }
    return out.str();
}

struct TableRow {
    std::string label;
    AnalysisReport report;
};

/// Rows of the paper-style tables that the library computes, instantiated at
/// the default parameters (overridable): lambda = 1, t = 1, c = 1, m up to 3.
inline std::vector<TableRow> reproduce_table(int table, const json& overrides = json::object()) {
    const CatalogParams params = catalog_params_from_json(overrides);
    std::vector<TableRow> rows;
    const auto add = [&rows](const std::string& label, const std::string& name,
                             const CatalogParams& p) {
        BuiltAlgebra built;
        CatalogEntry entry = catalog(name, p);
        built.identity["catalog"] = name;
        built.algebra = std::move(entry.algebra);
        built.extension = std::move(entry.extension);
        built.tower = std::move(entry.tower);
        rows.push_back(TableRow{label, analyze(built)});
    };
    const Scalar lambda0 = params.lambda.empty() ? Scalar(1) : params.lambda.front();
    const std::size_t m_max =
        std::min<std::size_t>(overrides.contains("m") ? params.m : 3, 3);

    switch (table) {
        case 1: {
            CatalogParams p;
            p.c = params.c;
            add("SL2(R) with c*B", "sl2", p);
            for (std::size_t m = 1; m <= m_max; ++m) {
                CatalogParams q;
                q.lambda.assign(m, Scalar(1));
                std::string label = "Osc(1";
                for (std::size_t k = 1; k < m; ++k) label += ",1";
                label += ")";
                add(label, "osc", q);
            }
            break;
        }
        case 2: {
            CatalogParams p;
            p.c = -params.c;
            add("SL2(R) with -c*B", "sl2", p);
            add("L2(1,1)", "L2", {});
            add("L3(1,2)", "L3", {});
            {
                CatalogParams q;
                q.lambda = {lambda0};
                add("L2,lambda(1,3), n=6", "L2lambda", q);
                add("L3,lambda(1,4), n=7", "L3lambda", q);
            }
            add("Osc(A0,U1), m=2", "OscA0U1", {});
            add("D(A0,U1), m=2", "DA0U1", {});
            break;
        }
        case 3: {
            CatalogParams p;
            p.c = params.c;
            add("SU(2) with -c*B", "su2", p);
            add("SL2(R) with c*B", "sl2", p);
            break;
        }
        case 4:
            add("Osc(1)", "osc", {});
            add("L2(1,1)", "L2", {});
            break;
        case 5:
            add("L3(1,2)", "L3", {});
            break;
        case 6: {
            {
                CatalogParams q;
                q.lambda = {Scalar(1), lambda0};
                add("Osc(1,lambda)", "osc", q);
            }
            {
                CatalogParams q;
                q.lambda = {lambda0};
                add("L2,lambda(1,3)", "L2lambda", q);
            }
            {
                CatalogParams q;
                q.c = params.c;
                add("T*SU(2)_c", "Tsu2", q);
                add("T*SL2(R)_c", "Tsl2", q);
            }
            add("N1(2,2)", "N1", {});
            for (std::size_t k = 2; k <= 6; ++k) {
                CatalogParams q;
                q.t = params.t;
                q.plus_variant = params.plus_variant;
                add("N" + std::to_string(k) + "(2,2)", "N" + std::to_string(k), q);
            }
            break;
        }
        default:
            throw ParseError("reproduce_table: table number must be 1..6");
    }
    return rows;
}

inline json table_to_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json j = report_to_json(row.report);
        j["label"] = row.label;
        out.push_back(std::move(j));
    }
    return out;
}

inline std::string table_to_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "| G | dim | signature (p,q) | dim P | geometry |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& row : rows) {
        const AnalysisReport& r = row.report;
        out << "| " << row.label << " | " << r.dim << " | (" << r.signature.neg << ","
            << r.signature.pos << ") | "
            << (r.parallel_spinors ? std::to_string(*r.parallel_spinors) : std::string("-")) << " | "
            << geometry_summary(r) << " |\n";
    }
    return out.str();
}

struct Su2TableRow {
    std::size_t k = 0;
    long long count = 0;
};

inline std::vector<Su2TableRow> su2_table(Su2RepKind kind, std::size_t k_max) {
    const std::size_t cap = kind == Su2RepKind::rho ? 24 : 12;
    if (k_max == 0 || k_max > cap) {
        throw ParseError("su2_table: k_max must be in 1.." + std::to_string(cap));
    }
    std::vector<Su2TableRow> rows;
    for (std::size_t k = 1; k <= k_max; ++k) rows.push_back({k, su2_weight_count(kind, k)});
    return rows;
}

}  // namespace liespin
