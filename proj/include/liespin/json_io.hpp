#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "liespin/catalog.hpp"

namespace liespin {

using json = nlohmann::json;

/// Malformed input (JSON syntax, bad index, bad scalar literal). CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Scalar literal: integer, rational string "p/q", or the 4-array
/// ["a","b","c","d"] meaning a + b*sqrt2 + c*i + d*i*sqrt2.
inline Scalar scalar_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) {
            return Scalar(rational_from_string(std::to_string(j.get<long long>())));
        }
        if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
        if (j.is_array() && j.size() == 4) {
            std::array<std::string, 4> parts;
            for (std::size_t k = 0; k < 4; ++k) {
                if (j[k].is_number_integer()) parts[k] = std::to_string(j[k].get<long long>());
                else if (j[k].is_string()) parts[k] = j[k].get<std::string>();
                else throw ParseError(where + ": scalar component must be an integer or string");
            }
            return Scalar::from_strings(parts);
        }
    } catch (const std::invalid_argument& err) {
        throw ParseError(where + ": " + err.what());
    }
    throw ParseError(where + ": expected a scalar literal (integer, \"p/q\", or 4-array)");
}

inline json scalar_to_json(const Scalar& s) {
    const auto parts = s.to_strings();
    return json::array({parts[0], parts[1], parts[2], parts[3]});
}

inline Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw ParseError(where + ": rows must be arrays");
        cols = j[0].size();
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError(where + ": ragged rows");
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = scalar_from_json(j[i][k], where + "[" + std::to_string(i) + "][" +
                                                    std::to_string(k) + "]");
        }
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

template <typename Alg>
inline Alg explicit_algebra_from_json(const json& j, const std::string& where) {
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
        throw ParseError(where + ": missing or invalid \"dim\"");
    }
    const std::size_t n = j["dim"].get<std::size_t>();
    Alg a;
    a.structure = StructureConstants(n);
    a.metric = Matrix(n, n);
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != n)
            throw ParseError(where + ": \"labels\" must list exactly dim names");
        for (const auto& l : j["labels"]) a.labels.push_back(l.get<std::string>());
    } else {
        for (std::size_t k = 1; k <= n; ++k) a.labels.push_back("e" + std::to_string(k));
    }
    const auto check_index = [&](const json& v, const char* what) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
            throw ParseError(where + ": " + what + " index out of range [0," + std::to_string(n) +
                             ")");
        return v.get<std::size_t>();
    };
    if (j.contains("brackets")) {
        for (const auto& entry : j["brackets"]) {
            if (!entry.is_array() || entry.size() != 4)
                throw ParseError(where + ": bracket entries are [i, j, k, scalar]");
            const std::size_t i = check_index(entry[0], "bracket");
            const std::size_t jj = check_index(entry[1], "bracket");
            const std::size_t k = check_index(entry[2], "bracket");
            if (i >= jj) throw ParseError(where + ": brackets must be listed with i < j");
            a.structure.add_to_bracket(i, jj, k, scalar_from_json(entry[3], where + ".brackets"));
        }
    }
    if (j.contains("metric")) {
        for (const auto& entry : j["metric"]) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError(where + ": metric entries are [i, j, scalar]");
            const std::size_t i = check_index(entry[0], "metric");
            const std::size_t jj = check_index(entry[1], "metric");
            const Scalar v = scalar_from_json(entry[2], where + ".metric");
            a.metric(i, jj) = v;
            a.metric(jj, i) = v;
        }
    }
    return a;
}

}  // namespace detail

inline CatalogParams catalog_params_from_json(const json& j) {
    CatalogParams p;
    if (j.is_null()) return p;
    if (!j.is_object()) throw ParseError("params: expected an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "lambda") {
            if (!value.is_array()) throw ParseError("params.lambda: expected an array");
            p.lambda.clear();
            for (const auto& l : value) p.lambda.push_back(scalar_from_json(l, "params.lambda"));
        } else if (key == "t") {
            p.t = scalar_from_json(value, "params.t");
        } else if (key == "c") {
            p.c = scalar_from_json(value, "params.c");
        } else if (key == "c_h") {
            p.c_h = scalar_from_json(value, "params.c_h");
        } else if (key == "sign") {
            const std::string s = value.get<std::string>();
            if (s != "+" && s != "-") throw ParseError("params.sign: expected \"+\" or \"-\"");
            p.plus_variant = s == "+";
        } else if (key == "p") {
            p.p = value.get<std::size_t>();
        } else if (key == "q") {
            p.q = value.get<std::size_t>();
        } else if (key == "n") {
            p.n = value.get<std::size_t>();
        } else if (key == "m") {
            p.m = value.get<std::size_t>();
        } else if (key == "A") {
            p.A = matrix_from_json(value, "params.A");
        } else if (key == "A0") {
            p.A0 = matrix_from_json(value, "params.A0");
        } else if (key == "U1") {
            p.U1 = matrix_from_json(value, "params.U1");
        } else if (key == "g_metric") {
            p.g_metric = matrix_from_json(value, "params.g_metric");
        } else if (key == "U") {
            for (const auto& m : value) p.U.push_back(matrix_from_json(m, "params.U"));
        } else if (key == "Z") {
            for (const auto& m : value) p.Z.push_back(matrix_from_json(m, "params.Z"));
        } else if (key == "h_matrices") {
            for (const auto& m : value) p.h_matrices.push_back(matrix_from_json(m, "params.h_matrices"));
        } else {
            throw ParseError("params: unknown key \"" + key + "\"");
        }
    }
    return p;
}

/// Wire-format algebra description: a catalog reference, explicit structure
/// constants, or a double extension of sub-specs.
struct AlgebraSpec {
    std::optional<std::string> catalog_name;
    CatalogParams params;
    std::optional<MetricLieAlgebra> explicit_algebra;
    std::optional<ExtensionData> extension;
    json source;  // the parsed input, for identities and round-trips
};

inline AlgebraSpec parse_spec(const json& j);

namespace detail {

inline MetricLieAlgebra algebra_of_subspec(const json& j, const std::string& where) {
    const AlgebraSpec sub = parse_spec(j);
    if (sub.explicit_algebra) return *sub.explicit_algebra;
    if (sub.catalog_name) return catalog(*sub.catalog_name, sub.params).algebra;
    if (sub.extension) return double_extend(*sub.extension);
    throw ParseError(where + ": cannot resolve sub-spec to an algebra");
}

}  // namespace detail

inline AlgebraSpec parse_spec(const json& j) {
    if (!j.is_object()) throw ParseError("spec: expected a JSON object");
    AlgebraSpec spec;
    spec.source = j;
    if (j.contains("catalog")) {
        spec.catalog_name = j["catalog"].get<std::string>();
        spec.params = catalog_params_from_json(j.contains("params") ? j["params"] : json());
        return spec;
    }
    if (j.contains("extension")) {
        const json& ext = j["extension"];
        if (!ext.contains("g") || !ext.contains("h") || !ext.contains("pi"))
            throw ParseError("extension: requires \"g\", \"h\" and \"pi\"");
        ExtensionData e;
        e.g = detail::algebra_of_subspec(ext["g"], "extension.g");
        e.h = detail::explicit_algebra_from_json<DegenerateFormAlgebra>(ext["h"], "extension.h");
        for (const auto& m : ext["pi"]) e.pi.push_back(matrix_from_json(m, "extension.pi"));
        spec.extension = std::move(e);
        return spec;
    }
    if (j.contains("dim")) {
        spec.explicit_algebra = detail::explicit_algebra_from_json<MetricLieAlgebra>(j, "spec");
        return spec;
    }
    throw ParseError("spec: expected \"catalog\", \"extension\" or explicit \"dim\"/\"brackets\"");
}

inline AlgebraSpec parse_spec_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("json: ") + err.what());
    }
    return parse_spec(j);
}

}  // namespace liespin
