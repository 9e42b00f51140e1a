#ifndef OSCALG_IO_HPP
#define OSCALG_IO_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscalg/classify.hpp"
#include "oscalg/closure.hpp"
#include "oscalg/moments.hpp"
#include "oscalg/operators.hpp"
#include "oscalg/recurrence.hpp"

namespace oscalg {

using json = nlohmann::ordered_json;

// Fixed-width shortest-round-trip formatting so identical runs emit
// identical bytes.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline json rationals_to_json(const std::vector<rational>& values)
{
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

inline std::vector<rational> rationals_from_json(const json& arr, const char* what)
{
    if (!arr.is_array())
        fail(errc::malformed_spec, std::string(what) + " must be an array of rational strings");
    std::vector<rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string())
            fail(errc::malformed_spec, std::string(what) + " entries must be strings like \"p/q\"");
        out.push_back(parse_rational(v.get<std::string>()));
    }
    return out;
}

// Sequence descriptor: {"num": [...], "den": [...], "table": [...]?}
// with ascending-degree coefficients; "den" defaults to [1].
inline rational_sequence sequence_from_json(const json& j, const char* what)
{
    if (!j.is_object())
        fail(errc::malformed_spec, std::string(what) + " must be an object");
    rational_sequence seq;
    if (j.contains("num")) seq.num = rationals_from_json(j.at("num"), what);
    if (j.contains("den"))
        seq.den = rationals_from_json(j.at("den"), what);
    else
        seq.den = {rational(1)};
    if (poly_is_zero(seq.den))
        fail(errc::malformed_spec, std::string(what) + ": denominator is identically zero");
    if (j.contains("table")) seq.table = rationals_from_json(j.at("table"), what);
    if (poly_is_zero(seq.num) && seq.table.empty() && !j.contains("num"))
        fail(errc::malformed_spec, std::string(what) + ": needs \"num\" coefficients or a \"table\"");
    return seq;
}

inline json sequence_to_json(const rational_sequence& seq)
{
    json out;
    out["num"] = rationals_to_json(seq.num);
    out["den"] = rationals_to_json(seq.den);
    if (seq.has_table()) out["table"] = rationals_to_json(seq.table);
    return out;
}

// Custom-family document: {"label": ..., "a": {...}, "b2": {...}}.
inline recurrence_system family_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b2"))
        fail(errc::malformed_spec, "family document needs \"a\" and \"b2\" sequences");
    recurrence_system sys;
    sys.label = j.value("label", std::string("custom"));
    sys.a = sequence_from_json(j.at("a"), "a");
    sys.b2 = sequence_from_json(j.at("b2"), "b2");
    return sys;
}

inline json family_to_json(const recurrence_system& sys)
{
    json out;
    out["label"] = sys.label;
    out["a"] = sequence_to_json(sys.a);
    out["b2"] = sequence_to_json(sys.b2);
    return out;
}

inline json parse_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(errc::malformed_spec, "cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(errc::malformed_spec, "invalid JSON in '" + path + "'");
    return j;
}

inline recurrence_system load_family_file(const std::string& path)
{
    return family_from_json(parse_json_file(path));
}

inline moment_table moments_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("moments"))
        fail(errc::malformed_spec, "moment document needs a \"moments\" array");
    moment_table mom{rationals_from_json(j.at("moments"), "moments")};
    mom.validate();
    return mom;
}

inline json moments_to_json(const moment_table& mom)
{
    json out;
    out["moments"] = rationals_to_json(mom.values);
    return out;
}

inline json classification_to_json(const classification_result& res)
{
    json out;
    out["verdict"] = res.finite ? "Finite" : "Infinite";
    out["p_a"] = res.p_a.bounded ? json(res.p_a.degree) : json("unbounded");
    out["deg_b2"] = res.deg_b2.bounded ? json(res.deg_b2.degree) : json("unbounded");
    if (res.alpha) {
        out["alpha"] = json::array();
        for (const auto& v : *res.alpha) out["alpha"].push_back(to_string(v));
    }
    if (res.beta) {
        out["beta"] = json::array();
        for (const auto& v : *res.beta) out["beta"].push_back(to_string(v));
    }
    out["boundary_consistent"] = res.boundary_consistent;
    return out;
}

inline json closure_to_json(const closure_report& report)
{
    json out;
    out["status"] = status_name(report.status);
    if (report.status == closure_status::finite)
        out["dim"] = report.dim;
    else
        out["cap"] = report.cap;
    out["basis"] = report.basis_labels;
    if (!report.structure_constants.empty()) {
        json tensor = json::array();
        for (const auto& plane : report.structure_constants) {
            json jp = json::array();
            for (const auto& row : plane) jp.push_back(row);
            tensor.push_back(jp);
        }
        out["structure_constants"] = tensor;
    }
    out["residual"] = report.max_projection_residual;
    return out;
}

inline json commutation_to_json(const commutation_report& report)
{
    json out;
    out["truncation"] = report.truncation;
    out["tol"] = report.tol;
    json residuals = json::array();
    for (const auto& r : report.residuals)
        residuals.push_back(json{{"identity", r.name}, {"residual", r.value}});
    out["residuals"] = residuals;
    out["max_residual"] = report.max_residual;
    out["pass"] = report.pass;
    return out;
}

// CSV listing of the nonzero entries, row-major.
inline std::string operator_to_csv(const truncated_operator& op)
{
    std::string out = "row,col,value\n";
    for (int r = 0; r < op.dim(); ++r)
        for (int c = 0; c < op.dim(); ++c)
            if (op.mat(r, c) != 0.0)
                out += std::to_string(r) + "," + std::to_string(c) + "," +
                       format_double(op.mat(r, c)) + "\n";
    return out;
}

}  // namespace oscalg

#endif
