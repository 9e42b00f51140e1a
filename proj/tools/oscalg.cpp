// Command-line surface over the oscillator-algebra library: exact
// classification, empirical Lie-closure probes, operator-identity
// verification, moment conversions, matrix dumps, and combined reports.

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "oscalg/io.hpp"

namespace {

using namespace oscalg;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_verify_failure = 3;

struct run_config {
    std::string family_spec;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> lambda;
    int truncation = 128;
    int cap = 12;
    double tol = 1e-8;
    int probe = 64;
    int moment_order = 12;
    std::string format = "json";
    std::string op_name;
};

void add_family_options(CLI::App* cmd, run_config& cfg)
{
    cmd->add_option("family", cfg.family_spec,
                    "built-in family (laguerre, jacobi, hermite_prob, beckers) "
                    "or path to a custom-family JSON file")
        ->required();
    cmd->add_option("--alpha", cfg.alpha, "family parameter alpha, rational \"p/q\"");
    cmd->add_option("--beta", cfg.beta, "family parameter beta, rational \"p/q\"");
    cmd->add_option("--lambda", cfg.lambda, "deformation parameter lambda, rational \"p/q\"");
}

void add_format_option(CLI::App* cmd, run_config& cfg)
{
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
}

rational require_param(const std::optional<std::string>& value, const char* name,
                       const char* family)
{
    if (!value)
        fail(errc::invalid_parameter,
             std::string(family) + " requires --" + name);
    return parse_rational(*value);
}

recurrence_system resolve_family(const run_config& cfg)
{
    const std::string& spec = cfg.family_spec;
    if (spec == "laguerre") return laguerre(require_param(cfg.alpha, "alpha", "laguerre"));
    if (spec == "jacobi")
        return jacobi(require_param(cfg.alpha, "alpha", "jacobi"),
                      require_param(cfg.beta, "beta", "jacobi"));
    if (spec == "hermite_prob") return hermite_prob();
    if (spec == "beckers") return beckers(require_param(cfg.lambda, "lambda", "beckers"));
    if (std::filesystem::exists(spec)) return load_family_file(spec);
    fail(errc::unknown_family, "no built-in family or file named '" + spec + "'");
}

void emit(const json& doc, const run_config& cfg)
{
    if (cfg.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    if (cfg.format == "text" || cfg.format == "csv") {
        const char sep = (cfg.format == "csv") ? ',' : '=';
        // Flat key/value rendering; arrays and objects stay JSON-encoded.
        for (const auto& [key, value] : doc.items()) {
            if (value.is_string())
                std::cout << key << sep << value.get<std::string>() << "\n";
            else
                std::cout << key << sep << value.dump() << "\n";
        }
    }
}

int cmd_classify(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    validate(sys, cfg.probe);
    emit(classification_to_json(classify(sys, cfg.probe)), cfg);
    return exit_ok;
}

int cmd_closure(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    closure_config config;
    config.truncation = cfg.truncation;
    config.cap = cfg.cap;
    config.tol = cfg.tol;
    emit(closure_to_json(lie_closure(sys, config)), cfg);
    return exit_ok;
}

int cmd_verify(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    const commutation_report commutation = verify_commutation(sys, cfg.truncation, cfg.tol);
    const std::array<double, 6> points = {-0.9, -0.4, 0.3, 0.5, 1.1, 3.7};
    const double position = verify_position(sys, cfg.truncation, points);

    json doc = commutation_to_json(commutation);
    doc["position_residual"] = position;
    const bool pass = commutation.pass && position <= cfg.tol;
    doc["pass"] = pass;
    emit(doc, cfg);
    return pass ? exit_ok : exit_verify_failure;
}

int cmd_rec2moments(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    emit(moments_to_json(moments_from_recurrence(sys, cfg.moment_order)), cfg);
    return exit_ok;
}

int cmd_moments2rec(const std::string& path, const run_config& cfg)
{
    const moment_table mom = moments_from_json(parse_json_file(path));
    const recovered_recurrence rec = moments_to_recurrence(mom);
    json doc;
    doc["a"] = rationals_to_json(rec.a);
    doc["b2"] = rationals_to_json(rec.b2);
    emit(doc, cfg);
    return exit_ok;
}

int cmd_dump_op(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    static const std::array<operator_kind, 11> kinds = {
        operator_kind::lowering,  operator_kind::raising,   operator_kind::sym_lowering,
        operator_kind::sym_raising, operator_kind::number,  operator_kind::identity,
        operator_kind::diag_a,    operator_kind::b_down,    operator_kind::b_up,
        operator_kind::diag_diff, operator_kind::position};
    std::optional<operator_kind> kind;
    for (const auto k : kinds)
        if (cfg.op_name == kind_name(k)) kind = k;
    if (!kind)
        fail(errc::invalid_parameter,
             "unknown operator '" + cfg.op_name +
                 "' (expected one of A, Adag, As, Asdag, N, I, D, BofN, BofNplusI, fofN, Q)");
    std::cout << operator_to_csv(build_operator(*kind, sys, cfg.truncation));
    return exit_ok;
}

int cmd_report(const run_config& cfg)
{
    const recurrence_system sys = resolve_family(cfg);
    validate(sys, cfg.probe);

    const classification_result cls = classify(sys, cfg.probe);
    closure_config config;
    config.truncation = cfg.truncation;
    config.cap = cfg.cap;
    config.tol = cfg.tol;
    const closure_report probe = lie_closure(sys, config);
    const commutation_report commutation = verify_commutation(sys, std::min(cfg.truncation, 64));

    json doc;
    doc["family"] = sys.label;
    doc["classification"] = classification_to_json(cls);
    doc["closure"] = closure_to_json(probe);
    doc["commutators"] = commutation_to_json(commutation);
    try {
        const int gram_order = 8;
        const moment_table mom = moments_from_recurrence(sys, 2 * gram_order);
        doc["gram_deviation"] = orthonormality_gram(sys, mom, gram_order);
    } catch (const error&) {
        doc["gram_deviation"] = nullptr;  // irrational diagonal scale: no exact monic table
    }

    const bool agreement = (cls.finite && probe.status == closure_status::finite) ||
                           (!cls.finite && probe.status == closure_status::exceeded_cap);
    json summary;
    summary["prediction"] = cls.finite ? "Finite" : "Infinite";
    summary["probe"] = status_name(probe.status);
    if (probe.status == closure_status::finite)
        summary["dim"] = probe.dim;
    else
        summary["dim"] = ">=" + std::to_string(probe.cap + 1);
    summary["agreement"] = agreement;
    doc["summary"] = summary;
    emit(doc, cfg);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"oscillator-like algebras from orthogonal-polynomial recurrences"};
    app.require_subcommand(1);

    run_config cfg;
    std::string moments_path;

    CLI::App* c_classify = app.add_subcommand("classify", "exact finite-dimension verdict");
    add_family_options(c_classify, cfg);
    c_classify->add_option("--probe", cfg.probe, "validation probe range")->capture_default_str();
    add_format_option(c_classify, cfg);

    CLI::App* c_closure = app.add_subcommand("closure", "empirical Lie-closure probe");
    add_family_options(c_closure, cfg);
    c_closure->add_option("--truncation", cfg.truncation)->capture_default_str();
    c_closure->add_option("--cap", cfg.cap)->capture_default_str();
    c_closure->add_option("--tol", cfg.tol)->capture_default_str();
    add_format_option(c_closure, cfg);

    CLI::App* c_verify = app.add_subcommand("verify", "operator-identity residuals");
    add_family_options(c_verify, cfg);
    c_verify->add_option("--truncation", cfg.truncation)->capture_default_str();
    c_verify->add_option("--tol", cfg.tol)->capture_default_str();
    add_format_option(c_verify, cfg);

    CLI::App* c_r2m = app.add_subcommand("rec2moments", "moments of a recurrence system");
    add_family_options(c_r2m, cfg);
    c_r2m->add_option("-K,--order", cfg.moment_order, "highest moment index")
        ->capture_default_str();
    add_format_option(c_r2m, cfg);

    CLI::App* c_m2r = app.add_subcommand("moments2rec", "recurrence coefficients from moments");
    c_m2r->add_option("moments", moments_path, "path to a moments JSON file")->required();
    add_format_option(c_m2r, cfg);

    CLI::App* c_dump = app.add_subcommand("dump-op", "CSV dump of a truncated operator");
    add_family_options(c_dump, cfg);
    c_dump->add_option("--op", cfg.op_name, "operator tag (A, Adag, ..., Q)")->required();
    c_dump->add_option("--truncation", cfg.truncation)->capture_default_str();

    CLI::App* c_report = app.add_subcommand("report", "combined classification/closure document");
    add_family_options(c_report, cfg);
    c_report->add_option("--truncation", cfg.truncation)->capture_default_str();
    c_report->add_option("--cap", cfg.cap)->capture_default_str();
    c_report->add_option("--tol", cfg.tol)->capture_default_str();
    c_report->add_option("--probe", cfg.probe)->capture_default_str();
    add_format_option(c_report, cfg);

    try {
        app.parse(argc, argv);
        if (c_classify->parsed()) return cmd_classify(cfg);
        if (c_closure->parsed()) return cmd_closure(cfg);
        if (c_verify->parsed()) return cmd_verify(cfg);
        if (c_r2m->parsed()) return cmd_rec2moments(cfg);
        if (c_m2r->parsed()) return cmd_moments2rec(moments_path, cfg);
        if (c_dump->parsed()) return cmd_dump_op(cfg);
        if (c_report->parsed()) return cmd_report(cfg);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
