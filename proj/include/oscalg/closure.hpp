#ifndef OSCALG_CLOSURE_HPP
#define OSCALG_CLOSURE_HPP

#include <Eigen/Dense>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oscalg/operators.hpp"

namespace oscalg {

struct closure_config {
    int truncation = 128;
    int cap = 12;
    double tol = 1e-8;
    int max_depth = 8;

    void check() const
    {
        if (cap < 4) fail(errc::config_invalid, "cap must be >= 4");
        if (!(tol > 0 && tol < 1e-3)) fail(errc::config_invalid, "tol must lie in (0, 1e-3)");
        if (max_depth < 1) fail(errc::config_invalid, "max_depth must be >= 1");
        if (truncation < 2 * (cap + max_depth + 2))
            fail(errc::config_invalid,
                 "truncation must be >= 2*(cap + max_depth + 2) = " +
                     std::to_string(2 * (cap + max_depth + 2)));
    }

    // Leading block untouched by truncation artifacts at any allowed depth.
    int window() const { return truncation - (2 * max_depth + 2); }
};

enum class closure_status { finite, exceeded_cap, depth_exhausted };

inline const char* status_name(closure_status s)
{
    switch (s) {
        case closure_status::finite:          return "Finite";
        case closure_status::exceeded_cap:    return "ExceededCap";
        case closure_status::depth_exhausted: return "DepthExhausted";
    }
    return "?";
}

struct closure_report {
    closure_status status = closure_status::finite;
    int dim = 0;  // span dimension reached (== basis_labels.size())
    int cap = 0;
    std::vector<std::string> basis_labels;
    // c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k; filled when finite.
    std::vector<std::vector<std::vector<double>>> structure_constants;
    double max_projection_residual = 0;
};

namespace detail {

struct span_element {
    std::string label;
    int depth = 0;
    Eigen::MatrixXd full;  // untruncated-window arithmetic uses the full matrix
};

class closure_engine {
public:
    closure_engine(const recurrence_system& sys, const closure_config& config)
        : config_(config), window_(config.window())
    {
        config_.check();
        for (int n = 0; n < config_.truncation; ++n)
            if (seq_eval(sys.b2, n) <= 0)
                fail(errc::non_positive_b2,
                     sys.label + ": b^2 not positive at n=" + std::to_string(n));

        seed("I", build_operator(operator_kind::identity, sys, config_.truncation));
        seed("A", build_operator(operator_kind::lowering, sys, config_.truncation));
        seed("Adag", build_operator(operator_kind::raising, sys, config_.truncation));
        seed("N", build_operator(operator_kind::number, sys, config_.truncation));
    }

    closure_report run()
    {
        closure_report report;
        report.cap = config_.cap;

        // Breadth-first fixpoint sweeps over ordered pairs (older, newer).
        // A pair's bracket never changes, so each pair is evaluated once.
        while (!stopped_) {
            const int count = static_cast<int>(elements_.size());
            bool added = false;
            for (int i = 0; i < count && !stopped_; ++i) {
                for (int j = i + 1; j < count && !stopped_; ++j) {
                    if (!processed_.insert({i, j}).second) continue;
                    added |= consider(i, j, report);
                }
            }
            if (!stopped_ && !added) {
                report.status = closure_status::finite;
                stopped_ = true;
            }
        }

        report.dim = static_cast<int>(elements_.size());
        for (const auto& e : elements_) report.basis_labels.push_back(e.label);
        if (report.status == closure_status::finite) solve_structure_constants(report);
        report.max_projection_residual = max_rejected_;
        return report;
    }

private:
    void seed(const char* label, truncated_operator op)
    {
        admit(label, 0, std::move(op.mat));
    }

    Eigen::VectorXd masked_vec(const Eigen::MatrixXd& full) const
    {
        Eigen::MatrixXd block = full.topLeftCorner(window_, window_);
        return Eigen::Map<Eigen::VectorXd>(block.data(), window_ * window_);
    }

    // Scale-invariant admission: normalize by the max-abs entry, project on
    // the current orthonormal span twice, admit when the relative remainder
    // clears the tolerance.
    bool admit(std::string label, int depth, Eigen::MatrixXd full)
    {
        Eigen::VectorXd v = masked_vec(full);
        const double scale = v.cwiseAbs().maxCoeff();
        if (scale == 0.0) return false;
        v /= scale;
        const double norm_in = v.norm();
        Eigen::VectorXd r = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : ortho_) r -= q.dot(r) * q;
        const double rel = r.norm() / norm_in;
        if (rel < config_.tol) {
            max_rejected_ = std::max(max_rejected_, rel);
            return false;
        }
        ortho_.push_back(r / r.norm());
        elements_.push_back({std::move(label), depth, std::move(full)});
        return true;
    }

    bool consider(int i, int j, closure_report& report)
    {
        const auto& x = elements_[static_cast<size_t>(i)];
        const auto& y = elements_[static_cast<size_t>(j)];
        const int depth = std::max(x.depth, y.depth) + 1;
        Eigen::MatrixXd bracket = x.full * y.full - y.full * x.full;
        std::string label = "[" + x.label + "," + y.label + "]";

        // Probe the candidate before committing so an over-deep new
        // direction is reported as depth exhaustion, not silently dropped.
        if (depth > config_.max_depth) {
            if (is_new_direction(bracket)) {
                report.status = closure_status::depth_exhausted;
                stopped_ = true;
            }
            return false;
        }
        if (!admit(std::move(label), depth, std::move(bracket))) return false;
        if (static_cast<int>(elements_.size()) > config_.cap) {
            report.status = closure_status::exceeded_cap;
            stopped_ = true;
        }
        return true;
    }

    bool is_new_direction(const Eigen::MatrixXd& full) const
    {
        Eigen::VectorXd v = masked_vec(full);
        const double scale = v.cwiseAbs().maxCoeff();
        if (scale == 0.0) return false;
        v /= scale;
        const double norm_in = v.norm();
        Eigen::VectorXd r = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : ortho_) r -= q.dot(r) * q;
        return r.norm() / norm_in >= config_.tol;
    }

    // Least squares of every pairwise bracket against the masked basis,
    // solved once over a column-normalized QR factorization.
    void solve_structure_constants(closure_report& report)
    {
        const int dim = static_cast<int>(elements_.size());
        Eigen::MatrixXd basis(window_ * window_, dim);
        std::vector<double> col_norm(static_cast<size_t>(dim));
        for (int k = 0; k < dim; ++k) {
            Eigen::VectorXd v = masked_vec(elements_[static_cast<size_t>(k)].full);
            col_norm[static_cast<size_t>(k)] = v.norm();
            basis.col(k) = v / col_norm[static_cast<size_t>(k)];
        }
        const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);

        report.structure_constants.assign(
            static_cast<size_t>(dim),
            std::vector<std::vector<double>>(static_cast<size_t>(dim),
                                             std::vector<double>(static_cast<size_t>(dim), 0.0)));
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                const Eigen::MatrixXd bracket =
                    elements_[static_cast<size_t>(i)].full * elements_[static_cast<size_t>(j)].full -
                    elements_[static_cast<size_t>(j)].full * elements_[static_cast<size_t>(i)].full;
                const Eigen::VectorXd w = masked_vec(bracket);
                const Eigen::VectorXd c = qr.solve(w);
                const double wnorm = w.norm();
                if (wnorm > 0.0) {
                    const double rel = (basis * c - w).norm() / wnorm;
                    max_rejected_ = std::max(max_rejected_, rel);
                }
                for (int k = 0; k < dim; ++k) {
                    const double value = c[k] / col_norm[static_cast<size_t>(k)];
                    report.structure_constants[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                              [static_cast<size_t>(k)] = value;
                    report.structure_constants[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                              [static_cast<size_t>(k)] = -value;
                }
            }
        }
    }

    closure_config config_;
    int window_;
    std::vector<span_element> elements_;
    std::vector<Eigen::VectorXd> ortho_;
    std::set<std::pair<int, int>> processed_;
    double max_rejected_ = 0;
    bool stopped_ = false;
};

}  // namespace detail

// Empirical Lie-closure probe: grow the span of {I, A, Adag, N} under
// repeated commutators until it closes, exceeds the dimension cap, or only
// over-deep brackets still produce new directions.
inline closure_report lie_closure(const recurrence_system& sys, const closure_config& config = {})
{
    return detail::closure_engine(sys, config).run();
}

// Structure constants of a finite closure; recomputed deterministically from
// the same inputs that produced the report.
inline std::vector<std::vector<std::vector<double>>> structure_constants(
    const closure_report& report, const recurrence_system& sys, const closure_config& config = {})
{
    if (report.status != closure_status::finite)
        fail(errc::not_finite, "structure constants exist only for a finite closure");
    if (!report.structure_constants.empty()) return report.structure_constants;
    return lie_closure(sys, config).structure_constants;
}

}  // namespace oscalg

#endif
