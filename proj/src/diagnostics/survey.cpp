#include "ramsey/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace ramsey::diag {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct CellOut {
    std::vector<double> log10_tr;  // one per evaluation alpha
    double tr_lin = 0.0;
    double min_re = 0.0;
    double max_im = 0.0;
    double rho = 0.0;
    double lambda_L = 0.0;
};

CellOut compute_cell(const CellSample& cell, std::span<const double> eval_alphas, double decision_alpha) {
    const auto d = static_cast<std::size_t>(cell.d);
    Matrix a(d, d);
    Matrix p = Matrix::identity(d);
    std::vector<spectral::Complex> pu(d);
    std::vector<double> u(d);
    for (const auto& w : cell.projected) {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            s += w[i] * w[i];
            for (std::size_t j = 0; j < d; ++j)
                a(i, j) += w[i] * w[j];
        }
        const double inv = 1.0 / std::sqrt(s);
        for (std::size_t i = 0; i < d; ++i)
            u[i] = w[i] * inv;
        for (std::size_t i = 0; i < d; ++i) {
            spectral::Complex t = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                t += p(i, j) * u[j];
            pu[i] = t;
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                p(i, j) -= pu[i] * u[j];
    }

    CellOut out;
    out.tr_lin = (cell.constraint * p).trace().real();
    const auto sp = spectral::eig_general(p);
    out.min_re = std::numeric_limits<double>::infinity();
    for (const auto& lam : sp.eigenvalues) {
        out.min_re = std::min(out.min_re, lam.real());
        out.max_im = std::max(out.max_im, std::abs(lam.imag()));
    }
    const auto eh = spectral::eig_hermitian(a);
    const std::vector<spectral::Complex> ev(eh.values.begin(), eh.values.end());
    for (double alpha : eval_alphas)
        out.log10_tr.push_back(spectral::log_exp_trace(ev, alpha).log10_abs);
    out.rho = spectral::spectral_norm(a);
    out.lambda_L = spectral::tilted_mean(ev, decision_alpha);
    return out;
}

// log10 of the mean of 10^x.
double log10_mean(const std::vector<double>& xs) {
    const double m = *std::max_element(xs.begin(), xs.end());
    if (!std::isfinite(m))
        return m;
    double s = 0.0;
    for (double x : xs)
        s += std::pow(10.0, x - m);
    return m + std::log10(s / static_cast<double>(xs.size()));
}

struct EvalGrid {
    std::vector<double> alphas;
    std::size_t index_of(double a) const {
        return static_cast<std::size_t>(std::lower_bound(alphas.begin(), alphas.end(), a) - alphas.begin());
    }
};

double fd_step(double alpha) { return std::min(1e-3 * std::max(1.0, alpha), 0.5 * alpha); }

EvalGrid evaluation_grid(const DiagnosticsConfig& c) {
    std::set<double> s(c.alpha_grid.begin(), c.alpha_grid.end());
    s.insert(c.decision_alpha());
    if (std::set<double>(c.alpha_grid.begin(), c.alpha_grid.end()).size() == 1) {
        const double a = c.alpha_grid.front();
        s.insert(a - fd_step(a));
        s.insert(a + fd_step(a));
    }
    return {{s.begin(), s.end()}};
}

DiagnosticsRecord aggregate(const DiagnosticsConfig& c, int n, int rank, const EvalGrid& grid,
                            const std::vector<CellOut>& cells, const std::string& last_error) {
    DiagnosticsRecord r;
    r.n = n;
    r.d = c.d;
    r.k = c.k;
    r.rank = rank;
    r.alphas = c.alpha_grid;
    r.seeds_used = static_cast<int>(cells.size());
    if (cells.empty()) {
        r.error = last_error.empty() ? "no seeds evaluated" : last_error;
        r.log10_tr_exp.assign(c.alpha_grid.size(), nan);
        r.log10_tr_exp_decision = r.tr_lin = r.min_re_lambda = r.max_im_lambda = nan;
        r.slope = r.lambda_L = r.rho_H = nan;
        r.critical = Decision::indeterminate;
        return r;
    }
    const double s = static_cast<double>(cells.size());
    std::vector<double> agg(grid.alphas.size());
    for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
        std::vector<double> xs;
        for (const auto& cell : cells)
            xs.push_back(cell.log10_tr[i]);
        agg[i] = log10_mean(xs);
    }
    for (double a : c.alpha_grid)
        r.log10_tr_exp.push_back(agg[grid.index_of(a)]);
    r.log10_tr_exp_decision = agg[grid.index_of(c.decision_alpha())];
    for (const auto& cell : cells) {
        r.tr_lin += cell.tr_lin / s;
        r.min_re_lambda += cell.min_re / s;
        r.max_im_lambda += cell.max_im / s;
        r.rho_H += cell.rho / s;
        r.lambda_L += cell.lambda_L / s;
    }

    std::vector<double> xa, ya;
    for (std::size_t i = 0; i < c.alpha_grid.size(); ++i)
        if (c.alpha_grid[i] <= c.slope_alpha_max) {
            xa.push_back(c.alpha_grid[i]);
            ya.push_back(r.log10_tr_exp[i]);
        }
    if (std::set<double>(xa.begin(), xa.end()).size() < 2) {
        xa = c.alpha_grid;
        ya = r.log10_tr_exp;
    }
    if (std::set<double>(xa.begin(), xa.end()).size() >= 2) {
        r.slope = slope_fit(xa, ya);
    } else {
        const double a = c.alpha_grid.front();
        const double h = fd_step(a);
        r.slope = (agg[grid.index_of(a + h)] - agg[grid.index_of(a - h)]) / (2.0 * h);
    }
    return r;
}

std::vector<CellOut> run_cells(const DiagnosticsConfig& c, const EvalGrid& grid,
                               const std::function<CellSample(std::uint64_t)>& make, std::string& last_error) {
    std::vector<CellOut> cells;
    for (std::uint64_t seed : c.seeds) {
        try {
            cells.push_back(compute_cell(make(seed), grid.alphas, c.decision_alpha()));
        } catch (const spectral::ConvergenceError& e) {
            last_error = std::string(e.what()) + " (seed " + std::to_string(seed) + ")";
        } catch (const std::domain_error& e) {
            last_error = std::string(e.what()) + " (seed " + std::to_string(seed) + ")";
        }
    }
    return cells;
}

}  // namespace

void DiagnosticsConfig::validate() const {
    if (d < 2)
        throw std::invalid_argument("DiagnosticsConfig: d must be >= 2");
    if (d > 64)
        throw std::invalid_argument("DiagnosticsConfig: d must be <= 64");
    if (k < 1)
        throw std::invalid_argument("DiagnosticsConfig: k must be >= 1");
    if (alpha_grid.empty())
        throw std::invalid_argument("DiagnosticsConfig: alpha grid is empty");
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        if (!(alpha_grid[i] > 0.0) || !std::isfinite(alpha_grid[i]))
            throw std::invalid_argument("DiagnosticsConfig: alpha values must be positive");
        if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))
            throw std::invalid_argument("DiagnosticsConfig: alpha grid must be strictly ascending");
    }
    if (seeds.empty())
        throw std::invalid_argument("DiagnosticsConfig: no seeds");
    if (thresholds.decision_alpha && !(*thresholds.decision_alpha > 0.0))
        throw std::invalid_argument("DiagnosticsConfig: decision alpha must be positive");
}

double DiagnosticsConfig::decision_alpha() const {
    return thresholds.decision_alpha.value_or(alpha_grid.back());
}

double DiagnosticsConfig::log10_tau_exp() const {
    if (thresholds.log10_tau_exp)
        return *thresholds.log10_tau_exp;
    const double a = decision_alpha();
    const double kd = static_cast<double>(k) / d;
    if (thresholds.rule == ThresholdRule::mean_field_midpoint)
        return 0.5 * mean_field_trace(d, k, a);
    const double root = k > d ? 1.0 - std::sqrt(static_cast<double>(d) / k) : 0.0;
    const double edge = kd * root * root;
    return 0.5 * (std::log10(static_cast<double>(d)) - a * edge / std::log(10.0));
}

std::string to_string(Decision d) {
    switch (d) {
    case Decision::critical:
        return "true";
    case Decision::not_critical:
        return "false";
    case Decision::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
}

DiagnosticsRecord evaluate_record(const DiagnosticsConfig& config, int n, const Embedding& embedding) {
    config.validate();
    const EvalGrid grid = evaluation_grid(config);
    const int rank = embedding.rank(n);
    std::string last_error;
    const auto cells = run_cells(
        config, grid,
        [&](std::uint64_t seed) {
            return restrict_cell(embedding.base_directions(config.d, config.k, seed, n), rank);
        },
        last_error);
    return aggregate(config, n, rank, grid, cells, last_error);
}

Decision decide_critical(const DiagnosticsRecord& record, const DiagnosticsRecord* left,
                         const DiagnosticsRecord* right, double log10_tau_exp) {
    if (!record.error.empty() || std::isnan(record.log10_tr_exp_decision))
        return Decision::indeterminate;
    if (record.log10_tr_exp_decision > log10_tau_exp)
        return Decision::not_critical;
    auto usable = [](const DiagnosticsRecord* r) { return r != nullptr && r->error.empty(); };
    if (!usable(left) || !usable(right))
        return Decision::indeterminate;
    const bool lin_peak = record.tr_lin > left->tr_lin && record.tr_lin > right->tr_lin;
    const bool rho_peak = record.rho_H > left->rho_H && record.rho_H > right->rho_H;
    return lin_peak && rho_peak ? Decision::critical : Decision::not_critical;
}

std::vector<DiagnosticsRecord> run_diagnostics(const DiagnosticsConfig& config, std::span<const int> n_list,
                                               const Embedding& embedding) {
    config.validate();
    std::vector<int> ns(n_list.begin(), n_list.end());
    std::sort(ns.begin(), ns.end());
    if (std::adjacent_find(ns.begin(), ns.end()) != ns.end())
        throw std::invalid_argument("run_diagnostics: repeated n");
    std::vector<DiagnosticsRecord> records;
    records.reserve(ns.size());
    for (int n : ns)
        records.push_back(evaluate_record(config, n, embedding));
    const double tau = config.log10_tau_exp();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const DiagnosticsRecord* left = i > 0 ? &records[i - 1] : nullptr;
        const DiagnosticsRecord* right = i + 1 < records.size() ? &records[i + 1] : nullptr;
        records[i].critical = decide_critical(records[i], left, right, tau);
    }
    return records;
}

DiagnosticsRecord control_record(const DiagnosticsConfig& config, const comb::EdgeColoring& coloring,
                                 comb::CliqueConstraint constraint, int bulk_n, const Embedding& embedding) {
    config.validate();
    if (comb::has_forbidden_clique(coloring, constraint))
        throw std::invalid_argument("control colouring has a forbidden monochromatic clique");
    // FNV-1a over the edge bits picks the survivor subspace.
    std::uint64_t tag = 0xcbf29ce484222325ULL;
    for (bool b : coloring.bits()) {
        tag ^= b ? 1U : 0U;
        tag *= 0x100000001b3ULL;
    }
    tag ^= static_cast<std::uint64_t>(coloring.vertices());
    const int rank = std::max(1, embedding.rank(bulk_n));
    const EvalGrid grid = evaluation_grid(config);
    std::string last_error;
    const auto cells = run_cells(
        config, grid,
        [&](std::uint64_t seed) {
            return restrict_cell(embedding.base_directions(config.d, config.k, seed, bulk_n), rank, tag);
        },
        last_error);
    DiagnosticsRecord r = aggregate(config, coloring.vertices(), rank, grid, cells, last_error);
    r.critical = decide_critical(r, nullptr, nullptr, config.log10_tau_exp());
    return r;
}

}  // namespace ramsey::diag
