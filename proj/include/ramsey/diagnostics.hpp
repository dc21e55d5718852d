// Random-projector diagnostics: isotropic directions, the accumulator A, the
// linear witness P_lin = prod (I - v v^T), the exponential witness Tr e^{-aA},
// miss-probability bounds, embeddings of the vertex count n, the sweep over n
// and the three-metric decision rule.

#pragma once

#include "ramsey/combinatorics.hpp"
#include "ramsey/spectral.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsey::diag {

using spectral::Matrix;

/// splitmix64 finaliser over (seed, tag): independent per-tag streams.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag);

struct DirectionBatch {
    int d = 0;
    int k = 0;
    std::uint64_t seed = 0;
    /// k rows of length d.
    std::vector<std::vector<double>> vectors;
};

/// Standard Gaussian vectors normalised to unit length (mt19937_64 stream).
DirectionBatch sample_directions(int d, int k, std::uint64_t seed);

/// A = sum_j v_j v_j^T.
Matrix build_accumulator(const DirectionBatch& batch);

/// Ordered product (I - v_1 v_1^T)(I - v_2 v_2^T)...(I - v_k v_k^T).
Matrix linear_product(const DirectionBatch& batch);

struct LinearWitness {
    double tr_lin = 0.0;
    double min_re_lambda = 0.0;
    /// max |Im lambda|.
    double max_im_lambda = 0.0;
};

LinearWitness linear_witness(const DirectionBatch& batch);

/// log10 |Tr e^{-alpha A}| from the spectrum, never underflowing.
double exp_witness(const Matrix& a, double alpha);

/// log10(d) - (alpha k / d) / ln 10.
double mean_field_trace(double d, double k, double alpha);

/// Tr(A e^{-aA}) / Tr(e^{-aA}).
double lyapunov_rate(const Matrix& a, double alpha);

/// Least-squares slope of log10 traces against alpha.
double slope_fit(std::span<const double> alphas, std::span<const double> log10_traces);

struct MissProbabilityModel {
    int k = 100;
    int r = 1;
    int d = 24;

    void validate() const;
};

/// e^{-kr/d}.
double miss_probability(const MissProbabilityModel& m);

/// exp(-mu delta^2 / 2), mu = kr/d, delta = 1 - (r-1)/mu. Matches the
/// tabulated bounds. Throws std::domain_error when delta is outside (0, 1].
double chernoff_miss(const MissProbabilityModel& m);

/// exp(-(kr/2d) [1 - (r-1)/k]^2), the variant as printed.
double chernoff_miss_printed(const MissProbabilityModel& m);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

/// E ||P_lin x||^2 over fresh batches and random unit x; expectation (1-1/d)^k.
MonteCarloEstimate deflation_norm_mc(int d, int k, int trials, std::uint64_t seed);

// ---- embeddings of the vertex count -------------------------------------

/// Orthonormal d x d real basis (columns) from a seeded Gaussian matrix.
std::vector<std::vector<double>> survivor_basis(int d, std::uint64_t seed);

/// Directions for one (n, seed) cell after restriction to the complement of
/// an r-dimensional survivor subspace.
struct CellSample {
    int d = 0;
    int rank = 0;
    /// C = I - Q Q^T (identity when rank = 0).
    Matrix constraint;
    /// Projected directions C g_j, not renormalised; zero-norm ones dropped.
    std::vector<std::vector<double>> projected;
};

class Embedding {
public:
    virtual ~Embedding() = default;
    virtual std::string name() const = 0;
    /// Survivor rank attached to vertex count n.
    virtual int rank(int n) const = 0;
    /// Unrestricted directions g_j for the cell.
    virtual DirectionBatch base_directions(int d, int k, std::uint64_t seed, int n) const = 0;
};

/// Per-n stream hash(seed, n); rank 0 everywhere.
class SeedScheduleEmbedding final : public Embedding {
public:
    std::string name() const override { return "seed-schedule"; }
    int rank(int) const override { return 0; }
    DirectionBatch base_directions(int d, int k, std::uint64_t seed, int n) const override;
};

/// Common directions for every n; survivor rank from an explicit profile.
class ConstraintRestrictedEmbedding final : public Embedding {
public:
    explicit ConstraintRestrictedEmbedding(std::map<int, int> ranks);
    std::string name() const override { return "constraint-restricted"; }
    int rank(int n) const override;
    DirectionBatch base_directions(int d, int k, std::uint64_t seed, int n) const override;

private:
    std::map<int, int> ranks_;
};

/// Ranks from survivor_rank for a small clique constraint (v <= 12).
/// Throws comb::BudgetExceeded if any rank is unknown.
std::map<int, int> rank_profile_from_clique(comb::CliqueConstraint k, std::span<const int> n_list, int d);

inline constexpr std::uint64_t survivor_tag = 0x5355525649564f52ULL;

/// Restrict base directions to the complement of the first `rank` columns of
/// survivor_basis(d, stream_seed(seed, basis_tag)).
CellSample restrict_cell(const DirectionBatch& base, int rank, std::uint64_t basis_tag = survivor_tag);

// ---- sweep ----------------------------------------------------------------

enum class ThresholdRule {
    /// log-midpoint between d e^{-alpha lambda_edge} and 1, lambda_edge the
    /// lower Marchenko-Pastur edge (k/d)(1 - sqrt(d/k))^2.
    spectral_edge_midpoint,
    /// log-midpoint between d e^{-alpha k/d} and 1.
    mean_field_midpoint,
};

struct Thresholds {
    ThresholdRule rule = ThresholdRule::spectral_edge_midpoint;
    /// Overrides the rule when set.
    std::optional<double> log10_tau_exp;
    /// Unused by the local-maximum rule; kept for cross-validated variants.
    std::optional<double> tau_lin;
    /// Defaults to the largest grid value.
    std::optional<double> decision_alpha;
};

struct DiagnosticsConfig {
    int d = 24;
    int k = 100;
    std::vector<double> alpha_grid = {3, 5, 7, 10, 15, 20, 40};
    std::vector<std::uint64_t> seeds = {11, 23, 42, 73, 101, 137, 211, 307, 401, 509};
    Thresholds thresholds;
    /// Slope regression uses grid points with alpha <= this.
    double slope_alpha_max = 20.0;

    void validate() const;
    double decision_alpha() const;
    double log10_tau_exp() const;
};

enum class Decision { not_critical, critical, indeterminate };

std::string to_string(Decision d);

struct DiagnosticsRecord {
    int n = 0;
    int d = 0;
    int k = 0;
    int rank = 0;
    std::vector<double> alphas;
    /// log10 of the seed-averaged trace, one per alpha.
    std::vector<double> log10_tr_exp;
    double log10_tr_exp_decision = 0.0;
    double tr_lin = 0.0;
    double min_re_lambda = 0.0;
    double max_im_lambda = 0.0;
    double slope = 0.0;
    double lambda_L = 0.0;
    double rho_H = 0.0;
    Decision critical = Decision::indeterminate;
    int seeds_used = 0;
    /// Non-empty if every seed failed.
    std::string error;
};

/// One record per n (sorted ascending), seeds shared across n, decisions
/// filled from adjacent entries of the sorted list.
std::vector<DiagnosticsRecord> run_diagnostics(const DiagnosticsConfig& config, std::span<const int> n_list,
                                               const Embedding& embedding);

/// Record for one cell list, without a decision.
DiagnosticsRecord evaluate_record(const DiagnosticsConfig& config, int n, const Embedding& embedding);

/// T_exp <= tau, tr_lin and rho_H strictly above both neighbours. False
/// whenever T_exp > tau; indeterminate if collapsed but a neighbour is missing.
Decision decide_critical(const DiagnosticsRecord& record, const DiagnosticsRecord* left,
                         const DiagnosticsRecord* right, double log10_tau_exp);

/// Record for an explicit good colouring, compared against vertex count
/// bulk_n: same base directions, survivor rank max(1, rank(bulk_n)), survivor
/// subspace seeded by the colouring. Decided alone (never critical unless
/// collapsed). Throws invalid_argument if the colouring has a forbidden clique.
DiagnosticsRecord control_record(const DiagnosticsConfig& config, const comb::EdgeColoring& coloring,
                                 comb::CliqueConstraint constraint, int bulk_n, const Embedding& embedding);

}  // namespace ramsey::diag
