#include "ramsey/cnf.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/diagnostics.hpp"
#include "ramsey/primes.hpp"
#include "ramsey/qsim.hpp"
#include "ramsey/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace ramsey;

namespace {

struct DiagArgs {
    int d = 24;
    int k = 100;
    std::vector<double> alphas;
    std::vector<std::uint64_t> seeds;
    std::vector<int> n_values = {43, 44, 45, 46};
    std::string out_dir = "out";
    std::string control_dir;
    std::string embedding = "seed-schedule";
    std::string ranks;
    std::vector<int> clique;
    std::string threshold_rule = "spectral-edge";
    std::optional<double> tau_exp;
    std::optional<double> decision_alpha;
    int control_m = 5;
    int control_n = 5;
    std::optional<int> control_bulk_n;
};

// "43:3,44:2" -> {43: 3, 44: 2}
std::map<int, int> parse_ranks(const std::string& s) {
    std::map<int, int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--ranks", "expected n:r pairs, got '" + item + "'");
        try {
            out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--ranks", "bad pair '" + item + "'");
        }
    }
    if (out.empty())
        throw CLI::ValidationError("--ranks", "empty profile");
    return out;
}

int run_diag(const DiagArgs& a) {
    diag::DiagnosticsConfig config;
    config.d = a.d;
    config.k = a.k;
    if (!a.alphas.empty())
        config.alpha_grid = a.alphas;
    if (!a.seeds.empty())
        config.seeds = a.seeds;
    config.thresholds.rule = a.threshold_rule == "mean-field" ? diag::ThresholdRule::mean_field_midpoint
                                                              : diag::ThresholdRule::spectral_edge_midpoint;
    config.thresholds.log10_tau_exp = a.tau_exp;
    config.thresholds.decision_alpha = a.decision_alpha;
    config.validate();

    std::unique_ptr<diag::Embedding> embedding;
    if (a.embedding == "seed-schedule") {
        if (!a.ranks.empty() || !a.clique.empty())
            throw CLI::ValidationError("--ranks/--clique", "only valid with --embedding constraint-restricted");
        embedding = std::make_unique<diag::SeedScheduleEmbedding>();
    } else {
        std::map<int, int> ranks;
        if (!a.ranks.empty() && !a.clique.empty())
            throw CLI::ValidationError("--ranks/--clique", "give one rank source, not both");
        if (!a.ranks.empty()) {
            ranks = parse_ranks(a.ranks);
        } else if (a.clique.size() == 2) {
            ranks = diag::rank_profile_from_clique({a.clique[0], a.clique[1]}, a.n_values, a.d);
        } else {
            throw CLI::ValidationError("--embedding", "constraint-restricted needs --ranks or --clique m n");
        }
        embedding = std::make_unique<diag::ConstraintRestrictedEmbedding>(std::move(ranks));
    }

    const auto records = diag::run_diagnostics(config, a.n_values, *embedding);

    // Load the control before writing anything so a bad fixture leaves no output.
    std::optional<comb::EdgeColoring> control;
    if (!a.control_dir.empty())
        control = report::load_control_coloring(a.control_dir);

    fs::create_directories(a.out_dir);
    const fs::path table1 = fs::path(a.out_dir) / "results_table_I.csv";
    report::write_results(records, table1);
    std::printf("wrote %s (%zu n values, %zu alphas)\n", table1.string().c_str(), records.size(),
                config.alpha_grid.size());
    for (const auto& r : records)
        std::printf("  n=%d rank=%d log10 T=%s tr_lin=%s rho_H=%s critical=%s%s%s\n", r.n, r.rank,
                    report::sci(r.log10_tr_exp_decision, 3).c_str(), report::sci(r.tr_lin, 3).c_str(),
                    report::sci(r.rho_H, 3).c_str(), diag::to_string(r.critical).c_str(),
                    r.error.empty() ? "" : " error: ", r.error.c_str());

    if (control) {
        const int bulk_n = a.control_bulk_n.value_or(*std::max_element(a.n_values.begin(), a.n_values.end()));
        const auto bulk = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.n == bulk_n; });
        if (bulk == records.end())
            throw CLI::ValidationError("--control_bulk_n", "must be one of --n_values");
        const auto rec = diag::control_record(config, *control, {a.control_m, a.control_n}, bulk_n, *embedding);
        std::ostringstream s;
        report::write_control_table(rec, *bulk, config.decision_alpha(), s);
        const fs::path table3 = fs::path(a.out_dir) / "results_table_III.csv";
        report::write_file(table3, s.str());
        std::printf("wrote %s (control on %d vertices, critical=%s)\n", table3.string().c_str(),
                    control->vertices(), diag::to_string(rec.critical).c_str());
    }
    return 0;
}

int run_cnf(int N, int m, int n, const std::string& out, bool map) {
    std::ofstream sink(out, std::ios::binary | std::ios::trunc);
    if (!sink)
        throw std::runtime_error("cannot open " + out);
    const auto summary = cnf::stream_cnf(N, m, n, sink);
    sink.close();
    if (!sink)
        throw std::runtime_error("write failed: " + out);
    std::printf("wrote %s: %llu vars, %llu clauses\n", out.c_str(),
                static_cast<unsigned long long>(summary.var_count),
                static_cast<unsigned long long>(summary.clause_count));
    if (map) {
        const std::string map_path = out + ".map";
        std::ostringstream s;
        cnf::write_map(N, s);
        report::write_file(map_path, s.str());
        std::printf("wrote %s\n", map_path.c_str());
    }
    return 0;
}

int run_glue(int m, int n, int vmax) {
    const comb::CliqueConstraint k{m, n};
    k.validate();
    if (vmax < 1 || vmax > comb::max_canonical_vertices)
        throw CLI::ValidationError("--vmax", "must lie in [1, 12]");
    std::vector<comb::EdgeColoring> frontier{comb::EdgeColoring(1)};
    if (comb::has_forbidden_clique(frontier[0], k))
        frontier.clear();
    std::printf("v,classes\n1,%zu\n", frontier.size());
    for (int v = 2; v <= vmax; ++v) {
        frontier = comb::glue_frontier(frontier, k);
        std::printf("%d,%zu\n", v, frontier.size());
        if (frontier.empty()) {
            std::printf("no good colouring of K_%d, so R(%d,%d) = %d\n", v, m, n, v);
            break;
        }
    }
    return 0;
}

int run_prime(int n_diag, std::optional<std::uint64_t> lo, std::optional<std::uint64_t> hi,
              const std::string& rule_name, int max_distinct, int max_exponent) {
    const std::map<int, std::pair<std::uint64_t, std::uint64_t>> windows = {{5, {43, 46}}, {6, {102, 160}},
                                                                            {7, {205, 492}}};
    std::vector<int> diags;
    if (n_diag > 0)
        diags.push_back(n_diag);
    else
        diags = {6, 7};
    const auto rule = rule_name == "distinct-first" ? primes::SelectionRule::distinct_first()
                                                    : primes::SelectionRule::standard();
    primes::PSQuery q;
    q.max_distinct = max_distinct;
    q.max_exponent = max_exponent;
    for (int nd : diags) {
        std::uint64_t l = 0, h = 0;
        if (lo && hi) {
            l = *lo;
            h = *hi;
        } else if (const auto it = windows.find(nd); it != windows.end()) {
            std::tie(l, h) = it->second;
        } else {
            throw CLI::ValidationError("--lo/--hi", "no default window for this n");
        }
        const auto res = primes::persistence_scan(nd, l, h, q, rule);
        std::printf("R(%d,%d) window [%llu,%llu]\nk,selected\n", nd, nd, static_cast<unsigned long long>(l),
                    static_cast<unsigned long long>(h));
        for (const auto& s : res.steps)
            std::printf("%d,%s\n", s.k, s.value ? std::to_string(*s.value).c_str() : "-");
        std::printf("persistent value %llu for k=%d..%d\n\n", static_cast<unsigned long long>(res.value),
                    res.plateau_first_k, res.plateau_last_k);
    }
    return 0;
}

std::vector<spectral::Complex> random_unit(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<spectral::Complex> v(n);
    double s = 0.0;
    for (auto& z : v) {
        z = {g(rng), g(rng)};
        s += std::norm(z);
    }
    for (auto& z : v)
        z /= std::sqrt(s);
    return v;
}

double block_error(const spectral::Matrix& got, const spectral::Matrix& want) {
    double e = 0.0;
    for (std::size_t i = 0; i < want.rows(); ++i)
        for (std::size_t j = 0; j < want.cols(); ++j)
            e = std::max(e, std::abs(got(i, j) - want(i, j)));
    return e;
}

int run_qsim(std::uint64_t seed, int probes) {
    using spectral::Complex;
    using spectral::Matrix;
    std::mt19937_64 rng(seed);
    int failures = 0;
    auto line = [&](bool ok, const char* name, const std::string& detail) {
        std::printf("%s  %-18s %s\n", ok ? "ok  " : "FAIL", name, detail.c_str());
        failures += ok ? 0 : 1;
    };
    char buf[160];

    {
        const auto u = random_unit(4, rng), v = random_unit(4, rng);
        const auto enc = qsim::block_encode_rank1(u, v);
        const double err = block_error(enc.block(), spectral::outer(u, v) * Complex(0.5));
        std::snprintf(buf, sizeof buf, "max |block - |u><v|/2| = %.2e", err);
        line(err < 1e-7, "rank1", buf);
    }
    {
        std::vector<qsim::LcuTerm> terms;
        Matrix want(4, 4);
        std::uniform_real_distribution<double> w(-1.0, 1.0);
        double total = 0.0;
        for (int j = 0; j < 3; ++j) {
            qsim::LcuTerm t{Complex(w(rng), w(rng)), random_unit(4, rng), random_unit(4, rng)};
            want += spectral::outer(t.u, t.v) * t.weight;
            total += std::abs(t.weight);
            terms.push_back(std::move(t));
        }
        const auto enc = qsim::lcu_block_encode(terms);
        const double err = block_error(enc.block() * Complex(enc.alpha0), want);
        std::snprintf(buf, sizeof buf, "alpha0 = %.4f (2W = %.4f), max error %.2e", enc.alpha0, 2 * total, err);
        line(err < 1e-7, "lcu", buf);
    }
    {
        const auto batch = diag::sample_directions(8, 16, rng());
        const Matrix a = diag::build_accumulator(batch);
        const double alpha = 0.5;
        const double want = std::pow(10.0, diag::exp_witness(a, alpha));
        const auto est = qsim::hutchinson_trace(qsim::encode_exp(a, alpha), probes, rng());
        const double z = std::abs(est.estimate - want) / est.std_error;
        std::snprintf(buf, sizeof buf, "estimate %.5f +- %.5f vs %.5f (%.2f se)", est.estimate, est.std_error, want, z);
        line(z < 3.0, "hutchinson", buf);
    }
    {
        int hits = 0;
        const int instances = 20;
        for (int i = 0; i < instances; ++i) {
            Matrix a(3, 3);
            std::normal_distribution<double> g(0.0, 1.0);
            for (auto& z : a.data())
                z = {g(rng), g(rng)};
            const double sigma = spectral::dilation_spectrum(a).spectrum.singular_values.front();
            const double t = 2.0 / sigma;
            const auto pe = qsim::phase_estimate_dilation(a, 6, t);
            hits += std::abs(pe.estimate - sigma) <= pe.resolution ? 1 : 0;
        }
        std::snprintf(buf, sizeof buf, "%d/%d within one bin of sigma_max", hits, instances);
        line(hits == instances, "phase-estimation", buf);
    }
    return failures == 0 ? 0 : 1;
}

int run_estimate(const std::vector<int>& ns) {
    std::printf("n,edge_qubits,total_qubits\n");
    for (int n : ns) {
        const auto c = comb::qubit_cost(n);
        std::printf("%d,%llu,%llu\n", n, static_cast<unsigned long long>(c.edges),
                    static_cast<unsigned long long>(c.total));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey toolkit: projector diagnostics, CNF export, glue-prune search, prime-sequence scans"};
    app.require_subcommand(1);

    DiagArgs da;
    auto* diag_cmd = app.add_subcommand("diag", "projector diagnostics over n, writes results_table_I.csv");
    diag_cmd->add_option("--d", da.d, "module dimension")->check(CLI::Range(2, 64));
    diag_cmd->add_option("--k", da.k, "number of random directions")->check(CLI::Range(1, 100000));
    diag_cmd->add_option("--alpha", da.alphas, "alpha grid (repeatable)")->check(CLI::PositiveNumber);
    diag_cmd->add_option("--seed", da.seeds, "seeds (repeatable)");
    diag_cmd->add_option("--n_values", da.n_values, "vertex counts")->delimiter(',');
    diag_cmd->add_option("--out_dir", da.out_dir, "output directory");
    diag_cmd->add_option("--am46_dir,--control_dir", da.control_dir, "directory with am46_red.csv and am46_blue.csv")
        ->check(CLI::ExistingDirectory);
    diag_cmd->add_option("--embedding", da.embedding, "how n enters the ensemble")
        ->check(CLI::IsMember({"seed-schedule", "constraint-restricted"}));
    diag_cmd->add_option("--ranks", da.ranks, "survivor ranks as n:r,n:r,...");
    diag_cmd->add_option("--clique", da.clique, "derive ranks from clique sizes m n (small n only)")
        ->expected(2);
    diag_cmd->add_option("--threshold_rule", da.threshold_rule, "collapse threshold rule")
        ->check(CLI::IsMember({"spectral-edge", "mean-field"}));
    diag_cmd->add_option("--tau_exp", da.tau_exp, "log10 collapse threshold (overrides the rule)");
    diag_cmd->add_option("--decision_alpha", da.decision_alpha, "alpha at which decisions are made");
    diag_cmd->add_option("--control_m", da.control_m, "red clique size for the control");
    diag_cmd->add_option("--control_n", da.control_n, "blue clique size for the control");
    diag_cmd->add_option("--control_bulk_n", da.control_bulk_n, "bulk n the control is compared with");

    int cnf_N = 0, cnf_m = 0, cnf_n = 0;
    std::string cnf_out;
    bool cnf_map = false;
    auto* cnf_cmd = app.add_subcommand("cnf", "DIMACS CNF for a good colouring of K_N");
    cnf_cmd->add_option("-N", cnf_N, "vertex count")->required()->check(CLI::Range(2, 64));
    cnf_cmd->add_option("-m", cnf_m, "red clique size")->required()->check(CLI::Range(2, 64));
    cnf_cmd->add_option("-n", cnf_n, "blue clique size")->required()->check(CLI::Range(2, 64));
    cnf_cmd->add_option("-o", cnf_out, "output .cnf path")->required();
    cnf_cmd->add_flag("--map", cnf_map, "also write <out>.map with 'var i j' lines");

    int glue_m = 3, glue_n = 3, glue_vmax = 6;
    auto* glue_cmd = app.add_subcommand("glue", "glue-and-prune class counts per v");
    glue_cmd->add_option("-m", glue_m, "red clique size")->check(CLI::Range(1, 12));
    glue_cmd->add_option("-n", glue_n, "blue clique size")->check(CLI::Range(1, 12));
    glue_cmd->add_option("--vmax", glue_vmax, "largest v");

    int prime_n = 0, prime_distinct = 3, prime_exponent = 3;
    std::optional<std::uint64_t> prime_lo, prime_hi;
    std::string prime_rule = "standard";
    auto* prime_cmd = app.add_subcommand("prime", "persistence scans over growing prime bases");
    prime_cmd->add_option("--n", prime_n, "diagonal index (default: 6 and 7)")->check(CLI::Range(2, 32));
    prime_cmd->add_option("--lo", prime_lo, "window lower end");
    prime_cmd->add_option("--hi", prime_hi, "window upper end");
    prime_cmd->add_option("--rule", prime_rule, "ranking order")
        ->check(CLI::IsMember({"standard", "distinct-first"}));
    prime_cmd->add_option("--max_distinct", prime_distinct)->check(CLI::Range(1, 16));
    prime_cmd->add_option("--max_exponent", prime_exponent)->check(CLI::Range(1, 64));

    std::uint64_t qsim_seed = 7;
    int qsim_probes = 10000;
    auto* qsim_cmd = app.add_subcommand("qsim", "simulator checks against the classical kernels");
    qsim_cmd->add_option("--seed", qsim_seed);
    qsim_cmd->add_option("--probes", qsim_probes, "Hutchinson probes")->check(CLI::Range(2, 1000000));

    std::vector<int> est_n = {44, 45, 46};
    auto* est_cmd = app.add_subcommand("estimate", "Grover qubit counts");
    est_cmd->add_option("--n", est_n, "vertex counts")->delimiter(',')->check(CLI::Range(2, 100000));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diag_cmd)
            return run_diag(da);
        if (*cnf_cmd)
            return run_cnf(cnf_N, cnf_m, cnf_n, cnf_out, cnf_map);
        if (*glue_cmd)
            return run_glue(glue_m, glue_n, glue_vmax);
        if (*prime_cmd) {
            if (prime_lo.has_value() != prime_hi.has_value())
                throw CLI::ValidationError("--lo/--hi", "give both or neither");
            return run_prime(prime_n, prime_lo, prime_hi, prime_rule, prime_distinct, prime_exponent);
        }
        if (*qsim_cmd)
            return run_qsim(qsim_seed, qsim_probes);
        if (*est_cmd)
            return run_estimate(est_n);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
