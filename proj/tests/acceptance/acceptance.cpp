// One line per acceptance criterion; exit status 1 if any fails.

#include "ramsey/cnf.hpp"
#include "ramsey/combinatorics.hpp"
#include "ramsey/diagnostics.hpp"
#include "ramsey/primes.hpp"
#include "ramsey/qsim.hpp"
#include "ramsey/report.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace ramsey;
namespace fs = std::filesystem;
using spectral::Complex;
using spectral::Matrix;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

int failures = 0;

void criterion(int id, const char* name, double budget_ms, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail += std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > budget_ms)
        o.require(false, fmt("runtime %.1f ms over budget %.0f ms", ms, budget_ms));
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %2d %-34s %9.3f ms  %s\n", o.ok ? "PASS" : "FAIL", id, name, ms, o.detail.c_str());
    std::fflush(stdout);
}

bool rel_close(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

// Mantissa and exponent at s significant figures, as printed.
std::string sig(double x, int s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", s - 1, x);
    return buf;
}

// Independent good-colouring check: every colouring, every vertex subset.
bool naive_good_exists(int v, int m, int n) {
    const int e = v * (v - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            edges.emplace_back(i, j);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << e); ++x) {
        bool bad = false;
        for (std::uint32_t s = 0; s < (1u << v) && !bad; ++s) {
            const int size = __builtin_popcount(s);
            if (size != m && size != n)
                continue;
            bool red = true, blue = true;
            for (int k = 0; k < e; ++k) {
                const auto [i, j] = edges[static_cast<std::size_t>(k)];
                if ((s >> i & 1u) && (s >> j & 1u)) {
                    const bool r = x >> k & 1u;
                    red = red && r;
                    blue = blue && !r;
                }
            }
            bad = (size == m && red) || (size == n && blue);
        }
        if (!bad)
            return true;
    }
    return false;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// diag (planted profile and control) plus cnf into dir.
void pipeline(const fs::path& dir) {
    fs::create_directories(dir);
    diag::DiagnosticsConfig config;
    diag::ConstraintRestrictedEmbedding embedding({{43, 3}, {44, 2}, {45, 0}, {46, 1}});
    const std::vector<int> ns{43, 44, 45, 46};
    const auto records = diag::run_diagnostics(config, ns, embedding);
    report::write_results(records, dir / "results_table_I.csv");
    const auto control = report::load_control_coloring(FIXTURE_DIR "/control");
    const auto rec = diag::control_record(config, control, {5, 5}, 46, embedding);
    std::ostringstream t3;
    report::write_control_table(rec, records.back(), config.decision_alpha(), t3);
    report::write_file(dir / "results_table_III.csv", t3.str());
    {
        std::ofstream out(dir / "r55_N12.cnf", std::ios::binary);
        cnf::stream_cnf(12, 5, 5, out);
    }
    std::ostringstream map;
    cnf::write_map(12, map);
    report::write_file(dir / "r55_N12.cnf.map", map.str());
}

}  // namespace

int main() {
    criterion(1, "miss-bound formulas", 1.0, [](Outcome& o) {
        const double a = diag::miss_probability({100, 1, 24});
        const double b = diag::miss_probability({400, 1, 24});
        o.require(rel_close(a, 1.55e-2, 0.01), fmt("k=100: %.4e", a));
        o.require(rel_close(b, 5.7e-8, 0.02), fmt("k=400: %.4e", b));
        o.detail += fmt("%.3e, %.3e", a, b);
    });

    criterion(2, "Chernoff table", 1.0, [](Outcome& o) {
        const int rs[] = {1, 2, 4, 6, 8, 10, 12};
        const char* printed[] = {"1.2e-01", "4.0e-02", "3.7e-03", "3.4e-04", "3.0e-05", "2.7e-06", "2.5e-07"};
        for (int i = 0; i < 7; ++i) {
            const std::string got = sig(diag::chernoff_miss({100, rs[i], 24}), 2);
            o.require(got == printed[i], "r=" + std::to_string(rs[i]) + " gives " + got);
        }
        if (o.ok)
            o.detail = "7/7 rows";
    });

    criterion(3, "mean-field traces", 1.0, [](Outcome& o) {
        const double a = diag::mean_field_trace(32, 180, 40);
        const double b = diag::mean_field_trace(32, 220, 40);
        const double c = diag::mean_field_trace(24, 400, 40);
        auto mantissa = [](double l) { return std::pow(10.0, l - std::floor(l)); };
        o.require(std::floor(a) == -97 && sig(mantissa(a), 3) == "6.15e+00", fmt("(32,180): log10 %.4f", a));
        o.require(std::floor(b) == -118 && sig(mantissa(b), 3) == "1.19e+00", fmt("(32,220): log10 %.4f", b));
        o.require(std::abs(c - std::log10(2.4e-289)) < 1.0, fmt("(24,400): log10 %.4f", c));
        o.detail += fmt("%.2fe%.0f", mantissa(c), std::floor(c)) + " vs 2.4e-289";
    });

    criterion(4, "deflation law", 10000.0, [](Outcome& o) {
        const int cases[][2] = {{24, 100}, {32, 180}, {32, 220}};
        for (const auto& c : cases) {
            const auto mc = diag::deflation_norm_mc(c[0], c[1], 10000, 2024);
            const double want = std::pow(1.0 - 1.0 / c[0], c[1]);
            const double z = std::abs(mc.mean - want) / mc.std_error;
            o.require(z < 3.0, fmt("(%g,%g) off by %.2f sigma", c[0], c[1], z));
            o.detail += fmt("%.3e (z=%.1f) ", mc.mean, z);
        }
    });

    criterion(5, "accumulator concentration", 5000.0, [](Outcome& o) {
        const double ratio = 400.0 / 24.0;
        const double lo = ratio * std::pow(1.0 - std::sqrt(24.0 / 400.0), 2);
        const double hi = ratio * std::pow(1.0 + std::sqrt(24.0 / 400.0), 2);
        int inside = 0, total = 0;
        double worst_mean = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto batch = diag::sample_directions(24, 400, seed);
            const Matrix acc = diag::build_accumulator(batch);
            Eigen::MatrixXd a(24, 24);
            for (std::size_t i = 0; i < 24; ++i)
                for (std::size_t j = 0; j < 24; ++j)
                    a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc(i, j).real();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
            worst_mean = std::max(worst_mean, std::abs(es.eigenvalues().mean() - ratio));
            for (Eigen::Index i = 0; i < 24; ++i) {
                inside += es.eigenvalues()(i) >= lo && es.eigenvalues()(i) <= hi ? 1 : 0;
                ++total;
            }
        }
        const double frac = static_cast<double>(inside) / total;
        o.require(worst_mean < 1e-10, fmt("mean eigenvalue off by %.2e", worst_mean));
        o.require(frac >= 0.95, fmt("only %.3f inside the band", frac));
        o.detail += fmt("mean 16.667 (err %.1e), %.1f%% in band", worst_mean, 100 * frac);
    });

    criterion(6, "exact small Ramsey", 600000.0, [](Outcome& o) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r33 = comb::brute_force_ramsey({3, 3}, 10);
        const double ms33 = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        o.require(r33.threshold == 6, "R(3,3) wrong");
        o.require(ms33 < 1000.0, fmt("R(3,3) took %.0f ms", ms33));
        const auto r34 = comb::brute_force_ramsey({3, 4}, 10);
        o.require(r34.threshold == 9, "R(3,4) wrong");
        bool enum8 = false, glue9 = false;
        for (const auto& l : r34.levels) {
            enum8 = enum8 || (l.v == 8 && l.method == "enumeration" && l.good_exists);
            glue9 = glue9 || (l.v == 9 && l.method == "glue-prune" && !l.good_exists);
        }
        o.require(enum8 && glue9, "level methods differ from enumeration at 8, glue-prune at 9");
        o.detail += fmt("R(3,3)=%g in %.1f ms, R(3,4)=%g", r33.threshold.value_or(-1), ms33,
                        r34.threshold.value_or(-1));
    });

    criterion(7, "graded recursion", 1.0, [](Outcome& o) {
        for (int m = 1; m <= 10; ++m)
            for (int n = 1; n <= 10; ++n)
                o.require(comb::graded_ramsey(m, n) == comb::binomial(m + n - 2, m - 1),
                          "mismatch at " + std::to_string(m) + "," + std::to_string(n));
        for (int n = 1; n <= 10; ++n)
            o.require(comb::graded_ramsey(1, n) == 1 && comb::graded_ramsey(n, 1) == 1, "boundary");
        int dominated = 0;
        for (const auto& k : comb::known_ramsey_values())
            dominated += static_cast<std::uint64_t>(k.value) <= comb::graded_ramsey(k.m, k.n) ? 1 : 0;
        o.require(comb::known_ramsey_values().size() == 9 && dominated == 9, "domination");
        o.detail += std::to_string(dominated) + "/9 known values dominated";
    });

    criterion(8, "prime-sequence fixtures", 100.0, [](Outcome& o) {
        auto q = [](int k) {
            primes::PSQuery p;
            p.k = k;
            return p;
        };
        o.require(primes::is_prime_sequence(45, q(5)), "45");
        o.require(!primes::is_prime_sequence(46, q(8)) && primes::is_prime_sequence(46, q(9)), "46");
        bool any112 = false;
        for (int k = 1; k <= 40; ++k)
            any112 = any112 || primes::is_prime_sequence(112, q(k));
        o.require(!any112, "112");
        using V = std::vector<std::uint64_t>;
        for (int k : {3, 4})
            o.require(primes::enumerate_ps(43, 46, q(k)) == V{45}, "row 3-5 at k=" + std::to_string(k));
        for (int k = 5; k <= 8; ++k)
            o.require(primes::enumerate_ps(43, 46, q(k)) == V{44, 45}, "row 5-8 at k=" + std::to_string(k));
        o.require(primes::enumerate_ps(43, 46, q(9)) == V{44, 45, 46}, "row 9");
        const auto r6 = primes::persistence_scan(6, 102, 160, {});
        const auto r7 = primes::persistence_scan(7, 205, 492, {});
        o.require(r6.value == 115 && r7.value == 209, "persistence");
        o.detail += fmt("R(6,6)->%g, R(7,7)->%g", static_cast<double>(r6.value), static_cast<double>(r7.value));
    });

    criterion(9, "CNF semantics", 120000.0, [](Outcome& o) {
        int cases = 0;
        for (auto [m, n] : {std::pair{3, 3}, {3, 4}})
            for (int N = 2; N * (N - 1) / 2 <= 21; ++N) {
                std::stringstream s;
                const auto sum = cnf::stream_cnf(N, m, n, s);
                const auto d = cnf::parse_dimacs(s);
                o.require(d.declared_clauses == d.clauses.size() && d.declared_clauses == sum.clause_count &&
                              d.declared_vars == sum.var_count,
                          "header mismatch at N=" + std::to_string(N));
                bool sat = false;
                for (std::uint64_t x = 0; x < (std::uint64_t{1} << d.declared_vars) && !sat; ++x)
                    sat = d.satisfied_by(x);
                o.require(sat == naive_good_exists(N, m, n) && sat == cnf::check_small(N, m, n),
                          "SAT disagrees with colourings at N=" + std::to_string(N));
                ++cases;
            }
        std::stringstream s12;
        const auto s = cnf::stream_cnf(12, 5, 5, s12);
        const auto d12 = cnf::parse_dimacs(s12);
        o.require(s.var_count == 66 && s.clause_count == 1584 && d12.clauses.size() == 1584, "N=12 counts");
        o.detail += std::to_string(cases) + " (N,m,n) cases; N=12 (5,5): " + std::to_string(s.var_count) +
                    " vars, " + std::to_string(s.clause_count) + " clauses";
    });

    criterion(10, "qubit-cost table", 1.0, [](Outcome& o) {
        o.require(comb::qubit_cost(44).total == 962, "n=44");
        o.require(comb::qubit_cost(45).total == 1006, "n=45");
        o.require(comb::qubit_cost(46).total == 1051, "n=46");
        o.detail += "962, 1006, 1051";
    });

    criterion(11, "quantum-classical bridge", 60000.0, [](Outcome& o) {
        std::mt19937_64 rng(11);
        std::normal_distribution<double> g(0.0, 1.0);
        auto unit = [&](std::size_t n) {
            std::vector<Complex> v(n);
            double s = 0.0;
            for (auto& z : v) {
                z = {g(rng), g(rng)};
                s += std::norm(z);
            }
            for (auto& z : v)
                z /= std::sqrt(s);
            return v;
        };

        const auto batch = diag::sample_directions(8, 16, 99);
        const Matrix a = diag::build_accumulator(batch);
        const double alpha = 0.5;
        const double classical = std::pow(10.0, diag::exp_witness(a, alpha));
        const auto est = qsim::hutchinson_trace(qsim::encode_exp(a, alpha), 10000, 5);
        const double z = std::abs(est.estimate - classical) / est.std_error;
        o.require(z < 3.0, fmt("Hutchinson %.2f se away", z));

        double block_err = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const auto u = unit(8), v = unit(8);
            const auto enc = qsim::block_encode_rank1(u, v);
            const Matrix want = spectral::outer(u, v) * Complex(0.5);
            for (std::size_t j = 0; j < 8; ++j) {
                auto s = qsim::StateVector::basis(enc.circuit.qubits(), j);
                enc.circuit.apply(s);
                for (std::size_t i = 0; i < 8; ++i)
                    block_err = std::max(block_err, std::abs(s.amplitudes()[i] - want(i, j)));
            }
            std::vector<qsim::LcuTerm> terms;
            Matrix sum(4, 4);
            for (int t = 0; t < 3; ++t) {
                qsim::LcuTerm term{Complex(g(rng), g(rng)), unit(4), unit(4)};
                sum += spectral::outer(term.u, term.v) * term.weight;
                terms.push_back(term);
            }
            const auto lcu = qsim::lcu_block_encode(terms);
            for (std::size_t j = 0; j < 4; ++j) {
                auto s = qsim::StateVector::basis(lcu.circuit.qubits(), j);
                lcu.circuit.apply(s);
                for (std::size_t i = 0; i < 4; ++i)
                    block_err = std::max(block_err, std::abs(s.amplitudes()[i] * lcu.alpha0 - sum(i, j)));
            }
        }
        o.require(block_err < 1e-7, fmt("block error %.2e", block_err));

        int hits = 0;
        for (int inst = 0; inst < 20; ++inst) {
            const std::size_t n = 2 + static_cast<std::size_t>(inst % 3);
            Matrix m(n, n);
            Eigen::MatrixXcd me(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = {g(rng), g(rng)};
                    me(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
                }
            const double sigma = Eigen::JacobiSVD<Eigen::MatrixXcd>(me).singularValues()(0);
            const auto pe = qsim::phase_estimate_dilation(m, 6, 2.0 / sigma);
            hits += std::abs(pe.estimate - sigma) <= pe.resolution ? 1 : 0;
        }
        o.require(hits == 20, fmt("phase estimation %g/20", hits));
        o.detail += fmt("Hutchinson %.2f se, block err %.1e, PE %g/20", z, block_err, hits);
    });

    criterion(12, "decision-rule soundness", 30000.0, [](Outcome& o) {
        diag::DiagnosticsConfig config;
        diag::ConstraintRestrictedEmbedding embedding({{43, 3}, {44, 2}, {45, 0}, {46, 1}});
        const std::vector<int> ns{43, 44, 45, 46};
        const auto recs = diag::run_diagnostics(config, ns, embedding);
        std::string pattern;
        for (const auto& r : recs) {
            o.require((r.critical == diag::Decision::critical) == (r.rank == 0),
                      "n=" + std::to_string(r.n) + " decided " + diag::to_string(r.critical));
            pattern += diag::to_string(r.critical).substr(0, 1);
        }
        const auto control = report::load_control_coloring(FIXTURE_DIR "/control");
        o.require(!comb::has_forbidden_clique(control, {5, 5}), "fixture has a mono K_5");
        const diag::SeedScheduleEmbedding schedule;
        for (const diag::Embedding* e : {static_cast<const diag::Embedding*>(&embedding),
                                         static_cast<const diag::Embedding*>(&schedule)})
            for (int bulk : ns) {
                const auto c = diag::control_record(config, control, {5, 5}, bulk, *e);
                o.require(c.critical != diag::Decision::critical, "control fired (" + e->name() + ")");
            }
        o.detail += "decisions " + pattern + " over n=43..46, " + std::to_string(config.seeds.size()) +
                    " seeds; control never critical";
    });

    criterion(13, "determinism", 60000.0, [](Outcome& o) {
        const fs::path root = fs::temp_directory_path() / "ramsey_acceptance_determinism";
        fs::remove_all(root);
        pipeline(root / "a");
        pipeline(root / "b");
        int files = 0;
        for (const char* f : {"results_table_I.csv", "results_table_III.csv", "r55_N12.cnf", "r55_N12.cnf.map"}) {
            const std::string x = slurp(root / "a" / f);
            o.require(!x.empty() && x == slurp(root / "b" / f), std::string(f) + " differs");
            ++files;
        }
        fs::remove_all(root);
        o.detail += std::to_string(files) + " artifacts byte-identical";
    });

    std::printf("%d of 13 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
