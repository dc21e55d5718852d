#include "ramsey/cnf.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ramsey::cnf {
namespace {

std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

void validate(int N, int m, int n) {
    if (m < 1 || n < 1 || N < 2)
        throw std::invalid_argument("cnf: need N >= 2 and m, n >= 1");
    if (N > 4096)
        throw std::invalid_argument("cnf: N too large");
}

// Calls f(subset) for every s-subset of {1..N} in lexicographic order.
template <typename F>
void for_each_subset(int N, int s, F&& f) {
    std::vector<int> pick(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    if (s > N)
        return;
    while (true) {
        f(pick);
        int i = s - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - s + i + 1)
            --i;
        if (i < 0)
            return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void append_int(std::string& buf, std::int64_t x) {
    char tmp[24];
    auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof tmp, x);
    buf.append(tmp, ptr);
}

}  // namespace

std::uint64_t edge_var(int i, int j, int N) {
    if (i < 1 || j > N || i >= j)
        throw std::invalid_argument("edge_var: need 1 <= i < j <= N");
    const auto ui = static_cast<std::uint64_t>(i);
    const auto un = static_cast<std::uint64_t>(N);
    return (ui - 1) * (2 * un - ui) / 2 + static_cast<std::uint64_t>(j - i);
}

std::pair<int, int> var_edge(std::uint64_t var, int N) {
    if (N < 2 || var < 1 || var > choose(N, 2))
        throw std::invalid_argument("var_edge: variable out of range");
    int i = 1;
    std::uint64_t first = 1;
    while (true) {
        const std::uint64_t row = static_cast<std::uint64_t>(N - i);
        if (var < first + row)
            return {i, i + 1 + static_cast<int>(var - first)};
        first += row;
        ++i;
    }
}

CnfSummary cnf_summary(int N, int m, int n) {
    validate(N, m, n);
    CnfSummary s;
    s.N = N;
    s.m = m;
    s.n = n;
    s.var_count = choose(N, 2);
    s.clause_count = choose(N, m) + choose(N, n);
    return s;
}

CnfSummary stream_cnf(int N, int m, int n, std::ostream& sink) {
    CnfSummary s = cnf_summary(N, m, n);
    std::string buf = "p cnf ";
    append_int(buf, static_cast<std::int64_t>(s.var_count));
    buf += ' ';
    append_int(buf, static_cast<std::int64_t>(s.clause_count));
    buf += '\n';

    auto emit = [&](const std::vector<int>& subset, int sign) {
        for (std::size_t a = 0; a < subset.size(); ++a)
            for (std::size_t b = a + 1; b < subset.size(); ++b) {
                append_int(buf, sign * static_cast<std::int64_t>(edge_var(subset[a], subset[b], N)));
                buf += ' ';
            }
        buf += "0\n";
        ++s.clauses_written;
        if (buf.size() > (1U << 16)) {
            sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
            if (!sink)
                throw std::runtime_error("stream_cnf: write failed");
        }
    };
    for_each_subset(N, m, [&](const std::vector<int>& S) { emit(S, -1); });
    for_each_subset(N, n, [&](const std::vector<int>& T) { emit(T, +1); });
    sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    sink.flush();
    if (!sink)
        throw std::runtime_error("stream_cnf: write failed");
    if (s.clauses_written != s.clause_count)
        throw std::logic_error("stream_cnf: clause count mismatch");
    return s;
}

void write_map(int N, std::ostream& sink) {
    if (N < 2)
        throw std::invalid_argument("write_map: N must be >= 2");
    std::string buf;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            append_int(buf, static_cast<std::int64_t>(edge_var(i, j, N)));
            buf += ' ';
            append_int(buf, i);
            buf += ' ';
            append_int(buf, j);
            buf += '\n';
        }
    sink.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!sink)
        throw std::runtime_error("write_map: write failed");
}

bool Dimacs::satisfied_by(std::uint64_t assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (auto lit : clause) {
            const auto var = static_cast<unsigned>(lit < 0 ? -lit : lit);
            const bool value = (assignment >> (var - 1)) & 1U;
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

Dimacs parse_dimacs(std::istream& in) {
    Dimacs d;
    std::string line;
    bool header = false;
    std::vector<std::int64_t> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> d.declared_vars >> d.declared_clauses;
            if (fmt != "cnf" || !ls)
                throw std::runtime_error("parse_dimacs: bad header");
            header = true;
            continue;
        }
        if (!header)
            throw std::runtime_error("parse_dimacs: clause before header");
        std::int64_t lit;
        while (ls >> lit) {
            if (lit == 0) {
                d.clauses.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty())
        throw std::runtime_error("parse_dimacs: unterminated clause");
    return d;
}

bool check_small(int N, int m, int n) {
    const CnfSummary s = cnf_summary(N, m, n);
    if (s.var_count > 28)
        throw std::invalid_argument("check_small: C(N,2) must be <= 28");
    // Each clause as a mask over its variables.
    std::vector<std::uint64_t> neg, pos;
    auto collect = [&](std::vector<std::uint64_t>& out) {
        return [&out, N](const std::vector<int>& S) {
            std::uint64_t mask = 0;
            for (std::size_t a = 0; a < S.size(); ++a)
                for (std::size_t b = a + 1; b < S.size(); ++b)
                    mask |= std::uint64_t{1} << (edge_var(S[a], S[b], N) - 1);
            out.push_back(mask);
        };
    };
    for_each_subset(N, m, collect(neg));
    for_each_subset(N, n, collect(pos));
    const std::uint64_t total = std::uint64_t{1} << s.var_count;
    for (std::uint64_t x = 0; x < total; ++x) {
        bool ok = true;
        for (auto c : neg)
            if ((x & c) == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        for (auto c : pos)
            if ((x & c) == 0) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    }
    return false;
}

}  // namespace ramsey::cnf
