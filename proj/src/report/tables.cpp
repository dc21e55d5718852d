#include "ramsey/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ramsey::report {
namespace {

std::string nonfinite(double x) {
    if (std::isnan(x))
        return "nan";
    return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string sci(double x, int precision) {
    if (!std::isfinite(x))
        return nonfinite(x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", precision, x);
    return buf;
}

std::string fixed(double x, int precision) {
    if (!std::isfinite(x))
        return nonfinite(x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    return buf;
}

void write_results(const std::vector<diag::DiagnosticsRecord>& rows, std::ostream& out) {
    out << results_header << '\n';
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.alphas.size(); ++i) {
            out << r.n << ',' << r.d << ',' << r.k << ',' << fixed(r.alphas[i], 4) << ','
                << sci(r.log10_tr_exp[i]) << ',' << sci(r.tr_lin) << ',' << sci(r.min_re_lambda) << ','
                << sci(r.max_im_lambda) << ',' << sci(r.slope) << ',' << sci(r.lambda_L) << ','
                << sci(r.rho_H) << ',' << diag::to_string(r.critical) << '\n';
        }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.close();
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_results(const std::vector<diag::DiagnosticsRecord>& rows, const std::filesystem::path& path) {
    std::ostringstream s;
    write_results(rows, s);
    write_file(path, s.str());
}

void write_control_table(const diag::DiagnosticsRecord& control, const diag::DiagnosticsRecord& bulk,
                         double decision_alpha, std::ostream& out) {
    out << control_header << '\n';
    for (const auto* r : {&control, &bulk}) {
        out << (r == &control ? "control" : "bulk") << ',' << r->n << ',' << r->rank << ','
            << fixed(decision_alpha, 4) << ',' << sci(r->log10_tr_exp_decision) << ',' << sci(r->tr_lin) << ','
            << sci(r->min_re_lambda) << ',' << sci(r->max_im_lambda) << ',' << sci(r->rho_H) << ','
            << diag::to_string(r->critical) << '\n';
    }
}

}  // namespace ramsey::report
