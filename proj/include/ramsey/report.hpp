// File formats: control colourings as 0/1 adjacency matrices, the results
// CSV schema, and fixed-precision number formatting shared by every table.

#pragma once

#include "ramsey/combinatorics.hpp"
#include "ramsey/diagnostics.hpp"

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey::report {

class ControlFormatError : public std::runtime_error {
public:
    enum class Kind { malformed, asymmetric, not_complementary, size_mismatch };

    ControlFormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline constexpr const char* control_red_file = "am46_red.csv";
inline constexpr const char* control_blue_file = "am46_blue.csv";

/// Square 0/1 matrix, comma- or whitespace-separated, optional header row.
std::vector<std::vector<int>> read_adjacency(std::istream& in, const std::string& label);

/// Red and blue matrices of equal size, zero diagonal, symmetric and
/// complementary off the diagonal.
comb::EdgeColoring coloring_from_adjacency(const std::vector<std::vector<int>>& red,
                                           const std::vector<std::vector<int>>& blue);

comb::EdgeColoring load_control_coloring(const std::filesystem::path& dir);

void write_adjacency(const comb::EdgeColoring& c, bool red, std::ostream& out);

/// printf-style "%.{precision}e"; "nan", "inf", "-inf" for non-finite input.
std::string sci(double x, int precision = 9);
/// printf-style "%.{precision}f".
std::string fixed(double x, int precision = 6);

inline constexpr const char* results_header =
    "n,d,k,alpha,log10_tr_exp,tr_lin,min_re,max_im,slope,lambda_L,rho_H,critical";

/// Header plus one row per (record, alpha), LF endings.
void write_results(const std::vector<diag::DiagnosticsRecord>& rows, std::ostream& out);
void write_results(const std::vector<diag::DiagnosticsRecord>& rows, const std::filesystem::path& path);

inline constexpr const char* control_header =
    "row,n,rank,alpha,log10_tr_exp,tr_lin,min_re,max_im,rho_H,critical";

/// Control record beside the bulk record it is compared with, at the decision alpha.
void write_control_table(const diag::DiagnosticsRecord& control, const diag::DiagnosticsRecord& bulk,
                         double decision_alpha, std::ostream& out);

/// Writes through a temporary file and renames, so a failed run leaves no partial artifact.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace ramsey::report
