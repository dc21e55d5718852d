#include "ramsey/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ramsey;
using namespace ramsey::report;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<int>> parse(const std::string& text) {
    std::istringstream in(text);
    return read_adjacency(in, "test");
}

std::string adjacency(const comb::EdgeColoring& c, bool red) {
    std::ostringstream s;
    write_adjacency(c, red, s);
    return s.str();
}

ControlFormatError::Kind kind_of(const std::string& red, const std::string& blue) {
    try {
        coloring_from_adjacency(parse(red), parse(blue));
    } catch (const ControlFormatError& e) {
        return e.kind();
    }
    FAIL("no error");
    return ControlFormatError::Kind::malformed;
}

fs::path scratch(const char* name) {
    const fs::path p = fs::temp_directory_path() / (std::string("ramsey_report_") + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("pentagon round trip through adjacency text") {
    const auto p = comb::pentagon();
    const auto c = coloring_from_adjacency(parse(adjacency(p, true)), parse(adjacency(p, false)));
    CHECK(c == p);
}

TEST_CASE("adjacency grammar: header row, separators") {
    const auto a = parse("a b c\n0 1 0\n1 0 1\n0 1 0\n");
    const auto b = parse("0;1;0\r\n1;0;1\r\n0;1;0\r\n");
    const auto c = parse("0\t1\t0\n\n1\t0\t1\n0\t1\t0\n");
    CHECK(a == b);
    CHECK(b == c);
    CHECK_THROWS_AS(parse("0,2\n2,0\n"), ControlFormatError);
    CHECK_THROWS_AS(parse("0,1\n1,0,1\n"), ControlFormatError);
    CHECK_THROWS_AS(parse(""), ControlFormatError);
}

TEST_CASE("each control defect has its own error kind") {
    using K = ControlFormatError::Kind;
    CHECK(kind_of("0,1\n0,0\n", "0,0\n1,0\n") == K::asymmetric);
    CHECK(kind_of("0,1\n1,0\n", "0,1\n1,0\n") == K::not_complementary);
    CHECK(kind_of("0,1\n1,0\n", "0,0,1\n0,0,1\n1,1,0\n") == K::size_mismatch);
    CHECK(kind_of("1,0\n0,0\n", "0,1\n1,0\n") == K::malformed);
}

TEST_CASE("checked-in control fixture is a good (5,5) colouring") {
    const auto c = load_control_coloring(FIXTURE_DIR "/control");
    CHECK(c.vertices() == 37);
    CHECK(!comb::has_forbidden_clique(c, {5, 5}));
    CHECK(comb::has_forbidden_clique(c, {4, 4}));
    CHECK_THROWS(load_control_coloring(FIXTURE_DIR "/missing"));
}

TEST_CASE("number formatting") {
    CHECK(sci(1.0) == "1.000000000e+00");
    CHECK(sci(-2.5e-120, 3) == "-2.500e-120");
    CHECK(sci(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(sci(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(sci(std::nan("")) == "nan");
    CHECK(fixed(40.0, 4) == "40.0000");
}

TEST_CASE("results table layout") {
    std::ostringstream empty;
    write_results({}, empty);
    CHECK(empty.str() == std::string(results_header) + "\n");

    diag::DiagnosticsRecord r;
    r.n = 45;
    r.d = 24;
    r.k = 100;
    r.alphas = {40.0};
    r.log10_tr_exp = {-12.5};
    r.tr_lin = 0.25;
    r.critical = diag::Decision::critical;
    std::ostringstream one;
    write_results({r}, one);
    const std::string text = one.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.find("45,24,100,40.0000,-1.250000000e+01,2.500000000e-01,") != std::string::npos);
    CHECK(text.substr(text.size() - 6) == ",true\n");
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("write_file replaces atomically and leaves no temporary") {
    const auto dir = scratch("write");
    const auto path = dir / "t.csv";
    write_file(path, "one\n");
    write_file(path, "two\n");
    std::ifstream in(path);
    std::string s;
    std::getline(in, s);
    CHECK(s == "two");
    CHECK(!fs::exists(dir / "t.csv.tmp"));
    CHECK_THROWS(write_file(dir / "no_such_dir" / "x.csv", "x"));
    fs::remove_all(dir);
}
