#include "ramsey/report.hpp"

#include <fstream>
#include <sstream>

namespace ramsey::report {
namespace {

using Kind = ControlFormatError::Kind;

std::vector<std::string> tokens(const std::string& line) {
    std::string s = line;
    for (auto& ch : s)
        if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r')
            ch = ' ';
    std::istringstream ls(s);
    std::vector<std::string> out;
    std::string t;
    while (ls >> t)
        out.push_back(t);
    return out;
}

}  // namespace

std::vector<std::vector<int>> read_adjacency(std::istream& in, const std::string& label) {
    std::vector<std::vector<int>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const auto tok = tokens(line);
        if (tok.empty())
            continue;
        std::vector<int> row;
        bool numeric = true;
        for (const auto& t : tok) {
            if (t == "0" || t == "1")
                row.push_back(t[0] - '0');
            else
                numeric = false;
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;
            }
            throw ControlFormatError(Kind::malformed, label + ": entries must be 0 or 1");
        }
        first = false;
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ControlFormatError(Kind::malformed, label + ": no rows");
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw ControlFormatError(Kind::malformed, label + ": matrix is not square");
    return rows;
}

comb::EdgeColoring coloring_from_adjacency(const std::vector<std::vector<int>>& red,
                                           const std::vector<std::vector<int>>& blue) {
    if (red.size() != blue.size())
        throw ControlFormatError(Kind::size_mismatch, "control: red is " + std::to_string(red.size()) +
                                                          " vertices, blue is " + std::to_string(blue.size()));
    const std::size_t v = red.size();
    if (v > static_cast<std::size_t>(comb::max_vertices))
        throw ControlFormatError(Kind::malformed, "control: more than 64 vertices");
    for (const auto* m : {&red, &blue}) {
        const char* name = m == &red ? "red" : "blue";
        for (std::size_t i = 0; i < v; ++i) {
            if ((*m)[i].size() != v)
                throw ControlFormatError(Kind::malformed, std::string("control: ") + name + " matrix is not square");
            if ((*m)[i][i] != 0)
                throw ControlFormatError(Kind::malformed, std::string("control: ") + name + " diagonal must be zero");
        }
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j)
                if ((*m)[i][j] != (*m)[j][i])
                    throw ControlFormatError(Kind::asymmetric, std::string("control: ") + name +
                                                                   " matrix is not symmetric at (" +
                                                                   std::to_string(i + 1) + "," +
                                                                   std::to_string(j + 1) + ")");
    }
    comb::EdgeColoring c(static_cast<int>(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) {
            if (red[i][j] + blue[i][j] != 1)
                throw ControlFormatError(Kind::not_complementary,
                                         "control: edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                             ") is not exactly one colour");
            c.set(static_cast<int>(i), static_cast<int>(j), red[i][j] == 1);
        }
    return c;
}

comb::EdgeColoring load_control_coloring(const std::filesystem::path& dir) {
    auto read = [&](const char* name) {
        const auto path = dir / name;
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("control: cannot open " + path.string());
        return read_adjacency(in, path.string());
    };
    const auto red = read(control_red_file);
    const auto blue = read(control_blue_file);
    return coloring_from_adjacency(red, blue);
}

void write_adjacency(const comb::EdgeColoring& c, bool red, std::ostream& out) {
    const int v = c.vertices();
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            if (j > 0)
                out << ',';
            out << (i != j && c.is_red(i, j) == red ? 1 : 0);
        }
        out << '\n';
    }
}

}  // namespace ramsey::report
