#include "ricci/edge_list_io.hpp"

#include <fstream>
#include <sstream>

namespace ricci {

std::vector<Edge> read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) {
            continue;  // blank or comment-only line
        }
        std::string trailing;
        if (!(fields >> v) || (fields >> trailing)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected exactly two vertex ids");
        }
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return edges;
}

std::vector<Edge> read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open edge list file: " + path);
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        out << u << " " << v << "\n";
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open output file: " + path);
    }
    write_edge_list(out, g);
}

}  // namespace ricci
