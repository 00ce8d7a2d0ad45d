#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idcode/graph.hpp"
#include "idcode/interval.hpp"
#include "idcode/setcover.hpp"

// Plain-text instance formats. Lines starting with '#' are comments and blank
// lines are skipped everywhere.
//
//   graph:      "n m" then m lines "u v"        (0-based vertex ids)
//   intervals:  "n" then n lines "id begin end" (ids 0..n-1, each once;
//                endpoints integers, decimals, or p/q)
//   set cover:  "n k" then k lines "c e1 ... ec" (1-based elements)

namespace idcode {
namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

inline long long parse_int(const std::string& tok) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + tok + "'");
    }
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw std::invalid_argument("graph file: missing header");
    auto head = detail::tokens(lines[0]);
    if (head.size() != 2) throw std::invalid_argument("graph file: header must be 'n m'");
    long long n = detail::parse_int(head[0]), m = detail::parse_int(head[1]);
    if (n < 0 || m < 0) throw std::invalid_argument("graph file: negative count");
    if ((long long)lines.size() != 1 + m) throw std::invalid_argument("graph file: expected " + std::to_string(m) + " edge lines");
    Graph g((int)n);
    for (long long i = 0; i < m; ++i) {
        auto tok = detail::tokens(lines[1 + i]);
        if (tok.size() != 2) throw std::invalid_argument("graph file: edge line must be 'u v'");
        g.add_edge((int)detail::parse_int(tok[0]), (int)detail::parse_int(tok[1]));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

inline IntervalRep read_intervals(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw std::invalid_argument("interval file: missing header");
    auto head = detail::tokens(lines[0]);
    if (head.size() != 1) throw std::invalid_argument("interval file: header must be 'n'");
    long long n = detail::parse_int(head[0]);
    if (n < 0) throw std::invalid_argument("interval file: negative count");
    if ((long long)lines.size() != 1 + n) throw std::invalid_argument("interval file: expected " + std::to_string(n) + " interval lines");
    IntervalRep rep;
    rep.intervals.resize(n);
    std::vector<char> seen(n, 0);
    for (long long i = 0; i < n; ++i) {
        auto tok = detail::tokens(lines[1 + i]);
        if (tok.size() != 3) throw std::invalid_argument("interval file: line must be 'id begin end'");
        long long id = detail::parse_int(tok[0]);
        if (id < 0 || id >= n) throw std::invalid_argument("interval file: id out of range");
        if (seen[id]) throw std::invalid_argument("interval file: duplicate id " + std::to_string(id));
        seen[id] = 1;
        rep.intervals[id] = {parse_rational(tok[1]), parse_rational(tok[2])};
    }
    return canonicalize(std::move(rep));
}

inline void write_intervals(std::ostream& out, const IntervalRep& rep) {
    out << rep.n() << "\n";
    for (int v = 0; v < rep.n(); ++v)
        out << v << " " << rational_to_string(rep.intervals[v].begin) << " "
            << rational_to_string(rep.intervals[v].end) << "\n";
}

inline SetCover1Instance read_setcover(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw std::invalid_argument("set cover file: missing header");
    auto head = detail::tokens(lines[0]);
    if (head.size() != 2) throw std::invalid_argument("set cover file: header must be 'n k'");
    long long n = detail::parse_int(head[0]), k = detail::parse_int(head[1]);
    if (n < 1 || k < 1) throw std::invalid_argument("set cover file: counts must be positive");
    if ((long long)lines.size() != 1 + k) throw std::invalid_argument("set cover file: expected " + std::to_string(k) + " set lines");
    SetCover1Instance inst;
    inst.ground_size = (int)n;
    for (long long i = 0; i < k; ++i) {
        auto tok = detail::tokens(lines[1 + i]);
        if (tok.empty()) throw std::invalid_argument("set cover file: empty set line");
        long long c = detail::parse_int(tok[0]);
        if ((long long)tok.size() != 1 + c) throw std::invalid_argument("set cover file: set line length mismatch");
        std::vector<int> s;
        for (long long j = 1; j <= c; ++j) s.push_back((int)detail::parse_int(tok[j]) - 1);  // to 0-based
        std::sort(s.begin(), s.end());
        inst.sets.push_back(std::move(s));
    }
    inst.validate();
    return inst;
}

inline void write_setcover(std::ostream& out, const SetCover1Instance& inst) {
    out << inst.ground_size << " " << inst.num_sets() << "\n";
    for (const auto& s : inst.sets) {
        out << s.size();
        for (int e : s) out << " " << e + 1;
        out << "\n";
    }
}

template <typename T>
T read_file(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return reader(in);
}

}  // namespace idcode
