// Command line front end. Exit codes: 0 success, 1 negative verdict or
// infeasible instance, 2 bad input, 3 documented cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idcode/idcode.hpp"

namespace {

using namespace idcode;

constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

bool kv = false;  // machine-readable key=value output

std::string join(const std::vector<int>& xs, const std::string& sep = ",") {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad vertex id '" + token + "'");
        out.push_back(v);
    }
    return out;
}

Graph load_graph(const std::string& path) { return read_file(path, read_graph); }
IntervalRep load_intervals(const std::string& path) { return read_file(path, read_intervals); }
SetCover1Instance load_setcover(const std::string& path) { return read_file(path, read_setcover); }

void print_verdict(const Verdict& v) {
    if (kv) {
        std::cout << "verdict="
                  << (v.valid() ? "valid" : v.kind == Verdict::Kind::not_dominating ? "not_dominating" : "not_separating")
                  << "\n";
        if (v.kind == Verdict::Kind::not_dominating) std::cout << "vertex=" << v.u << "\n";
        if (v.kind == Verdict::Kind::not_separating) std::cout << "pair=" << v.u << "," << v.v << "\n";
    } else {
        std::cout << v.describe() << "\n";
    }
}

int cmd_verify(const std::string& graph_path, const std::string& code_str) {
    Graph g = load_graph(graph_path);
    Code code{VertexSet(parse_id_list(code_str), g.n())};
    Verdict v = verify_identifying_code(g, code);
    print_verdict(v);
    return v.valid() ? 0 : kExitVerdict;
}

int cmd_solve_exact(const std::string& graph_path, int cap) {
    Graph g = load_graph(graph_path);
    Code code = exact_min_id_code(g, cap);
    if (kv)
        std::cout << "gamma_id=" << code.vertices.size() << "\ncode=" << join(code.vertices.members) << "\n";
    else
        std::cout << "minimum identifying code, size " << code.vertices.size() << ": " << join(code.vertices.members)
                  << "\n";
    return 0;
}

int cmd_approx_greedy(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    Code code = greedy_id_code(g);
    if (kv)
        std::cout << "size=" << code.vertices.size() << "\ncode=" << join(code.vertices.members) << "\n";
    else
        std::cout << "greedy identifying code, size " << code.vertices.size() << ": " << join(code.vertices.members)
                  << "\n";
    return 0;
}

int cmd_approx_interval(const std::string& intervals_path) {
    IntervalRep rep = load_intervals(intervals_path);
    Graph g = graph_from_intervals(rep);
    ApproxReport report = approx_report(g, rep);
    long size = report.code.vertices.size();
    Rational mid = 4 * report.opt_inter + 2 * report.opt_disj;
    if (kv) {
        std::cout << "size=" << size << "\n";
        std::cout << "code=" << join(report.code.vertices.members) << "\n";
        std::cout << "inter_part=" << join(report.inter_part.members) << "\n";
        std::cout << "disj_part=" << join(report.disj_part.members) << "\n";
        std::cout << "opt_inter=" << rational_to_string(report.opt_inter) << "\n";
        std::cout << "opt_disj=" << rational_to_string(report.opt_disj) << "\n";
        std::cout << "opt_full=" << rational_to_string(report.opt_full) << "\n";
        std::cout << "chain_ok=1\n";
    } else {
        std::cout << "identifying code, size " << size << ": " << join(report.code.vertices.members) << "\n";
        std::cout << "bound chain: " << size << " <= 4*" << rational_to_string(report.opt_inter) << " + 2*"
                  << rational_to_string(report.opt_disj) << " = " << rational_to_string(mid)
                  << " <= 6*" << rational_to_string(report.opt_full) << " = " << rational_to_string(6 * report.opt_full)
                  << " <= 6*gamma_id\n";
    }
    return 0;  // approx_report throws if any link of the chain fails
}

int cmd_vcdim(const std::string& graph_path, int max_d) {
    Graph g = load_graph(graph_path);
    VcResult res = vc_dimension(g, max_d);
    if (kv) {
        std::cout << "dimension=" << res.dimension << "\n";
        std::cout << "shattered=" << join(res.certificate.shattered_set.members) << "\n";
        std::cout << "reached_cap=" << (res.reached_cap ? 1 : 0) << "\n";
    } else {
        std::cout << "neighborhood VC-dimension " << (res.reached_cap ? ">= " : "") << res.dimension;
        if (res.dimension > 0) std::cout << ", shattered set: " << join(res.certificate.shattered_set.members);
        std::cout << "\n";
    }
    return 0;
}

int cmd_lowerbound(long long n, int d) {
    std::cout << sauer_lower_bound(n, d) << "\n";
    return 0;
}

int cmd_gen(const std::string& family, int param, const std::string& out_prefix) {
    auto write_to = [&](const std::string& suffix, auto writer) {
        std::string path = out_prefix + suffix;
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write " + path);
        writer(out);
        if (!kv) std::cout << "wrote " << path << "\n";
    };
    if (family == "c4free") {
        auto [g, code] = c4_free_bipartite_family(param);
        write_to(".graph", [&](std::ostream& o) { write_graph(o, g); });
        write_to(".code", [&](std::ostream& o) { o << join(code.vertices.members) << "\n"; });
        if (kv) std::cout << "n=" << g.n() << "\ncode_size=" << code.vertices.size() << "\n";
    } else if (family == "vcd") {
        auto [g, code] = vc_d_bipartite_family(param);
        int measured = vc_dimension(g).dimension;
        write_to(".graph", [&](std::ostream& o) { write_graph(o, g); });
        write_to(".code", [&](std::ostream& o) { o << join(code.vertices.members) << "\n"; });
        if (kv)
            std::cout << "n=" << g.n() << "\ncode_size=" << code.vertices.size() << "\nmeasured_dimension=" << measured
                      << "\n";
        else
            std::cout << "measured neighborhood VC-dimension: " << measured << "\n";
    } else if (family == "path") {
        auto [g, rep] = path_graph(param);
        write_to(".graph", [&](std::ostream& o) { write_graph(o, g); });
        write_to(".intervals", [&](std::ostream& o) { write_intervals(o, rep); });
        if (kv) std::cout << "n=" << g.n() << "\n";
    } else {
        throw std::invalid_argument("unknown family '" + family + "' (expected c4free, vcd, or path)");
    }
    return 0;
}

int cmd_reduce(const std::string& sc_path, const std::string& target, const std::string& out_prefix,
               const std::string& cover_str) {
    SetCover1Instance sc = load_setcover(sc_path);
    ReducedInstance inst;
    try {
        inst = target == "dc" ? build_dc_instance(sc) : build_ic_instance(sc);
    } catch (const DegenerateInstance& e) {
        // A set covering everything (or a single element) makes the gadget
        // pointless; solve the cover directly instead.
        auto cover = exact_min_set_cover(sc, std::max(sc.num_sets(), sc.ground_size));
        if (kv)
            std::cout << "degenerate=1\nreason=" << e.what() << "\nopt_cover=" << join(cover) << "\nopt_size="
                      << cover.size() << "\n";
        else
            std::cout << "degenerate instance (" << e.what() << "); solved directly: optimal cover {" << join(cover)
                      << "} of size " << cover.size() << "\n";
        return 0;
    }
    std::string graph_path = out_prefix + ".graph";
    {
        std::ofstream out(graph_path);
        if (!out) throw std::invalid_argument("cannot write " + graph_path);
        write_graph(out, inst.graph);
    }
    std::string labels_path = out_prefix + ".labels";
    {
        std::ofstream out(labels_path);
        if (!out) throw std::invalid_argument("cannot write " + labels_path);
        for (int v = 0; v < inst.graph.n(); ++v) out << v << " " << inst.labels[v].describe() << "\n";
    }
    if (kv) {
        std::cout << "target=" << target << "\nn=" << inst.graph.n() << "\nell=" << inst.ell << "\ngraph="
                  << graph_path << "\nlabels=" << labels_path << "\n";
    } else {
        std::cout << "built " << (target == "dc" ? "discriminating" : "identifying") << "-code instance: "
                  << inst.graph.n() << " vertices, " << inst.ell << " copies\n";
        std::cout << "wrote " << graph_path << " and " << labels_path << "\n";
    }
    if (!cover_str.empty()) {
        std::vector<int> cover = parse_id_list(cover_str);
        if (target == "dc") {
            VertexSet sol = setcover_to_dc_solution(inst, cover);
            if (kv)
                std::cout << "solution_size=" << sol.size() << "\nsolution=" << join(sol.members) << "\n";
            else
                std::cout << "mapped cover to a discriminating code of size " << sol.size() << ": "
                          << join(sol.members) << "\n";
        } else {
            Code sol = setcover_to_ic_solution(inst, cover);
            if (kv)
                std::cout << "solution_size=" << sol.vertices.size() << "\nsolution=" << join(sol.vertices.members)
                          << "\n";
            else
                std::cout << "mapped cover to an identifying code of size " << sol.vertices.size() << ": "
                          << join(sol.vertices.members) << "\n";
        }
    }
    return 0;
}

int cmd_map_back(const std::string& sc_path, const std::string& target, const std::string& code_str) {
    SetCover1Instance sc = load_setcover(sc_path);
    ReducedInstance inst = target == "dc" ? build_dc_instance(sc) : build_ic_instance(sc);
    std::vector<int> ids = parse_id_list(code_str);
    std::vector<int> cover;
    if (target == "dc") {
        VertexSet code(ids, inst.graph.n());
        Verdict v = verify_discriminating_code(inst.graph, inst.x_side(), inst.y_side(), code);
        if (!v.valid()) {
            print_verdict(v);
            return kExitVerdict;
        }
        cover = dc_solution_to_setcover(inst, code);
    } else {
        Code code{VertexSet(ids, inst.graph.n())};
        Verdict v = verify_identifying_code(inst.graph, code);
        if (!v.valid()) {
            print_verdict(v);
            return kExitVerdict;
        }
        cover = ic_solution_to_setcover(inst, code);
    }
    if (!sc.is_cover(cover)) throw std::logic_error("mapped solution is not a cover");
    if (kv)
        std::cout << "cover=" << join(cover) << "\ncover_size=" << cover.size() << "\n";
    else
        std::cout << "recovered cover of size " << cover.size() << ": {" << join(cover) << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"identifying codes: verification, exact and approximate solving, VC bounds, reductions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text | kv")->check(CLI::IsMember({"text", "kv"}));

    std::string graph_path, intervals_path, sc_path, code_str, family, target, out_prefix, cover_str;
    int cap = kDefaultExactCap, max_d = 6, param = 3;
    long long n = 0;
    int d = 1;

    auto* verify = app.add_subcommand("verify", "check an identifying code");
    verify->add_option("--graph", graph_path, "edge list file")->required();
    verify->add_option("--code", code_str, "comma separated vertex ids")->required();

    auto* solve = app.add_subcommand("solve-exact", "minimum identifying code by branch and bound");
    solve->add_option("--graph", graph_path, "edge list file")->required();
    solve->add_option("--cap", cap, "largest vertex count accepted");

    auto* apxint = app.add_subcommand("approx-interval", "6-approximation on an interval model");
    apxint->add_option("--intervals", intervals_path, "interval file")->required();

    auto* apxgreedy = app.add_subcommand("approx-greedy", "greedy identifying code (log factor)");
    apxgreedy->add_option("--graph", graph_path, "edge list file")->required();

    auto* vcdim = app.add_subcommand("vcdim", "neighborhood VC-dimension with a shattered set");
    vcdim->add_option("--graph", graph_path, "edge list file")->required();
    vcdim->add_option("--max-d", max_d, "stop after this size");

    auto* lower = app.add_subcommand("lowerbound", "smallest c with c^d >= n-1");
    lower->add_option("--n", n, "vertex count")->required();
    lower->add_option("--d", d, "VC-dimension bound")->required();

    auto* gen = app.add_subcommand("gen", "write a generated family instance");
    gen->add_option("--family", family, "c4free | vcd | path")->required();
    gen->add_option("--param", param, "n for c4free/path, d for vcd")->required();
    gen->add_option("--out", out_prefix, "output path prefix")->required();

    auto* reduce = app.add_subcommand("reduce", "build the set-cover hardness gadget");
    reduce->add_option("--setcover", sc_path, "set cover file")->required();
    reduce->add_option("--target", target, "dc | ic")->required()->check(CLI::IsMember({"dc", "ic"}));
    reduce->add_option("--out", out_prefix, "output path prefix")->required();
    reduce->add_option("--cover", cover_str, "also map this cover (set indices) forward");

    auto* mapback = app.add_subcommand("map-back", "turn a gadget code back into a cover");
    mapback->add_option("--setcover", sc_path, "set cover file")->required();
    mapback->add_option("--target", target, "dc | ic")->required()->check(CLI::IsMember({"dc", "ic"}));
    mapback->add_option("--code", code_str, "comma separated vertex ids")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    kv = format == "kv";

    try {
        if (verify->parsed()) return cmd_verify(graph_path, code_str);
        if (solve->parsed()) return cmd_solve_exact(graph_path, cap);
        if (apxint->parsed()) return cmd_approx_interval(intervals_path);
        if (apxgreedy->parsed()) return cmd_approx_greedy(graph_path);
        if (vcdim->parsed()) return cmd_vcdim(graph_path, max_d);
        if (lower->parsed()) return cmd_lowerbound(n, d);
        if (gen->parsed()) return cmd_gen(family, param, out_prefix);
        if (reduce->parsed()) return cmd_reduce(sc_path, target, out_prefix, cover_str);
        if (mapback->parsed()) return cmd_map_back(sc_path, target, code_str);
    } catch (const TwinsPresent& e) {
        std::cerr << e.what() << "\n";
        return kExitVerdict;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitVerdict;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
