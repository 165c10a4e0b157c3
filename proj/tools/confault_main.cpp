#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "confault/detect.hpp"
#include "confault/digraph.hpp"
#include "confault/distinguish.hpp"
#include "confault/errors.hpp"
#include "confault/exactalg.hpp"
#include "confault/graph_io.hpp"
#include "confault/paths.hpp"
#include "confault/reports.hpp"
#include "confault/sim.hpp"

namespace {

using namespace confault;

// Exit codes: 0 success or positive verdict, 3 negative verdict, 2 usage
// or input error, 1 internal error.
constexpr int kExitPositive = 0;
constexpr int kExitNegative = 3;
constexpr int kExitUsage = 2;

Digraph load_checked(const std::string& path) {
    LoadedGraph loaded = load_graph(path);
    if (loaded.duplicate_count > 0)
        std::cerr << "warning: " << loaded.duplicate_count << " duplicate edge(s) in " << path
                  << " collapsed\n";
    return loaded.graph;
}

std::string edge_str(const Edge& e) {
    return std::to_string(e.tail) + ">" + std::to_string(e.head);
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::vector<Edge> edges;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const size_t sep = token.find('>');
        if (sep == std::string::npos)
            throw ParseError("edge literal \"" + token + "\" is not of the form tail>head");
        try {
            edges.push_back({std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 1))});
        } catch (const std::exception&) {
            throw ParseError("edge literal \"" + token + "\" has a non-integer endpoint");
        }
    }
    if (edges.empty()) throw ParseError("empty edge list");
    return edges;
}

std::vector<double> parse_state_list(const std::string& text) {
    std::vector<double> x0;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            size_t used = 0;
            x0.push_back(std::stod(token, &used));
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("initial state entry \"" + token + "\" is not a number");
        }
    }
    if (x0.empty()) throw ParseError("empty initial state list");
    return x0;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::positive:
            return "positive";
        case Verdict::negative:
            return "negative";
        default:
            return "not applicable";
    }
}

void print_distinguish_text(const DistinguishVerdict& v, VertexId observer) {
    if (!v.distinguishable) {
        std::cout << "indistinguishable from observer " << observer << "\n";
        return;
    }
    std::cout << "distinguishable from observer " << observer << " (first divergent moment m = "
              << *v.first_divergent_moment << ")\n";
    if (v.certificate) {
        const Theorem3Certificate& c = *v.certificate;
        std::cout << "certificate: vertex " << c.vertex << " ";
        if (c.kind == CertificateKind::distance_mismatch) {
            auto d = [](int x) { return x == kUnreachable ? std::string("inf") : std::to_string(x); };
            std::cout << "distance mismatch, " << d(c.dist_first) << " vs " << d(c.dist_second)
                      << "\n";
        } else {
            std::cout << "shortest path count mismatch at distance " << c.dist_first << ", "
                      << c.count_first.str() << " vs " << c.count_second.str() << "\n";
        }
    }
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << std::setprecision(17);
    out << "t";
    for (size_t v = 1; v <= traj.states.front().size(); ++v) out << ",x" << v;
    out << "\n";
    for (size_t k = 0; k < traj.grid.size(); ++k) {
        out << traj.grid[k];
        for (double s : traj.states[k]) out << "," << s;
        out << "\n";
    }
    if (!out) throw IoError("failed writing " + path);
}

void write_gap_csv(const ResponseGap& gap, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << std::setprecision(17);
    out << "t,gap\n";
    for (size_t k = 0; k < gap.grid.size(); ++k) out << gap.grid[k] << "," << gap.gap[k] << "\n";
    if (!out) throw IoError("failed writing " + path);
}

std::string derive_gap_path(const std::string& out) {
    const size_t dot = out.rfind('.');
    const size_t slash = out.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + "_gap";
    return out.substr(0, dot) + "_gap" + out.substr(dot);
}

int run_info(const std::string& path, const std::string& format) {
    const Digraph g = load_checked(path);
    if (format == "json") {
        std::cout << json_of_info(g).dump(2) << "\n";
        return kExitPositive;
    }
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "edges (" << g.edge_count() << "):";
    for (const Edge& e : g.edges()) std::cout << " " << edge_str(e);
    std::cout << "\n";
    const IntMatrix l = laplacian(g);
    std::cout << "laplacian:\n";
    for (int r = 0; r < l.rows(); ++r) {
        std::cout << " ";
        for (int c = 0; c < l.cols(); ++c) std::cout << " " << l.at(r, c).str();
        std::cout << "\n";
    }
    std::cout << "out-branching roots:";
    const auto roots = out_branching_roots(g);
    if (roots.empty()) std::cout << " none";
    for (VertexId v : roots) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "strongly connected: " << (is_strongly_connected(g) ? "yes" : "no") << "\n";
    std::cout << "characteristic polynomial: " << to_string(char_poly(g)) << "\n";
    return kExitPositive;
}

int run_distinguish(const std::string& path_a, const std::string& path_b, VertexId observer,
                    const std::string& format) {
    const Digraph g1 = load_checked(path_a);
    const Digraph g2 = load_checked(path_b);
    const DistinguishVerdict v = is_distinguishable(g1, g2, observer);
    if (format == "json")
        std::cout << json_of_verdict(v).dump(2) << "\n";
    else
        print_distinguish_text(v, observer);
    return v.distinguishable ? kExitPositive : kExitNegative;
}

int run_detect(const std::string& path, const std::string& fail, VertexId observer,
               const std::string& format) {
    const Digraph g = load_checked(path);
    const std::vector<Edge> f = parse_edge_list(fail);
    const DetectReport rep = detectability_report(g, f, observer);
    if (format == "json") {
        std::cout << json_of_detect_report(rep).dump(2) << "\n";
    } else {
        std::cout << "failure set:";
        for (const Edge& e : rep.failure_set) std::cout << " " << edge_str(e);
        std::cout << "\nobserver: " << rep.observer << "\n";
        std::cout << "prop1: " << verdict_str(rep.prop1.verdict);
        if (rep.prop1.witness) std::cout << " (witness " << edge_str(*rep.prop1.witness) << ")";
        std::cout << "\n";
        std::cout << "prop2: " << verdict_str(rep.prop2.verdict);
        if (rep.prop2.common_head) std::cout << " (common head " << *rep.prop2.common_head;
        if (rep.prop2.root) std::cout << ", root " << *rep.prop2.root;
        if (rep.prop2.common_head) std::cout << ")";
        std::cout << "\n";
        std::cout << "cor3: " << verdict_str(rep.cor3.verdict);
        if (rep.cor3.witness) std::cout << " (witness " << edge_str(*rep.cor3.witness) << ")";
        std::cout << "\n";
        std::cout << "exact: "
                  << (rep.exact.distinguishable ? "detectable (first divergent moment m = " +
                                                      std::to_string(*rep.exact.first_divergent_moment) +
                                                      ")"
                                                : "not detectable")
                  << "\n";
    }
    return rep.exact.distinguishable ? kExitPositive : kExitNegative;
}

int run_observe(const std::string& path, bool literal, const std::string& format) {
    const Digraph g = load_checked(path);
    const ObserveMode mode = literal ? ObserveMode::literal : ObserveMode::set_cover;
    const ObservationPlan plan = greedy_observation_set(g, mode);
    if (format == "json") {
        std::cout << json_of_plan(plan, mode).dump(2) << "\n";
        return kExitPositive;
    }
    std::cout << "mode: " << (literal ? "literal" : "set-cover") << "\n";
    for (size_t k = 0; k < plan.observers.size(); ++k) {
        std::cout << "observer " << plan.observers[k] << " covers:";
        for (const Edge& e : plan.covered[k]) std::cout << " " << edge_str(e);
        std::cout << "\n";
    }
    std::cout << "residual:";
    if (plan.residual.empty()) std::cout << " none";
    for (const Edge& e : plan.residual) std::cout << " " << edge_str(e);
    std::cout << "\n";
    return kExitPositive;
}

int run_simulate(const std::string& path_a, const std::string& path_b, const std::string& x0_arg,
                 VertexId observer, double tmax, int steps, const std::string& out_path,
                 const std::string& gap_path_flag, unsigned seed, const std::string& format) {
    const Digraph g1 = load_checked(path_a);
    std::optional<Digraph> g2;
    if (!path_b.empty()) g2 = load_checked(path_b);

    std::vector<double> x0;
    if (x0_arg == "witness") {
        if (!g2) throw Error("--x0 witness requires a second graph");
        if (observer == 0) throw Error("--x0 witness requires --observer");
        x0 = witness_initial_condition(g1, *g2, observer);
    } else if (x0_arg == "random") {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        x0.resize(static_cast<size_t>(g1.vertex_count()));
        for (double& v : x0) v = gauss(rng);
    } else {
        x0 = parse_state_list(x0_arg);
    }

    const std::vector<double> grid = uniform_grid(tmax, steps);
    const Trajectory traj = simulate(g1, x0, grid);
    std::string traj_file;
    if (!out_path.empty()) {
        write_trajectory_csv(traj, out_path);
        traj_file = out_path;
    }

    std::optional<ResponseGap> gap;
    std::string gap_file;
    if (g2) {
        if (observer == 0) throw Error("comparing two graphs requires --observer");
        gap = response_gap(g1, *g2, observer, x0, grid);
        if (!gap_path_flag.empty())
            gap_file = gap_path_flag;
        else if (!out_path.empty())
            gap_file = derive_gap_path(out_path);
        if (!gap_file.empty()) write_gap_csv(*gap, gap_file);
    }

    if (format == "json") {
        nlohmann::json doc;
        doc["x0"] = x0;
        doc["trajectory_file"] = traj_file.empty() ? nlohmann::json(nullptr) : nlohmann::json(traj_file);
        doc["gap_file"] = gap_file.empty() ? nlohmann::json(nullptr) : nlohmann::json(gap_file);
        doc["max_gap"] = gap ? nlohmann::json(gap->max_gap) : nlohmann::json(nullptr);
        std::cout << doc.dump(2) << "\n";
        return kExitPositive;
    }
    if (!traj_file.empty()) std::cout << "wrote trajectory to " << traj_file << "\n";
    if (gap) {
        if (!gap_file.empty()) std::cout << "wrote gap to " << gap_file << "\n";
        std::cout << std::setprecision(17) << "max_gap = " << gap->max_gap << "\n";
    }
    return kExitPositive;
}

int run_lemma1(const std::string& path, const std::vector<int>& pair, const std::string& format) {
    const Digraph g = load_checked(path);
    std::vector<std::pair<VertexId, VertexId>> todo;
    if (!pair.empty()) {
        todo.emplace_back(pair[0], pair[1]);
    } else {
        for (VertexId i = 1; i <= g.vertex_count(); ++i)
            for (VertexId j = 1; j <= g.vertex_count(); ++j)
                if (i != j) todo.emplace_back(i, j);
    }

    bool all_pass = true;
    nlohmann::json pairs = nlohmann::json::array();
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& [i, j] : todo) {
        const PathCount pc = shortest_path_count(g, i, j);
        if (pc.length == kUnreachable) {
            skipped.push_back({i, j});
            if (format != "json")
                std::cout << "pair (" << i << ", " << j << "): SKIP (no path)\n";
            continue;
        }
        const Lemma1Report rep = lemma1_verify(g, i, j);
        all_pass = all_pass && rep.pass;
        if (format == "json") {
            pairs.push_back(json_of_lemma1(rep));
        } else {
            Int lead = rep.poly.leading();
            if (lead < 0) lead = -lead;
            std::cout << "pair (" << i << ", " << j << "): d=" << pc.length
                      << " c_d=" << pc.count.str() << " degree=" << rep.poly.degree()
                      << " |lead|=" << lead.str() << " " << (rep.pass ? "pass" : "FAIL") << "\n";
        }
    }
    if (format == "json") {
        nlohmann::json doc;
        doc["pairs"] = pairs;
        doc["skipped"] = skipped;
        doc["all_pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (all_pass ? "all verified pairs pass" : "some pairs FAILED") << "\n";
    }
    return all_pass ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinguishability and link-failure detectability for consensus digraphs"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string info_graph;
    CLI::App* info_cmd = app.add_subcommand("info", "digraph summary and exact invariants");
    info_cmd->fallthrough();
    info_cmd->add_option("graph", info_graph, "graph file (JSON or DOT)")->required();

    std::string dist_a, dist_b;
    int dist_observer = 0;
    CLI::App* dist_cmd =
        app.add_subcommand("distinguish", "decide distinguishability from an observer");
    dist_cmd->fallthrough();
    dist_cmd->add_option("graphA", dist_a, "first graph file")->required();
    dist_cmd->add_option("graphB", dist_b, "second graph file")->required();
    dist_cmd->add_option("--observer", dist_observer, "observer vertex id")->required();

    std::string det_graph, det_fail;
    int det_observer = 0;
    CLI::App* det_cmd =
        app.add_subcommand("detect", "joint detectability of a link-failure set");
    det_cmd->fallthrough();
    det_cmd->add_option("graph", det_graph, "graph file")->required();
    det_cmd->add_option("--fail", det_fail, "failed edges, e.g. 1>2,3>4")->required();
    det_cmd->add_option("--observer", det_observer, "observer vertex id")->required();

    std::string obs_graph;
    bool obs_literal = false;
    CLI::App* obs_cmd = app.add_subcommand("observe", "greedy observation-point selection");
    obs_cmd->fallthrough();
    obs_cmd->add_option("graph", obs_graph, "graph file")->required();
    obs_cmd->add_flag("--literal", obs_literal, "remove each picked subgraph and recompute");

    std::string sim_a, sim_b, sim_x0 = "random", sim_out, sim_gap_out;
    int sim_observer = 0, sim_steps = 500;
    double sim_tmax = 5.0;
    unsigned sim_seed = 1;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "sample trajectories and response gaps");
    sim_cmd->fallthrough();
    sim_cmd->add_option("graphA", sim_a, "graph file")->required();
    sim_cmd->add_option("graphB", sim_b, "optional second graph file");
    sim_cmd->add_option("--x0", sim_x0, "comma list of values, or random, or witness")
        ->capture_default_str();
    sim_cmd->add_option("--observer", sim_observer, "observer vertex id");
    sim_cmd->add_option("--tmax", sim_tmax, "end of the time window")->capture_default_str();
    sim_cmd->add_option("--steps", sim_steps, "number of grid steps")->capture_default_str();
    sim_cmd->add_option("--out", sim_out, "trajectory CSV path");
    sim_cmd->add_option("--gap-out", sim_gap_out, "gap CSV path (default derived from --out)");
    sim_cmd->add_option("--seed", sim_seed, "seed for --x0 random")->capture_default_str();

    std::string lem_graph;
    std::vector<int> lem_pair;
    bool lem_all = false;
    CLI::App* lem_cmd =
        app.add_subcommand("lemma1", "verify the minor degree and leading-coefficient law");
    lem_cmd->fallthrough();
    lem_cmd->add_option("graph", lem_graph, "graph file")->required();
    lem_cmd->add_flag("--all", lem_all, "verify every ordered pair (default)");
    lem_cmd->add_option("--pair", lem_pair, "single ordered pair i j")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info_cmd) return run_info(info_graph, format);
        if (*dist_cmd) return run_distinguish(dist_a, dist_b, dist_observer, format);
        if (*det_cmd) return run_detect(det_graph, det_fail, det_observer, format);
        if (*obs_cmd) return run_observe(obs_graph, obs_literal, format);
        if (*sim_cmd)
            return run_simulate(sim_a, sim_b, sim_x0, sim_observer, sim_tmax, sim_steps, sim_out,
                                sim_gap_out, sim_seed, format);
        if (*lem_cmd) {
            if (lem_all && !lem_pair.empty())
                throw Error("--all and --pair are mutually exclusive");
            return run_lemma1(lem_graph, lem_pair, format);
        }
    } catch (const confault::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
