// anacon: analytic connectivity of k-uniform hypergraphs.
//
// Verbs:
//   compute  solve for alpha(H) and report per-vertex subproblem results
//   verify   compute alpha(H), then check it against every applicable bound
//   gen      write a hypergraph from a built-in family to a .khg file
//   oracle   exhaustive grid minimization, an independent upper bound
//
// Exit codes: 0 success, 1 input/parse error, 2 invalid configuration or
// parameters (including oversized grids), 3 iteration budget exhausted
// before convergence, 4 bound check failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anacon/bounds.hpp"
#include "anacon/hypergraph.hpp"
#include "anacon/report.hpp"
#include "anacon/solver.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

anacon::Hypergraph load_input(const std::string& path) {
    if (path == "-") return anacon::parse_khg(std::cin);
    std::ifstream in(path);
    if (!in) throw anacon::ParseError(0, "cannot open '" + path + "'");
    return anacon::parse_khg(in);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw anacon::ParseError(0, "cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw anacon::ParseError(0, "write to '" + out_path + "' failed");
}

struct CommonFlags {
    anacon::SolverConfig cfg;
    int jobs = 1;
    std::string format = "human";
    bool timings = false;
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--tol", f.cfg.tol, "convergence tolerance")->capture_default_str();
    cmd->add_option("--max-iter", f.cfg.max_iter, "iteration budget per subproblem start")
        ->capture_default_str();
    cmd->add_option("--restarts", f.cfg.restarts, "random restarts besides the uniform start")
        ->capture_default_str();
    cmd->add_option("--seed", f.cfg.seed, "random seed")->capture_default_str();
    cmd->add_option("--step0", f.cfg.step0, "base mirror-descent step size")->capture_default_str();
    cmd->add_option("--eps-initial", f.cfg.eps_initial, "initial smoothing")->capture_default_str();
    cmd->add_option("--eps-halve-every", f.cfg.eps_halving_period,
                    "iterations between smoothing halvings")
        ->capture_default_str();
    cmd->add_option("--eps-floor", f.cfg.eps_floor, "smallest smoothing value")
        ->capture_default_str();
    cmd->add_option("--jobs", f.jobs, "threads across subproblems (never changes results)")
        ->capture_default_str();
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    cmd->add_flag("--timings", f.timings,
                  "include wall-clock timings (off by default: timings vary run to run)");
    cmd->add_option("--out", f.out_path, "write the report to this file instead of stdout");
}

int emit_and_code(const anacon::RunRecord& rec, const CommonFlags& f, int bounds_rc) {
    write_output(f.out_path, f.format == "json" ? anacon::render_json(rec)
                                                : anacon::render_human(rec));
    for (const anacon::SolveOutcome& o : rec.result.per_vertex)
        if (!o.converged) return 3;
    return bounds_rc;
}

int run_compute(const std::string& path, const CommonFlags& f) {
    const auto t0 = std::chrono::steady_clock::now();
    anacon::RunRecord rec;
    rec.input = path;
    const anacon::Hypergraph h = load_input(path);
    rec.timings.parse = seconds_since(t0);
    rec.n = h.n();
    rec.k = h.k();
    rec.m = h.edge_count();
    rec.config = f.cfg;
    rec.include_timings = f.timings;
    const auto t1 = std::chrono::steady_clock::now();
    rec.result = anacon::analytic_connectivity(h, f.cfg, f.jobs);
    rec.timings.solve = seconds_since(t1);
    rec.timings.total = seconds_since(t0);
    return emit_and_code(rec, f, 0);
}

int run_verify(const std::string& path, const CommonFlags& f, double slack) {
    const auto t0 = std::chrono::steady_clock::now();
    anacon::RunRecord rec;
    rec.input = path;
    const anacon::Hypergraph h = load_input(path);
    rec.timings.parse = seconds_since(t0);
    rec.n = h.n();
    rec.k = h.k();
    rec.m = h.edge_count();
    rec.config = f.cfg;
    rec.include_timings = f.timings;
    const auto t1 = std::chrono::steady_clock::now();
    rec.result = anacon::analytic_connectivity(h, f.cfg, f.jobs);
    rec.timings.solve = seconds_since(t1);
    const auto t2 = std::chrono::steady_clock::now();
    rec.bounds = anacon::verify_all(h, rec.result.alpha, slack);
    rec.timings.verify = seconds_since(t2);
    rec.timings.total = seconds_since(t0);
    return emit_and_code(rec, f, rec.bounds->all_pass() ? 0 : 4);
}

int run_gen(const std::string& family, const std::string& out_path, int n, int k, int m,
            std::uint64_t seed, bool connected) {
    anacon::Hypergraph h = [&]() {
        if (family == "fano") return anacon::gen_fano();
        if (n <= 0 || k <= 0)
            throw std::invalid_argument("family '" + family + "' needs --n and --k");
        if (family == "complete") return anacon::gen_complete(n, k);
        if (m < 0) throw std::invalid_argument("family 'random' needs --m");
        return anacon::gen_random(n, k, m, seed, connected);
    }();
    write_output(out_path, anacon::serialize_khg(h));
    return 0;
}

int run_oracle(const std::string& path, int grid, int exclude, bool per_j,
               const std::string& format, const std::string& out_path) {
    const anacon::Hypergraph h = load_input(path);
    std::vector<std::pair<int, double>> values;
    if (exclude > 0) {
        values.emplace_back(exclude, anacon::grid_oracle(h, exclude, grid));
    } else {
        for (int j = 1; j <= h.n(); ++j) values.emplace_back(j, anacon::grid_oracle(h, j, grid));
    }
    double upper = values.front().second;
    for (const auto& [j, v] : values) upper = std::min(upper, v);

    std::string text;
    if (format == "json") {
        anacon::JsonWriter w;
        w.begin_object();
        w.key("format").value("anacon-oracle");
        w.key("version").value(1);
        w.key("input").begin_object();
        w.key("path").value(path);
        w.key("n").value(h.n());
        w.key("k").value(h.k());
        w.key("m").value(h.edge_count());
        w.end_object();
        w.key("grid").value(grid);
        w.key("alpha_upper").value(upper);
        w.key("per_j").begin_array();
        for (const auto& [j, v] : values) {
            w.begin_object();
            w.key("excluded").value(j);
            w.key("value").value(v);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        text = w.str() + "\n";
    } else {
        text = "grid oracle (resolution " + std::to_string(grid) +
               "): alpha <= " + anacon::fmt_g(upper, 12) + "\n";
        if (per_j || exclude > 0)
            for (const auto& [j, v] : values)
                text += "  j=" + std::to_string(j) + ": " + anacon::fmt_g(v, 12) + "\n";
    }
    write_output(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic connectivity of k-uniform hypergraphs"};
    app.require_subcommand(1);
    int rc = 0;

    // compute
    auto* compute = app.add_subcommand("compute", "solve for alpha(H)");
    std::string compute_path;
    CommonFlags compute_flags;
    compute->add_option("input", compute_path, ".khg file, or - for stdin")->required();
    add_common_flags(compute, compute_flags);
    compute->callback([&]() { rc = run_compute(compute_path, compute_flags); });

    // verify
    auto* verify = app.add_subcommand("verify", "solve, then check all applicable bounds");
    std::string verify_path;
    CommonFlags verify_flags;
    double slack = 1e-6;
    verify->add_option("input", verify_path, ".khg file, or - for stdin")->required();
    verify->add_option("--slack", slack, "tolerance absorbed by every bound comparison")
        ->capture_default_str();
    add_common_flags(verify, verify_flags);
    verify->callback([&]() { rc = run_verify(verify_path, verify_flags, slack); });

    // gen
    auto* gen = app.add_subcommand("gen", "generate a hypergraph family as .khg");
    std::string gen_family, gen_out;
    int gen_n = 0, gen_k = 0, gen_m = -1;
    std::uint64_t gen_seed = 0;
    bool gen_connected = false;
    gen->add_option("family", gen_family, "complete | fano | random")
        ->required()
        ->check(CLI::IsMember({"complete", "fano", "random"}));
    gen->add_option("output", gen_out, "destination file, or - for stdout")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--k", gen_k, "uniformity");
    gen->add_option("--m", gen_m, "edge count (random family)");
    gen->add_option("--seed", gen_seed, "random seed (random family)")->capture_default_str();
    gen->add_flag("--connected", gen_connected, "resample until connected (random family)");
    gen->callback(
        [&]() { rc = run_gen(gen_family, gen_out, gen_n, gen_k, gen_m, gen_seed, gen_connected); });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive grid upper bound on alpha");
    std::string oracle_path, oracle_format = "human", oracle_out;
    int oracle_grid = 24, oracle_exclude = 0;
    bool oracle_per_j = false;
    oracle->add_option("input", oracle_path, ".khg file, or - for stdin")->required();
    oracle->add_option("--grid", oracle_grid, "grid resolution M (points have coordinates c/M)")
        ->capture_default_str();
    oracle->add_option("--exclude", oracle_exclude, "only the subproblem excluding this vertex");
    oracle->add_flag("--per-j", oracle_per_j, "list the per-vertex minima");
    oracle->add_option("--format", oracle_format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    oracle->add_option("--out", oracle_out, "write the report to this file instead of stdout");
    oracle->callback([&]() {
        rc = run_oracle(oracle_path, oracle_grid, oracle_exclude, oracle_per_j, oracle_format,
                        oracle_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const anacon::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return app.got_subcommand("gen") ? 2 : 1;
    }
    return rc;
}
