// Command-line front end: recolor, verify, distance, gen, batch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "recolor/engine.hpp"
#include "recolor/generate.hpp"
#include "recolor/io.hpp"
#include "recolor/statespace.hpp"
#include "recolor/verify.hpp"

namespace {

constexpr std::uint64_t seed_stride = 0x9E3779B97F4A7C15ULL;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

bool log_enabled() {
    const char* v = std::getenv("RECOLOR_LOG");
    return v != nullptr && *v != '\0';
}

recolor::SolverKind solver_from(const std::string& name) {
    return name == "backtrack" ? recolor::SolverKind::backtrack
                               : recolor::SolverKind::thomassen;
}

struct RecolorArgs {
    std::string graph, alpha, beta, out, solver = "thomassen";
    int colors = 10;
};

int cmd_recolor(const RecolorArgs& args) {
    auto pg = recolor::parse_graph(read_file(args.graph));
    int n = pg.graph.n;
    auto a = recolor::parse_coloring(read_file(args.alpha), n, args.colors);
    auto b = recolor::parse_coloring(read_file(args.beta), n, args.colors);
    auto run = recolor::recolor_run(pg.graph, pg.embedding, a, b, args.colors,
                                    solver_from(args.solver));
    if (log_enabled()) {
        for (std::size_t i = 0; i < run.phases.size(); ++i)
            std::cerr << "phase=" << i << " anchor_position=" << run.phases[i].anchor_position
                      << " anchor_vertex=" << run.phases[i].anchor_vertex
                      << " steps=" << run.phases[i].recolored.size() << "\n";
    }
    std::string text = recolor::serialize_sequence(n, args.colors, run.sequence.steps);
    if (!args.out.empty())
        write_file(args.out, text);
    else
        std::cout << text;
    std::cout << "steps=" << run.sequence.steps.size() << " bound=" << 1LL * n * n
              << " phases=" << run.phases.size() << "\n";
    return 0;
}

struct VerifyArgs {
    std::string graph, alpha, beta, sequence;
};

int cmd_verify(const VerifyArgs& args) {
    auto pg = recolor::parse_graph(read_file(args.graph));
    auto sf = recolor::parse_sequence(read_file(args.sequence));
    if (sf.n != pg.graph.n)
        throw recolor::Error(recolor::ErrorCode::dimension_mismatch,
                             "sequence covers " + std::to_string(sf.n) +
                                 " vertices, graph has " + std::to_string(pg.graph.n));
    auto a = recolor::parse_coloring(read_file(args.alpha), sf.n, sf.universe);
    auto b = recolor::parse_coloring(read_file(args.beta), sf.n, sf.universe);
    auto report = recolor::verify_sequence(pg.graph, a, b, sf.steps, sf.universe);
    if (report.valid) {
        std::cout << "valid steps=" << report.step_count
                  << " max-per-vertex=" << report.max_per_vertex << "\n";
        return 0;
    }
    std::cout << "invalid step=" << report.step_index << " reason=\""
              << recolor::to_string(report.violation) << "\" detail=\"" << report.detail
              << "\"\n";
    return 1;
}

struct DistanceArgs {
    std::string graph, alpha, beta;
    int colors = 10;
    long long budget = 1'000'000;
};

int cmd_distance(const DistanceArgs& args) {
    auto pg = recolor::parse_graph(read_file(args.graph));
    int n = pg.graph.n;
    auto a = recolor::parse_coloring(read_file(args.alpha), n, args.colors);
    auto b = recolor::parse_coloring(read_file(args.beta), n, args.colors);
    recolor::ReconfigSpace space{pg.graph, args.colors, args.budget};
    auto d = recolor::bfs_distance(space, a, b);
    if (d.has_value())
        std::cout << "distance=" << *d << "\n";
    else
        std::cout << "unreachable\n";
    return 0;
}

struct GenArgs {
    std::string out;
    int n = 0, count = 1, colors = 10;
    std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& args) {
    for (int i = 0; i < args.count; ++i) {
        std::uint64_t base = args.seed + seed_stride * static_cast<std::uint64_t>(i);
        auto eg = recolor::stacked_triangulation(args.n, base);
        auto a = recolor::random_proper_coloring(eg.graph, args.colors, base + 1);
        auto b = recolor::random_proper_coloring(eg.graph, args.colors, base + 2);
        std::string stem = args.out + std::to_string(i);
        write_file(stem + ".graph", recolor::serialize_graph(eg.graph, &eg.embedding));
        write_file(stem + ".alpha", recolor::serialize_coloring(a));
        write_file(stem + ".beta", recolor::serialize_coloring(b));
    }
    std::cout << "instances=" << args.count << " n=" << args.n << " colors=" << args.colors
              << "\n";
    return 0;
}

struct BatchArgs {
    std::string out, solver = "thomassen";
    int n = 0, count = 1, colors = 10;
    std::uint64_t seed = 0;
    long long budget = 1'000'000;
};

int cmd_batch(const BatchArgs& args) {
    std::ostringstream csv;
    csv << "instance,seed,n,l,steps,phases,max_per_vertex,bound,bfs_distance\n";
    for (int i = 0; i < args.count; ++i) {
        std::uint64_t base = args.seed + seed_stride * static_cast<std::uint64_t>(i);
        auto eg = recolor::stacked_triangulation(args.n, base);
        auto a = recolor::random_proper_coloring(eg.graph, args.colors, base + 1);
        auto b = recolor::random_proper_coloring(eg.graph, args.colors, base + 2);
        auto run = recolor::recolor_run(eg.graph, eg.embedding, a, b, args.colors,
                                        solver_from(args.solver));
        auto report = recolor::verify_sequence(eg.graph, a, b, run.sequence.steps, args.colors);
        if (!report.valid)
            throw recolor::Error(recolor::ErrorCode::precondition_violation,
                                 "produced sequence fails verification: " + report.detail);
        std::string dist = "na";
        if (recolor::detail::total_states(args.colors, args.n, args.budget).has_value()) {
            recolor::ReconfigSpace space{eg.graph, args.colors, args.budget};
            auto d = recolor::bfs_distance(space, a, b);
            dist = d.has_value() ? std::to_string(*d) : "na";
        }
        csv << i << "," << base << "," << args.n << "," << args.colors << ","
            << report.step_count << "," << run.phases.size() << "," << report.max_per_vertex
            << "," << 1LL * args.n * args.n << "," << dist << "\n";
    }
    if (!args.out.empty())
        write_file(args.out, csv.str());
    else
        std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar graph recoloring toolkit"};
    app.require_subcommand(1);

    RecolorArgs rc;
    auto* sub_recolor = app.add_subcommand("recolor", "compute a recoloring sequence");
    sub_recolor->add_option("graph", rc.graph, "graph file")->required();
    sub_recolor->add_option("alpha", rc.alpha, "start coloring file")->required();
    sub_recolor->add_option("beta", rc.beta, "target coloring file")->required();
    sub_recolor->add_option("-l,--colors", rc.colors, "number of colors");
    sub_recolor->add_option("--solver", rc.solver, "thomassen or backtrack")
        ->check(CLI::IsMember({"thomassen", "backtrack"}));
    sub_recolor->add_option("--out", rc.out, "write the sequence here instead of stdout");

    VerifyArgs vf;
    auto* sub_verify = app.add_subcommand("verify", "replay and check a sequence");
    sub_verify->add_option("graph", vf.graph, "graph file")->required();
    sub_verify->add_option("alpha", vf.alpha, "start coloring file")->required();
    sub_verify->add_option("beta", vf.beta, "target coloring file")->required();
    sub_verify->add_option("sequence", vf.sequence, "sequence file")->required();

    DistanceArgs di;
    auto* sub_distance = app.add_subcommand("distance", "exact recoloring distance");
    sub_distance->add_option("graph", di.graph, "graph file")->required();
    sub_distance->add_option("alpha", di.alpha, "start coloring file")->required();
    sub_distance->add_option("beta", di.beta, "target coloring file")->required();
    sub_distance->add_option("-l,--colors", di.colors, "number of colors");
    sub_distance->add_option("--budget", di.budget, "largest state count to explore");

    GenArgs gn;
    auto* sub_gen = app.add_subcommand("gen", "generate instances");
    sub_gen->add_option("-n", gn.n, "vertex count")->required();
    sub_gen->add_option("--count", gn.count, "number of instances");
    sub_gen->add_option("--seed", gn.seed, "base seed");
    sub_gen->add_option("-l,--colors", gn.colors, "number of colors");
    sub_gen->add_option("--out", gn.out, "output path prefix")->required();

    BatchArgs bt;
    auto* sub_batch = app.add_subcommand("batch", "generate, solve, verify, report CSV");
    sub_batch->add_option("-n", bt.n, "vertex count")->required();
    sub_batch->add_option("--count", bt.count, "number of instances");
    sub_batch->add_option("--seed", bt.seed, "base seed");
    sub_batch->add_option("-l,--colors", bt.colors, "number of colors");
    sub_batch->add_option("--solver", bt.solver, "thomassen or backtrack")
        ->check(CLI::IsMember({"thomassen", "backtrack"}));
    sub_batch->add_option("--budget", bt.budget, "state budget for the distance column");
    sub_batch->add_option("--out", bt.out, "CSV path instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_recolor->parsed()) return cmd_recolor(rc);
        if (sub_verify->parsed()) return cmd_verify(vf);
        if (sub_distance->parsed()) return cmd_distance(di);
        if (sub_gen->parsed()) return cmd_gen(gn);
        if (sub_batch->parsed()) return cmd_batch(bt);
    } catch (const recolor::SolverUnsatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        const auto& ids = e.vertex_ids();
        for (int lv = 1; lv <= e.lists().size(); ++lv) {
            std::cerr << "  vertex " << ids[lv] << " list:";
            for (int c : recolor::mask_to_colors(e.lists()[lv])) std::cerr << " " << c;
            std::cerr << "\n";
        }
        return 2;
    } catch (const recolor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case recolor::ErrorCode::solver_unsat: return 2;
        case recolor::ErrorCode::budget_exceeded: return 3;
        default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
