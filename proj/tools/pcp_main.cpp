#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pcp/algo13.hpp"
#include "pcp/io.hpp"
#include "pcp/oracle.hpp"
#include "pcp/partitioner.hpp"
#include "pcp/pointgen.hpp"
#include "pcp/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct GenOptions {
    std::string kind = "uniform";
    int n = 13;
    std::uint64_t seed = 0;
    long long bbox = 1'000'000;
    int hull_size = 0;
    std::string layers;
    std::string fixture;
};

pcp::GenSpec to_spec(const GenOptions& g) {
    pcp::GenSpec spec;
    spec.n = g.n;
    spec.seed = g.seed;
    spec.bbox = g.bbox;
    if (g.kind == "uniform") {
        spec.kind = pcp::GenKind::Uniform;
    } else if (g.kind == "convex") {
        spec.kind = pcp::GenKind::ConvexPosition;
    } else if (g.kind == "hull") {
        spec.kind = pcp::GenKind::FixedHullSize;
        spec.hull_size = g.hull_size;
    } else if (g.kind == "layers") {
        spec.kind = pcp::GenKind::FixedLayerProfile;
        std::stringstream ss(g.layers);
        std::string tok;
        while (std::getline(ss, tok, ',')) spec.layer_profile.push_back(std::stoi(tok));
        spec.n = 0;
        for (int c : spec.layer_profile) spec.n += c;
    } else if (g.kind == "fixture") {
        spec.kind = pcp::GenKind::Fixture;
        spec.fixture = g.fixture;
    } else {
        throw pcp::BadInput("unknown --kind: " + g.kind);
    }
    return spec;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pcp::BadInput("cannot open output file: " + path);
    out << content;
}

void report_failures(const pcp::VerificationReport& report) {
    if (!report.coverage_ok) std::cerr << "coverage: " << report.coverage_reason << "\n";
    for (const auto& row : report.per_part)
        if (!row.ok)
            std::cerr << "part " << row.index << ": " << row.reason
                      << (row.witness >= 0 ? " (witness point " + std::to_string(row.witness) + ")"
                                           : "")
                      << "\n";
    for (const auto& row : report.per_pair)
        if (!row.ok)
            std::cerr << "parts (" << row.i << ", " << row.j << "): " << row.reason
                      << (row.witness >= 0 ? " (witness point " + std::to_string(row.witness) + ")"
                                           : "")
                      << "\n";
}

int run_partition(const std::string& input, const std::string& out_path,
                  const std::string& svg_path, bool only13) {
    pcp::PointSet s = pcp::read_points_file(input);
    pcp::Partition p = only13 ? pcp::partition_13(s) : pcp::partition_any(s);
    pcp::VerificationReport report = pcp::verify_partition(s, p);
    write_output(out_path, pcp::partition_to_json(s, p));
    if (!svg_path.empty()) write_output(svg_path, pcp::render_svg(s, p));
    if (!report.overall) {
        report_failures(report);
        return kExitVerifyFailed;
    }
    std::cerr << "verified: true, parts: " << p.parts.size() << ", branch: " << p.branch
              << "\n";
    return kExitOk;
}

struct SweepRow {
    std::uint64_t seed = 0;
    std::string digest;
    std::string branch;
    int parts = 0;
    bool verified = false;
    double ms = 0.0;
};

int run_sweep(const GenOptions& gen, std::uint64_t count, int jobs, const std::string& out_path) {
    std::vector<SweepRow> rows(count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            GenOptions g = gen;
            g.seed = gen.seed + i;
            SweepRow row;
            row.seed = g.seed;
            try {
                pcp::PointSet s = pcp::generate(to_spec(g));
                row.digest = pcp::digest(s);
                auto t0 = std::chrono::steady_clock::now();
                pcp::Partition p = pcp::partition_13(s);
                auto t1 = std::chrono::steady_clock::now();
                row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                row.branch = p.branch;
                row.parts = static_cast<int>(p.parts.size());
                row.verified = pcp::verify_partition(s, p).overall;
            } catch (const std::exception& e) {
                row.branch = std::string("error: ") + e.what();
            }
            rows[i] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "seed,digest,command,branch,parts,verified,ms\n";
    bool all_ok = true;
    for (const SweepRow& row : rows) {
        csv << row.seed << "," << row.digest << ",partition13," << row.branch << "," << row.parts
            << "," << (row.verified ? "true" : "false") << "," << row.ms << "\n";
        all_ok = all_ok && row.verified;
    }
    write_output(out_path, csv.str());
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pcp: pseudo-convex partitioning of planar point sets"};
    app.require_subcommand(1);

    GenOptions gen;
    std::string input, out_path, svg_path;

    auto add_gen_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kind", gen.kind, "uniform|convex|hull|layers|fixture");
        cmd->add_option("--n", gen.n, "point count");
        cmd->add_option("--seed", gen.seed, "PRNG seed");
        cmd->add_option("--bbox", gen.bbox, "coordinate bound (default 10^6)");
        cmd->add_option("--hull-size", gen.hull_size, "hull size for --kind hull");
        cmd->add_option("--layers", gen.layers, "layer profile, e.g. 8,4,1");
        cmd->add_option("--fixture", gen.fixture, "fixture name for --kind fixture");
    };

    auto* cmd_gen = app.add_subcommand("gen", "generate a seeded point set");
    add_gen_flags(cmd_gen);
    cmd_gen->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_p13 = app.add_subcommand("partition13", "3-part partition of a 13-point set");
    cmd_p13->add_option("input", input, "point file")->required();
    cmd_p13->add_option("--out", out_path, "partition JSON output");
    cmd_p13->add_option("--svg", svg_path, "SVG rendering output");

    auto* cmd_part = app.add_subcommand("partition", "partition any set into <=ceil(3n/13) parts");
    cmd_part->add_option("input", input, "point file")->required();
    cmd_part->add_option("--out", out_path, "partition JSON output");
    cmd_part->add_option("--svg", svg_path, "SVG rendering output");

    auto* cmd_verify = app.add_subcommand("verify", "verify a partition JSON file");
    cmd_verify->add_option("input", input, "partition JSON file")->required();

    int max_parts = 3;
    bool degenerate = false;
    std::uint64_t node_limit = 50'000'000;
    auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive minimum-partition search");
    cmd_oracle->add_option("input", input, "point file")->required();
    cmd_oracle->add_option("--max-parts", max_parts, "block budget (default 3)");
    cmd_oracle->add_flag("--degenerate", degenerate, "allow 1- and 2-point blocks");
    cmd_oracle->add_option("--node-limit", node_limit, "search node budget");
    cmd_oracle->add_option("--out", out_path, "witness JSON output");

    auto* cmd_render = app.add_subcommand("render", "render a partition JSON file as SVG");
    cmd_render->add_option("input", input, "partition JSON file")->required();
    cmd_render->add_option("--out", out_path, "SVG output (default stdout)");

    std::uint64_t count = 100;
    int jobs = 1;
    auto* cmd_sweep = app.add_subcommand("sweep", "batch partition13 runs with a CSV summary");
    add_gen_flags(cmd_sweep);
    cmd_sweep->add_option("--count", count, "number of seeds");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");
    cmd_sweep->add_option("--out", out_path, "CSV output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) {
            write_output(out_path, pcp::write_points(pcp::generate(to_spec(gen))));
            return kExitOk;
        }
        if (cmd_p13->parsed()) return run_partition(input, out_path, svg_path, true);
        if (cmd_part->parsed()) return run_partition(input, out_path, svg_path, false);
        if (cmd_verify->parsed()) {
            std::ifstream in(input);
            if (!in) throw pcp::BadInput("cannot open " + input);
            std::stringstream buf;
            buf << in.rdbuf();
            auto [s, p] = pcp::partition_from_json(buf.str());
            pcp::VerificationReport report = pcp::verify_partition(s, p);
            if (!report.overall) {
                report_failures(report);
                std::cout << "verified: false\n";
                return kExitVerifyFailed;
            }
            std::cout << "verified: true, parts: " << p.parts.size() << "\n";
            return kExitOk;
        }
        if (cmd_oracle->parsed()) {
            pcp::PointSet s = pcp::read_points_file(input);
            pcp::SearchBudget budget;
            budget.max_parts = max_parts;
            budget.node_limit = node_limit;
            pcp::OracleResult res = pcp::min_partition(s, budget, degenerate);
            if (res.budget_exhausted && !res.witness) {
                std::cout << "budget exhausted after " << res.nodes << " nodes\n";
                return kExitVerifyFailed;
            }
            if (!res.witness) {
                std::cout << "no partition within " << max_parts << " parts\n";
                return kExitOk;
            }
            std::cout << "psi = " << res.value << (res.budget_exhausted ? " (upper bound)" : "")
                      << ", nodes = " << res.nodes << "\n";
            if (!out_path.empty()) write_output(out_path, partition_to_json(s, *res.witness));
            return kExitOk;
        }
        if (cmd_render->parsed()) {
            std::ifstream in(input);
            if (!in) throw pcp::BadInput("cannot open " + input);
            std::stringstream buf;
            buf << in.rdbuf();
            auto [s, p] = pcp::partition_from_json(buf.str());
            write_output(out_path, pcp::render_svg(s, p));
            return kExitOk;
        }
        if (cmd_sweep->parsed()) return run_sweep(gen, count, jobs, out_path);
    } catch (const pcp::BadInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
