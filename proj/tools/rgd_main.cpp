// rgd: command-line driver for the rigidity experiments.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 parameter error,
// 3 numeric or generation failure.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "rgd/codec.hpp"
#include "rgd/error.hpp"
#include "rgd/experiments.hpp"
#include "rgd/graph.hpp"

namespace {

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "json";
};

void emit(const std::string& text, const std::string& path) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw rgd::ParameterError("cannot write output file " + path);
    file << text;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

int publish(rgd::ExperimentRecord record, const GlobalOptions& opts, double elapsed_ms) {
    if (opts.format == "csv") {
        emit(rgd::runs_to_csv(record.doc), opts.out);
    } else {
        record.doc["timing"] = {{"timestamp", utc_timestamp()}, {"elapsed_ms", elapsed_ms}};
        emit(record.doc.dump(2) + "\n", opts.out);
    }
    std::cerr << record.doc["subcommand"].get<std::string>() << ": verdict "
              << record.doc["summary"]["verdict"].get<std::string>() << "\n";
    return record.passed ? 0 : 1;
}

rgd::RigidityKind parse_kind(const std::string& s) {
    if (s == "spectral") return rgd::RigidityKind::Spectral;
    if (s == "cut") return rgd::RigidityKind::Cut;
    throw rgd::ParameterError("--kind must be spectral or cut");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regular-graph sketching experiments and calculators"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_option("--seed", opts.seed, "Base seed; task i uses seed + i");
    app.add_option("--out", opts.out, "Output path, '-' for stdout");
    app.add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.fallthrough();

    std::uint32_t gen_n = 0, gen_d = 0;
    bool gen_bipartite = false;
    auto* gen = app.add_subcommand("gen", "Generate a random regular graph file");
    gen->add_option("--n", gen_n, "Vertex count")->required();
    gen->add_option("--d", gen_d, "Degree")->required();
    gen->add_flag("--bipartite", gen_bipartite, "Bipartite with classes {0..n/2-1}, {n/2..n-1}");

    rgd::RigidityScanConfig scan;
    std::string scan_kind = "spectral";
    auto* scan_cmd = app.add_subcommand("rigidity-scan", "Check overlap bounds on perturbed pairs");
    scan_cmd->add_option("--kind", scan_kind, "spectral or cut")->check(CLI::IsMember({"spectral", "cut"}));
    scan_cmd->add_option("--n", scan.n);
    scan_cmd->add_option("--d", scan.d);
    scan_cmd->add_option("--seeds", scan.seeds, "Number of base graphs");
    scan_cmd->add_option("--swaps", scan.swaps, "Switch counts applied to each base graph")->delimiter(',');

    rgd::WitnessConfig wit;
    auto* wit_cmd = app.add_subcommand("witness", "Hyperplane-rounding witness cuts");
    wit_cmd->add_option("--n", wit.n);
    wit_cmd->add_option("--d", wit.d);
    wit_cmd->add_option("--delta", wit.delta, "Target fraction of edges of G missing from H");
    wit_cmd->add_option("--epsilon", wit.epsilon, "Target approximation factor to refute");
    wit_cmd->add_option("--trials", wit.trials);
    wit_cmd->add_option("--seeds", wit.seeds);
    wit_cmd->add_option("--min-success-fraction", wit.min_success_fraction);

    rgd::FriedmanConfig fr;
    auto* fr_cmd = app.add_subcommand("friedman", "Spectral factor of random regular graphs against K_n");
    fr_cmd->add_option("--n", fr.n);
    fr_cmd->add_option("--d", fr.d);
    fr_cmd->add_option("--seeds", fr.seeds);

    rgd::CodecConfig codec;
    std::string encode_path, decode_path, reference_path, sketch_path;
    auto* codec_cmd = app.add_subcommand("codec", "Relative-encoding audit, or encode/decode files");
    codec_cmd->add_option("--n", codec.n);
    codec_cmd->add_option("--d", codec.d);
    codec_cmd->add_option("--pairs", codec.pairs);
    codec_cmd->add_option("--encode", encode_path, "Graph file to encode against --reference");
    codec_cmd->add_option("--decode", decode_path, "Sketch file to decode against --reference");
    codec_cmd->add_option("--reference", reference_path, "Reference graph file");
    codec_cmd->add_option("--sketch", sketch_path, "Sketch file written by --encode");

    rgd::CountConfig count;
    std::vector<std::uint32_t> count_grid;
    auto* count_cmd = app.add_subcommand("count", "Regular-graph count formula against exact enumeration");
    count_cmd->add_option("--grid", count_grid, "Flat list n1,d1,n2,d2,...")->delimiter(',');

    rgd::LowerBoundConfig lb;
    std::string lb_kind = "spectral";
    auto* lb_cmd = app.add_subcommand("lowerbound", "Counting gap behind the sketch-size lower bounds");
    lb_cmd->add_option("--kind", lb_kind)->check(CLI::IsMember({"spectral", "cut"}));
    lb_cmd->add_option("--n", lb.ns, "Vertex counts")->delimiter(',');
    lb_cmd->add_option("--epsilon", lb.epsilons, "Approximation factors")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](rgd::ExperimentRecord record) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return publish(std::move(record), opts, ms);
    };

    try {
        if (*gen) {
            std::ostringstream text;
            std::string hash;
            if (gen_bipartite) {
                const auto g = rgd::random_bipartite_regular(gen_n, gen_d, opts.seed);
                rgd::write_graph(text, g);
                hash = rgd::canonical_hash(g);
            } else {
                const auto g = rgd::random_regular(gen_n, gen_d, opts.seed);
                rgd::write_graph(text, g);
                hash = rgd::canonical_hash(g);
            }
            emit(text.str(), opts.out);
            (opts.out == "-" ? std::cerr : std::cout) << hash << "\n";
            return 0;
        }
        if (*scan_cmd) {
            scan.kind = parse_kind(scan_kind);
            scan.seed = opts.seed;
            if (scan.kind == rgd::RigidityKind::Cut && scan_cmd->count("--n") == 0) scan.n = 16;
            if (scan.kind == rgd::RigidityKind::Cut && scan_cmd->count("--d") == 0) scan.d = 3;
            if (scan.kind == rgd::RigidityKind::Cut && scan_cmd->count("--swaps") == 0) scan.swaps = {1, 2, 4, 8};
            return finish(rgd::run_rigidity_scan(scan));
        }
        if (*wit_cmd) {
            wit.seed = opts.seed;
            return finish(rgd::run_witness(wit));
        }
        if (*fr_cmd) {
            fr.seed = opts.seed;
            return finish(rgd::run_friedman(fr));
        }
        if (*codec_cmd) {
            if (!encode_path.empty()) {
                if (reference_path.empty() || sketch_path.empty())
                    throw rgd::ParameterError("--encode needs --reference and --sketch");
                const auto g = rgd::read_graph_file(encode_path).graph;
                const auto h = rgd::read_graph_file(reference_path).graph;
                const rgd::SketchBits s = rgd::encode_relative(g, h);
                rgd::write_sketch_file(sketch_path, s);
                std::cout << s.bits.size() << " bits, " << s.layout.extra_edge_count << " extra edges\n";
                return 0;
            }
            if (!decode_path.empty()) {
                if (reference_path.empty()) throw rgd::ParameterError("--decode needs --reference");
                const auto h = rgd::read_graph_file(reference_path).graph;
                const auto g = rgd::decode_relative(rgd::read_sketch_file(decode_path), h);
                emit(rgd::to_text(g), opts.out);
                return 0;
            }
            codec.seed = opts.seed;
            return finish(rgd::run_codec_audit(codec));
        }
        if (*count_cmd) {
            if (!count_grid.empty()) {
                if (count_grid.size() % 2 != 0) throw rgd::ParameterError("--grid needs n,d pairs");
                count.grid.clear();
                for (std::size_t k = 0; k < count_grid.size(); k += 2)
                    count.grid.emplace_back(count_grid[k], count_grid[k + 1]);
            }
            return finish(rgd::run_count_audit(count));
        }
        if (*lb_cmd) {
            lb.kind = parse_kind(lb_kind);
            return finish(rgd::run_lowerbound(lb));
        }
    } catch (const rgd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
