// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <string>

#include "rgd/approx.hpp"
#include "rgd/codec.hpp"
#include "rgd/counting.hpp"
#include "rgd/experiments.hpp"
#include "rgd/linalg.hpp"
#include "rgd/rigidity.hpp"
#include "rgd/rng.hpp"

using namespace rgd;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= limit_s;
    const bool ok = out.ok && in_time;
    if (!ok) ++failures;
    std::printf("%s  %2d %-28s %s (%.2fs / %.0fs%s)\n", ok ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs,
                limit_s, in_time ? "" : ", over time limit");
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<char> slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

int main() {
    criterion(1, "frobenius identity", 10, [] {
        int exact = 0;
        for (std::uint64_t s = 1; s <= 100; ++s) {
            const RegularGraph h = random_regular(200, 8, s);
            const RegularGraph g = perturb_edges(h, s, substream_seed(s, 1));
            exact += adjacency_difference_frobenius_sq(g, h) == 2 * edge_overlap(g, h).sym_diff;
        }
        return Outcome{exact == 100, fmt("%d/100 pairs exact", exact)};
    });

    criterion(2, "spectral rigidity scan", 300, [] {
        const ExperimentRecord r = run_rigidity_scan(RigidityScanConfig{});
        const auto& s = r.doc["summary"];
        return Outcome{r.passed && s["rows"] == 200,
                       fmt("%d rows, %d violations", s["rows"].get<int>(), s["violations"].get<int>())};
    });

    criterion(3, "cut rigidity scan (exact)", 120, [] {
        RigidityScanConfig cfg;
        cfg.kind = RigidityKind::Cut;
        cfg.n = 16;
        cfg.d = 3;
        cfg.seeds = 25;
        cfg.swaps = {1, 2, 4, 8};
        const ExperimentRecord r = run_rigidity_scan(cfg);
        const auto& s = r.doc["summary"];
        return Outcome{r.passed && s["rows"] == 100,
                       fmt("%d pairs, %d violations", s["rows"].get<int>(), s["violations"].get<int>())};
    });

    criterion(4, "witness rounding", 300, [] {
        const ExperimentRecord r = run_witness(WitnessConfig{});
        bool deltas = true;
        for (const auto& row : r.doc["runs"]) deltas = deltas && row["delta"].get<double>() >= 0.5;
        const auto& s = r.doc["summary"];
        return Outcome{r.passed && deltas, fmt("%d/%d seeds succeeded (need %d)", s["successes"].get<int>(),
                                               s["seeds"].get<int>(), s["required_successes"].get<int>())};
    });

    criterion(5, "rounding expectation", 60, [] {
        std::uint32_t attempts = 0;
        const BipartiteRegularGraph g = connected_random_bipartite(64, 4, 5, attempts);
        const BipartiteRegularGraph h = perturb_to_delta(g, 0.5, substream_seed(5, 1)).first;
        const GramVectors gv = gram_vectors(g, h);
        const double expect = rounding_expectation(gv);
        const double gram = gram_value(gv);
        const RoundingStats mc = monte_carlo_rounding(gv, 100'000, 6);
        const double z = std::abs(mc.mean - expect) / mc.std_error();
        const bool arcsin_step = expect >= 2.0 / std::numbers::pi * gram;
        return Outcome{z <= 3.0 && arcsin_step,
                       fmt("mean %.3f vs %.3f (%.2f SE); arcsin %.3f >= %.3f", mc.mean, expect, z, expect,
                           2.0 / std::numbers::pi * gram)};
    });

    criterion(6, "z-norm range", 10, [] {
        double lo = 3.0, hi = 1.0;
        int pairs = 0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            const std::uint32_t d = 2 + s % 9;
            const BipartiteRegularGraph g = random_bipartite_regular(100, d, s);
            const BipartiteRegularGraph h = perturb_edges(g, 1 + 7 * s, substream_seed(s, 1));
            const GramVectors gv = gram_vectors(g, h);
            for (double z : gv.z_norm_sq) {
                lo = std::min(lo, z);
                hi = std::max(hi, z);
            }
            ++pairs;
        }
        return Outcome{lo >= 1.0 - 1e-12 && hi <= 3.0 + 1e-12, fmt("%d pairs, |z|^2 in [%.6f, %.6f]", pairs, lo, hi)};
    });

    criterion(7, "codec round trip", 10, [] {
        const ExperimentRecord r = run_codec_audit(CodecConfig{});
        const auto& s = r.doc["summary"];
        // Same pair written twice through independent encodes.
        const auto dir = std::filesystem::temp_directory_path();
        const auto pa = dir / "rgd_accept_a.sketch", pb = dir / "rgd_accept_b.sketch";
        const RegularGraph h = random_regular(200, 8, 42);
        const RegularGraph g = perturb_edges(h, 30, 43);
        write_sketch_file(pa.string(), encode_relative(g, h));
        write_sketch_file(pb.string(), encode_relative(perturb_edges(h, 30, 43), random_regular(200, 8, 42)));
        const bool same = slurp(pa) == slurp(pb) && !slurp(pa).empty();
        const bool decoded = decode_relative(read_sketch_file(pa.string()), h) == g;
        std::filesystem::remove(pa);
        std::filesystem::remove(pb);
        return Outcome{r.passed && same && decoded,
                       fmt("%d/100 round trips, %d/100 length law, files %s", s["round_trips"].get<int>(),
                           s["length_law_ok"].get<int>(), same ? "identical" : "differ")};
    });

    criterion(8, "counting formula vs exact", 120, [] {
        const ExperimentRecord r = run_count_audit(CountConfig{});
        std::string detail;
        for (const auto& row : r.doc["runs"])
            detail += fmt("(%d,%d) err %.3f%s ", row["n"].get<int>(), row["d"].get<int>(), row["abs_error_log2"].get<double>(),
                          row["within_tolerance"].get<bool>() ? "" : "!");
        detail += fmt("tol %.3f", std::log2(1.5));
        return Outcome{r.passed, detail};
    });

    criterion(9, "counting gap", 1, [] {
        const CountingGap c = counting_gap_demo(1'000'000, 0.01, RigidityKind::Spectral);
        const double n = 1e6, d = 400, eps = 0.01;
        const double count = d * n * std::log2(n / d) / 2;
        const double cap = d * n / 2 + 4.5 * eps * eps * d * d * n * std::log2(n);
        const bool agree = std::abs(c.count_log2 - count) <= 1e-9 * count && std::abs(c.capacity_log2 - cap) <= 1e-9 * cap;
        return Outcome{c.d == 400 && agree && c.gap_positive && count > cap,
                       fmt("count %.4g vs capacity %.4g, gap %.4g", c.count_log2, c.capacity_log2, c.gap)};
    });

    criterion(10, "friedman experiment", 600, [] {
        const ExperimentRecord r = run_friedman(FriedmanConfig{});
        int within = 0;
        for (const auto& row : r.doc["runs"]) within += row["within_threshold"].get<bool>();
        const auto& s = r.doc["summary"];
        return Outcome{r.passed && within == 10, fmt("%d/10 within %.3f, max %.4f, median %.4f", within,
                                                     s["threshold"].get<double>(), s["max_factor"].get<double>(),
                                                     s["median_factor"].get<double>())};
    });

    criterion(11, "cut <= spectral", 120, [] {
        int pairs = 0, ok = 0;
        double worst = -1.0;
        for (std::uint64_t s = 0; pairs < 50; ++s) {
            const std::uint32_t n = 10 + 2 * (s % 6);
            const std::uint32_t d = 3 + s % 2;
            const RegularGraph g = random_regular(n, d, s);
            const RegularGraph h = perturb_edges(g, 1 + s % 7, substream_seed(s, 1));
            if (!is_connected(g) || !is_connected(h)) continue;
            const double cut = cut_approx_factor_exact(g, h).epsilon;
            const double spec = spectral_approx_factor(g, h).epsilon;
            ok += cut <= spec + 1e-7;
            worst = std::max(worst, cut - spec);
            ++pairs;
        }
        return Outcome{ok == 50, fmt("%d/50 pairs, max(cut - spectral) = %.4f", ok, worst)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
