#ifndef RGD_EXPERIMENTS_HPP
#define RGD_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rgd/graph.hpp"
#include "rgd/rigidity.hpp"

namespace rgd {

using json = nlohmann::ordered_json;

constexpr int kRecordSchemaVersion = 1;

/// A finished experiment. `doc` carries schema_version, subcommand, config,
/// runs, summary and notes; it never contains wall-clock data, so equal
/// configs give byte-identical dumps. The CLI adds a "timing" member on output.
struct ExperimentRecord {
    json doc;
    bool passed = false;
};

struct RigidityScanConfig {
    RigidityKind kind = RigidityKind::Spectral;
    std::uint32_t n = 300;
    std::uint32_t d = 10;
    std::uint32_t seeds = 50;
    std::vector<std::uint64_t> swaps{1, 10, 100, 1000};
    std::uint64_t seed = 1;
};

struct WitnessConfig {
    std::uint32_t n = 400;
    std::uint32_t d = 16;
    double delta = 0.5;
    double epsilon = 0.04;
    std::uint64_t trials = kDefaultWitnessTrials;
    std::uint32_t seeds = 20;
    double min_success_fraction = 0.95;
    std::uint64_t seed = 1;
};

struct FriedmanConfig {
    std::uint32_t n = 1000;
    std::uint32_t d = 32;
    std::uint32_t seeds = 10;
    std::uint64_t seed = 1;
};

struct CodecConfig {
    std::uint32_t n = 200;
    std::uint32_t d = 8;
    std::uint32_t pairs = 100;
    std::uint64_t seed = 1;
};

struct CountConfig {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> grid{{4, 2}, {4, 3}, {6, 3}, {8, 3}};
};

struct LowerBoundConfig {
    RigidityKind kind = RigidityKind::Spectral;
    std::vector<std::uint32_t> ns{1'000'000};
    std::vector<double> epsilons{0.01};
};

/// Random graph for one experiment task. Attempt 0 uses task_seed itself (so
/// it matches `gen --seed`); a disconnected draw is replaced by attempt k with
/// seed substream_seed(task_seed, k). `attempts` reports how many draws it took.
RegularGraph connected_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t task_seed,
                                      std::uint32_t& attempts);
BipartiteRegularGraph connected_random_bipartite(std::uint32_t n, std::uint32_t d, std::uint64_t task_seed,
                                                 std::uint32_t& attempts);

/// Switches edges of g until |E(g) \ E(h)| >= delta * |E(g)|. Returns h and
/// the number of accepted switches.
std::pair<BipartiteRegularGraph, std::uint64_t> perturb_to_delta(const BipartiteRegularGraph& g, double delta,
                                                                 std::uint64_t seed);

/// max |lambda - d| / d over the nonzero Laplacian eigenvalues: the exact
/// spectral factor of g against the complete graph scaled to quadratic form
/// d |x|^2 on the complement of the constants. NoFiniteEpsilonError if g is
/// disconnected.
double friedman_factor(const RegularGraph& g);

ExperimentRecord run_rigidity_scan(const RigidityScanConfig& cfg);
ExperimentRecord run_witness(const WitnessConfig& cfg);
ExperimentRecord run_friedman(const FriedmanConfig& cfg);
ExperimentRecord run_codec_audit(const CodecConfig& cfg);
ExperimentRecord run_count_audit(const CountConfig& cfg);
ExperimentRecord run_lowerbound(const LowerBoundConfig& cfg);

/// Flat CSV of doc["runs"]: columns in order of first appearance.
std::string runs_to_csv(const json& doc);

} // namespace rgd

#endif // RGD_EXPERIMENTS_HPP
