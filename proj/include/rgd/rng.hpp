#ifndef RGD_RNG_HPP
#define RGD_RNG_HPP

#include <cstdint>
#include <random>
#include <span>

namespace rgd {

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All derived draws (bounded integers, uniforms, Gaussians, shuffles)
/// are implemented here rather than through <random> distributions, whose
/// algorithms differ between standard libraries. Given a seed, every draw is
/// bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Standard normal via the Marsaglia polar method.
    double gaussian();

    /// Fisher-Yates shuffle, last index first.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for an independent sub-stream (e.g. one rounding trial) of a run.
/// Defined as mix64(seed ^ mix64(stream + 1)).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Seed for the task_index-th task of an experiment: seed + task_index.
constexpr std::uint64_t task_seed(std::uint64_t seed, std::uint64_t task_index) {
    return seed + task_index;
}

} // namespace rgd

#endif // RGD_RNG_HPP
