#ifndef RGD_CODEC_HPP
#define RGD_CODEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rgd/graph.hpp"

namespace rgd {

struct SketchLayout {
    std::uint64_t membership_bits = 0;   // |E(H)| = dn/2
    std::uint64_t extra_edge_count = 0;  // |E(G) \ E(H)|
    std::uint32_t bits_per_vertex = 0;   // ceil(lg n)

    std::uint64_t total_bits() const { return membership_bits + extra_edge_count * 2 * bits_per_vertex; }
};

/// G written relative to a reference graph H: one bit per edge of H (in H's
/// canonical order) saying whether G contains it, then G's remaining edges in
/// canonical order, each endpoint as a big-endian bits_per_vertex-bit integer.
struct SketchBits {
    std::vector<bool> bits;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::string reference_id; // canonical_hash(H); empty when read from a file
    SketchLayout layout;
};

/// ceil(lg n) for n >= 2, and 1 for n = 1.
std::uint32_t vertex_bits(std::uint32_t n);

SketchBits encode_relative(const RegularGraph& g, const RegularGraph& h);

/// Inverse of encode_relative. Throws DecodeError on a length mismatch,
/// out-of-range or unsorted extra edges, an extra edge already in H, or a
/// result that is not d-regular.
RegularGraph decode_relative(const SketchBits& s, const RegularGraph& h);

// Framed binary form: "RGDS", then version, n, d, extra_edge_count as
// little-endian uint32, then the bits packed MSB-first and zero padded to a
// whole byte.
constexpr std::uint32_t kSketchFormatVersion = 1;
constexpr std::size_t kSketchHeaderBytes = 20;

std::vector<std::uint8_t> serialize(const SketchBits& s);
SketchBits deserialize(std::span<const std::uint8_t> bytes);

void write_sketch_file(const std::string& path, const SketchBits& s);
SketchBits read_sketch_file(const std::string& path);

} // namespace rgd

#endif // RGD_CODEC_HPP
