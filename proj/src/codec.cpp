#include "rgd/codec.hpp"

#include <bit>
#include <fstream>
#include <iterator>

#include "rgd/error.hpp"

namespace rgd {

namespace {

void push_bits(std::vector<bool>& out, std::uint32_t value, std::uint32_t width) {
    for (std::uint32_t k = width; k > 0; --k) out.push_back(((value >> (k - 1)) & 1U) != 0);
}

std::uint32_t read_bits(const std::vector<bool>& in, std::size_t& pos, std::uint32_t width) {
    std::uint32_t value = 0;
    for (std::uint32_t k = 0; k < width; ++k) value = (value << 1) | (in[pos++] ? 1U : 0U);
    return value;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t offset) {
    std::uint32_t v = 0;
    for (int k = 3; k >= 0; --k) v = (v << 8) | in[offset + k];
    return v;
}

SketchLayout layout_for(std::uint32_t n, std::uint32_t d, std::uint64_t extra) {
    SketchLayout l;
    l.membership_bits = std::uint64_t{n} * d / 2;
    l.extra_edge_count = extra;
    l.bits_per_vertex = vertex_bits(n);
    return l;
}

} // namespace

std::uint32_t vertex_bits(std::uint32_t n) {
    return n <= 2 ? 1 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

SketchBits encode_relative(const RegularGraph& g, const RegularGraph& h) {
    if (g.n() != h.n() || g.d() != h.d()) throw ParameterError("encode_relative: graphs must share n and d");
    SketchBits s;
    s.n = g.n();
    s.d = g.d();
    s.reference_id = canonical_hash(h);

    std::vector<Edge> extra;
    const auto& ge = g.edges();
    const auto& he = h.edges();
    std::size_t j = 0;
    for (const Edge& e : ge) {
        while (j < he.size() && he[j] < e) ++j;
        if (j == he.size() || he[j] != e) extra.push_back(e);
    }
    s.layout = layout_for(s.n, s.d, extra.size());
    s.bits.reserve(s.layout.total_bits());
    for (const Edge& e : he) s.bits.push_back(g.has_edge(e.u, e.v));
    for (const Edge& e : extra) {
        push_bits(s.bits, e.u, s.layout.bits_per_vertex);
        push_bits(s.bits, e.v, s.layout.bits_per_vertex);
    }
    return s;
}

RegularGraph decode_relative(const SketchBits& s, const RegularGraph& h) {
    if (s.n != h.n() || s.d != h.d()) throw DecodeError("decode_relative: sketch parameters differ from reference");
    if (!s.reference_id.empty() && s.reference_id != canonical_hash(h))
        throw DecodeError("decode_relative: sketch was encoded against a different reference graph");
    const SketchLayout expect = layout_for(s.n, s.d, s.layout.extra_edge_count);
    if (s.layout.membership_bits != expect.membership_bits || s.layout.bits_per_vertex != expect.bits_per_vertex)
        throw DecodeError("decode_relative: layout does not match n and d");
    if (s.bits.size() != expect.total_bits()) throw DecodeError("decode_relative: malformed bit length");

    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    const auto& he = h.edges();
    for (std::size_t k = 0; k < he.size(); ++k)
        if (s.bits[k]) edges.push_back(he[k]);

    std::size_t pos = he.size();
    Edge previous{0, 0};
    for (std::uint64_t k = 0; k < s.layout.extra_edge_count; ++k) {
        Edge e{read_bits(s.bits, pos, expect.bits_per_vertex), read_bits(s.bits, pos, expect.bits_per_vertex)};
        if (e.u >= s.n || e.v >= s.n) throw DecodeError("decode_relative: vertex id out of range");
        if (e.u >= e.v) throw DecodeError("decode_relative: extra edge is not canonical");
        if (k > 0 && !(previous < e)) throw DecodeError("decode_relative: extra edges not strictly sorted");
        if (h.has_edge(e.u, e.v)) throw DecodeError("decode_relative: extra edge duplicates a reference edge");
        edges.push_back(e);
        previous = e;
    }
    try {
        return RegularGraph(s.n, s.d, std::move(edges));
    } catch (const ParameterError& err) {
        throw DecodeError(std::string("decode_relative: ") + err.what());
    }
}

std::vector<std::uint8_t> serialize(const SketchBits& s) {
    std::vector<std::uint8_t> out;
    out.reserve(kSketchHeaderBytes + (s.bits.size() + 7) / 8);
    for (char c : {'R', 'G', 'D', 'S'}) out.push_back(static_cast<std::uint8_t>(c));
    put_u32(out, kSketchFormatVersion);
    put_u32(out, s.n);
    put_u32(out, s.d);
    put_u32(out, static_cast<std::uint32_t>(s.layout.extra_edge_count));
    std::uint8_t byte = 0;
    int filled = 0;
    for (bool bit : s.bits) {
        byte = static_cast<std::uint8_t>((byte << 1) | (bit ? 1 : 0));
        if (++filled == 8) {
            out.push_back(byte);
            byte = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
    return out;
}

SketchBits deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kSketchHeaderBytes) throw DecodeError("sketch file: truncated header");
    if (bytes[0] != 'R' || bytes[1] != 'G' || bytes[2] != 'D' || bytes[3] != 'S')
        throw DecodeError("sketch file: bad magic");
    if (get_u32(bytes, 4) != kSketchFormatVersion) throw DecodeError("sketch file: unsupported version");
    SketchBits s;
    s.n = get_u32(bytes, 8);
    s.d = get_u32(bytes, 12);
    if (s.n == 0 || s.d == 0 || s.d >= s.n) throw DecodeError("sketch file: invalid n or d");
    s.layout = layout_for(s.n, s.d, get_u32(bytes, 16));
    const std::uint64_t total = s.layout.total_bits();
    if (bytes.size() - kSketchHeaderBytes != (total + 7) / 8) throw DecodeError("sketch file: payload length mismatch");
    s.bits.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        const std::uint8_t byte = bytes[kSketchHeaderBytes + k / 8];
        s.bits.push_back(((byte >> (7 - k % 8)) & 1U) != 0);
    }
    if (total % 8 != 0) {
        const std::uint8_t last = bytes.back();
        const std::uint8_t pad_mask = static_cast<std::uint8_t>((1U << (8 - total % 8)) - 1);
        if ((last & pad_mask) != 0) throw DecodeError("sketch file: nonzero padding");
    }
    return s;
}

void write_sketch_file(const std::string& path, const SketchBits& s) {
    const std::vector<std::uint8_t> bytes = serialize(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write sketch file " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

SketchBits read_sketch_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open sketch file " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

} // namespace rgd
