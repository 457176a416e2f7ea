#include <cmath>
#include <fstream>
#include <iterator>

#include "ado/composite.hpp"
#include "ado/serialize.hpp"

namespace ado {

namespace {

constexpr char kMagic[4] = {'A', 'D', 'O', 'F'};
constexpr std::uint32_t kVersion = 1;

void write_tz(ByteWriter& w, const TZOracle& o) {
    w.u32(o.n);
    w.u32(o.kappa);
    w.u32(o.requested_kappa);
    w.u8(static_cast<std::uint8_t>((o.base_connected ? 1 : 0) | (o.restricted ? 2 : 0)));
    for (std::uint32_t i = 1; i < o.kappa; ++i) {
        w.u32(static_cast<std::uint32_t>(o.levels[i].size()));
        for (VertexId v : o.levels[i]) w.u32(v);
    }
    if (o.restricted) {
        w.u32(static_cast<std::uint32_t>(o.stored.size()));
        for (VertexId v : o.stored) w.u32(v);
    }
    for (std::size_t s = 0; s < o.stored.size(); ++s)
        for (std::uint32_t i = 0; i < o.kappa; ++i) {
            w.u32(o.pivot_vertex[s * o.kappa + i]);
            w.u64(o.pivot_dist[s * o.kappa + i]);
        }
    for (const auto& bunch : o.bunches) {
        w.u32(static_cast<std::uint32_t>(bunch.size()));
        for (const auto& entry : bunch) {
            w.u32(entry.w);
            w.u64(entry.d);
        }
    }
}

TZOracle read_tz(ByteReader& r) {
    TZOracle o;
    o.n = r.u32();
    o.kappa = r.u32();
    o.requested_kappa = r.u32();
    if (o.kappa < 1 || o.kappa > 65534 || o.kappa > o.requested_kappa)
        throw SerializeError("oracle level count out of range");
    std::uint8_t flags = r.u8();
    o.base_connected = (flags & 1) != 0;
    o.restricted = (flags & 2) != 0;

    o.levels.resize(o.kappa);
    o.levels[0].resize(o.n);
    for (VertexId v = 0; v < o.n; ++v) o.levels[0][v] = v;
    for (std::uint32_t i = 1; i < o.kappa; ++i) {
        std::uint32_t count = r.u32();
        if (count > o.n) throw SerializeError("oracle level larger than vertex set");
        o.levels[i].resize(count);
        for (auto& v : o.levels[i]) {
            v = r.u32();
            if (v >= o.n) throw SerializeError("oracle level vertex out of range");
        }
    }
    if (o.kappa > 1 && o.levels.back().empty())
        throw SerializeError("oracle top level is empty");

    if (o.restricted) {
        std::uint32_t count = r.u32();
        if (count == 0 || count > o.n) throw SerializeError("oracle restriction size invalid");
        o.stored.resize(count);
        for (auto& v : o.stored) {
            v = r.u32();
            if (v >= o.n) throw SerializeError("oracle restriction vertex out of range");
        }
    } else {
        o.stored.resize(o.n);
        for (VertexId v = 0; v < o.n; ++v) o.stored[v] = v;
    }

    o.top_level.assign(o.n, 0);
    for (std::uint32_t i = 1; i < o.kappa; ++i)
        for (VertexId v : o.levels[i]) o.top_level[v] = static_cast<std::uint16_t>(i);
    o.slot.assign(o.n, kNoVertex);
    for (VertexId s = 0; s < o.stored.size(); ++s) o.slot[o.stored[s]] = s;

    const std::size_t slots = o.stored.size();
    o.pivot_vertex.resize(slots * o.kappa);
    o.pivot_dist.resize(slots * o.kappa);
    for (std::size_t s = 0; s < slots; ++s)
        for (std::uint32_t i = 0; i < o.kappa; ++i) {
            o.pivot_vertex[s * o.kappa + i] = r.u32();
            o.pivot_dist[s * o.kappa + i] = r.u64();
        }
    o.bunches.resize(slots);
    for (auto& bunch : o.bunches) {
        std::uint32_t count = r.u32();
        if (count > o.n) throw SerializeError("oracle bunch larger than vertex set");
        bunch.resize(count);
        for (auto& entry : bunch) {
            entry.w = r.u32();
            entry.d = r.u64();
        }
    }
    return o;
}

}  // namespace

std::vector<std::uint8_t> serialize(const CompositeOracle& o) {
    ByteWriter w;
    w.raw(kMagic, 4);
    w.u32(kVersion);
    w.u8(static_cast<std::uint8_t>(o.kind));
    w.u8(static_cast<std::uint8_t>(o.requested));
    w.u8(o.fallback ? 1 : 0);
    w.u8(static_cast<std::uint8_t>(o.param_mode));
    w.u32(o.n);
    w.u64(o.seed);
    w.u32(o.k);
    w.u32(o.k_prime);
    w.u32(o.far_kappa);
    w.i64(o.epsilon.num());
    w.i64(o.epsilon.den());
    w.i64(o.exponent.num());
    w.i64(o.exponent.den());
    w.u64(o.certificate);
    for (std::uint64_t label : o.labels) w.u64(label);

    const bool has_sample = !o.assignment.sample.empty();
    w.u8(has_sample ? 1 : 0);
    if (has_sample) {
        w.u32(static_cast<std::uint32_t>(o.assignment.sample.size()));
        for (VertexId v : o.assignment.sample) w.u32(v);
        for (VertexId v : o.assignment.nearest) w.u32(v);
        for (Dist d : o.assignment.dist) w.u64(d);
    }

    write_tz(w, o.inner);

    if (o.kind == OracleKind::kSmallK) {
        w.u8(1);
        w.u32(o.far.side);
        for (Dist d : o.far.cells) w.u64(d);
    } else if (o.kind == OracleKind::kNearLinear) {
        w.u8(2);
        write_tz(w, o.far_oracle);
    } else {
        w.u8(0);
    }

    w.append_checksum();
    return w.take();
}

CompositeOracle deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 16) throw SerializeError("oracle stream too short");
    const std::size_t payload = bytes.size() - 8;
    ByteReader tail(bytes.data() + payload, 8);
    if (fnv1a64(bytes.data(), payload) != tail.u64())
        throw SerializeError("oracle checksum mismatch");

    ByteReader r(bytes.data(), payload);
    char magic[4];
    r.raw(magic, 4);
    if (std::string(magic, 4) != std::string(kMagic, 4))
        throw SerializeError("not an oracle file (bad magic)");
    if (r.u32() != kVersion) throw SerializeError("unsupported oracle format version");

    CompositeOracle o;
    std::uint8_t kind = r.u8();
    std::uint8_t requested = r.u8();
    if (kind > 3 || requested > 3) throw SerializeError("unknown oracle kind");
    o.kind = static_cast<OracleKind>(kind);
    o.requested = static_cast<OracleKind>(requested);
    o.fallback = r.u8() != 0;
    std::uint8_t mode = r.u8();
    if (mode > 1) throw SerializeError("unknown parameter mode");
    o.param_mode = static_cast<NearLinearMode>(mode);
    o.n = r.u32();
    o.seed = r.u64();
    o.k = r.u32();
    o.k_prime = r.u32();
    o.far_kappa = r.u32();
    std::int64_t eps_num = r.i64(), eps_den = r.i64();
    o.epsilon = eps_den == 0 ? Rational(0) : Rational(eps_num, eps_den);
    std::int64_t exp_num = r.i64(), exp_den = r.i64();
    o.exponent = exp_den == 0 ? Rational(0) : Rational(exp_num, exp_den);
    o.certificate = r.u64();
    o.labels.resize(o.n);
    for (auto& label : o.labels) label = r.u64();

    if (r.u8() != 0) {
        std::uint32_t count = r.u32();
        if (count == 0 || count > o.n) throw SerializeError("oracle sample size invalid");
        o.assignment.sample.resize(count);
        for (auto& v : o.assignment.sample) {
            v = r.u32();
            if (v >= o.n) throw SerializeError("oracle sample vertex out of range");
        }
        o.assignment.nearest.resize(o.n);
        for (auto& v : o.assignment.nearest) v = r.u32();
        o.assignment.dist.resize(o.n);
        for (auto& d : o.assignment.dist) d = r.u64();
        if (o.k > 0) {
            o.assignment.exponent = o.exponent / Rational(o.k);
            o.assignment.probability =
                std::pow(static_cast<long double>(o.n), -o.assignment.exponent.value());
        }
    }

    o.inner = read_tz(r);
    if (o.inner.n != o.n) throw SerializeError("inner oracle size mismatch");

    std::uint8_t far_tag = r.u8();
    if (o.kind == OracleKind::kSmallK) {
        if (far_tag != 1) throw SerializeError("small-k oracle is missing its far table");
        o.far.side = r.u32();
        if (o.far.side != o.assignment.sample.size())
            throw SerializeError("far table side does not match the sample");
        o.far.cells.resize(static_cast<std::size_t>(o.far.side) * o.far.side);
        for (auto& d : o.far.cells) d = r.u64();
    } else if (o.kind == OracleKind::kNearLinear) {
        if (far_tag != 2) throw SerializeError("near-linear oracle is missing its far oracle");
        o.far_oracle = read_tz(r);
        if (o.far_oracle.n != o.n) throw SerializeError("far oracle size mismatch");
    } else if (far_tag != 0) {
        throw SerializeError("unexpected far section");
    }

    r.expect_end();
    return o;
}

void save_oracle(const CompositeOracle& o, const std::string& path) {
    auto bytes = serialize(o);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

CompositeOracle load_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

}  // namespace ado
