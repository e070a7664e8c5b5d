#include "cliquegap/hadamard.hpp"

namespace cg {

ParallelWord had_encode(const HadamardCode& code, const MessageTable& messages) {
    const PrimeField f = code.field;
    BaseEncoder base = [&code, f](const std::vector<Fe>& msg) {
        std::vector<LaneSymbol> out(code.n, LaneSymbol(1, 0));
        for (std::uint64_t idx = 0; idx < code.n; ++idx) {
            const auto a = point_at(idx, f.modulus(), code.k);
            Fe acc = 0;
            for (std::size_t i = 0; i < code.k; ++i) acc = f.add(acc, f.mul(a[i], msg[i]));
            out[idx][0] = acc;
        }
        return out;
    };
    return parallel_encode(base, messages, code.k, code.n, 1);
}

TesterSpec had_tester(const HadamardCode& code) {
    const PrimeField f = code.field;
    const std::uint64_t n = code.n;
    const std::size_t k = code.k;

    TesterSpec spec;
    spec.randomness_size = u128(n) * n;
    spec.query_count = 3;
    spec.queries = [f, n, k](RIndex r) {
        const std::uint64_t a_idx = static_cast<std::uint64_t>(r / n);
        const std::uint64_t b_idx = static_cast<std::uint64_t>(r % n);
        const auto a = point_at(a_idx, f.modulus(), k);
        const auto b = point_at(b_idx, f.modulus(), k);
        const auto ab = f.add_vec(a, b);
        return std::vector<std::size_t>{a_idx, b_idx,
                                        static_cast<std::size_t>(point_index(ab, f.modulus()))};
    };
    spec.accept = [f](RIndex, const std::vector<Block>& blocks) {
        const Block& fa = blocks[0];
        const Block& fb = blocks[1];
        const Block& fab = blocks[2];
        for (std::size_t lane = 0; lane < fa.size(); ++lane) {
            if (f.add(fa[lane][0], fb[lane][0]) != fab[lane][0]) return false;
        }
        return true;
    };
    return spec;
}

DecoderSpec had_decoder(const HadamardCode& code, const DecodeTarget& target) {
    const PrimeField f = code.field;
    const std::uint64_t n = code.n;
    const std::size_t k = code.k;
    if (target.i >= k || (target.kind == DecodeTarget::Psi && target.j >= k))
        throw InvalidTarget("decode target index out of range");

    // Offset e_i (or e_i + e_j) as a point index shift, applied in F^k.
    std::vector<Fe> offset(k, 0);
    offset[target.i] = 1 % f.modulus();
    if (target.kind == DecodeTarget::Psi) offset[target.j] = f.add(offset[target.j], 1);

    DecoderSpec spec;
    spec.randomness_size = n;
    spec.target = target;
    spec.queries = [f, k, offset](RIndex r) {
        const auto a = point_at(static_cast<std::uint64_t>(r), f.modulus(), k);
        const auto shifted = f.add_vec(a, offset);
        return std::array<std::size_t, 2>{static_cast<std::size_t>(r),
                                          static_cast<std::size_t>(point_index(shifted, f.modulus()))};
    };
    spec.reconstruct = [f](RIndex, const Block& at_a, const Block& at_shift) {
        std::vector<Fe> out(at_a.size());
        for (std::size_t lane = 0; lane < at_a.size(); ++lane)
            out[lane] = f.sub(at_shift[lane][0], at_a[lane][0]);
        return out;
    };
    return spec;
}

} // namespace cg
