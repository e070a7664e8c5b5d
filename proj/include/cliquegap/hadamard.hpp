#pragma once

#include "cliquegap/parallel.hpp"
#include "cliquegap/poly.hpp"

namespace cg {

// Hadamard code over F_p: message x ∈ F^k, codeword position a ∈ F^k holds
// a·x. Positions are enumerated base-p, first coordinate most significant.
struct HadamardCode {
    PrimeField field;
    std::size_t k;
    std::uint64_t n; // p^k

    HadamardCode(PrimeField f, std::size_t k_) : field(f), k(k_), n(pow_u64(f.modulus(), k_)) {}
};

ParallelWord had_encode(const HadamardCode& code, const MessageTable& messages);

// The linearity tester: randomness (a, b) with a the most significant base-p
// digits, queries {a, b, a+b}, accepts iff f(a)+f(b)=f(a+b) lane-wise.
// R_T = p^{2k}, q = 3.
TesterSpec had_tester(const HadamardCode& code);

// 2-query smooth decoder. χ_i: queries {a, a+e_i}; ψ_{i,j}: queries
// {a, a+e_i+e_j}. Output is second minus first, lane-wise. R_D = p^k.
DecoderSpec had_decoder(const HadamardCode& code, const DecodeTarget& target);

} // namespace cg
