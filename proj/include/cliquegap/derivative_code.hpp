#pragma once

#include "cliquegap/parallel.hpp"
#include "cliquegap/poly.hpp"

namespace cg {

// Derivative code of order r: messages are values of an m-variate degree-d
// polynomial p at M = C(m+d, d) interpolation points, d = 2r+1. The codeword
// is indexed by z ∈ F^{2m} and stores, at each z, all order-<=r partial
// derivatives of q(x, y) = p(x) + p(y). r = 1 gives the classic degree-3
// derivative code.
struct DcParams {
    PrimeField field{2};
    std::size_t m = 1;   // half the ambient dimension
    unsigned r = 1;      // derivative order
    unsigned d = 3;      // 2r+1
    std::size_t message_len = 0; // M
    std::uint64_t block_len = 0; // p^{2m}

    std::vector<std::vector<Fe>> points;    // u_1..u_M
    std::vector<ExponentVec> msg_exps;      // monomials of p, |S^m_{<=d}|
    std::vector<ExponentVec> sym_exps;      // symbol layout, |S^{2m}_{<=r}|
    std::map<ExponentVec, std::size_t> sym_index;
    Matrix interp_inverse;                  // inverse of the M x M sample matrix

    std::size_t symbol_width() const { return sym_exps.size(); }
};

DcParams make_dc_params(const PrimeField& field, std::size_t m, unsigned r);

// Deterministic greedy scan of F^m in enumeration order, keeping each point
// whose monomial row extends the rank. The alternative of searching over all
// point sets is exponential; any full-rank subset serves.
std::vector<std::vector<Fe>> select_interpolation_points(const PrimeField& field, std::size_t m,
                                                         unsigned d);

// The unique degree-<=d polynomial through (u_i, message[i]), one lane per
// table row.
PolyTuple dc_interpolate(const DcParams& params, const MessageTable& messages);

ParallelWord dc_encode(const DcParams& params, const MessageTable& messages);

// Word of derivative tables of an arbitrary degree-<=d tuple over F^{2m}
// (not necessarily of the form p(x)+p(y)). Test fixture and CLI utility.
ParallelWord dc_word_from_poly(const DcParams& params, const PolyTuple& f);

// (d+2)-query line test for raw words indexed by F^vars: queries x+λh for
// λ = 0..d+1 and accepts iff all coordinates lie on one degree-<=d univariate
// tuple. R = p^{2·vars}.
TesterSpec low_degree_test(const PrimeField& field, std::size_t vars, unsigned d);

// The composed (6d+7)-query tester: one randomness draw feeds (1) the line
// test, (2) the derivative-consistency check at a fresh point, (3) the
// sum-form check via four local interpolations. R_T = p^{18m}.
TesterSpec dc_tester(const DcParams& params);

// 2-query smooth decoder: randomness (h, λ1, λ2) with λ1 ≠ λ2 nonzero,
// queries z+λ1·h and z+λ2·h, reconstructs the restriction g by the
// order-<=r chain rule plus the two-node Hermite solve, outputs g(0).
// χ_i reads the diagonal z = (u_i, u_i) and halves; ψ_{i,j} reads
// z = (u_i, u_j). R_D = p^{2m}·(p-1)(p-2).
DecoderSpec dc_decoder(const DcParams& params, const DecodeTarget& target);

// g^{(j)}(λ*) for g(λ) = f(z+λh) from the derivative table at z* = z+λ*·h:
// Σ_{|v|=j} (j!/Πv_i!)·table[v]·h^v, one output row per j = 0..r, per lane.
std::vector<std::vector<Fe>> directional_derivatives(const DcParams& params, const Block& table,
                                                     std::span<const Fe> h);

} // namespace cg
