#pragma once

#include "cliquegap/derivative_code.hpp"
#include "cliquegap/parallel.hpp"

namespace cg {

// Enumeration of all canonical lines in F^vars: singleton lines first,
// ordered by base point, then full lines in lexicographic (base, dir) order.
// Word positions of the line code index into this enumeration.
class LineDomain {
public:
    LineDomain(const PrimeField& field, std::size_t vars);

    const PrimeField& field() const { return field_; }
    std::size_t vars() const { return vars_; }
    std::size_t size() const { return lines_.size(); }
    std::uint64_t point_count() const { return points_; }
    std::size_t full_line_count() const { return lines_.size() - points_; }

    const Line& line_at(std::size_t index) const { return lines_[index]; }
    std::size_t index_of(const Line& canonical) const;
    std::size_t singleton_index(std::span<const Fe> x) const;

    // Indices of the full canonical lines through a point, ascending.
    const std::vector<std::size_t>& full_lines_through(std::uint64_t point_index) const {
        return through_[point_index];
    }

    // λ with base + λ·dir = w. Throws if w is off the line.
    Fe param_of(const Line& line, std::span<const Fe> w) const;

private:
    PrimeField field_;
    std::size_t vars_;
    std::uint64_t points_;
    std::vector<Line> lines_;
    std::map<Line, std::size_t> index_;
    std::vector<std::vector<std::size_t>> through_;
};

enum class FieldFloor { Strict, Tiny };

// Line code: position ℓ stores the degree-<=d restriction of every
// order-<=r partial derivative of q to ℓ, written in the canonical
// parameterization of ℓ. Per lane the symbol is |S^{2m}_{<=r}| slices of
// d+1 coefficients each.
struct LcParams {
    DcParams base;
    LineDomain domain;

    std::size_t slice_count() const { return base.sym_exps.size(); }
    std::size_t symbol_width() const { return slice_count() * (base.d + 1); }
};

// Strict mode enforces the soundness floor p > max(3d, 9216); tiny mode
// keeps only what the algorithms need (p > 2d) so completeness and
// consistency can be exercised on desk-scale fields.
LcParams make_lc_params(const PrimeField& field, std::size_t m, unsigned r,
                        FieldFloor floor = FieldFloor::Strict);

ParallelWord lc_encode(const LcParams& params, const MessageTable& messages);

// Line word of an arbitrary degree-<=d tuple over F^{2m}.
ParallelWord lc_word_from_poly(const LcParams& params, const PolyTuple& f);

// Restriction slices of one stored symbol, reparameterized so that
// g(λ) = P(base_pt + λ·dir). Row layout matches the derivative table:
// slice index = exponent column, one UniPolyTuple per slice spanning lanes.
std::vector<UniPolyTuple> symbol_restrictions(const LcParams& params, const Block& symbol,
                                              const Line& line, std::span<const Fe> base_pt,
                                              std::span<const Fe> dir);

// Derivative table at a point of the line, read out of the stored symbol.
Block symbol_values_at(const LcParams& params, const Block& symbol, const Line& line,
                       std::span<const Fe> w);

// One line-vs-point comparison: the table claimed by the singleton symbol at
// x against the table decoded from the line ℓ(x, h) at x.
bool line_vs_point_step(const LcParams& params, const ParallelWord& w, std::span<const Fe> x,
                        std::span<const Fe> h);

// 11-query tester: (1) line vs. point, (2) derivative consistency on one
// line symbol, (3) sum form via four two-line Hermite reconstructions.
// R_T = p^{34m}·((p-1)(p-2))^4.
TesterSpec lc_tester(const LcParams& params);

// 2-query smooth decoder over the line index space. Randomness is
// (h, λ1, λ2, c1, c2) where c_i picks the queried line through z_i = z+λ_i·h
// from a weighted menu: each full line once, the singleton with multiplicity
// p. That weighting makes the marginal exactly uniform over all canonical
// lines, singletons included. R_D = p^{2m}·(p-1)(p-2)·W² with
// W = (p^{2m}-1)/(p-1) + p.
DecoderSpec lc_decoder(const LcParams& params, const DecodeTarget& target);

// Plurality self-correction of the point function implied by the word's
// singleton symbols: at each x, the most frequent value of P^f_{ℓ(x,h)}(x)
// over all directions h, where P^f_ℓ is the closest degree-<=d restriction
// to f on ℓ (component-wise candidate enumeration, lexicographic tie-break).
std::vector<Block> majority_correct(const LcParams& params, const ParallelWord& w,
                                    std::uint64_t budget = 500'000'000);

} // namespace cg
