#pragma once

#include <map>
#include <span>
#include <vector>

#include "cliquegap/field.hpp"
#include "cliquegap/linalg.hpp"

namespace cg {

// Exponent vector of a monomial: m non-negative entries, one per variable.
// Its order is the sum of entries.
using ExponentVec = std::vector<unsigned>;

unsigned exponent_order(const ExponentVec& v);

// All exponent vectors over m variables with order <= d (graded order,
// lexicographic within each grade; the zero vector comes first). This is the
// fixed layout of every derivative-table symbol.
std::vector<ExponentVec> exponents_up_to(std::size_t m, unsigned d);

// Exponent vectors of order exactly j, in the same lexicographic order.
std::vector<ExponentVec> exponents_exact(std::size_t m, unsigned j);

// C(n, k) without overflow checks beyond 64 bits; fine at the scales in use.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Multinomial j!/(v_1!···v_m!) mod p for j = order(v). Requires j < p so the
// factorials are invertible; the derivative-order preconditions guarantee it.
Fe multinomial_mod(const PrimeField& f, const ExponentVec& v);

// x^v = Π x_i^{v_i}.
Fe monomial_eval(const PrimeField& f, std::span<const Fe> x, const ExponentVec& v);

// --- Polynomial tuples -------------------------------------------------------

// t-tuple of m-variate polynomials of total degree <= degree, stored as a
// sparse map from exponent vector to per-lane coefficients. Absent monomials
// are zero. A dense table of all C(m+d, d) coefficients gets big fast; the
// toy instances exercised here are mostly sparse.
struct PolyTuple {
    std::size_t lanes = 1;
    std::size_t vars = 0;
    unsigned degree = 0;
    std::map<ExponentVec, std::vector<Fe>> coeffs;

    static PolyTuple zero(std::size_t lanes, std::size_t vars, unsigned degree);

    // Adds c to the coefficient of x^v in the given lane.
    void add_term(const PrimeField& f, const ExponentVec& v, std::size_t lane, Fe c);

    void drop_zero_terms();
};

bool operator==(const PolyTuple& a, const PolyTuple& b);

std::vector<Fe> eval_poly(const PrimeField& f, const PolyTuple& p, std::span<const Fe> x);

// Formal order-|v| partial derivative ∂^|v| p / ∂x^v, lane-wise. The degree
// bound drops by order(v); differentiating past the degree just yields zero.
PolyTuple partial_derivative(const PrimeField& f, const PolyTuple& p, const ExponentVec& v);

// Univariate degree-<=d tuple: exactly d+1 coefficient rows, ascending powers,
// each row holding one coefficient per lane.
struct UniPolyTuple {
    std::size_t lanes = 1;
    std::vector<std::vector<Fe>> coeffs;

    static UniPolyTuple zero(std::size_t lanes, unsigned degree);
    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

bool operator==(const UniPolyTuple& a, const UniPolyTuple& b);

std::vector<Fe> eval_uni(const PrimeField& f, const UniPolyTuple& g, Fe lambda);

// Formal derivative; keeps the coefficient count (top row becomes zero).
UniPolyTuple derive_uni(const PrimeField& f, const UniPolyTuple& g);

// g(α + βλ) as a polynomial in λ.
UniPolyTuple compose_affine(const PrimeField& f, const UniPolyTuple& g, Fe alpha, Fe beta);

// Restriction g(λ) = p(base + λ·dir), expanded symbolically; exact for every
// field size. dir = 0 gives the constant restriction.
UniPolyTuple restrict_to_line(const PrimeField& f, const PolyTuple& p, std::span<const Fe> base,
                              std::span<const Fe> dir);

// Unique degree-<=(samples-1) tuple through the given (λ, value) pairs.
UniPolyTuple interpolate_univariate(const PrimeField& f,
                                    const std::vector<std::pair<Fe, std::vector<Fe>>>& samples);

// --- Two-node Hermite (confluent Vandermonde) solve --------------------------
//
// Given g^{(j)}(λ1) and g^{(j)}(λ2) for j = 0..r, recovers the unique tuple of
// degree d = 2r+1. The (d+1)x(d+1) system matrix has determinant
// (λ2-λ1)^{(r+1)^2} · Π_{i=1..r} (i!)^2, so it is invertible whenever λ1 ≠ λ2
// and p > r.

// vals: 2(r+1) rows, g(λ1), g'(λ1), .., g^{(r)}(λ1), then the same at λ2;
// each row has one value per lane.
UniPolyTuple solve_confluent_vandermonde(const PrimeField& f, Fe l1, Fe l2, unsigned r,
                                         const std::vector<std::vector<Fe>>& vals);

// Determinant of that system matrix, computed by elimination.
Fe confluent_vandermonde_det(const PrimeField& f, Fe l1, Fe l2, unsigned r);

// --- Lines -------------------------------------------------------------------

// Canonical representative of the point set {base + λ·dir}. dir = 0 encodes
// the singleton {base}.
struct Line {
    std::vector<Fe> base;
    std::vector<Fe> dir;

    bool singleton() const {
        for (const Fe c : dir)
            if (c != 0) return false;
        return true;
    }
};

bool operator==(const Line& a, const Line& b);
bool operator<(const Line& a, const Line& b); // lexicographic on base, then dir

// The lexicographically smallest (base, dir) generating the same point set:
// base is the smallest point on the line, dir the smallest nonzero multiple
// of the direction. Singletons canonicalize to (x, 0).
Line canonical_line(const PrimeField& f, std::span<const Fe> x, std::span<const Fe> h);

} // namespace cg
