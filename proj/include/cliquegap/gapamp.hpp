#pragma once

#include "cliquegap/graph.hpp"
#include "cliquegap/rational.hpp"

namespace cg {

// m subsets of [k], each of size ℓ, such that any r of them jointly cover at
// least (1-ε)·k of the universe.
struct Disperser {
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t r = 0;
    Rational eps{0, 1};
    std::vector<std::vector<std::size_t>> subsets; // each sorted ascending
};

// Seeded random ℓ-subsets, retried (seed+1, ...) until verification passes.
// Exhausting the retries signals parameters outside the feasible regime.
Disperser build_disperser(std::size_t k, std::size_t m, std::size_t l, std::size_t r,
                          const Rational& eps, std::uint64_t seed);

// Exhaustive union check over all C(m, r) subcollections.
bool verify_disperser(const Disperser& d, std::uint64_t budget = 1'000'000);

std::string serialize_disperser(const Disperser& d);
Disperser parse_disperser(const std::string& text);

// Disperser product: part i of the output holds all ℓ-tuples of vertices
// over the parts named by I_i; two tuples are adjacent iff the union of
// their vertices is a clique in g. A k-clique in g induces an m-clique; an
// r-clique in the product pulls back to a (1-ε)k-clique in g.
PartitionedGraph amplify_gap(const PartitionedGraph& g, const Disperser& d,
                             std::uint64_t per_part_budget = 1'000'000);

} // namespace cg
