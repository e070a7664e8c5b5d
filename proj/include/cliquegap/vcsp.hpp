#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquegap/field.hpp"
#include "cliquegap/graph.hpp"

namespace cg {

// 2CSP over the alphabet F^d: unary constraints x_i ∈ S_i and binary
// constraints x_i + x_j ∈ S_{ij} for every pair i < j. Constraint sets are
// kept sorted and deduplicated so instances serialize canonically.
struct Vector2Csp {
    std::size_t k = 0;
    std::uint64_t p = 2;
    std::size_t dim = 1;
    std::vector<std::vector<std::vector<Fe>>> unary;                 // k sets
    std::vector<std::vector<std::vector<std::vector<Fe>>>> binary;   // [i][j-i-1]

    const std::vector<std::vector<Fe>>& pair_set(std::size_t i, std::size_t j) const;
    std::vector<std::vector<Fe>>& pair_set(std::size_t i, std::size_t j);

    static Vector2Csp empty(std::size_t k, std::uint64_t p, std::size_t dim);
    void normalize(); // sort + dedupe all sets
};

std::string serialize_vcsp(const Vector2Csp& csp);
Vector2Csp parse_vcsp(const std::string& text);

// Per-part embedding matrices M_i ∈ F^{d×b}: vertex v of part i maps to
// M_i · digits(v). Injective within parts, pair-sum injective across parts.
struct HashEmbedding {
    std::uint64_t p = 2;
    std::size_t dim = 1;     // d
    std::size_t digits = 1;  // b, base-p digits per vertex index
    std::vector<Matrix> mats;

    std::vector<Fe> apply(const PrimeField& f, std::size_t part, std::uint64_t vertex_rank) const;
};

enum class HashMode { Seeded, Derandomized };

// Hash dimension d: smallest d with p^d >= n^5 (at least 1), n the largest
// part size.
std::size_t hash_dimension(std::uint64_t p, std::uint64_t max_part);

// Seeded mode draws matrices and retries (seed+1, seed+2, ...) until
// verify_hash passes. Derandomized mode fixes entries one at a time,
// minimizing the exact expected number of violated pairs and pair-sum
// quadruples, with unfixed entries uniform.
HashEmbedding build_hash(const PartitionedGraph& g, const PrimeField& f, HashMode mode,
                         std::uint64_t seed = 0);

// True iff within-part images are pairwise distinct and, for every part
// pair, all |V_i|·|V_j| pair sums are pairwise distinct.
bool verify_hash(const HashEmbedding& h, const PartitionedGraph& g, const PrimeField& f);

struct VcspReduction {
    Vector2Csp csp;
    HashEmbedding hash;
};

// S_i = images of part i, S_{ij} = pair sums over the edges between parts
// i and j. Satisfiable exactly when the graph has a clique with one vertex
// per part.
VcspReduction clique_to_vcsp(const PartitionedGraph& g, const PrimeField& f, HashMode mode,
                             std::uint64_t seed = 0);

// Lexicographically first satisfying assignment (each x_i scanned over the
// sorted S_i), or nullopt. Enumeration budget Π|S_i| <= budget.
std::optional<std::vector<std::vector<Fe>>> vcsp_brute_solve(const Vector2Csp& csp,
                                                             std::uint64_t budget = 1'000'000);

} // namespace cg
