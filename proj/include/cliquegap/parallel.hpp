#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cliquegap/field.hpp"
#include "cliquegap/rational.hpp"
#include "cliquegap/rng.hpp"

namespace cg {

// One position of a parallel word: ℓ lane rows, each a fixed-width vector of
// field elements (width 1 for Hadamard, a derivative table for the
// derivative codes, per-line restriction coefficients for the line code).
using LaneSymbol = std::vector<Fe>;
using Block = std::vector<LaneSymbol>;

// A word in (Σ2^ℓ)^n. Positions are 0..n-1; the producing code fixes the
// bijection between positions and its index domain (points of F^m in base-p
// order, or canonical lines) and keeps it stable across runs.
struct ParallelWord {
    std::size_t n = 0;
    std::size_t lanes = 1;
    std::size_t symbol_width = 1;
    std::vector<Block> symbols;

    void check_block(const Block& b) const;
};

bool operator==(const ParallelWord& a, const ParallelWord& b);

// Fraction of positions where two words differ.
Rational relative_distance(const ParallelWord& a, const ParallelWord& b);

// Randomness index. Decoder/tester randomness spaces are products of small
// radices and overflow 64 bits already at toy parameters.
using RIndex = u128;

// Non-adaptive q-query tester: the queried positions depend only on the
// randomness, never on symbol values.
struct TesterSpec {
    RIndex randomness_size = 1; // R_T
    std::size_t query_count = 0;
    std::function<std::vector<std::size_t>(RIndex)> queries;
    std::function<bool(RIndex, const std::vector<Block>&)> accept;
};

// Which message functional a decoder reconstructs.
struct DecodeTarget {
    enum Kind { Chi, Psi } kind = Chi;
    std::size_t i = 0; // 0-based
    std::size_t j = 0; // used by Psi; requires i < j

    static DecodeTarget chi(std::size_t i) { return {Chi, i, 0}; }
    static DecodeTarget psi(std::size_t i, std::size_t j);
    std::string str() const;
};

// Non-adaptive 2-query smooth decoder. Over the full randomness space every
// position is queried exactly 2·R_D/n times.
struct DecoderSpec {
    RIndex randomness_size = 1; // R_D
    DecodeTarget target;
    std::function<std::array<std::size_t, 2>(RIndex)> queries;
    std::function<std::vector<Fe>(RIndex, const Block&, const Block&)> reconstruct;
};

// The constants of a testable-and-decodable code family.
struct PltdcParams {
    std::size_t q = 0;
    RIndex tester_randomness = 1;  // R_T
    RIndex decoder_randomness = 1; // R_D
    Rational delta_t{0, 1};
    Rational delta_d{0, 1};
    Rational eps_t{0, 1};
    Rational eps_d{0, 1};
};

// --- Operations --------------------------------------------------------------

using MessageTable = std::vector<std::vector<Fe>>; // ℓ rows of length k
using BaseEncoder = std::function<std::vector<LaneSymbol>(const std::vector<Fe>&)>;

// Lane-wise application of a base code: lane j of the output word encodes
// lane j of the message table.
ParallelWord parallel_encode(const BaseEncoder& base, const MessageTable& messages,
                             std::size_t message_len, std::size_t block_len,
                             std::size_t symbol_width);

struct EstimateMode {
    enum Kind { Exhaustive, Sampled } kind = Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;

    static EstimateMode exhaustive(std::uint64_t budget = 10'000'000) {
        return {Exhaustive, 0, 0, budget};
    }
    static EstimateMode sampled(std::uint64_t n, std::uint64_t seed) {
        return {Sampled, n, seed, 10'000'000};
    }
};

// Exact (exhaustive) or seeded-estimate (sampled) rejection probability.
struct Rejection {
    std::uint64_t rejecting = 0;
    std::uint64_t total = 0;
    bool sampled = false;

    Rational fraction() const { return Rational(rejecting, total); }
};

Rejection estimate_rejection(const TesterSpec& tester, const ParallelWord& w,
                             const EstimateMode& mode);

std::vector<Fe> run_decode(const DecoderSpec& decoder, const ParallelWord& w, RIndex r);

// Exact per-position query counts over the whole randomness space.
struct SmoothnessReport {
    bool ok = false;
    std::uint64_t expected = 0; // 2·R_D/n when divisible
    std::vector<std::uint64_t> counts;
};

SmoothnessReport check_smoothness(const DecoderSpec& decoder, std::size_t n,
                                  std::uint64_t budget = 10'000'000);

// Minimum number of distinct positions covered by any s-subset of tester
// randomness (exhaustive), or by N sampled subsets (an upper bound).
std::uint64_t coverage_min(const TesterSpec& tester, std::uint64_t s, const EstimateMode& mode);

// Word with the given positions replaced. Shapes must match.
ParallelWord corrupt(const ParallelWord& w, const std::map<std::size_t, Block>& edits);

// Text format:
//   pword <n> <lanes> <width>
//   s <index> <lane>|<lane>|...   lanes '|'-separated, residues comma-joined
std::string serialize_word(const ParallelWord& w);
ParallelWord parse_word(const std::string& text);

} // namespace cg
