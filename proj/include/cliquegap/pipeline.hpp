#pragma once

#include <optional>

#include "cliquegap/fglss.hpp"
#include "cliquegap/gapamp.hpp"

namespace cg {

struct AmplifyOptions {
    std::size_t m = 4;
    std::size_t l = 2;
    std::size_t r = 2;
    Rational eps{1, 2};
};

struct PipelineOptions {
    std::uint64_t field = 2;
    Rational delta{1, 13};
    HashMode hash_mode = HashMode::Seeded;
    std::uint64_t seed = 1;
    bool tiny = true;               // waive reduction hypotheses, reported
    std::uint64_t clique_budget = 10'000'000;
    std::uint64_t part_budget = 10'000'000;
    std::optional<AmplifyOptions> amplify;
};

struct PipelineResult {
    std::string report;             // line-oriented key: value text
    Vector2Csp csp;
    FglssOutput fglss;
    std::optional<PartitionedGraph> amplified;
    std::uint64_t clique_size = 0;
    std::uint64_t threshold = 0;    // ⌈ε_T·K⌉
};

// clique instance -> vector 2CSP -> accepting-configuration graph, with the
// exact clique size of every stage in the report. Deterministic: the same
// input and options produce byte-identical reports.
PipelineResult run_pipeline(const PartitionedGraph& input, const PipelineOptions& opts);

} // namespace cg
