#pragma once

#include "cliquegap/codes.hpp"
#include "cliquegap/graph.hpp"
#include "cliquegap/vcsp.hpp"

namespace cg {

// Configuration of the accepting-configuration reduction: the plugged code,
// the tester distance parameter δ (the decoders are exercised at tolerance
// 5δ), and the parallelization degree t, which must equal the constraint
// dimension.
struct FglssConfig {
    PltdcCode code;
    Rational delta{1, 13};
    std::size_t t = 1;
    std::uint64_t part_budget = 10'000'000;  // accepting configurations per part
    std::uint64_t randomness_budget = 10'000'000; // R_T and R_D enumeration cap
};

// Every numeric hypothesis of the reduction, each violation spelled out.
// Empty result means all hold.
std::vector<std::string> validate_params(const FglssConfig& cfg);

enum class Enforce { Strict, Tiny };

struct FglssOutput {
    PartitionedGraph graph;
    // Vertex bookkeeping: ids are assigned per part in sorted-key order.
    std::vector<VertexId> part_base;                         // first id of each part
    std::vector<std::vector<std::vector<Fe>>> vertex_keys;   // per part, flattened q-tuples
    std::vector<std::string> waived;                         // hypotheses waived in tiny mode
};

// Parts are tester randomness values; part r holds one vertex per accepting
// q-tuple of symbols under r. Edges: complete cross-part graph minus
// inconsistent pairs minus pairs whose implied decode violates a constraint.
// Strict mode requires validate_params to pass; tiny mode requires only
// δ < 1/12 and ε_T·R_T >= 2 and records the waived hypotheses.
FglssOutput build_fglss(const Vector2Csp& csp, const FglssConfig& cfg, Enforce enforce);

// Ids of the vertices consistent with the encoding of a satisfying
// assignment, one per part. They form an R_T-clique when the edges survive.
std::vector<VertexId> codeword_clique_ids(const FglssOutput& out, const FglssConfig& cfg,
                                          const std::vector<std::vector<Fe>>& assignment);

} // namespace cg
