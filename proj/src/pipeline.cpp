#include "cliquegap/pipeline.hpp"

#include <sstream>

namespace cg {

PipelineResult run_pipeline(const PartitionedGraph& input, const PipelineOptions& opts) {
    const PrimeField field(opts.field);
    PipelineResult result;
    std::ostringstream report;
    report << "pipeline: clique -> vcsp -> fglss" << (opts.amplify ? " -> amplify" : "") << "\n";
    report << "field: " << opts.field << "\n";
    report << "delta: " << opts.delta.str() << "\n";
    report << "seed: " << opts.seed << "\n";
    report << "hash_mode: " << (opts.hash_mode == HashMode::Seeded ? "seeded" : "derandomized")
           << "\n";
    report << "input_parts: " << input.part_count() << "\n";
    report << "input_vertices: " << input.vertex_count() << "\n";
    report << "input_edges: " << input.edge_count() << "\n";

    // Stage 1: clique -> vector 2CSP.
    VcspReduction reduction = [&] {
        try {
            return clique_to_vcsp(input, field, opts.hash_mode, opts.seed);
        } catch (const Error& e) {
            throw Error(std::string("stage reduce-vcsp: ") + e.what());
        }
    }();
    result.csp = reduction.csp;
    report << "hash_dim: " << result.csp.dim << "\n";
    report << "vcsp_vars: " << result.csp.k << "\n";
    report << "vcsp_unary_sizes:";
    for (const auto& s : result.csp.unary) report << " " << s.size();
    report << "\n";
    report << "vcsp_binary_sizes:";
    for (std::size_t i = 0; i < result.csp.k; ++i)
        for (std::size_t j = i + 1; j < result.csp.k; ++j)
            report << " " << result.csp.pair_set(i, j).size();
    report << "\n";

    // Stage 2: vector 2CSP -> accepting-configuration graph over Hadamard.
    FglssConfig cfg{hadamard_pltdc(field, result.csp.k), opts.delta, result.csp.dim,
                    opts.part_budget, opts.part_budget};
    try {
        result.fglss = build_fglss(result.csp, cfg, opts.tiny ? Enforce::Tiny : Enforce::Strict);
    } catch (const BudgetExceeded&) {
        throw;
    } catch (const Error& e) {
        throw Error(std::string("stage reduce-fglss: ") + e.what());
    }
    const std::uint64_t K = static_cast<std::uint64_t>(cfg.code.tester_randomness);
    result.threshold = ceil_scale(K, cfg.code.eps_t(opts.delta));
    report << "code: " << cfg.code.name << "\n";
    report << "K: " << K << "\n";
    report << "eps_T: " << cfg.code.eps_t(opts.delta).str() << "\n";
    report << "threshold_ceil_epsK: " << result.threshold << "\n";
    std::string waived;
    for (const auto& v : result.fglss.waived) waived += (waived.empty() ? "" : "; ") + v;
    report << "waived: " << (waived.empty() ? "none" : waived) << "\n";
    report << "fglss_vertices: " << result.fglss.graph.vertex_count() << "\n";
    report << "fglss_edges: " << result.fglss.graph.edge_count() << "\n";

    // Stage 3: exact clique size of the output.
    const auto clique = [&] {
        try {
            return max_clique(result.fglss.graph, opts.clique_budget);
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const Error& e) {
            throw Error(std::string("stage solve-clique: ") + e.what());
        }
    }();
    result.clique_size = clique.size;
    report << "max_clique: " << clique.size << "\n";
    report << "witness:";
    for (const VertexId v : clique.witness) report << " " << v;
    report << "\n";
    report << "meets_K: " << (clique.size == K ? "yes" : "no") << "\n";
    report << "below_threshold: " << (clique.size < result.threshold ? "yes" : "no") << "\n";

    // Optional stage 4: disperser-product amplification of the input graph.
    if (opts.amplify) {
        const AmplifyOptions& a = *opts.amplify;
        try {
            const Disperser d =
                build_disperser(input.part_count(), a.m, a.l, a.r, a.eps, opts.seed);
            result.amplified = amplify_gap(input, d);
            const auto amp_clique = max_clique(*result.amplified, opts.clique_budget);
            report << "amplify_parts: " << a.m << "\n";
            report << "amplify_vertices: " << result.amplified->vertex_count() << "\n";
            report << "amplify_edges: " << result.amplified->edge_count() << "\n";
            report << "amplify_max_clique: " << amp_clique.size << "\n";
            report << "amplify_soundness_r: " << a.r << "\n";
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const Error& e) {
            throw Error(std::string("stage amplify: ") + e.what());
        }
    }

    result.report = report.str();
    return result;
}

} // namespace cg
