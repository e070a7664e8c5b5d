#include "cliquegap/fglss.hpp"

#include <algorithm>
#include <map>

namespace cg {

std::vector<std::string> validate_params(const FglssConfig& cfg) {
    std::vector<std::string> violations;
    const Rational& d = cfg.delta;
    const u128 k_prime = cfg.code.block_len;
    if (cfg.code.query_count <= 1) violations.push_back("q > 1");
    if (!(d.num > 0 && d < Rational(1, 12))) violations.push_back("0 < delta < 1/12");
    const Rational eps_t = cfg.code.eps_t(d);
    if (!(eps_t.num > 0 && eps_t < Rational(1, 1))) violations.push_back("0 < eps_T < 1");
    // 1/δ < k'  ⟺  den < k'·num
    if (!(u128(d.den) < k_prime * d.num)) violations.push_back("1/delta < k'");
    if (!(k_prime <= cfg.code.tester_randomness)) violations.push_back("k' <= R_T");
    if (!(k_prime <= cfg.code.decoder_randomness)) violations.push_back("k' <= R_D");
    // ε_T·R_T >= 2
    if (!(u128(eps_t.num) * cfg.code.tester_randomness >= u128(2) * eps_t.den))
        violations.push_back("eps_T*R_T >= 2");
    return violations;
}

namespace {

std::vector<Fe> flatten_blocks(const std::vector<Block>& blocks) {
    std::vector<Fe> out;
    for (const auto& b : blocks)
        for (const auto& lane : b) out.insert(out.end(), lane.begin(), lane.end());
    return out;
}

Block block_at(std::uint64_t code_index, std::size_t lanes, std::size_t width, std::uint64_t p) {
    // Symbols in Σ2^t are enumerated base-p over the t·width residues,
    // lane-major, most significant first.
    const auto digits = point_at(code_index, p, lanes * width);
    Block b(lanes, LaneSymbol(width));
    for (std::size_t lane = 0; lane < lanes; ++lane)
        for (std::size_t w = 0; w < width; ++w) b[lane][w] = digits[lane * width + w];
    return b;
}

struct Vertex {
    std::vector<Fe> key;                        // query-order tuple, flattened
    std::map<std::size_t, Block> assignment;    // position -> block
};

} // namespace

FglssOutput build_fglss(const Vector2Csp& csp, const FglssConfig& cfg, Enforce enforce) {
    const PltdcCode& code = cfg.code;
    const PrimeField& f = code.field;
    if (csp.p != f.modulus()) throw ParameterError("constraint field does not match the code");
    if (csp.k != code.message_len)
        throw ParameterError("variable count does not match the code message length");
    if (csp.dim != cfg.t) throw ParameterError("parallel degree must equal the constraint dimension");

    const auto violations = validate_params(cfg);
    std::vector<std::string> waived;
    if (enforce == Enforce::Strict) {
        if (!violations.empty()) {
            std::string msg = "reduction hypotheses violated:";
            for (const auto& v : violations) msg += " [" + v + "]";
            throw ParameterError(msg);
        }
    } else {
        // Tiny mode still insists on the two hypotheses the construction
        // itself leans on.
        if (!(cfg.delta.num > 0 && cfg.delta < Rational(1, 12)))
            throw ParameterError("tiny mode still requires 0 < delta < 1/12");
        const Rational eps_t = code.eps_t(cfg.delta);
        if (!(u128(eps_t.num) * code.tester_randomness >= u128(2) * eps_t.den))
            throw ParameterError("tiny mode still requires eps_T*R_T >= 2");
        waived = violations;
    }

    if (code.tester_randomness > cfg.randomness_budget ||
        code.decoder_randomness > cfg.randomness_budget)
        throw BudgetExceeded("randomness spaces too large to enumerate for the reduction");
    const std::uint64_t r_t = static_cast<std::uint64_t>(code.tester_randomness);
    const std::uint64_t r_d = static_cast<std::uint64_t>(code.decoder_randomness);

    // Alphabet of one parallel symbol.
    const std::size_t residues = cfg.t * code.symbol_width;
    u128 symbol_count = 1;
    for (std::size_t i = 0; i < residues; ++i) {
        symbol_count *= f.modulus();
        if (symbol_count > cfg.part_budget)
            throw BudgetExceeded("symbol alphabet |Σ2|^t too large to enumerate");
    }

    // --- Vertices: accepting configurations per randomness --------------------
    std::vector<std::vector<Vertex>> parts(r_t);
    for (std::uint64_t r = 0; r < r_t; ++r) {
        const auto qpos = code.tester.queries(r);
        std::vector<std::size_t> distinct = qpos;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        u128 total = 1;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            total *= symbol_count;
            if (total > cfg.part_budget)
                throw BudgetExceeded("accepting-configuration enumeration exceeds the part budget");
        }
        std::vector<std::uint64_t> odometer(distinct.size(), 0);
        const std::uint64_t per_position = static_cast<std::uint64_t>(symbol_count);
        for (std::uint64_t it = 0; it < static_cast<std::uint64_t>(total); ++it) {
            Vertex v;
            for (std::size_t i = 0; i < distinct.size(); ++i)
                v.assignment[distinct[i]] =
                    block_at(odometer[i], cfg.t, code.symbol_width, f.modulus());
            std::vector<Block> in_order;
            in_order.reserve(qpos.size());
            for (const std::size_t pos : qpos) in_order.push_back(v.assignment.at(pos));
            if (code.tester.accept(r, in_order)) {
                v.key = flatten_blocks(in_order);
                parts[r].push_back(std::move(v));
            }
            for (std::size_t i = distinct.size(); i-- > 0;) {
                if (++odometer[i] < per_position) break;
                odometer[i] = 0;
            }
        }
        std::sort(parts[r].begin(), parts[r].end(),
                  [](const Vertex& a, const Vertex& b) { return a.key < b.key; });
    }

    // --- Decoder query table ---------------------------------------------------
    struct DecoderCheck {
        DecoderSpec spec;
        const std::vector<std::vector<Fe>>* allowed;
        std::vector<std::array<std::size_t, 2>> queries; // per randomness
    };
    std::vector<DecoderCheck> checks;
    auto add_check = [&](const DecodeTarget& target, const std::vector<std::vector<Fe>>& allowed) {
        DecoderCheck c{code.decoder_for(target), &allowed, {}};
        c.queries.reserve(r_d);
        for (std::uint64_t rd = 0; rd < r_d; ++rd) c.queries.push_back(c.spec.queries(rd));
        checks.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < csp.k; ++i) add_check(DecodeTarget::chi(i), csp.unary[i]);
    for (std::size_t i = 0; i < csp.k; ++i)
        for (std::size_t j = i + 1; j < csp.k; ++j)
            add_check(DecodeTarget::psi(i, j), csp.pair_set(i, j));

    // --- Graph -------------------------------------------------------------------
    FglssOutput out;
    out.waived = waived;
    out.graph = PartitionedGraph(r_t);
    VertexId next_id = 0;
    out.part_base.reserve(r_t);
    out.vertex_keys.resize(r_t);
    for (std::uint64_t r = 0; r < r_t; ++r) {
        out.part_base.push_back(next_id);
        for (const auto& v : parts[r]) {
            out.graph.add_vertex(r, next_id++);
            out.vertex_keys[r].push_back(v.key);
        }
    }

    for (std::uint64_t r1 = 0; r1 < r_t; ++r1) {
        for (std::uint64_t r2 = r1 + 1; r2 < r_t; ++r2) {
            for (std::size_t a = 0; a < parts[r1].size(); ++a) {
                for (std::size_t b = 0; b < parts[r2].size(); ++b) {
                    const Vertex& u = parts[r1][a];
                    const Vertex& w = parts[r2][b];
                    // (1) consistency on shared positions
                    bool consistent = true;
                    for (const auto& [pos, block] : u.assignment) {
                        const auto it = w.assignment.find(pos);
                        if (it != w.assignment.end() && !(it->second == block)) {
                            consistent = false;
                            break;
                        }
                    }
                    if (!consistent) continue;
                    // (2) decoder constraint violations over the union
                    std::map<std::size_t, Block> merged = u.assignment;
                    merged.insert(w.assignment.begin(), w.assignment.end());
                    bool keep = true;
                    for (const auto& check : checks) {
                        for (std::uint64_t rd = 0; rd < r_d && keep; ++rd) {
                            const auto& [q1, q2] = check.queries[rd];
                            const auto it1 = merged.find(q1);
                            if (it1 == merged.end()) continue;
                            const auto it2 = merged.find(q2);
                            if (it2 == merged.end()) continue;
                            const auto value = check.spec.reconstruct(rd, it1->second, it2->second);
                            if (!std::binary_search(check.allowed->begin(), check.allowed->end(),
                                                    value))
                                keep = false;
                        }
                        if (!keep) break;
                    }
                    if (keep)
                        out.graph.add_edge(out.part_base[r1] + static_cast<VertexId>(a),
                                           out.part_base[r2] + static_cast<VertexId>(b));
                }
            }
        }
    }

    out.graph.metadata.emplace_back("code", code.name);
    out.graph.metadata.emplace_back("q", std::to_string(code.query_count));
    out.graph.metadata.emplace_back("R_T", u128_str(code.tester_randomness));
    out.graph.metadata.emplace_back("R_D", u128_str(code.decoder_randomness));
    out.graph.metadata.emplace_back("delta", cfg.delta.str());
    out.graph.metadata.emplace_back("eps_T", code.eps_t(cfg.delta).str());
    out.graph.metadata.emplace_back("t", std::to_string(cfg.t));
    std::string waived_text;
    for (const auto& v : waived) waived_text += (waived_text.empty() ? "" : "; ") + v;
    out.graph.metadata.emplace_back("waived", waived_text.empty() ? "none" : waived_text);
    return out;
}

std::vector<VertexId> codeword_clique_ids(const FglssOutput& out, const FglssConfig& cfg,
                                          const std::vector<std::vector<Fe>>& assignment) {
    const PltdcCode& code = cfg.code;
    if (assignment.size() != code.message_len)
        throw ParameterError("assignment arity does not match the code");
    MessageTable table(cfg.t, std::vector<Fe>(code.message_len));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i].size() != cfg.t) throw ParameterError("assignment dimension mismatch");
        for (std::size_t lane = 0; lane < cfg.t; ++lane) table[lane][i] = assignment[i][lane];
    }
    const ParallelWord word = code.encode(table);

    std::vector<VertexId> ids;
    const std::uint64_t r_t = static_cast<std::uint64_t>(code.tester_randomness);
    for (std::uint64_t r = 0; r < r_t; ++r) {
        std::vector<Block> blocks;
        for (const std::size_t pos : code.tester.queries(r)) blocks.push_back(word.symbols[pos]);
        std::vector<Fe> key;
        for (const auto& b : blocks)
            for (const auto& lane : b) key.insert(key.end(), lane.begin(), lane.end());
        const auto& keys = out.vertex_keys[r];
        const auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it == keys.end() || *it != key)
            throw ParameterError("codeword configuration missing from part " + std::to_string(r));
        ids.push_back(out.part_base[r] + static_cast<VertexId>(it - keys.begin()));
    }
    return ids;
}

} // namespace cg
