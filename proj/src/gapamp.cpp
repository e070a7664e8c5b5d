#include "cliquegap/gapamp.hpp"

#include <algorithm>
#include <sstream>

#include "cliquegap/rng.hpp"

namespace cg {

Disperser build_disperser(std::size_t k, std::size_t m, std::size_t l, std::size_t r,
                          const Rational& eps, std::uint64_t seed) {
    if (l > k) throw ParameterError("subset size exceeds the universe");
    constexpr std::uint64_t kMaxAttempts = 1000;
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SplitMix64 rng(seed + attempt);
        Disperser d{k, m, l, r, eps, {}};
        for (std::size_t i = 0; i < m; ++i) {
            // Partial Fisher-Yates on [k]: first l entries form the subset.
            std::vector<std::size_t> pool(k);
            for (std::size_t j = 0; j < k; ++j) pool[j] = j;
            for (std::size_t j = 0; j < l; ++j)
                std::swap(pool[j], pool[j + rng.below(k - j)]);
            std::vector<std::size_t> subset(pool.begin(), pool.begin() + l);
            std::sort(subset.begin(), subset.end());
            d.subsets.push_back(std::move(subset));
        }
        if (verify_disperser(d)) return d;
    }
    throw ConstructionFailed(
        "no verifying disperser after retries; parameters are likely outside the ln m <= k/r "
        "regime");
}

bool verify_disperser(const Disperser& d, std::uint64_t budget) {
    if (d.subsets.size() != d.m) throw ParameterError("subset count mismatch");
    for (const auto& s : d.subsets)
        if (s.size() != d.l) throw ParameterError("subset size mismatch");
    if (d.r > d.m) return true; // no r-subcollections exist
    // C(m, r) within budget?
    u128 combos = 1;
    for (std::size_t i = 1; i <= d.r; ++i) {
        combos = combos * (d.m - d.r + i) / i;
        if (combos > budget) throw BudgetExceeded("C(m, r) exceeds the exhaustive budget");
    }
    // threshold: |union| >= (1-eps)·k  ⟺  |union|·den >= (den-num)·k
    const u128 rhs = u128(d.eps.den - d.eps.num) * d.k;
    std::vector<std::size_t> pick(d.r);
    for (std::size_t i = 0; i < d.r; ++i) pick[i] = i;
    while (true) {
        std::vector<bool> covered(d.k, false);
        std::size_t count = 0;
        for (const std::size_t s : pick) {
            for (const std::size_t x : d.subsets[s]) {
                if (!covered[x]) {
                    covered[x] = true;
                    ++count;
                }
            }
        }
        if (u128(count) * d.eps.den < rhs) return false;
        std::size_t i = d.r;
        while (i-- > 0) {
            if (pick[i] != d.m - d.r + i) break;
            if (i == 0) return true;
        }
        ++pick[i];
        for (std::size_t j = i + 1; j < d.r; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::string serialize_disperser(const Disperser& d) {
    std::ostringstream out;
    out << "disp " << d.k << " " << d.m << " " << d.l << " " << d.r << " " << d.eps.str() << "\n";
    for (const auto& subset : d.subsets) {
        for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? " " : "") << subset[i];
        out << "\n";
    }
    return out.str();
}

Disperser parse_disperser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    Disperser d;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag, eps;
            if (!(ls >> tag >> d.k >> d.m >> d.l >> d.r >> eps) || tag != "disp")
                throw ParseError("bad disperser header", line_no);
            d.eps = Rational::parse(eps);
            have_header = true;
        } else {
            std::vector<std::size_t> subset;
            std::size_t x;
            while (ls >> x) {
                if (x >= d.k) throw ParseError("subset member out of range", line_no);
                subset.push_back(x);
            }
            std::sort(subset.begin(), subset.end());
            d.subsets.push_back(std::move(subset));
        }
    }
    if (!have_header || d.subsets.size() != d.m)
        throw ParseError("disperser body does not match header", line_no == 0 ? 1 : line_no);
    return d;
}

PartitionedGraph amplify_gap(const PartitionedGraph& g, const Disperser& d,
                             std::uint64_t per_part_budget) {
    if (d.k != g.part_count()) throw ParameterError("disperser universe must match part count");

    std::vector<std::vector<VertexId>> sorted_parts = g.parts();
    for (auto& part : sorted_parts) std::sort(part.begin(), part.end());

    // Tuples over each subset, lexicographic in the sorted part order.
    std::vector<std::vector<std::vector<VertexId>>> tuples(d.m);
    for (std::size_t i = 0; i < d.m; ++i) {
        u128 count = 1;
        for (const std::size_t part : d.subsets[i]) {
            count *= sorted_parts[part].size();
            if (count > per_part_budget)
                throw BudgetExceeded("tuple enumeration exceeds the per-part budget");
        }
        std::vector<std::size_t> odometer(d.l, 0);
        for (u128 it = 0; it < count; ++it) {
            std::vector<VertexId> tuple(d.l);
            for (std::size_t j = 0; j < d.l; ++j)
                tuple[j] = sorted_parts[d.subsets[i][j]][odometer[j]];
            tuples[i].push_back(std::move(tuple));
            for (std::size_t j = d.l; j-- > 0;) {
                if (++odometer[j] < sorted_parts[d.subsets[i][j]].size()) break;
                odometer[j] = 0;
            }
        }
    }

    PartitionedGraph out(d.m);
    std::vector<VertexId> base(d.m);
    VertexId next_id = 0;
    for (std::size_t i = 0; i < d.m; ++i) {
        base[i] = next_id;
        for (std::size_t t = 0; t < tuples[i].size(); ++t) out.add_vertex(i, next_id++);
    }

    auto union_is_clique = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        std::vector<VertexId> all = a;
        all.insert(all.end(), b.begin(), b.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (std::size_t x = 0; x < all.size(); ++x) {
            for (std::size_t y = x + 1; y < all.size(); ++y) {
                if (g.part_of(all[x]) == g.part_of(all[y])) return false;
                if (!g.has_edge(all[x], all[y])) return false;
            }
        }
        return true;
    };

    for (std::size_t i = 0; i < d.m; ++i) {
        for (std::size_t j = i + 1; j < d.m; ++j) {
            for (std::size_t a = 0; a < tuples[i].size(); ++a)
                for (std::size_t b = 0; b < tuples[j].size(); ++b)
                    if (union_is_clique(tuples[i][a], tuples[j][b]))
                        out.add_edge(base[i] + static_cast<VertexId>(a),
                                     base[j] + static_cast<VertexId>(b));
        }
    }

    out.metadata.emplace_back("amplified_from_parts", std::to_string(d.k));
    out.metadata.emplace_back("disperser", std::to_string(d.m) + " subsets of size " +
                                               std::to_string(d.l) + ", r=" + std::to_string(d.r) +
                                               ", eps=" + d.eps.str());
    return out;
}

} // namespace cg
