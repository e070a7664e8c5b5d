#include "cliquegap/vcsp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cliquegap/rng.hpp"

namespace cg {

const std::vector<std::vector<Fe>>& Vector2Csp::pair_set(std::size_t i, std::size_t j) const {
    if (i >= j || j >= k) throw ParameterError("pair constraint index out of range");
    return binary[i][j - i - 1];
}

std::vector<std::vector<Fe>>& Vector2Csp::pair_set(std::size_t i, std::size_t j) {
    if (i >= j || j >= k) throw ParameterError("pair constraint index out of range");
    return binary[i][j - i - 1];
}

Vector2Csp Vector2Csp::empty(std::size_t k, std::uint64_t p, std::size_t dim) {
    Vector2Csp csp;
    csp.k = k;
    csp.p = p;
    csp.dim = dim;
    csp.unary.assign(k, {});
    csp.binary.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) csp.binary[i].assign(k - i - 1, {});
    return csp;
}

void Vector2Csp::normalize() {
    auto canon = [](std::vector<std::vector<Fe>>& set) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    };
    for (auto& s : unary) canon(s);
    for (auto& row : binary)
        for (auto& s : row) canon(s);
}

namespace {

std::string join_vector(const std::vector<Fe>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<Fe> split_vector(const std::string& text, std::size_t dim, std::uint64_t p,
                             std::size_t line_no) {
    std::vector<Fe> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw ParseError("bad residue '" + item + "'", line_no);
        }
        if (out.back() >= p) throw ParseError("residue out of range", line_no);
    }
    if (out.size() != dim) throw ParseError("vector arity mismatch", line_no);
    return out;
}

} // namespace

std::string serialize_vcsp(const Vector2Csp& csp) {
    std::ostringstream out;
    out << "vcsp " << csp.k << " " << csp.p << " " << csp.dim << "\n";
    for (std::size_t i = 0; i < csp.k; ++i) {
        out << "S " << i;
        for (const auto& v : csp.unary[i]) out << " " << join_vector(v);
        out << "\n";
    }
    for (std::size_t i = 0; i < csp.k; ++i) {
        for (std::size_t j = i + 1; j < csp.k; ++j) {
            out << "B " << i << " " << j;
            for (const auto& v : csp.pair_set(i, j)) out << " " << join_vector(v);
            out << "\n";
        }
    }
    return out.str();
}

Vector2Csp parse_vcsp(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    Vector2Csp csp;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "vcsp") {
            std::size_t k, dim;
            std::uint64_t p;
            if (!(ls >> k >> p >> dim)) throw ParseError("bad header", line_no);
            csp = Vector2Csp::empty(k, p, dim);
            have_header = true;
        } else if (tag == "S") {
            std::size_t i;
            if (!have_header || !(ls >> i) || i >= csp.k)
                throw ParseError("bad unary constraint", line_no);
            std::string vec;
            while (ls >> vec) csp.unary[i].push_back(split_vector(vec, csp.dim, csp.p, line_no));
        } else if (tag == "B") {
            std::size_t i, j;
            if (!have_header || !(ls >> i >> j) || i >= j || j >= csp.k)
                throw ParseError("bad binary constraint", line_no);
            std::string vec;
            while (ls >> vec)
                csp.pair_set(i, j).push_back(split_vector(vec, csp.dim, csp.p, line_no));
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing header", 1);
    csp.normalize();
    return csp;
}

std::vector<Fe> HashEmbedding::apply(const PrimeField& f, std::size_t part,
                                     std::uint64_t vertex_rank) const {
    const auto digits_vec = point_at(vertex_rank, p, digits);
    std::vector<Fe> out(dim, 0);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t c = 0; c < digits; ++c)
            out[row] = f.add(out[row], f.mul(mats[part][row][c], digits_vec[c]));
    return out;
}

std::size_t hash_dimension(std::uint64_t p, std::uint64_t max_part) {
    const u128 target = u128(max_part) * max_part * max_part * max_part * max_part;
    std::size_t d = 1;
    u128 power = p;
    while (power < target) {
        power *= p;
        ++d;
    }
    return d;
}

namespace {

std::size_t digit_count(std::uint64_t p, std::uint64_t max_part) {
    std::size_t b = 1;
    u128 power = p;
    while (power < max_part) {
        power *= p;
        ++b;
    }
    return b;
}

std::uint64_t max_part_size(const PartitionedGraph& g) {
    std::size_t n = 1;
    for (const auto& part : g.parts()) n = std::max(n, part.size());
    return n;
}

// Difference of base-p digit vectors of two vertex ranks.
std::vector<Fe> rank_difference(const PrimeField& f, std::uint64_t a, std::uint64_t b,
                                std::size_t digits) {
    const auto da = point_at(a, f.modulus(), digits);
    const auto db = point_at(b, f.modulus(), digits);
    std::vector<Fe> out(digits);
    for (std::size_t i = 0; i < digits; ++i) out[i] = f.sub(da[i], db[i]);
    return out;
}

// One collision event: Σ_parts Σ_cols M_part[row][col]·coeff = 0 for every
// row. Terms name (part, col) -> coefficient.
struct CollisionEvent {
    std::vector<std::pair<std::size_t, std::vector<Fe>>> terms; // (part, per-col coeffs)
};

std::vector<CollisionEvent> collision_events(const PartitionedGraph& g, const PrimeField& f,
                                             std::size_t digits) {
    std::vector<CollisionEvent> events;
    const std::size_t k = g.part_count();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t n_i = g.parts()[i].size();
        for (std::uint64_t a = 0; a < n_i; ++a)
            for (std::uint64_t b = a + 1; b < n_i; ++b)
                events.push_back({{{i, rank_difference(f, a, b, digits)}}});
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const std::uint64_t n_i = g.parts()[i].size();
            const std::uint64_t n_j = g.parts()[j].size();
            const std::uint64_t pairs = n_i * n_j;
            for (std::uint64_t a = 0; a < pairs; ++a) {
                for (std::uint64_t b = a + 1; b < pairs; ++b) {
                    const auto di = rank_difference(f, a / n_j, b / n_j, digits);
                    const auto dj = rank_difference(f, a % n_j, b % n_j, digits);
                    events.push_back({{{i, di}, {j, dj}}});
                }
            }
        }
    }
    return events;
}

// Σ over events of p^{d - #undetermined rows} when all determined rows are
// zero (scaled expectation of the violation count, denominator p^d).
u128 scaled_potential(const HashEmbedding& h, const PrimeField& f,
                      const std::vector<CollisionEvent>& events, std::size_t fixed_entries) {
    const std::size_t per_matrix = h.dim * h.digits;
    u128 total = 0;
    for (const auto& event : events) {
        std::size_t undetermined = 0;
        bool impossible = false;
        for (std::size_t row = 0; row < h.dim && !impossible; ++row) {
            Fe fixed_sum = 0;
            bool open = false;
            for (const auto& [part, coeffs] : event.terms) {
                for (std::size_t col = 0; col < h.digits; ++col) {
                    if (coeffs[col] == 0) continue;
                    const std::size_t entry_pos = part * per_matrix + row * h.digits + col;
                    if (entry_pos < fixed_entries)
                        fixed_sum = f.add(fixed_sum, f.mul(h.mats[part][row][col], coeffs[col]));
                    else
                        open = true;
                }
            }
            if (open)
                ++undetermined;
            else if (fixed_sum != 0)
                impossible = true;
        }
        if (impossible) continue;
        u128 weight = 1;
        for (std::size_t i = undetermined; i < h.dim; ++i) weight *= f.modulus();
        total += weight;
    }
    return total;
}

} // namespace

bool verify_hash(const HashEmbedding& h, const PartitionedGraph& g, const PrimeField& f) {
    const std::size_t k = g.part_count();
    for (std::size_t i = 0; i < k; ++i) {
        std::set<std::vector<Fe>> images;
        for (std::uint64_t rank = 0; rank < g.parts()[i].size(); ++rank)
            if (!images.insert(h.apply(f, i, rank)).second) return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::set<std::vector<Fe>> sums;
            for (std::uint64_t a = 0; a < g.parts()[i].size(); ++a) {
                const auto ha = h.apply(f, i, a);
                for (std::uint64_t b = 0; b < g.parts()[j].size(); ++b)
                    if (!sums.insert(f.add_vec(ha, h.apply(f, j, b))).second) return false;
            }
        }
    }
    return true;
}

HashEmbedding build_hash(const PartitionedGraph& g, const PrimeField& f, HashMode mode,
                         std::uint64_t seed) {
    const std::uint64_t n = max_part_size(g);
    HashEmbedding h;
    h.p = f.modulus();
    h.dim = hash_dimension(f.modulus(), n);
    h.digits = digit_count(f.modulus(), n);
    h.mats.assign(g.part_count(), Matrix(h.dim, std::vector<Fe>(h.digits, 0)));

    if (mode == HashMode::Seeded) {
        constexpr std::uint64_t kMaxAttempts = 10'000;
        for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
            SplitMix64 rng(seed + attempt);
            for (auto& mat : h.mats)
                for (auto& row : mat)
                    for (auto& entry : row) entry = rng.below(f.modulus());
            if (verify_hash(h, g, f)) return h;
        }
        throw ConstructionFailed("no verifying hash embedding after retries");
    }

    // Conditional expectations: entries are fixed in (part, row, col) order,
    // each to the value minimizing the exact expected violation count with
    // the remaining entries uniform.
    const auto events = collision_events(g, f, h.digits);
    {
        u128 guard = 1;
        for (std::size_t i = 0; i < h.dim; ++i) {
            guard *= f.modulus();
            if (guard > u128(1) << 100) throw BudgetExceeded("hash dimension too large to derandomize");
        }
    }
    const std::size_t per_matrix = h.dim * h.digits;
    const std::size_t total_entries = g.part_count() * per_matrix;
    for (std::size_t pos = 0; pos < total_entries; ++pos) {
        const std::size_t part = pos / per_matrix;
        const std::size_t row = (pos % per_matrix) / h.digits;
        const std::size_t col = pos % h.digits;
        Fe best_value = 0;
        u128 best_potential = ~u128(0);
        for (Fe candidate = 0; candidate < f.modulus(); ++candidate) {
            h.mats[part][row][col] = candidate;
            const u128 phi = scaled_potential(h, f, events, pos + 1);
            if (phi < best_potential) {
                best_potential = phi;
                best_value = candidate;
            }
        }
        h.mats[part][row][col] = best_value;
    }
    if (!verify_hash(h, g, f))
        throw ConstructionFailed(
            "derandomized construction ended with violations; the expected violation count "
            "started at or above 1 for these parameters");
    return h;
}

VcspReduction clique_to_vcsp(const PartitionedGraph& g, const PrimeField& f, HashMode mode,
                             std::uint64_t seed) {
    VcspReduction out{Vector2Csp::empty(g.part_count(), f.modulus(),
                                        hash_dimension(f.modulus(), max_part_size(g))),
                      build_hash(g, f, mode, seed)};

    // Vertex ranks follow the sorted id order within each part.
    std::vector<std::vector<VertexId>> sorted_parts = g.parts();
    for (auto& part : sorted_parts) std::sort(part.begin(), part.end());
    auto rank_of = [&](VertexId id) -> std::uint64_t {
        const std::size_t part = g.part_of(id);
        const auto& vs = sorted_parts[part];
        return static_cast<std::uint64_t>(
            std::lower_bound(vs.begin(), vs.end(), id) - vs.begin());
    };

    for (std::size_t i = 0; i < g.part_count(); ++i)
        for (std::uint64_t rank = 0; rank < sorted_parts[i].size(); ++rank)
            out.csp.unary[i].push_back(out.hash.apply(f, i, rank));

    for (const auto& [a, b] : g.edges()) {
        std::size_t i = g.part_of(a), j = g.part_of(b);
        VertexId va = a, vb = b;
        if (i > j) {
            std::swap(i, j);
            std::swap(va, vb);
        }
        out.csp.pair_set(i, j).push_back(
            f.add_vec(out.hash.apply(f, i, rank_of(va)), out.hash.apply(f, j, rank_of(vb))));
    }
    out.csp.normalize();
    return out;
}

std::optional<std::vector<std::vector<Fe>>> vcsp_brute_solve(const Vector2Csp& csp,
                                                             std::uint64_t budget) {
    const PrimeField f(csp.p);
    u128 space = 1;
    for (const auto& s : csp.unary) {
        if (s.empty()) return std::nullopt;
        space *= s.size();
        if (space > budget) throw BudgetExceeded("assignment space exceeds brute-force budget");
    }
    std::vector<std::size_t> pick(csp.k, 0);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < csp.k && ok; ++i) {
            for (std::size_t j = i + 1; j < csp.k && ok; ++j) {
                const auto sum = f.add_vec(csp.unary[i][pick[i]], csp.unary[j][pick[j]]);
                const auto& allowed = csp.pair_set(i, j);
                ok = std::binary_search(allowed.begin(), allowed.end(), sum);
            }
        }
        if (ok) {
            std::vector<std::vector<Fe>> assignment;
            for (std::size_t i = 0; i < csp.k; ++i) assignment.push_back(csp.unary[i][pick[i]]);
            return assignment;
        }
        std::size_t i = csp.k;
        while (i-- > 0) {
            if (++pick[i] < csp.unary[i].size()) break;
            pick[i] = 0;
            if (i == 0) return std::nullopt;
        }
    }
}

} // namespace cg
