#include "cliquegap/line_code.hpp"

#include <algorithm>
#include <set>

namespace cg {

LineDomain::LineDomain(const PrimeField& field, std::size_t vars)
    : field_(field), vars_(vars), points_(pow_u64(field.modulus(), vars)) {
    // Singletons first, by base point.
    for (std::uint64_t idx = 0; idx < points_; ++idx)
        lines_.push_back(Line{point_at(idx, field.modulus(), vars), std::vector<Fe>(vars, 0)});
    // Full canonical lines in (base, dir) order.
    std::set<Line> full;
    for (std::uint64_t x_idx = 0; x_idx < points_; ++x_idx) {
        const auto x = point_at(x_idx, field.modulus(), vars);
        for (std::uint64_t h_idx = 1; h_idx < points_; ++h_idx) {
            const auto h = point_at(h_idx, field.modulus(), vars);
            full.insert(canonical_line(field, x, h));
        }
    }
    lines_.insert(lines_.end(), full.begin(), full.end());
    for (std::size_t i = 0; i < lines_.size(); ++i) index_.emplace(lines_[i], i);

    through_.assign(points_, {});
    for (std::size_t i = points_; i < lines_.size(); ++i) {
        const Line& line = lines_[i];
        for (Fe lambda = 0; lambda < field.modulus(); ++lambda) {
            const auto pt = field.add_vec(line.base, field.scale_vec(lambda, line.dir));
            through_[point_index(pt, field.modulus())].push_back(i);
        }
    }
    for (auto& list : through_) std::sort(list.begin(), list.end());
}

std::size_t LineDomain::index_of(const Line& canonical) const {
    const auto it = index_.find(canonical);
    if (it == index_.end()) throw ParameterError("line is not in canonical form");
    return it->second;
}

std::size_t LineDomain::singleton_index(std::span<const Fe> x) const {
    return static_cast<std::size_t>(point_index(x, field_.modulus()));
}

Fe LineDomain::param_of(const Line& line, std::span<const Fe> w) const {
    if (line.singleton()) {
        for (std::size_t i = 0; i < vars_; ++i)
            if (w[i] != line.base[i]) throw ParameterError("point not on singleton line");
        return 0;
    }
    std::size_t pivot = 0;
    while (line.dir[pivot] == 0) ++pivot;
    const Fe lambda = field_.mul(field_.sub(w[pivot], line.base[pivot]), field_.inv(line.dir[pivot]));
    for (std::size_t i = 0; i < vars_; ++i) {
        if (field_.add(line.base[i], field_.mul(lambda, line.dir[i])) != w[i])
            throw ParameterError("point not on line");
    }
    return lambda;
}

LcParams make_lc_params(const PrimeField& field, std::size_t m, unsigned r, FieldFloor floor) {
    const unsigned d = 2 * r + 1;
    if (floor == FieldFloor::Strict) {
        const std::uint64_t need = std::max<std::uint64_t>(3ull * d, 9216);
        if (field.modulus() <= need)
            throw ParameterError("strict mode needs |F| > max(3d, 9216) = " +
                                 std::to_string(need) + "; rerun in tiny mode to waive it");
    }
    return LcParams{make_dc_params(field, m, r), LineDomain(field, 2 * m)};
}

ParallelWord lc_word_from_poly(const LcParams& params, const PolyTuple& f) {
    const DcParams& base = params.base;
    if (f.vars != 2 * base.m) throw DimensionError("polynomial must live on F^{2m}");
    std::vector<PolyTuple> partials;
    partials.reserve(base.sym_exps.size());
    for (const auto& v : base.sym_exps)
        partials.push_back(partial_derivative(base.field, f, v));

    ParallelWord w;
    w.n = params.domain.size();
    w.lanes = f.lanes;
    w.symbol_width = params.symbol_width();
    w.symbols.assign(w.n, Block(w.lanes, LaneSymbol(w.symbol_width, 0)));
    const unsigned d = base.d;
    for (std::size_t li = 0; li < w.n; ++li) {
        const Line& line = params.domain.line_at(li);
        for (std::size_t s = 0; s < partials.size(); ++s) {
            const auto g = restrict_to_line(base.field, partials[s], line.base, line.dir);
            for (unsigned c = 0; c <= d && c < g.coeffs.size(); ++c)
                for (std::size_t lane = 0; lane < w.lanes; ++lane)
                    w.symbols[li][lane][s * (d + 1) + c] = g.coeffs[c][lane];
        }
    }
    return w;
}

namespace {

// q(x, y) = p(x) + p(y), as in the point-indexed derivative code.
PolyTuple pair_sum(const DcParams& base, const PolyTuple& p) {
    PolyTuple q = PolyTuple::zero(p.lanes, 2 * base.m, base.d);
    for (const auto& [v, c] : p.coeffs) {
        ExponentVec on_x(2 * base.m, 0), on_y(2 * base.m, 0);
        for (std::size_t i = 0; i < base.m; ++i) {
            on_x[i] = v[i];
            on_y[base.m + i] = v[i];
        }
        for (std::size_t lane = 0; lane < p.lanes; ++lane) {
            q.add_term(base.field, on_x, lane, c[lane]);
            q.add_term(base.field, on_y, lane, c[lane]);
        }
    }
    return q;
}

} // namespace

ParallelWord lc_encode(const LcParams& params, const MessageTable& messages) {
    return lc_word_from_poly(params, pair_sum(params.base, dc_interpolate(params.base, messages)));
}

std::vector<UniPolyTuple> symbol_restrictions(const LcParams& params, const Block& symbol,
                                              const Line& line, std::span<const Fe> base_pt,
                                              std::span<const Fe> dir) {
    const PrimeField& f = params.base.field;
    const unsigned d = params.base.d;
    const std::size_t lanes = symbol.size();

    // base_pt = base + μ0·dir_line and dir = c·dir_line; then the stored
    // slice s(μ) becomes g(λ) = s(μ0 + c·λ).
    Fe mu0 = 0, scale = 0;
    if (!line.singleton()) {
        mu0 = params.domain.param_of(line, base_pt);
        std::size_t pivot = 0;
        while (line.dir[pivot] == 0) ++pivot;
        scale = f.mul(dir[pivot], f.inv(line.dir[pivot]));
        for (std::size_t i = 0; i < dir.size(); ++i)
            if (dir[i] != f.mul(scale, line.dir[i]))
                throw ParameterError("direction not parallel to line");
    } else {
        for (std::size_t i = 0; i < dir.size(); ++i)
            if (dir[i] != 0) throw ParameterError("nonzero direction on a singleton line");
    }

    std::vector<UniPolyTuple> out;
    out.reserve(params.slice_count());
    for (std::size_t s = 0; s < params.slice_count(); ++s) {
        UniPolyTuple slice = UniPolyTuple::zero(lanes, d);
        for (unsigned c = 0; c <= d; ++c)
            for (std::size_t lane = 0; lane < lanes; ++lane)
                slice.coeffs[c][lane] = symbol[lane][s * (d + 1) + c];
        out.push_back(line.singleton() ? std::move(slice)
                                       : compose_affine(f, slice, mu0, scale));
    }
    return out;
}

Block symbol_values_at(const LcParams& params, const Block& symbol, const Line& line,
                       std::span<const Fe> w) {
    const PrimeField& f = params.base.field;
    const Fe lambda = params.domain.param_of(line, w);
    const unsigned d = params.base.d;
    Block table(symbol.size(), LaneSymbol(params.slice_count(), 0));
    for (std::size_t s = 0; s < params.slice_count(); ++s) {
        for (std::size_t lane = 0; lane < symbol.size(); ++lane) {
            Fe acc = 0;
            for (unsigned c = d + 1; c-- > 0;)
                acc = f.add(f.mul(acc, lambda), symbol[lane][s * (d + 1) + c]);
            table[lane][s] = acc;
        }
    }
    return table;
}

bool line_vs_point_step(const LcParams& params, const ParallelWord& w, std::span<const Fe> x,
                        std::span<const Fe> h) {
    const Line point_line{std::vector<Fe>(x.begin(), x.end()),
                          std::vector<Fe>(x.size(), 0)};
    const Line line = canonical_line(params.base.field, x, h);
    const Block f_x =
        symbol_values_at(params, w.symbols[params.domain.singleton_index(x)], point_line, x);
    const Block p_x = symbol_values_at(params, w.symbols[params.domain.index_of(line)], line, x);
    return f_x == p_x;
}

namespace {

struct LcTesterRandomness {
    std::vector<Fe> x1, h1, x2, h2;
    std::vector<Fe> xy;
    // Per sum-form target: decode direction, node pair, two line directions.
    std::array<std::vector<Fe>, 4> h;
    std::array<std::pair<Fe, Fe>, 4> nodes;
    std::array<std::vector<Fe>, 4> hl1, hl2;
};

LcTesterRandomness decode_lc_randomness(const LcParams& params, RIndex r) {
    const PrimeField& f = params.base.field;
    const std::size_t vars = 2 * params.base.m;
    const u128 domain = params.base.block_len;
    const u128 pairs = u128(f.modulus() - 1) * (f.modulus() - 2);
    std::vector<u128> rad{domain, domain, domain, domain, domain};
    for (int t = 0; t < 4; ++t) {
        rad.push_back(domain);
        rad.push_back(pairs);
        rad.push_back(domain);
        rad.push_back(domain);
    }
    const auto digits = mixed_radix_digits(r, rad);
    auto pt = [&](std::size_t i) { return point_at(digits[i], f.modulus(), vars); };
    LcTesterRandomness out;
    out.x1 = pt(0);
    out.h1 = pt(1);
    out.x2 = pt(2);
    out.h2 = pt(3);
    out.xy = pt(4);
    for (std::size_t t = 0; t < 4; ++t) {
        out.h[t] = pt(5 + 4 * t);
        out.nodes[t] = distinct_nonzero_pair(digits[6 + 4 * t], f.modulus());
        out.hl1[t] = pt(7 + 4 * t);
        out.hl2[t] = pt(8 + 4 * t);
    }
    return out;
}

std::array<std::vector<Fe>, 4> sum_form_targets(std::size_t m, const std::vector<Fe>& xy) {
    std::vector<Fe> x(xy.begin(), xy.begin() + m);
    std::vector<Fe> y(xy.begin() + m, xy.end());
    const std::vector<Fe> zero(m, 0);
    auto glue = [](const std::vector<Fe>& a, const std::vector<Fe>& b) {
        std::vector<Fe> z = a;
        z.insert(z.end(), b.begin(), b.end());
        return z;
    };
    return {glue(x, y), glue(x, zero), glue(y, zero), glue(zero, zero)};
}

} // namespace

TesterSpec lc_tester(const LcParams& params) {
    const PrimeField f = params.base.field;
    const std::size_t m = params.base.m;
    const u128 domain = params.base.block_len;
    const u128 pairs = u128(f.modulus() - 1) * (f.modulus() - 2);

    std::vector<u128> radices{domain, domain, domain, domain, domain};
    for (int t = 0; t < 4; ++t) {
        radices.push_back(domain);
        radices.push_back(pairs);
        radices.push_back(domain);
        radices.push_back(domain);
    }

    TesterSpec spec;
    spec.randomness_size = mixed_radix_size(radices);
    spec.query_count = 11;
    spec.queries = [params, f, m](RIndex r) {
        const auto rnd = decode_lc_randomness(params, r);
        std::vector<std::size_t> out;
        out.reserve(11);
        out.push_back(params.domain.singleton_index(rnd.x1));
        out.push_back(params.domain.index_of(canonical_line(f, rnd.x1, rnd.h1)));
        out.push_back(params.domain.index_of(canonical_line(f, rnd.x2, rnd.h2)));
        const auto targets = sum_form_targets(m, rnd.xy);
        for (std::size_t t = 0; t < 4; ++t) {
            const auto z1 = f.add_vec(targets[t], f.scale_vec(rnd.nodes[t].first, rnd.h[t]));
            const auto z2 = f.add_vec(targets[t], f.scale_vec(rnd.nodes[t].second, rnd.h[t]));
            out.push_back(params.domain.index_of(canonical_line(f, z1, rnd.hl1[t])));
            out.push_back(params.domain.index_of(canonical_line(f, z2, rnd.hl2[t])));
        }
        return out;
    };

    spec.accept = [params, f, m](RIndex r, const std::vector<Block>& blocks) {
        const auto rnd = decode_lc_randomness(params, r);
        const DcParams& base = params.base;
        const std::size_t lanes = blocks[0].size();

        // (1) Line vs. point at x1.
        {
            const Line point_line{rnd.x1, std::vector<Fe>(rnd.x1.size(), 0)};
            const Line line = canonical_line(f, rnd.x1, rnd.h1);
            const Block f_x = symbol_values_at(params, blocks[0], point_line, rnd.x1);
            const Block p_x = symbol_values_at(params, blocks[1], line, rnd.x1);
            if (!(f_x == p_x)) return false;
        }

        // (2) Derivative consistency of the line symbol at x2 along h2.
        {
            const Line line = canonical_line(f, rnd.x2, rnd.h2);
            const auto slices = symbol_restrictions(params, blocks[2], line, rnd.x2, rnd.h2);
            const Block table = symbol_values_at(params, blocks[2], line, rnd.x2);
            const auto expected = directional_derivatives(base, table, rnd.h2);
            UniPolyTuple g0 = slices[0]; // value slice, reparameterized
            for (unsigned j = 1; j <= base.r; ++j) {
                g0 = derive_uni(f, g0);
                const auto lhs = eval_uni(f, g0, 0);
                for (std::size_t lane = 0; lane < lanes; ++lane)
                    if (lhs[lane] != expected[j][lane]) return false;
            }
        }

        // (3) Sum form via four Hermite reconstructions:
        // f̃(x,y) + f̃(0,0) = f̃(x,0) + f̃(y,0) on the value coordinate.
        {
            const auto targets = sum_form_targets(m, rnd.xy);
            std::vector<std::vector<Fe>> value_at(4);
            for (std::size_t t = 0; t < 4; ++t) {
                const auto [l1, l2] = rnd.nodes[t];
                const auto z1 = f.add_vec(targets[t], f.scale_vec(l1, rnd.h[t]));
                const auto z2 = f.add_vec(targets[t], f.scale_vec(l2, rnd.h[t]));
                const Line line1 = canonical_line(f, z1, rnd.hl1[t]);
                const Line line2 = canonical_line(f, z2, rnd.hl2[t]);
                const Block tab1 = symbol_values_at(params, blocks[3 + 2 * t], line1, z1);
                const Block tab2 = symbol_values_at(params, blocks[4 + 2 * t], line2, z2);
                auto rows = directional_derivatives(base, tab1, rnd.h[t]);
                const auto rows2 = directional_derivatives(base, tab2, rnd.h[t]);
                rows.insert(rows.end(), rows2.begin(), rows2.end());
                const auto g = solve_confluent_vandermonde(f, l1, l2, base.r, rows);
                value_at[t] = g.coeffs[0];
            }
            for (std::size_t lane = 0; lane < lanes; ++lane) {
                const Fe lhs = f.add(value_at[0][lane], value_at[3][lane]);
                const Fe rhs = f.add(value_at[1][lane], value_at[2][lane]);
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    return spec;
}

DecoderSpec lc_decoder(const LcParams& params, const DecodeTarget& target) {
    const PrimeField f = params.base.field;
    const DcParams& base = params.base;
    const std::size_t M = base.message_len;
    if (target.i >= M || (target.kind == DecodeTarget::Psi && target.j >= M))
        throw InvalidTarget("decode target index out of range");

    std::vector<Fe> z = base.points[target.i];
    const auto& second =
        target.kind == DecodeTarget::Psi ? base.points[target.j] : base.points[target.i];
    z.insert(z.end(), second.begin(), second.end());
    const Fe post_scale = target.kind == DecodeTarget::Chi ? f.inv(2 % f.modulus()) : 1;

    const std::uint64_t domain = base.block_len;
    const std::uint64_t pair_count = (f.modulus() - 1) * (f.modulus() - 2);
    // Weighted line menu per queried point: every full line once, the
    // singleton p times, so each of the n line positions is queried exactly
    // 2·R_D/n times over the full randomness space.
    const std::uint64_t full_through = (domain - 1) / (f.modulus() - 1);
    const std::uint64_t menu = full_through + f.modulus();

    struct Decoded {
        std::vector<Fe> h;
        Fe l1, l2;
        std::uint64_t c1, c2;
    };
    const std::size_t vars = 2 * base.m;
    auto decode_randomness = [f, vars, domain, pair_count, menu](RIndex r) {
        const std::vector<u128> rad{u128(domain), u128(pair_count), u128(menu), u128(menu)};
        const auto digits = mixed_radix_digits(r, rad);
        const auto [l1, l2] = distinct_nonzero_pair(digits[1], f.modulus());
        return Decoded{point_at(digits[0], f.modulus(), vars), l1, l2, digits[2], digits[3]};
    };
    auto pick_line = [params, full_through](const std::vector<Fe>& pt, std::uint64_t choice) {
        if (choice < full_through)
            return params.domain.full_lines_through(point_index(pt, params.base.field.modulus()))
                [choice];
        return params.domain.singleton_index(pt);
    };

    DecoderSpec spec;
    spec.randomness_size = u128(domain) * pair_count * menu * menu;
    spec.target = target;
    spec.queries = [f, z, decode_randomness, pick_line](RIndex r) {
        const auto rnd = decode_randomness(r);
        const auto z1 = f.add_vec(z, f.scale_vec(rnd.l1, rnd.h));
        const auto z2 = f.add_vec(z, f.scale_vec(rnd.l2, rnd.h));
        return std::array<std::size_t, 2>{pick_line(z1, rnd.c1), pick_line(z2, rnd.c2)};
    };
    spec.reconstruct = [f, z, params, post_scale, decode_randomness, pick_line](
                           RIndex r, const Block& b1, const Block& b2) {
        const auto rnd = decode_randomness(r);
        const auto z1 = f.add_vec(z, f.scale_vec(rnd.l1, rnd.h));
        const auto z2 = f.add_vec(z, f.scale_vec(rnd.l2, rnd.h));
        const Line& line1 = params.domain.line_at(pick_line(z1, rnd.c1));
        const Line& line2 = params.domain.line_at(pick_line(z2, rnd.c2));
        const Block tab1 = symbol_values_at(params, b1, line1, z1);
        const Block tab2 = symbol_values_at(params, b2, line2, z2);
        auto rows = directional_derivatives(params.base, tab1, rnd.h);
        const auto rows2 = directional_derivatives(params.base, tab2, rnd.h);
        rows.insert(rows.end(), rows2.begin(), rows2.end());
        const auto g = solve_confluent_vandermonde(f, rnd.l1, rnd.l2, params.base.r, rows);
        std::vector<Fe> out(b1.size());
        for (std::size_t lane = 0; lane < b1.size(); ++lane)
            out[lane] = f.mul(g.coeffs[0][lane], post_scale);
        return out;
    };
    return spec;
}

std::vector<Block> majority_correct(const LcParams& params, const ParallelWord& w,
                                    std::uint64_t budget) {
    const PrimeField& f = params.base.field;
    const unsigned d = params.base.d;
    const std::uint64_t p = f.modulus();
    const std::uint64_t point_count = params.domain.point_count();
    const std::size_t lanes = w.lanes;
    const std::size_t comps = lanes * params.slice_count();
    const std::uint64_t candidates = pow_u64(p, d + 1);
    const std::uint64_t cost =
        params.domain.full_line_count() * comps * candidates * p + point_count * point_count;
    if (candidates > 1'000'000 || cost > budget)
        throw BudgetExceeded("plurality correction too large to enumerate");

    // Point function implied by the singleton symbols.
    std::vector<Block> f_val(point_count);
    for (std::uint64_t xi = 0; xi < point_count; ++xi) {
        const Line& sline = params.domain.line_at(xi);
        f_val[xi] = symbol_values_at(params, w.symbols[xi], sline, sline.base);
    }

    auto flat = [comps, lanes](const Block& b) {
        std::vector<Fe> out;
        out.reserve(comps);
        for (std::size_t lane = 0; lane < lanes; ++lane)
            out.insert(out.end(), b[lane].begin(), b[lane].end());
        return out;
    };

    // Closest degree-<=d restriction per full line, component-wise: candidate
    // coefficient vectors are scanned in lexicographic order (constant term
    // most significant) so the first minimum is also the lexicographic
    // tie-break winner.
    const std::size_t full_count = params.domain.full_line_count();
    std::vector<std::vector<std::vector<Fe>>> closest(full_count);
    for (std::size_t li = 0; li < full_count; ++li) {
        const Line& line = params.domain.line_at(point_count + li);
        std::vector<std::vector<Fe>> samples(p); // per λ, flattened table of f
        for (Fe lambda = 0; lambda < p; ++lambda) {
            const auto pt = f.add_vec(line.base, f.scale_vec(lambda, line.dir));
            samples[lambda] = flat(f_val[point_index(pt, p)]);
        }
        closest[li].assign(comps, {});
        for (std::size_t comp = 0; comp < comps; ++comp) {
            std::uint64_t best_dist = UINT64_MAX;
            for (std::uint64_t cand = 0; cand < candidates && best_dist > 0; ++cand) {
                // Digits MSB-first gives (c_0, ..., c_d).
                std::vector<Fe> coeffs = point_at(cand, p, d + 1);
                std::uint64_t dist = 0;
                for (Fe lambda = 0; lambda < p; ++lambda) {
                    Fe acc = 0;
                    for (unsigned c = d + 1; c-- > 0;) acc = f.add(f.mul(acc, lambda), coeffs[c]);
                    if (acc != samples[lambda][comp]) ++dist;
                }
                if (dist < best_dist) {
                    best_dist = dist;
                    closest[li][comp] = std::move(coeffs);
                }
            }
        }
    }

    std::vector<Block> out(point_count);
    for (std::uint64_t xi = 0; xi < point_count; ++xi) {
        const auto x = point_at(xi, p, 2 * params.base.m);
        std::map<std::vector<Fe>, std::uint64_t> votes;
        // h = 0 votes for the point's own claimed value.
        votes[flat(f_val[xi])] += 1;
        for (const std::size_t li : params.domain.full_lines_through(xi)) {
            const Line& line = params.domain.line_at(li);
            const Fe lambda = params.domain.param_of(line, x);
            std::vector<Fe> value(comps);
            for (std::size_t comp = 0; comp < comps; ++comp) {
                const auto& coeffs = closest[li - point_count][comp];
                Fe acc = 0;
                for (unsigned c = d + 1; c-- > 0;) acc = f.add(f.mul(acc, lambda), coeffs[c]);
                value[comp] = acc;
            }
            // Each full line through x arises from p-1 directions.
            votes[std::move(value)] += p - 1;
        }
        const std::vector<Fe>* winner = nullptr;
        std::uint64_t best = 0;
        for (const auto& [value, count] : votes) {
            if (count > best) {
                best = count;
                winner = &value;
            }
        }
        Block table(lanes, LaneSymbol(params.slice_count(), 0));
        for (std::size_t lane = 0; lane < lanes; ++lane)
            for (std::size_t s = 0; s < params.slice_count(); ++s)
                table[lane][s] = (*winner)[lane * params.slice_count() + s];
        out[xi] = std::move(table);
    }
    return out;
}

} // namespace cg
