#include "cliquegap/derivative_code.hpp"

namespace cg {

std::vector<std::vector<Fe>> select_interpolation_points(const PrimeField& field, std::size_t m,
                                                         unsigned d) {
    if (field.modulus() <= d)
        throw ParameterError("field too small: need p > d for independent monomials");
    const auto exps = exponents_up_to(m, d);
    const std::uint64_t domain = pow_u64(field.modulus(), m);
    if (domain < exps.size())
        throw ParameterError("field too small: need p^m >= C(m+d, d) interpolation points");

    std::vector<std::vector<Fe>> points;
    RankTracker tracker(field, exps.size());
    for (std::uint64_t idx = 0; idx < domain && points.size() < exps.size(); ++idx) {
        const auto u = point_at(idx, field.modulus(), m);
        std::vector<Fe> row(exps.size());
        for (std::size_t c = 0; c < exps.size(); ++c) row[c] = monomial_eval(field, u, exps[c]);
        if (tracker.try_add(std::move(row))) points.push_back(u);
    }
    if (points.size() < exps.size())
        throw ParameterError("could not find a full-rank interpolation set");
    return points;
}

// r = 0 (d = 1, value-only symbols) is allowed: the line code reuses these
// parameters for degree-1 instantiations of the line-vs-point machinery.
DcParams make_dc_params(const PrimeField& field, std::size_t m, unsigned r) {
    DcParams params;
    params.field = field;
    params.m = m;
    params.r = r;
    params.d = 2 * r + 1;
    if (field.modulus() <= 2ull * params.d)
        throw ParameterError("need p > 2d = " + std::to_string(2 * params.d));
    params.msg_exps = exponents_up_to(m, params.d);
    params.message_len = params.msg_exps.size();
    params.block_len = pow_u64(field.modulus(), 2 * m);
    params.points = select_interpolation_points(field, m, params.d);
    params.sym_exps = exponents_up_to(2 * m, r);
    for (std::size_t i = 0; i < params.sym_exps.size(); ++i)
        params.sym_index.emplace(params.sym_exps[i], i);

    const std::size_t M = params.message_len;
    Matrix sample(M, std::vector<Fe>(M));
    Matrix identity(M, std::vector<Fe>(M, 0));
    for (std::size_t i = 0; i < M; ++i) {
        identity[i][i] = 1;
        for (std::size_t c = 0; c < M; ++c)
            sample[i][c] = monomial_eval(field, params.points[i], params.msg_exps[c]);
    }
    params.interp_inverse = gauss_solve(field, std::move(sample), std::move(identity)).solution;
    return params;
}

PolyTuple dc_interpolate(const DcParams& params, const MessageTable& messages) {
    const PrimeField& f = params.field;
    const std::size_t M = params.message_len;
    for (const auto& lane : messages)
        if (lane.size() != M) throw ShapeError("message length mismatch");
    PolyTuple p = PolyTuple::zero(messages.size(), params.m, params.d);
    for (std::size_t c = 0; c < M; ++c) {
        for (std::size_t lane = 0; lane < messages.size(); ++lane) {
            Fe acc = 0;
            for (std::size_t i = 0; i < M; ++i)
                acc = f.add(acc, f.mul(params.interp_inverse[c][i], messages[lane][i]));
            p.add_term(f, params.msg_exps[c], lane, acc);
        }
    }
    return p;
}

namespace {

// q(x, y) = p(x) + p(y) over 2m variables.
PolyTuple pair_sum_poly(const DcParams& params, const PolyTuple& p) {
    PolyTuple q = PolyTuple::zero(p.lanes, 2 * params.m, params.d);
    for (const auto& [v, c] : p.coeffs) {
        ExponentVec on_x(2 * params.m, 0), on_y(2 * params.m, 0);
        for (std::size_t i = 0; i < params.m; ++i) {
            on_x[i] = v[i];
            on_y[params.m + i] = v[i];
        }
        for (std::size_t lane = 0; lane < p.lanes; ++lane) {
            q.add_term(params.field, on_x, lane, c[lane]);
            q.add_term(params.field, on_y, lane, c[lane]);
        }
    }
    return q;
}

} // namespace

ParallelWord dc_word_from_poly(const DcParams& params, const PolyTuple& f) {
    if (f.vars != 2 * params.m) throw DimensionError("polynomial must live on F^{2m}");
    ParallelWord w;
    w.n = params.block_len;
    w.lanes = f.lanes;
    w.symbol_width = params.symbol_width();
    w.symbols.assign(w.n, Block(w.lanes, LaneSymbol(w.symbol_width, 0)));
    for (std::size_t col = 0; col < params.sym_exps.size(); ++col) {
        const PolyTuple deriv = partial_derivative(params.field, f, params.sym_exps[col]);
        for (std::uint64_t idx = 0; idx < params.block_len; ++idx) {
            const auto z = point_at(idx, params.field.modulus(), 2 * params.m);
            const auto vals = eval_poly(params.field, deriv, z);
            for (std::size_t lane = 0; lane < w.lanes; ++lane) w.symbols[idx][lane][col] = vals[lane];
        }
    }
    return w;
}

ParallelWord dc_encode(const DcParams& params, const MessageTable& messages) {
    return dc_word_from_poly(params, pair_sum_poly(params, dc_interpolate(params, messages)));
}

namespace {

std::vector<Fe> flatten(const Block& b) {
    std::vector<Fe> out;
    out.reserve(b.size() * (b.empty() ? 0 : b[0].size()));
    for (const auto& row : b) out.insert(out.end(), row.begin(), row.end());
    return out;
}

} // namespace

std::vector<std::vector<Fe>> directional_derivatives(const DcParams& params, const Block& table,
                                                     std::span<const Fe> h) {
    const PrimeField& f = params.field;
    const std::size_t lanes = table.size();
    std::vector<std::vector<Fe>> rows(params.r + 1, std::vector<Fe>(lanes, 0));
    for (std::size_t col = 0; col < params.sym_exps.size(); ++col) {
        const ExponentVec& v = params.sym_exps[col];
        const unsigned j = exponent_order(v);
        const Fe weight = f.mul(multinomial_mod(f, v), monomial_eval(f, h, v));
        if (weight == 0) continue;
        for (std::size_t lane = 0; lane < lanes; ++lane)
            rows[j][lane] = f.add(rows[j][lane], f.mul(weight, table[lane][col]));
    }
    return rows;
}

TesterSpec low_degree_test(const PrimeField& field, std::size_t vars, unsigned d) {
    if (field.modulus() < d + 2ull)
        throw ParameterError("need p >= d+2 distinct evaluation nodes");
    const std::uint64_t domain = pow_u64(field.modulus(), vars);

    TesterSpec spec;
    spec.randomness_size = u128(domain) * domain;
    spec.query_count = d + 2;
    spec.queries = [field, vars, domain, d](RIndex r) {
        const auto x = point_at(static_cast<std::uint64_t>(r / domain), field.modulus(), vars);
        const auto h = point_at(static_cast<std::uint64_t>(r % domain), field.modulus(), vars);
        std::vector<std::size_t> out;
        out.reserve(d + 2);
        for (Fe lambda = 0; lambda <= d + 1; ++lambda) {
            const auto pt = field.add_vec(x, field.scale_vec(lambda, h));
            out.push_back(static_cast<std::size_t>(point_index(pt, field.modulus())));
        }
        return out;
    };
    spec.accept = [field, d](RIndex, const std::vector<Block>& blocks) {
        std::vector<std::pair<Fe, std::vector<Fe>>> samples;
        samples.reserve(d + 1);
        for (Fe lambda = 0; lambda <= d; ++lambda)
            samples.emplace_back(lambda, flatten(blocks[lambda]));
        const auto g = interpolate_univariate(field, samples);
        return eval_uni(field, g, d + 1) == flatten(blocks[d + 1]);
    };
    return spec;
}

TesterSpec dc_tester(const DcParams& params) {
    const PrimeField f = params.field;
    const std::size_t vars = 2 * params.m;
    const std::uint64_t domain = params.block_len;
    const unsigned d = params.d;
    const unsigned r_ord = params.r;

    // Randomness: nine points of F^{2m}, most significant first:
    // (x1, h1) line test, (x2, h2) derivative consistency, (x‖y) plus four
    // directions for the sum-form interpolations.
    const std::vector<u128> radices(9, u128(domain));
    const u128 r_total = mixed_radix_size(radices);

    // Query schedule: [0, d+1] line test, [d+2, 2d+2] consistency,
    // then 4 groups of (d+1) sum-form queries at λ = 1..d+1.
    auto decode_randomness = [f, vars, domain](RIndex r) {
        std::vector<u128> rad(9, u128(domain));
        const auto digits = mixed_radix_digits(r, rad);
        std::vector<std::vector<Fe>> pts(9);
        for (std::size_t i = 0; i < 9; ++i) pts[i] = point_at(digits[i], f.modulus(), vars);
        return pts;
    };

    TesterSpec spec;
    spec.randomness_size = r_total;
    spec.query_count = 6 * d + 7;
    const std::size_t m = params.m;
    spec.queries = [f, d, m, vars, decode_randomness](RIndex r) {
        const auto pts = decode_randomness(r);
        std::vector<std::size_t> out;
        out.reserve(6 * d + 7);
        auto push_ray = [&](const std::vector<Fe>& base, const std::vector<Fe>& dir, Fe lo, Fe hi) {
            for (Fe lambda = lo; lambda <= hi; ++lambda) {
                const auto pt = f.add_vec(base, f.scale_vec(lambda, dir));
                out.push_back(static_cast<std::size_t>(point_index(pt, f.modulus())));
            }
        };
        push_ray(pts[0], pts[1], 0, d + 1); // line test
        push_ray(pts[2], pts[3], 0, d);     // derivative consistency
        // Sum-form targets (x,y), (x,0), (y,0), (0,0) built from pts[4] = (x‖y).
        std::vector<Fe> x(pts[4].begin(), pts[4].begin() + m);
        std::vector<Fe> y(pts[4].begin() + m, pts[4].end());
        const std::vector<Fe> zero(m, 0);
        auto glue = [](const std::vector<Fe>& a, const std::vector<Fe>& b) {
            std::vector<Fe> z = a;
            z.insert(z.end(), b.begin(), b.end());
            return z;
        };
        const std::vector<std::vector<Fe>> targets{glue(x, y), glue(x, zero), glue(y, zero),
                                                   glue(zero, zero)};
        for (std::size_t t = 0; t < 4; ++t) push_ray(targets[t], pts[5 + t], 1, d + 1);
        return out;
    };

    spec.accept = [f, d, r_ord, params, decode_randomness](RIndex r,
                                                           const std::vector<Block>& blocks) {
        const auto pts = decode_randomness(r);
        const std::size_t lanes = blocks[0].size();
        const std::size_t width = params.symbol_width();

        // (1) Line test.
        {
            std::vector<std::pair<Fe, std::vector<Fe>>> samples;
            for (Fe lambda = 0; lambda <= d; ++lambda)
                samples.emplace_back(lambda, flatten(blocks[lambda]));
            const auto g = interpolate_univariate(f, samples);
            if (!(eval_uni(f, g, d + 1) == flatten(blocks[d + 1]))) return false;
        }

        // (2) Derivative consistency along h2 at x2.
        {
            const std::size_t off = d + 2;
            std::vector<std::pair<Fe, std::vector<Fe>>> samples;
            for (Fe lambda = 0; lambda <= d; ++lambda)
                samples.emplace_back(lambda, flatten(blocks[off + lambda]));
            UniPolyTuple g = interpolate_univariate(f, samples);
            const auto expected = directional_derivatives(params, blocks[off], pts[3]);
            for (unsigned j = 1; j <= r_ord; ++j) {
                g = derive_uni(f, g);
                const auto at0 = eval_uni(f, g, 0);
                for (std::size_t lane = 0; lane < lanes; ++lane) {
                    // Value coordinate of lane `lane` sits at flat index lane*width.
                    if (at0[lane * width] != expected[j][lane]) return false;
                }
            }
        }

        // (3) Sum form: f̃(x,y) + f̃(0,0) = f̃(x,0) + f̃(y,0) on the value
        // coordinates. Each target value is read off a local interpolation
        // along its own direction, sampled at λ = 1..d+1.
        {
            std::vector<std::vector<Fe>> at(4);
            for (std::size_t t = 0; t < 4; ++t) {
                const std::size_t off = (2 * d + 3) + t * (d + 1);
                std::vector<std::pair<Fe, std::vector<Fe>>> samples;
                for (Fe lambda = 1; lambda <= d + 1; ++lambda)
                    samples.emplace_back(lambda, flatten(blocks[off + lambda - 1]));
                at[t] = eval_uni(f, interpolate_univariate(f, samples), 0);
            }
            for (std::size_t lane = 0; lane < lanes; ++lane) {
                const std::size_t value_idx = lane * width;
                const Fe lhs = f.add(at[0][value_idx], at[3][value_idx]);
                const Fe rhs = f.add(at[1][value_idx], at[2][value_idx]);
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    return spec;
}

DecoderSpec dc_decoder(const DcParams& params, const DecodeTarget& target) {
    const PrimeField f = params.field;
    const std::size_t M = params.message_len;
    if (target.i >= M || (target.kind == DecodeTarget::Psi && target.j >= M))
        throw InvalidTarget("decode target index out of range");

    // χ_i corrects q on the diagonal (u_i, u_i) = 2·a_i and halves; ψ_{i,j}
    // corrects q at (u_i, u_j) = a_i + a_j.
    std::vector<Fe> z = params.points[target.i];
    const auto& second = target.kind == DecodeTarget::Psi ? params.points[target.j]
                                                          : params.points[target.i];
    z.insert(z.end(), second.begin(), second.end());
    const Fe post_scale = target.kind == DecodeTarget::Chi ? f.inv(2 % f.modulus()) : 1;

    const std::uint64_t domain = params.block_len;
    const std::uint64_t pair_count = (f.modulus() - 1) * (f.modulus() - 2);
    const std::size_t vars = 2 * params.m;

    auto decode_randomness = [f, vars, domain, pair_count](RIndex r) {
        const std::vector<u128> rad{u128(domain), u128(pair_count)};
        const auto digits = mixed_radix_digits(r, rad);
        const auto h = point_at(digits[0], f.modulus(), vars);
        const auto [l1, l2] = distinct_nonzero_pair(digits[1], f.modulus());
        return std::tuple{h, l1, l2};
    };

    DecoderSpec spec;
    spec.randomness_size = u128(domain) * pair_count;
    spec.target = target;
    spec.queries = [f, z, decode_randomness](RIndex r) {
        const auto [h, l1, l2] = decode_randomness(r);
        const auto z1 = f.add_vec(z, f.scale_vec(l1, h));
        const auto z2 = f.add_vec(z, f.scale_vec(l2, h));
        return std::array<std::size_t, 2>{static_cast<std::size_t>(point_index(z1, f.modulus())),
                                          static_cast<std::size_t>(point_index(z2, f.modulus()))};
    };
    spec.reconstruct = [f, params, post_scale, decode_randomness](RIndex r, const Block& b1,
                                                                  const Block& b2) {
        const auto [h, l1, l2] = decode_randomness(r);
        auto rows = directional_derivatives(params, b1, h);
        const auto rows2 = directional_derivatives(params, b2, h);
        rows.insert(rows.end(), rows2.begin(), rows2.end());
        const auto g = solve_confluent_vandermonde(f, l1, l2, params.r, rows);
        std::vector<Fe> out(b1.size());
        for (std::size_t lane = 0; lane < b1.size(); ++lane)
            out[lane] = f.mul(g.coeffs[0][lane], post_scale);
        return out;
    };
    return spec;
}

} // namespace cg
