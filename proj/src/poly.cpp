#include "cliquegap/poly.hpp"

#include <algorithm>

namespace cg {

unsigned exponent_order(const ExponentVec& v) {
    unsigned s = 0;
    for (const unsigned e : v) s += e;
    return s;
}

namespace {

void compositions(std::size_t m, unsigned total, ExponentVec& prefix,
                  std::vector<ExponentVec>& out) {
    if (prefix.size() + 1 == m) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = 0; e <= total; ++e) {
        prefix.push_back(e);
        compositions(m, total - e, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<ExponentVec> exponents_exact(std::size_t m, unsigned j) {
    if (m == 0) return j == 0 ? std::vector<ExponentVec>{{}} : std::vector<ExponentVec>{};
    std::vector<ExponentVec> out;
    ExponentVec prefix;
    compositions(m, j, prefix, out);
    return out;
}

std::vector<ExponentVec> exponents_up_to(std::size_t m, unsigned d) {
    std::vector<ExponentVec> out;
    for (unsigned j = 0; j <= d; ++j) {
        auto grade = exponents_exact(m, j);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc / i * (n - k + i) + acc % i * (n - k + i) / i;
    }
    return acc;
}

Fe multinomial_mod(const PrimeField& f, const ExponentVec& v) {
    const unsigned j = exponent_order(v);
    if (j >= f.modulus())
        throw ParameterError("derivative order must stay below the field characteristic");
    Fe denom = 1 % f.modulus();
    for (const unsigned e : v) denom = f.mul(denom, f.factorial(e));
    return f.mul(f.factorial(j), f.inv(denom));
}

Fe monomial_eval(const PrimeField& f, std::span<const Fe> x, const ExponentVec& v) {
    if (x.size() != v.size()) throw DimensionError("point/exponent arity mismatch");
    Fe acc = 1 % f.modulus();
    for (std::size_t i = 0; i < v.size(); ++i) acc = f.mul(acc, f.pow(x[i], v[i]));
    return acc;
}

PolyTuple PolyTuple::zero(std::size_t lanes, std::size_t vars, unsigned degree) {
    return PolyTuple{lanes, vars, degree, {}};
}

void PolyTuple::add_term(const PrimeField& f, const ExponentVec& v, std::size_t lane, Fe c) {
    if (v.size() != vars) throw DimensionError("exponent arity mismatch");
    if (c == 0) return;
    auto it = coeffs.find(v);
    if (it == coeffs.end()) it = coeffs.emplace(v, std::vector<Fe>(lanes, 0)).first;
    it->second[lane] = f.add(it->second[lane], c);
}

void PolyTuple::drop_zero_terms() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        const bool zero = std::all_of(it->second.begin(), it->second.end(),
                                      [](Fe c) { return c == 0; });
        it = zero ? coeffs.erase(it) : std::next(it);
    }
}

bool operator==(const PolyTuple& a, const PolyTuple& b) {
    if (a.lanes != b.lanes || a.vars != b.vars) return false;
    PolyTuple x = a, y = b;
    x.drop_zero_terms();
    y.drop_zero_terms();
    return x.coeffs == y.coeffs;
}

std::vector<Fe> eval_poly(const PrimeField& f, const PolyTuple& p, std::span<const Fe> x) {
    if (x.size() != p.vars) throw DimensionError("evaluation point arity mismatch");
    std::vector<Fe> out(p.lanes, 0);
    for (const auto& [v, c] : p.coeffs) {
        const Fe mono = monomial_eval(f, x, v);
        for (std::size_t lane = 0; lane < p.lanes; ++lane)
            out[lane] = f.add(out[lane], f.mul(c[lane], mono));
    }
    return out;
}

PolyTuple partial_derivative(const PrimeField& f, const PolyTuple& p, const ExponentVec& v) {
    if (v.size() != p.vars) throw DimensionError("derivative exponent arity mismatch");
    const unsigned order = exponent_order(v);
    if (order >= f.modulus())
        throw ParameterError("derivative order must stay below the field characteristic");
    PolyTuple out = PolyTuple::zero(p.lanes, p.vars, order > p.degree ? 0 : p.degree - order);
    for (const auto& [e, c] : p.coeffs) {
        // Falling-factorial factor Π_i e_i (e_i-1) ... (e_i-v_i+1).
        Fe factor = 1 % f.modulus();
        ExponentVec shifted(e.size());
        bool vanished = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < v[i]) {
                vanished = true;
                break;
            }
            shifted[i] = e[i] - v[i];
            for (unsigned step = 0; step < v[i]; ++step)
                factor = f.mul(factor, (e[i] - step) % f.modulus());
        }
        if (vanished || factor == 0) continue;
        for (std::size_t lane = 0; lane < p.lanes; ++lane)
            out.add_term(f, shifted, lane, f.mul(c[lane], factor));
    }
    return out;
}

UniPolyTuple UniPolyTuple::zero(std::size_t lanes, unsigned degree) {
    UniPolyTuple g;
    g.lanes = lanes;
    g.coeffs.assign(degree + 1, std::vector<Fe>(lanes, 0));
    return g;
}

bool operator==(const UniPolyTuple& a, const UniPolyTuple& b) {
    return a.lanes == b.lanes && a.coeffs == b.coeffs;
}

std::vector<Fe> eval_uni(const PrimeField& f, const UniPolyTuple& g, Fe lambda) {
    std::vector<Fe> out(g.lanes, 0);
    for (std::size_t i = g.coeffs.size(); i-- > 0;) {
        for (std::size_t lane = 0; lane < g.lanes; ++lane)
            out[lane] = f.add(f.mul(out[lane], lambda), g.coeffs[i][lane]);
    }
    return out;
}

UniPolyTuple derive_uni(const PrimeField& f, const UniPolyTuple& g) {
    UniPolyTuple out = UniPolyTuple::zero(g.lanes, g.degree());
    for (std::size_t i = 1; i < g.coeffs.size(); ++i) {
        for (std::size_t lane = 0; lane < g.lanes; ++lane)
            out.coeffs[i - 1][lane] = f.mul(g.coeffs[i][lane], i % f.modulus());
    }
    return out;
}

UniPolyTuple compose_affine(const PrimeField& f, const UniPolyTuple& g, Fe alpha, Fe beta) {
    // Horner: out = (((c_d)·s + c_{d-1})·s + ...) with s = α + βλ.
    UniPolyTuple out = UniPolyTuple::zero(g.lanes, g.degree());
    for (std::size_t i = g.coeffs.size(); i-- > 0;) {
        std::vector<std::vector<Fe>> next(out.coeffs.size(), std::vector<Fe>(g.lanes, 0));
        for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
            for (std::size_t lane = 0; lane < g.lanes; ++lane) {
                const Fe c = out.coeffs[k][lane];
                if (c == 0) continue;
                next[k][lane] = f.add(next[k][lane], f.mul(alpha, c));
                if (k + 1 < next.size()) next[k + 1][lane] = f.add(next[k + 1][lane], f.mul(beta, c));
            }
        }
        for (std::size_t lane = 0; lane < g.lanes; ++lane)
            next[0][lane] = f.add(next[0][lane], g.coeffs[i][lane]);
        out.coeffs = std::move(next);
    }
    return out;
}

UniPolyTuple restrict_to_line(const PrimeField& f, const PolyTuple& p, std::span<const Fe> base,
                              std::span<const Fe> dir) {
    if (base.size() != p.vars || dir.size() != p.vars)
        throw DimensionError("line arity mismatch");
    UniPolyTuple out = UniPolyTuple::zero(p.lanes, p.degree);
    for (const auto& [v, c] : p.coeffs) {
        // Expand Π_i (base_i + dir_i·λ)^{v_i} as a scalar polynomial in λ.
        std::vector<Fe> w{1 % f.modulus()};
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (unsigned rep = 0; rep < v[i]; ++rep) {
                std::vector<Fe> next(w.size() + 1, 0);
                for (std::size_t k = 0; k < w.size(); ++k) {
                    next[k] = f.add(next[k], f.mul(w[k], base[i]));
                    next[k + 1] = f.add(next[k + 1], f.mul(w[k], dir[i]));
                }
                w = std::move(next);
            }
        }
        for (std::size_t k = 0; k < w.size() && k < out.coeffs.size(); ++k) {
            if (w[k] == 0) continue;
            for (std::size_t lane = 0; lane < p.lanes; ++lane)
                out.coeffs[k][lane] = f.add(out.coeffs[k][lane], f.mul(w[k], c[lane]));
        }
    }
    return out;
}

UniPolyTuple interpolate_univariate(const PrimeField& f,
                                    const std::vector<std::pair<Fe, std::vector<Fe>>>& samples) {
    if (samples.empty()) throw ParameterError("interpolation needs at least one sample");
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw DuplicateNode("repeated interpolation node");
    const std::size_t lanes = samples[0].second.size();
    UniPolyTuple out = UniPolyTuple::zero(lanes, static_cast<unsigned>(n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (samples[i].second.size() != lanes) throw DimensionError("ragged sample values");
        // Lagrange basis polynomial for node i, times the sample value.
        std::vector<Fe> basis{1 % f.modulus()};
        Fe denom = 1 % f.modulus();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Fe> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] = f.add(next[k], f.mul(basis[k], f.neg(samples[j].first)));
                next[k + 1] = f.add(next[k + 1], basis[k]);
            }
            basis = std::move(next);
            denom = f.mul(denom, f.sub(samples[i].first, samples[j].first));
        }
        const Fe scale = f.inv(denom);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Fe bk = f.mul(basis[k], scale);
            if (bk == 0) continue;
            for (std::size_t lane = 0; lane < lanes; ++lane)
                out.coeffs[k][lane] = f.add(out.coeffs[k][lane], f.mul(bk, samples[i].second[lane]));
        }
    }
    return out;
}

namespace {

// Row of the Hermite system: d^j/dλ^j λ^c evaluated at node = fall(c,j)·node^{c-j}.
Matrix hermite_matrix(const PrimeField& f, Fe l1, Fe l2, unsigned r) {
    const unsigned d = 2 * r + 1;
    Matrix a(d + 1, std::vector<Fe>(d + 1, 0));
    for (unsigned half = 0; half < 2; ++half) {
        const Fe node = half == 0 ? l1 : l2;
        for (unsigned j = 0; j <= r; ++j) {
            for (unsigned c = j; c <= d; ++c) {
                Fe fall = 1 % f.modulus();
                for (unsigned step = 0; step < j; ++step)
                    fall = f.mul(fall, (c - step) % f.modulus());
                a[half * (r + 1) + j][c] = f.mul(fall, f.pow(node, c - j));
            }
        }
    }
    return a;
}

} // namespace

UniPolyTuple solve_confluent_vandermonde(const PrimeField& f, Fe l1, Fe l2, unsigned r,
                                         const std::vector<std::vector<Fe>>& vals) {
    if (l1 == l2) throw SingularSystem("coincident evaluation nodes");
    if (r >= f.modulus()) throw ParameterError("derivative order must stay below p");
    const unsigned d = 2 * r + 1;
    if (vals.size() != 2u * (r + 1)) throw DimensionError("expected 2(r+1) value rows");
    const std::size_t lanes = vals[0].size();
    Matrix b(d + 1);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i].size() != lanes) throw DimensionError("ragged value rows");
        b[i] = vals[i];
    }
    auto elim = gauss_solve(f, hermite_matrix(f, l1, l2, r), std::move(b));
    UniPolyTuple out = UniPolyTuple::zero(lanes, d);
    for (unsigned c = 0; c <= d; ++c) out.coeffs[c] = elim.solution[c];
    return out;
}

Fe confluent_vandermonde_det(const PrimeField& f, Fe l1, Fe l2, unsigned r) {
    return gauss_det(f, hermite_matrix(f, l1, l2, r));
}

bool operator==(const Line& a, const Line& b) { return a.base == b.base && a.dir == b.dir; }

bool operator<(const Line& a, const Line& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.dir < b.dir;
}

Line canonical_line(const PrimeField& f, std::span<const Fe> x, std::span<const Fe> h) {
    if (x.size() != h.size()) throw DimensionError("line arity mismatch");
    Line out;
    out.base.assign(x.begin(), x.end());
    out.dir.assign(h.size(), 0);
    bool is_singleton = true;
    for (const Fe c : h) {
        if (c != 0) {
            is_singleton = false;
            break;
        }
    }
    if (is_singleton) return out;
    // Smallest point of {x + λh}, then smallest nonzero multiple of h.
    for (Fe lambda = 1; lambda < f.modulus(); ++lambda) {
        std::vector<Fe> pt(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) pt[i] = f.add(x[i], f.mul(lambda, h[i]));
        if (pt < out.base) out.base = std::move(pt);
    }
    out.dir.assign(h.begin(), h.end());
    for (Fe c = 2; c < f.modulus(); ++c) {
        std::vector<Fe> cand(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) cand[i] = f.mul(c, h[i]);
        if (cand < out.dir) out.dir = std::move(cand);
    }
    return out;
}

} // namespace cg
