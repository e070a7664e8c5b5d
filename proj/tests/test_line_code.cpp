#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliquegap/line_code.hpp"
#include "test_util.hpp"

using namespace cg;
using cg::testutil::poly_from_terms;
using cg::testutil::random_poly;

namespace {

std::vector<Fe> truth_for(const PrimeField& f, const MessageTable& msg, const DecodeTarget& t) {
    std::vector<Fe> out(msg.size());
    for (std::size_t lane = 0; lane < msg.size(); ++lane)
        out[lane] = t.kind == DecodeTarget::Chi ? msg[lane][t.i]
                                                : f.add(msg[lane][t.i], msg[lane][t.j]);
    return out;
}

std::vector<DecodeTarget> all_targets(std::size_t message_len) {
    std::vector<DecodeTarget> out;
    for (std::size_t i = 0; i < message_len; ++i) out.push_back(DecodeTarget::chi(i));
    for (std::size_t i = 0; i < message_len; ++i)
        for (std::size_t j = i + 1; j < message_len; ++j) out.push_back(DecodeTarget::psi(i, j));
    return out;
}

} // namespace

TEST_CASE("line domain enumeration: singletons first, then canonical lines") {
    const LineDomain dom(PrimeField(7), 2);
    CHECK(dom.point_count() == 49);
    CHECK(dom.full_line_count() == 56); // 49·48 / (7·6)
    CHECK(dom.size() == 105);
    for (std::size_t i = 0; i < 49; ++i) CHECK(dom.line_at(i).singleton());
    for (std::size_t i = 49; i < 105; ++i) {
        CHECK_FALSE(dom.line_at(i).singleton());
        CHECK(dom.index_of(dom.line_at(i)) == i);
    }
    // Every point lies on (49-1)/(7-1) = 8 full lines.
    for (std::uint64_t pt = 0; pt < 49; ++pt)
        CHECK(dom.full_lines_through(pt).size() == 8);

    const LineDomain dom13(PrimeField(13), 2);
    CHECK(dom13.size() == 169 + 182);
}

TEST_CASE("strict field floor is enforced, tiny mode waives it") {
    CHECK_THROWS_AS(make_lc_params(PrimeField(7), 1, 1, FieldFloor::Strict), ParameterError);
    const auto params = make_lc_params(PrimeField(7), 1, 1, FieldFloor::Tiny);
    CHECK(params.base.d == 3);
    CHECK(params.symbol_width() == 3 * 4);
}

TEST_CASE("encoder stores per-line restrictions of every derivative") {
    const auto params = make_lc_params(PrimeField(7), 1, 1, FieldFloor::Tiny);
    const PrimeField& f = params.base.field;

    const auto zero = lc_encode(params, {MessageTable::value_type(4, 0)});
    for (const auto& b : zero.symbols) CHECK(b[0] == LaneSymbol(12, 0));

    // p(x) = x gives q(x,y) = x+y; on the line (0,0)+λ(1,0) the value slice
    // is λ and both first partials are the constant 1.
    const auto w = lc_encode(params, {{0, 1, 2, 3}});
    const Line axis{{0, 0}, {1, 0}};
    const auto idx = params.domain.index_of(axis);
    const LaneSymbol& sym = w.symbols[idx][0];
    CHECK(LaneSymbol(sym.begin(), sym.begin() + 4) == LaneSymbol{0, 1, 0, 0});
    CHECK(LaneSymbol(sym.begin() + 4, sym.begin() + 8) == LaneSymbol{1, 0, 0, 0});
    CHECK(LaneSymbol(sym.begin() + 8, sym.end()) == LaneSymbol{1, 0, 0, 0});

    // Singleton symbols hold constant restrictions.
    const auto z = std::vector<Fe>{3, 5};
    const auto sidx = params.domain.singleton_index(z);
    const LaneSymbol& ssym = w.symbols[sidx][0];
    CHECK(LaneSymbol(ssym.begin(), ssym.begin() + 4) == LaneSymbol{f.add(3, 5), 0, 0, 0});
}

TEST_CASE("line/point consistency of the encoder, exhaustively") {
    const auto params = make_lc_params(PrimeField(7), 1, 1, FieldFloor::Tiny);
    SplitMix64 rng(12);
    const MessageTable msg{{rng.below(7), rng.below(7), rng.below(7), rng.below(7)}};
    const auto w = lc_encode(params, msg);
    for (std::size_t li = params.domain.point_count(); li < params.domain.size(); ++li) {
        const Line& line = params.domain.line_at(li);
        for (Fe lambda = 0; lambda < 7; ++lambda) {
            const auto pt = params.base.field.add_vec(
                line.base, params.base.field.scale_vec(lambda, line.dir));
            const Line ptline{pt, {0, 0}};
            const auto from_line = symbol_values_at(params, w.symbols[li], line, pt);
            const auto from_point = symbol_values_at(
                params, w.symbols[params.domain.singleton_index(pt)], ptline, pt);
            CHECK(from_line == from_point);
        }
    }
}

TEST_CASE("line vs point step at degree 1 over F_13") {
    const auto params = make_lc_params(PrimeField(13), 1, 0, FieldFloor::Tiny);
    const PrimeField& f = params.base.field;
    SplitMix64 rng(3);
    const auto poly = random_poly(f, 2, 1, 1, rng);
    const auto clean = lc_word_from_poly(params, poly);

    // Clean words pass for every (x, h), including the h = 0 degenerate draw.
    for (std::uint64_t xi = 0; xi < 169; xi += 7) {
        for (std::uint64_t hi = 0; hi < 169; hi += 5) {
            CHECK(line_vs_point_step(params, clean, point_at(xi, 13, 2), point_at(hi, 13, 2)));
        }
    }

    // Corrupting one singleton makes the step fail exactly on x = x0 with a
    // clean (h != 0) line symbol.
    const auto x0 = std::vector<Fe>{4, 9};
    const auto x0_idx = params.domain.singleton_index(x0);
    auto bad_block = clean.symbols[x0_idx];
    bad_block[0][0] = f.add(bad_block[0][0], 1);
    const auto corrupted = corrupt(clean, {{x0_idx, bad_block}});
    std::uint64_t rejected = 0;
    for (std::uint64_t xi = 0; xi < 169; ++xi) {
        for (std::uint64_t hi = 0; hi < 169; ++hi) {
            const auto x = point_at(xi, 13, 2);
            const auto h = point_at(hi, 13, 2);
            const bool pass = line_vs_point_step(params, corrupted, x, h);
            const bool expect_fail = (xi == x0_idx) && hi != 0;
            CHECK(pass == !expect_fail);
            if (!pass) ++rejected;
        }
    }
    CHECK(rejected == 168); // (1/p^{2m}) · clean-line fraction of the draws
}

TEST_CASE("tester: clean codewords pass, broken words are caught") {
    const auto params = make_lc_params(PrimeField(7), 1, 1, FieldFloor::Tiny);
    const auto tester = lc_tester(params);
    CHECK(tester.query_count == 11);

    SplitMix64 rng(21);
    const MessageTable msg{{rng.below(7), rng.below(7), rng.below(7), rng.below(7)},
                           {rng.below(7), rng.below(7), rng.below(7), rng.below(7)}};
    const auto clean = lc_encode(params, msg);
    CHECK(estimate_rejection(tester, clean, EstimateMode::sampled(2000, 71)).rejecting == 0);

    // Zeroing the derivative slices leaves values consistent but breaks the
    // consistency step on most directions.
    auto stripped = clean;
    for (auto& block : stripped.symbols)
        for (auto& lane : block)
            for (std::size_t col = 4; col < lane.size(); ++col) lane[col] = 0;
    const auto rej = estimate_rejection(tester, stripped, EstimateMode::sampled(3000, 72));
    CHECK(Rational(rej.rejecting, rej.total) >= Rational(5, 14)); // 1 - 3d/(2p)
}

TEST_CASE("tester: a line symbol contradicting its singletons is caught") {
    const auto params = make_lc_params(PrimeField(13), 1, 0, FieldFloor::Tiny);
    const PrimeField& f = params.base.field;
    const auto zero_poly = PolyTuple::zero(1, 2, 1);
    auto word = lc_word_from_poly(params, zero_poly);

    // One full line claims g(λ) = λ while every singleton claims 0.
    const std::size_t li = params.domain.point_count() + 17;
    const Line& line = params.domain.line_at(li);
    auto block = word.symbols[li];
    block[0][0] = 0;
    block[0][1] = 1;
    word = corrupt(word, {{li, block}});

    std::uint64_t rejected = 0;
    for (std::uint64_t xi = 0; xi < 169; ++xi) {
        for (std::uint64_t hi = 0; hi < 169; ++hi) {
            const auto x = point_at(xi, 13, 2);
            const auto h = point_at(hi, 13, 2);
            if (!line_vs_point_step(params, word, x, h)) ++rejected;
        }
    }
    // The line has 13 points and 12 generating directions each; the claim
    // differs from 0 at 12 of its points.
    std::uint64_t on_line_failures = 0;
    for (Fe lambda = 0; lambda < 13; ++lambda) {
        const auto pt = f.add_vec(line.base, f.scale_vec(lambda, line.dir));
        if (lambda != 0) (void)pt, ++on_line_failures;
    }
    CHECK(on_line_failures == 12);
    CHECK(rejected == 12 * 12);
}

TEST_CASE("decoder: exact on clean words, exactly smooth, robust to corruption") {
    const auto params = make_lc_params(PrimeField(7), 1, 1, FieldFloor::Tiny);
    const PrimeField& f = params.base.field;
    const MessageTable msg{{1, 4, 2, 0}};
    const auto clean = lc_encode(params, msg);

    const auto chi0 = lc_decoder(params, DecodeTarget::chi(0));
    CHECK(chi0.randomness_size == u128(49) * 30 * 15 * 15);

    // Exact reconstruction across a stride of the randomness space, every
    // target.
    for (const auto& target : all_targets(4)) {
        const auto dec = lc_decoder(params, target);
        const auto truth = truth_for(f, msg, target);
        for (RIndex r = 0; r < dec.randomness_size; r += 301)
            CHECK(run_decode(dec, clean, r) == truth);
    }

    // Exact equal counts over every line index, singletons included.
    const auto report = check_smoothness(chi0, params.domain.size(), 1'000'000);
    CHECK(report.ok);
    CHECK(report.expected == 2 * 49 * 30 * 15 * 15 / 105);

    // δ = 0.1 corruption: measured success stays above 1 - 2δ - 0.02.
    SplitMix64 rng(55);
    const auto targets = all_targets(4);
    std::uint64_t good = 0;
    const std::uint64_t trials = 2000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::map<std::size_t, Block> edits;
        while (edits.size() < 10) { // ≈ 0.1 · 105
            const std::size_t pos = rng.below(params.domain.size());
            Block b(1, LaneSymbol(params.symbol_width()));
            for (auto& c : b[0]) c = rng.below(7);
            edits[pos] = std::move(b);
        }
        const auto word = corrupt(clean, edits);
        const auto& target = targets[rng.below(targets.size())];
        const auto dec = lc_decoder(params, target);
        if (run_decode(dec, word, rng.below128(dec.randomness_size)) == truth_for(f, msg, target))
            ++good;
    }
    CHECK(Rational(good, trials) >= Rational(78, 100));
}

TEST_CASE("plurality correction: fixed point on clean words, repairs one point") {
    const auto params = make_lc_params(PrimeField(13), 1, 0, FieldFloor::Tiny);
    const PrimeField& f = params.base.field;
    SplitMix64 rng(8);

    // All-zero word corrects to all zero.
    const auto zero_word = lc_word_from_poly(params, PolyTuple::zero(1, 2, 1));
    for (const auto& table : majority_correct(params, zero_word))
        CHECK(table == Block{{0}});

    for (int trial = 0; trial < 3; ++trial) {
        const auto poly = random_poly(f, 2, 1, 1, rng);
        const auto clean = lc_word_from_poly(params, poly);
        const auto fixed = majority_correct(params, clean);
        for (std::uint64_t xi = 0; xi < 169; ++xi)
            CHECK(fixed[xi][0][0] == eval_poly(f, poly, point_at(xi, 13, 2))[0]);

        // Corrupt one singleton; the plurality over directions repairs it.
        const std::size_t x0 = 37;
        auto block = clean.symbols[x0];
        block[0][0] = f.add(block[0][0], 5);
        const auto corrupted = corrupt(clean, {{x0, block}});
        const auto repaired = majority_correct(params, corrupted);
        for (std::uint64_t xi = 0; xi < 169; ++xi)
            CHECK(repaired[xi][0][0] == eval_poly(f, poly, point_at(xi, 13, 2))[0]);
    }
}
