#include "cliquegap/parallel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cg {

void ParallelWord::check_block(const Block& b) const {
    if (b.size() != lanes) throw ShapeError("block lane count mismatch");
    for (const auto& row : b)
        if (row.size() != symbol_width) throw ShapeError("block symbol width mismatch");
}

bool operator==(const ParallelWord& a, const ParallelWord& b) {
    return a.n == b.n && a.lanes == b.lanes && a.symbol_width == b.symbol_width &&
           a.symbols == b.symbols;
}

Rational relative_distance(const ParallelWord& a, const ParallelWord& b) {
    if (a.n != b.n || a.lanes != b.lanes || a.symbol_width != b.symbol_width)
        throw ShapeError("comparing words of different shape");
    std::uint64_t diff = 0;
    for (std::size_t i = 0; i < a.n; ++i)
        if (a.symbols[i] != b.symbols[i]) ++diff;
    return Rational(diff, a.n);
}

DecodeTarget DecodeTarget::psi(std::size_t i, std::size_t j) {
    if (i == j) throw InvalidTarget("pair-sum target needs two distinct indices");
    if (i > j) std::swap(i, j);
    return {Psi, i, j};
}

std::string DecodeTarget::str() const {
    if (kind == Chi) return "x" + std::to_string(i);
    return "s" + std::to_string(i) + "," + std::to_string(j);
}

ParallelWord parallel_encode(const BaseEncoder& base, const MessageTable& messages,
                             std::size_t message_len, std::size_t block_len,
                             std::size_t symbol_width) {
    if (messages.empty()) throw ShapeError("empty message table");
    for (const auto& lane : messages)
        if (lane.size() != message_len) throw ShapeError("ragged message table");

    ParallelWord w;
    w.n = block_len;
    w.lanes = messages.size();
    w.symbol_width = symbol_width;
    w.symbols.assign(block_len, Block(w.lanes, LaneSymbol(symbol_width, 0)));
    for (std::size_t lane = 0; lane < messages.size(); ++lane) {
        const auto codeword = base(messages[lane]);
        if (codeword.size() != block_len) throw ShapeError("base encoder block length mismatch");
        for (std::size_t pos = 0; pos < block_len; ++pos) {
            if (codeword[pos].size() != symbol_width)
                throw ShapeError("base encoder symbol width mismatch");
            w.symbols[pos][lane] = codeword[pos];
        }
    }
    return w;
}

namespace {

std::vector<Block> gather(const ParallelWord& w, const std::vector<std::size_t>& positions) {
    std::vector<Block> out;
    out.reserve(positions.size());
    for (const std::size_t pos : positions) {
        if (pos >= w.n) throw ShapeError("query position out of range");
        out.push_back(w.symbols[pos]);
    }
    return out;
}

} // namespace

Rejection estimate_rejection(const TesterSpec& tester, const ParallelWord& w,
                             const EstimateMode& mode) {
    Rejection out;
    if (mode.kind == EstimateMode::Exhaustive) {
        if (tester.randomness_size > mode.budget)
            throw BudgetExceeded("tester randomness space " + u128_str(tester.randomness_size) +
                                 " exceeds exhaustive budget " + std::to_string(mode.budget));
        const std::uint64_t total = static_cast<std::uint64_t>(tester.randomness_size);
        for (std::uint64_t r = 0; r < total; ++r) {
            if (!tester.accept(r, gather(w, tester.queries(r)))) ++out.rejecting;
        }
        out.total = total;
        return out;
    }
    if (mode.samples == 0) throw ParameterError("sampled mode needs a positive sample count");
    SplitMix64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
        const RIndex r = rng.below128(tester.randomness_size);
        if (!tester.accept(r, gather(w, tester.queries(r)))) ++out.rejecting;
    }
    out.total = mode.samples;
    out.sampled = true;
    return out;
}

std::vector<Fe> run_decode(const DecoderSpec& decoder, const ParallelWord& w, RIndex r) {
    const auto pos = decoder.queries(r);
    if (pos[0] >= w.n || pos[1] >= w.n) throw ShapeError("decoder query out of range");
    return decoder.reconstruct(r, w.symbols[pos[0]], w.symbols[pos[1]]);
}

SmoothnessReport check_smoothness(const DecoderSpec& decoder, std::size_t n,
                                  std::uint64_t budget) {
    if (decoder.randomness_size > budget)
        throw BudgetExceeded("decoder randomness space " + u128_str(decoder.randomness_size) +
                             " exceeds enumeration budget " + std::to_string(budget));
    SmoothnessReport report;
    report.counts.assign(n, 0);
    const std::uint64_t total = static_cast<std::uint64_t>(decoder.randomness_size);
    for (std::uint64_t r = 0; r < total; ++r) {
        const auto pos = decoder.queries(r);
        if (pos[0] >= n || pos[1] >= n) throw ShapeError("decoder query out of range");
        ++report.counts[pos[0]];
        ++report.counts[pos[1]];
    }
    if ((2 * total) % n != 0) {
        report.ok = false;
        report.expected = 0;
        return report;
    }
    report.expected = 2 * total / n;
    report.ok = std::all_of(report.counts.begin(), report.counts.end(),
                            [&](std::uint64_t c) { return c == report.expected; });
    return report;
}

namespace {

std::uint64_t covered(const TesterSpec& tester, const std::vector<RIndex>& subset) {
    std::set<std::size_t> positions;
    for (const RIndex r : subset) {
        for (const std::size_t p : tester.queries(r)) positions.insert(p);
    }
    return positions.size();
}

// C(n, s) clamped to the budget sentinel.
std::uint64_t subset_count(std::uint64_t n, std::uint64_t s, std::uint64_t cap) {
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        acc = acc * (n - s + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::uint64_t coverage_min(const TesterSpec& tester, std::uint64_t s, const EstimateMode& mode) {
    if (s == 0) return 0;
    std::uint64_t best = UINT64_MAX;
    if (mode.kind == EstimateMode::Exhaustive) {
        if (tester.randomness_size > mode.budget)
            throw BudgetExceeded("randomness space too large for subset enumeration");
        const std::uint64_t r_total = static_cast<std::uint64_t>(tester.randomness_size);
        if (s > r_total) throw ParameterError("subset size exceeds randomness space");
        if (subset_count(r_total, s, mode.budget) > mode.budget)
            throw BudgetExceeded("C(R_T, s) exceeds exhaustive budget");
        // Standard combination walk in lexicographic order.
        std::vector<RIndex> subset(s);
        for (std::uint64_t i = 0; i < s; ++i) subset[i] = i;
        while (true) {
            best = std::min(best, covered(tester, subset));
            std::size_t i = s;
            while (i-- > 0) {
                if (subset[i] != RIndex(r_total - s + i)) break;
                if (i == 0) return best;
            }
            ++subset[i];
            for (std::size_t j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    if (mode.samples == 0) throw ParameterError("sampled mode needs a positive sample count");
    SplitMix64 rng(mode.seed);
    for (std::uint64_t trial = 0; trial < mode.samples; ++trial) {
        std::set<RIndex> chosen;
        while (chosen.size() < s) chosen.insert(rng.below128(tester.randomness_size));
        best = std::min(best, covered(tester, std::vector<RIndex>(chosen.begin(), chosen.end())));
    }
    return best;
}

ParallelWord corrupt(const ParallelWord& w, const std::map<std::size_t, Block>& edits) {
    ParallelWord out = w;
    for (const auto& [pos, block] : edits) {
        if (pos >= w.n) throw ShapeError("edit position out of range");
        w.check_block(block);
        out.symbols[pos] = block;
    }
    return out;
}

std::string serialize_word(const ParallelWord& w) {
    std::string out = "pword " + std::to_string(w.n) + " " + std::to_string(w.lanes) + " " +
                      std::to_string(w.symbol_width) + "\n";
    for (std::size_t pos = 0; pos < w.n; ++pos) {
        out += "s " + std::to_string(pos);
        for (std::size_t lane = 0; lane < w.lanes; ++lane) {
            out += lane == 0 ? " " : "|";
            const auto& row = w.symbols[pos][lane];
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + std::to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

ParallelWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    ParallelWord w;
    bool have_header = false;
    std::size_t filled = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "pword") {
            if (!(ls >> w.n >> w.lanes >> w.symbol_width)) throw ParseError("bad header", line_no);
            w.symbols.assign(w.n, Block(w.lanes, LaneSymbol(w.symbol_width, 0)));
            have_header = true;
        } else if (tag == "s") {
            std::size_t pos;
            std::string body;
            if (!have_header || !(ls >> pos >> body) || pos >= w.n)
                throw ParseError("bad symbol line", line_no);
            Block block;
            std::istringstream lanes(body);
            std::string lane_text;
            while (std::getline(lanes, lane_text, '|')) {
                LaneSymbol row;
                std::istringstream cells(lane_text);
                std::string cell;
                while (std::getline(cells, cell, ',')) {
                    try {
                        row.push_back(std::stoull(cell));
                    } catch (const std::exception&) {
                        throw ParseError("bad residue '" + cell + "'", line_no);
                    }
                }
                block.push_back(std::move(row));
            }
            try {
                w.check_block(block);
            } catch (const ShapeError& e) {
                throw ParseError(e.what(), line_no);
            }
            w.symbols[pos] = std::move(block);
            ++filled;
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing header", 1);
    if (filled != w.n) throw ParseError("symbol count does not match header", line_no);
    return w;
}

} // namespace cg
