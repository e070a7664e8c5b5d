#include "cliquegap/graph.hpp"

#include <algorithm>
#include <sstream>

namespace cg {

void PartitionedGraph::add_vertex(std::size_t part, VertexId id) {
    if (part >= parts_.size()) throw GraphFormatError("part index out of range");
    if (has_vertex(id)) throw GraphFormatError("duplicate vertex id " + std::to_string(id));
    if (id_to_dense_.size() <= id) id_to_dense_.resize(id + 1, -1);
    id_to_dense_[id] = static_cast<std::int64_t>(ids_.size());
    ids_.push_back(id);
    part_of_.push_back(part);
    parts_[part].push_back(id);
    for (auto& row : adj_) row.push_back(false);
    adj_.emplace_back(ids_.size(), false);
}

bool PartitionedGraph::has_vertex(VertexId id) const {
    return id < id_to_dense_.size() && id_to_dense_[id] >= 0;
}

std::size_t PartitionedGraph::dense_of(VertexId id) const {
    if (!has_vertex(id)) throw GraphFormatError("unknown vertex id " + std::to_string(id));
    return static_cast<std::size_t>(id_to_dense_[id]);
}

void PartitionedGraph::add_edge(VertexId a, VertexId b) {
    const std::size_t da = dense_of(a), db = dense_of(b);
    if (part_of_[da] == part_of_[db])
        throw FormatViolation("edge inside part " + std::to_string(part_of_[da]));
    if (adj_[da][db]) return;
    adj_[da][db] = adj_[db][da] = true;
    edges_.emplace_back(std::min(a, b), std::max(a, b));
}

bool PartitionedGraph::has_edge(VertexId a, VertexId b) const {
    return adj_[dense_of(a)][dense_of(b)];
}

std::size_t PartitionedGraph::part_of(VertexId id) const { return part_of_[dense_of(id)]; }

struct CliqueSearch {
    const PartitionedGraph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::uint64_t best = 0;
    std::vector<VertexId> best_witness;
    std::vector<std::size_t> part_order; // ascending size
    std::vector<VertexId> stack;

    explicit CliqueSearch(const PartitionedGraph& graph, std::uint64_t node_budget)
        : g(graph), budget(node_budget) {
        for (std::size_t i = 0; i < g.parts_.size(); ++i) part_order.push_back(i);
        std::stable_sort(part_order.begin(), part_order.end(), [&](std::size_t a, std::size_t b) {
            return g.parts_[a].size() < g.parts_[b].size();
        });
    }

    void consider_current() {
        if (stack.size() > best) {
            best = stack.size();
            best_witness = stack;
            std::sort(best_witness.begin(), best_witness.end());
        }
    }

    // candidates[i]: vertices of part_order[level+i] compatible with the stack.
    void expand(std::size_t level, const std::vector<std::vector<VertexId>>& candidates) {
        if (++nodes > budget)
            throw BudgetExceeded("clique search node budget exhausted", best);
        consider_current();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            // Bound: even taking one vertex from every remaining non-empty part
            // cannot beat the incumbent.
            std::size_t potential = stack.size();
            for (std::size_t j = i; j < candidates.size(); ++j)
                if (!candidates[j].empty()) ++potential;
            if (potential <= best) return;
            for (const VertexId v : candidates[i]) {
                std::vector<std::vector<VertexId>> next;
                next.reserve(candidates.size() - i - 1);
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    std::vector<VertexId> filtered;
                    for (const VertexId u : candidates[j])
                        if (g.has_edge(v, u)) filtered.push_back(u);
                    next.push_back(std::move(filtered));
                }
                stack.push_back(v);
                expand(level + 1, next);
                stack.pop_back();
            }
        }
    }
};

CliqueResult max_clique(const PartitionedGraph& g, std::uint64_t node_budget) {
    CliqueSearch search(g, node_budget);
    std::vector<std::vector<VertexId>> candidates;
    for (const std::size_t part : search.part_order) {
        auto vs = g.parts()[part];
        std::sort(vs.begin(), vs.end());
        candidates.push_back(std::move(vs));
    }
    search.expand(0, candidates);
    return {search.best, search.best_witness, search.nodes};
}

PartitionedGraph parse_graph(const std::string& text) {
    // Two passes so edge lines may precede the vertices they reference.
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    PartitionedGraph g;
    std::size_t declared_vertices = 0, declared_edges = 0;
    std::vector<std::tuple<VertexId, VertexId, std::size_t>> pending_edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            std::size_t k;
            if (!(ls >> kind >> k >> declared_vertices >> declared_edges) || kind != "kclique")
                throw ParseError("bad header", line_no);
            g = PartitionedGraph(k);
            have_header = true;
        } else if (tag == "v") {
            std::size_t part;
            VertexId id;
            if (!have_header || !(ls >> part >> id)) throw ParseError("bad vertex line", line_no);
            try {
                g.add_vertex(part, id);
            } catch (const GraphFormatError& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (tag == "e") {
            VertexId a, b;
            if (!have_header || !(ls >> a >> b)) throw ParseError("bad edge line", line_no);
            pending_edges.emplace_back(a, b, line_no);
        } else if (tag == "m") {
            std::string key;
            if (!have_header || !(ls >> key)) throw ParseError("bad metadata line", line_no);
            std::string value;
            std::getline(ls, value);
            if (!value.empty() && value[0] == ' ') value.erase(0, 1);
            g.metadata.emplace_back(key, value);
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
    for (const auto& [a, b, at_line] : pending_edges) {
        try {
            g.add_edge(a, b);
        } catch (const GraphFormatError& e) {
            throw ParseError(e.what(), at_line);
        }
    }
    if (g.vertex_count() != declared_vertices || g.edge_count() != declared_edges)
        throw ParseError("header counts do not match body", line_no);
    return g;
}

std::string serialize_graph(const PartitionedGraph& g) {
    std::ostringstream out;
    out << "p kclique " << g.part_count() << " " << g.vertex_count() << " " << g.edge_count()
        << "\n";
    for (std::size_t part = 0; part < g.part_count(); ++part) {
        auto vs = g.parts()[part];
        std::sort(vs.begin(), vs.end());
        for (const VertexId v : vs) out << "v " << part << " " << v << "\n";
    }
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) out << "e " << a << " " << b << "\n";
    for (const auto& [key, value] : g.metadata) out << "m " << key << " " << value << "\n";
    return out.str();
}

} // namespace cg
