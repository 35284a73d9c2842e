/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/patterns.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace ramsey;

auto ramsey::build_fp(const Graph & f, const EdgePartition & parts) -> Graph
{
    std::set<Edge> seen;
    for (auto & part : parts) {
        if (part.empty())
            throw InvalidArgument("every part of the partition needs at least one edge");
        for (auto [u, v] : part) {
            Edge e{ std::min(u, v), std::max(u, v) };
            if (e.second >= f.size() || ! f.adjacent(e.first, e.second))
                throw InvalidArgument("partition edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of F");
            if (! seen.insert(e).second)
                throw InvalidArgument("partition parts overlap on edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
    }
    if (seen.size() != f.edge_count())
        throw InvalidArgument("partition does not cover every edge of F");

    const unsigned n = f.size();
    GraphBuilder b(n + parts.size());
    for (unsigned i = 0 ; i < parts.size() ; ++i)
        for (auto [u, v] : parts[i]) {
            b.add_edge(n + i, u);
            b.add_edge(n + i, v);
        }
    b.set_provenance("fp(" + f.provenance() + ")");
    return b.build();
}

namespace
{
    using Cells = std::vector<std::vector<Vertex>>;

    /// Splits cells by neighbour counts into every cell until stable. Cell
    /// order depends only on invariant data, so isomorphic inputs stay aligned.
    auto refine(const Graph & g, Cells cells) -> Cells
    {
        const unsigned n = g.size();
        while (true) {
            std::vector<unsigned> cell_of(n);
            for (unsigned c = 0 ; c < cells.size() ; ++c)
                for (auto v : cells[c])
                    cell_of[v] = c;

            Cells next;
            for (auto & cell : cells) {
                std::map<std::vector<unsigned>, std::vector<Vertex>> groups;
                for (auto v : cell) {
                    std::vector<unsigned> signature(cells.size(), 0);
                    for (auto w : g.neighbours(v))
                        ++signature[cell_of[w]];
                    groups[signature].push_back(v);
                }
                for (auto & [_, members] : groups)
                    next.push_back(std::move(members));
            }
            if (next.size() == cells.size())
                return next;
            cells = std::move(next);
        }
    }

    auto leaf_string(const Graph & g, const Cells & cells) -> std::string
    {
        const unsigned n = g.size();
        std::vector<Vertex> vertex_at(n);
        for (unsigned c = 0 ; c < n ; ++c)
            vertex_at[c] = cells[c][0];
        std::string result = std::to_string(n) + ":";
        for (unsigned i = 0 ; i < n ; ++i)
            for (unsigned j = i + 1 ; j < n ; ++j)
                result += g.adjacent(vertex_at[i], vertex_at[j]) ? '1' : '0';
        return result;
    }

    auto search_canonical(const Graph & g, Cells cells, std::optional<std::string> & best) -> void
    {
        cells = refine(g, std::move(cells));
        if (cells.size() == g.size()) {
            auto s = leaf_string(g, cells);
            if (! best || s < *best)
                best = std::move(s);
            return;
        }

        // Individualise within the first smallest non-trivial cell.
        unsigned target = cells.size();
        for (unsigned c = 0 ; c < cells.size() ; ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;

        for (auto v : cells[target]) {
            Cells next;
            for (unsigned c = 0 ; c < cells.size() ; ++c) {
                if (c != target) {
                    next.push_back(cells[c]);
                    continue;
                }
                next.push_back({ v });
                std::vector<Vertex> rest;
                for (auto w : cells[c])
                    if (w != v)
                        rest.push_back(w);
                next.push_back(std::move(rest));
            }
            search_canonical(g, std::move(next), best);
        }
    }
}

auto ramsey::canonical_form(const Graph & g) -> std::string
{
    if (g.size() == 0)
        return "0:";
    std::vector<Vertex> all(g.size());
    for (Vertex v = 0 ; v < g.size() ; ++v)
        all[v] = v;
    std::optional<std::string> best;
    search_canonical(g, { all }, best);
    return *best;
}

namespace
{
    /// Enumerates partitions of the edge list into blocks that each form a
    /// simple path, via restricted growth strings with linear-forest pruning.
    struct PathPartitionEnumerator
    {
        unsigned n;
        std::vector<Edge> edges;
        std::function<void (const EdgePartition &)> emit;

        EdgePartition blocks;
        std::vector<std::vector<unsigned>> block_degrees;

        auto connects(const std::vector<Edge> & block, Vertex a, Vertex b) const -> bool
        {
            // Reachability of b from a within the block's edges.
            std::vector<Vertex> stack{ a };
            std::set<Vertex> visited{ a };
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                if (x == b)
                    return true;
                for (auto [u, v] : block) {
                    Vertex y = u == x ? v : v == x ? u : n;
                    if (y != n && visited.insert(y).second)
                        stack.push_back(y);
                }
            }
            return false;
        }

        auto is_path(const std::vector<Edge> & block) const -> bool
        {
            std::set<Vertex> vertices;
            for (auto [u, v] : block) {
                vertices.insert(u);
                vertices.insert(v);
            }
            // Already a linear forest; connected iff |V| = |E| + 1.
            return vertices.size() == block.size() + 1;
        }

        auto recurse(unsigned i) -> void
        {
            if (i == edges.size()) {
                for (auto & b : blocks)
                    if (! is_path(b))
                        return;
                emit(blocks);
                return;
            }

            auto [u, v] = edges[i];
            for (unsigned b = 0 ; b <= blocks.size() ; ++b) {
                bool fresh = b == blocks.size();
                if (fresh) {
                    blocks.emplace_back();
                    block_degrees.emplace_back(n, 0);
                }
                else if (block_degrees[b][u] >= 2 || block_degrees[b][v] >= 2 || connects(blocks[b], u, v))
                    continue;

                blocks[b].push_back(edges[i]);
                ++block_degrees[b][u];
                ++block_degrees[b][v];
                recurse(i + 1);
                --block_degrees[b][u];
                --block_degrees[b][v];
                blocks[b].pop_back();

                if (fresh) {
                    blocks.pop_back();
                    block_degrees.pop_back();
                }
            }
        }
    };
}

auto ramsey::lf_family(const Graph & f) -> PatternFamily
{
    if (f.edge_count() > max_pattern_base_edges)
        throw SizeExceeded("L(F) enumeration supports at most " + std::to_string(max_pattern_base_edges) + " edges");

    PatternFamily family{ f, {}, 0 };
    std::set<std::string> seen;
    PathPartitionEnumerator e{ f.size(), f.edges(), [&] (const EdgePartition & parts) {
        ++family.partitions_enumerated;
        auto g = build_fp(f, parts);
        auto form = canonical_form(g);
        if (seen.insert(form).second)
            family.members.push_back(PatternMember{ std::move(g), parts, std::move(form) });
    } };
    if (f.edge_count() > 0)
        e.recurse(0);
    return family;
}

auto ramsey::is_lf_free(const Graph & host, const PatternFamily & family, std::uint64_t budget) -> LfFreeResult
{
    for (unsigned i = 0 ; i < family.members.size() ; ++i)
        if (auto map = subgraph_embed(family.members[i].graph, host, budget))
            return LfFreeResult{ false, i, std::move(*map) };
    return LfFreeResult{};
}

auto ramsey::is_lf_free(const Graph & host, const Graph & f, std::uint64_t budget) -> LfFreeResult
{
    return is_lf_free(host, lf_family(f), budget);
}

auto ramsey::cycle_with_pendants(const Graph & g) -> std::optional<unsigned>
{
    const unsigned n = g.size();
    std::vector<bool> core(n, true);
    for (Vertex v = 0 ; v < n ; ++v)
        if (g.degree(v) == 1)
            core[v] = false;

    unsigned core_size = 0;
    Vertex start = n;
    for (Vertex v = 0 ; v < n ; ++v) {
        if (! core[v])
            continue;
        unsigned core_degree = 0;
        for (auto w : g.neighbours(v))
            if (core[w])
                ++core_degree;
        if (core_degree != 2)
            return std::nullopt;
        ++core_size;
        start = v;
    }
    if (core_size < 3)
        return std::nullopt;

    // Pendants must hang directly off the cycle.
    for (Vertex v = 0 ; v < n ; ++v)
        if (! core[v] && ! core[g.neighbours(v).front()])
            return std::nullopt;

    // The core is 2-regular; it is one cycle iff a walk from start visits all of it.
    unsigned length = 0;
    Vertex previous = n, at = start;
    do {
        Vertex next = n;
        for (auto w : g.neighbours(at))
            if (core[w] && w != previous) {
                next = w;
                break;
            }
        previous = at;
        at = next;
        ++length;
    } while (at != start && length <= core_size);

    if (length != core_size)
        return std::nullopt;
    return length;
}
