/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GRAPH_HH
#define RAMSEY_GRAPH_HH 1

#include <ramsey/bitset.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey
{
    using Vertex = unsigned;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0 .. n-1, stored as symmetric
    /// bit-matrix rows. Immutable once built; use GraphBuilder to make one.
    class Graph
    {
        public:
            Graph() = default;

            auto size() const -> unsigned
            {
                return _rows.size();
            }

            auto edge_count() const -> std::uint64_t
            {
                return _edge_count;
            }

            auto adjacent(Vertex a, Vertex b) const -> bool
            {
                return _rows[a].test(b);
            }

            auto neighbourhood(Vertex v) const -> const Bitset &
            {
                return _rows[v];
            }

            auto degree(Vertex v) const -> unsigned
            {
                return _degrees[v];
            }

            auto neighbours(Vertex v) const -> std::vector<Vertex>
            {
                return _rows[v].to_vector();
            }

            /// Edges (u, v) with u < v in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            auto provenance() const -> const std::string &
            {
                return _provenance;
            }

            auto min_degree() const -> unsigned;
            auto max_degree() const -> unsigned;
            auto is_regular() const -> bool;

            /// degree -> number of vertices with that degree
            auto degree_profile() const -> std::map<unsigned, unsigned>;

            /// The same graph with a different provenance string.
            auto with_provenance(std::string) const -> Graph;

            /// Adjacency-preserving equality; labels and provenance are ignored.
            auto same_edges(const Graph & other) const -> bool
            {
                return _rows == other._rows;
            }

        private:
            friend class GraphBuilder;

            std::vector<Bitset> _rows;
            std::vector<unsigned> _degrees;
            std::uint64_t _edge_count = 0;
            std::vector<std::string> _labels;
            std::string _provenance;
    };

    class GraphBuilder
    {
        public:
            explicit GraphBuilder(unsigned size);

            /// Adds {a, b}; repeated edges are idempotent. Throws on loops or
            /// out-of-range endpoints.
            auto add_edge(Vertex a, Vertex b) -> GraphBuilder &;

            auto has_edge(Vertex a, Vertex b) const -> bool
            {
                return _rows[a].test(b);
            }

            auto set_labels(std::vector<std::string>) -> GraphBuilder &;
            auto set_provenance(std::string) -> GraphBuilder &;

            auto build() const -> Graph;

        private:
            std::vector<Bitset> _rows;
            std::vector<std::string> _labels;
            std::string _provenance;
    };

    /// FNV-1a 64 over the edge list as text: one "u v\n" line per edge,
    /// 1-indexed, u < v, in lexicographic order.
    auto edge_list_hash(const Graph &) -> std::uint64_t;

    /// Convenience: graph from an edge list.
    auto make_graph(unsigned size, const std::vector<Edge> & edges, std::string provenance = "") -> Graph;

    /// Bipartite graph with parts U (size m) and V (size n), stored as a
    /// biadjacency matrix with rows indexed by U.
    class BipartiteGraph
    {
        public:
            BipartiteGraph(unsigned left_size, unsigned right_size, const std::vector<Edge> & edges,
                    std::string provenance = "");

            auto left_size() const -> unsigned
            {
                return _left.size();
            }

            auto right_size() const -> unsigned
            {
                return _right.size();
            }

            /// N(u) as a subset of V.
            auto left_neighbourhood(Vertex u) const -> const Bitset &
            {
                return _left[u];
            }

            /// N(v) as a subset of U.
            auto right_neighbourhood(Vertex v) const -> const Bitset &
            {
                return _right[v];
            }

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return _left[u].test(v);
            }

            auto left_degree(Vertex u) const -> unsigned
            {
                return _left_degrees[u];
            }

            auto right_degree(Vertex v) const -> unsigned
            {
                return _right_degrees[v];
            }

            auto min_right_degree() const -> unsigned
            {
                return _min_right_degree;
            }

            auto edge_count() const -> std::uint64_t
            {
                return _edge_count;
            }

            auto provenance() const -> const std::string &
            {
                return _provenance;
            }

            /// (d_U, d_V) if every U vertex has degree d_U and every V vertex d_V.
            auto biregularity() const -> std::optional<std::pair<unsigned, unsigned>>;

            /// The same structure as a plain graph: U is 0 .. m-1, V is m .. m+n-1.
            auto to_graph() const -> Graph;

        private:
            std::vector<Bitset> _left;
            std::vector<Bitset> _right;
            std::vector<unsigned> _left_degrees;
            std::vector<unsigned> _right_degrees;
            unsigned _min_right_degree = 0;
            std::uint64_t _edge_count = 0;
            std::string _provenance;
    };

    /// Recovers the bipartite view of a graph whose first left_size vertices
    /// form U and the rest V. Throws if any edge lies inside a part.
    auto as_bipartite(const Graph &, unsigned left_size) -> BipartiteGraph;
}

#endif
