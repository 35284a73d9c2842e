/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/graph.hh>
#include <ramsey/errors.hh>
#include <ramsey/hash.hh>

#include <algorithm>
#include <set>

using namespace ramsey;

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex u = 0 ; u < size() ; ++u)
        for (Vertex v = _rows[u].next(u) ; v < size() ; v = _rows[u].next(v))
            result.emplace_back(u, v);
    return result;
}

auto Graph::min_degree() const -> unsigned
{
    return _degrees.empty() ? 0 : *std::min_element(_degrees.begin(), _degrees.end());
}

auto Graph::max_degree() const -> unsigned
{
    return _degrees.empty() ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
}

auto Graph::is_regular() const -> bool
{
    return min_degree() == max_degree();
}

auto Graph::degree_profile() const -> std::map<unsigned, unsigned>
{
    std::map<unsigned, unsigned> result;
    for (auto d : _degrees)
        ++result[d];
    return result;
}

auto Graph::with_provenance(std::string provenance) const -> Graph
{
    Graph result = *this;
    result._provenance = std::move(provenance);
    return result;
}

GraphBuilder::GraphBuilder(unsigned size) :
    _rows(size, Bitset(size))
{
}

auto GraphBuilder::add_edge(Vertex a, Vertex b) -> GraphBuilder &
{
    if (a >= _rows.size() || b >= _rows.size())
        throw InvalidArgument("edge {" + std::to_string(a) + "," + std::to_string(b) + "} has an endpoint outside 0.."
                + std::to_string(_rows.size()) + ")");
    if (a == b)
        throw InvalidArgument("loop at vertex " + std::to_string(a));
    _rows[a].set(b);
    _rows[b].set(a);
    return *this;
}

auto GraphBuilder::set_labels(std::vector<std::string> labels) -> GraphBuilder &
{
    if (! labels.empty()) {
        if (labels.size() != _rows.size())
            throw InvalidArgument("label count does not match vertex count");
        std::set<std::string> distinct(labels.begin(), labels.end());
        if (distinct.size() != labels.size())
            throw InvalidArgument("vertex labels must be distinct");
    }
    _labels = std::move(labels);
    return *this;
}

auto GraphBuilder::set_provenance(std::string provenance) -> GraphBuilder &
{
    _provenance = std::move(provenance);
    return *this;
}

auto GraphBuilder::build() const -> Graph
{
    Graph result;
    result._rows = _rows;
    result._degrees.reserve(_rows.size());
    std::uint64_t total = 0;
    for (auto & r : _rows) {
        result._degrees.push_back(r.count());
        total += result._degrees.back();
    }
    result._edge_count = total / 2;
    result._labels = _labels;
    result._provenance = _provenance;
    return result;
}

auto ramsey::make_graph(unsigned size, const std::vector<Edge> & edges, std::string provenance) -> Graph
{
    GraphBuilder b(size);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    b.set_provenance(std::move(provenance));
    return b.build();
}

BipartiteGraph::BipartiteGraph(unsigned left_size, unsigned right_size, const std::vector<Edge> & edges,
        std::string provenance) :
    _left(left_size, Bitset(right_size)),
    _right(right_size, Bitset(left_size)),
    _provenance(std::move(provenance))
{
    if (left_size == 0 || right_size == 0)
        throw InvalidArgument("bipartite graph parts must be nonempty");
    for (auto [u, v] : edges) {
        if (u >= left_size || v >= right_size)
            throw InvalidArgument("bipartite edge endpoint out of range");
        _left[u].set(v);
        _right[v].set(u);
    }
    for (auto & r : _left) {
        _left_degrees.push_back(r.count());
        _edge_count += _left_degrees.back();
    }
    for (auto & r : _right)
        _right_degrees.push_back(r.count());
    _min_right_degree = *std::min_element(_right_degrees.begin(), _right_degrees.end());
}

auto BipartiteGraph::biregularity() const -> std::optional<std::pair<unsigned, unsigned>>
{
    auto [lmin, lmax] = std::minmax_element(_left_degrees.begin(), _left_degrees.end());
    auto [rmin, rmax] = std::minmax_element(_right_degrees.begin(), _right_degrees.end());
    if (*lmin != *lmax || *rmin != *rmax)
        return std::nullopt;
    return std::pair{ *lmin, *rmin };
}

auto BipartiteGraph::to_graph() const -> Graph
{
    const unsigned m = left_size();
    GraphBuilder b(m + right_size());
    for (Vertex u = 0 ; u < m ; ++u)
        for (Vertex v : _left[u].to_vector())
            b.add_edge(u, m + v);
    b.set_provenance(_provenance);
    return b.build();
}

auto ramsey::as_bipartite(const Graph & g, unsigned left_size) -> BipartiteGraph
{
    if (left_size > g.size())
        throw InvalidArgument("left part larger than the graph");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if ((u < left_size) == (v < left_size))
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies inside one part");
        edges.emplace_back(u, v - left_size);
    }
    return BipartiteGraph(left_size, g.size() - left_size, edges, g.provenance());
}

auto ramsey::edge_list_hash(const Graph & g) -> std::uint64_t
{
    Fnv1a64 h;
    for (auto [u, v] : g.edges())
        h.update(std::to_string(u + 1)).update(" ").update(std::to_string(v + 1)).update("\n");
    return h.value();
}
