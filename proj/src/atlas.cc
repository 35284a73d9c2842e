/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/atlas.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <string>

using namespace ramsey;

namespace
{
    auto coordinate_label(const std::vector<Element> & c) -> std::string
    {
        std::string result = "(";
        for (unsigned i = 0 ; i < c.size() ; ++i) {
            if (i)
                result += ',';
            result += std::to_string(c[i]);
        }
        return result + ")";
    }

    /// Index lookup for normalised projective points, keyed by their base-q reading.
    struct PointIndex
    {
        std::uint64_t q;
        std::map<std::uint64_t, Vertex> index;

        auto key(const std::vector<Element> & c) const -> std::uint64_t
        {
            std::uint64_t k = 0;
            for (auto x : c)
                k = k * q + x;
            return k;
        }

        PointIndex(std::uint64_t q_, const std::vector<ProjectivePoint> & points) :
            q(q_)
        {
            for (Vertex i = 0 ; i < points.size() ; ++i)
                index.emplace(key(points[i].coordinates), i);
        }

        auto operator() (const ProjectivePoint & p) const -> Vertex
        {
            return index.at(key(p.coordinates));
        }
    };

    /// Points on the projective line through the points spanned by a and b.
    auto span_points(const FiniteField & f, const PointIndex & idx, const std::vector<Element> & a,
            const std::vector<Element> & b) -> std::vector<Vertex>
    {
        std::vector<Vertex> result{ idx(normalise(f, a)) };
        for (Element s = 0 ; s < f.order() ; ++s) {
            std::vector<Element> v(a.size());
            for (unsigned i = 0 ; i < a.size() ; ++i)
                v[i] = f.add(f.mul(s, a[i]), b[i]);
            result.push_back(idx(normalise(f, std::move(v))));
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto check_prime_power(std::uint64_t q) -> FiniteField
    {
        return field_of_order(q);
    }

    auto symplectic(const FiniteField & f, const std::vector<Element> & x, const std::vector<Element> & y) -> Element
    {
        Element a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        Element b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        return f.add(a, b);
    }
}

IncidenceStructure::IncidenceStructure(unsigned point_count, std::vector<std::vector<Vertex>> lines,
        GeometryKind kind, std::uint64_t q) :
    _point_count(point_count),
    _lines(std::move(lines)),
    _kind(kind),
    _q(q)
{
    for (auto & l : _lines) {
        Bitset row(point_count);
        for (auto p : l) {
            if (p >= point_count)
                throw InvalidArgument("line contains point " + std::to_string(p) + " out of range");
            row.set(p);
        }
        l = row.to_vector();
        _incidence.push_back(std::move(row));
    }
}

auto IncidenceStructure::pencil(Vertex point) const -> std::vector<unsigned>
{
    std::vector<unsigned> result;
    for (unsigned l = 0 ; l < _lines.size() ; ++l)
        if (_incidence[l].test(point))
            result.push_back(l);
    return result;
}

auto IncidenceStructure::incidence_graph(std::string provenance) const -> BipartiteGraph
{
    std::vector<Edge> edges;
    for (unsigned l = 0 ; l < _lines.size() ; ++l)
        for (auto p : _lines[l])
            edges.emplace_back(l, p);
    return BipartiteGraph(_lines.size(), _point_count, edges, std::move(provenance));
}

auto ramsey::projective_plane(std::uint64_t q) -> IncidenceStructure
{
    auto f = check_prime_power(q);
    auto points = projective_points(f, 2);
    PointIndex idx(q, points);

    std::vector<std::vector<Vertex>> lines;
    for (auto & a : points) {
        auto & c = a.coordinates;
        // Two independent vectors orthogonal to the normalised dual vector c.
        std::vector<Element> b1, b2;
        if (c[0] == 1) {
            b1 = { f.neg(c[1]), 1, 0 };
            b2 = { f.neg(c[2]), 0, 1 };
        }
        else if (c[1] == 1) {
            b1 = { 1, 0, 0 };
            b2 = { 0, f.neg(c[2]), 1 };
        }
        else {
            b1 = { 1, 0, 0 };
            b2 = { 0, 1, 0 };
        }
        lines.push_back(span_points(f, idx, b1, b2));
    }

    IncidenceStructure result(points.size(), std::move(lines), GeometryKind::projective_plane, q);
    std::vector<std::string> labels;
    for (auto & p : points)
        labels.push_back(coordinate_label(p.coordinates));
    result.set_point_labels(std::move(labels));
    return result;
}

auto ramsey::symplectic_quadrangle(std::uint64_t q) -> IncidenceStructure
{
    auto f = check_prime_power(q);
    if ((q + 1) * (q * q + 1) > 10000)
        throw SizeExceeded("W(3," + std::to_string(q) + ") exceeds 10^4 points");
    auto points = projective_points(f, 3);
    PointIndex idx(q, points);

    std::set<std::vector<Vertex>> seen;
    for (Vertex x = 0 ; x < points.size() ; ++x)
        for (Vertex y = x + 1 ; y < points.size() ; ++y)
            if (symplectic(f, points[x].coordinates, points[y].coordinates) == 0)
                seen.insert(span_points(f, idx, points[x].coordinates, points[y].coordinates));

    IncidenceStructure result(points.size(), std::vector<std::vector<Vertex>>(seen.begin(), seen.end()),
            GeometryKind::generalized_quadrangle, q);
    std::vector<std::string> labels;
    for (auto & p : points)
        labels.push_back(coordinate_label(p.coordinates));
    result.set_point_labels(std::move(labels));
    return result;
}

auto ramsey::is_polarity(const IncidenceStructure & inc, const std::vector<unsigned> & line_of_point) -> bool
{
    const unsigned n = inc.point_count();
    if (line_of_point.size() != n || inc.line_count() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (auto l : line_of_point) {
        if (l >= n || hit[l])
            return false;
        hit[l] = true;
    }
    for (Vertex p = 0 ; p < n ; ++p)
        for (Vertex r = p + 1 ; r < n ; ++r)
            if (inc.incident(p, line_of_point[r]) != inc.incident(r, line_of_point[p]))
                return false;
    return true;
}

namespace
{
    auto with_absolute_points(const IncidenceStructure & inc, std::vector<unsigned> line_of_point) -> Polarity
    {
        Polarity result{ std::move(line_of_point), {} };
        for (Vertex p = 0 ; p < inc.point_count() ; ++p)
            if (inc.incident(p, result.line_of_point[p]))
                result.absolute_points.push_back(p);
        return result;
    }

    struct PolaritySearch
    {
        const IncidenceStructure & inc;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        std::vector<unsigned> pencil_size;
        std::vector<unsigned> assignment;
        std::vector<bool> used;

        auto search(Vertex r) -> bool
        {
            const unsigned n = inc.point_count();
            if (r == n)
                return true;
            if (++nodes > budget)
                throw BudgetExhausted("polarity search exceeded its budget of " + std::to_string(budget) + " nodes");

            for (unsigned l = 0 ; l < n ; ++l) {
                if (used[l] || inc.line(l).size() != pencil_size[r])
                    continue;
                bool ok = true;
                for (Vertex s = 0 ; s < r && ok ; ++s)
                    ok = inc.incident(s, l) == inc.incident(r, assignment[s]);
                if (! ok)
                    continue;
                assignment[r] = l;
                used[l] = true;
                if (search(r + 1))
                    return true;
                used[l] = false;
            }
            return false;
        }
    };
}

auto ramsey::find_polarity(const IncidenceStructure & inc, std::uint64_t budget) -> std::optional<Polarity>
{
    const unsigned n = inc.point_count();
    if (inc.line_count() != n)
        return std::nullopt;

    if (inc.kind() == GeometryKind::projective_plane) {
        std::vector<unsigned> identity(n);
        for (unsigned i = 0 ; i < n ; ++i)
            identity[i] = i;
        if (is_polarity(inc, identity))
            return with_absolute_points(inc, std::move(identity));
    }

    if (n > 40)
        throw SizeExceeded("polarity search supports at most 40 points");

    PolaritySearch s{ inc, budget };
    for (Vertex p = 0 ; p < n ; ++p)
        s.pencil_size.push_back(inc.pencil(p).size());
    s.assignment.assign(n, 0);
    s.used.assign(n, false);
    if (! s.search(0))
        return std::nullopt;
    return with_absolute_points(inc, std::move(s.assignment));
}

auto ramsey::polarity_graph(const IncidenceStructure & inc, const Polarity & pol, std::string provenance) -> Graph
{
    if (! is_polarity(inc, pol.line_of_point))
        throw InvalidArgument("map is not a polarity of the incidence structure");
    const unsigned n = inc.point_count();
    GraphBuilder b(n);
    for (Vertex y = 0 ; y < n ; ++y)
        for (auto x : inc.line(pol.line_of_point[y]))
            if (x != y)
                b.add_edge(x, y);
    b.set_labels(inc.point_labels());
    b.set_provenance(std::move(provenance));
    return b.build();
}

auto ramsey::paley(std::uint64_t q) -> Graph
{
    auto f = check_prime_power(q);
    if (q % 4 != 1)
        throw InvalidArgument("Paley graph needs q = 1 mod 4; got " + std::to_string(q));
    GraphBuilder b(q);
    for (Element x = 0 ; x < q ; ++x)
        for (Element y = x + 1 ; y < q ; ++y)
            if (f.is_square(f.sub(x, y)))
                b.add_edge(x, y);
    b.set_provenance("paley(q=" + std::to_string(q) + ")");
    return b.build();
}

auto ramsey::er_polarity(std::uint64_t q) -> Graph
{
    check_prime_power(q);
    if (q * q + q + 1 > 100000)
        throw SizeExceeded("er_polarity(" + std::to_string(q) + ") exceeds 10^5 vertices");
    auto plane = projective_plane(q);
    auto pol = find_polarity(plane);
    return polarity_graph(plane, *pol, "er_polarity(q=" + std::to_string(q) + ")");
}

auto ramsey::pg_incidence(std::uint64_t q) -> BipartiteGraph
{
    check_prime_power(q);
    if (q * q + q + 1 > 100000)
        throw SizeExceeded("pg_incidence(" + std::to_string(q) + ") exceeds 10^5 points");
    return projective_plane(q).incidence_graph("pg_incidence(q=" + std::to_string(q) + ")");
}

auto ramsey::gq_incidence(std::uint64_t q) -> BipartiteGraph
{
    return symplectic_quadrangle(q).incidence_graph("gq_incidence(q=" + std::to_string(q) + ")");
}

namespace
{
    /// For coordinate c >= 1 of D(k,q): l_c = p_c + l_a * p_b. Coordinates are
    /// ordered 1, 11, 12, 21, 22, 22', 23, 32, 33, 33', 34, 43, ...
    struct DkqRule
    {
        unsigned a, b;
    };

    auto dkq_rules(unsigned k) -> std::vector<DkqRule>
    {
        std::vector<DkqRule> rules{ { 0, 0 }, { 1, 0 }, { 0, 1 } };
        for (unsigned c0 = 4 ; rules.size() < k ; c0 += 4) {
            unsigned prev_up = c0 == 4 ? 2 : c0 - 2;    // p_{i-1,i}
            unsigned prev_down = c0 == 4 ? 3 : c0 - 1;  // l_{i,i-1}
            rules.push_back({ 0, prev_up });            // (i,i)
            rules.push_back({ prev_down, 0 });          // (i,i)'
            rules.push_back({ c0, 0 });                 // (i,i+1)
            rules.push_back({ 0, c0 + 1 });             // (i+1,i)
        }
        rules.resize(k - 1);
        return rules;
    }
}

auto ramsey::dkq(unsigned k, std::uint64_t q) -> BipartiteGraph
{
    if (k < 2 || k > 7)
        throw InvalidArgument("D(k,q) needs 2 <= k <= 7");
    auto f = check_prime_power(q);
    std::uint64_t size = 1;
    for (unsigned i = 0 ; i < k ; ++i)
        size *= q;
    if (size > 100000)
        throw SizeExceeded("D(" + std::to_string(k) + "," + std::to_string(q) + ") exceeds 10^5 vertices per part");

    auto rules = dkq_rules(k);
    std::vector<Edge> edges;
    edges.reserve(size * q);
    std::vector<Element> point(k), line(k);
    for (std::uint64_t pi = 0 ; pi < size ; ++pi) {
        std::uint64_t rest = pi;
        for (unsigned i = k ; i-- > 0 ; ) {
            point[i] = rest % q;
            rest /= q;
        }
        for (Element l1 = 0 ; l1 < q ; ++l1) {
            line[0] = l1;
            for (unsigned c = 1 ; c < k ; ++c)
                line[c] = f.add(point[c], f.mul(line[rules[c - 1].a], point[rules[c - 1].b]));
            std::uint64_t li = 0;
            for (auto x : line)
                li = li * q + x;
            edges.emplace_back(li, pi);
        }
    }
    return BipartiteGraph(size, size, edges, "dkq(k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")");
}

auto ramsey::cycle_graph(unsigned n) -> Graph
{
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0 ; v < n ; ++v)
        b.add_edge(v, (v + 1) % n);
    b.set_provenance("cycle(n=" + std::to_string(n) + ")");
    return b.build();
}

auto ramsey::path_graph(unsigned n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex v = 0 ; v + 1 < n ; ++v)
        b.add_edge(v, v + 1);
    b.set_provenance("path(n=" + std::to_string(n) + ")");
    return b.build();
}

auto ramsey::complete_graph(unsigned n) -> Graph
{
    GraphBuilder b(n);
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v)
            b.add_edge(u, v);
    b.set_provenance("complete(n=" + std::to_string(n) + ")");
    return b.build();
}

auto ramsey::petersen_graph() -> Graph
{
    GraphBuilder b(10);
    for (Vertex i = 0 ; i < 5 ; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    b.set_provenance("petersen()");
    return b.build();
}
