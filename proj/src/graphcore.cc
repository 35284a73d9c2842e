/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/graphcore.hh>
#include <ramsey/errors.hh>
#include <ramsey/random.hh>

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

using namespace ramsey;

auto ramsey::girth(const Graph & g) -> std::optional<unsigned>
{
    const unsigned n = g.size();
    unsigned best = std::numeric_limits<unsigned>::max();
    std::vector<int> dist(n), parent(n);
    std::vector<Vertex> queue;
    queue.reserve(n);

    for (Vertex root = 0 ; root < n ; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        queue.clear();
        queue.push_back(root);
        for (unsigned head = 0 ; head < queue.size() ; ++head) {
            Vertex u = queue[head];
            if (2 * static_cast<unsigned>(dist[u]) + 1 >= best)
                break;
            auto & row = g.neighbourhood(u);
            for (Vertex w = row.first() ; w < n ; w = row.next(w)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != static_cast<int>(w))
                    best = std::min<unsigned>(best, dist[u] + dist[w] + 1);
            }
        }
    }

    if (best == std::numeric_limits<unsigned>::max())
        return std::nullopt;
    return best;
}

namespace
{
    auto extend_clique(const Graph & g, std::vector<Vertex> & clique, Bitset candidates, unsigned s) -> bool
    {
        if (clique.size() == s)
            return true;
        while (clique.size() + candidates.count() >= s) {
            Vertex v = candidates.first();
            candidates.reset(v);
            Bitset next = candidates;
            next.intersect_with(g.neighbourhood(v));
            clique.push_back(v);
            if (extend_clique(g, clique, std::move(next), s))
                return true;
            clique.pop_back();
        }
        return false;
    }
}

auto ramsey::find_clique(const Graph & g, unsigned s) -> std::optional<std::vector<Vertex>>
{
    if (s < 2)
        throw InvalidArgument("clique size must be at least 2");
    Bitset all(g.size());
    for (Vertex v = 0 ; v < g.size() ; ++v)
        if (g.degree(v) + 1 >= s)
            all.set(v);
    std::vector<Vertex> clique;
    if (extend_clique(g, clique, std::move(all), s))
        return clique;
    return std::nullopt;
}

namespace
{
    struct CycleSearch
    {
        const Graph & g;
        unsigned length;
        Vertex start;
        std::vector<unsigned> dist_to_start;
        std::vector<Vertex> path;
        Bitset used;

        auto extend() -> bool
        {
            Vertex last = path.back();
            unsigned depth = path.size() - 1;
            if (path.size() == length)
                return path[1] < last && g.adjacent(last, start);

            unsigned remaining_after = length - depth - 1;
            auto & row = g.neighbourhood(last);
            for (Vertex w = row.next(start) ; w < g.size() ; w = row.next(w)) {
                if (used.test(w) || dist_to_start[w] > remaining_after)
                    continue;
                path.push_back(w);
                used.set(w);
                if (extend())
                    return true;
                used.reset(w);
                path.pop_back();
            }
            return false;
        }
    };
}

auto ramsey::find_cycle(const Graph & g, unsigned length) -> std::optional<std::vector<Vertex>>
{
    if (length < 3 || length > 16)
        throw InvalidArgument("cycle length must be in 3..16");
    const unsigned n = g.size();
    const unsigned unreachable = std::numeric_limits<unsigned>::max();

    // The start vertex is the least vertex on the cycle; all others exceed it.
    for (Vertex s = 0 ; s + length <= n ; ++s) {
        CycleSearch search{ g, length, s, std::vector<unsigned>(n, unreachable), { s }, Bitset(n) };
        search.dist_to_start[s] = 0;
        std::vector<Vertex> queue{ s };
        for (unsigned head = 0 ; head < queue.size() ; ++head) {
            Vertex u = queue[head];
            auto & row = g.neighbourhood(u);
            for (Vertex w = row.next(s) ; w < n ; w = row.next(w))
                if (search.dist_to_start[w] == unreachable) {
                    search.dist_to_start[w] = search.dist_to_start[u] + 1;
                    queue.push_back(w);
                }
        }
        search.used.set(s);
        if (search.extend())
            return search.path;
    }
    return std::nullopt;
}

namespace
{
    struct EmbedSearch
    {
        const Graph & pattern;
        const Graph & host;
        std::uint64_t budget;
        std::uint64_t nodes = 0;

        std::vector<Vertex> order;
        std::vector<std::vector<unsigned>> earlier_neighbours; // positions in order
        std::vector<Bitset> domains;                           // by position
        std::vector<Vertex> image;                             // by position
        Bitset used;

        auto search(unsigned position) -> bool
        {
            if (position == order.size())
                return true;
            if (++nodes > budget)
                throw BudgetExhausted("subgraph embedding exceeded its budget of " + std::to_string(budget) + " nodes");

            Bitset candidates = domains[position];
            for (auto p : earlier_neighbours[position])
                candidates.intersect_with(host.neighbourhood(image[p]));
            candidates.subtract(used);

            for (Vertex h = candidates.first() ; h < host.size() ; h = candidates.next(h)) {
                image[position] = h;
                used.set(h);
                if (search(position + 1))
                    return true;
                used.reset(h);
            }
            return false;
        }
    };
}

auto ramsey::subgraph_embed(const Graph & pattern, const Graph & host, std::uint64_t budget)
    -> std::optional<std::vector<Vertex>>
{
    const unsigned k = pattern.size();
    if (k > max_pattern_size)
        throw SizeExceeded("pattern has " + std::to_string(k) + " vertices; at most "
                + std::to_string(max_pattern_size) + " are supported");
    if (k > host.size())
        return std::nullopt;

    EmbedSearch s{ pattern, host, budget };

    // Greedy connectivity order: most already-placed neighbours first, then degree.
    std::vector<bool> placed(k, false);
    std::vector<unsigned> placed_neighbours(k, 0);
    for (unsigned step = 0 ; step < k ; ++step) {
        Vertex best = k;
        for (Vertex p = 0 ; p < k ; ++p) {
            if (placed[p])
                continue;
            if (best == k
                    || placed_neighbours[p] > placed_neighbours[best]
                    || (placed_neighbours[p] == placed_neighbours[best] && pattern.degree(p) > pattern.degree(best)))
                best = p;
        }
        placed[best] = true;
        s.order.push_back(best);
        for (Vertex w : pattern.neighbours(best))
            ++placed_neighbours[w];
    }

    std::vector<unsigned> position_of(k);
    for (unsigned i = 0 ; i < k ; ++i)
        position_of[s.order[i]] = i;

    for (unsigned i = 0 ; i < k ; ++i) {
        Vertex p = s.order[i];
        std::vector<unsigned> earlier;
        for (Vertex w : pattern.neighbours(p))
            if (position_of[w] < i)
                earlier.push_back(position_of[w]);
        s.earlier_neighbours.push_back(std::move(earlier));

        Bitset domain(host.size());
        for (Vertex h = 0 ; h < host.size() ; ++h)
            if (host.degree(h) >= pattern.degree(p))
                domain.set(h);
        s.domains.push_back(std::move(domain));
    }
    s.image.assign(k, 0);
    s.used = Bitset(host.size());

    if (! s.search(0))
        return std::nullopt;

    std::vector<Vertex> result(k);
    for (unsigned i = 0 ; i < k ; ++i)
        result[s.order[i]] = s.image[i];
    return result;
}

auto ramsey::is_independent(const Graph & g, const std::vector<Vertex> & set) -> bool
{
    for (unsigned i = 0 ; i < set.size() ; ++i) {
        if (set[i] >= g.size())
            return false;
        for (unsigned j = i + 1 ; j < set.size() ; ++j)
            if (set[i] == set[j] || g.adjacent(set[i], set[j]))
                return false;
    }
    return true;
}

namespace
{
    /// Maximum clique in the complement, on relabelled vertices so that bit
    /// order is the colouring order.
    struct MaxIndependentSet
    {
        struct Level
        {
            Bitset candidates;
            std::vector<Bitset> classes;
            std::vector<Vertex> order;
            std::vector<unsigned> colour;
        };

        unsigned n;
        std::vector<Bitset> non_adjacent;   // complement rows, relabelled
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool aborted = false;

        std::vector<Level> levels;
        std::vector<Vertex> current, best;

        /// Moves v into an earlier class below the useful threshold, possibly
        /// pushing its single conflicting vertex w further up (Re-NUMBER).
        auto renumber(Level & level, Vertex v, unsigned useless_classes) -> bool
        {
            for (unsigned k1 = 0 ; k1 < useless_classes ; ++k1) {
                Bitset conflicts = level.classes[k1];
                conflicts.intersect_with(non_adjacent[v]);
                unsigned count = conflicts.count();
                if (count == 0) {
                    level.classes[k1].set(v);
                    return true;
                }
                if (count != 1)
                    continue;
                Vertex w = conflicts.first();
                for (unsigned k2 = k1 + 1 ; k2 < useless_classes ; ++k2)
                    if (! level.classes[k2].intersects(non_adjacent[w])) {
                        level.classes[k1].reset(w);
                        level.classes[k2].set(w);
                        level.classes[k1].set(v);
                        return true;
                    }
            }
            return false;
        }

        /// Greedy sequential colouring of the candidates; only vertices whose
        /// colour could still beat the incumbent are listed for branching.
        auto colour(Level & level) -> void
        {
            level.order.clear();
            level.colour.clear();
            const int needed = static_cast<int>(best.size()) - static_cast<int>(current.size()) + 1;
            const unsigned useless_classes = needed > 1 ? needed - 1 : 0;

            Bitset uncoloured = level.candidates;
            unsigned k = 0;
            for ( ; ! uncoloured.empty() ; ++k) {
                if (level.classes.size() <= k)
                    level.classes.emplace_back(n);
                auto & cls = level.classes[k];
                cls.clear();
                Bitset q = uncoloured;
                while (! q.empty()) {
                    Vertex v = q.first();
                    q.reset(v);
                    uncoloured.reset(v);
                    if (k >= useless_classes && useless_classes >= 1 && renumber(level, v, useless_classes))
                        continue;
                    cls.set(v);
                    q.subtract(non_adjacent[v]);
                }
            }

            for (unsigned c = useless_classes ; c < k ; ++c)
                for (Vertex v = level.classes[c].first() ; v < n ; v = level.classes[c].next(v)) {
                    level.order.push_back(v);
                    level.colour.push_back(c + 1);
                }
        }

        auto expand(unsigned depth) -> void
        {
            if (++nodes > budget) {
                aborted = true;
                return;
            }

            auto & level = levels[depth];
            colour(level);

            for (int i = static_cast<int>(level.order.size()) - 1 ; i >= 0 ; --i) {
                if (current.size() + level.colour[i] <= best.size())
                    return;
                Vertex v = level.order[i];
                current.push_back(v);
                auto & next = levels[depth + 1].candidates;
                next = level.candidates;
                next.intersect_with(non_adjacent[v]);
                if (next.empty()) {
                    if (current.size() > best.size())
                        best = current;
                }
                else
                    expand(depth + 1);
                current.pop_back();
                if (aborted)
                    return;
                level.candidates.reset(v);
            }
        }
    };

    /// Smallest-last order of the complement: the vertex of least remaining
    /// complement degree goes last, repeatedly.
    auto complement_degeneracy_order(const Graph & g) -> std::vector<Vertex>
    {
        const unsigned n = g.size();
        std::vector<Vertex> order(n);
        std::vector<int> degree(n);
        Bitset remaining(n);
        remaining.set_all();
        for (Vertex v = 0 ; v < n ; ++v)
            degree[v] = static_cast<int>(n) - 1 - static_cast<int>(g.degree(v));

        for (unsigned pos = n ; pos-- > 0 ; ) {
            Vertex pick = n;
            for (Vertex v = remaining.first() ; v < n ; v = remaining.next(v))
                if (pick == n || degree[v] < degree[pick])
                    pick = v;
            order[pos] = pick;
            remaining.reset(pick);
            for (Vertex w = remaining.first() ; w < n ; w = remaining.next(w))
                if (! g.adjacent(pick, w))
                    --degree[w];
        }
        return order;
    }

    auto greedy_colour_bound(const std::vector<Bitset> & rows, unsigned n) -> unsigned
    {
        Bitset uncoloured(n);
        uncoloured.set_all();
        unsigned k = 0;
        while (! uncoloured.empty()) {
            ++k;
            Bitset q = uncoloured;
            while (! q.empty()) {
                Vertex v = q.first();
                q.reset(v);
                uncoloured.reset(v);
                q.subtract(rows[v]);
            }
        }
        return k;
    }

    auto random_permutation(unsigned n, Xoshiro256 & rng) -> std::vector<Vertex>
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (unsigned i = n ; i > 1 ; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        return perm;
    }

    auto local_search(const Graph & g, const IndependenceOptions & options) -> IndependenceResult
    {
        const unsigned n = g.size();
        Xoshiro256 rng(options.seed);
        unsigned restarts = options.restarts ? options.restarts : std::max(50u, n);

        IndependenceResult result;
        for (unsigned r = 0 ; r < restarts ; ++r) {
            std::vector<unsigned> tightness(n, 0);
            std::vector<bool> in_set(n, false);

            auto insert = [&] (Vertex v) {
                in_set[v] = true;
                for (Vertex w : g.neighbours(v))
                    ++tightness[w];
            };
            auto remove = [&] (Vertex v) {
                in_set[v] = false;
                for (Vertex w : g.neighbours(v))
                    --tightness[w];
            };

            for (Vertex v : random_permutation(n, rng))
                if (tightness[v] == 0 && ! in_set[v])
                    insert(v);

            // (1,2)-swaps: drop x, add two non-adjacent vertices whose only
            // neighbour in the set was x.
            bool improved = true;
            while (improved) {
                improved = false;
                for (Vertex x = 0 ; x < n && ! improved ; ++x) {
                    if (! in_set[x])
                        continue;
                    std::vector<Vertex> one_tight;
                    for (Vertex w : g.neighbours(x))
                        if (! in_set[w] && tightness[w] == 1)
                            one_tight.push_back(w);
                    for (unsigned i = 0 ; i < one_tight.size() && ! improved ; ++i)
                        for (unsigned j = i + 1 ; j < one_tight.size() && ! improved ; ++j)
                            if (! g.adjacent(one_tight[i], one_tight[j])) {
                                remove(x);
                                insert(one_tight[i]);
                                insert(one_tight[j]);
                                for (Vertex v = 0 ; v < n ; ++v)
                                    if (! in_set[v] && tightness[v] == 0)
                                        insert(v);
                                improved = true;
                            }
                }
            }

            std::vector<Vertex> set;
            for (Vertex v = 0 ; v < n ; ++v)
                if (in_set[v])
                    set.push_back(v);
            if (set.size() > result.witness.size())
                result.witness = std::move(set);
        }
        result.alpha = result.witness.size();
        result.exact = false;
        result.upper_bound = n;
        result.nodes = restarts;
        return result;
    }
}

auto ramsey::independence_number(const Graph & g, const IndependenceOptions & options) -> IndependenceResult
{
    const unsigned n = g.size();
    if (options.mode == IndependenceMode::lower_bound)
        return local_search(g, options);

    IndependenceResult result;
    if (n == 0) {
        result.exact = true;
        return result;
    }

    auto order = complement_degeneracy_order(g);

    MaxIndependentSet s{ n, std::vector<Bitset>(n, Bitset(n)), options.budget };
    for (unsigned i = 0 ; i < n ; ++i)
        for (unsigned j = 0 ; j < n ; ++j)
            if (i != j && ! g.adjacent(order[i], order[j]))
                s.non_adjacent[i].set(j);

    // Seed the incumbent with a greedy maximal set in colouring order.
    {
        Bitset free(n);
        free.set_all();
        while (! free.empty()) {
            Vertex v = free.first();
            s.best.push_back(v);
            free.reset(v);
            free.intersect_with(s.non_adjacent[v]);
        }
    }

    s.levels.resize(n + 1);
    s.levels[0].candidates = Bitset(n);
    s.levels[0].candidates.set_all();
    s.expand(0);

    for (auto v : s.best)
        result.witness.push_back(order[v]);
    std::sort(result.witness.begin(), result.witness.end());
    result.alpha = result.witness.size();
    result.nodes = s.nodes;
    result.exact = ! s.aborted;
    result.upper_bound = result.exact ? result.alpha : greedy_colour_bound(s.non_adjacent, n);
    return result;
}

namespace
{
    struct IndependentSetCounter
    {
        const Graph & g;
        std::uint64_t budget;
        std::uint64_t nodes = 0;

        auto count(Bitset candidates, unsigned needed) -> std::uint64_t
        {
            if (needed == 0)
                return 1;
            if (++nodes > budget)
                throw BudgetExhausted("independent set count exceeded its budget of " + std::to_string(budget) + " nodes");
            if (needed == 1)
                return candidates.count();

            std::uint64_t total = 0;
            while (candidates.count() >= needed) {
                Vertex v = candidates.first();
                candidates.reset(v);
                Bitset next = candidates;
                next.subtract(g.neighbourhood(v));
                total += count(std::move(next), needed - 1);
            }
            return total;
        }
    };
}

auto ramsey::count_independent_sets(const Graph & g, unsigned t, std::uint64_t budget) -> std::uint64_t
{
    Bitset all(g.size());
    all.set_all();
    IndependentSetCounter counter{ g, budget };
    return counter.count(std::move(all), t);
}

namespace
{
    auto join(const std::vector<Vertex> & vs) -> std::string
    {
        std::string result;
        for (unsigned i = 0 ; i < vs.size() ; ++i) {
            if (i)
                result += ',';
            result += std::to_string(vs[i]);
        }
        return result;
    }
}

auto ramsey::induced_subgraph(const Graph & g, std::vector<Vertex> vertices) -> Graph
{
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InvalidArgument("induced subgraph vertex set has repeated vertices");
    if (! vertices.empty() && vertices.back() >= g.size())
        throw InvalidArgument("induced subgraph vertex " + std::to_string(vertices.back()) + " out of range");

    GraphBuilder b(vertices.size());
    for (unsigned i = 0 ; i < vertices.size() ; ++i)
        for (unsigned j = i + 1 ; j < vertices.size() ; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(i, j);

    if (! g.labels().empty()) {
        std::vector<std::string> labels;
        for (auto v : vertices)
            labels.push_back(g.labels()[v]);
        b.set_labels(std::move(labels));
    }
    b.set_provenance(g.provenance() + " | induced(v=" + join(vertices) + ")");
    return b.build();
}

auto ramsey::complete_bipartite_overlay(const Graph & g, const std::vector<Vertex> & a,
        const std::vector<Vertex> & b) -> Graph
{
    Bitset in_a(g.size());
    for (auto v : a) {
        if (v >= g.size())
            throw InvalidArgument("overlay vertex " + std::to_string(v) + " out of range");
        in_a.set(v);
    }
    for (auto v : b) {
        if (v >= g.size())
            throw InvalidArgument("overlay vertex " + std::to_string(v) + " out of range");
        if (in_a.test(v))
            throw InvalidArgument("overlay parts overlap at vertex " + std::to_string(v));
    }

    GraphBuilder builder(g.size());
    for (auto [u, v] : g.edges())
        builder.add_edge(u, v);
    for (auto x : a)
        for (auto y : b)
            builder.add_edge(x, y);
    builder.set_labels(g.labels());
    builder.set_provenance(g.provenance() + " | overlay(a=" + join(a) + ";b=" + join(b) + ")");
    return builder.build();
}

auto ramsey::triangle_count(const Graph & g) -> std::uint64_t
{
    std::uint64_t total = 0;
    for (auto [u, v] : g.edges())
        total += g.neighbourhood(u).intersection_count(g.neighbourhood(v));
    return total / 3;
}

auto ramsey::is_bipartite(const Graph & g) -> bool
{
    const unsigned n = g.size();
    std::vector<int> side(n, -1);
    for (Vertex root = 0 ; root < n ; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::vector<Vertex> queue{ root };
        for (unsigned head = 0 ; head < queue.size() ; ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u])
                    return false;
            }
        }
    }
    return true;
}

auto ramsey::complement(const Graph & g) -> Graph
{
    GraphBuilder b(g.size());
    for (Vertex u = 0 ; u < g.size() ; ++u)
        for (Vertex v = u + 1 ; v < g.size() ; ++v)
            if (! g.adjacent(u, v))
                b.add_edge(u, v);
    b.set_provenance(g.provenance() + " | complement()");
    return b.build();
}
