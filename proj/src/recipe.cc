/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/recipe.hh>
#include <ramsey/atlas.hh>
#include <ramsey/block.hh>
#include <ramsey/errors.hh>
#include <ramsey/graphcore.hh>

#include <cctype>
#include <charconv>

using namespace ramsey;

namespace
{
    auto fail(const std::string & message) -> FormatError
    {
        return FormatError("provenance", 0, message);
    }

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (! s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    }

    auto parse_segment(std::string_view text) -> RecipeSegment
    {
        text = trim(text);
        auto open = text.find('(');
        if (open == 0 || open == std::string_view::npos || text.back() != ')')
            throw fail("malformed segment '" + std::string(text) + "'");

        RecipeSegment seg;
        seg.name = std::string(text.substr(0, open));
        for (char c : seg.name)
            if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw fail("bad name '" + seg.name + "'");

        std::string_view body = text.substr(open + 1, text.size() - open - 2);
        if (body.empty())
            return seg;

        // Arguments are split on ';' when present (overlay), otherwise on ','
        // unless the only key holds a list (induced).
        auto split_on = [&](char sep) {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            for (std::size_t i = 0; i <= body.size(); ++i)
                if (i == body.size() || body[i] == sep) {
                    out.push_back(body.substr(start, i - start));
                    start = i + 1;
                }
            return out;
        };

        std::vector<std::string_view> pieces;
        if (body.find(';') != std::string_view::npos)
            pieces = split_on(';');
        else {
            auto comma = split_on(',');
            bool all_keyed = true;
            for (auto p : comma)
                all_keyed = all_keyed && p.find('=') != std::string_view::npos;
            if (all_keyed)
                pieces = comma;
            else
                pieces = { body };
        }

        for (auto p : pieces) {
            auto eq = p.find('=');
            if (eq == 0 || eq == std::string_view::npos)
                throw fail("malformed argument '" + std::string(p) + "'");
            seg.arguments.emplace_back(std::string(p.substr(0, eq)), std::string(p.substr(eq + 1)));
        }
        return seg;
    }

    auto to_number(const std::string & s) -> std::uint64_t
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw fail("expected a number, got '" + s + "'");
        return v;
    }

    auto to_vertices(const std::string & s) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        if (s.empty())
            return out;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i)
            if (i == s.size() || s[i] == ',') {
                auto v = to_number(s.substr(start, i - start));
                if (v > 0xffffffffULL)
                    throw fail("vertex out of range");
                out.push_back(static_cast<Vertex>(v));
                start = i + 1;
            }
        return out;
    }

    auto argument(const RecipeSegment & seg, const std::string & key) -> const std::string &
    {
        for (auto & [k, v] : seg.arguments)
            if (k == key)
                return v;
        throw fail(seg.name + " is missing '" + key + "'");
    }

    auto expect_keys(const RecipeSegment & seg, std::vector<std::string> keys) -> void
    {
        if (seg.arguments.size() != keys.size())
            throw fail(seg.name + " takes " + std::to_string(keys.size()) + " argument(s)");
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (seg.arguments[i].first != keys[i])
                throw fail(seg.name + " expects '" + keys[i] + "' in position " + std::to_string(i + 1));
    }

    auto build_family(const RecipeSegment & f) -> RecipeValue
    {
        auto number = [&](const char * key) { return to_number(argument(f, key)); };
        auto small = [&](const char * key) {
            auto v = number(key);
            if (v > 1'000'000)
                throw InvalidArgument(f.name + ": " + key + " too large");
            return static_cast<unsigned>(v);
        };

        if (f.name == "paley") {
            expect_keys(f, { "q" });
            return paley(number("q"));
        }
        if (f.name == "er_polarity") {
            expect_keys(f, { "q" });
            return er_polarity(number("q"));
        }
        if (f.name == "pg_incidence") {
            expect_keys(f, { "q" });
            return pg_incidence(number("q"));
        }
        if (f.name == "gq_incidence") {
            expect_keys(f, { "q" });
            return gq_incidence(number("q"));
        }
        if (f.name == "dkq") {
            expect_keys(f, { "k", "q" });
            return dkq(small("k"), number("q"));
        }
        if (f.name == "cycle") {
            expect_keys(f, { "n" });
            return cycle_graph(small("n"));
        }
        if (f.name == "path") {
            expect_keys(f, { "n" });
            return path_graph(small("n"));
        }
        if (f.name == "complete") {
            expect_keys(f, { "n" });
            return complete_graph(small("n"));
        }
        if (f.name == "petersen") {
            expect_keys(f, {});
            return petersen_graph();
        }
        throw InvalidArgument("unknown graph family '" + f.name + "'");
    }
}

auto RecipeSegment::text() const -> std::string
{
    std::string out = name + "(";
    char sep = name == "overlay" ? ';' : ',';
    for (std::size_t i = 0; i < arguments.size(); ++i) {
        if (i)
            out += sep;
        out += arguments[i].first + "=" + arguments[i].second;
    }
    return out + ")";
}

auto Recipe::text() const -> std::string
{
    std::string out = family.text();
    for (auto & s : steps)
        out += " | " + s.text();
    return out;
}

auto ramsey::parse_recipe(const std::string & provenance) -> Recipe
{
    std::vector<std::string_view> parts;
    std::string_view all = provenance;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= all.size(); ++i)
        if (i == all.size() || all[i] == '|') {
            parts.push_back(all.substr(start, i - start));
            start = i + 1;
        }

    Recipe r;
    r.family = parse_segment(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i)
        r.steps.push_back(parse_segment(parts[i]));
    return r;
}

auto ramsey::recipe_parameters(const Recipe & r) -> std::map<std::string, std::uint64_t>
{
    std::map<std::string, std::uint64_t> out;
    for (auto & [k, v] : r.family.arguments)
        out[k] = to_number(v);
    return out;
}

auto ramsey::as_plain_graph(const RecipeValue & v) -> Graph
{
    if (auto b = std::get_if<BipartiteGraph>(&v))
        return b->to_graph();
    return std::get<Graph>(v);
}

auto ramsey::rebuild(const std::string & provenance) -> RecipeValue
{
    auto recipe = parse_recipe(provenance);
    RecipeValue current = build_family(recipe.family);

    for (auto & step : recipe.steps) {
        if (step.name == "block") {
            expect_keys(step, { "seed" });
            auto host = std::get_if<BipartiteGraph>(&current);
            if (! host)
                throw InvalidArgument("block step needs a bipartite host");
            current = block_construct(*host, to_number(argument(step, "seed"))).graph;
        }
        else if (step.name == "induced") {
            expect_keys(step, { "v" });
            current = induced_subgraph(as_plain_graph(current), to_vertices(argument(step, "v")));
        }
        else if (step.name == "overlay") {
            expect_keys(step, { "a", "b" });
            current = complete_bipartite_overlay(as_plain_graph(current),
                    to_vertices(argument(step, "a")), to_vertices(argument(step, "b")));
        }
        else if (step.name == "complement") {
            expect_keys(step, {});
            current = complement(as_plain_graph(current));
        }
        else
            throw InvalidArgument("unknown transformation '" + step.name + "'");
    }
    return current;
}

auto ramsey::rebuild_graph(const std::string & provenance) -> Graph
{
    return as_plain_graph(rebuild(provenance));
}
