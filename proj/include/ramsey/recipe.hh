/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_RECIPE_HH
#define RAMSEY_RECIPE_HH 1

#include <ramsey/graph.hh>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ramsey
{
    /// One "name(key=value,...)" segment of a provenance string. Values are
    /// kept as text; steps such as induced(v=0,2,5) have a single key whose
    /// value is a comma list.
    struct RecipeSegment
    {
        std::string name;
        std::vector<std::pair<std::string, std::string>> arguments;

        auto text() const -> std::string;
    };

    /// A provenance string "family(...) | step(...) | ..." split into parts.
    struct Recipe
    {
        RecipeSegment family;
        std::vector<RecipeSegment> steps;

        auto text() const -> std::string;
    };

    /// Throws FormatError on anything that is not a recipe.
    auto parse_recipe(const std::string & provenance) -> Recipe;

    /// Family name to its numeric parameters, e.g. {"q": 11}.
    auto recipe_parameters(const Recipe &) -> std::map<std::string, std::uint64_t>;

    using RecipeValue = std::variant<Graph, BipartiteGraph>;

    /// Rebuilds the object a provenance string describes. Bipartite families
    /// stay bipartite until a step turns them into a plain graph; block needs
    /// a bipartite input. Throws InvalidArgument for unknown families or steps.
    auto rebuild(const std::string & provenance) -> RecipeValue;

    /// rebuild(), with bipartite results flattened by to_graph().
    auto rebuild_graph(const std::string & provenance) -> Graph;

    auto as_plain_graph(const RecipeValue &) -> Graph;
}

#endif
