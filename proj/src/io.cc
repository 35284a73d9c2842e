/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/io.hh>
#include <ramsey/errors.hh>

#include "json.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

using namespace ramsey;
using Json = nlohmann::ordered_json;

namespace
{
    auto words(const std::string & line) -> std::vector<std::string>
    {
        std::istringstream s(line);
        std::vector<std::string> out;
        for (std::string w; s >> w;)
            out.push_back(w);
        return out;
    }

    auto number(const std::string & w, const std::string & source, unsigned line, const char * what) -> std::uint64_t
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (w.empty() || ec != std::errc{} || ptr != w.data() + w.size())
            throw FormatError(source, line, std::string("expected ") + what + ", got '" + w + "'");
        return v;
    }

    auto rest_after(const std::string & line, unsigned skip_words) -> std::string
    {
        std::size_t pos = 0;
        for (unsigned i = 0; i < skip_words; ++i) {
            pos = line.find_first_not_of(" \t", pos);
            pos = line.find_first_of(" \t", pos);
            if (pos == std::string::npos)
                return "";
        }
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string::npos)
            return "";
        auto end = line.find_last_not_of(" \t\r");
        return line.substr(pos, end - pos + 1);
    }
}

auto ramsey::write_graph(std::ostream & out, const Graph & g, std::optional<unsigned> left_size) -> void
{
    if (! g.provenance().empty())
        out << "c provenance " << g.provenance() << '\n';
    if (left_size)
        out << "c bipartite " << *left_size << ' ' << g.size() - *left_size << '\n';
    for (unsigned v = 0; v < g.labels().size(); ++v)
        out << "c label " << v + 1 << ' ' << g.labels()[v] << '\n';
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

auto ramsey::write_graph(std::ostream & out, const BipartiteGraph & g) -> void
{
    write_graph(out, g.to_graph(), g.left_size());
}

auto ramsey::read_graph(std::istream & in, const std::string & source) -> GraphFile
{
    std::string provenance;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> bipartite;
    unsigned bipartite_line = 0;
    std::vector<std::pair<std::uint64_t, std::string>> labels;
    std::optional<GraphBuilder> builder;
    std::uint64_t n = 0, declared_m = 0, seen_m = 0;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        auto w = words(line);
        if (w.empty())
            continue;

        if (w[0] == "c") {
            if (w.size() >= 2 && w[1] == "provenance")
                provenance = rest_after(line, 2);
            else if (w.size() >= 2 && w[1] == "bipartite") {
                if (w.size() != 4)
                    throw FormatError(source, line_no, "bipartite line needs two sizes");
                bipartite = { number(w[2], source, line_no, "a part size"), number(w[3], source, line_no, "a part size") };
                bipartite_line = line_no;
            }
            else if (w.size() >= 2 && w[1] == "label") {
                if (w.size() < 4)
                    throw FormatError(source, line_no, "label line needs a vertex and text");
                labels.emplace_back(number(w[2], source, line_no, "a vertex"), rest_after(line, 3));
            }
        }
        else if (w[0] == "p") {
            if (builder)
                throw FormatError(source, line_no, "second problem line");
            if (w.size() != 4 || w[1] != "edge")
                throw FormatError(source, line_no, "malformed header, expected 'p edge <n> <m>'");
            n = number(w[2], source, line_no, "a vertex count");
            declared_m = number(w[3], source, line_no, "an edge count");
            if (n > 1'000'000)
                throw FormatError(source, line_no, "vertex count too large");
            builder.emplace(static_cast<unsigned>(n));
        }
        else if (w[0] == "e") {
            if (! builder)
                throw FormatError(source, line_no, "edge before the 'p edge' header");
            if (w.size() != 3)
                throw FormatError(source, line_no, "malformed edge, expected 'e <u> <v>'");
            auto u = number(w[1], source, line_no, "a vertex"), v = number(w[2], source, line_no, "a vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw FormatError(source, line_no, "endpoint out of range 1.." + std::to_string(n));
            if (u == v)
                throw FormatError(source, line_no, "loop at vertex " + std::to_string(u));
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw FormatError(source, line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            ++seen_m;
        }
        else
            throw FormatError(source, line_no, "unrecognised line");
    }

    if (! builder)
        throw FormatError(source, line_no, "missing 'p edge' header");
    if (seen_m != declared_m)
        throw FormatError(source, line_no, "header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(seen_m));

    if (! labels.empty()) {
        std::vector<std::string> text(n);
        std::vector<bool> have(n, false);
        for (auto & [v, t] : labels) {
            if (v < 1 || v > n || have[v - 1])
                throw FormatError(source, line_no, "bad or repeated label for vertex " + std::to_string(v));
            have[v - 1] = true;
            text[v - 1] = t;
        }
        if (labels.size() != n)
            throw FormatError(source, line_no, "labels must cover every vertex");
        builder->set_labels(std::move(text));
    }
    builder->set_provenance(provenance);

    GraphFile result{ builder->build(), std::nullopt };
    if (bipartite) {
        if (bipartite->first + bipartite->second != n)
            throw FormatError(source, bipartite_line, "bipartite part sizes do not add up to n");
        for (auto [u, v] : result.graph.edges())
            if ((u < bipartite->first) == (v < bipartite->first))
                throw FormatError(source, bipartite_line, "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " lies inside one part");
        result.left_size = static_cast<unsigned>(bipartite->first);
    }
    return result;
}

auto ramsey::save_graph(const std::string & path, const Graph & g, std::optional<unsigned> left_size) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InvalidArgument("cannot write '" + path + "'");
    write_graph(out, g, left_size);
}

auto ramsey::load_graph(const std::string & path) -> GraphFile
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InvalidArgument("cannot read '" + path + "'");
    return read_graph(in, path);
}

auto ramsey::certificate_to_json(const RamseyCertificate & c) -> std::string
{
    Json j;
    j["format_version"] = certificate_format_version;
    j["claim"] = c.claim;
    j["forbidden"] = c.forbidden;
    j["witness"] = {
        { "provenance", c.provenance },
        { "family", c.family },
        { "parameters", Json::object() },
        { "transformations", c.transformations },
        { "seeds", c.seeds }
    };
    for (auto & [k, v] : c.parameters)
        j["witness"]["parameters"][k] = v;
    j["n"] = c.n;
    j["t"] = c.t;
    j["alpha"] = { { "value", c.alpha }, { "mode", c.alpha_mode }, { "witness", c.alpha_witness } };
    j["freeness_method"] = c.freeness_method;
    if (c.sampling) {
        auto & s = *c.sampling;
        j["sampling"] = {
            { "host_provenance", s.host_provenance },
            { "host_n", s.host_n },
            { "seed", s.seed },
            { "lambda", s.lambda },
            { "lambda_source", s.lambda_source },
            { "p_formula", s.p_formula },
            { "p", s.p },
            { "p_overridden", s.p_overridden },
            { "sampled", s.sampled },
            { "removed", s.removed },
            { "threshold_t", s.threshold_t },
            { "t_meets_threshold", s.t_meets_threshold }
        };
    }
    j["edge_hash"] = c.edge_hash;
    j["tool_version"] = c.tool_version;
    j["digest"] = c.digest;
    return j.dump(2) + "\n";
}

namespace
{
    struct Reader
    {
        const std::string & source;

        auto fail(const std::string & message) const -> FormatError
        {
            return FormatError(source, 0, message);
        }

        auto keys(const Json & j, const std::string & where, std::set<std::string> required,
                std::set<std::string> optional = {}) const -> void
        {
            if (! j.is_object())
                throw fail(where + " must be an object");
            for (auto & [k, v] : j.items())
                if (! required.count(k) && ! optional.count(k))
                    throw fail("unknown key '" + k + "' in " + where);
            for (auto & k : required)
                if (! j.contains(k))
                    throw fail("missing key '" + k + "' in " + where);
        }

        auto string(const Json & j, const std::string & key) const -> std::string
        {
            if (! j.at(key).is_string())
                throw fail("'" + key + "' must be a string");
            return j.at(key).get<std::string>();
        }

        auto unsigned_number(const Json & j, const std::string & key) const -> std::uint64_t
        {
            if (! j.at(key).is_number_unsigned() && ! (j.at(key).is_number_integer() && j.at(key).get<std::int64_t>() >= 0))
                throw fail("'" + key + "' must be a non-negative integer");
            return j.at(key).get<std::uint64_t>();
        }

        auto real(const Json & j, const std::string & key) const -> double
        {
            if (! j.at(key).is_number())
                throw fail("'" + key + "' must be a number");
            return j.at(key).get<double>();
        }

        auto boolean(const Json & j, const std::string & key) const -> bool
        {
            if (! j.at(key).is_boolean())
                throw fail("'" + key + "' must be true or false");
            return j.at(key).get<bool>();
        }

        template <typename T>
        auto list(const Json & j, const std::string & key) const -> std::vector<T>
        {
            if (! j.at(key).is_array())
                throw fail("'" + key + "' must be an array");
            std::vector<T> out;
            for (auto & e : j.at(key)) {
                if constexpr (std::is_same_v<T, std::string>) {
                    if (! e.is_string())
                        throw fail("'" + key + "' must hold strings");
                }
                else if (! e.is_number_unsigned())
                    throw fail("'" + key + "' must hold non-negative integers");
                out.push_back(e.get<T>());
            }
            return out;
        }
    };
}

auto ramsey::certificate_from_json(const std::string & text, const std::string & source) -> RamseyCertificate
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw FormatError(source, 0, e.what());
    }

    Reader r{ source };
    r.keys(j, "certificate",
            { "format_version", "claim", "forbidden", "witness", "n", "t", "alpha", "freeness_method",
              "edge_hash", "tool_version", "digest" },
            { "sampling" });
    if (r.unsigned_number(j, "format_version") != certificate_format_version)
        throw r.fail("unsupported format_version");

    RamseyCertificate c;
    c.claim = r.string(j, "claim");
    c.forbidden = r.string(j, "forbidden");

    auto & w = j.at("witness");
    r.keys(w, "witness", { "provenance", "family", "parameters", "transformations", "seeds" });
    c.provenance = r.string(w, "provenance");
    c.family = r.string(w, "family");
    if (! w.at("parameters").is_object())
        throw r.fail("'parameters' must be an object");
    for (auto & [k, v] : w.at("parameters").items())
        c.parameters[k] = r.unsigned_number(w.at("parameters"), k);
    c.transformations = r.list<std::string>(w, "transformations");
    c.seeds = r.list<std::uint64_t>(w, "seeds");

    c.n = r.unsigned_number(j, "n");
    c.t = r.unsigned_number(j, "t");

    auto & a = j.at("alpha");
    r.keys(a, "alpha", { "value", "mode", "witness" });
    auto alpha = r.unsigned_number(a, "value");
    if (alpha > 0xffffffffULL)
        throw r.fail("'alpha.value' out of range");
    c.alpha = static_cast<unsigned>(alpha);
    c.alpha_mode = r.string(a, "mode");
    for (auto v : r.list<std::uint64_t>(a, "witness")) {
        if (v > 0xffffffffULL)
            throw r.fail("alpha witness vertex out of range");
        c.alpha_witness.push_back(static_cast<Vertex>(v));
    }

    c.freeness_method = r.string(j, "freeness_method");

    if (j.contains("sampling")) {
        auto & s = j.at("sampling");
        r.keys(s, "sampling", { "host_provenance", "host_n", "seed", "lambda", "lambda_source", "p_formula", "p", "p_overridden",
                "sampled", "removed", "threshold_t", "t_meets_threshold" });
        SamplingRecord rec;
        rec.host_provenance = r.string(s, "host_provenance");
        rec.host_n = r.unsigned_number(s, "host_n");
        rec.seed = r.unsigned_number(s, "seed");
        rec.lambda = r.real(s, "lambda");
        rec.lambda_source = r.string(s, "lambda_source");
        rec.p_formula = r.real(s, "p_formula");
        rec.p = r.real(s, "p");
        rec.p_overridden = r.boolean(s, "p_overridden");
        for (auto v : r.list<std::uint64_t>(s, "sampled"))
            rec.sampled.push_back(static_cast<Vertex>(v));
        for (auto v : r.list<std::uint64_t>(s, "removed"))
            rec.removed.push_back(static_cast<Vertex>(v));
        rec.threshold_t = r.unsigned_number(s, "threshold_t");
        rec.t_meets_threshold = r.boolean(s, "t_meets_threshold");
        c.sampling = rec;
    }

    c.edge_hash = r.string(j, "edge_hash");
    c.tool_version = r.string(j, "tool_version");
    c.digest = r.string(j, "digest");
    return c;
}

auto ramsey::save_certificate(const std::string & path, const RamseyCertificate & c) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << certificate_to_json(c);
}

auto ramsey::load_certificate(const std::string & path) -> RamseyCertificate
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return certificate_from_json(s.str(), path);
}
