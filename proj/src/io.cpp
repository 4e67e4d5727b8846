#include "thetalab/io.hpp"

#include "thetalab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace thetalab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::string_view strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<VertexId> parse_labels(std::string_view s, std::size_t line_no)
{
    std::vector<VertexId> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        if (i >= s.size())
            break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        const std::string_view token = s.substr(i, j - i);
        VertexId v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(line_no, "expected a nonnegative vertex label, got '" + std::string(token) + "'");
        out.push_back(v);
        i = j;
    }
    return out;
}

} // namespace

SimplicialComplex parse_complex(std::string_view text)
{
    std::set<VertexId> ground;
    std::vector<FaceSet> facets;
    enum class Literal { kNone, kVoid, kEmpty } literal = Literal::kNone;

    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        const std::string_view line = strip_comment(raw);
        if (line.empty())
            continue;
        if (line == "VOID" || line == "EMPTY") {
            if (literal != Literal::kNone)
                throw ParseError(line_no, "VOID/EMPTY given more than once");
            literal = line == "VOID" ? Literal::kVoid : Literal::kEmpty;
            continue;
        }
        if (line.starts_with("ghost:")) {
            for (VertexId v : parse_labels(line.substr(6), line_no))
                ground.insert(v);
            continue;
        }
        FaceSet f = parse_labels(line, line_no);
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ParseError(line_no, "facet repeats a vertex");
        ground.insert(f.begin(), f.end());
        facets.push_back(std::move(f));
    }

    if (literal != Literal::kNone && !facets.empty())
        throw ParseError(line_no, "VOID/EMPTY cannot be combined with facet lines");
    if (literal == Literal::kNone && facets.empty())
        throw ParseError(line_no, "no facets; write VOID or EMPTY for those complexes");

    std::vector<VertexId> g(ground.begin(), ground.end());
    if (literal == Literal::kVoid)
        return SimplicialComplex::void_complex(std::move(g));
    if (literal == Literal::kEmpty)
        return SimplicialComplex::empty_complex(std::move(g));
    return SimplicialComplex::from_facets(std::move(g), facets);
}

std::string write_complex(const SimplicialComplex& x)
{
    std::ostringstream out;
    const auto ghosts = x.ghosts();
    if (!ghosts.empty()) {
        out << "ghost:";
        for (VertexId v : ghosts)
            out << ' ' << v;
        out << '\n';
    }
    if (x.is_void()) {
        out << "VOID\n";
    } else if (x.is_empty()) {
        out << "EMPTY\n";
    } else {
        for (const FaceSet& f : x.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i)
                out << (i ? " " : "") << f[i];
            out << '\n';
        }
    }
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    std::set<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        const std::string_view line = strip_comment(raw);
        if (line.empty())
            continue;
        if (line.starts_with("vertex")) {
            const auto labels = parse_labels(line.substr(6), line_no);
            if (labels.size() != 1)
                throw ParseError(line_no, "'vertex' takes exactly one label");
            vertices.insert(labels.front());
            continue;
        }
        const auto labels = parse_labels(line, line_no);
        if (labels.size() != 2)
            throw ParseError(line_no, "edge lines need exactly two labels");
        if (labels[0] == labels[1])
            throw ParseError(line_no, "loops are not allowed");
        vertices.insert(labels[0]);
        vertices.insert(labels[1]);
        edges.emplace_back(labels[0], labels[1]);
    }
    if (vertices.size() > kMaxGround)
        throw SizeError("graphs are limited to 64 vertices");

    std::vector<VertexId> labels(vertices.begin(), vertices.end());
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(labels.size()));
    for (auto [a, b] : edges)
        g.add_edge(index[a], index[b]);
    g.set_labels(std::move(labels));
    return g;
}

std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            out << "vertex " << g.label(v) << '\n';
    }
    for (auto [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << text;
}

LoadedObject load_object(const std::filesystem::path& path)
{
    const std::string text = read_text_file(path);
    if (path.extension() == ".graph")
        return parse_graph(text);
    return parse_complex(text);
}

} // namespace thetalab
