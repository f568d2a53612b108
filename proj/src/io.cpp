#include "evenpair/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace evenpair {

namespace {

    std::vector<std::string> split_lines(std::string_view text)
    {
        std::vector<std::string> lines;
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (ch != '\r') {
                cur.push_back(ch);
            }
        }
        if (!cur.empty())
            lines.push_back(cur);
        return lines;
    }

} // namespace

Graph parse_dimacs(std::string_view text)
{
    int n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const std::string& line : split_lines(text)) {
        std::istringstream in(line);
        std::string tag;
        if (!(in >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n != -1)
                throw GraphError("duplicate problem line");
            std::string kind;
            long m = 0;
            if (!(in >> kind >> n >> m) || kind != "edge" || n < 0)
                throw GraphError("malformed problem line: " + line);
            continue;
        }
        if (tag == "e") {
            if (n == -1)
                throw GraphError("edge line before problem line");
            long u = 0, v = 0;
            if (!(in >> u >> v))
                throw GraphError("malformed edge line: " + line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw GraphError("vertex out of range in: " + line);
            if (u == v)
                throw GraphError("self-loop in: " + line);
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            continue;
        }
        throw GraphError("unrecognized line: " + line);
    }
    if (n == -1)
        throw GraphError("missing problem line");
    return Graph::from_edges(n, edges); // duplicates collapse in the adjacency rows
}

std::string write_dimacs(const Graph& g)
{
    // external names are ranks: 1-based positions in ascending id order
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << g.index_of(u) + 1 << ' ' << g.index_of(v) + 1 << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text)
{
    int n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const std::string& line : split_lines(text)) {
        std::istringstream in(line);
        std::string first;
        if (!(in >> first))
            continue;
        if (first[0] == '#')
            continue;
        if (n == -1) {
            try {
                n = std::stoi(first);
            } catch (const std::exception&) {
                throw GraphError("malformed vertex count line: " + line);
            }
            if (n < 0)
                throw GraphError("negative vertex count");
            continue;
        }
        long v = 0;
        long u = std::stol(first);
        if (!(in >> v))
            throw GraphError("malformed edge line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("vertex out of range in: " + line);
        if (u == v)
            throw GraphError("self-loop in: " + line);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (n == -1)
        throw GraphError("missing vertex count line");
    return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << g.index_of(u) << ' ' << g.index_of(v) << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text, GraphFileFormat format)
{
    return format == GraphFileFormat::DimacsCol ? parse_dimacs(text) : parse_edge_list(text);
}

std::string write_graph(const Graph& g, GraphFileFormat format)
{
    return format == GraphFileFormat::DimacsCol ? write_dimacs(g) : write_edge_list(g);
}

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string graph_digest(const Graph& g)
{
    std::uint64_t h = fnv1a64(write_dimacs(g));
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

nlohmann::json genspec_to_json(const GenSpec& spec)
{
    nlohmann::json j;
    j["family"] = to_string(spec.family);
    j["n"] = spec.n;
    j["p"] = spec.p;
    j["seed"] = spec.seed;
    j["max_tries"] = spec.max_tries;
    if (!spec.name.empty())
        j["name"] = spec.name;
    return j;
}

GenSpec genspec_from_json(const nlohmann::json& j)
{
    GenSpec spec;
    spec.family = gen_family_from_string(j.at("family").get<std::string>());
    spec.name = j.value("name", std::string{});
    if (spec.family == GenFamily::NamedInstance) {
        if (spec.name.empty())
            throw GraphError("named_instance spec needs a name");
        return spec;
    }
    spec.n = j.at("n").get<int>();
    spec.p = j.value("p", 0.5);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.max_tries = j.value("max_tries", 1000);
    if (spec.p < 0.0 || spec.p > 1.0)
        throw GraphError("edge probability must lie in [0, 1]");
    return spec;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw GraphError("cannot write file: " + path);
    out << content;
}

} // namespace evenpair
