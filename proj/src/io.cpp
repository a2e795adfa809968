#include "contgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

namespace contgraph {

ParseError::ParseError(int line, const std::string& what)
    : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokens(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

int parse_int(const std::string& s, const char* what)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || used == 0 || v < INT32_MIN || v > INT32_MAX)
        throw InvalidInput(std::string("expected integer ") + what + ", got '" + s + "'");
    return static_cast<int>(v);
}

Rational parse_rational(const std::string& s)
{
    try {
        return Rational::parse(s);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
}

bool blank(const std::string& line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads lines, skipping blank ones; rethrows InvalidInput from `body` as ParseError with the line number.
template <typename Body>
void for_each_line(std::istream& in, int& lineno, Body&& body)
{
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (blank(line))
            continue;
        try {
            body(line);
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidInput& e) {
            throw ParseError(lineno, e.what());
        }
    }
}

// `# key=value key=value`
std::vector<std::pair<std::string, std::string>> header_fields(const std::string& line)
{
    auto toks = tokens(line);
    if (toks.empty() || toks[0] != "#")
        throw InvalidInput("expected header line starting with '# '");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
            throw InvalidInput("malformed header field '" + toks[i] + "'");
        out.emplace_back(toks[i].substr(0, eq), toks[i].substr(eq + 1));
    }
    return out;
}

std::string field(const std::vector<std::pair<std::string, std::string>>& fields, const std::string& key)
{
    for (const auto& [k, v] : fields)
        if (k == key)
            return v;
    throw InvalidInput("header lacks '" + key + "='");
}

}  // namespace

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    return in;
}

ContinuousGraph read_graph(std::istream& in)
{
    int lineno = 0;
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for_each_line(in, lineno, [&](const std::string& line) {
        auto toks = tokens(line);
        if (toks.size() != 2)
            throw InvalidInput(header ? "expected 'u v'" : "expected 'n m'");
        int a = parse_int(toks[0], header ? "endpoint" : "endpoint count");
        int b = parse_int(toks[1], header ? "endpoint" : "edge count");
        if (!header) {
            if (a < 0 || b < 0)
                throw InvalidInput("negative count");
            header.emplace(a, b);
            return;
        }
        if (static_cast<int>(edges.size()) == header->second)
            throw InvalidInput("more edge lines than the declared " + std::to_string(header->second));
        const int n = header->first;
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InvalidInput("endpoint id out of range 0.." + std::to_string(n - 1));
        if (a == b)
            throw InvalidInput("self-loop on endpoint " + std::to_string(a));
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw InvalidInput("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        edges.push_back({a, b});
    });
    if (!header)
        throw ParseError(lineno + 1, "missing 'n m' header");
    if (static_cast<int>(edges.size()) != header->second)
        throw ParseError(lineno + 1, "expected " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    return ContinuousGraph(header->first, std::move(edges));
}

ContinuousGraph read_graph_file(const std::string& path)
{
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const ContinuousGraph& g)
{
    out << g.num_endpoints() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

Point parse_point(const ContinuousGraph& g, std::string_view text)
{
    auto toks = tokens(text);
    if (toks.size() == 2 && toks[0] == "v") {
        Point p = Point::endpoint(parse_int(toks[1], "endpoint id"));
        validate_point(g, p);
        return p;
    }
    if (toks.size() == 3 && toks[0] == "e")
        return Point::on_edge(g, parse_int(toks[1], "edge index"), parse_rational(toks[2]));
    throw InvalidInput("expected point literal 'v <id>' or 'e <edge> <num>/<den>', got '" + std::string(text) + "'");
}

SolutionFile read_solution(const ContinuousGraph& g, std::istream& in)
{
    int lineno = 0;
    bool have_header = false;
    SolutionFile out;
    for_each_line(in, lineno, [&](const std::string& line) {
        if (!have_header) {
            auto fields = header_fields(line);
            out.radius = parse_rational(field(fields, "r"));
            if (out.radius.sign() <= 0)
                throw InvalidInput("radius must be positive");
            out.value = parse_int(field(fields, "value"), "value");
            try {
                out.kind = parse_certificate_kind(field(fields, "kind"));
            } catch (const std::invalid_argument& e) {
                throw InvalidInput(e.what());
            }
            have_header = true;
            return;
        }
        if (line[line.find_first_not_of(" \t")] == '#')
            return;
        out.points.push_back(parse_point(g, line));
    });
    if (!have_header)
        throw ParseError(1, "missing '# r=a/b value=V kind=K' header");
    if (out.value != static_cast<int>(out.points.size()))
        throw ParseError(lineno, "header says value=" + std::to_string(out.value) + " but file lists " + std::to_string(out.points.size()) + " points");
    return out;
}

void write_solution(std::ostream& out, const Rational& radius, const std::vector<Point>& points, CertificateKind kind)
{
    out << "# r=" << radius.str() << " value=" << points.size() << " kind=" << to_string(kind) << '\n';
    for (const Point& p : points)
        out << p.literal() << '\n';
}

ColoredCover read_colored_cover(const ContinuousGraph& g, std::istream& in)
{
    int lineno = 0;
    bool have_header = false;
    int declared = 0;
    ColoredCover out;
    for_each_line(in, lineno, [&](const std::string& line) {
        if (!have_header) {
            auto fields = header_fields(line);
            Rational r = parse_rational(field(fields, "r"));
            if (r != Rational(1, 2))
                throw InvalidInput("coloured covers use radius 1/2, header says " + r.str());
            declared = parse_int(field(fields, "colors"), "colour count");
            have_header = true;
            return;
        }
        if (line[line.find_first_not_of(" \t")] == '#')
            return;
        auto cut = line.find_last_not_of(" \t\r");
        auto space = line.find_last_of(" \t", cut);
        if (space == std::string::npos)
            throw InvalidInput("expected '<point literal> <colour>'");
        int colour = parse_int(line.substr(space + 1, cut - space), "colour");
        if (colour < 1)
            throw InvalidInput("colours are positive integers");
        out.entries.push_back({parse_point(g, line.substr(0, space)), colour});
    });
    if (!have_header)
        throw ParseError(1, "missing '# r=1/2 colors=c' header");
    if (out.colors_used() > declared)
        throw ParseError(lineno, "file uses " + std::to_string(out.colors_used()) + " colours but declares " + std::to_string(declared));
    return out;
}

void write_colored_cover(std::ostream& out, const ColoredCover& cc)
{
    out << "# r=" << cc.radius.str() << " colors=" << cc.colors_used() << '\n';
    for (const ColoredBall& b : cc.entries)
        out << b.center.literal() << ' ' << b.color << '\n';
}

std::vector<Subtree> read_subtrees(const ContinuousGraph& g, std::istream& in)
{
    int lineno = 0;
    std::vector<Subtree> out;
    for_each_line(in, lineno, [&](const std::string& line) {
        if (line[line.find_first_not_of(" \t")] == '#')
            return;
        std::vector<Segment> segments;
        std::vector<int> endpoints;
        std::istringstream items(line);
        for (std::string item; std::getline(items, item, ';');) {
            auto toks = tokens(item);
            if (toks.size() == 2 && toks[0] == "v") {
                endpoints.push_back(parse_int(toks[1], "endpoint id"));
            } else if (toks.size() == 4 && toks[0] == "e") {
                segments.push_back({parse_int(toks[1], "edge index"), parse_rational(toks[2]), parse_rational(toks[3])});
            } else {
                throw InvalidInput("expected 'e <idx> <lo> <hi>' or 'v <id>', got '" + item + "'");
            }
        }
        out.emplace_back(g, std::move(segments), std::move(endpoints));
    });
    return out;
}

void write_subtrees(std::ostream& out, const std::vector<Subtree>& subtrees)
{
    for (const Subtree& t : subtrees)
        out << t.literal() << '\n';
}

}  // namespace contgraph
