#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "contgraph/bramble.hpp"
#include "contgraph/coloring.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/packing.hpp"
#include "contgraph/point.hpp"
#include "contgraph/rational.hpp"

namespace contgraph {

/// Malformed file content. `line` is 1-based; the message already names it.
class ParseError : public InvalidInput {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Line 1 `n m`, then m lines `u v`.
ContinuousGraph read_graph(std::istream& in);
ContinuousGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const ContinuousGraph& g);

/// `v <id>` or `e <edge> <num>/<den>` (an integer offset is accepted too).
Point parse_point(const ContinuousGraph& g, std::string_view text);

/// Packing or cover file: header `# r=a/b value=V kind=K`, one point per line.
struct SolutionFile {
    Rational radius;
    int value = 0;
    CertificateKind kind = CertificateKind::construction;
    std::vector<Point> points;
};

SolutionFile read_solution(const ContinuousGraph& g, std::istream& in);
void write_solution(std::ostream& out, const Rational& radius, const std::vector<Point>& points, CertificateKind kind);

/// Header `# r=1/2 colors=c`, then `point-literal color` per line.
ColoredCover read_colored_cover(const ContinuousGraph& g, std::istream& in);
void write_colored_cover(std::ostream& out, const ColoredCover& cc);

/// One subtree per line, `;`-separated `e <idx> <lo> <hi>` / `v <id>` items.
std::vector<Subtree> read_subtrees(const ContinuousGraph& g, std::istream& in);
void write_subtrees(std::ostream& out, const std::vector<Subtree>& subtrees);

/// Opens `path` for reading; throws InvalidInput naming the path on failure.
std::ifstream open_input(const std::string& path);

}  // namespace contgraph
