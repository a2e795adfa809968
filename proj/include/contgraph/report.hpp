#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "contgraph/bramble.hpp"
#include "contgraph/graph.hpp"
#include "contgraph/rational.hpp"
#include "contgraph/search.hpp"

namespace contgraph {

/// Rows of strings under named columns, in a fixed order.
struct ExperimentReport {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
    /// Right-aligned columns separated by two spaces.
    std::string to_text() const;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

/// `a..b` or a single integer.
IntRange parse_range(const std::string& text);

/// Per n: alpha, alpha_1 and their ratio; beta, beta_1 and their ratio; whether alpha_1 + beta_1 = n.
ExperimentReport run_gap_report(const std::string& family, IntRange n_range, std::int64_t denominator,
                                const SearchOptions& options = {});

/// Columns n, alpha1, beta1, sum, plus the duality verdict and refinement stability.
ExperimentReport run_duality_report(const std::string& family, IntRange n_range, std::int64_t denominator, int levels,
                                    const SearchOptions& options = {});

/// Columns n, constructive_colors, grid_exact_colors. The constructive count applies to the complete family only.
ExperimentReport run_coloring_report(const std::string& family, IntRange n_range, std::int64_t denominator, int max_colors,
                                     int center_budget, const SearchOptions& options = {});

/// Combinatorial treewidth, combinatorial bramble number and continuous 1-bramble number side by side.
ExperimentReport run_bramble_report(const std::vector<std::pair<std::string, ContinuousGraph>>& graphs, std::int64_t denominator,
                                    const BrambleCaps& caps, const SearchOptions& options = {});

/// Measured alpha_r + beta_r over radii, raw values only.
ExperimentReport run_sum_table(const std::string& family, IntRange n_range, const std::vector<Rational>& radii,
                               const SearchOptions& options = {});

enum class SolutionKind { packing, cover, coloring, bramble };
SolutionKind parse_solution_kind(const std::string& s);

struct VerifyOutcome {
    bool ok = false;
    std::string diagnostic;  // first violated constraint, or a summary when ok
};

/// Parses both files and checks the solution exactly. Parse problems throw ParseError.
/// `radius` is required for brambles, whose file carries no header.
VerifyOutcome verify_solution_file(SolutionKind kind, const std::string& graph_path, const std::string& solution_path,
                                   const std::optional<Rational>& radius = std::nullopt);

/// Writes `<dir>/<name>.csv`; returns the path.
std::string emit_figures_data(const ExperimentReport& report, const std::string& dir, const std::string& name);

}  // namespace contgraph
