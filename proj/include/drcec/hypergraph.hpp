#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drcec {

using NodeId = std::uint32_t;
using ColorId = std::uint32_t;

struct Hyperedge {
  ColorId color = 0;
  std::vector<NodeId> nodes;  // sorted, distinct

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Edge-labeled hypergraph with a cached color-degree table.
///
/// Nodes are the dense ids 0..num_nodes()-1 and colors the dense indices
/// into colors(). The object is immutable once constructed.
class LabeledHypergraph {
 public:
  LabeledHypergraph() = default;

  /// Validates and normalizes `edges` (node lists are sorted). Throws
  /// InputError on out-of-range ids, duplicate nodes, empty edges or an
  /// unknown color index.
  LabeledHypergraph(std::size_t num_nodes, std::vector<std::string> colors,
                    std::vector<Hyperedge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_colors() const { return colors_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& colors() const { return colors_; }
  const std::string& color_name(ColorId c) const { return colors_.at(c); }
  const std::vector<Hyperedge>& edges() const { return edges_; }

  /// d_v^c: number of edges of color c containing v.
  int color_degree(NodeId v, ColorId c) const {
    return degrees_[static_cast<std::size_t>(v) * colors_.size() + c];
  }
  /// Row d_v^. of the degree table (length num_colors()).
  std::span<const int> color_degrees(NodeId v) const {
    return {degrees_.data() + static_cast<std::size_t>(v) * colors_.size(),
            colors_.size()};
  }
  /// d(v) = sum over colors of d_v^c.
  int degree(NodeId v) const { return totals_[v]; }
  int d_max() const { return d_max_; }
  std::size_t max_edge_size() const { return max_edge_size_; }
  /// Sum over all nodes of d(v).
  long total_degree() const { return total_degree_; }

  friend bool operator==(const LabeledHypergraph&, const LabeledHypergraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<std::string> colors_;
  std::vector<Hyperedge> edges_;
  std::vector<int> degrees_;  // row-major num_nodes x num_colors
  std::vector<int> totals_;
  int d_max_ = 0;
  std::size_t max_edge_size_ = 0;
  long total_degree_ = 0;
};

/// Total assignment of nodes to colors.
struct Clustering {
  std::vector<ColorId> assignment;

  std::size_t size() const { return assignment.size(); }
  ColorId operator[](std::size_t v) const { return assignment[v]; }

  friend bool operator==(const Clustering&, const Clustering&) = default;
  friend auto operator<=>(const Clustering&, const Clustering&) = default;
};

/// Throws InputError unless `c` assigns every node of `h` to a valid color.
void validate_clustering(const LabeledHypergraph& h, const Clustering& c);

/// Reads the line-oriented text format:
///
///   # comment
///   nodes <n>                 (optional, must precede edges)
///   colors <name> <name> ...  (optional, pre-registers color order)
///   <color-name> <id> <id> ...
///
/// Colors not pre-registered are added in first-appearance order. Without a
/// `nodes` header the node count is one past the largest id seen.
LabeledHypergraph parse_hypergraph(std::istream& in);
LabeledHypergraph parse_hypergraph(std::string_view text);
LabeledHypergraph load_hypergraph(const std::string& path);

/// Inverse of parse_hypergraph; emits both headers so colors without edges
/// survive a round trip.
std::string write_hypergraph(const LabeledHypergraph& h);

/// One "<id> <color-name>" line per node, in node order.
std::string write_clustering(const Clustering& c, std::span<const std::string> colors);

/// Reads "<id> <color-name>" lines; every node of `h` must appear exactly once.
Clustering parse_clustering(std::string_view text, const LabeledHypergraph& h);

}  // namespace drcec
