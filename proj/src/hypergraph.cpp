#include "drcec/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "drcec/error.hpp"

namespace drcec {

namespace {

// Whitespace tokens up to an optional '#' comment.
std::vector<std::string_view> split_ws(std::string_view line) {
  line = line.substr(0, line.find('#'));
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_count(std::string_view tok, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

LabeledHypergraph::LabeledHypergraph(std::size_t num_nodes, std::vector<std::string> colors,
                                     std::vector<Hyperedge> edges)
    : num_nodes_(num_nodes), colors_(std::move(colors)), edges_(std::move(edges)) {
  const std::size_t k = colors_.size();
  degrees_.assign(num_nodes_ * k, 0);
  totals_.assign(num_nodes_, 0);

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Hyperedge& e = edges_[i];
    if (e.color >= k) {
      throw InputError("edge " + std::to_string(i) + ": color index out of range");
    }
    if (e.nodes.empty()) {
      throw InputError("edge " + std::to_string(i) + ": empty hyperedge");
    }
    std::sort(e.nodes.begin(), e.nodes.end());
    if (std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end()) {
      throw InputError("edge " + std::to_string(i) + ": duplicate node in edge");
    }
    if (e.nodes.back() >= num_nodes_) {
      throw InputError("edge " + std::to_string(i) + ": node id " +
                       std::to_string(e.nodes.back()) + " out of range");
    }
    for (NodeId v : e.nodes) {
      ++degrees_[static_cast<std::size_t>(v) * k + e.color];
      ++totals_[v];
    }
    max_edge_size_ = std::max(max_edge_size_, e.nodes.size());
  }
  for (int d : totals_) {
    d_max_ = std::max(d_max_, d);
    total_degree_ += d;
  }
}

void validate_clustering(const LabeledHypergraph& h, const Clustering& c) {
  if (c.size() != h.num_nodes()) {
    throw InputError("clustering has " + std::to_string(c.size()) + " entries, expected " +
                     std::to_string(h.num_nodes()));
  }
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] >= h.num_colors()) {
      throw InputError("node " + std::to_string(v) + " assigned to unknown color");
    }
  }
}

LabeledHypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::string> colors;
  std::unordered_map<std::string, ColorId> color_index;
  std::vector<Hyperedge> edges;
  std::uint64_t declared_nodes = 0;
  bool has_header = false;
  std::uint64_t max_id_plus_one = 0;

  auto intern = [&](std::string_view name) {
    auto [it, inserted] = color_index.emplace(std::string(name), colors.size());
    if (inserted) colors.emplace_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks.front() == "nodes") {
      if (has_header || !edges.empty()) fail_at(line_no, "'nodes' header must come first");
      if (toks.size() != 2 || !parse_count(toks[1], declared_nodes)) {
        fail_at(line_no, "malformed 'nodes' header");
      }
      has_header = true;
      continue;
    }
    if (toks.front() == "colors") {
      if (!edges.empty()) fail_at(line_no, "'colors' header must precede edges");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (color_index.count(std::string(toks[i]))) {
          fail_at(line_no, "color '" + std::string(toks[i]) + "' declared twice");
        }
        intern(toks[i]);
      }
      continue;
    }

    if (toks.size() < 2) fail_at(line_no, "edge needs a color and at least one node");
    Hyperedge e;
    e.color = intern(toks.front());
    for (std::size_t i = 1; i < toks.size(); ++i) {
      std::uint64_t id = 0;
      if (!parse_count(toks[i], id) || id > UINT32_MAX - 1) {
        fail_at(line_no, "bad node id '" + std::string(toks[i]) + "'");
      }
      if (has_header && id >= declared_nodes) {
        fail_at(line_no, "node id " + std::to_string(id) + " out of range (nodes " +
                             std::to_string(declared_nodes) + ")");
      }
      e.nodes.push_back(static_cast<NodeId>(id));
      max_id_plus_one = std::max(max_id_plus_one, id + 1);
    }
    std::sort(e.nodes.begin(), e.nodes.end());
    if (std::adjacent_find(e.nodes.begin(), e.nodes.end()) != e.nodes.end()) {
      fail_at(line_no, "duplicate node in edge");
    }
    edges.push_back(std::move(e));
  }

  const std::size_t n = has_header ? declared_nodes : max_id_plus_one;
  return LabeledHypergraph(n, std::move(colors), std::move(edges));
}

LabeledHypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

LabeledHypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_hypergraph(in);
}

std::string write_hypergraph(const LabeledHypergraph& h) {
  std::string out = "nodes " + std::to_string(h.num_nodes()) + "\n";
  if (h.num_colors() > 0) {
    out += "colors";
    for (const auto& name : h.colors()) out += " " + name;
    out += "\n";
  }
  for (const auto& e : h.edges()) {
    out += h.color_name(e.color);
    for (NodeId v : e.nodes) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

std::string write_clustering(const Clustering& c, std::span<const std::string> colors) {
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    out += std::to_string(v);
    out += ' ';
    out += colors[c[v]];
    out += '\n';
  }
  return out;
}

Clustering parse_clustering(std::string_view text, const LabeledHypergraph& h) {
  std::unordered_map<std::string_view, ColorId> color_index;
  for (ColorId c = 0; c < h.num_colors(); ++c) color_index.emplace(h.color_name(c), c);

  constexpr ColorId kUnset = UINT32_MAX;
  Clustering out{std::vector<ColorId>(h.num_nodes(), kUnset)};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    std::uint64_t id = 0;
    if (toks.size() != 2 || !parse_count(toks[0], id)) fail_at(line_no, "expected '<id> <color>'");
    if (id >= h.num_nodes()) fail_at(line_no, "node id out of range");
    auto it = color_index.find(toks[1]);
    if (it == color_index.end()) fail_at(line_no, "unknown color '" + std::string(toks[1]) + "'");
    if (out.assignment[id] != kUnset) fail_at(line_no, "node assigned twice");
    out.assignment[id] = it->second;
  }
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] == kUnset) throw InputError("node " + std::to_string(v) + " has no assignment");
  }
  return out;
}

}  // namespace drcec
