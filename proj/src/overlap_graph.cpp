#include "cdrkit/overlap_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdrkit {

OrientedGraph::OrientedGraph(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<int>& oriented_labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  const auto n = labels_.size();
  oriented_.assign(n, 0);
  adj_.assign(n * n, 0);
  auto require = [&](int l) {
    auto idx = index_of(l);
    if (!idx) throw std::invalid_argument("unknown vertex label " + std::to_string(l));
    return *idx;
  };
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("self-loop at " + std::to_string(a));
    set_edge(require(a), require(b), true);
  }
  for (int l : oriented_labels) oriented_[require(l)] = 1;
}

std::optional<std::size_t> OrientedGraph::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> OrientedGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < labels_.size(); ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t OrientedGraph::degree(std::size_t v) const {
  const auto n = labels_.size();
  return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<std::ptrdiff_t>(v * n),
                                             adj_.begin() + static_cast<std::ptrdiff_t>((v + 1) * n), 1));
}

std::vector<std::pair<int, int>> OrientedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    for (std::size_t b = a + 1; b < labels_.size(); ++b) {
      if (adjacent(a, b)) out.emplace_back(labels_[a], labels_[b]);
    }
  }
  return out;
}

std::vector<int> OrientedGraph::oriented_labels() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (oriented(v)) out.push_back(labels_[v]);
  }
  return out;
}

std::vector<int> OrientedGraph::unoriented_labels() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!oriented(v)) out.push_back(labels_[v]);
  }
  return out;
}

std::string OrientedGraph::key() const {
  const auto n = labels_.size();
  const std::size_t pairs = n > 1 ? n * (n - 1) / 2 : 0;
  std::string out(n + (pairs + 7) / 8, '\0');
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<char>(oriented_[v]);
  std::size_t bit = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++bit) {
      if (adj_[a * n + b]) out[n + bit / 8] = static_cast<char>(out[n + bit / 8] | (1 << (bit % 8)));
    }
  }
  return out;
}

std::size_t GraphHash::operator()(const OrientedGraph& g) const { return std::hash<std::string>{}(g.key()); }

void OrientedGraph::set_edge(std::size_t a, std::size_t b, bool present) {
  if (a == b) throw std::invalid_argument("self-loop");
  const auto n = labels_.size();
  adj_[a * n + b] = adj_[b * n + a] = present ? 1 : 0;
}

OrientedGraph build_overlap_graph(const SignedPermutation& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> labels;
  std::vector<std::array<std::size_t, 2>> arcs;
  std::vector<int> oriented;
  for (int i = 1; i < n; ++i) {
    const auto occ = occurrences_of(perm, Pointer{i});
    labels.push_back(i);
    arcs.push_back({occ[0].key(), occ[1].key()});
    if (occ[0].entry_sign != occ[1].entry_sign) oriented.push_back(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      const auto [a1, a2] = arcs[a];
      const auto [b1, b2] = arcs[b];
      if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)) {
        edges.emplace_back(labels[a], labels[b]);
      }
    }
  }
  return OrientedGraph(std::move(labels), edges, oriented);
}

OrientedGraph local_complement(const OrientedGraph& g, std::span<const int> labels) {
  std::vector<std::size_t> s;
  for (int l : labels) {
    if (auto idx = g.index_of(l)) s.push_back(*idx);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  OrientedGraph out = g;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.set_oriented(s[i], !g.oriented(s[i]));
    for (std::size_t j = i + 1; j < s.size(); ++j) out.set_edge(s[i], s[j], !g.adjacent(s[i], s[j]));
  }
  return out;
}

std::vector<int> closed_neighborhood(const OrientedGraph& g, int label) {
  const auto v = g.index_of(label);
  if (!v) throw std::out_of_range("unknown vertex " + std::to_string(label));
  std::vector<int> out{label};
  for (auto u : g.neighbors(*v)) out.push_back(g.label(u));
  std::sort(out.begin(), out.end());
  return out;
}

OrientedGraph gcdr(const OrientedGraph& g, int label) {
  const auto v = g.index_of(label);
  if (!v) throw std::out_of_range("unknown vertex " + std::to_string(label));
  if (!g.oriented(*v)) throw NotApplicable("gcdr at unoriented vertex " + std::to_string(label));
  const auto s = closed_neighborhood(g, label);
  return local_complement(g, s);
}

std::pair<OrientedGraph, bool> try_gcdr(const OrientedGraph& g, int label) {
  const auto v = g.index_of(label);
  if (!v || !g.oriented(*v)) return {g, false};
  return {gcdr(g, label), true};
}

ComponentReport component_report(const OrientedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<int> comp(n, -1);
  ComponentReport report;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    Component c;
    std::vector<std::size_t> stack{start};
    comp[start] = static_cast<int>(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      c.labels.push_back(g.label(v));
      c.oriented = c.oriented || g.oriented(v);
      for (auto u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = static_cast<int>(start);
          stack.push_back(u);
        }
      }
    }
    std::sort(c.labels.begin(), c.labels.end());
    (c.labels.size() > 1 ? report.components : report.isolated).push_back(std::move(c));
  }
  return report;
}

bool has_unoriented_component(const OrientedGraph& g) {
  const auto r = component_report(g);
  return std::any_of(r.components.begin(), r.components.end(), [](const auto& c) { return !c.oriented; });
}

bool is_terminal(const OrientedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.oriented(v)) return false;
  }
  return true;
}

bool is_total_terminal(const OrientedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.oriented(v) || g.degree(v) > 0) return false;
  }
  return true;
}

OrientedGraph random_oriented_graph(std::size_t vertices, double edge_prob, double oriented_prob,
                                    std::mt19937_64& rng) {
  // Raw 53-bit draws keep the stream identical across standard libraries.
  auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  std::vector<int> labels(vertices);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<int> oriented;
  for (int l : labels) {
    if (coin(oriented_prob)) oriented.push_back(l);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a + 1; b < vertices; ++b) {
      if (coin(edge_prob)) edges.emplace_back(labels[a], labels[b]);
    }
  }
  return OrientedGraph(std::move(labels), edges, oriented);
}

std::string to_dot(const OrientedGraph& g, LabelStyle style) {
  std::ostringstream out;
  out << "graph overlap {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int l = g.label(v);
    const auto text = style == LabelStyle::Pointer ? to_string(Pointer{l}) : std::to_string(l);
    out << "  v" << l << " [label=\"" << text << "\"";
    if (g.oriented(v)) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (auto [a, b] : g.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const OrientedGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.label(v) << (g.oriented(v) ? " oriented" : " unoriented") << "\n";
  }
  for (auto [a, b] : g.edges()) out << "edge " << a << " " << b << "\n";
  return out.str();
}

OrientedGraph parse_graph_text(std::string_view text) {
  std::vector<int> labels;
  std::vector<int> oriented;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word) || word.front() == '#') continue;
    auto fail = [&] { throw std::invalid_argument("graph text line " + std::to_string(lineno) + ": '" + line + "'"); };
    std::string rest;
    if (word == "vertex") {
      int l = 0;
      std::string flag;
      if (!(fields >> l >> flag) || (flag != "oriented" && flag != "unoriented") || (fields >> rest)) fail();
      labels.push_back(l);
      if (flag == "oriented") oriented.push_back(l);
    } else if (word == "edge") {
      int a = 0, b = 0;
      if (!(fields >> a >> b) || (fields >> rest)) fail();
      edges.emplace_back(a, b);
    } else {
      fail();
    }
  }
  return OrientedGraph(std::move(labels), edges, oriented);
}

}  // namespace cdrkit
