#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdrkit/perm.hpp"

namespace cdrkit {

/// Finite simple graph with integer vertex labels and an oriented/unoriented
/// flag per vertex. Labels are kept sorted; for permutation graphs the label
/// of pointer (i,i+1) is i.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// Throws std::invalid_argument on duplicate labels, self-loops or edges
  /// naming unknown labels.
  OrientedGraph(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                const std::vector<int>& oriented_labels);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> index_of(int label) const;

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * labels_.size() + b] != 0; }
  bool oriented(std::size_t v) const { return oriented_[v] != 0; }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  /// Label pairs (a < b) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> oriented_labels() const;
  std::vector<int> unoriented_labels() const;

  /// Exact equality: same labels, same edges, same orientation flags.
  bool operator==(const OrientedGraph&) const = default;

  /// Compact encoding of orientation flags and the upper adjacency triangle.
  /// Equal keys imply equal graphs for a fixed label set.
  std::string key() const;

  // Mutators used by the graph operations.
  void set_edge(std::size_t a, std::size_t b, bool present);
  void set_oriented(std::size_t v, bool value) { oriented_[v] = value ? 1 : 0; }

 private:
  std::vector<int> labels_;
  std::vector<std::uint8_t> oriented_;
  std::vector<std::uint8_t> adj_;  // row-major, symmetric, zero diagonal
};

/// Vertices are the n-1 pointers; edges join strictly interleaving arcs;
/// a vertex is oriented when its two ends lie on entries of opposite sign.
OrientedGraph build_overlap_graph(const SignedPermutation& perm);

/// Complements the edges inside S and flips orientation on S. Labels not in
/// the graph are ignored.
OrientedGraph local_complement(const OrientedGraph& g, std::span<const int> labels);

/// Closed neighbourhood {v} + N(v) as labels.
std::vector<int> closed_neighborhood(const OrientedGraph& g, int label);

/// Local complement at the closed neighbourhood of an oriented vertex.
/// Throws NotApplicable when the vertex is unoriented, std::out_of_range when
/// it is unknown.
OrientedGraph gcdr(const OrientedGraph& g, int label);
std::pair<OrientedGraph, bool> try_gcdr(const OrientedGraph& g, int label);

struct Component {
  std::vector<int> labels;
  bool oriented = false;
};

struct ComponentReport {
  std::vector<Component> components;  // size >= 2, ordered by smallest label
  std::vector<Component> isolated;    // singletons, ordered by label
};

ComponentReport component_report(const OrientedGraph& g);
bool has_unoriented_component(const OrientedGraph& g);
/// No oriented vertex remains.
bool is_terminal(const OrientedGraph& g);
/// Every vertex is isolated and unoriented.
bool is_total_terminal(const OrientedGraph& g);

/// Each vertex oriented with probability oriented_prob, each edge present
/// with probability edge_prob. Labels 1..vertices.
OrientedGraph random_oriented_graph(std::size_t vertices, double edge_prob, double oriented_prob,
                                    std::mt19937_64& rng);

struct GraphHash {
  std::size_t operator()(const OrientedGraph& g) const;
};

enum class LabelStyle { Pointer, Plain };

/// Graphviz DOT. Vertices by label, edges lexicographic; oriented vertices
/// are filled.
std::string to_dot(const OrientedGraph& g, LabelStyle style = LabelStyle::Pointer);
/// Line format: "vertex <label> oriented|unoriented" then "edge <a> <b>".
std::string to_text(const OrientedGraph& g);
OrientedGraph parse_graph_text(std::string_view text);

}  // namespace cdrkit
