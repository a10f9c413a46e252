#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "stripcount/integer.hpp"

namespace stripcount {

/// An edge `gain·v_u v_v`: constraint x_v != x_u + gain.
/// Links are stored with u < v; the reversed edge (v, u, -gain) is the same edge.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Int gain = 0;

  bool is_loop() const noexcept { return u == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Switching function: one integer per vertex.
struct SwitchingFunction {
  std::vector<Int> values;
};

/// Weighted integral gain graph. Immutable after construction; every
/// transformation below returns a new graph.
///
/// The integral chromatic function of the graph counts x : V -> Z with
/// h_i < x_i <= n and x_v != x_u + gain for every edge.
class GainGraph {
 public:
  GainGraph() = default;

  /// Validates endpoints and orients every link so that u < v. Edge order
  /// is preserved and no simplification is performed.
  /// Throws std::out_of_range on a bad endpoint.
  GainGraph(std::vector<Int> weights, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return weights_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Int> weights() const noexcept { return weights_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  Int weight(std::size_t v) const { return weights_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  bool has_links() const noexcept;
  std::size_t link_count() const noexcept;

  bool operator==(const GainGraph&) const = default;

 private:
  std::vector<Int> weights_;
  std::vector<Edge> edges_;
};

/// gain'(f) = gain(f) - eta_u + eta_v for f from u to v; h'_k = h_k + eta_k.
/// Throws std::invalid_argument on a length mismatch.
GainGraph switch_graph(const GainGraph& g, const SwitchingFunction& eta);

/// Throws std::out_of_range for a bad index.
GainGraph delete_edge(const GainGraph& g, std::size_t e);

/// Contracts link e. A negative stored gain is first normalized by reversing
/// the edge, so the tail is the endpoint the nonnegative gain points away
/// from. The tail is switched by the edge gain, then merged into the head;
/// the merged vertex takes the smaller of the two original indices and
/// weight max(h_tail + gain, h_head). Other links between the endpoints
/// become loops.
/// Throws std::invalid_argument if e is a loop, std::out_of_range if e is
/// not an edge.
GainGraph contract_edge(const GainGraph& g, std::size_t e);

struct SimplifyResult {
  GainGraph graph;
  bool has_zero_loop = false;
};

/// Drops every loop, merges parallel links with equal gain and sorts the
/// edge list. A zero-gain loop is reported through the flag.
SimplifyResult simplify(const GainGraph& g);

/// Connected components (through links). Vertex order is inherited.
std::vector<GainGraph> components(const GainGraph& g);

/// Largest directed gain over all simple paths, both directions, including
/// the single-vertex path of gain 0. Loops are ignored. Exact subset DP;
/// throws std::length_error above 24 vertices.
Int max_path_gain(const GainGraph& g);

}  // namespace stripcount
