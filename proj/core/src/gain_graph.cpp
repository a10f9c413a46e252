#include "stripcount/gain_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stripcount {

namespace {

Edge canonical(Edge e) {
  if (e.u > e.v) {
    std::swap(e.u, e.v);
    e.gain = checked_neg(e.gain);
  }
  return e;
}

}  // namespace

GainGraph::GainGraph(std::vector<Int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u >= weights_.size() || e.v >= weights_.size()) {
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                              " out of range for " + std::to_string(weights_.size()) +
                              " vertices");
    }
    e = canonical(e);
  }
}

bool GainGraph::has_links() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.is_loop(); });
}

std::size_t GainGraph::link_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.is_loop(); }));
}

GainGraph switch_graph(const GainGraph& g, const SwitchingFunction& eta) {
  if (eta.values.size() != g.vertex_count()) {
    throw std::invalid_argument("switching function has " + std::to_string(eta.values.size()) +
                                " values for " + std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<Int> weights(g.weights().begin(), g.weights().end());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    weights[k] = checked_add(weights[k], eta.values[k]);
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) {
    e.gain = checked_add(checked_sub(e.gain, eta.values[e.u]), eta.values[e.v]);
  }
  return GainGraph(std::move(weights), std::move(edges));
}

GainGraph delete_edge(const GainGraph& g, std::size_t e) {
  if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != e) edges.push_back(g.edges()[i]);
  }
  return GainGraph(std::vector<Int>(g.weights().begin(), g.weights().end()), std::move(edges));
}

GainGraph contract_edge(const GainGraph& g, std::size_t e) {
  if (e >= g.edge_count()) throw std::out_of_range("edge index out of range");
  const Edge link = g.edges()[e];
  if (link.is_loop()) throw std::invalid_argument("cannot contract a loop");

  std::size_t tail = link.u;
  std::size_t head = link.v;
  Int gain = link.gain;
  if (gain < 0) {
    std::swap(tail, head);
    gain = checked_neg(gain);
  }

  SwitchingFunction eta{std::vector<Int>(g.vertex_count(), 0)};
  eta.values[tail] = gain;
  const GainGraph switched = switch_graph(g, eta);

  const std::size_t keep = std::min(tail, head);
  const std::size_t drop = std::max(tail, head);
  auto relabel = [&](std::size_t x) -> std::size_t {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };

  std::vector<Int> weights;
  weights.reserve(g.vertex_count() - 1);
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (k == drop) continue;
    weights.push_back(k == keep ? std::max(switched.weight(tail), switched.weight(head))
                                : switched.weight(k));
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e) continue;
    const Edge& f = switched.edges()[i];
    edges.push_back(Edge{relabel(f.u), relabel(f.v), f.gain});
  }
  return GainGraph(std::move(weights), std::move(edges));
}

SimplifyResult simplify(const GainGraph& g) {
  SimplifyResult result;
  std::vector<Edge> links;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      if (e.gain == 0) result.has_zero_loop = true;
      continue;
    }
    links.push_back(e);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  result.graph = GainGraph(std::vector<Int>(g.weights().begin(), g.weights().end()), std::move(links));
  return result;
}

std::vector<GainGraph> components(const GainGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  // Components ordered by their smallest vertex.
  std::vector<std::size_t> component_of(n);
  std::vector<std::size_t> local_index(n);
  std::vector<std::vector<Int>> weights;
  std::vector<std::size_t> root_slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = find(v);
    if (root_slot[r] == n) {
      root_slot[r] = weights.size();
      weights.emplace_back();
    }
    component_of[v] = root_slot[r];
    local_index[v] = weights[root_slot[r]].size();
    weights[root_slot[r]].push_back(g.weight(v));
  }

  std::vector<std::vector<Edge>> edges(weights.size());
  for (const auto& e : g.edges()) {
    edges[component_of[e.u]].push_back(Edge{local_index[e.u], local_index[e.v], e.gain});
  }

  std::vector<GainGraph> out;
  out.reserve(weights.size());
  for (std::size_t c = 0; c < weights.size(); ++c) {
    out.emplace_back(std::move(weights[c]), std::move(edges[c]));
  }
  return out;
}

Int max_path_gain(const GainGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 24) throw std::length_error("max_path_gain supports at most 24 vertices");

  constexpr Int kNone = std::numeric_limits<Int>::min();
  // best_step[a][b]: largest gain of a link traversed from a to b.
  std::vector<Int> best_step(n * n, kNone);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto& fwd = best_step[e.u * n + e.v];
    auto& bwd = best_step[e.v * n + e.u];
    fwd = std::max(fwd, e.gain);
    bwd = std::max(bwd, checked_neg(e.gain));
  }

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Int> best(subsets * n, kNone);
  for (std::size_t v = 0; v < n; ++v) best[(std::size_t{1} << v) * n + v] = 0;

  Int answer = 0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (std::size_t end = 0; end < n; ++end) {
      const Int here = best[mask * n + end];
      if (here == kNone) continue;
      answer = std::max(answer, here);
      for (std::size_t next = 0; next < n; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const Int step = best_step[end * n + next];
        if (step == kNone) continue;
        auto& slot = best[(mask | (std::size_t{1} << next)) * n + next];
        slot = std::max(slot, checked_add(here, step));
      }
    }
  }
  return answer;
}

}  // namespace stripcount
