#include "stripcount/chromatic.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace stripcount {

namespace {

constexpr int kParallelDepth = 4;
constexpr std::size_t kCanonicalBudget = 720;

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Int x : key) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Vertex colours from a few rounds of neighbourhood refinement. Colours are
// ranks of label-independent signatures, so isomorphic graphs get matching
// colour classes.
std::vector<std::size_t> refine_colours(const GainGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<Int, std::size_t>>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].emplace_back(e.gain, e.v);
    adj[e.v].emplace_back(-e.gain, e.u);
  }

  auto rank = [](const std::vector<std::vector<Int>>& sigs) {
    std::vector<std::vector<Int>> sorted(sigs);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      out[i] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    }
    return std::make_pair(out, sorted.size());
  };

  std::vector<std::vector<Int>> sigs(n);
  for (std::size_t v = 0; v < n; ++v) sigs[v] = {g.weight(v), static_cast<Int>(adj[v].size())};
  auto [colour, classes] = rank(sigs);

  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<Int, Int>> nb;
      nb.reserve(adj[v].size());
      for (const auto& [gain, w] : adj[v]) nb.emplace_back(gain, static_cast<Int>(colour[w]));
      std::sort(nb.begin(), nb.end());
      sigs[v] = {static_cast<Int>(colour[v])};
      for (const auto& [gain, c] : nb) {
        sigs[v].push_back(gain);
        sigs[v].push_back(c);
      }
    }
    auto [next, next_classes] = rank(sigs);
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colour;
}

// position[v] = new index of old vertex v.
std::vector<Int> encode(const GainGraph& g, const std::vector<std::size_t>& position) {
  std::vector<Int> key;
  key.reserve(2 + g.vertex_count() + 3 * g.edge_count());
  key.push_back(static_cast<Int>(g.vertex_count()));
  std::vector<Int> weights(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) weights[position[v]] = g.weight(v);
  key.insert(key.end(), weights.begin(), weights.end());

  std::vector<std::tuple<Int, Int, Int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    auto a = static_cast<Int>(position[e.u]);
    auto b = static_cast<Int>(position[e.v]);
    Int gain = e.gain;
    if (a > b) {
      std::swap(a, b);
      gain = -gain;
    }
    edges.emplace_back(a, b, gain);
  }
  std::sort(edges.begin(), edges.end());
  key.push_back(static_cast<Int>(edges.size()));
  for (const auto& [a, b, gain] : edges) {
    key.push_back(a);
    key.push_back(b);
    key.push_back(gain);
  }
  return key;
}

GainGraph relabel(const GainGraph& g, const std::vector<std::size_t>& position) {
  std::vector<Int> weights(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) weights[position[v]] = g.weight(v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(Edge{position[e.u], position[e.v], e.gain});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    auto ca = a.u < a.v ? std::make_tuple(a.u, a.v, a.gain) : std::make_tuple(a.v, a.u, -a.gain);
    auto cb = b.u < b.v ? std::make_tuple(b.u, b.v, b.gain) : std::make_tuple(b.v, b.u, -b.gain);
    return ca < cb;
  });
  return GainGraph(std::move(weights), std::move(edges));
}

}  // namespace

CanonicalForm canonical_form(const GainGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto colour = refine_colours(g);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });

  // Class boundaries in `order`.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::size_t budget = 1;
  bool within_budget = true;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    if (j - i > 1) {
      cells.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i && within_budget; ++k) {
        budget *= k;
        if (budget > kCanonicalBudget) within_budget = false;
      }
    }
    i = j;
  }

  auto positions_of = [&](const std::vector<std::size_t>& ord) {
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[ord[i]] = i;
    return position;
  };

  std::vector<std::size_t> best_order = order;
  std::vector<Int> best_key = encode(g, positions_of(order));

  if (within_budget && !cells.empty()) {
    for (auto& [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
    // Odometer over the permutations of every cell.
    while (true) {
      auto key = encode(g, positions_of(order));
      if (key < best_key) {
        best_key = std::move(key);
        best_order = order;
      }
      std::size_t c = 0;
      for (; c < cells.size(); ++c) {
        auto [b, e] = cells[c];
        if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      }
      if (c == cells.size()) break;
    }
  }

  return CanonicalForm{relabel(g, positions_of(best_order)), std::move(best_key)};
}

std::size_t smallest_link(const GainGraph& g) {
  std::size_t best = g.edge_count();
  auto rank = [](const Edge& e) {
    return std::make_tuple(e.u, e.v, e.gain < 0 ? -e.gain : e.gain, e.gain);
  };
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.is_loop()) continue;
    if (best == g.edge_count() || rank(e) < rank(g.edges()[best])) best = i;
  }
  if (best == g.edge_count()) throw std::invalid_argument("graph has no links");
  return best;
}

struct ChromaticEngine::Cache {
  mutable std::shared_mutex mutex;
  std::unordered_map<std::vector<Int>, PlusExpression, KeyHash> entries;

  bool find(const std::vector<Int>& key, PlusExpression& out) const {
    std::shared_lock lock(mutex);
    auto it = entries.find(key);
    if (it == entries.end()) return false;
    out = it->second;
    return true;
  }

  void store(std::vector<Int> key, const PlusExpression& value) {
    std::unique_lock lock(mutex);
    entries.insert_or_assign(std::move(key), value);
  }
};

ChromaticEngine::ChromaticEngine(ChromaticOptions options)
    : options_(std::move(options)), cache_(std::make_unique<Cache>()) {
  if (!options_.selector) options_.selector = smallest_link;
}

ChromaticEngine::~ChromaticEngine() = default;

std::size_t ChromaticEngine::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->entries.size();
}

PlusExpression ChromaticEngine::compute(const GainGraph& g) { return compute(g, 0); }

PlusExpression ChromaticEngine::compute(const GainGraph& g, int depth) {
  auto [simple, zero_loop] = simplify(g);
  if (zero_loop) return {};
  PlusExpression result = PlusExpression::one();
  for (const auto& component : components(simple)) {
    result = result * compute_connected(component, depth);
    if (result.is_zero()) break;
  }
  return result;
}

PlusExpression ChromaticEngine::compute_connected(const GainGraph& g, int depth) {
  if (g.vertex_count() == 1) return PlusExpression::term(1, {g.weight(0)});

  if (g.vertex_count() == 2 && options_.two_vertex_shortcut) {
    std::vector<Int> gains;
    gains.reserve(g.edge_count());
    for (const auto& e : g.edges()) gains.push_back(e.gain);
    return multiple_edge_chromatic(g.weight(0), g.weight(1), gains);
  }

  const GainGraph* work = &g;
  CanonicalForm canon;
  if (options_.memoize) {
    canon = canonical_form(g);
    PlusExpression cached;
    if (cache_->find(canon.key, cached)) return cached;
    work = &canon.graph;
  }

  const std::size_t e = options_.selector(*work);
  if (e >= work->edge_count() || work->edges()[e].is_loop()) {
    throw std::logic_error("link selector returned a non-link");
  }

  PlusExpression deleted;
  PlusExpression contracted;
  if (options_.parallel && depth < kParallelDepth) {
    auto contraction = std::async(std::launch::async, [this, work, e, depth] {
      return compute(contract_edge(*work, e), depth + 1);
    });
    deleted = compute(delete_edge(*work, e), depth + 1);
    contracted = contraction.get();
  } else {
    deleted = compute(delete_edge(*work, e), depth + 1);
    contracted = compute(contract_edge(*work, e), depth + 1);
  }
  PlusExpression result = deleted - contracted;

  if (options_.memoize) cache_->store(std::move(canon.key), result);
  return result;
}

PlusExpression integral_chromatic(const GainGraph& g) {
  ChromaticEngine engine;
  return engine.compute(g);
}

PlusExpression multiple_edge_chromatic(Int h1, Int h2, std::span<const Int> gains) {
  std::set<Int> seen;
  std::vector<PlusTerm> terms;
  terms.push_back(PlusTerm{1, {h1, h2}});
  for (Int mu : gains) {
    if (!seen.insert(mu).second) {
      throw std::invalid_argument("multiple_edge_chromatic: duplicate gain " + std::to_string(mu));
    }
    const Int merged = mu >= 0 ? std::max(checked_add(h1, mu), h2)
                               : std::max(h1, checked_add(h2, checked_neg(mu)));
    terms.push_back(PlusTerm{-1, {merged}});
  }
  return normalize(std::move(terms));
}

bool verify_dc_identity(const GainGraph& g, std::size_t e, Int n_max) {
  if (e >= g.edge_count() || g.edges()[e].is_loop()) {
    throw std::invalid_argument("verify_dc_identity: edge is not a link");
  }
  ChromaticEngine engine;
  const auto whole = engine.compute(g);
  const auto deleted = engine.compute(delete_edge(g, e));
  const auto contracted = engine.compute(contract_edge(g, e));
  for (Int n = 0; n <= n_max; ++n) {
    if (evaluate(whole, n) != checked_sub(evaluate(deleted, n), evaluate(contracted, n))) {
      return false;
    }
  }
  return true;
}

}  // namespace stripcount
