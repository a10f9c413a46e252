#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>

#include "stripcount/gain_graph.hpp"
#include "stripcount/plus_expression.hpp"

namespace stripcount {

/// Picks the link to delete and contract next. Receives a simplified,
/// connected graph with at least one link and returns the index of a link.
using LinkSelector = std::function<std::size_t(const GainGraph&)>;

/// Link with the lexicographically smallest (u, v, |gain|, gain).
std::size_t smallest_link(const GainGraph& g);

struct ChromaticOptions {
  /// Empty means smallest_link.
  LinkSelector selector;
  /// Cache results keyed on a canonical relabeling of each subproblem.
  bool memoize = true;
  /// Evaluate two-vertex components with the closed multiple-edge form.
  bool two_vertex_shortcut = true;
  /// Run the deletion and contraction branches of the top few levels of the
  /// recursion on separate threads.
  bool parallel = false;
};

/// Deletion-contraction evaluator for the integral chromatic function.
/// The memo cache lives as long as the engine and is shared by all calls
/// on it, including concurrent ones.
class ChromaticEngine {
 public:
  explicit ChromaticEngine(ChromaticOptions options = {});
  ~ChromaticEngine();
  ChromaticEngine(const ChromaticEngine&) = delete;
  ChromaticEngine& operator=(const ChromaticEngine&) = delete;

  PlusExpression compute(const GainGraph& g);

  std::size_t cache_size() const;
  const ChromaticOptions& options() const noexcept { return options_; }

 private:
  PlusExpression compute(const GainGraph& g, int depth);
  PlusExpression compute_connected(const GainGraph& g, int depth);

  struct Cache;
  ChromaticOptions options_;
  std::unique_ptr<Cache> cache_;
};

/// integral_chromatic with a fresh default engine.
PlusExpression integral_chromatic(const GainGraph& g);

/// Two vertices joined by links with pairwise distinct gains (oriented from
/// the first vertex to the second):
///   (n-h1)^+ (n-h2)^+ - sum_{mu>=0} (n - max(h1+mu, h2))^+
///                     - sum_{mu<0}  (n - max(h1, h2+|mu|))^+
/// Throws std::invalid_argument on duplicate gains.
PlusExpression multiple_edge_chromatic(Int h1, Int h2, std::span<const Int> gains);

/// Checks chi(g) = chi(g \ e) - chi(g / e) at n = 0 .. n_max.
/// Throws std::invalid_argument unless e is a link.
bool verify_dc_identity(const GainGraph& g, std::size_t e, Int n_max);

/// Canonical relabeling used as the memo key. Isomorphic weighted gain
/// graphs map to the same key when the automorphism search stays within
/// its budget; otherwise the relabeling is merely deterministic.
struct CanonicalForm {
  GainGraph graph;
  std::vector<Int> key;
};
CanonicalForm canonical_form(const GainGraph& simplified);

}  // namespace stripcount
