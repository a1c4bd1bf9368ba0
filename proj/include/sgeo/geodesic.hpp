#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "sgeo/graph.hpp"
#include "sgeo/shortcut_tree.hpp"
#include "sgeo/steiner.hpp"

namespace sgeo {

inline constexpr std::size_t kDefaultSubsetCap = 1'000'000;
inline constexpr std::size_t kTableTerminalLimit = 16;

struct GeodesicVerdict {
  bool holds = true;
  std::optional<std::vector<VertexId>> witness;           // host ids, sorted
  std::optional<std::pair<Distance, Distance>> gap;      // (sd_G(A), sd_H(A))
  std::optional<ShortcutTree> extracted;
};

namespace detail {

inline std::size_t count_subsets_up_to(std::size_t n, std::size_t k) {
  std::size_t total = 0;
  std::size_t binom = 1;
  for (std::size_t i = 0; i <= std::min(n, k); ++i) {
    total += binom;
    if (total > (std::size_t{1} << 62)) return total;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

// Orders violating sets: smaller sd_G first, then fewer vertices, then
// lexicographically smaller vertex list.
inline bool better_witness(const Distance& sd, const std::vector<VertexId>& a, const Distance& best_sd,
                           const std::vector<VertexId>& best) {
  if (sd != best_sd) return sd < best_sd;
  if (a.size() != best.size()) return a.size() < best.size();
  return a < best;
}

inline ShortcutTree shortcut_from_witness(const WeightedMultigraph& g, const Subgraph& h,
                                          const std::vector<VertexId>& witness) {
  const SteinerResult st = steiner_tree(g, witness, std::max(kDefaultTerminalCap, witness.size()));
  return ShortcutTree(g, st.edges, h.edges(), h.vertices());
}

}  // namespace detail

// Steiner distances of G over a fixed universe of candidate terminals,
// reusable across many subgraphs H with V(H) inside the universe.
class GeodesicChecker {
 public:
  GeodesicChecker(const WeightedMultigraph& g, std::vector<VertexId> universe, std::size_t max_size)
      : g_{&g}, universe_{std::move(universe)}, max_size_{max_size} {
    std::sort(universe_.begin(), universe_.end());
    if (universe_.size() > kTableTerminalLimit) throw CapExceeded("terminal universe too large for a table");
    index_.assign(g.vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < universe_.size(); ++i) index_[universe_[i]] = static_cast<VertexId>(i);
    table_.emplace(g, universe_, max_size_);
  }

  const WeightedMultigraph& graph() const noexcept { return *g_; }

  GeodesicVerdict check(const Subgraph& h, std::size_t k, bool extract = true) const {
    if (&h.host() != g_) throw std::invalid_argument("subgraph does not belong to this graph");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k > max_size_) throw std::invalid_argument("k exceeds the checker's table size");
    const std::vector<VertexId> hv = h.vertices();
    using Mask = SteinerTable::Mask;
    for (VertexId v : hv)
      if (index_[v] == kNoVertex) throw std::invalid_argument("subgraph vertex outside the checker universe");
    const Materialized hm = h.materialize();
    std::vector<VertexId> local_terminals;
    for (VertexId v : hv) local_terminals.push_back(hm.from_host_vertex[v]);
    const SteinerTable h_table(hm.graph, local_terminals, std::min(k, hv.size()));

    GeodesicVerdict verdict;
    Distance best_sd = Distance::infinity();
    std::vector<VertexId> best;
    const Mask full = static_cast<Mask>((std::size_t{1} << hv.size()) - 1);
    for (Mask local = 1; local <= full && full != 0; ++local) {
      const int size = std::popcount(local);
      if (size < 2 || static_cast<std::size_t>(size) > k) continue;
      Mask global = 0;
      std::vector<VertexId> a;
      for (std::size_t i = 0; i < hv.size(); ++i) {
        if (!(local >> i & 1u)) continue;
        a.push_back(hv[i]);
        global |= Mask{1} << index_[hv[i]];
      }
      const Distance sd_g = table_->distance(global);
      const Distance sd_h = h_table.distance(local);
      if (!(sd_g < sd_h)) continue;
      if (verdict.holds || detail::better_witness(sd_g, a, best_sd, best)) {
        verdict.holds = false;
        best_sd = sd_g;
        best = a;
        verdict.gap = std::make_pair(sd_g, sd_h);
      }
    }
    if (!verdict.holds) {
      verdict.witness = best;
      if (extract) verdict.extracted = detail::shortcut_from_witness(*g_, h, best);
    }
    return verdict;
  }

 private:
  const WeightedMultigraph* g_;
  std::vector<VertexId> universe_;
  std::size_t max_size_;
  std::vector<VertexId> index_;
  std::optional<SteinerTable> table_;
};

// H is k-geodesic in G iff sd_H(A) = sd_G(A) for all A ⊆ V(H), |A| <= k.
// On failure the witness minimizes sd_G(A) (then |A|, then vertex ids) and a
// Steiner tree for it is returned as the extracted shortcut tree.
inline GeodesicVerdict is_k_geodesic(const WeightedMultigraph& g, const Subgraph& h, std::size_t k,
                                     std::size_t subset_cap = kDefaultSubsetCap, bool extract = true) {
  if (&h.host() != &g) throw std::invalid_argument("subgraph does not belong to the given graph");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  const std::vector<VertexId> hv = h.vertices();
  if (detail::count_subsets_up_to(hv.size(), k) > subset_cap)
    throw CapExceeded("too many terminal sets to enumerate");
  const std::size_t effective_k = std::min(k, std::max<std::size_t>(hv.size(), 2));
  if (hv.size() <= kTableTerminalLimit) return GeodesicChecker(g, hv, effective_k).check(h, effective_k, extract);

  // Large H: one Steiner computation per subset.
  if (effective_k > kDefaultTerminalCap) throw CapExceeded("k too large for per-subset Steiner computation");
  const Materialized hm = h.materialize();
  GeodesicVerdict verdict;
  Distance best_sd = Distance::infinity();
  std::vector<VertexId> best;
  auto visit = [&](const std::vector<VertexId>& a) {
    std::vector<VertexId> local;
    for (VertexId v : a) local.push_back(hm.from_host_vertex[v]);
    const Distance sd_g = steiner_tree(g, a, effective_k).distance;
    const Distance sd_h = steiner_tree(hm.graph, local, effective_k).distance;
    if (!(sd_g < sd_h)) return;
    if (verdict.holds || detail::better_witness(sd_g, a, best_sd, best)) {
      verdict.holds = false;
      best_sd = sd_g;
      best = a;
      verdict.gap = std::make_pair(sd_g, sd_h);
    }
  };
  std::vector<VertexId> current;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (current.size() >= 2) visit(current);
    if (current.size() == effective_k) return;
    for (std::size_t i = from; i < hv.size(); ++i) {
      current.push_back(hv[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  if (!verdict.holds) {
    verdict.witness = best;
    if (extract) verdict.extracted = detail::shortcut_from_witness(g, h, best);
  }
  return verdict;
}

// Terminal sets are subsets of V(H), so k = |V(H)| decides full geodecity.
inline GeodesicVerdict is_fully_geodesic(const WeightedMultigraph& g, const Subgraph& h,
                                         std::size_t subset_cap = kDefaultSubsetCap, bool extract = true) {
  return is_k_geodesic(g, h, std::max<std::size_t>(h.vertex_count(), 2), subset_cap, extract);
}

inline ShortcutTree extract_shortcut_tree(const WeightedMultigraph& g, const Subgraph& h, std::size_t k) {
  GeodesicVerdict v = is_k_geodesic(g, h, k);
  if (v.holds) throw std::logic_error("subgraph is k-geodesic; there is no shortcut tree to extract");
  return std::move(*v.extracted);
}

}  // namespace sgeo
