#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgeo/graph.hpp"
#include "sgeo/shortcut_tree.hpp"
#include "sgeo/simplex.hpp"
#include "sgeo/steiner.hpp"
#include "sgeo/topology.hpp"

namespace sgeo {

struct LpLengths {
  std::vector<Rational> lengths;  // one per topology edge, all positive
  Rational optimum;               // min total length subject to SCT4
  Distance margin;                // sd_H(L) - sum(lengths)
};

namespace detail {

using BigRational = boost::multiprecision::cpp_rational;

inline BigRational to_big(const Rational& r) { return BigRational(r.num()) / BigRational(r.den()); }

inline Rational from_big(const BigRational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  constexpr auto lo = std::numeric_limits<Rational::int_type>::min();
  constexpr auto hi = std::numeric_limits<Rational::int_type>::max();
  if (num < lo || num > hi || den > hi) throw RationalOverflow("LP certificate does not fit in 64 bits");
  return Rational(num.convert_to<Rational::int_type>(), den.convert_to<Rational::int_type>());
}

inline Rational from_field(const Rational& r) { return r; }
inline Rational from_field(const BigRational& r) { return from_big(r); }
inline Rational to_field(const Rational& r, Rational) { return r; }
inline BigRational to_field(const Rational& r, BigRational) { return to_big(r); }

// Dual of   min 1.x  s.t.  sum_{e separates B} x_e >= s_B,  x >= 0:
//           max s.y  s.t.  sum_{B separated by e} y_B <= 1,  y >= 0.
// y = 0 is feasible, so phase one is never needed. The solve is cut off
// once the dual objective reaches sd_H(L): then min 1.x >= sd_H(L).
template <class Field>
std::optional<std::pair<std::vector<Rational>, Rational>> solve_length_lp(
    const std::vector<std::uint32_t>& splits, const std::vector<std::uint32_t>& subsets,
    const std::vector<Rational>& rhs, const Rational& full) {
  const std::size_t edges = splits.size();
  std::vector<std::vector<Field>> a(edges, std::vector<Field>(subsets.size(), Field(0)));
  for (std::size_t e = 0; e < edges; ++e) {
    const std::uint32_t side = splits[e];
    for (std::size_t j = 0; j < subsets.size(); ++j)
      if ((subsets[j] & side) != 0 && (subsets[j] & ~side) != 0) a[e][j] = Field(1);
  }
  std::vector<Field> b(edges, Field(1));
  std::vector<Field> c;
  for (const Rational& r : rhs) c.push_back(to_field(r, Field{}));
  lp::ExactSimplex<Field> simplex(a, b, c);
  const lp::Solution<Field> sol = simplex.solve(to_field(full, Field{}));
  if (sol.status != lp::Status::optimal) return std::nullopt;
  std::vector<Rational> x;
  for (const Field& v : sol.dual) x.push_back(from_field(v));
  return std::make_pair(std::move(x), from_field(sol.value));
}

}  // namespace detail

// Positive lengths on the edges of `topo` (leaf i glued to placement[i])
// making the tree a shortcut tree for `host`, if any exist. host_sd gives
// sd_H over subsets of the placement (bit i = placement[i]).
template <class SdFn>
std::optional<LpLengths> lp_feasible_lengths(const TreeTopology& topo, SdFn&& host_sd) {
  const std::size_t m = topo.leaf_count;
  const auto full_mask = static_cast<std::uint32_t>((std::size_t{1} << m) - 1);
  const Distance full = host_sd(full_mask);
  if (m == 2) {
    // SCT4 is vacuous; half the distance leaves a margin of the other half.
    if (!full.is_finite()) return LpLengths{{Rational(1)}, Rational(0), Distance::infinity()};
    const Rational half = full.value() / Rational(2);
    return LpLengths{{half}, Rational(0), Distance(half)};
  }
  std::vector<std::uint32_t> subsets;
  std::vector<Rational> rhs;
  for (std::uint32_t b = 1; b < full_mask; ++b) {
    if (std::popcount(b) < 2) continue;
    const Distance sd = host_sd(b);
    if (!sd.is_finite()) return std::nullopt;
    subsets.push_back(b);
    rhs.push_back(sd.value());
  }
  const std::vector<std::uint32_t> splits = topo.leaf_splits();
  // Disconnected leaf set with every proper subset connected cannot happen
  // for m >= 3 (pairs connected means everything connected).
  const Rational cutoff = full.value();
  std::optional<std::pair<std::vector<Rational>, Rational>> solved;
  try {
    solved = detail::solve_length_lp<Rational>(splits, subsets, rhs, cutoff);
  } catch (const RationalOverflow&) {
    solved = detail::solve_length_lp<detail::BigRational>(splits, subsets, rhs, cutoff);
  }
  if (!solved) return std::nullopt;
  auto& [x, optimum] = *solved;
  const Rational delta = cutoff - optimum;
  if (!delta.is_positive()) return std::nullopt;
  // Raising lengths keeps every >= constraint; a total raise below delta keeps SCT3.
  if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return !v.is_positive(); })) {
    const Rational eps = delta / Rational(static_cast<Rational::int_type>(4 * x.size()));
    for (Rational& v : x) v += eps;
  }
  Rational total;
  for (const Rational& v : x) total += v;
  return LpLengths{std::move(x), optimum, Distance(cutoff - total)};
}

// Host-vertex form: placement[i] is the host vertex carrying leaf i.
inline std::optional<LpLengths> lp_feasible_lengths(const WeightedMultigraph& host, const TreeTopology& topo,
                                                    std::span<const VertexId> placement) {
  if (placement.size() != topo.leaf_count) throw std::invalid_argument("placement size differs from leaf count");
  if (topo.leaf_count > kTopologyLeafCap) throw CapExceeded("too many leaves for the length LP");
  std::vector<VertexId> sorted(placement.begin(), placement.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("placement is not injective");
  const SteinerTable table(host, std::vector<VertexId>(placement.begin(), placement.end()), placement.size());
  return lp_feasible_lengths(topo, [&](std::uint32_t b) { return table.distance(b); });
}

// Glues `topo` with the given edge lengths onto `host`.
inline ShortcutTree install_topology(const WeightedMultigraph& host, const TreeTopology& topo,
                                     std::span<const VertexId> placement, std::span<const Rational> lengths) {
  const WeightedMultigraph tree = topo.to_graph(lengths);
  std::vector<std::pair<VertexId, VertexId>> map;
  for (std::size_t i = 0; i < placement.size(); ++i) map.emplace_back(static_cast<VertexId>(i), placement[i]);
  return ShortcutTree::assemble(host, tree, map);
}

// Host lengths drawn independently from {1, 2, 4, ..., 2^max_exponent}.
// Spread-out scales are what make the larger certificates reachable.
class HostLengthSampler {
 public:
  explicit HostLengthSampler(std::uint64_t seed, unsigned max_exponent = 3)
      : rng_{seed}, pick_{0, max_exponent} {}

  std::vector<Rational> draw(std::size_t count) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(Rational::int_type{1} << pick_(rng_));
    return out;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<unsigned> pick_;
};

inline constexpr std::size_t kSearchHostVertexCap = 16;

struct SearchOptions {
  std::size_t min_leaves = 2;
  std::size_t max_leaves = 6;
  std::size_t samples = 1;    // host-length samples; only used with free_lengths
  bool free_lengths = false;  // resample host lengths instead of using the given ones
  std::uint64_t seed = 1;
  unsigned max_exponent = 3;
  std::size_t placement_cap = 5'000'000;  // topologies x placements per sample and leaf count
  std::size_t hit_cap = 1000;             // stop collecting after this many hits
};

struct ShortcutHit {
  std::size_t sample = 0;
  std::size_t leaf_count = 0;
  std::size_t topology_index = 0;
  std::vector<VertexId> placement;
  std::vector<Rational> host_lengths;
  LpLengths lengths;
  ShortcutTree tree;
};

namespace detail {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace detail

// Every topology with min..max leaves, glued onto every set of host vertices
// (labelled topologies cover all injective placements), per host-length
// sample. Each hit is re-certified by verify_sct before it is returned.
inline std::vector<ShortcutHit> search_shortcut_trees(const WeightedMultigraph& host, const SearchOptions& opt) {
  if (opt.max_leaves > kTopologyLeafCap) throw CapExceeded("leaf cap above " + std::to_string(kTopologyLeafCap));
  if (opt.min_leaves < 2) throw std::invalid_argument("shortcut trees have at least two leaves");
  if (host.vertex_count() > kSearchHostVertexCap) throw CapExceeded("host too large for the search");
  const std::size_t top = std::min(opt.max_leaves, host.vertex_count());
  std::vector<std::vector<TreeTopology>> topologies(top + 1);
  for (std::size_t m = opt.min_leaves; m <= top; ++m) {
    topologies[m] = enumerate_topologies(m);
    if (detail::binomial(host.vertex_count(), m) * topologies[m].size() > opt.placement_cap)
      throw CapExceeded("too many placements for " + std::to_string(m) + " leaves");
  }

  HostLengthSampler sampler(opt.seed, opt.max_exponent);
  std::vector<VertexId> all(host.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  const std::size_t samples = opt.free_lengths ? opt.samples : 1;
  std::vector<ShortcutHit> hits;
  for (std::size_t s = 0; s < samples && hits.size() < opt.hit_cap; ++s) {
    std::vector<Rational> lengths;
    if (opt.free_lengths) {
      lengths = sampler.draw(host.edge_count());
    } else {
      for (const auto& e : host.edges()) lengths.push_back(e.length);
    }
    const WeightedMultigraph h = host.with_lengths(lengths);
    const SteinerTable table(h, all, top);
    for (std::size_t m = opt.min_leaves; m <= top && hits.size() < opt.hit_cap; ++m) {
      std::vector<VertexId> combo(m);
      for (std::size_t i = 0; i < m; ++i) combo[i] = static_cast<VertexId>(i);
      for (;;) {
        auto sd = [&](std::uint32_t b) {
          std::uint32_t global = 0;
          for (std::size_t i = 0; i < m; ++i)
            if (b >> i & 1u) global |= std::uint32_t{1} << combo[i];
          return table.distance(global);
        };
        for (std::size_t t = 0; t < topologies[m].size() && hits.size() < opt.hit_cap; ++t) {
          auto found = lp_feasible_lengths(topologies[m][t], sd);
          if (!found) continue;
          ShortcutTree tree = install_topology(h, topologies[m][t], combo, found->lengths);
          if (!verify_sct(tree).valid()) throw std::logic_error("LP certificate failed re-certification");
          hits.push_back(ShortcutHit{s, m, t, combo, lengths, std::move(*found), std::move(tree)});
        }
        // next combination in lexicographic order
        std::size_t i = m;
        while (i > 0 && combo[i - 1] == host.vertex_count() - m + i - 1) --i;
        if (i == 0) break;
        ++combo[i - 1];
        for (std::size_t j = i; j < m; ++j) combo[j] = combo[j - 1] + 1;
      }
    }
  }
  return hits;
}

}  // namespace sgeo
