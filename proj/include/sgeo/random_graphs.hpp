#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sgeo/graph.hpp"

namespace sgeo {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>{lo, hi}(rng);
}

inline Rational random_length(Rng& rng, std::size_t max_length) {
  return Rational(static_cast<Rational::int_type>(uniform(rng, 1, max_length)));
}

// Decodes a Pruefer sequence over n >= 2 vertices into tree edges.
inline std::vector<std::pair<VertexId, VertexId>> pruefer_edges(std::span<const VertexId> code, std::size_t n) {
  if (code.size() + 2 != n) throw std::invalid_argument("Pruefer code must have n - 2 entries");
  std::vector<std::size_t> degree(n, 1);
  for (VertexId v : code) ++degree[v];
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : code) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  VertexId u = kNoVertex;
  for (VertexId w = 0; w < n; ++w) {
    if (degree[w] != 1) continue;
    if (u == kNoVertex) {
      u = w;
    } else {
      edges.emplace_back(u, w);
    }
  }
  return edges;
}

inline std::vector<std::pair<VertexId, VertexId>> random_tree_edges(Rng& rng, std::size_t n) {
  if (n < 2) return {};
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = static_cast<VertexId>(uniform(rng, 0, n - 1));
  return pruefer_edges(code, n);
}

// Connected graph: a random spanning tree plus `extra` random non-loop edges
// (parallel edges allowed), integer lengths in 1..max_length.
inline WeightedMultigraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra, std::size_t max_length) {
  WeightedMultigraph g(n);
  for (const auto& [u, v] : random_tree_edges(rng, n)) g.add_edge(u, v, random_length(rng, max_length));
  for (std::size_t i = 0; i < extra && n >= 2; ++i) {
    const auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
    auto v = static_cast<VertexId>(uniform(rng, 0, n - 2));
    if (v >= u) ++v;
    g.add_edge(u, v, random_length(rng, max_length));
  }
  return g;
}

namespace detail {

// AHU encoding of the tree rooted at v.
inline std::string rooted_code(const std::vector<std::vector<VertexId>>& adj, VertexId v, VertexId parent) {
  std::vector<std::string> kids;
  for (VertexId w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

inline std::string tree_canonical_form(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // Centres: repeatedly strip leaves.
  std::vector<std::size_t> degree(n);
  std::vector<VertexId> layer;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId v : layer)
      for (VertexId w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (VertexId c : layer) {
    const std::string code = rooted_code(adj, c, kNoVertex);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace detail

// One representative of every isomorphism class of trees on n vertices.
inline std::vector<std::vector<std::pair<VertexId, VertexId>>> all_unlabelled_trees(std::size_t n) {
  if (n == 0 || n > 10) throw CapExceeded("tree enumeration limited to 1..10 vertices");
  if (n == 1) return {{}};
  std::map<std::string, std::vector<std::pair<VertexId, VertexId>>> classes;
  std::vector<VertexId> code(n - 2, 0);
  for (;;) {
    auto edges = pruefer_edges(code, n);
    classes.try_emplace(detail::tree_canonical_form(n, edges), std::move(edges));
    std::size_t i = 0;
    while (i < code.size() && code[i] == n - 1) code[i++] = 0;
    if (i == code.size()) break;
    ++code[i];
  }
  std::vector<std::vector<std::pair<VertexId, VertexId>>> out;
  for (auto& [key, edges] : classes) out.push_back(std::move(edges));
  return out;
}

}  // namespace sgeo
