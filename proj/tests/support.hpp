#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/digraph.hpp"

namespace support {

inline lpa::GraphPtr share(lpa::DiGraph g) { return std::make_shared<const lpa::DiGraph>(std::move(g)); }

inline lpa::GraphPtr graph(const std::string& text) { return share(lpa::parse_graph(text)); }

inline lpa::GraphPtr sink3() {
  return graph(
      "[vertices]\nu\nv\nw\n[arrows]\ne: u -> v\nf: u -> w\ng: v -> v\nh: v -> w\n");
}

inline lpa::GraphPtr two_loops() { return graph("[vertices]\nv\n[arrows]\na: v -> v\nb: v -> v\n"); }

inline lpa::GraphPtr two_loops_emitter() {
  return graph("[vertices]\nv\nw\n[arrows]\na: v -> v\nb: v -> v\n[families]\ne[]: v -> w\n");
}

inline lpa::GraphPtr loop_emitter() {
  return graph("[vertices]\nv\nw\n[arrows]\na: v -> v\n[families]\ne[]: v -> w\n");
}

/// Two loops at v plus a tail v -> w.
inline lpa::GraphPtr two_loops_tail() {
  return graph("[vertices]\nv\nw\n[arrows]\na: v -> v\nb: v -> v\nt: v -> w\n");
}

/// All paths of length <= n (vertices included).
inline std::vector<lpa::Path> paths(const lpa::DiGraph& g, std::size_t n, std::int64_t window = 0) {
  std::vector<lpa::Path> out, layer;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) layer.push_back(lpa::vertex_path(v));
  for (std::size_t len = 0; len <= n; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == n) break;
    std::vector<lpa::Path> next;
    for (const lpa::Path& p : layer) {
      for (const lpa::Arrow& a : g.out_arrows(lpa::path_range(g, p), window)) {
        lpa::Path q = p;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// All Cohn monomials alpha beta* of total degree <= n.
inline std::vector<lpa::Monomial> monomials(const lpa::DiGraph& g, std::size_t n, std::int64_t window = 0) {
  auto ps = paths(g, n, window);
  std::vector<lpa::Monomial> out;
  for (const auto& a : ps)
    for (const auto& b : ps)
      if (a.length() + b.length() <= n && lpa::path_range(g, a) == lpa::path_range(g, b))
        out.push_back(lpa::Monomial{a, b});
  return out;
}

inline lpa::AlgebraElement random_element(const lpa::GraphPtr& g, const std::vector<lpa::Monomial>& pool,
                                          std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> terms(1, max_terms), coeff(-3, 3);
  lpa::AlgebraElement x(g);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) x += lpa::Scalar(coeff(rng)) * lpa::AlgebraElement(g, pool[pick(rng)]);
  return x;
}

}  // namespace support
