#pragma once

// Independent dense reference implementation for ghost-path algebras.
// Words and elements are plain containers, ranks come from textbook Gaussian
// elimination over mpq_class. Nothing here calls the library's echelon,
// staircase or normal-form code.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "lpa/algebra.hpp"

namespace oracle {

using Q = mpq_class;

/// x1* x2* ... xk*, left end `vertex` = r(x1).
struct GWord {
  std::size_t vertex = 0;
  std::vector<lpa::Arrow> letters;
  friend auto operator<=>(const GWord&, const GWord&) = default;
};

using GElem = std::map<GWord, Q>;

inline std::size_t right_end(const lpa::DiGraph& g, const GWord& w) {
  return w.letters.empty() ? w.vertex : g.source(w.letters.back());
}

/// All ghost words of length <= n.
inline std::vector<GWord> words(const lpa::DiGraph& g, std::size_t n, std::int64_t window = 0) {
  std::vector<GWord> out;
  std::vector<GWord> layer;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) layer.push_back(GWord{v, {}});
  for (std::size_t len = 0; len <= n; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == n) break;
    std::vector<GWord> next;
    for (const GWord& w : layer) {
      for (const lpa::Arrow& a : g.arrows(window)) {
        if (g.range(a) != right_end(g, w)) continue;
        GWord x = w;
        x.letters.push_back(a);
        next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Word product u w, or false when the ends do not meet.
inline bool multiply(const lpa::DiGraph& g, const GWord& u, const GWord& w, GWord& out) {
  if (right_end(g, u) != w.vertex) return false;
  out = u;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return true;
}

inline GElem multiply(const lpa::DiGraph& g, const GWord& u, const GElem& x) {
  GElem out;
  for (const auto& [w, c] : x) {
    GWord p;
    if (!multiply(g, u, w, p)) continue;
    out[p] += c;
    if (out[p] == 0) out.erase(p);
  }
  return out;
}

inline std::size_t degree(const GElem& x) {
  std::size_t d = 0;
  for (const auto& [w, c] : x) d = std::max(d, w.letters.size());
  return d;
}

/// Reads a purely ghost algebra element: beta* = b_l* ... b_1*.
inline GElem from_algebra(const lpa::AlgebraElement& x) {
  const lpa::DiGraph& g = *x.graph();
  GElem out;
  for (const auto& [m, c] : x.terms()) {
    if (!m.alpha.arrows.empty()) throw std::logic_error("not a ghost element");
    GWord w;
    w.letters.assign(m.beta.arrows.rbegin(), m.beta.arrows.rend());
    w.vertex = w.letters.empty() ? m.beta.start : g.range(w.letters.front());
    out[w] += c.value();
  }
  return out;
}

inline lpa::AlgebraElement to_algebra(const lpa::GraphPtr& g, const GElem& x) {
  lpa::AlgebraElement out(g);
  for (const auto& [w, c] : x) {
    lpa::Path beta{w.vertex, {}};
    if (!w.letters.empty()) {
      beta.arrows.assign(w.letters.rbegin(), w.letters.rend());
      beta.start = g->source(beta.arrows.front());
    }
    out += lpa::Scalar(c) * lpa::AlgebraElement::ghost(g, beta);
  }
  return out;
}

/// Dense rows over an explicit coordinate index.
class Dense {
 public:
  explicit Dense(std::vector<GWord> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) index_[coords_[i]] = i;
  }

  std::vector<Q> row(const GElem& x) const {
    std::vector<Q> r(coords_.size());
    for (const auto& [w, c] : x) r.at(index_.at(w)) = c;
    return r;
  }
  bool covers(const GElem& x) const {
    for (const auto& [w, c] : x)
      if (!index_.count(w)) return false;
    return true;
  }
  std::size_t size() const { return coords_.size(); }
  const std::vector<GWord>& coords() const { return coords_; }

 private:
  std::vector<GWord> coords_;
  std::map<GWord, std::size_t> index_;
};

/// Row-reduces in place and returns the rank.
inline std::size_t rank(std::vector<std::vector<Q>>& m) {
  std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return r;
}

/// Span of {w g : w word, |w| + deg g <= d}, reduced.
class LeftSpan {
 public:
  LeftSpan(const lpa::DiGraph& g, const std::vector<GElem>& gens, std::size_t d, std::int64_t window = 0)
      : dense_(words(g, d, window)) {
    for (const GWord& w : words(g, d, window)) {
      for (const GElem& x : gens) {
        if (w.letters.size() + degree(x) > d) continue;
        GElem p = multiply(g, w, x);
        if (!p.empty()) rows_.push_back(dense_.row(p));
      }
    }
    rank_ = oracle::rank(rows_);
  }

  std::size_t rank() const { return rank_; }
  const Dense& coords() const { return dense_; }
  const std::vector<std::vector<Q>>& rows() const { return rows_; }

  bool contains(const GElem& x) const {
    if (!dense_.covers(x)) return false;
    auto m = rows_;
    m.push_back(dense_.row(x));
    return oracle::rank(m) == rank_;
  }

 private:
  Dense dense_;
  std::vector<std::vector<Q>> rows_;
  std::size_t rank_ = 0;
};

/// Right-to-left evaluation of ghost words on K^c for a one-vertex graph:
/// x1* ... xk* e = M_{x1}(... M_{xk} e).
struct MatrixAction {
  std::map<lpa::Arrow, std::vector<std::vector<Q>>> mats;
  std::vector<Q> e;

  std::vector<Q> eval(const GWord& w) const {
    std::vector<Q> v = e;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const auto& m = mats.at(*it);
      std::vector<Q> out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
      v = std::move(out);
    }
    return v;
  }
  std::vector<Q> eval(const GElem& x) const {
    std::vector<Q> out(e.size());
    for (const auto& [w, c] : x) {
      auto v = eval(w);
      for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
    }
    return out;
  }
  bool kills(const GElem& x) const {
    for (const Q& c : eval(x))
      if (c != 0) return false;
    return true;
  }
};

/// Basis of {x of degree <= d : x e = 0}.
inline std::vector<GElem> annihilator(const lpa::DiGraph& g, const MatrixAction& act, std::size_t d) {
  auto ws = words(g, d);
  std::size_t n = act.e.size();
  // Columns are words; rows are coordinates of the image.
  std::vector<std::vector<Q>> m(n, std::vector<Q>(ws.size()));
  for (std::size_t j = 0; j < ws.size(); ++j) {
    auto v = act.eval(ws[j]);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = v[i];
  }
  std::vector<std::size_t> pivots;
  {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ws.size() && r < n; ++c) {
      std::size_t p = r;
      while (p < n && m[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(m[p], m[r]);
      Q inv = 1 / m[r][c];
      for (auto& x : m[r]) x *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || m[i][c] == 0) continue;
        Q f = m[i][c];
        for (std::size_t j = 0; j < ws.size(); ++j) m[i][j] -= f * m[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
  }
  std::vector<bool> is_pivot(ws.size(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<GElem> out;
  for (std::size_t f = 0; f < ws.size(); ++f) {
    if (is_pivot[f]) continue;
    GElem x{{ws[f], Q(1)}};
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (m[i][f] != 0) x[ws[pivots[i]]] = -m[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

/// Dimension of span{w e : |w| <= d}.
inline std::size_t orbit_dimension(const lpa::DiGraph& g, const MatrixAction& act, std::size_t d) {
  std::vector<std::vector<Q>> rows;
  for (const GWord& w : words(g, d)) rows.push_back(act.eval(w));
  return rank(rows);
}

}  // namespace oracle
