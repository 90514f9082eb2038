#pragma once

// Hand-rolled random generators for the property suites. Everything is driven
// by an explicit seed so failures replay exactly.

#include "hyperdiff/calculus.hpp"
#include "hyperdiff/hypergraph.hpp"
#include "hyperdiff/paths.hpp"

#include <bit>
#include <cstdint>
#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace hyperdiff::testing {

using Rng = std::mt19937_64;
using Mask = std::uint32_t;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Small numerators and denominators keep failures readable; zero allowed.
inline Rational random_rational(Rng& rng, int max_num = 4, int max_den = 3) {
  return Rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

inline Rational random_nonzero(Rng& rng, int max_num = 4, int max_den = 3) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (r != 0) return r;
  }
}

inline Hyperedge edge_from_mask(Mask mask) {
  std::vector<VertexIndex> v;
  for (VertexIndex i = 0; i < 32; ++i) {
    if (mask & (Mask(1) << i)) v.push_back(i);
  }
  return Hyperedge::from_indices(std::move(v));
}

inline Mask mask_of(const Hyperedge& e) {
  Mask m = 0;
  for (auto v : e.vertices()) m |= Mask(1) << v;
  return m;
}

inline Hypergraph from_masks(const VertexSet& vs, const std::set<Mask>& masks) {
  std::vector<Hyperedge> edges;
  for (auto m : masks) edges.push_back(edge_from_mask(m));
  return Hypergraph(vs, edges);
}

inline std::set<Mask> masks_of(const Hypergraph& h) {
  std::set<Mask> out;
  for (const auto& e : h.edges()) out.insert(mask_of(e));
  return out;
}

inline Mask full_mask(std::size_t n) { return (Mask(1) << n) - 1; }

/// `count` random non-empty subsets of {0..n-1}.
inline std::set<Mask> random_masks(Rng& rng, std::size_t n, int count) {
  std::set<Mask> out;
  for (int i = 0; i < count; ++i) out.insert(Mask(uniform_int(rng, 1, int(full_mask(n)))));
  return out;
}

// Closures by brute-force subset enumeration, independent of the library's
// one-step face search.
inline std::set<Mask> down_closure(const std::set<Mask>& masks) {
  std::set<Mask> out;
  for (auto m : masks) {
    for (Mask s = m; s != 0; s = (s - 1) & m) out.insert(s);
  }
  return out;
}

inline std::set<Mask> up_closure(const std::set<Mask>& masks, std::size_t n) {
  std::set<Mask> out;
  for (Mask s = 1; s <= full_mask(n); ++s) {
    for (auto m : masks) {
      if ((s & m) == m) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

inline bool oracle_is_simplicial(const std::set<Mask>& masks) { return down_closure(masks) == masks; }
inline bool oracle_is_cosimplicial(const std::set<Mask>& masks, std::size_t n) {
  return up_closure(masks, n) == masks;
}

inline Hypergraph random_simplicial(Rng& rng, std::size_t n) {
  auto vs = VertexSet::numbered(n);
  return from_masks(vs, down_closure(random_masks(rng, n, uniform_int(rng, 1, 4))));
}

inline Hypergraph random_cosimplicial(Rng& rng, std::size_t n) {
  auto vs = VertexSet::numbered(n);
  return from_masks(vs, up_closure(random_masks(rng, n, uniform_int(rng, 1, 3)), n));
}

/// Each monomial of the grade is present with probability `density`.
/// Every simplicial complex on {0..n-1}, as down-closed mask families
/// (7581 of them for n = 5, counting the empty one).
inline std::vector<std::set<Mask>> all_simplicial_masks(std::size_t n) {
  std::vector<Mask> order;
  for (Mask m = 1; m <= full_mask(n); ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::set<Mask>> out;
  std::set<Mask> current;
  auto faces_present = [&](Mask m) {
    if (std::popcount(m) == 1) return true;
    for (Mask bit = 1; bit <= m; bit <<= 1) {
      if ((m & bit) && !current.contains(m & ~bit)) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      out.push_back(current);
      return;
    }
    self(self, i + 1);
    if (faces_present(order[i])) {
      current.insert(order[i]);
      self(self, i + 1);
      current.erase(order[i]);
    }
  };
  recurse(recurse, 0);
  return out;
}

template <Variance V>
ExteriorForm<V> random_form(Rng& rng, std::size_t n, int grade, double density = 0.6) {
  ExteriorForm<V> form(grade);
  if (grade == 0) return ExteriorForm<V>::scalar(random_nonzero(rng));
  for (Mask m = 1; m <= full_mask(n); ++m) {
    if (std::popcount(m) != grade || !coin(rng, density)) continue;
    const auto edge = edge_from_mask(m);
    std::vector<VertexIndex> v(edge.vertices().begin(), edge.vertices().end());
    form.add_monomial(v, random_nonzero(rng));
  }
  return form;
}

inline ElementaryPath random_path(Rng& rng, std::size_t n, std::size_t length) {
  std::vector<VertexIndex> v(length);
  for (auto& x : v) x = VertexIndex(uniform_int(rng, 0, int(n) - 1));
  return ElementaryPath(std::move(v));
}

inline PathVector random_path_vector(Rng& rng, std::size_t n, int grade, int terms = 3) {
  PathVector out;
  for (int i = 0; i < terms; ++i) {
    out.add_term(random_path(rng, n, std::size_t(grade + 1)), random_rational(rng));
  }
  return out;
}

/// All n^length sequences, in lexicographic order.
inline std::vector<ElementaryPath> all_paths(std::size_t n, std::size_t length) {
  std::vector<ElementaryPath> out;
  std::vector<VertexIndex> v(length, 0);
  for (;;) {
    out.emplace_back(v);
    std::size_t i = length;
    while (i > 0 && v[i - 1] + 1 == n) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

}  // namespace hyperdiff::testing
