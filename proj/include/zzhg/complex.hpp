#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zzhg/core.hpp"

namespace zzhg {

using Vertex = std::uint32_t;

/// A simplex in canonical form: strictly ascending vertex list.
/// An n-vertex simplex has dimension n - 1.
using Simplex = std::vector<Vertex>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Canonical ordering: by dimension first, then lexicographic.
struct SimplexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Maximum vertex count per simplex; nullopt = unbounded.
using SizeCap = std::optional<int>;

inline bool same_cap(SizeCap a, SizeCap b) { return a == b; }

/// Maps vertex names to dense ids. Names are interned in lexicographic
/// order, so id order coincides with name order; every snapshot of a
/// sequence must share one table so vertices stay consistently
/// identified across complexes.
class VertexTable {
 public:
  VertexTable() = default;

  explicit VertexTable(std::vector<std::string> names) : names_(sorted_unique(std::move(names))) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      ids_.emplace(names_[i], static_cast<Vertex>(i));
  }

  Vertex id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw std::invalid_argument("unknown vertex: " + name);
    return it->second;
  }

  const std::string& name(Vertex v) const { return names_.at(v); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex> ids_;
};

/// Face-closed set of canonical simplices with an optional size cap.
/// Simplices iterate in (dimension, lexicographic) order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given generator simplices under the face relation,
  /// restricted to simplices of at most `cap` vertices.
  static SimplicialComplex closure(const std::vector<Simplex>& generators, SizeCap cap) {
    if (cap && *cap < 1) throw std::invalid_argument("size cap must be at least 1");
    std::set<Simplex, SimplexLess> acc;
    std::vector<Vertex> verts;
    for (const Simplex& g : generators) {
      verts = g;
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      int m = static_cast<int>(verts.size());
      int top = cap ? std::min(m, *cap) : m;
      Simplex sub;
      for (int k = 1; k <= top; ++k) enumerate_subsets(verts, k, sub, acc);
    }
    SimplicialComplex k;
    k.cap_ = cap;
    k.simplices_.assign(acc.begin(), acc.end());
    return k;
  }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  SizeCap size_cap() const { return cap_; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }

  bool contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexLess{});
  }

  /// True iff every simplex of `other` is present here.
  bool includes(const SimplicialComplex& other) const {
    return std::includes(simplices_.begin(), simplices_.end(),
                         other.simplices_.begin(), other.simplices_.end(), SimplexLess{});
  }

  /// Simplices of dimension p, in lexicographic order.
  std::vector<Simplex> simplices_of_dim(int p) const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
      if (simplex_dim(s) == p) out.push_back(s);
    return out;
  }

  int top_dimension() const {
    return simplices_.empty() ? -1 : simplex_dim(simplices_.back());
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.cap_ == b.cap_ && a.simplices_ == b.simplices_;
  }

  friend SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
  friend SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  static void enumerate_subsets(const std::vector<Vertex>& verts, int k, Simplex& cur,
                                std::set<Simplex, SimplexLess>& acc, std::size_t from = 0) {
    if (static_cast<int>(cur.size()) == k) {
      acc.insert(cur);
      return;
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
      cur.push_back(verts[i]);
      enumerate_subsets(verts, k, cur, acc, i + 1);
      cur.pop_back();
    }
  }

  std::vector<Simplex> simplices_;
  SizeCap cap_;
};

/// Set union of two complexes with equal caps; face-closed since the
/// union of face-closed sets is face-closed.
inline SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!same_cap(a.cap_, b.cap_)) throw std::invalid_argument("size caps differ");
  SimplicialComplex out;
  out.cap_ = a.cap_;
  std::set_union(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                 b.simplices_.end(), std::back_inserter(out.simplices_), SimplexLess{});
  return out;
}

inline SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!same_cap(a.cap_, b.cap_)) throw std::invalid_argument("size caps differ");
  SimplicialComplex out;
  out.cap_ = a.cap_;
  std::set_intersection(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                        b.simplices_.end(), std::back_inserter(out.simplices_), SimplexLess{});
  return out;
}

/// The associated ASC of a hypergraph: all non-empty subsets of each
/// hyperedge with at most `cap` vertices (all subsets when unbounded).
inline SimplicialComplex associated_asc(const Hypergraph& h, const VertexTable& table,
                                        SizeCap cap) {
  std::vector<Simplex> generators;
  generators.reserve(h.edges.size());
  for (const HyperEdge& e : h.edges) {
    Simplex g;
    g.reserve(e.vertices.size());
    for (const std::string& v : e.vertices) g.push_back(table.id(v));
    generators.push_back(std::move(g));
  }
  return SimplicialComplex::closure(generators, cap);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of subsimplices of a single m-vertex hyperedge under a size
/// cap: sum of C(m, j) for j = 1..min(m, cap), or 2^m - 1 unbounded.
inline std::uint64_t subsimplex_count(int m, SizeCap cap) {
  if (m < 1) throw std::invalid_argument("edge must have at least one vertex");
  if (!cap || *cap >= m) {
    if (m >= 64) throw std::overflow_error("subsimplex count overflows");
    return (std::uint64_t{1} << m) - 1;
  }
  std::uint64_t total = 0;
  for (int j = 1; j <= *cap; ++j) total += binomial(m, j);
  return total;
}

}  // namespace zzhg
