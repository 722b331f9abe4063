#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "zzhg/complex.hpp"

namespace zzhg {

/// A GF(2) column: sorted row indices of the non-zero entries. The
/// pivot of a non-empty column is its largest row index.
using Gf2Col = std::vector<std::uint32_t>;

/// a ^= b, keeping a sorted (symmetric difference of index sets).
inline void gf2_xor_into(Gf2Col& a, const Gf2Col& b) {
  Gf2Col out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  a = std::move(out);
}

/// Sparse GF(2) matrix, stored column-wise.
struct Gf2Matrix {
  std::size_t rows = 0;
  std::vector<Gf2Col> cols;
};

/// Matrix rank via left-to-right column reduction with pivot
/// bookkeeping on the lowest (largest-index) non-zero row.
inline std::size_t gf2_rank(const Gf2Matrix& m) {
  std::unordered_map<std::uint32_t, Gf2Col> pivot_col;
  std::size_t rank = 0;
  for (const Gf2Col& c : m.cols) {
    Gf2Col r = c;
    while (!r.empty()) {
      auto it = pivot_col.find(r.back());
      if (it == pivot_col.end()) break;
      gf2_xor_into(r, it->second);
    }
    if (!r.empty()) {
      ++rank;
      pivot_col.emplace(r.back(), std::move(r));
    }
  }
  return rank;
}

/// Basis of the kernel of m, as combination vectors over column
/// indices: reduces columns left to right with a companion matrix and
/// returns the companion columns of the ones that reduce to zero.
inline std::vector<Gf2Col> gf2_kernel_basis(const Gf2Matrix& m) {
  std::unordered_map<std::uint32_t, std::size_t> owner;
  std::vector<Gf2Col> reduced(m.cols.size());
  std::vector<Gf2Col> companion(m.cols.size());
  std::vector<Gf2Col> kernel;
  for (std::size_t j = 0; j < m.cols.size(); ++j) {
    reduced[j] = m.cols[j];
    companion[j] = {static_cast<std::uint32_t>(j)};
    while (!reduced[j].empty()) {
      auto it = owner.find(reduced[j].back());
      if (it == owner.end()) break;
      gf2_xor_into(reduced[j], reduced[it->second]);
      gf2_xor_into(companion[j], companion[it->second]);
    }
    if (reduced[j].empty()) {
      kernel.push_back(companion[j]);
    } else {
      owner.emplace(reduced[j].back(), j);
    }
  }
  return kernel;
}

/// Boundary matrix of the p-simplices: columns indexed by p-simplices
/// in canonical order, rows by (p-1)-simplices; entry (tau, sigma) = 1
/// iff tau is a facet of sigma. For p = 0 the matrix has zero rows.
inline Gf2Matrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 0) throw std::invalid_argument("dimension must be non-negative");
  Gf2Matrix m;
  std::vector<Simplex> faces;
  std::map<Simplex, std::uint32_t> face_index;
  if (p > 0) {
    faces = k.simplices_of_dim(p - 1);
    for (std::size_t i = 0; i < faces.size(); ++i)
      face_index.emplace(faces[i], static_cast<std::uint32_t>(i));
  }
  m.rows = faces.size();
  for (const Simplex& s : k.simplices()) {
    if (simplex_dim(s) != p) continue;
    Gf2Col col;
    if (p > 0) {
      Simplex facet(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        facet.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) facet.push_back(s[i]);
        col.push_back(face_index.at(facet));
      }
      std::sort(col.begin(), col.end());
    }
    m.cols.push_back(std::move(col));
  }
  return m;
}

using BettiVector = std::vector<std::size_t>;

inline void require_cap_for(const SimplicialComplex& k, int p_max) {
  if (k.size_cap() && *k.size_cap() < p_max + 2)
    throw std::invalid_argument("size cap too small for requested homology dimension");
}

/// Betti numbers b_0..b_p_max over GF(2):
/// b_p = #p-simplices - rank d_p - rank d_{p+1}.
/// Requires the complex's cap to admit (p_max+1)-dimensional simplices.
inline BettiVector betti(const SimplicialComplex& k, int p_max) {
  require_cap_for(k, p_max);
  BettiVector out(p_max + 1, 0);
  std::size_t rank_lower = 0;  // rank d_p
  for (int p = 0; p <= p_max; ++p) {
    std::size_t n_p = k.simplices_of_dim(p).size();
    std::size_t rank_upper = gf2_rank(boundary_matrix(k, p + 1));
    out[p] = n_p - rank_lower - rank_upper;
    rank_lower = rank_upper;
  }
  return out;
}

/// Rank of the map H_p(k_sub) -> H_p(k_sup) induced by inclusion,
/// computed as dim((Z_p(k_sub) + B_p(k_sup)) / B_p(k_sup)). Serves as
/// an arrow-wise oracle for the zigzag module.
inline std::size_t induced_rank(const SimplicialComplex& k_sub,
                                const SimplicialComplex& k_sup, int p) {
  if (!k_sup.includes(k_sub))
    throw std::invalid_argument("k_sub is not included in k_sup");

  std::vector<Simplex> sup_p = k_sup.simplices_of_dim(p);
  std::map<Simplex, std::uint32_t> sup_index;
  for (std::size_t i = 0; i < sup_p.size(); ++i)
    sup_index.emplace(sup_p[i], static_cast<std::uint32_t>(i));

  // Cycle space of the subcomplex, re-indexed into the supercomplex.
  std::vector<Simplex> sub_p = k_sub.simplices_of_dim(p);
  std::vector<Gf2Col> cycles;
  for (const Gf2Col& combo : gf2_kernel_basis(boundary_matrix(k_sub, p))) {
    Gf2Col z;
    for (std::uint32_t j : combo) z.push_back(sup_index.at(sub_p[j]));
    std::sort(z.begin(), z.end());
    cycles.push_back(std::move(z));
  }

  Gf2Matrix bounds = boundary_matrix(k_sup, p + 1);
  Gf2Matrix stacked;
  stacked.rows = sup_p.size();
  stacked.cols = bounds.cols;
  std::size_t rank_b = gf2_rank(stacked);
  stacked.cols.insert(stacked.cols.end(), cycles.begin(), cycles.end());
  return gf2_rank(stacked) - rank_b;
}

}  // namespace zzhg
