#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "zzhg/core.hpp"

namespace zzhg {

/// One sliding window [start, start + w] with its position in the
/// cover and its midpoint time.
struct Window {
  std::size_t index = 0;
  double start = 0.0;
  double end = 0.0;
  double mid = 0.0;
};

/// Sliding-window cover of [t0, tf]: windows [t0 + i*s, t0 + i*s + w]
/// for i = 0..l, where l is the smallest index such that the last
/// window reaches tf. Requires 0 < s <= w. The last window may extend
/// past tf.
inline std::vector<Window> make_windows(double t0, double tf, double w, double s) {
  if (!(w > 0.0)) throw std::invalid_argument("window size must be positive");
  if (!(s > 0.0)) throw std::invalid_argument("shift must be positive");
  if (s > w) throw std::invalid_argument("shift must not exceed window size");
  if (t0 > tf) throw std::invalid_argument("tf must not precede t0");
  std::size_t ell = 0;
  if (tf - t0 > w) {
    double est = std::ceil((tf - t0 - w) / s);
    ell = est > 0.0 ? static_cast<std::size_t>(est) : 0;
    while (t0 + static_cast<double>(ell) * s + w < tf) ++ell;
    while (ell > 0 && t0 + static_cast<double>(ell - 1) * s + w >= tf) --ell;
  }
  std::vector<Window> out;
  out.reserve(ell + 1);
  for (std::size_t i = 0; i <= ell; ++i) {
    double a = t0 + static_cast<double>(i) * s;
    out.push_back({i, a, a + w, a + w / 2.0});
  }
  return out;
}

/// Sub-hypergraph of edges whose interval set meets the window; the
/// vertex set is exactly the union of the retained edges' vertices.
/// An empty snapshot is legal.
inline Hypergraph snapshot(const TemporalHypergraph& thg, const Window& window) {
  Hypergraph h;
  std::set<std::string> verts;
  for (const HyperEdge& e : thg.edges) {
    if (intersects(thg.intervals.at(e.id), {window.start, window.end})) {
      verts.insert(e.vertices.begin(), e.vertices.end());
      h.edges.push_back(e);
    }
  }
  h.vertices.assign(verts.begin(), verts.end());
  return h;
}

/// Windows and their snapshots, index-aligned.
struct SnapshotSequence {
  std::vector<Window> windows;
  std::vector<Hypergraph> snapshots;
};

inline SnapshotSequence snapshot_sequence(const TemporalHypergraph& thg,
                                          std::vector<Window> windows) {
  SnapshotSequence seq;
  seq.snapshots.reserve(windows.size());
  for (const Window& w : windows) seq.snapshots.push_back(snapshot(thg, w));
  seq.windows = std::move(windows);
  return seq;
}

struct SummaryRow {
  double mid = 0.0;
  std::size_t n_edges = 0;
  std::size_t n_vertices = 0;
};

/// Per-window size statistics, one row per window in order.
inline std::vector<SummaryRow> summary_stats(const SnapshotSequence& seq) {
  std::vector<SummaryRow> rows;
  rows.reserve(seq.windows.size());
  for (std::size_t i = 0; i < seq.windows.size(); ++i) {
    rows.push_back({seq.windows[i].mid, seq.snapshots[i].edges.size(),
                    seq.snapshots[i].vertices.size()});
  }
  return rows;
}

}  // namespace zzhg
