#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace zzhg {

/// Closed time interval [start, end]. Degenerate point intervals
/// (start == end) are legal and kept as-is.
struct Interval {
  double start = 0.0;
  double end = 0.0;
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.start == b.start && a.end == b.end;
}

/// Sorts intervals by start and fuses any pair whose gap is at most
/// `gap` (overlapping or abutting intervals fuse at gap = 0).
/// Idempotent: merging an already-merged list is the identity.
inline std::vector<Interval> merge_intervals(std::vector<Interval> ivs,
                                             double gap = 0.0) {
  if (ivs.empty()) return ivs;
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    return a.start < b.start || (a.start == b.start && a.end < b.end);
  });
  std::vector<Interval> out;
  out.push_back(ivs.front());
  for (std::size_t i = 1; i < ivs.size(); ++i) {
    if (ivs[i].start - out.back().end <= gap) {
      out.back().end = std::max(out.back().end, ivs[i].end);
    } else {
      out.push_back(ivs[i]);
    }
  }
  return out;
}

/// Closed-interval overlap test between an edge's interval set and a
/// window: true iff some interval I has I.start <= window.end and
/// window.start <= I.end. Expects `ivs` sorted and non-overlapping.
inline bool intersects(const std::vector<Interval>& ivs, const Interval& window) {
  for (const Interval& iv : ivs) {
    if (iv.start > window.end) break;
    if (window.start <= iv.end) return true;
  }
  return false;
}

/// Named hyperedge over named vertices. The vertex set is kept sorted
/// and duplicate-free.
struct HyperEdge {
  std::string id;
  std::vector<std::string> vertices;
};

/// Static hypergraph: sorted vertex set plus a family of hyperedges.
struct Hypergraph {
  std::vector<std::string> vertices;
  std::vector<HyperEdge> edges;
};

/// Edge-attributed temporal hypergraph. Every edge id maps to a
/// non-empty, sorted, merged interval list; time_domain spans the union
/// of all edge intervals.
struct TemporalHypergraph {
  std::vector<std::string> vertices;
  std::vector<HyperEdge> edges;
  std::map<std::string, std::vector<Interval>> intervals;
  Interval time_domain;
};

/// One row of an event log: (edge, vertex, timestamp).
struct EventRow {
  std::string edge_id;
  std::string vertex_id;
  double timestamp = 0.0;
};

struct RawEdge {
  std::string id;
  std::vector<std::string> vertices;
  std::vector<Interval> intervals;
};

inline std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline TemporalHypergraph build_temporal_hypergraph(std::vector<RawEdge> raw) {
  if (raw.empty()) throw std::invalid_argument("temporal hypergraph has no edges");
  TemporalHypergraph thg;
  std::set<std::string> vertex_set;
  std::set<std::string> seen_ids;
  bool first = true;
  for (RawEdge& e : raw) {
    if (!seen_ids.insert(e.id).second)
      throw std::invalid_argument("duplicate edge id: " + e.id);
    if (e.vertices.empty())
      throw std::invalid_argument("edge " + e.id + " has no vertices");
    if (e.intervals.empty())
      throw std::invalid_argument("edge " + e.id + " has no intervals");
    for (const Interval& iv : e.intervals) {
      if (!(std::isfinite(iv.start) && std::isfinite(iv.end)) || iv.start > iv.end)
        throw std::invalid_argument("edge " + e.id + " has a malformed interval");
    }
    HyperEdge he;
    he.id = e.id;
    he.vertices = sorted_unique(std::move(e.vertices));
    vertex_set.insert(he.vertices.begin(), he.vertices.end());
    std::vector<Interval> merged = merge_intervals(std::move(e.intervals));
    if (first) {
      thg.time_domain = {merged.front().start, merged.back().end};
      first = false;
    } else {
      thg.time_domain.start = std::min(thg.time_domain.start, merged.front().start);
      thg.time_domain.end = std::max(thg.time_domain.end, merged.back().end);
    }
    thg.intervals.emplace(he.id, std::move(merged));
    thg.edges.push_back(std::move(he));
  }
  thg.vertices.assign(vertex_set.begin(), vertex_set.end());
  return thg;
}

enum class EventMode { Span, Points };

/// Builds a temporal hypergraph from an event log. One hyperedge per
/// distinct edge_id whose vertex set is every vertex seen with it.
/// Span mode attaches a single [min ts, max ts] interval per edge;
/// points mode one degenerate interval per distinct timestamp, with
/// points closer than `gap` fused.
inline TemporalHypergraph from_event_log(const std::vector<EventRow>& rows,
                                         EventMode mode, double gap = 0.0) {
  if (rows.empty()) throw std::invalid_argument("event log is empty");
  struct Group {
    std::set<std::string> vertices;
    std::vector<double> times;
  };
  std::map<std::string, Group> groups;
  for (const EventRow& r : rows) {
    if (!std::isfinite(r.timestamp))
      throw std::invalid_argument("non-finite timestamp for edge " + r.edge_id);
    Group& g = groups[r.edge_id];
    g.vertices.insert(r.vertex_id);
    g.times.push_back(r.timestamp);
  }
  std::vector<RawEdge> raw;
  raw.reserve(groups.size());
  for (auto& [id, g] : groups) {
    RawEdge e;
    e.id = id;
    e.vertices.assign(g.vertices.begin(), g.vertices.end());
    if (mode == EventMode::Span) {
      auto [lo, hi] = std::minmax_element(g.times.begin(), g.times.end());
      e.intervals.push_back({*lo, *hi});
    } else {
      std::sort(g.times.begin(), g.times.end());
      g.times.erase(std::unique(g.times.begin(), g.times.end()), g.times.end());
      for (double t : g.times) e.intervals.push_back({t, t});
      e.intervals = merge_intervals(std::move(e.intervals), gap);
    }
    raw.push_back(std::move(e));
  }
  return build_temporal_hypergraph(std::move(raw));
}

/// Drops the temporal attributes, keeping vertex and edge sets.
inline Hypergraph static_projection(const TemporalHypergraph& thg) {
  return Hypergraph{thg.vertices, thg.edges};
}

}  // namespace zzhg
