#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "zzhg/complex.hpp"
#include "zzhg/homology.hpp"

namespace zzhg {

enum class Mode { Union, Intersection };
enum class Arrow { Forward, Backward };
enum class Axis { Index, Time };

/// Alternating sequence of complexes at doubled positions 0..2l:
/// even positions hold snapshot complexes, odd positions the
/// interleaved union (or intersection) of their neighbours. Arrow q
/// connects positions q and q+1; in union mode even->odd arrows point
/// forward and odd->even backward, intersection mode the reverse.
struct ZigzagFiltration {
  std::vector<SimplicialComplex> complexes;
  std::vector<Arrow> directions;
  std::vector<double> times;
  Mode mode = Mode::Union;

  std::size_t positions() const { return complexes.size(); }
  std::size_t snapshot_count() const { return complexes.empty() ? 0 : complexes.size() / 2 + 1; }
};

inline ZigzagFiltration interleave(const std::vector<SimplicialComplex>& snapshots,
                                   const std::vector<double>& mids, Mode mode) {
  if (snapshots.empty()) throw std::invalid_argument("no snapshot complexes");
  if (mids.size() != snapshots.size())
    throw std::invalid_argument("snapshot and time counts differ");
  for (std::size_t i = 1; i < mids.size(); ++i)
    if (!(mids[i - 1] < mids[i]))
      throw std::invalid_argument("snapshot times must be strictly increasing");

  ZigzagFiltration f;
  f.mode = mode;
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    if (i > 0) {
      f.complexes.push_back(mode == Mode::Union
                                ? union_of(snapshots[i - 1], snapshots[i])
                                : intersection_of(snapshots[i - 1], snapshots[i]));
      f.times.push_back((mids[i - 1] + mids[i]) / 2.0);
      if (mode == Mode::Union) {
        f.directions.push_back(Arrow::Forward);   // K_i  ->  K_i u K_i+1
        f.directions.push_back(Arrow::Backward);  // K_i u K_i+1  <-  K_i+1
      } else {
        f.directions.push_back(Arrow::Backward);
        f.directions.push_back(Arrow::Forward);
      }
    }
    f.complexes.push_back(snapshots[i]);
    f.times.push_back(mids[i]);
  }
  return f;
}

enum class StepKind { Insert, Delete };

/// Single-simplex refinement of one filtration arrow. `position` is
/// the index of the complex the step helps reach, so replaying all
/// steps with position <= j from the empty complex reproduces the
/// complex at position j.
struct ElementaryStep {
  StepKind kind = StepKind::Insert;
  Simplex simplex;
  std::size_t position = 0;
};

/// Decomposes the filtration into elementary steps: a leading forward
/// arrow from the empty complex builds the first complex, then each
/// arrow contributes its set difference. Insertions are ordered
/// faces-first (dimension ascending, lexicographic), deletions
/// cofaces-first (dimension descending, lexicographic).
inline std::vector<ElementaryStep> schedule(const ZigzagFiltration& f) {
  std::vector<ElementaryStep> steps;
  for (const Simplex& s : f.complexes.front().simplices())
    steps.push_back({StepKind::Insert, s, 0});
  for (std::size_t q = 0; q + 1 < f.complexes.size(); ++q) {
    const SimplicialComplex& from = f.complexes[q];
    const SimplicialComplex& to = f.complexes[q + 1];
    std::vector<Simplex> diff;
    if (f.directions[q] == Arrow::Forward) {
      if (!to.includes(from))
        throw std::invalid_argument("forward arrow without inclusion at position " +
                                    std::to_string(q));
      std::set_difference(to.simplices().begin(), to.simplices().end(),
                          from.simplices().begin(), from.simplices().end(),
                          std::back_inserter(diff), SimplexLess{});
      for (Simplex& s : diff) steps.push_back({StepKind::Insert, std::move(s), q + 1});
    } else {
      if (!from.includes(to))
        throw std::invalid_argument("backward arrow without inclusion at position " +
                                    std::to_string(q));
      std::set_difference(from.simplices().begin(), from.simplices().end(),
                          to.simplices().begin(), to.simplices().end(),
                          std::back_inserter(diff), SimplexLess{});
      std::sort(diff.begin(), diff.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
      });
      for (Simplex& s : diff) steps.push_back({StepKind::Delete, std::move(s), q + 1});
    }
  }
  return steps;
}

namespace detail {

/// One persistence interval over fine complex indices: the class is
/// alive in F_t for birth <= t <= death (closed at both ends).
struct FineInterval {
  int dim = 0;
  long birth = 0;
  long death = 0;
};

/// Simplex-wise zigzag persistence over GF(2).
///
/// For each dimension p the reduction maintains a cycle matrix whose
/// columns span Z_p of the current complex; columns marked as
/// boundaries span B_p and each carries a (p+1)-chain bounding it.
/// Live columns project to a homology basis compatible with the
/// filtration so far: each carries the fine index at which its class
/// was born. Column pivots (largest slot index) are kept pairwise
/// distinct per dimension. Every (re-)insertion takes a fresh slot, so
/// slots of deleted simplices are never revisited.
class ZigzagReduction {
 public:
  explicit ZigzagReduction(int p_max) : p_max_(p_max) {}

  void insert(const Simplex& s) {
    op_insert_.push_back(true);
    ++step_;
    int p = simplex_dim(s);
    Dims& dp = dim(p);
    std::uint32_t slot = dp.next_slot++;
    auto inserted = dp.slot_of.emplace(s, slot).second;
    if (!inserted) throw std::logic_error("simplex inserted twice");

    // Express the boundary of s in terms of cycle columns one
    // dimension down.
    Gf2Col bdry;
    std::vector<int> reducers;
    bool all_boundary = true;
    if (p > 0) {
      Dims& dq = dims_[p - 1];
      Simplex facet(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        facet.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) facet.push_back(s[i]);
        bdry.push_back(dq.slot_of.at(facet));
      }
      std::sort(bdry.begin(), bdry.end());
      Gf2Col residue = bdry;
      while (!residue.empty()) {
        int col = dq.pivot_owner.at(residue.back());
        gf2_xor_into(residue, dq.z[col]);
        reducers.push_back(col);
        if (dq.birth[col] >= 0) all_boundary = false;
      }
    }

    if (all_boundary) {
      // The boundary was already a boundary: s completes a new p-cycle
      // made of s plus the chains bounding the reducing columns.
      Gf2Col cycle{slot};
      if (p > 0) {
        Dims& dq = dims_[p - 1];
        for (int col : reducers) gf2_xor_into(cycle, dp.chains[dq.chain[col]]);
      }
      assert(cycle.back() == slot);
      int idx = acquire_column(dp, std::move(cycle), step_, -1);
      dp.pivot_owner.emplace(slot, idx);
    } else {
      // s fills a live (p-1)-cycle: the youngest class in the zigzag
      // birth order among the live reducers dies.
      Dims& dq = dims_[p - 1];
      int dying = -1;
      for (int col : reducers)
        if (dq.birth[col] >= 0 && (dying < 0 || birth_less(dq.birth[dying], dq.birth[col])))
          dying = col;
      emit(p - 1, dq.birth[dying], step_ - 1);
      dq.pivot_owner.erase(dq.z[dying].back());
      dq.z[dying] = std::move(bdry);
      dq.birth[dying] = -1;
      dq.chain[dying] = acquire_chain(dp, Gf2Col{slot});
      restore_pivots(p - 1, dying);
    }
  }

  void remove(const Simplex& s) {
    op_insert_.push_back(false);
    ++step_;
    int p = simplex_dim(s);
    Dims& dp = dim(p);
    auto it = dp.slot_of.find(s);
    if (it == dp.slot_of.end()) throw std::logic_error("deleting absent simplex");
    std::uint32_t slot = it->second;
    dp.slot_of.erase(it);

    std::vector<int> holders;
    for (int col : dp.used)
      if (std::binary_search(dp.z[col].begin(), dp.z[col].end(), slot))
        holders.push_back(col);

    if (holders.empty()) {
      // s supports no cycle, so removing it shrinks the boundary space
      // one dimension down: one boundary column loses its bounding
      // chain and is reborn as a live cycle.
      if (p == 0) throw std::logic_error("vertex outside every cycle column");
      Dims& dq = dims_[p - 1];
      std::vector<int> affected;
      for (int col : dq.used)
        if (dq.birth[col] < 0 &&
            std::binary_search(dp.chains[dq.chain[col]].begin(),
                               dp.chains[dq.chain[col]].end(), slot))
          affected.push_back(col);
      if (affected.empty()) throw std::logic_error("simplex outside every chain");
      int keep = affected.front();
      for (int col : affected)
        if (dq.z[col].back() < dq.z[keep].back()) keep = col;
      // keep has the smallest pivot, so adding it elsewhere preserves
      // the other columns' pivots.
      for (int col : affected) {
        if (col == keep) continue;
        gf2_xor_into(dq.z[col], dq.z[keep]);
        gf2_xor_into(dp.chains[dq.chain[col]], dp.chains[dq.chain[keep]]);
      }
      release_chain(dp, dq.chain[keep]);
      dq.chain[keep] = -1;
      dq.birth[keep] = step_;
    } else {
      // s sits in live cycles: the minimal involved class in the zigzag
      // birth order dies. Boundary columns cannot contain s since s has
      // no cofaces at deletion time.
      // First strip s from the chains of this dimension.
      const Gf2Col& any_cycle = dp.z[holders.front()];
      for (std::size_t ci = 0; ci < dp.chains.size(); ++ci)
        if (dp.chain_used[ci] &&
            std::binary_search(dp.chains[ci].begin(), dp.chains[ci].end(), slot))
          gf2_xor_into(dp.chains[ci], any_cycle);

      std::sort(holders.begin(), holders.end(), [&](int a, int b) {
        assert(dp.birth[a] >= 0 && dp.birth[b] >= 0);
        return birth_less(dp.birth[a], dp.birth[b]);
      });
      int dying = holders.front();
      emit(p, dp.birth[dying], step_ - 1);

      // Strip s from the remaining holders, keeping pivots distinct by
      // always adding the carried column with the larger pivot.
      Gf2Col carried = std::move(dp.z[dying]);
      std::uint32_t carried_pivot = carried.back();
      dp.pivot_owner.erase(carried_pivot);
      for (std::size_t i = 1; i < holders.size(); ++i) {
        int col = holders[i];
        std::uint32_t piv = dp.z[col].back();
        if (piv > carried_pivot) {
          gf2_xor_into(dp.z[col], carried);
        } else {
          Gf2Col tmp = dp.z[col];
          gf2_xor_into(dp.z[col], carried);
          dp.pivot_owner[carried_pivot] = col;
          dp.pivot_owner.erase(piv);
          carried = std::move(tmp);
          carried_pivot = piv;
        }
      }
      release_column(dp, dying);
    }
  }

  /// Closes the intervals of classes alive in the final complex.
  std::vector<FineInterval> finish() {
    for (int p = 0; p <= p_max_ && p < static_cast<int>(dims_.size()); ++p)
      for (int col : dims_[p].used)
        if (dims_[p].birth[col] >= 0) emit(p, dims_[p].birth[col], step_);
    return std::move(out_);
  }

  long steps_applied() const { return step_; }

 private:
  struct Dims {
    std::map<Simplex, std::uint32_t> slot_of;
    std::uint32_t next_slot = 0;
    // Cycle matrix with per-column birth (>= 1 live, -1 boundary) and,
    // for boundary columns, the index of the bounding chain one
    // dimension up.
    std::vector<Gf2Col> z;
    std::vector<long> birth;
    std::vector<int> chain;
    std::vector<int> used;
    std::vector<int> free_cols;
    std::unordered_map<std::uint32_t, int> pivot_owner;
    // Chains of this dimension, paired with boundary columns one
    // dimension down.
    std::vector<Gf2Col> chains;
    std::vector<char> chain_used;
    std::vector<int> free_chains;
  };

  Dims& dim(int p) {
    if (static_cast<int>(dims_.size()) <= p) dims_.resize(p + 1);
    return dims_[p];
  }

  bool born_forward(long b) const { return op_insert_[static_cast<std::size_t>(b) - 1]; }

  /// Total order on birth indices: backward births below forward
  /// births, forward births ascending in time, backward births
  /// descending.
  bool birth_less(long a, long b) const {
    if (a == b) return false;
    bool fa = born_forward(a), fb = born_forward(b);
    if (fa != fb) return !fa;
    return fa ? a < b : a > b;
  }

  void emit(int p, long birth, long death) {
    if (p <= p_max_) out_.push_back({p, birth, death});
  }

  int acquire_column(Dims& d, Gf2Col col, long birth, int chain_idx) {
    int idx;
    if (!d.free_cols.empty()) {
      idx = d.free_cols.back();
      d.free_cols.pop_back();
      d.z[idx] = std::move(col);
      d.birth[idx] = birth;
      d.chain[idx] = chain_idx;
    } else {
      idx = static_cast<int>(d.z.size());
      d.z.push_back(std::move(col));
      d.birth.push_back(birth);
      d.chain.push_back(chain_idx);
    }
    d.used.push_back(idx);
    return idx;
  }

  void release_column(Dims& d, int idx) {
    d.z[idx].clear();
    d.birth[idx] = -1;
    d.chain[idx] = -1;
    d.used.erase(std::find(d.used.begin(), d.used.end(), idx));
    d.free_cols.push_back(idx);
  }

  int acquire_chain(Dims& d, Gf2Col c) {
    int idx;
    if (!d.free_chains.empty()) {
      idx = d.free_chains.back();
      d.free_chains.pop_back();
      d.chains[idx] = std::move(c);
      d.chain_used[idx] = 1;
    } else {
      idx = static_cast<int>(d.chains.size());
      d.chains.push_back(std::move(c));
      d.chain_used.push_back(1);
    }
    return idx;
  }

  void release_chain(Dims& d, int idx) {
    d.chains[idx].clear();
    d.chain_used[idx] = 0;
    d.free_chains.push_back(idx);
  }

  /// Re-establishes pairwise distinct pivots in dimension q after the
  /// column `start` changed. Column additions follow the compatibility
  /// rules: boundaries absorb boundaries (updating chains), live
  /// columns absorb boundaries, and younger live columns absorb older
  /// ones; the modified column's pivot strictly decreases each round.
  void restore_pivots(int q, int start) {
    Dims& d = dims_[q];
    int cur = start;
    while (true) {
      std::uint32_t piv = d.z[cur].back();
      auto it = d.pivot_owner.find(piv);
      if (it == d.pivot_owner.end()) {
        d.pivot_owner.emplace(piv, cur);
        return;
      }
      int other = it->second;
      if (other == cur) return;
      bool cur_bd = d.birth[cur] < 0;
      bool other_bd = d.birth[other] < 0;
      if (cur_bd && other_bd) {
        gf2_xor_into(d.z[cur], d.z[other]);
        gf2_xor_into(dims_[q + 1].chains[d.chain[cur]], dims_[q + 1].chains[d.chain[other]]);
      } else if (cur_bd && !other_bd) {
        gf2_xor_into(d.z[other], d.z[cur]);
        it->second = cur;
        cur = other;
      } else if (!cur_bd && other_bd) {
        gf2_xor_into(d.z[cur], d.z[other]);
      } else if (birth_less(d.birth[other], d.birth[cur])) {
        gf2_xor_into(d.z[cur], d.z[other]);
      } else {
        gf2_xor_into(d.z[other], d.z[cur]);
        it->second = cur;
        cur = other;
      }
    }
  }

  int p_max_;
  long step_ = 0;
  std::vector<Dims> dims_;
  std::vector<bool> op_insert_;
  std::vector<FineInterval> out_;
};

}  // namespace detail

/// One bar: birth/death coordinates on the barcode's axis plus the
/// underlying doubled filtration positions. `death_pos` is the first
/// position at which the class is absent; a pair is alive at position
/// q iff birth_pos <= q < death_pos. Open-ended classes die at doubled
/// position 2l+1, one half-step past the last snapshot.
struct BarcodeInterval {
  double birth = 0.0;
  double death = 0.0;
  int birth_pos = 0;
  int death_pos = 0;
  bool birth_half = false;
  bool death_half = false;
  bool open_end = false;
};

struct Barcode {
  Axis axis = Axis::Index;
  Mode mode = Mode::Union;
  std::size_t positions = 0;  // number of filtration positions (2l+1)
  std::map<int, std::vector<BarcodeInterval>> dims;
  std::vector<double> ticks;  // snapshot coordinates, for rendering
};

inline std::size_t alive_count(const Barcode& b, int p, int position) {
  auto it = b.dims.find(p);
  if (it == b.dims.end()) return 0;
  std::size_t n = 0;
  for (const BarcodeInterval& iv : it->second)
    if (iv.birth_pos <= position && position < iv.death_pos) ++n;
  return n;
}

inline void sort_pairs(Barcode& b) {
  for (auto& [p, pairs] : b.dims)
    std::sort(pairs.begin(), pairs.end(),
              [](const BarcodeInterval& x, const BarcodeInterval& y) {
                if (x.birth != y.birth) return x.birth < y.birth;
                if (x.death != y.death) return x.death < y.death;
                return x.open_end < y.open_end;
              });
}

/// Zigzag persistence barcode on the index axis. Fine-grained
/// birth/death events from the simplex-wise reduction are snapped to
/// the doubled positions of their arrows; classes never visible at a
/// position boundary are dropped.
inline Barcode zigzag_barcode(const ZigzagFiltration& f, int p_max) {
  if (p_max < 0) throw std::invalid_argument("p_max must be non-negative");
  for (const SimplicialComplex& k : f.complexes) require_cap_for(k, p_max);

  std::vector<ElementaryStep> steps = schedule(f);
  // steps_until[j]: fine index of the complex at position j.
  std::vector<long> steps_until(f.positions(), 0);
  for (const ElementaryStep& st : steps) ++steps_until[st.position];
  for (std::size_t j = 1; j < steps_until.size(); ++j) steps_until[j] += steps_until[j - 1];

  detail::ZigzagReduction reduction(p_max);
  for (const ElementaryStep& st : steps) {
    if (st.kind == StepKind::Insert)
      reduction.insert(st.simplex);
    else
      reduction.remove(st.simplex);
  }

  Barcode bc;
  bc.axis = Axis::Index;
  bc.mode = f.mode;
  bc.positions = f.positions();
  for (int p = 0; p <= p_max; ++p) bc.dims[p];
  for (std::size_t i = 0; i < f.snapshot_count(); ++i)
    bc.ticks.push_back(static_cast<double>(i));

  for (const detail::FineInterval& fi : reduction.finish()) {
    auto lb = std::lower_bound(steps_until.begin(), steps_until.end(), fi.birth);
    if (lb == steps_until.end() || *lb > fi.death) continue;  // never reaches a position
    int birth_pos = static_cast<int>(lb - steps_until.begin());
    auto ub = std::upper_bound(steps_until.begin(), steps_until.end(), fi.death);
    BarcodeInterval iv;
    iv.birth_pos = birth_pos;
    iv.death_pos = static_cast<int>(ub - steps_until.begin());
    iv.open_end = (ub == steps_until.end());
    iv.birth = birth_pos / 2.0;
    iv.death = iv.death_pos / 2.0;
    iv.birth_half = birth_pos % 2 != 0;
    iv.death_half = iv.death_pos % 2 != 0;
    bc.dims[fi.dim].push_back(iv);
  }
  sort_pairs(bc);
  return bc;
}

/// Replaces index positions by the filtration's per-position times.
/// Open-ended deaths extrapolate half a mean snapshot spacing past the
/// final time.
inline Barcode to_time_axis(const Barcode& b, const ZigzagFiltration& f) {
  if (b.axis == Axis::Time) throw std::invalid_argument("barcode is already on the time axis");
  if (b.positions != f.positions())
    throw std::invalid_argument("barcode does not match the filtration");
  std::size_t last = f.positions() - 1;
  double spacing = 0.0;
  if (f.snapshot_count() > 1)
    spacing = (f.times[last] - f.times[0]) / static_cast<double>(f.snapshot_count() - 1);
  Barcode out = b;
  out.axis = Axis::Time;
  out.ticks.clear();
  for (std::size_t q = 0; q < f.positions(); q += 2) out.ticks.push_back(f.times[q]);
  for (auto& [p, pairs] : out.dims) {
    for (BarcodeInterval& iv : pairs) {
      iv.birth = f.times[iv.birth_pos];
      iv.death = iv.open_end ? f.times[last] + spacing / 2.0 : f.times[iv.death_pos];
    }
  }
  sort_pairs(out);
  return out;
}

}  // namespace zzhg
