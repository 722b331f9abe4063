#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zzhg/complex.hpp"
#include "zzhg/core.hpp"
#include "zzhg/homology.hpp"
#include "zzhg/io.hpp"
#include "zzhg/svg.hpp"
#include "zzhg/windows.hpp"
#include "zzhg/zigzag.hpp"

namespace zzhg {

enum class InputFormat { ThgJson, EventCsv };

struct PipelineConfig {
  std::string input;
  InputFormat format = InputFormat::ThgJson;
  EventMode event_mode = EventMode::Span;
  double merge_gap = 0.0;
  double window_size = 0.0;
  double shift = 0.0;
  std::optional<double> t0;
  std::optional<double> tf;
  int p_max = 1;
  Mode mode = Mode::Union;
  Axis axis = Axis::Index;
  std::string out;        // barcode JSON; empty = stdout
  std::string stats_out;  // per-window stats CSV; empty = skip
  std::string svg_out;    // barcode plot; empty = skip
};

inline void validate_config(const PipelineConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("no input file given");
  if (!(cfg.window_size > 0.0)) throw std::invalid_argument("window size must be positive");
  if (!(cfg.shift > 0.0)) throw std::invalid_argument("shift must be positive");
  if (cfg.shift > cfg.window_size)
    throw std::invalid_argument("shift must not exceed window size");
  if (cfg.p_max < 0 || cfg.p_max > 3) throw std::invalid_argument("dim must be 0..3");
  if (cfg.merge_gap < 0.0) throw std::invalid_argument("merge gap must be non-negative");
  if (cfg.t0 && cfg.tf && *cfg.t0 > *cfg.tf) throw std::invalid_argument("t0 exceeds tf");
}

inline TemporalHypergraph ingest(const PipelineConfig& cfg) {
  std::string text = read_file(cfg.input);
  if (cfg.format == InputFormat::ThgJson) return parse_thg_json(text);
  try {
    return from_event_log(parse_event_csv(text), cfg.event_mode, cfg.merge_gap);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

inline SnapshotSequence window_sequence(const TemporalHypergraph& thg,
                                        const PipelineConfig& cfg) {
  double t0 = cfg.t0 ? *cfg.t0 : thg.time_domain.start;
  double tf = cfg.tf ? *cfg.tf : thg.time_domain.end;
  return snapshot_sequence(thg, make_windows(t0, tf, cfg.window_size, cfg.shift));
}

struct PipelineResult {
  Barcode barcode;
  SnapshotSequence sequence;
};

/// Full pipeline: ingest, window, snapshot, build capped associated
/// ASCs, interleave, compute the zigzag barcode and map it to the
/// requested axis. Deterministic for identical inputs.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  TemporalHypergraph thg = ingest(cfg);
  SnapshotSequence seq = window_sequence(thg, cfg);
  VertexTable table(thg.vertices);
  SizeCap cap = cfg.p_max + 2;
  std::vector<SimplicialComplex> complexes;
  std::vector<double> mids;
  complexes.reserve(seq.snapshots.size());
  for (std::size_t i = 0; i < seq.snapshots.size(); ++i) {
    complexes.push_back(associated_asc(seq.snapshots[i], table, cap));
    mids.push_back(seq.windows[i].mid);
  }
  ZigzagFiltration filtration = interleave(complexes, mids, cfg.mode);
  Barcode barcode = zigzag_barcode(filtration, cfg.p_max);
  if (cfg.axis == Axis::Time) barcode = to_time_axis(barcode, filtration);
  return {std::move(barcode), std::move(seq)};
}

/// Pipeline through homology only: one Betti vector per window.
inline std::vector<BettiRow> betti_table(const PipelineConfig& cfg) {
  TemporalHypergraph thg = ingest(cfg);
  SnapshotSequence seq = window_sequence(thg, cfg);
  VertexTable table(thg.vertices);
  SizeCap cap = cfg.p_max + 2;
  std::vector<BettiRow> rows;
  rows.reserve(seq.snapshots.size());
  for (std::size_t i = 0; i < seq.snapshots.size(); ++i) {
    BettiRow r;
    r.window_index = i;
    r.mid = seq.windows[i].mid;
    r.betti = betti(associated_asc(seq.snapshots[i], table, cap), cfg.p_max);
    r.n_edges = seq.snapshots[i].edges.size();
    r.n_vertices = seq.snapshots[i].vertices.size();
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Command wrappers with the documented exit-code mapping: 0 success,
// 1 configuration error, 2 I/O or parse error. Diagnostics go to
// stderr; stdout stays silent when output paths are given.
// ---------------------------------------------------------------------------

inline int run_command(const PipelineConfig& cfg) {
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    PipelineResult result = run_pipeline(cfg);
    std::string json = barcode_to_json(result.barcode);
    if (cfg.out.empty())
      std::cout << json;
    else
      write_file(cfg.out, json);
    if (!cfg.stats_out.empty()) write_file(cfg.stats_out, stats_to_csv(result.sequence));
    if (!cfg.svg_out.empty()) write_file(cfg.svg_out, render_barcode(result.barcode));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int betti_command(const PipelineConfig& cfg) {
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    std::string csv = betti_to_csv(betti_table(cfg), cfg.p_max);
    if (cfg.out.empty())
      std::cout << csv;
    else
      write_file(cfg.out, csv);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int stats_command(const PipelineConfig& cfg) {
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    TemporalHypergraph thg = ingest(cfg);
    std::string csv = stats_to_csv(window_sequence(thg, cfg));
    if (cfg.out.empty())
      std::cout << csv;
    else
      write_file(cfg.out, csv);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int render_command(const std::string& input, const std::string& out) {
  if (input.empty()) {
    std::cerr << "error: no input file given\n";
    return 1;
  }
  try {
    Barcode b = barcode_from_json(read_file(input));
    std::string svg = render_barcode(b);
    if (out.empty())
      std::cout << svg;
    else
      write_file(out, svg);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zzhg
