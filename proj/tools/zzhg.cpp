// Command-line front end for zigzag persistence of temporal
// hypergraphs: ingest an interval-attributed hypergraph or an event
// log, slice it into sliding-window snapshots, and emit barcodes,
// Betti tables, summary statistics and SVG plots.

#include <map>
#include <string>

#include <CLI11.hpp>

#include "zzhg/pipeline.hpp"

namespace {

void add_input_flags(CLI::App* cmd, zzhg::PipelineConfig& cfg) {
  cmd->add_option("--input", cfg.input, "input file")->required();
  std::map<std::string, zzhg::InputFormat> formats{
      {"thg-json", zzhg::InputFormat::ThgJson}, {"event-csv", zzhg::InputFormat::EventCsv}};
  cmd->add_option("--format", cfg.format, "input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("thg-json");
  std::map<std::string, zzhg::EventMode> modes{{"span", zzhg::EventMode::Span},
                                               {"points", zzhg::EventMode::Points}};
  cmd->add_option("--event-mode", cfg.event_mode,
                  "event-csv ingestion: span = one interval from first to last "
                  "timestamp per edge, points = one point interval per timestamp")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("span");
  cmd->add_option("--merge-gap", cfg.merge_gap,
                  "fuse point intervals closer than this gap (points mode)");
}

void add_window_flags(CLI::App* cmd, zzhg::PipelineConfig& cfg) {
  cmd->add_option("--window-size", cfg.window_size, "sliding window size w")->required();
  cmd->add_option("--shift", cfg.shift, "window shift s (0 < s <= w)")->required();
  cmd->add_option("--t0", cfg.t0, "override the start of the time domain");
  cmd->add_option("--tf", cfg.tf, "override the end of the time domain");
}

void add_dim_flag(CLI::App* cmd, zzhg::PipelineConfig& cfg) {
  cmd->add_option("--dim", cfg.p_max, "maximum homology dimension (0..3)")
      ->default_val(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag persistent homology of temporal hypergraphs"};
  app.require_subcommand(1);

  zzhg::PipelineConfig cfg;
  std::string render_input;
  std::string render_out;

  CLI::App* run = app.add_subcommand("run", "full pipeline: barcode JSON (+ stats, SVG)");
  add_input_flags(run, cfg);
  add_window_flags(run, cfg);
  add_dim_flag(run, cfg);
  std::map<std::string, zzhg::Mode> modes{{"union", zzhg::Mode::Union},
                                          {"intersection", zzhg::Mode::Intersection}};
  run->add_option("--mode", cfg.mode, "interleave adjacent complexes by union or intersection")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("union");
  std::map<std::string, zzhg::Axis> axes{{"index", zzhg::Axis::Index},
                                         {"time", zzhg::Axis::Time}};
  run->add_option("--axis", cfg.axis, "report positions as window indices or window times")
      ->transform(CLI::CheckedTransformer(axes, CLI::ignore_case))
      ->default_str("index");
  run->add_option("--out", cfg.out, "barcode JSON path (default: stdout)");
  run->add_option("--stats-out", cfg.stats_out, "also write per-window stats CSV");
  run->add_option("--svg", cfg.svg_out, "also write an SVG barcode plot");

  CLI::App* betti = app.add_subcommand("betti", "per-window Betti vectors as CSV");
  add_input_flags(betti, cfg);
  add_window_flags(betti, cfg);
  add_dim_flag(betti, cfg);
  betti->add_option("--out", cfg.out, "output CSV path (default: stdout)");

  CLI::App* stats = app.add_subcommand("stats", "per-window snapshot sizes as CSV");
  add_input_flags(stats, cfg);
  add_window_flags(stats, cfg);
  stats->add_option("--out", cfg.out, "output CSV path (default: stdout)");

  CLI::App* render = app.add_subcommand("render", "render a barcode JSON file as SVG");
  render->add_option("--input", render_input, "barcode JSON file")->required();
  render->add_option("--out", render_out, "output SVG path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run->parsed()) return zzhg::run_command(cfg);
  if (betti->parsed()) return zzhg::betti_command(cfg);
  if (stats->parsed()) return zzhg::stats_command(cfg);
  return zzhg::render_command(render_input, render_out);
}
