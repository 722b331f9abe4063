// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exits
// non-zero if any criterion fails.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zzhg/pipeline.hpp"

using namespace zzhg;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string toy_path() { return std::string(ZZHG_DATA_DIR) + "/toy_thg.json"; }

PipelineConfig toy_config(Mode mode) {
  PipelineConfig cfg;
  cfg.input = toy_path();
  cfg.window_size = 2;
  cfg.shift = 2;
  cfg.t0 = 0;
  cfg.tf = 10;
  cfg.p_max = 1;
  cfg.mode = mode;
  return cfg;
}

struct PairKey {
  int dim;
  int birth_pos;
  int death_pos;
  bool open;
  auto key() const { return std::tie(dim, birth_pos, death_pos, open); }
  bool operator<(const PairKey& o) const { return key() < o.key(); }
  bool operator==(const PairKey& o) const { return key() == o.key(); }
};

std::vector<PairKey> pair_multiset(const Barcode& b) {
  std::vector<PairKey> out;
  for (const auto& [p, pairs] : b.dims)
    for (const BarcodeInterval& iv : pairs)
      out.push_back({p, iv.birth_pos, iv.death_pos, iv.open_end});
  std::sort(out.begin(), out.end());
  return out;
}

// Shared corpus for the oracle-based criteria: seeded random temporal
// hypergraphs windowed into at most 8 snapshots.
struct Fixture {
  ZigzagFiltration filtration;
  Barcode barcode;
};

std::vector<Fixture> oracle_corpus() {
  std::vector<Fixture> out;
  std::mt19937 rng(20230517);
  for (int i = 0; i < 20; ++i) {
    TemporalHypergraph thg = oracle::random_thg(rng);
    double w = 4.0 + static_cast<double>(rng() % 17) * 0.25;  // 4..8
    double s = 3.0 + static_cast<double>(rng() % 9) * 0.25;   // 3..5
    if (s > w) s = w;
    SnapshotSequence seq =
        snapshot_sequence(thg, make_windows(thg.time_domain.start, thg.time_domain.end, w, s));
    VertexTable table(thg.vertices);
    std::vector<SimplicialComplex> complexes;
    std::vector<double> mids;
    for (std::size_t j = 0; j < seq.snapshots.size(); ++j) {
      complexes.push_back(associated_asc(seq.snapshots[j], table, 4));
      mids.push_back(seq.windows[j].mid);
    }
    for (Mode mode : {Mode::Union, Mode::Intersection}) {
      Fixture f;
      f.filtration = interleave(complexes, mids, mode);
      f.barcode = zigzag_barcode(f.filtration, 2);
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool criterion_toy_barcode(std::string& detail) {
  auto start = Clock::now();
  Barcode bc = run_pipeline(toy_config(Mode::Union)).barcode;
  double elapsed = seconds_since(start);
  // Published toy multiset: D0 = { (0, half (0,1)), (0, open end) },
  // D1 = { (2, 3) }; doubled positions 0..9 with l = 4.
  std::vector<PairKey> expect = {{0, 0, 1, false}, {0, 0, 9, true}, {1, 4, 6, false}};
  bool match = pair_multiset(bc) == expect;
  bool d0_values = bc.dims.at(0).size() == 2 && bc.dims.at(0)[0].birth == 0.0 &&
                   bc.dims.at(0)[0].death == 0.5 && bc.dims.at(0)[0].death_half &&
                   bc.dims.at(0)[1].death == 4.5 && bc.dims.at(0)[1].open_end;
  bool d1_values = bc.dims.at(1).size() == 1 && bc.dims.at(1)[0].birth == 2.0 &&
                   bc.dims.at(1)[0].death == 3.0;
  std::ostringstream ss;
  ss << "multiset " << (match ? "exact" : "MISMATCH") << ", " << elapsed << " s";
  detail = ss.str();
  return match && d0_values && d1_values && elapsed < 1.0;
}

bool criterion_slice_betti(std::string& detail) {
  auto start = Clock::now();
  std::size_t positions_checked = 0;
  for (const Fixture& f : oracle_corpus()) {
    for (std::size_t q = 0; q < f.filtration.positions(); ++q) {
      BettiVector b = betti(f.filtration.complexes[q], 2);
      for (int p = 0; p <= 2; ++p) {
        if (alive_count(f.barcode, p, static_cast<int>(q)) != b[p]) {
          detail = "mismatch at position " + std::to_string(q) + " dim " + std::to_string(p);
          return false;
        }
      }
      ++positions_checked;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream ss;
  ss << positions_checked << " positions exact, " << elapsed << " s";
  detail = ss.str();
  return elapsed < 30.0;
}

bool criterion_arrow_rank(std::string& detail) {
  auto start = Clock::now();
  std::size_t arrows_checked = 0;
  for (const Fixture& f : oracle_corpus()) {
    for (std::size_t q = 0; q + 1 < f.filtration.positions(); ++q) {
      bool fwd = f.filtration.directions[q] == Arrow::Forward;
      const SimplicialComplex& sub = fwd ? f.filtration.complexes[q] : f.filtration.complexes[q + 1];
      const SimplicialComplex& sup = fwd ? f.filtration.complexes[q + 1] : f.filtration.complexes[q];
      for (int p = 0; p <= 2; ++p) {
        std::size_t shared = 0;
        for (const BarcodeInterval& iv : f.barcode.dims.at(p))
          if (iv.birth_pos <= static_cast<int>(q) && static_cast<int>(q + 1) < iv.death_pos)
            ++shared;
        if (shared != induced_rank(sub, sup, p)) {
          detail = "mismatch at arrow " + std::to_string(q) + " dim " + std::to_string(p);
          return false;
        }
      }
      ++arrows_checked;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream ss;
  ss << arrows_checked << " arrows exact, " << elapsed << " s";
  detail = ss.str();
  return elapsed < 60.0;
}

bool criterion_monotone(std::string& detail) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SimplicialComplex> ks;
    std::vector<double> mids;
    SimplicialComplex acc;
    int n = 2 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      acc = union_of(acc, oracle::random_complex(rng, 10, std::nullopt));
      ks.push_back(acc);
      mids.push_back(i);
    }
    ZigzagFiltration f = interleave(ks, mids, Mode::Union);
    std::vector<ElementaryStep> steps = schedule(f);
    for (const ElementaryStep& st : steps)
      if (st.kind != StepKind::Insert) {
        detail = "filtration was not insertion-only";
        return false;
      }
    std::vector<long> steps_until(f.positions(), 0);
    for (const ElementaryStep& st : steps) ++steps_until[st.position];
    for (std::size_t j = 1; j < steps_until.size(); ++j) steps_until[j] += steps_until[j - 1];
    std::vector<oracle::CoarsePair> expect = oracle::classic_persistence(steps, steps_until, 2);
    std::vector<oracle::CoarsePair> got = oracle::coarse_pairs(zigzag_barcode(f, 2));
    if (got != expect) {
      detail = "pair mismatch on trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "10 insertion-only filtrations pair-for-pair";
  return true;
}

bool criterion_counting(std::string& detail) {
  for (int m = 1; m <= 10; ++m) {
    Simplex edge;
    for (int v = 0; v < m; ++v) edge.push_back(static_cast<Vertex>(v));
    for (int cap = 1; cap <= m; ++cap) {
      std::uint64_t expect = subsimplex_count(m, cap);
      if (SimplicialComplex::closure({edge}, cap).size() != expect ||
          oracle::count_subsets(m, cap) != expect) {
        detail = "mismatch at m=" + std::to_string(m) + " cap=" + std::to_string(cap);
        return false;
      }
    }
    std::uint64_t unbounded = subsimplex_count(m, std::nullopt);
    if (unbounded != (std::uint64_t{1} << m) - 1 ||
        SimplicialComplex::closure({edge}, std::nullopt).size() != unbounded) {
      detail = "unbounded mismatch at m=" + std::to_string(m);
      return false;
    }
  }
  detail = "m <= 10, every cap and unbounded, exact";
  return true;
}

bool criterion_window_cover(std::string& detail) {
  std::vector<Window> ws = make_windows(0, 10, 2, 2);
  std::vector<std::pair<double, double>> expect = {{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}};
  if (ws.size() != expect.size()) {
    detail = "wrong window count for (0,10,2,2)";
    return false;
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i].start != expect[i].first || ws[i].end != expect[i].second) {
      detail = "wrong window " + std::to_string(i);
      return false;
    }

  std::mt19937 rng(777);
  for (int trial = 0; trial < 1000; ++trial) {
    double t0 = static_cast<double>(rng() % 100) * 0.25;
    double tf = t0 + static_cast<double>(rng() % 200) * 0.25;
    double w = 0.25 + static_cast<double>(rng() % 40) * 0.25;
    double s = 0.25 + static_cast<double>(rng() % 40) * 0.25;
    if (s > w) std::swap(s, w);
    std::vector<Window> cover = make_windows(t0, tf, w, s);
    bool ok = !cover.empty() && cover.front().start == t0 && cover.back().end >= tf;
    for (std::size_t i = 0; ok && i + 1 < cover.size(); ++i)
      ok = cover[i + 1].start <= cover[i].end;
    if (!ok) {
      detail = "coverage violated on trial " + std::to_string(trial);
      return false;
    }
    bool rejected = false;
    try {
      make_windows(t0, tf, s, w + 0.25);  // shift exceeds width
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    if (!rejected) {
      detail = "s > w was not rejected";
      return false;
    }
  }
  detail = "exact cover and 1000 random parameter draws";
  return true;
}

bool criterion_mode_similarity(std::string& detail) {
  Barcode u = run_pipeline(toy_config(Mode::Union)).barcode;
  Barcode i = run_pipeline(toy_config(Mode::Intersection)).barcode;
  for (int p = 0; p <= 1; ++p)
    if (u.dims.at(p).size() != i.dims.at(p).size()) {
      detail = "pair counts differ in dim " + std::to_string(p);
      return false;
    }
  detail = "union and intersection pair counts equal per dimension";
  return true;
}

bool criterion_determinism(std::string& detail) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "zzhg_acceptance";
  fs::create_directories(dir / "a");
  fs::create_directories(dir / "b");
  std::string cli = ZZHG_CLI_PATH;
  for (const char* run : {"a", "b"}) {
    std::string cmd = cli + " run --input " + toy_path() +
                      " --window-size 2 --shift 2 --t0 0 --tf 10 --dim 1" +
                      " --mode union --axis index --out " + (dir / run / "bc.json").string() +
                      " --stats-out " + (dir / run / "stats.csv").string() + " --svg " +
                      (dir / run / "plot.svg").string();
    if (std::system(cmd.c_str()) != 0) {
      detail = "CLI run failed";
      return false;
    }
  }
  for (const char* file : {"bc.json", "stats.csv", "plot.svg"}) {
    std::string ha = oracle::sha256_hex(read_file((dir / "a" / file).string()));
    std::string hb = oracle::sha256_hex(read_file((dir / "b" / file).string()));
    if (ha != hb) {
      detail = std::string("SHA-256 differs for ") + file;
      return false;
    }
  }
  fs::remove_all(dir);
  detail = "SHA-256 equal for barcode JSON, stats CSV and SVG";
  return true;
}

bool criterion_performance(std::string& detail) {
  namespace fs = std::filesystem;
  // Synthetic event log: 5,000 point events over 140 edges and 22
  // vertices, windowed into 100 snapshots.
  std::mt19937 rng(987654);
  std::vector<std::vector<std::string>> pools;
  for (int e = 0; e < 140; ++e) {
    int size = 1 + static_cast<int>(rng() % 4);
    std::set<int> members;
    while (static_cast<int>(members.size()) < size) members.insert(static_cast<int>(rng() % 22));
    std::vector<std::string> pool;
    for (int v : members) pool.push_back("v" + std::to_string(v));
    pools.push_back(std::move(pool));
  }
  std::string csv = "edge_id,node_id,timestamp\n";
  for (int i = 0; i < 5000; ++i) {
    int e = static_cast<int>(rng() % pools.size());
    const std::vector<std::string>& pool = pools[e];
    csv += "e" + std::to_string(e) + "," + pool[rng() % pool.size()] + "," +
           format_double(static_cast<double>(rng() % 99000) / 100.0) + "\n";
  }
  fs::path path = fs::temp_directory_path() / "zzhg_perf_events.csv";
  write_file(path.string(), csv);

  PipelineConfig cfg;
  cfg.input = path.string();
  cfg.format = InputFormat::EventCsv;
  cfg.event_mode = EventMode::Points;
  cfg.window_size = 20;
  cfg.shift = 10;
  cfg.t0 = 0;
  cfg.tf = 1010;
  cfg.p_max = 2;

  auto start = Clock::now();
  PipelineResult result = run_pipeline(cfg);
  double elapsed = seconds_since(start);
  fs::remove(path);

  std::size_t windows = result.sequence.windows.size();
  TemporalHypergraph thg = from_event_log(parse_event_csv(csv), EventMode::Points);
  VertexTable table(thg.vertices);
  std::size_t max_simplices = 0;
  for (const Hypergraph& h : result.sequence.snapshots)
    max_simplices = std::max(max_simplices, associated_asc(h, table, 4).size());

  struct rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  double peak_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);

  std::ostringstream ss;
  ss << windows << " windows, max " << max_simplices << " simplices, " << elapsed
     << " s, peak " << peak_gb << " GB";
  detail = ss.str();
  return windows == 100 && max_simplices <= 500 && elapsed < 60.0 && peak_gb < 1.0;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"toy barcode reproduction", criterion_toy_barcode},
      {"slice-Betti consistency", criterion_slice_betti},
      {"arrow-rank consistency", criterion_arrow_rank},
      {"monotone specialization", criterion_monotone},
      {"subsimplex counting formulas", criterion_counting},
      {"window cover", criterion_window_cover},
      {"union-vs-intersection similarity", criterion_mode_similarity},
      {"byte determinism", criterion_determinism},
      {"desk-scale performance", criterion_performance},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
              << ": " << detail << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
