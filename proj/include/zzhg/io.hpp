#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zzhg/core.hpp"
#include "zzhg/windows.hpp"
#include "zzhg/zigzag.hpp"

namespace zzhg {

/// Shortest round-trip decimal formatting, for byte-stable output.
inline std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Temporal hypergraph JSON:
//   { "edges": [ { "id": str, "nodes": [str...], "intervals": [[a,b]...] } ] }
// ---------------------------------------------------------------------------

inline TemporalHypergraph parse_thg_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw std::runtime_error("expected top-level object with an \"edges\" array");
  std::vector<RawEdge> raw;
  for (const auto& je : j["edges"]) {
    RawEdge e;
    if (!je.is_object() || !je.contains("id") || !je["id"].is_string() ||
        !je.contains("nodes") || !je["nodes"].is_array() || !je.contains("intervals") ||
        !je["intervals"].is_array())
      throw std::runtime_error("each edge needs \"id\", \"nodes\" and \"intervals\"");
    e.id = je["id"].get<std::string>();
    for (const auto& n : je["nodes"]) {
      if (!n.is_string()) throw std::runtime_error("edge " + e.id + ": nodes must be strings");
      e.vertices.push_back(n.get<std::string>());
    }
    for (const auto& iv : je["intervals"]) {
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
        throw std::runtime_error("edge " + e.id + ": intervals must be [start, end] pairs");
      e.intervals.push_back({iv[0].get<double>(), iv[1].get<double>()});
    }
    raw.push_back(std::move(e));
  }
  try {
    return build_temporal_hypergraph(std::move(raw));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// Event-log CSV with header edge_id,node_id,timestamp
// ---------------------------------------------------------------------------

inline std::vector<EventRow> parse_event_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty event log");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "edge_id,node_id,timestamp")
    throw std::runtime_error("expected header edge_id,node_id,timestamp");
  std::vector<EventRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t c1 = line.find(',');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected three fields");
    EventRow r;
    r.edge_id = line.substr(0, c1);
    r.vertex_id = line.substr(c1 + 1, c2 - c1 - 1);
    std::string ts = line.substr(c2 + 1);
    const char* first = ts.data();
    const char* last = ts.data() + ts.size();
    auto res = std::from_chars(first, last, r.timestamp);
    if (res.ec != std::errc{} || res.ptr != last)
      throw std::runtime_error("line " + std::to_string(lineno) + ": bad timestamp: " + ts);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Barcode JSON
// ---------------------------------------------------------------------------

inline std::string barcode_to_json(const Barcode& b) {
  nlohmann::ordered_json j;
  j["axis"] = b.axis == Axis::Index ? "index" : "time";
  j["mode"] = b.mode == Mode::Union ? "union" : "intersection";
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (const auto& [p, pairs] : b.dims) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BarcodeInterval& iv : pairs) {
      nlohmann::ordered_json pair;
      pair["birth"] = iv.birth;
      pair["death"] = iv.death;
      pair["birth_half"] = iv.birth_half;
      pair["death_half"] = iv.death_half;
      pair["open_end"] = iv.open_end;
      arr.push_back(std::move(pair));
    }
    dims[std::to_string(p)] = std::move(arr);
  }
  j["dims"] = std::move(dims);
  return j.dump(2) + "\n";
}

inline Barcode barcode_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid barcode JSON: ") + e.what());
  }
  Barcode b;
  if (!j.is_object() || !j.contains("axis") || !j.contains("mode") || !j.contains("dims"))
    throw std::runtime_error("barcode JSON needs \"axis\", \"mode\" and \"dims\"");
  std::string axis = j["axis"].get<std::string>();
  if (axis == "index")
    b.axis = Axis::Index;
  else if (axis == "time")
    b.axis = Axis::Time;
  else
    throw std::runtime_error("unknown axis: " + axis);
  std::string mode = j["mode"].get<std::string>();
  if (mode == "union")
    b.mode = Mode::Union;
  else if (mode == "intersection")
    b.mode = Mode::Intersection;
  else
    throw std::runtime_error("unknown mode: " + mode);
  for (const auto& [key, arr] : j["dims"].items()) {
    int p = std::stoi(key);
    auto& pairs = b.dims[p];
    for (const auto& jp : arr) {
      BarcodeInterval iv;
      iv.birth = jp.at("birth").get<double>();
      iv.death = jp.at("death").get<double>();
      iv.birth_half = jp.at("birth_half").get<bool>();
      iv.death_half = jp.at("death_half").get<bool>();
      iv.open_end = jp.at("open_end").get<bool>();
      pairs.push_back(iv);
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// CSV tables
// ---------------------------------------------------------------------------

inline std::string stats_to_csv(const SnapshotSequence& seq) {
  std::string out = "window_index,mid_time,n_edges,n_vertices\n";
  std::vector<SummaryRow> rows = summary_stats(seq);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(rows[i].mid);
    out += ',';
    out += std::to_string(rows[i].n_edges);
    out += ',';
    out += std::to_string(rows[i].n_vertices);
    out += '\n';
  }
  return out;
}

struct BettiRow {
  std::size_t window_index = 0;
  double mid = 0.0;
  BettiVector betti;
  std::size_t n_edges = 0;
  std::size_t n_vertices = 0;
};

inline std::string betti_to_csv(const std::vector<BettiRow>& rows, int p_max) {
  std::string out = "window_index,mid_time";
  for (int p = 0; p <= p_max; ++p) out += ",b" + std::to_string(p);
  out += ",n_edges,n_vertices\n";
  for (const BettiRow& r : rows) {
    out += std::to_string(r.window_index);
    out += ',';
    out += format_double(r.mid);
    for (std::size_t v : r.betti) {
      out += ',';
      out += std::to_string(v);
    }
    out += ',';
    out += std::to_string(r.n_edges);
    out += ',';
    out += std::to_string(r.n_vertices);
    out += '\n';
  }
  return out;
}

}  // namespace zzhg
