#include "hsgas/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hsgas {

namespace {

using Json = nlohmann::ordered_json;

// ---- field-checked access -------------------------------------------------

const Json& require_field(const Json& j, const std::string& name,
                          const std::string& path) {
  if (!j.is_object()) {
    throw ParseError("field '" + path + "': expected an object");
  }
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError("missing field '" + (path.empty() ? name : path + "." + name) +
                     "'");
  }
  return *it;
}

std::string join(const std::string& path, const std::string& name) {
  return path.empty() ? name : path + "." + name;
}

double get_number(const Json& j, const std::string& name, const std::string& path) {
  const Json& v = require_field(j, name, path);
  if (!v.is_number()) {
    throw ParseError("field '" + join(path, name) + "': expected a number");
  }
  return v.get<double>();
}

std::uint64_t get_u64(const Json& j, const std::string& name, const std::string& path) {
  const Json& v = require_field(j, name, path);
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw ParseError("field '" + join(path, name) + "': expected a nonnegative integer");
  }
  if (v.is_number_integer() && v.get<std::int64_t>() < 0) {
    throw ParseError("field '" + join(path, name) + "': expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

int get_int(const Json& j, const std::string& name, const std::string& path) {
  const Json& v = require_field(j, name, path);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError("field '" + join(path, name) + "': expected an integer");
  }
  return v.get<int>();
}

std::string get_string(const Json& j, const std::string& name, const std::string& path) {
  const Json& v = require_field(j, name, path);
  if (!v.is_string()) {
    throw ParseError("field '" + join(path, name) + "': expected a string");
  }
  return v.get<std::string>();
}

// ---- to json ---------------------------------------------------------------

Json estimate_to_json(const MCEstimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["hits"] = e.hits;
  j["samples"] = e.samples;
  j["std_error"] = e.std_error;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["confidence_level"] = e.confidence_level;
  return j;
}

Json entry_to_json(const GTildeEntry& entry) {
  Json j;
  j["k"] = entry.k;
  j["value"] = entry.value;
  j["source"] = to_string(entry.source);
  if (entry.estimate) j["estimate"] = estimate_to_json(*entry.estimate);
  if (entry.exact_form) j["exact_form"] = *entry.exact_form;
  return j;
}

Json config_to_json(const RunConfig& config) {
  Json j;
  j["d"] = config.d;
  j["samples_per_k"] = config.samples_per_k;
  j["master_seed"] = config.master_seed;
  j["chunk_size"] = config.chunk_size;
  j["confidence_level"] = config.confidence_level;
  j["mode"] = to_string(config.mode);
  j["search_cap"] = config.search_cap;
  j["curve_samples"] = config.curve_samples;
  if (config.output_path) j["output_path"] = *config.output_path;
  j["rel_error_target"] = config.rel_error_target;
  return j;
}

// ---- from json -------------------------------------------------------------

MCEstimate estimate_from_json(const Json& j, const std::string& path) {
  MCEstimate e;
  e.mean = get_number(j, "mean", path);
  e.hits = get_u64(j, "hits", path);
  e.samples = get_u64(j, "samples", path);
  e.std_error = get_number(j, "std_error", path);
  e.ci_low = get_number(j, "ci_low", path);
  e.ci_high = get_number(j, "ci_high", path);
  e.confidence_level = get_number(j, "confidence_level", path);
  return e;
}

GTildeEntry entry_from_json(const Json& j, const std::string& path) {
  GTildeEntry entry;
  entry.k = get_int(j, "k", path);
  entry.value = get_number(j, "value", path);
  if (!(entry.value >= 0.0 && entry.value <= 1.0)) {
    throw ParseError("field '" + join(path, "value") + "': must lie in [0,1]");
  }
  try {
    entry.source = source_from_string(get_string(j, "source", path));
  } catch (const std::invalid_argument& err) {
    throw ParseError("field '" + join(path, "source") + "': " + err.what());
  }
  if (entry.source == Source::monte_carlo) {
    entry.estimate = estimate_from_json(require_field(j, "estimate", path),
                                        join(path, "estimate"));
  } else {
    entry.exact_form = get_string(j, "exact_form", path);
  }
  return entry;
}

RunConfig config_from_json(const Json& j, const std::string& path) {
  RunConfig config;
  config.d = get_int(j, "d", path);
  config.samples_per_k = get_u64(j, "samples_per_k", path);
  config.master_seed = get_u64(j, "master_seed", path);
  config.chunk_size = get_u64(j, "chunk_size", path);
  config.confidence_level = get_number(j, "confidence_level", path);
  try {
    config.mode = mode_from_string(get_string(j, "mode", path));
  } catch (const std::invalid_argument& err) {
    throw ParseError("field '" + join(path, "mode") + "': " + err.what());
  }
  config.search_cap = get_number(j, "search_cap", path);
  config.curve_samples = get_int(j, "curve_samples", path);
  if (j.contains("output_path")) {
    config.output_path = get_string(j, "output_path", path);
  }
  config.rel_error_target = get_number(j, "rel_error_target", path);
  return config;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const TableDocument& doc) {
  Json j;
  j["d"] = doc.table.d;
  Json entries = Json::array();
  for (const GTildeEntry& entry : doc.table.entries) {
    entries.push_back(entry_to_json(entry));
  }
  j["entries"] = std::move(entries);
  j["k_max"] = doc.table.k_max;
  j["truncation_note"] = doc.table.truncation_note;
  if (doc.table.zero_tail) j["zero_tail"] = entry_to_json(*doc.table.zero_tail);
  Json metadata;
  metadata["tool_version"] = doc.tool_version;
  if (doc.config) metadata["config"] = config_to_json(*doc.config);
  j["metadata"] = std::move(metadata);
  return dump(j);
}

TableDocument table_document_from_json(const std::string& text) {
  const Json j = parse_text(text);
  TableDocument doc;
  doc.table.d = get_int(j, "d", "");
  if (doc.table.d < 1) throw ParseError("field 'd': must be >= 1");
  const Json& entries = require_field(j, "entries", "");
  if (!entries.is_array() || entries.empty()) {
    throw ParseError("field 'entries': expected a non-empty array");
  }
  int expected_k = 0;
  for (const Json& e : entries) {
    const std::string path = "entries[" + std::to_string(expected_k) + "]";
    GTildeEntry entry = entry_from_json(e, path);
    if (entry.k != expected_k) {
      throw ParseError("field '" + path + ".k': entries must be contiguous from 0");
    }
    doc.table.entries.push_back(std::move(entry));
    ++expected_k;
  }
  doc.table.k_max = get_int(j, "k_max", "");
  if (doc.table.k_max != doc.table.entries.back().k) {
    throw ParseError("field 'k_max': does not match the last entry");
  }
  doc.table.truncation_note = get_string(j, "truncation_note", "");
  if (j.contains("zero_tail")) {
    doc.table.zero_tail = entry_from_json(j.at("zero_tail"), "zero_tail");
  }
  const Json& metadata = require_field(j, "metadata", "");
  doc.tool_version = get_string(metadata, "tool_version", "metadata");
  if (metadata.contains("config")) {
    doc.config = config_from_json(metadata.at("config"), "metadata.config");
  }
  return doc;
}

std::string to_json(const ReportDocument& doc) {
  const BoundReport& r = doc.report;
  Json j;
  j["d"] = r.d;
  j["mode"] = to_string(r.mode);
  j["a_star"] = r.a_star;
  j["c_at_a_star"] = r.c_at_a_star;
  j["bound"] = r.bound;
  j["classical"] = r.classical;
  j["improvement_ratio"] = r.improvement_ratio;
  j["gtable_fingerprint"] = r.gtable_fingerprint;
  if (!r.curve.empty()) {
    Json curve = Json::array();
    for (const auto& point : r.curve) {
      curve.push_back(Json::array({point[0], point[1]}));
    }
    j["curve"] = std::move(curve);
  }
  Json metadata;
  metadata["tool_version"] = doc.tool_version;
  j["metadata"] = std::move(metadata);
  return dump(j);
}

ReportDocument report_document_from_json(const std::string& text) {
  const Json j = parse_text(text);
  ReportDocument doc;
  BoundReport& r = doc.report;
  r.d = get_int(j, "d", "");
  try {
    r.mode = mode_from_string(get_string(j, "mode", ""));
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("field 'mode': ") + err.what());
  }
  r.a_star = get_number(j, "a_star", "");
  r.c_at_a_star = get_number(j, "c_at_a_star", "");
  r.bound = get_number(j, "bound", "");
  r.classical = get_number(j, "classical", "");
  r.improvement_ratio = get_number(j, "improvement_ratio", "");
  r.gtable_fingerprint = get_string(j, "gtable_fingerprint", "");
  if (j.contains("curve")) {
    const Json& curve = j.at("curve");
    if (!curve.is_array()) throw ParseError("field 'curve': expected an array");
    std::size_t i = 0;
    for (const Json& p : curve) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ParseError("field 'curve[" + std::to_string(i) +
                         "]': expected a pair of numbers");
      }
      r.curve.push_back({p[0].get<double>(), p[1].get<double>()});
      ++i;
    }
  }
  const Json& metadata = require_field(j, "metadata", "");
  doc.tool_version = get_string(metadata, "tool_version", "metadata");
  return doc;
}

std::string curve_csv(const BoundReport& report) {
  std::string out = "a,a_over_C\n";
  char line[80];
  for (const auto& point : report.curve) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", point[0], point[1]);
    out += line;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("failed reading '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out.good()) throw IoError("failed writing '" + path + "'");
}

}  // namespace hsgas
