#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hsgas/bounds.hpp"
#include "hsgas/gtable.hpp"
#include "hsgas/run_config.hpp"

namespace hsgas {

// Malformed document; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A gtilde table file: the table plus a metadata block (tool version and an
// echo of the RunConfig that produced it). Serialization is deterministic --
// fixed field order, shortest round-trip decimals -- so identical runs
// produce byte-identical files.
struct TableDocument {
  GTildeTable table;
  std::optional<RunConfig> config;
  std::string tool_version;
};

struct ReportDocument {
  BoundReport report;
  std::string tool_version;
};

std::string to_json(const TableDocument& doc);
TableDocument table_document_from_json(const std::string& text);

std::string to_json(const ReportDocument& doc);
ReportDocument report_document_from_json(const std::string& text);

// Two-column CSV (a, a/C(a)) of the report's curve, full precision.
std::string curve_csv(const BoundReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hsgas
