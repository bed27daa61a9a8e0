#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gaugelab::cli {

struct ReportRecord {
  std::string check;
  /// Label of the equation the check exercises.
  std::string tag;
  std::string digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  /// Set when the check could not be evaluated; the record then fails.
  std::string message;

  bool pass() const { return residual <= tolerance; }
  std::string status() const { return pass() ? "PASS" : "FAIL"; }
};

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records);
void write_csv(std::ostream& out, const std::vector<ReportRecord>& records);
/// Throws ConfigError on malformed lines.
std::vector<ReportRecord> read_jsonl(std::istream& in);

void write_jsonl(const std::filesystem::path& path, const std::vector<ReportRecord>& records);
void write_csv(const std::filesystem::path& path, const std::vector<ReportRecord>& records);

}  // namespace gaugelab::cli
