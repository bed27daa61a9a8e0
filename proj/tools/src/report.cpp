#include "gaugelab_cli/report.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "gaugelab_cli/scenario.hpp"
#include "json.hpp"

namespace gaugelab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no inf/nan; they are written as null and read back as nan.
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

double read_number(const ordered_json& j, const char* key) {
  const auto& v = j.at(key);
  return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class F>
void write_file(const std::filesystem::path& path, F&& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  body(out);
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

void write_jsonl(std::ostream& out, const std::vector<ReportRecord>& records) {
  for (const auto& r : records) {
    ordered_json j;
    j["check"] = r.check;
    j["tag"] = r.tag;
    j["digest"] = r.digest;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["residual"] = number(r.residual);
    j["tolerance"] = number(r.tolerance);
    j["status"] = r.status();
    if (!r.message.empty()) j["message"] = r.message;
    out << j.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<ReportRecord>& records) {
  out << "check,tag,digest,lhs,rhs,residual,tolerance,status\n";
  for (const auto& r : records)
    out << fmt::format("{},{},{},{},{},{},{},{}\n", csv_field(r.check), csv_field(r.tag), r.digest, r.lhs, r.rhs,
                       r.residual, r.tolerance, r.status());
}

std::vector<ReportRecord> read_jsonl(std::istream& in) {
  std::vector<ReportRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = ordered_json::parse(line);
      ReportRecord r;
      r.check = j.at("check").get<std::string>();
      r.tag = j.at("tag").get<std::string>();
      r.digest = j.at("digest").get<std::string>();
      r.lhs = read_number(j, "lhs");
      r.rhs = read_number(j, "rhs");
      r.residual = read_number(j, "residual");
      r.tolerance = read_number(j, "tolerance");
      if (j.contains("message")) r.message = j.at("message").get<std::string>();
      if (j.contains("status") && j.at("status").get<std::string>() != r.status())
        throw ConfigError("status disagrees with residual and tolerance");
      records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(fmt::format("report line {}: {}", line_no, e.what()));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("report line {}: {}", line_no, e.what()));
    }
  }
  return records;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<ReportRecord>& records) {
  write_file(path, [&](std::ostream& out) { write_jsonl(out, records); });
}

void write_csv(const std::filesystem::path& path, const std::vector<ReportRecord>& records) {
  write_file(path, [&](std::ostream& out) { write_csv(out, records); });
}

}  // namespace gaugelab::cli
