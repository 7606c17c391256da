#include "cli/sweep_result.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace lsob::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return csv_field(std::get<std::string>(cell));
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isfinite(*d)) return *d;
    return format_real(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

SweepResult::SweepResult(std::string command, std::vector<std::string> columns)
    : command_(std::move(command)), columns_(std::move(columns)) {}

void SweepResult::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

void SweepResult::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument(fmt::format("row has {} cells, header has {}", row.size(), columns_.size()));
  }
  rows_.push_back(std::move(row));
}

void SweepResult::write_csv(std::ostream& os) const {
  os << "# schema_version: " << kSchemaVersion << '\n';
  os << "# command: " << command_ << '\n';
  for (const auto& [key, value] : metadata_) os << "# " << key << ": " << value << '\n';
  for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << csv_field(columns_[c]);
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

nlohmann::ordered_json SweepResult::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : metadata_) meta[key] = value;
  j["metadata"] = std::move(meta);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = cell_json(row[c]);
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace lsob::cli
