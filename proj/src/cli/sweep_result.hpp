#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace lsob::cli {

inline constexpr int kSchemaVersion = 1;

/// A table cell: a real, an integer, or a flag such as "indeterminate".
using Cell = std::variant<double, std::int64_t, std::string>;

/// Table of results plus the metadata needed to replay the run.
class SweepResult {
 public:
  SweepResult(std::string command, std::vector<std::string> columns);

  void add_metadata(std::string key, std::string value);
  /// Throws std::invalid_argument when the row arity differs from the header.
  void add_row(std::vector<Cell> row);

  const std::string& command() const { return command_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

  /// Metadata as "# key: value" lines, then the header and rows. Reals use
  /// 17 significant digits.
  void write_csv(std::ostream& os) const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string command_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

std::string format_real(double value);

}  // namespace lsob::cli
