#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace egal {

/// Metadata block of `# key: value` lines followed by a CSV table.
///
/// Reports carry no timestamps or host information: the same command and
/// seed render to the same bytes.
struct Report
{
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void meta(std::string key, std::string value)
  {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  void add_row(std::vector<std::string> row);

  std::string render() const;
};

/// The CSV part of a rendered report (every line not starting with '#').
std::string data_section(std::string_view rendered);

/// Quotes a CSV cell when it contains a comma, quote or newline.
std::string csv_cell(std::string_view cell);

}  // namespace egal
