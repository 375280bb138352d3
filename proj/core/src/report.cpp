#include "egal/report.hpp"

#include <sstream>

#include "egal/error.hpp"

namespace egal {

void Report::add_row(std::vector<std::string> row)
{
  if (row.size() != columns.size())
  {
    throw DimensionError("report row has " + std::to_string(row.size()) + " cells for " +
                         std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

std::string csv_cell(std::string_view cell)
{
  if (cell.find_first_of(",\"\n") == std::string_view::npos)
  {
    return std::string(cell);
  }
  std::string out = "\"";
  for (char c : cell)
  {
    if (c == '"')
    {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string Report::render() const
{
  std::ostringstream os;
  for (const auto& [key, value] : metadata)
  {
    os << "# " << key << ": " << value << '\n';
  }
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k)
    {
      if (k > 0)
      {
        os << ',';
      }
      os << csv_cell(cells[k]);
    }
    os << '\n';
  };
  line(columns);
  for (const auto& r : rows)
  {
    line(r);
  }
  return os.str();
}

std::string data_section(std::string_view rendered)
{
  std::string out;
  std::size_t pos = 0;
  while (pos < rendered.size())
  {
    std::size_t eol = rendered.find('\n', pos);
    if (eol == std::string_view::npos)
    {
      eol = rendered.size();
    }
    const auto line = rendered.substr(pos, eol - pos);
    if (line.empty() || line.front() != '#')
    {
      out.append(line);
      out += '\n';
    }
    pos = eol + 1;
  }
  return out;
}

}  // namespace egal
