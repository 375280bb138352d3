#include "egal/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "egal/format.hpp"

namespace egal {

namespace {

struct Token
{
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
  if (auto hash = line.find('#'); hash != std::string_view::npos)
  {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size())
  {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
    {
      ++i;
    }
    if (i >= line.size())
    {
      break;
    }
    // ':' is its own token so that "agent 1:" and "agent 1 :" both work.
    if (line[i] == ':')
    {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != ':')
    {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

double to_double(const Token& t, std::size_t line)
{
  double value = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+')
  {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
  {
    throw ParseError(line, t.column, "expected a number, got '" + std::string(t.text) + "'");
  }
  return value;
}

std::size_t to_label(const Token& t, std::size_t line)
{
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value == 0)
  {
    throw ParseError(line, t.column,
                     "expected a positive 1-based index, got '" + std::string(t.text) + "'");
  }
  return value;
}

struct RowLine
{
  std::size_t label;
  std::vector<double> values;
  std::size_t line;
  std::size_t end_column;
};

RowLine parse_row(const std::vector<Token>& tokens, std::size_t line, std::size_t line_length)
{
  if (tokens.size() < 2)
  {
    throw ParseError(line, tokens.front().column + tokens.front().text.size(),
                     "expected an agent index after '" + std::string(tokens.front().text) + "'");
  }
  RowLine row{to_label(tokens[1], line), {}, line, line_length + 1};
  std::size_t first = 2;
  if (tokens.size() < 3 || tokens[2].text != ":")
  {
    const std::size_t col =
        tokens.size() < 3 ? tokens[1].column + tokens[1].text.size() : tokens[2].column;
    throw ParseError(line, col, "expected ':' after the agent index");
  }
  first = 3;
  for (std::size_t k = first; k < tokens.size(); ++k)
  {
    row.values.push_back(to_double(tokens[k], line));
  }
  if (row.values.empty())
  {
    throw ParseError(line, row.end_column, "row has no values");
  }
  return row;
}

}  // namespace

ProblemInstance parse_instance(std::string_view text, const ParseOptions& options)
{
  std::optional<Scenario::Kind> kind;
  std::optional<double> r;
  std::optional<double> tolerance;
  std::optional<std::size_t> liar;
  std::size_t liar_line = 0;
  std::vector<RowLine> agents;
  std::optional<RowLine> truth;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size())
  {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty())
    {
      continue;
    }
    const auto& key = tokens.front();
    auto single_argument = [&]() -> const Token& {
      if (tokens.size() < 2)
      {
        throw ParseError(line_no, key.column + key.text.size(),
                         "'" + std::string(key.text) + "' needs a value");
      }
      if (tokens.size() > 2)
      {
        throw ParseError(line_no, tokens[2].column, "unexpected trailing token");
      }
      return tokens[1];
    };

    if (key.text == "mode")
    {
      const auto& v = single_argument();
      if (kind)
      {
        throw ParseError(line_no, key.column, "duplicate 'mode' line");
      }
      if (v.text == "limited")
      {
        kind = Scenario::Kind::Limited;
      }
      else if (v.text == "unlimited")
      {
        kind = Scenario::Kind::Unlimited;
      }
      else
      {
        throw ParseError(line_no, v.column,
                         "mode must be 'limited' or 'unlimited', got '" + std::string(v.text) +
                             "'");
      }
    }
    else if (key.text == "r")
    {
      r = to_double(single_argument(), line_no);
    }
    else if (key.text == "tolerance")
    {
      tolerance = to_double(single_argument(), line_no);
    }
    else if (key.text == "liar")
    {
      liar = to_label(single_argument(), line_no);
      liar_line = line_no;
    }
    else if (key.text == "agent")
    {
      auto row = parse_row(tokens, line_no, line.size());
      if (row.label != agents.size() + 1)
      {
        throw ParseError(line_no, tokens[1].column,
                         "expected agent " + std::to_string(agents.size() + 1) + ", got " +
                             std::to_string(row.label));
      }
      if (!agents.empty() && row.values.size() != agents.front().values.size())
      {
        throw ParseError(line_no, row.end_column,
                         "row has " + std::to_string(row.values.size()) + " values, expected " +
                             std::to_string(agents.front().values.size()));
      }
      agents.push_back(std::move(row));
    }
    else if (key.text == "truth")
    {
      if (truth)
      {
        throw ParseError(line_no, key.column, "duplicate 'truth' line");
      }
      truth = parse_row(tokens, line_no, line.size());
    }
    else
    {
      throw ParseError(line_no, key.column, "unknown keyword '" + std::string(key.text) + "'");
    }
  }

  if (!kind)
  {
    throw ParseError(line_no, 1, "missing 'mode' line");
  }
  if (agents.empty())
  {
    throw ParseError(line_no, 1, "no 'agent' rows");
  }
  if (r && *kind == Scenario::Kind::Unlimited)
  {
    throw ParseError(line_no, 1, "'r' is only meaningful in limited mode");
  }
  Scenario scenario = *kind == Scenario::Kind::Limited ? Scenario::limited(r.value_or(kDefaultBudgetSum))
                                                       : Scenario::unlimited();
  if (options.sum_tolerance)
  {
    scenario.sum_tolerance = *options.sum_tolerance;
  }
  else if (tolerance)
  {
    scenario.sum_tolerance = *tolerance;
  }

  const std::size_t liar_label = liar.value_or(1);
  if (liar_label > agents.size())
  {
    throw ParseError(liar_line == 0 ? 1 : liar_line, 1,
                     "liar " + std::to_string(liar_label) + " is not one of the " +
                         std::to_string(agents.size()) + " agents");
  }
  if (truth)
  {
    if (truth->label != liar_label)
    {
      throw ParseError(truth->line, 7,
                       "truth row is for agent " + std::to_string(truth->label) +
                           " but the liar is agent " + std::to_string(liar_label));
    }
    if (truth->values.size() != agents.front().values.size())
    {
      throw ParseError(truth->line, truth->end_column,
                       "truth row has " + std::to_string(truth->values.size()) +
                           " values, expected " + std::to_string(agents.front().values.size()));
    }
  }

  std::vector<PreferenceVector> rows;
  rows.reserve(agents.size());
  for (auto& a : agents)
  {
    rows.emplace_back(std::move(a.values));
  }
  ProblemInstance inst;
  inst.liar = liar_label - 1;
  inst.truth = truth ? PreferenceVector{std::move(truth->values)} : rows[inst.liar];
  inst.profile = PreferenceProfile{std::move(rows), scenario};

  if (options.validate)
  {
    if (auto violations = validate_instance(inst); !violations.empty())
    {
      throw ValidationError(std::move(violations));
    }
  }
  return inst;
}

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error("cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemInstance load_instance(const std::filesystem::path& path, const ParseOptions& options)
{
  return parse_instance(read_file(path), options);
}

std::string emit_instance(const ProblemInstance& inst)
{
  std::ostringstream os;
  const auto& scenario = inst.profile.scenario();
  os << "mode " << to_string(scenario.kind) << '\n';
  if (scenario.is_limited())
  {
    os << "r " << format_exact(scenario.r) << '\n';
  }
  if (scenario.sum_tolerance != kStrictSumTolerance)
  {
    os << "tolerance " << format_exact(scenario.sum_tolerance) << '\n';
  }
  os << "liar " << inst.liar + 1 << '\n';
  auto row = [&os](const char* key, std::size_t label, const PreferenceVector& v) {
    os << key << ' ' << label << ':';
    for (double x : v.values())
    {
      os << ' ' << format_exact(x);
    }
    os << '\n';
  };
  for (std::size_t i = 0; i < inst.profile.agents(); ++i)
  {
    row("agent", i + 1, inst.profile.row(i));
  }
  row("truth", inst.liar + 1, inst.truth);
  return os.str();
}

PreferenceVector parse_vector(std::string_view text)
{
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size())
  {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    auto tokens = tokenize(line);
    std::size_t k = 0;
    if (tokens.size() >= 2 && tokens[0].text == "lie" && tokens[1].text == ":")
    {
      k = 2;
    }
    for (; k < tokens.size(); ++k)
    {
      values.push_back(to_double(tokens[k], line_no));
    }
  }
  if (values.empty())
  {
    throw ParseError(line_no, 1, "no values");
  }
  return PreferenceVector{std::move(values)};
}

}  // namespace egal
