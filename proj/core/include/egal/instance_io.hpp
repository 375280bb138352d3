#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "egal/model.hpp"

namespace egal {

/// Malformed instance text; line and column are 1-based.
class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what)
    , line_(line)
    , column_(column)
  {}

  std::size_t line() const
  {
    return line_;
  }
  std::size_t column() const
  {
    return column_;
  }

private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions
{
  /// Overrides the file's `tolerance` line (and the strict default).
  std::optional<double> sum_tolerance;
  /// Run validate_instance and throw ValidationError on any violation.
  bool validate = true;
};

/// Line-oriented instance format, '#' starts a comment:
///
///     mode limited          # or: mode unlimited
///     r 100                 # limited only; defaults to 100
///     tolerance 0.05        # optional sum tolerance
///     liar 1                # 1-based
///     agent 1: 17.67 12.58 ...
///     agent 2: ...
///     truth 1: ...          # optional; defaults to the liar's agent row
///
/// Agents must be numbered 1..n in order.
ProblemInstance parse_instance(std::string_view text, const ParseOptions& options = {});

ProblemInstance load_instance(const std::filesystem::path& path, const ParseOptions& options = {});

/// Inverse of parse_instance; values use the shortest round-trip form.
std::string emit_instance(const ProblemInstance& inst);

/// Whitespace-separated numbers, '#' comments allowed, optionally prefixed
/// by a `lie:` label. Used for precomputed lie vectors.
PreferenceVector parse_vector(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace egal
