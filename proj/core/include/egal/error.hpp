#pragma once

#include <stdexcept>
#include <string>

namespace egal {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Lengths of allocations, preference rows or profiles disagree.
class DimensionError : public Error
{
public:
  using Error::Error;
};

/// A GAConfig / UlgaConfig / RobustnessConfig breaks its invariants.
class ConfigError : public Error
{
public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error
{
public:
  using Error::Error;
};

/// Mass cannot be rebalanced without violating the range bounds.
class RenormalizationError : public Error
{
public:
  using Error::Error;
};

}  // namespace egal
