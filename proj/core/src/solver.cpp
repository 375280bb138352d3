#include "egal/solver.hpp"

#include "egal/format.hpp"
#include "egal/llga.hpp"

namespace egal {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Allocation solve_allocation(const PreferenceProfile& profile, const SolverSpec& solver)
{
  return std::visit(
      overloaded{
          [&](const ExactSolver& s) { return solve_exact(profile, s.options).best; },
          [&](const LlgaSolver& s) { return solve_llga(profile, s.config).best; },
      },
      solver);
}

std::string solver_name(const SolverSpec& solver)
{
  return std::holds_alternative<ExactSolver>(solver) ? "exact" : "llga";
}

std::string solver_description(const SolverSpec& solver)
{
  return std::visit(
      overloaded{
          [](const ExactSolver& s) {
            return "exact;budget=" + std::to_string(s.options.budget);
          },
          [](const LlgaSolver& s) {
            const auto& c = s.config;
            return "llga;population=" + std::to_string(c.population_size) +
                   ";generations=" + std::to_string(c.generations) +
                   ";tournament=" + std::to_string(c.tournament_size) +
                   ";crossover=" + format_number(c.crossover_rate) + ";mutation=" +
                   (c.mutation_rate ? format_number(*c.mutation_rate) : std::string("1/m")) +
                   ";elitism=" + std::to_string(c.elitism) + ";seed=" + std::to_string(c.seed);
          },
      },
      solver);
}

}  // namespace egal
