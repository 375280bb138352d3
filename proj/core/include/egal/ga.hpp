#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "egal/error.hpp"
#include "egal/rng.hpp"

namespace egal {

/// Settings shared by every genetic algorithm in the library.
///
/// Population of 50 evolved for 50 generations with tournament selection
/// is the lower-level configuration used throughout the experiments; the
/// remaining knobs are conventional defaults.
struct GAConfig
{
  std::size_t population_size = 50;
  std::size_t generations = 50;
  std::size_t tournament_size = 3;
  double crossover_rate = 0.9;
  /// Per-gene mutation probability; unset means 1 / genome length.
  std::optional<double> mutation_rate;
  std::size_t elitism = 1;
  std::uint64_t seed = 0;
  /// Fitness evaluations per generation may be spread over this many
  /// threads. Results never depend on it.
  unsigned threads = 1;

  double mutation_rate_for(std::size_t genome_length) const
  {
    if (mutation_rate)
    {
      return *mutation_rate;
    }
    return genome_length == 0 ? 0.0 : 1.0 / static_cast<double>(genome_length);
  }
};

/// Throws ConfigError naming the first broken invariant.
inline void validate(const GAConfig& cfg)
{
  if (cfg.population_size < 2)
  {
    throw ConfigError("population_size must be >= 2, got " + std::to_string(cfg.population_size));
  }
  if (cfg.tournament_size < 2 || cfg.tournament_size > cfg.population_size)
  {
    throw ConfigError("tournament_size must be in [2, population_size], got " +
                      std::to_string(cfg.tournament_size));
  }
  if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0))
  {
    throw ConfigError("crossover_rate must be in [0, 1]");
  }
  if (cfg.mutation_rate && !(*cfg.mutation_rate >= 0.0 && *cfg.mutation_rate <= 1.0))
  {
    throw ConfigError("mutation_rate must be in [0, 1]");
  }
  if (cfg.elitism >= cfg.population_size)
  {
    throw ConfigError("elitism must be < population_size");
  }
}

/// Variation operators for one genome family.
template <typename Genome>
struct GenomeSpec
{
  std::function<Genome(Rng&)> random;
  std::function<Genome(const Genome&, const Genome&, Rng&)> crossover;
  /// Mutates in place; receives the per-gene rate already resolved.
  std::function<void(Genome&, double, Rng&)> mutate;
  std::size_t length = 0;
};

template <typename Genome>
struct Evolved
{
  Genome best;
  double fitness = 0.0;
  /// Best fitness in the population after each generation; entry 0 is the
  /// initial population. Non-decreasing whenever elitism >= 1.
  std::vector<double> history;
  std::size_t evaluations = 0;
};

namespace detail {

template <typename Genome, typename Fitness>
void evaluate_all(const std::vector<Genome>& pop, std::vector<double>& fit, std::size_t from,
                  const Fitness& fitness, unsigned threads)
{
  const std::size_t count = pop.size() - from;
  if (threads <= 1 || count < 2)
  {
    for (std::size_t k = from; k < pop.size(); ++k)
    {
      fit[k] = fitness(pop[k]);
    }
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
  {
    pool.emplace_back([&, w] {
      for (std::size_t k = from + w; k < pop.size(); k += workers)
      {
        fit[k] = fitness(pop[k]);
      }
    });
  }
}

inline std::size_t tournament(const std::vector<double>& fit, std::size_t size, Rng& rng)
{
  std::size_t winner = static_cast<std::size_t>(rng.below(fit.size()));
  for (std::size_t t = 1; t < size; ++t)
  {
    const auto c = static_cast<std::size_t>(rng.below(fit.size()));
    if (fit[c] > fit[winner] || (fit[c] == fit[winner] && c < winner))
    {
      winner = c;
    }
  }
  return winner;
}

}  // namespace detail

/// Maximises `fitness` with a generational GA: random init, then per
/// generation elitist carry-over, tournament selection of two parents,
/// crossover with probability crossover_rate, mutation.
///
/// Individual k of generation g draws every random number from
/// Rng::stream(seed, {g, k}); generation 0 is the initial population.
/// Fitness must be a pure function of the genome.
template <typename Genome, typename Fitness>
Evolved<Genome> evolve(const Fitness& fitness, const GenomeSpec<Genome>& spec, const GAConfig& cfg)
{
  validate(cfg);
  const std::size_t pop_size = cfg.population_size;
  const double mutation_rate = cfg.mutation_rate_for(spec.length);

  std::vector<Genome> pop;
  pop.reserve(pop_size);
  for (std::size_t k = 0; k < pop_size; ++k)
  {
    Rng rng = Rng::stream(cfg.seed, {0, k});
    pop.push_back(spec.random(rng));
  }
  std::vector<double> fit(pop_size);
  detail::evaluate_all(pop, fit, 0, fitness, cfg.threads);

  Evolved<Genome> out;
  out.evaluations = pop_size;

  auto best_index = [&] {
    std::size_t b = 0;
    for (std::size_t k = 1; k < pop_size; ++k)
    {
      if (fit[k] > fit[b])
      {
        b = k;
      }
    }
    return b;
  };

  std::size_t b = best_index();
  out.best = pop[b];
  out.fitness = fit[b];
  out.history.push_back(fit[b]);

  std::vector<std::size_t> order(pop_size);
  for (std::size_t g = 1; g <= cfg.generations; ++g)
  {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t c) { return fit[a] > fit[c]; });

    std::vector<Genome> next;
    std::vector<double> next_fit(pop_size);
    next.reserve(pop_size);
    for (std::size_t e = 0; e < cfg.elitism; ++e)
    {
      next.push_back(pop[order[e]]);
      next_fit[e] = fit[order[e]];
    }
    for (std::size_t k = cfg.elitism; k < pop_size; ++k)
    {
      Rng rng = Rng::stream(cfg.seed, {g, k});
      const std::size_t pa = detail::tournament(fit, cfg.tournament_size, rng);
      const std::size_t pb = detail::tournament(fit, cfg.tournament_size, rng);
      Genome child = rng.bernoulli(cfg.crossover_rate) ? spec.crossover(pop[pa], pop[pb], rng)
                                                       : pop[pa];
      spec.mutate(child, mutation_rate, rng);
      next.push_back(std::move(child));
    }
    detail::evaluate_all(next, next_fit, cfg.elitism, fitness, cfg.threads);
    out.evaluations += pop_size - cfg.elitism;

    pop = std::move(next);
    fit = std::move(next_fit);

    b = best_index();
    if (fit[b] > out.fitness)
    {
      out.best = pop[b];
      out.fitness = fit[b];
    }
    out.history.push_back(fit[b]);
  }
  return out;
}

}  // namespace egal
