#include "egal/exact_solver.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace egal {

std::uint64_t enumeration_size(std::size_t agents, std::size_t resources)
{
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < resources; ++j)
  {
    if (agents != 0 && total > std::numeric_limits<std::uint64_t>::max() / agents)
    {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= agents;
  }
  return total;
}

namespace {

// Depth-first enumeration below a fixed prefix. Utilities per depth are kept
// in a stack so no subtraction ever happens.
class Enumerator
{
public:
  Enumerator(const PreferenceProfile& profile, bool count)
    : n_(profile.agents())
    , m_(profile.resources())
    , count_(count)
    , value_(n_ * m_)
    , util_((m_ + 1) * n_, 0.0)
    , owner_(m_, 0)
    , best_owner_(m_, 0)
  {
    for (std::size_t j = 0; j < m_; ++j)
    {
      for (std::size_t i = 0; i < n_; ++i)
      {
        value_[j * n_ + i] = profile.row(i)[j];
      }
    }
  }

  // Enumerate every completion of the first `depth` owners encoded by `prefix`.
  void run_prefix(std::uint64_t prefix, std::size_t depth)
  {
    for (std::size_t j = depth; j-- > 0;)
    {
      owner_[j] = static_cast<AgentIndex>(prefix % n_);
      prefix /= n_;
    }
    for (std::size_t j = 0; j < depth; ++j)
    {
      const double* u = &util_[j * n_];
      double* next = &util_[(j + 1) * n_];
      std::copy(u, u + n_, next);
      next[owner_[j]] += value_[j * n_ + owner_[j]];
    }
    if (depth == m_)
    {
      const double* u = &util_[m_ * n_];
      consider(*std::min_element(u, u + n_));
      return;
    }
    descend(depth);
  }

  bool found() const
  {
    return found_;
  }
  double best() const
  {
    return best_;
  }
  std::uint64_t ties() const
  {
    return ties_;
  }
  const std::vector<AgentIndex>& best_owner() const
  {
    return best_owner_;
  }

private:
  void descend(std::size_t j)
  {
    const double* u = &util_[j * n_];
    const double* p = &value_[j * n_];
    if (j + 1 == m_)
    {
      // Leaf level: min over agents other than `a` is the smallest or
      // second-smallest current utility.
      std::size_t lo = 0;
      for (std::size_t i = 1; i < n_; ++i)
      {
        if (u[i] < u[lo])
        {
          lo = i;
        }
      }
      double second = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n_; ++i)
      {
        if (i != lo && u[i] < second)
        {
          second = u[i];
        }
      }
      for (std::size_t a = 0; a < n_; ++a)
      {
        const double others = (a == lo) ? second : u[lo];
        const double mine = u[a] + p[a];
        const double w = mine < others ? mine : others;
        if (w > best_ || !found_)
        {
          owner_[j] = static_cast<AgentIndex>(a);
          record(w);
        }
        else if (count_ && w == best_)
        {
          ++ties_;
        }
      }
      return;
    }
    double* next = &util_[(j + 1) * n_];
    for (std::size_t a = 0; a < n_; ++a)
    {
      owner_[j] = static_cast<AgentIndex>(a);
      std::copy(u, u + n_, next);
      next[a] += p[a];
      descend(j + 1);
    }
  }

  void consider(double w)
  {
    if (w > best_ || !found_)
    {
      record(w);
    }
    else if (count_ && w == best_)
    {
      ++ties_;
    }
  }

  void record(double w)
  {
    best_ = w;
    found_ = true;
    ties_ = 1;
    best_owner_ = owner_;
  }

  std::size_t n_;
  std::size_t m_;
  bool count_;
  std::vector<double> value_;
  std::vector<double> util_;
  std::vector<AgentIndex> owner_;
  std::vector<AgentIndex> best_owner_;
  double best_ = -std::numeric_limits<double>::infinity();
  bool found_ = false;
  std::uint64_t ties_ = 0;
};

struct ChunkResult
{
  bool found = false;
  double best = 0.0;
  std::uint64_t ties = 0;
  std::vector<AgentIndex> owner;
};

ChunkResult run_chunk(const PreferenceProfile& profile, bool count, std::uint64_t lo,
                      std::uint64_t hi, std::size_t depth)
{
  Enumerator e(profile, count);
  for (std::uint64_t p = lo; p < hi; ++p)
  {
    e.run_prefix(p, depth);
  }
  return {e.found(), e.best(), e.ties(), e.best_owner()};
}

}  // namespace

ExactSolution solve_exact(const PreferenceProfile& profile, const ExactOptions& options)
{
  const std::size_t n = profile.agents();
  const std::size_t m = profile.resources();
  if (n == 0)
  {
    throw DimensionError("profile has no agents");
  }
  for (const auto& row : profile.rows())
  {
    if (row.size() != m)
    {
      throw DimensionError("profile rows have unequal lengths");
    }
  }
  const std::uint64_t size = enumeration_size(n, m);
  if (size > options.budget)
  {
    throw BudgetError("exhaustive search needs n^m = " + std::to_string(n) + "^" +
                      std::to_string(m) + " = " +
                      (size == std::numeric_limits<std::uint64_t>::max()
                           ? std::string("overflow")
                           : std::to_string(size)) +
                      " enumerations, budget is " + std::to_string(options.budget));
  }

  // Split on a prefix of leading owners so that contiguous prefix ranges,
  // taken in order, preserve the lexicographic tie-break.
  const unsigned threads = std::max(1u, options.threads);
  std::size_t depth = 0;
  std::uint64_t prefixes = 1;
  while (threads > 1 && depth < m && prefixes < std::uint64_t{threads} * 4)
  {
    prefixes *= n;
    ++depth;
  }

  std::vector<ChunkResult> chunks(std::min<std::uint64_t>(threads, prefixes));
  if (chunks.size() == 1)
  {
    chunks[0] = run_chunk(profile, options.count_optimal, 0, prefixes, depth);
  }
  else
  {
    std::vector<std::jthread> workers;
    const std::uint64_t per = (prefixes + chunks.size() - 1) / chunks.size();
    for (std::size_t c = 0; c < chunks.size(); ++c)
    {
      const std::uint64_t lo = std::min(prefixes, c * per);
      const std::uint64_t hi = std::min(prefixes, lo + per);
      workers.emplace_back([&, c, lo, hi] {
        chunks[c] = run_chunk(profile, options.count_optimal, lo, hi, depth);
      });
    }
  }

  const ChunkResult* best = nullptr;
  std::uint64_t ties = 0;
  for (const auto& c : chunks)
  {
    if (!c.found)
    {
      continue;
    }
    if (best == nullptr || c.best > best->best)
    {
      best = &c;
      ties = c.ties;
    }
    else if (c.best == best->best)
    {
      ties += c.ties;
    }
  }

  ExactSolution out{Allocation{best->owner}, Welfare{best->best}, std::nullopt};
  if (options.count_optimal)
  {
    out.optimal_set_size = ties;
  }
  return out;
}

bool exists_positive_allocation(const PreferenceProfile& profile)
{
  const std::size_t n = profile.agents();
  const std::size_t m = profile.resources();
  if (n == 0)
  {
    return false;
  }
  if (m < n)
  {
    return false;
  }
  // Each agent needs one resource it values positively; the rest can go
  // anywhere. That is a bipartite matching saturating the agents.
  std::vector<std::ptrdiff_t> holder(m, -1);
  std::vector<char> seen(m);
  auto augment = [&](auto&& self, std::size_t agent) -> bool {
    for (std::size_t j = 0; j < m; ++j)
    {
      if (profile.row(agent)[j] > 0.0 && !seen[j])
      {
        seen[j] = 1;
        if (holder[j] < 0 || self(self, static_cast<std::size_t>(holder[j])))
        {
          holder[j] = static_cast<std::ptrdiff_t>(agent);
          return true;
        }
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i)
  {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, i))
    {
      return false;
    }
  }
  return true;
}

}  // namespace egal
