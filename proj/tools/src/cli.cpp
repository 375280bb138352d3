#include "egal_cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "egal/egal.hpp"

namespace egal::cli {

namespace {

unsigned default_threads()
{
  if (const char* env = std::getenv("EGAL_THREADS"))
  {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
    {
      return static_cast<unsigned>(v);
    }
  }
  return 1;
}

struct Common
{
  std::string instance;
  std::optional<double> tolerance;
  std::string out;
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
};

struct SolverOpts
{
  std::string kind = "exact";
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t population = 50;
  std::size_t generations = 50;
};

struct UlgaOpts
{
  std::size_t population = 50;
  std::size_t generations = UlgaConfig::default_ga().generations;
  double mutation_sd = UlgaConfig{}.mutation_sd;
};

void add_common(CLI::App* cmd, Common& c, bool needs_instance = true)
{
  auto* inst = cmd->add_option("--instance,-i", c.instance, "Instance file");
  if (needs_instance)
  {
    inst->required();
  }
  cmd->add_option("--tolerance", c.tolerance, "Override the row-sum tolerance of the instance");
  cmd->add_option("--out,-o", c.out, "Write the report here instead of stdout");
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--threads", c.threads, "Worker threads (default $EGAL_THREADS or 1)")
      ->check(CLI::PositiveNumber);
}

void add_solver(CLI::App* cmd, SolverOpts& s, const std::string& prefix = "")
{
  cmd->add_option("--" + prefix + "solver", s.kind, "Egalitarian solver")
      ->check(CLI::IsMember({"exact", "llga"}));
  cmd->add_option("--" + prefix + "budget", s.budget, "Largest n^m the exact solver enumerates");
  cmd->add_option("--" + prefix + "llga-population", s.population, "LLGA population size");
  cmd->add_option("--" + prefix + "llga-generations", s.generations, "LLGA generations");
}

void add_ulga(CLI::App* cmd, UlgaOpts& u)
{
  cmd->add_option("--ulga-population", u.population, "ULGA population size");
  cmd->add_option("--ulga-generations", u.generations, "ULGA generations");
  cmd->add_option("--ulga-mutation-sd", u.mutation_sd, "ULGA Gaussian mutation sd");
}

SolverSpec make_solver(const SolverOpts& s, const Common& c)
{
  if (s.kind == "llga")
  {
    GAConfig cfg;
    cfg.population_size = s.population;
    cfg.generations = s.generations;
    cfg.seed = c.seed;
    cfg.threads = c.threads;
    validate(cfg);
    return LlgaSolver{cfg};
  }
  ExactSolver e;
  e.options.budget = s.budget;
  e.options.threads = c.threads;
  return e;
}

UlgaConfig make_ulga(const UlgaOpts& u, const Common& c)
{
  UlgaConfig cfg;
  cfg.ga.population_size = u.population;
  cfg.ga.generations = u.generations;
  cfg.ga.seed = c.seed;
  cfg.ga.threads = c.threads;
  cfg.mutation_sd = u.mutation_sd;
  return cfg;
}

ProblemInstance load(const Common& c)
{
  ParseOptions opts;
  opts.sum_tolerance = c.tolerance;
  return load_instance(c.instance, opts);
}

std::string labels(const Allocation& a)
{
  std::string s;
  for (std::size_t j = 0; j < a.size(); ++j)
  {
    s += (j ? " " : "") + std::to_string(a[j] + 1);
  }
  return s;
}

std::string values(const PreferenceVector& v)
{
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j)
  {
    s += (j ? " " : "") + format_number(v[j]);
  }
  return s;
}

std::string num(double v)
{
  return format_number(v);
}

Report base_report(const std::string& command, const Common& c)
{
  Report r;
  r.meta("tool", std::string("egal ") + EGAL_VERSION);
  r.meta("command", command);
  if (!c.instance.empty())
  {
    r.meta("instance", c.instance);
  }
  r.meta("seed", std::to_string(c.seed));
  return r;
}

void describe_instance(Report& r, const ProblemInstance& inst)
{
  const auto& sc = inst.profile.scenario();
  r.meta("agents", std::to_string(inst.profile.agents()));
  r.meta("resources", std::to_string(inst.profile.resources()));
  r.meta("mode", to_string(sc.kind) + (sc.is_limited() ? " r=" + num(sc.r) : std::string()));
  r.meta("liar", std::to_string(inst.liar + 1));
}

void emit(const std::string& text, const Common& c, std::ostream& out)
{
  if (c.out.empty())
  {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f)
  {
    throw Error("cannot write '" + c.out + "'");
  }
  f << text;
  if (!f.flush())
  {
    throw Error("failed writing '" + c.out + "'");
  }
}

std::vector<double> parse_sigmas(const std::string& text)
{
  auto to_double = [&](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    {
      throw ConfigError("bad sigma value '" + std::string(s) + "' in '" + text + "'");
    }
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos)
  {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true)
    {
      const auto next = text.find(':', pos);
      parts.push_back(to_double(std::string_view(text).substr(pos, next - pos)));
      if (next == std::string::npos)
      {
        break;
      }
      pos = next + 1;
    }
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0])
    {
      throw ConfigError("sigma range must be start:stop:step with step > 0, got '" + text + "'");
    }
    // Integer steps so that 0:99:33 lands exactly on 99.
    for (std::size_t k = 0;; ++k)
    {
      const double v = parts[0] + static_cast<double>(k) * parts[2];
      if (v > parts[1] + 1e-9 * parts[2])
      {
        break;
      }
      out.push_back(v);
    }
    return out;
  }
  std::size_t pos = 0;
  while (true)
  {
    const auto next = text.find(',', pos);
    out.push_back(to_double(std::string_view(text).substr(pos, next - pos)));
    if (next == std::string::npos)
    {
      break;
    }
    pos = next + 1;
  }
  return out;
}

LieVector prop2_or_throw(const ProblemInstance& inst)
{
  if (inst.profile.scenario().is_limited())
  {
    throw ConfigError("the proportional lie applies to the unlimited scenario only");
  }
  return optimal_lie_unlimited(inst.truth, inst.rivals());
}

// Commands -------------------------------------------------------------------

std::string cmd_solve(const Common& c, const SolverOpts& s)
{
  const auto inst = load(c);
  const auto solver = make_solver(s, c);
  const auto& profile = inst.profile;
  const auto alloc = solve_allocation(profile, solver);
  auto r = base_report("solve", c);
  describe_instance(r, inst);
  r.meta("solver", solver_description(solver));
  r.columns = {"solver", "welfare", "allocation"};
  r.add_row({solver_name(solver), num(egalitarian_welfare(alloc, profile).value), labels(alloc)});
  return r.render();
}

std::string cmd_lie_eval(const Common& c, const SolverOpts& s, const std::string& lie_arg)
{
  const auto inst = load(c);
  const auto solver = make_solver(s, c);
  LieVector lie;
  if (lie_arg == "prop2")
  {
    lie = prop2_or_throw(inst);
  }
  else if (lie_arg == "truth")
  {
    lie = LieVector{inst.truth};
  }
  else
  {
    lie = LieVector{parse_vector(read_file(lie_arg))};
  }
  const auto eval = evaluate_lie(inst, lie, solver);
  auto r = base_report("lie-eval", c);
  describe_instance(r, inst);
  r.meta("solver", solver_description(solver));
  r.meta("lie", lie_arg);
  r.columns = {"truthful_utility", "lying_utility", "profit", "truth_allocation",
               "lie_allocation"};
  r.add_row({num(eval.truthful_utility), num(eval.lying_utility), num(eval.profit()),
             labels(eval.truth_allocation), labels(eval.lie_allocation)});
  return r.render();
}

std::string cmd_sweep(const Common& c, const SolverOpts& s, SweepOptions opts)
{
  const auto inst = load(c);
  const auto solver = make_solver(s, c);
  opts.seed = c.seed;
  const auto result = strategy_sweep(inst, opts, solver);
  auto r = base_report("strategy-sweep", c);
  describe_instance(r, inst);
  r.meta("solver", solver_description(solver));
  r.meta("levels", std::to_string(opts.levels));
  r.meta("top_k", std::to_string(opts.top_k));
  for (int id : opts.strategies)
  {
    r.meta("strategy " + std::to_string(id), Strategy::from_id(id, opts.top_k).description());
  }
  r.columns = {"strategy", "level", "truthful_utility", "lying_utility", "profit"};
  for (const auto& p : result.points)
  {
    r.add_row({std::to_string(p.strategy), std::to_string(p.level), num(result.truthful_utility),
               num(p.lying_utility), num(p.profit)});
  }
  return r.render();
}

void write_lie_file(const std::string& path, const LieVector& lie, const std::string& note)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
  {
    throw Error("cannot write '" + path + "'");
  }
  f << "# " << note << '\n' << "lie:";
  for (double x : lie.reported.values())
  {
    f << ' ' << format_exact(x);
  }
  f << '\n';
}

std::string cmd_best_lie(const Common& c, const SolverOpts& s, const UlgaOpts& u,
                         const std::string& method, const std::string& lie_out)
{
  const auto inst = load(c);
  const auto solver = make_solver(s, c);
  auto r = base_report("best-lie", c);
  describe_instance(r, inst);
  r.meta("method", method);
  r.meta("solver", solver_description(solver));
  LieVector lie;
  LieEvaluation eval;
  if (method == "prop2")
  {
    lie = prop2_or_throw(inst);
    eval = evaluate_lie(inst, lie, solver);
    r.meta("factor", num(proportional_lie_factor(inst.truth, inst.rivals())));
  }
  else
  {
    const auto cfg = make_ulga(u, c);
    r.meta("ulga", "population=" + std::to_string(cfg.ga.population_size) +
                       ";generations=" + std::to_string(cfg.ga.generations) +
                       ";mutation_sd=" + num(cfg.mutation_sd));
    auto result = optimal_lie_ulga(inst, cfg, solver);
    lie = std::move(result.lie);
    eval = result.evaluation;
    r.meta("evaluations", std::to_string(result.evaluations));
  }
  if (!lie_out.empty())
  {
    write_lie_file(lie_out, lie, method + " lie, seed " + std::to_string(c.seed));
  }
  r.columns = {"method", "profit", "truthful_utility", "lying_utility", "lie", "lie_allocation"};
  r.add_row({method, num(eval.profit()), num(eval.truthful_utility), num(eval.lying_utility),
             values(lie.reported), labels(eval.lie_allocation)});
  return r.render();
}

std::string cmd_robustness(const Common& c, const SolverOpts& s, const UlgaOpts& u,
                           const std::string& lie_arg, const std::string& sigmas_arg,
                           std::size_t replicates)
{
  const auto inst = load(c);
  const auto solver = make_solver(s, c);
  LieVector lie;
  if (lie_arg == "prop2")
  {
    lie = prop2_or_throw(inst);
  }
  else if (lie_arg == "truth")
  {
    lie = LieVector{inst.truth};
  }
  else if (lie_arg == "ulga")
  {
    lie = optimal_lie_ulga(inst, make_ulga(u, c), solver).lie;
  }
  else
  {
    lie = LieVector{parse_vector(read_file(lie_arg))};
  }
  RobustnessConfig cfg;
  cfg.sigmas = parse_sigmas(sigmas_arg);
  cfg.replicates = replicates;
  cfg.seed = c.seed;
  cfg.solver = solver;
  cfg.threads = c.threads;
  const auto curve = robustness_experiment(inst, lie, cfg);

  auto r = base_report("robustness", c);
  describe_instance(r, inst);
  r.meta("solver", solver_description(solver));
  r.meta("lie", lie_arg);
  r.meta("lie_values", values(lie.reported));
  r.columns = {"sigma", "replicates", "mean_truthful_utility", "mean_lying_utility",
               "mean_profit", "sd_profit"};
  for (const auto& p : curve.points)
  {
    r.add_row({num(p.sigma), std::to_string(p.replicates), num(p.mean_truthful_utility),
               num(p.mean_lying_utility), num(p.mean_profit), num(p.sd_profit)});
  }
  return r.render();
}

struct GenOpts
{
  std::size_t agents = 4;
  std::size_t resources = 10;
  std::string mode = "unlimited";
  double r = kDefaultBudgetSum;
  std::size_t liar = 1;
};

std::string cmd_gen(const Common& c, const GenOpts& g)
{
  if (g.agents < 1 || g.resources < 1)
  {
    throw ConfigError("--agents and --resources must be >= 1");
  }
  if (g.liar < 1 || g.liar > g.agents)
  {
    throw ConfigError("--liar must be in [1, agents]");
  }
  const auto scenario = g.mode == "limited" ? Scenario::limited(g.r) : Scenario::unlimited();
  Rng rng = Rng::stream(c.seed, {0});
  std::vector<PreferenceVector> rows;
  for (std::size_t i = 0; i < g.agents; ++i)
  {
    std::vector<double> v(g.resources);
    for (auto& x : v)
    {
      x = rng.uniform(kLowerBound, kUpperBound);
    }
    rows.push_back(scenario.is_limited() ? renormalize_limited(v, scenario.r)
                                         : PreferenceVector{std::move(v)});
  }
  auto truth = rows[g.liar - 1];
  const ProblemInstance inst{PreferenceProfile{std::move(rows), scenario}, g.liar - 1,
                             std::move(truth)};
  if (auto violations = validate_instance(inst); !violations.empty())
  {
    throw ValidationError(std::move(violations));
  }
  std::ostringstream os;
  os << "# egal gen --agents " << g.agents << " --resources " << g.resources << " --mode "
     << g.mode;
  if (scenario.is_limited())
  {
    os << " --r " << format_exact(g.r);
  }
  os << " --liar " << g.liar << " --seed " << c.seed << '\n'
     << "# values i.i.d. Uniform(" << format_exact(kLowerBound) << ", "
     << format_exact(kUpperBound) << ")"
     << (scenario.is_limited() ? ", rows rescaled to sum r" : "") << '\n'
     << emit_instance(inst);
  return os.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Egalitarian allocation and manipulation experiments", "egal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("egal ") + EGAL_VERSION);

  Common common;
  SolverOpts solver;
  UlgaOpts ulga;

  auto* solve = app.add_subcommand("solve", "Egalitarian-optimal allocation of an instance");
  add_common(solve, common);
  add_solver(solve, solver);

  std::string lie_arg;
  auto* lie_eval = app.add_subcommand("lie-eval", "Profit of a given lie");
  add_common(lie_eval, common);
  add_solver(lie_eval, solver);
  lie_eval->add_option("--lie", lie_arg, "prop2, truth, or a lie vector file")->required();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("strategy-sweep", "Profit of the predefined strategies");
  add_common(sweep_cmd, common);
  add_solver(sweep_cmd, solver);
  sweep_cmd->add_option("--levels", sweep.levels, "Highest modification level")
      ->check(CLI::Range(1, kMaxLevel));
  sweep_cmd->add_option("--strategies", sweep.strategies, "Strategy ids")
      ->delimiter(',')
      ->check(CLI::Range(1, kStrategyCount));
  sweep_cmd->add_option("--top-k", sweep.top_k, "Resources modified by each strategy")
      ->check(CLI::PositiveNumber);

  std::string method;
  std::string lie_out;
  auto* best = app.add_subcommand("best-lie", "Search for an optimal lie");
  add_common(best, common);
  add_solver(best, solver);
  add_ulga(best, ulga);
  best->add_option("--method", method, "prop2 or ulga")
      ->required()
      ->check(CLI::IsMember({"prop2", "ulga"}));
  best->add_option("--lie-out", lie_out, "Also write the lie vector at full precision");

  std::string sigmas = "0";
  std::size_t replicates = 1000;
  auto* robust = app.add_subcommand("robustness", "Lie profit under noisy rival preferences");
  add_common(robust, common);
  add_solver(robust, solver);
  add_ulga(robust, ulga);
  robust->add_option("--lie", lie_arg, "prop2, ulga, truth, or a lie vector file")->required();
  robust->add_option("--sigmas", sigmas, "start:stop:step or a comma-separated list");
  robust->add_option("--replicates", replicates, "Replicates per sigma")
      ->check(CLI::PositiveNumber);

  GenOpts gen;
  auto* gen_cmd = app.add_subcommand("gen", "Random instance generator");
  add_common(gen_cmd, common, false);
  gen_cmd->add_option("--agents,-n", gen.agents, "Number of agents");
  gen_cmd->add_option("--resources,-m", gen.resources, "Number of resources");
  gen_cmd->add_option("--mode", gen.mode, "unlimited or limited")
      ->check(CLI::IsMember({"unlimited", "limited"}));
  gen_cmd->add_option("--r", gen.r, "Row sum in limited mode");
  gen_cmd->add_option("--liar", gen.liar, "1-based liar index");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try
  {
    app.parse(reversed);
  }
  catch (const CLI::Success& e)
  {
    return app.exit(e, out, err);
  }
  catch (const CLI::ParseError& e)
  {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try
  {
    std::string text;
    if (solve->parsed())
    {
      text = cmd_solve(common, solver);
    }
    else if (lie_eval->parsed())
    {
      text = cmd_lie_eval(common, solver, lie_arg);
    }
    else if (sweep_cmd->parsed())
    {
      text = cmd_sweep(common, solver, sweep);
    }
    else if (best->parsed())
    {
      text = cmd_best_lie(common, solver, ulga, method, lie_out);
    }
    else if (robust->parsed())
    {
      text = cmd_robustness(common, solver, ulga, lie_arg, sigmas, replicates);
    }
    else
    {
      text = cmd_gen(common, gen);
    }
    emit(text, common, out);
    return kExitOk;
  }
  catch (const ConfigError& e)
  {
    err << "egal: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (const ValidationError& e)
  {
    err << "egal: invalid input:\n" << describe(e.violations()) << '\n';
    return kExitValidation;
  }
  catch (const Error& e)
  {
    err << "egal: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace egal::cli
