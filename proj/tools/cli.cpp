#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "loplab/analytics.hpp"
#include "loplab/graph.hpp"
#include "loplab/graph_props.hpp"
#include "loplab/lop.hpp"
#include "loplab/montecarlo.hpp"
#include "loplab/presets.hpp"
#include "loplab/randgen.hpp"

namespace loplab::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for failures that are the environment's fault rather than the
// caller's (unreadable input, unwritable output).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

json cycle_json(const CycleWitness& w) { return json(w.vertices); }

json violation_json(const ForbiddenSubgraph& f) {
  json j;
  if (const auto* c = std::get_if<CycleViolation>(&f)) {
    j["type"] = "cycle";
    j["length"] = c->cycle.vertices.size();
    j["cycle"] = cycle_json(c->cycle);
  } else {
    const auto& d = std::get<DumbbellViolation>(f);
    j["type"] = "dumbbell";
    j["s"] = d.s;
    j["t"] = d.t;
    j["k"] = d.k_path;
    j["first"] = cycle_json(d.first);
    j["second"] = cycle_json(d.second);
    j["path"] = d.path;
  }
  return j;
}

std::size_t resolve_workers(const std::optional<std::size_t>& flag) {
  if (!flag) return default_worker_count();
  if (*flag == 0) throw std::invalid_argument("--workers must be positive");
  return *flag;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::optional<double> p, r;
  std::uint64_t seed = 0;
  std::string out, points_out;
};

void cmd_gen(const GenArgs& a, std::ostream& out) {
  const Model model = parse_model(a.model);
  RngStream rng(a.seed, 0);
  if (model == Model::ER) {
    if (!a.p || a.r) throw std::invalid_argument("er needs --p (and no --r)");
    emit(a.out, to_json(gen_er(a.n, *a.p, rng)), out);
    return;
  }
  if (!a.r || a.p) throw std::invalid_argument("rg needs --r (and no --p)");
  const auto gg = gen_rg(a.n, *a.r, rng);
  emit(a.out, to_json(gg.graph), out);
  std::string points = a.points_out;
  if (points.empty() && !a.out.empty() && a.out != "-") points = a.out + ".points.json";
  if (!points.empty()) emit(points, to_json(gg.sample), out);
}

struct CheckArgs {
  std::string in;
  std::string props;
  std::uint64_t iters = 1000;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::string beta = "0.25";
  std::string out;
};

void cmd_check(const CheckArgs& a, std::ostream& out) {
  Graph g = [&] {
    const std::string text = slurp(a.in);
    try {
      return graph_from_json(text);
    } catch (const std::exception& e) {
      throw IoError(a.in + ": " + e.what());
    }
  }();
  if (a.oracle && g.vertex_count() > kDefaultOracleMaxN) {
    throw std::invalid_argument("--oracle is only available for n <= " + std::to_string(kDefaultOracleMaxN) +
                                " (got n=" + std::to_string(g.vertex_count()) + ")");
  }
  if (a.iters < 1) throw std::invalid_argument("--iters must be >= 1");
  const Fraction beta = Fraction::parse(a.beta);

  std::vector<std::string> props;
  {
    std::stringstream ss(a.props);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) props.push_back(item);
  }

  json report;
  report["n"] = g.vertex_count();
  report["m"] = g.edge_count();
  json results = json::object();
  RngStream rng(a.seed, 0);
  for (const auto& p : props) {
    json r;
    if (p == "plopl") {
      const DfsForest forest = dfs_forest(g);
      r["holds"] = forest.back_edges.empty();
      r["witness"] = forest.back_edges.empty() ? json()
                                               : cycle_json(cycle_from_back_edge(forest, forest.back_edges.front()));
    } else if (p == "plopu") {
      RngStream det = rng.fork(1);
      const auto v = plopu_violation(g, a.iters, det);
      r["violation"] = v.found;
      r["witness"] = v.witness ? cycle_json(*v.witness) : json();
      r["iterations"] = v.iterations_used;
      r["miss_probability_bound"] = v.miss_probability_bound ? json(*v.miss_probability_bound) : json();
    } else if (p == "lop") {
      if (!a.oracle) throw std::invalid_argument("property lop needs --oracle");
      const auto v = lop_oracle(g);
      r["holds"] = v.satisfies;
      r["violation"] = v.violation ? violation_json(*v.violation) : json();
    } else if (p == "sigma") {
      RngStream det = rng.fork(2);
      const auto s = classify_sigma(g, a.iters, det, a.oracle ? kDefaultOracleMaxN : 0);
      r["kind"] = to_string(s.kind);
      r["lower"] = s.lower();
      r["upper"] = s.upper();
      r["witness"] = s.witness ? cycle_json(*s.witness) : json();
    } else if (p == "conn") {
      r["holds"] = pconn(g);
      r["components"] = component_count(g);
    } else if (p == "giant") {
      r["holds"] = pgiant(g, beta);
      r["largest_component"] = largest_component_size(g);
      r["beta"] = beta.to_string();
    } else if (p == "edge") {
      r["holds"] = pedge(g);
      r["edges"] = g.edge_count();
      r["limit"] = 2 * g.vertex_count();
    } else {
      throw std::invalid_argument("unknown check property '" + p +
                                  "' (expected plopl, plopu, lop, sigma, conn, giant, edge)");
    }
    results[p] = std::move(r);
  }
  report["results"] = std::move(results);
  emit(a.out, report.dump(2) + "\n", out);
}

struct AnalyticArgs {
  std::string curve;
  std::optional<double> x, x_min, x_max;
  std::optional<std::size_t> steps, kmax;
  double lambda_c = AnalyticsConfig{}.lambda_c;
};

struct Curve {
  std::vector<std::string> columns;
  std::function<std::vector<double>(double)> eval;
};

void cmd_analytic(const AnalyticArgs& a, std::ostream& out) {
  auto one = [](double (*f)(double)) {
    return Curve{{"value"}, [f](double x) { return std::vector<double>{f(x)}; }};
  };
  auto pair = [](Bounds (*f)(double)) {
    return Curve{{"lower", "upper"}, [f](double x) {
                   const Bounds b = f(x);
                   return std::vector<double>{b.lower, b.upper};
                 }};
  };
  std::map<std::string, Curve> curves{
      {"f-plop-er", one(f_plop_er)},
      {"f-forest-er", one(f_forest_er)},
      {"sigma-bounds-er", pair(e_sigma_bounds_er)},
      {"sigma-bounds-rg", pair(e_sigma_bounds_rg)},
      {"rg-plop-upper", one(rg_plop_upper)},
      {"c-beta", one(c_beta)},
      {"conn-gumbel", one(gumbel_cdf)},
      {"pedge-normal", {{"value"}, [](double x) { return std::vector<double>{normal_cdf(-x)}; }}},
  };
  if (a.kmax) {
    const std::size_t kmax = *a.kmax;
    curves["f-plop-er-truncated"] = {{"value"},
                                     [kmax](double x) { return std::vector<double>{f_plop_er_truncated(x, kmax)}; }};
  }
  const auto it = curves.find(a.curve);
  if (it == curves.end()) {
    if (a.curve == "f-plop-er-truncated") throw std::invalid_argument("f-plop-er-truncated needs --kmax");
    throw std::invalid_argument("unknown curve '" + a.curve + "'");
  }
  if (a.kmax && a.curve != "f-plop-er-truncated") {
    throw std::invalid_argument("--kmax only applies to f-plop-er-truncated");
  }

  std::vector<double> xs;
  if (a.x) {
    if (a.x_min || a.x_max || a.steps) throw std::invalid_argument("--x excludes --x-min/--x-max/--steps");
    xs.push_back(*a.x);
  } else {
    if (!a.x_min || !a.x_max || !a.steps) throw std::invalid_argument("need --x or all of --x-min --x-max --steps");
    if (*a.x_max < *a.x_min) throw std::invalid_argument("--x-max must be >= --x-min");
    if (*a.steps == 0) {
      if (*a.x_min != *a.x_max) throw std::invalid_argument("--steps 0 needs --x-min == --x-max");
      xs.push_back(*a.x_min);
    } else {
      for (std::size_t i = 0; i <= *a.steps; ++i) {
        xs.push_back(*a.x_min + (*a.x_max - *a.x_min) * static_cast<double>(i) / static_cast<double>(*a.steps));
      }
    }
  }

  std::string text = "x";
  for (const auto& c : it->second.columns) text += "," + c;
  text += "\n";
  for (double x : xs) {
    text += fmt9(x);
    for (double v : it->second.eval(x)) text += "," + fmt9(v);
    text += "\n";
  }
  out << text;
}

struct SweepArgs {
  std::string model = "er";
  std::string regime = "powerlaw";
  double alpha = 1.0, c = 1.0, x = 0.0, value = 0.0;
  std::string axis;
  std::vector<double> grid;
  std::optional<double> from, to, step;
  std::size_t n = 0;
  std::uint64_t samples = 100, iters = 1000, seed = 1;
  std::string beta = "0.25";
  std::string props;
  bool oracle = false;
  std::optional<std::size_t> workers;
  std::string out;
};

void cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepSpec spec;
  auto& cfg = spec.base;
  cfg.regime.model = parse_model(a.model);
  if (a.regime == "powerlaw") cfg.regime.form = PowerLaw{a.c, a.alpha};
  else if (a.regime == "logshift") cfg.regime.form = LogShift{a.x};
  else if (a.regime == "pedgesharp") cfg.regime.form = PedgeSharp{a.x};
  else if (a.regime == "fixed") cfg.regime.form = FixedValue{a.value};
  else throw std::invalid_argument("unknown regime '" + a.regime + "'");
  cfg.n = a.n;
  cfg.samples = a.samples;
  cfg.iterations = a.iters;
  cfg.beta = Fraction::parse(a.beta);
  cfg.seed = a.seed;
  cfg.properties = parse_property_list(a.props);
  cfg.oracle_enabled = a.oracle;
  spec.axis = parse_axis(a.axis);

  if (!a.grid.empty()) {
    if (a.from || a.to || a.step) throw std::invalid_argument("--grid excludes --from/--to/--step");
    spec.values = a.grid;
  } else {
    if (!a.from || !a.to || !a.step) throw std::invalid_argument("need --grid or all of --from --to --step");
    spec.values = linear_grid(*a.from, *a.to, *a.step);
  }
  if (spec.axis == SweepAxis::N && cfg.n == 0) cfg.n = static_cast<std::size_t>(spec.values.front());

  std::ostringstream csv;
  write_csv(csv, sweep(spec, resolve_workers(a.workers)));
  emit(a.out, csv.str(), out);
}

struct ReproduceArgs {
  std::string figure;
  double scale = 1.0;
  std::uint64_t seed = 1;
  std::optional<std::size_t> workers;
  std::string out;
};

void cmd_reproduce(const ReproduceArgs& a, std::ostream& out) {
  const FigurePreset preset = figure_preset(a.figure, a.scale, a.seed);
  std::ostringstream csv;
  write_csv(csv, run_preset(preset, resolve_workers(a.workers)));
  emit(a.out, csv.str(), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local pooling random graph lab"};
  app.name("loplab");
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a random graph as JSON");
  g->add_option("--model", gen.model, "er or rg")->required();
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--p", gen.p, "Edge probability (er)");
  g->add_option("--r", gen.r, "Connection radius (rg)");
  g->add_option("--seed", gen.seed)->required();
  g->add_option("--out", gen.out, "Graph JSON path (default stdout)");
  g->add_option("--points-out", gen.points_out, "Point JSON path (rg; default <out>.points.json)");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate properties of a graph file");
  c->add_option("--in", check.in)->required();
  c->add_option("--props", check.props, "Comma list of plopl,plopu,lop,sigma,conn,giant,edge")->required();
  c->add_option("--iters", check.iters, "Detector iteration cap");
  c->add_option("--seed", check.seed);
  c->add_flag("--oracle", check.oracle, "Run the exact LoP oracle (n <= 14)");
  c->add_option("--beta", check.beta, "Giant component fraction");
  c->add_option("--out", check.out);

  AnalyticArgs an;
  auto* a = app.add_subcommand("analytic", "Print analytic curve values as CSV");
  a->add_option("--curve", an.curve)->required();
  a->add_option("--x", an.x);
  a->add_option("--x-min", an.x_min);
  a->add_option("--x-max", an.x_max);
  a->add_option("--steps", an.steps, "Number of intervals between --x-min and --x-max");
  a->add_option("--kmax", an.kmax, "Truncation for f-plop-er-truncated");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "Monte Carlo sweep over one axis");
  s->add_option("--model", sw.model);
  s->add_option("--regime", sw.regime, "powerlaw, logshift, pedgesharp or fixed");
  s->add_option("--alpha", sw.alpha);
  s->add_option("--c", sw.c);
  s->add_option("--x", sw.x);
  s->add_option("--value", sw.value);
  s->add_option("--axis", sw.axis, "c, x or n")->required();
  s->add_option("--grid", sw.grid)->delimiter(',');
  s->add_option("--from", sw.from);
  s->add_option("--to", sw.to);
  s->add_option("--step", sw.step);
  s->add_option("--n", sw.n);
  s->add_option("--samples", sw.samples);
  s->add_option("--iters", sw.iters);
  s->add_option("--beta", sw.beta);
  s->add_option("--seed", sw.seed);
  s->add_option("--props", sw.props)->required();
  s->add_flag("--oracle", sw.oracle);
  s->add_option("--workers", sw.workers);
  s->add_option("--out", sw.out);

  ReproduceArgs rp;
  auto* r = app.add_subcommand("reproduce", "Run a figure preset");
  r->add_option("--figure", rp.figure)->required();
  r->add_option("--scale", rp.scale);
  r->add_option("--seed", rp.seed);
  r->add_option("--workers", rp.workers);
  r->add_option("--out", rp.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) cmd_gen(gen, out);
    else if (*c) cmd_check(check, out);
    else if (*a) cmd_analytic(an, out);
    else if (*s) cmd_sweep(sw, out);
    else if (*r) cmd_reproduce(rp, out);
    return kExitOk;
  } catch (const IoError& e) {
    err << "loplab: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    err << "loplab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "loplab: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace loplab::cli
