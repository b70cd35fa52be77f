#include "spectral/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "spectral/error.hpp"
#include "spectral/hits.hpp"
#include "spectral/influence.hpp"
#include "spectral/io.hpp"
#include "spectral/pagerank.hpp"
#include "spectral/sociometry.hpp"
#include "spectral/surfer.hpp"

namespace spectral::cli {

using nlohmann::ordered_json;

std::vector<RankedRow> rank_rows(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<double>>& columns) {
  std::vector<RankedRow> rows(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rows[i].label = labels[i];
    for (const auto& c : columns) rows[i].values.push_back(c[i]);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RankedRow& a, const RankedRow& b) {
    const double x = a.values.empty() ? 0.0 : a.values.front();
    const double y = b.values.empty() ? 0.0 : b.values.front();
    if (x != y) return x > y;
    return a.label < b.label;
  });
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k].rank = k + 1;
  return rows;
}

namespace {

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_tsv(std::ostream& out, const RankedOutput& r) {
  out << "# method\t" << r.method << '\n';
  out << "# params\t" << r.params.dump() << '\n';
  out << "# n\t" << r.n << '\n';
  out << "# m\t" << r.m << '\n';
  out << "# iterations\t" << r.report.iterations << '\n';
  out << "# residual\t" << format12(r.report.residual) << '\n';
  out << "# eigenvalue\t" << format12(r.report.eigenvalue_estimate) << '\n';
  out << "# converged\t" << (r.report.converged ? "true" : "false") << '\n';
  for (const std::string& w : r.warnings) out << "# warning\t" << w << '\n';
  out << "rank\tlabel";
  for (const std::string& c : r.columns) out << '\t' << c;
  out << '\n';
  for (const RankedRow& row : r.rows) {
    out << row.rank << '\t' << row.label;
    for (double v : row.values) out << '\t' << format12(v);
    out << '\n';
  }
}

void write_json(std::ostream& out, const RankedOutput& r) {
  ordered_json doc;
  doc["method"] = r.method;
  doc["params"] = r.params;
  doc["n"] = r.n;
  doc["m"] = r.m;
  doc["iterations"] = r.report.iterations;
  doc["residual"] = r.report.residual;
  doc["eigenvalue"] = r.report.eigenvalue_estimate;
  doc["converged"] = r.report.converged;
  doc["warnings"] = r.warnings;
  ordered_json rows = ordered_json::array();
  for (const RankedRow& row : r.rows) {
    ordered_json item;
    item["rank"] = row.rank;
    item["label"] = row.label;
    for (std::size_t c = 0; c < r.columns.size(); ++c) item[r.columns[c]] = row.values[c];
    rows.push_back(std::move(item));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

namespace {

struct Options {
  std::string input;
  double alpha = 0.85;
  double tol = 1e-9;
  std::size_t max_iter = 100000;
  std::string format = "tsv";
  std::string normalize = "none";
  std::string personalization;
  std::string exogenous;
  std::string totals;
  double attenuation = 0.0;
  double perturbation = 0.0;
  std::uint64_t steps = 1'000'000;
  std::uint64_t seed = 42;
  bool open = false;
  bool scale_100 = false;
};

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.tolerance = o.tol;
  cfg.max_iterations = o.max_iter;
  return cfg;
}

std::vector<double> personalization_for(const SparseGraph& g, const Options& o) {
  ScoreVector v = io::align_to_graph(g, io::read_label_values(o.personalization), true);
  for (double x : v.values) {
    if (x < 0.0) throw InputError("personalization values must be nonnegative");
  }
  if (!(v.sum() > 0.0)) throw InputError("personalization values must not all be zero");
  normalize_sum(v);
  return v.values;
}

ordered_json common_params(const Options& o) {
  ordered_json p;
  p["input"] = o.input;
  p["tol"] = o.tol;
  p["max-iter"] = o.max_iter;
  p["normalize"] = o.normalize;
  p["scale-100"] = o.scale_100;
  return p;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;
};

// Sum normalization applies to each column independently unless `joint`,
// where every column is divided by the sum of the first.
void apply_display(Table& t, const Options& o, bool joint) {
  if (o.normalize == "sum") {
    const auto sum_of = [](const std::vector<double>& c) {
      double s = 0.0;
      for (double x : c) s += x;
      return s;
    };
    const double first = t.values.empty() ? 0.0 : sum_of(t.values.front());
    for (auto& c : t.values) {
      const double s = joint ? first : sum_of(c);
      if (s == 0.0) throw NumericalError("cannot normalize scores that sum to zero");
      for (double& x : c) x /= s;
    }
  }
  if (o.scale_100) {
    for (auto& c : t.values) {
      for (double& x : c) x *= 100.0;
    }
  }
}

RankedOutput finish(std::string method, const SparseGraph& g, ordered_json params, const SolveReport& report,
                    std::vector<std::string> warnings, Table table, const Options& o, bool joint = false) {
  apply_display(table, o, joint);
  RankedOutput r;
  r.method = std::move(method);
  r.params = std::move(params);
  r.n = g.size();
  r.m = g.edge_count();
  r.report = report;
  r.warnings = std::move(warnings);
  r.columns = std::move(table.columns);
  r.rows = rank_rows(g.labels(), table.values);
  return r;
}

RankedOutput run_pagerank(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  PageRankConfig cfg;
  cfg.alpha = o.alpha;
  cfg.solver = solver_config(o);
  if (!o.personalization.empty()) cfg.personalization = personalization_for(g, o);
  Solution s = pagerank(g, cfg);
  ordered_json p = common_params(o);
  p["alpha"] = o.alpha;
  if (!o.personalization.empty()) p["personalization"] = o.personalization;
  return finish("pagerank", g, p, s.report, s.warnings, {{"score"}, {s.scores.values}}, o);
}

RankedOutput run_hits(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  HitsConfig cfg;
  cfg.solver = solver_config(o);
  cfg.perturbation = o.perturbation;
  HitsResult h = hits(g, cfg);
  SolveReport report = h.report;
  report.eigenvalue_estimate = h.eigenvalue;
  std::vector<std::string> warnings;
  if (!h.unique) warnings.push_back("several co-citation components share the dominant eigenvalue; the authority vector is not unique");
  ordered_json p = common_params(o);
  p["perturbation"] = o.perturbation;
  return finish("hits", g, p, report, warnings, {{"authority", "hub"}, {h.authority.values, h.hub.values}}, o);
}

RankedOutput run_influence(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  InfluenceResult r = influence_scores(g, solver_config(o));
  return finish("influence", g, common_params(o), r.report, r.warnings,
                {{"influence", "total"}, {r.per_reference.values, r.total.values}}, o);
}

RankedOutput run_leontief(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  ordered_json p = common_params(o);
  LeontiefResult r;
  if (o.open) {
    if (o.exogenous.empty()) throw InputError("leontief --open requires --exogenous (profit vector)");
    const ScoreVector profit = io::align_to_graph(g, io::read_label_values(o.exogenous), false);
    OpenModelOptions options;
    if (!o.totals.empty()) options.gross_output = io::align_to_graph(g, io::read_label_values(o.totals), true).values;
    r = leontief_open(g, profit, solver_config(o), options);
    p["open"] = true;
    p["exogenous"] = o.exogenous;
    if (!o.totals.empty()) p["totals"] = o.totals;
  } else {
    r = leontief_closed(g, solver_config(o));
  }
  return finish("leontief", g, p, r.report, r.warnings,
                {{"price", "cost", "revenue"}, {r.prices.values, r.costs, r.revenues}}, o, true);
}

RankedOutput run_seeley(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  Solution s = seeley(g, solver_config(o));
  return finish("seeley", g, common_params(o), s.report, s.warnings, {{"score"}, {s.scores.values}}, o);
}

RankedOutput run_katz(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  KatzConfig cfg;
  cfg.attenuation = o.attenuation;
  cfg.solver = solver_config(o);
  Solution s = katz(g, cfg);
  ordered_json p = common_params(o);
  p["attenuation"] = o.attenuation;
  return finish("katz", g, p, s.report, s.warnings, {{"score"}, {s.scores.values}}, o);
}

RankedOutput run_hubbell(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  ScoreVector v{std::vector<double>(g.size(), 1.0), Normalization::None};
  if (!o.exogenous.empty()) v = io::align_to_graph(g, io::read_label_values(o.exogenous), false);
  Solution s = hubbell(g, v, solver_config(o));
  ordered_json p = common_params(o);
  if (!o.exogenous.empty()) p["exogenous"] = o.exogenous;
  return finish("hubbell", g, p, s.report, s.warnings, {{"score"}, {s.scores.values}}, o);
}

RankedOutput run_sport(const Options& o) {
  const MatchList matches = io::read_matches(o.input);
  SportConfig cfg;
  cfg.solver = solver_config(o);
  cfg.perturbation = o.perturbation;
  Solution s = sport_rank(matches, cfg);
  const SparseGraph a = match_matrix(matches);
  ordered_json p = common_params(o);
  p["perturbation"] = o.perturbation;
  RankedOutput r = finish("sport", a, p, s.report, s.warnings, {{"score"}, {s.scores.values}}, o);
  r.m = matches.size();
  return r;
}

RankedOutput run_simulate(const Options& o) {
  const SparseGraph g = io::read_graph(o.input);
  SimConfig cfg;
  cfg.alpha = o.alpha;
  cfg.steps = o.steps;
  cfg.seed = o.seed;
  if (!o.personalization.empty()) cfg.personalization = personalization_for(g, o);
  ScoreVector v = simulate(g, cfg);
  SolveReport report;
  report.iterations = o.steps;
  report.converged = true;
  ordered_json p = common_params(o);
  p.erase("tol");
  p.erase("max-iter");
  p["alpha"] = o.alpha;
  p["steps"] = o.steps;
  p["seed"] = o.seed;
  if (!o.personalization.empty()) p["personalization"] = o.personalization;
  return finish("simulate", g, p, report, {}, {{"score"}, {v.values}}, o);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Input file")->required();
  cmd->add_option("--tol", o.tol, "Convergence tolerance")->capture_default_str();
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  cmd->add_option("--normalize", o.normalize, "Display normalization")
      ->check(CLI::IsMember({"sum", "none"}))
      ->capture_default_str();
  cmd->add_flag("--scale-100", o.scale_100, "Multiply displayed scores by 100");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral ranking of weighted directed graphs", "spectral_rank"};
  app.require_subcommand(1);

  auto* pagerank_cmd = app.add_subcommand("pagerank", "PageRank with damping and personalization");
  auto* hits_cmd = app.add_subcommand("hits", "HITS authority and hub scores");
  auto* influence_cmd = app.add_subcommand("influence", "Journal influence weights from citation counts");
  auto* leontief_cmd = app.add_subcommand("leontief", "Input-output equilibrium prices");
  auto* seeley_cmd = app.add_subcommand("seeley", "Popularity from sociometric choices");
  auto* katz_cmd = app.add_subcommand("katz", "Attenuated path counts");
  auto* hubbell_cmd = app.add_subcommand("hubbell", "Status with exogenous input");
  auto* sport_cmd = app.add_subcommand("sport", "Team strengths from match outcomes");
  auto* simulate_cmd = app.add_subcommand("simulate", "Random-surfer visit frequencies");
  for (CLI::App* cmd : app.get_subcommands([](CLI::App*) { return true; })) add_common(cmd, o);

  for (CLI::App* cmd : {pagerank_cmd, simulate_cmd}) {
    cmd->add_option("--alpha", o.alpha, "Damping factor")->capture_default_str();
    cmd->add_option("--personalization", o.personalization, "label<TAB>value teleportation weights");
  }
  hits_cmd->add_option("--perturbation", o.perturbation, "Uniform perturbation weight")->capture_default_str();
  auto* sport_perturbation =
      sport_cmd->add_option("--perturbation", o.perturbation, "Uniform perturbation weight")->default_str("0.01");
  leontief_cmd->add_flag("--open", o.open, "Open model with a profit vector");
  leontief_cmd->add_option("--exogenous", o.exogenous, "label<TAB>value profit vector");
  leontief_cmd->add_option("--totals", o.totals, "label<TAB>value gross output per sector");
  hubbell_cmd->add_option("--exogenous", o.exogenous, "label<TAB>value exogenous status (default: ones)");
  katz_cmd->add_option("--attenuation", o.attenuation, "Attenuation per hop")->required();
  simulate_cmd->add_option("--steps", o.steps, "Counted transitions")->capture_default_str();
  simulate_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  if (sport_cmd->parsed() && sport_perturbation->count() == 0) o.perturbation = 0.01;

  try {
    RankedOutput result;
    if (pagerank_cmd->parsed()) result = run_pagerank(o);
    else if (hits_cmd->parsed()) result = run_hits(o);
    else if (influence_cmd->parsed()) result = run_influence(o);
    else if (leontief_cmd->parsed()) result = run_leontief(o);
    else if (seeley_cmd->parsed()) result = run_seeley(o);
    else if (katz_cmd->parsed()) result = run_katz(o);
    else if (hubbell_cmd->parsed()) result = run_hubbell(o);
    else if (sport_cmd->parsed()) result = run_sport(o);
    else result = run_simulate(o);

    if (o.format == "json") {
      write_json(out, result);
    } else {
      write_tsv(out, result);
    }
    for (const std::string& w : result.warnings) err << "warning: " << w << '\n';
    return ok;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return numerical_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return numerical_failure;
  }
}

}  // namespace spectral::cli
