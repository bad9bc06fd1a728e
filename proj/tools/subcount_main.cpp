#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "subcount/cover.hpp"
#include "subcount/estimate.hpp"
#include "subcount/hypergraph.hpp"
#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"
#include "subcount/pattern.hpp"
#include "subcount/rng.hpp"
#include "subcount/sketch.hpp"

using json = nlohmann::ordered_json;
using namespace subcount;

namespace {

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
  if (idx > 0) --idx;
  return v[std::min(idx, v.size() - 1)];
}

int run_count(const std::string& pattern_file, const std::string& stream_file, double epsilon,
              double constant, std::uint64_t seed, int reps, double fixed_p, double known_t,
              bool check_degree, bool pretty) {
  PatternGraph h = load_pattern_file(pattern_file);
  Stream stream = load_stream_file(stream_file);
  FractionalCover cover = solve_cover(h);
  RatePlan plan;
  plan.epsilon = epsilon;
  plan.constant = constant;
  plan.repetitions = reps;
  if (fixed_p > 0) plan.levels = {fixed_p};
  if (known_t > 0) plan.levels = {choose_p(known_t, epsilon, cover.value, constant)};

  Estimate est = run_repeated(stream, h, cover, plan, seed);

  if (check_degree) {
    FullSupportCover fsc = solve_cover_full_support(h);
    if (fsc.full_support) {
      DataGraph g = graph_from_stream(stream);
      double t_ref = known_t > 0 ? known_t : std::max(est.value, 1.0);
      if (!degree_regime_ok(g.max_degree(), epsilon, cover.value, t_ref))
        std::cerr << "warning: max degree " << g.max_degree()
                  << " exceeds the regime where the variance bound holds\n";
    }
  }

  json out;
  out["estimate"] = est.value;
  out["p_used"] = est.p_used;
  out["copies_found"] = est.copies_found;
  out["retained"] = est.retained;
  out["level"] = est.level;
  out["reps"] = reps;
  out["epsilon"] = epsilon;
  out["seed"] = seed;
  out["tau"] = rat_to_string(cover.value);
  emit(out, pretty);
  return 0;
}

int run_oracle(const std::string& pattern_file, const std::string& stream_file, bool pretty) {
  PatternGraph h = load_pattern_file(pattern_file);
  DataGraph g = graph_from_stream(load_stream_file(stream_file));
  CopyCount c = exact_count(g, h);
  json out;
  out["copies"] = c.copies;
  out["injective_homs"] = c.injective_homs;
  emit(out, pretty);
  return 0;
}

int run_bounds(const std::string& pattern_file, double m, double t, double epsilon, bool pretty) {
  PatternGraph h = load_pattern_file(pattern_file);
  ExponentReport rep = exponents(h);
  FullSupportCover fsc = solve_cover_full_support(h);
  json out;
  out["tau"] = rat_to_string(rep.tau);
  out["mu1"] = rat_to_string(rep.mu1);
  out["mu2"] = rat_to_string(rep.mu2);
  out["full_support"] = fsc.full_support;
  json cover_w = json::array();
  for (const auto& w : fsc.cover.vertex_weights) cover_w.push_back(rat_to_string(w));
  out["cover"] = cover_w;
  json upper;
  upper["exponent"] = rat_to_string(rep.upper_exponent);
  upper["formula"] = "m / T^(" + rat_to_string(rep.upper_exponent) + ")";
  json lower_eps;
  lower_eps["exponent"] = rat_to_string(rep.lower_exponent_eps_t);
  lower_eps["formula"] = "m / (eps*T)^(" + rat_to_string(rep.lower_exponent_eps_t) + ")";
  json lower_eps2;
  lower_eps2["exponent"] = rat_to_string(rep.lower_exponent_eps2_t);
  lower_eps2["formula"] = "m / (eps^2*T)^(" + rat_to_string(rep.lower_exponent_eps2_t) + ")";
  if (m > 0 && t > 0) {
    upper["value"] = m / std::pow(t, rat_to_double(rep.upper_exponent));
    if (epsilon > 0) {
      lower_eps["value"] = m / std::pow(epsilon * t, rat_to_double(rep.lower_exponent_eps_t));
      lower_eps2["value"] =
          m / std::pow(epsilon * epsilon * t, rat_to_double(rep.lower_exponent_eps2_t));
    }
  }
  out["upper"] = upper;
  out["lower_eps_t"] = lower_eps;
  out["lower_eps2_t"] = lower_eps2;
  emit(out, pretty);
  return 0;
}

int run_gen(const std::string& kind, const std::string& pattern_file, const std::string& out_file,
            std::string truth_file, std::int64_t t, std::size_t pad, bool overlap, std::int64_t n,
            std::size_t m, std::size_t d, std::size_t arity, const std::string& eps_str,
            const std::string& promise, std::uint64_t seed, bool pretty) {
  if (truth_file.empty()) truth_file = out_file + ".truth.json";
  json truth;
  truth["kind"] = kind;
  truth["seed"] = seed;
  if (kind == "planted") {
    PatternGraph h = load_pattern_file(pattern_file);
    PlantedOptions opts;
    opts.pad_edges = pad;
    opts.allow_overlap = overlap;
    PlantedInstance inst = gen_planted(h, t, seed, opts);
    write_stream_file(out_file, inst.stream);
    truth["true_count"] = inst.true_count;
    truth["n"] = inst.n;
    truth["m"] = inst.m;
    truth["max_degree"] = inst.max_degree;
  } else if (kind == "reduction") {
    PatternGraph h = load_pattern_file(pattern_file);
    Rat eps = rat_from_string(eps_str.empty() ? "1" : eps_str);
    bool yes = promise == "yes";
    if (!yes && promise != "no") fail(Errc::ParameterDomain, "--promise must be yes or no");
    ReductionInstance inst = gen_reduction(h, n, t, eps, yes, seed);
    write_stream_file(out_file, inst.stream);
    truth["true_count"] = inst.formula_count;
    truth["promise"] = yes ? "yes" : "no";
    truth["t_prime"] = inst.t_prime;
    truth["eps_t_prime"] = inst.eps_t_prime;
    truth["m"] = inst.stream.size();
  } else if (kind == "random") {
    Stream s = gen_random_bounded(static_cast<std::size_t>(n), m, d, arity, seed);
    write_stream_file(out_file, s);
    truth["m"] = s.size();
    truth["n_universe"] = n;
    truth["max_degree_cap"] = d;
  } else {
    fail(Errc::ParameterDomain, "unknown --kind " + kind);
  }
  write_text_file(truth_file, truth.dump(2) + "\n");
  emit(truth, pretty);
  return 0;
}

int run_bench(const std::string& pattern_file, const std::string& stream_file,
              const std::string& kind, std::int64_t t, std::size_t pad, double known_t, int reps,
              int level_count, std::uint64_t seed, const std::string& csv_file, bool timings,
              bool pretty) {
  PatternGraph h = load_pattern_file(pattern_file);
  Stream stream;
  double truth = known_t;
  if (!stream_file.empty()) {
    stream = load_stream_file(stream_file);
  } else if (kind == "planted") {
    PlantedOptions opts;
    opts.pad_edges = pad;
    PlantedInstance inst = gen_planted(h, t, seed, opts);
    stream = std::move(inst.stream);
    truth = static_cast<double>(inst.true_count);
  } else {
    fail(Errc::ParameterDomain, "bench needs --stream or --kind planted");
  }
  FractionalCover cover = solve_cover(h);
  PatternAnalysis analysis = analyze(h);

  std::size_t m = 0;
  for (const auto& u : stream) m += u.sign > 0;
  int top = level_count;
  if (top <= 0) {
    top = 1;
    while ((1ULL << (top - 1)) < std::max<std::size_t>(m, 1)) ++top;
  }

  json rows = json::array();
  std::string csv = "level,p,retained_mean,estimate_mean,estimate_stddev,q50,q90,q99\n";
  for (int lvl = 0; lvl < top; ++lvl) {
    double p = std::ldexp(1.0, -lvl);
    double sum = 0, sumsq = 0, retained_sum = 0;
    std::vector<double> rel;
    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
      SketchState s =
          make_sketch(SketchConfig::make(h, cover, p, mix64(seed + static_cast<std::uint64_t>(r))));
      update_all(s, stream);
      Estimate e = estimate_from(s, analysis);
      sum += e.value;
      sumsq += e.value * e.value;
      retained_sum += static_cast<double>(e.retained);
      if (truth > 0) rel.push_back(std::abs(e.value - truth) / truth);
    }
    auto t1 = std::chrono::steady_clock::now();
    double mean = sum / reps;
    double var = reps > 1 ? std::max(0.0, (sumsq - sum * sum / reps) / (reps - 1)) : 0.0;
    json row;
    row["level"] = lvl;
    row["p"] = p;
    row["retained_mean"] = retained_sum / reps;
    row["estimate_mean"] = mean;
    row["estimate_stddev"] = std::sqrt(var);
    if (truth > 0) {
      row["rel_error_q50"] = quantile(rel, 0.50);
      row["rel_error_q90"] = quantile(rel, 0.90);
      row["rel_error_q99"] = quantile(rel, 0.99);
    }
    if (timings)
      row["wall_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rows.push_back(row);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", lvl, p,
                  retained_sum / reps, mean, std::sqrt(var), truth > 0 ? quantile(rel, 0.5) : 0.0,
                  truth > 0 ? quantile(rel, 0.9) : 0.0, truth > 0 ? quantile(rel, 0.99) : 0.0);
    csv += buf;
  }

  json out;
  out["pattern"] = pattern_file;
  out["tau"] = rat_to_string(cover.value);
  out["m"] = m;
  out["reps"] = reps;
  out["seed"] = seed;
  if (truth > 0) out["true_count"] = truth;
  out["rows"] = rows;
  if (!csv_file.empty()) write_text_file(csv_file, csv);
  emit(out, pretty);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming subgraph and hypergraph counting via cover-weighted vertex sampling"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string pattern_file, stream_file, out_file, truth_file, kind, eps_str, promise = "no",
                                                                              csv_file;
  double epsilon = 0.3, constant = 100.0, fixed_p = 0.0, known_t = 0.0, m_hint = 0.0, t_hint = 0.0;
  std::uint64_t seed = 0;
  int reps = 1, level_count = 0;
  std::int64_t t = 0, n = 0;
  std::size_t pad = 0, m = 0, d = 0, arity = 2;
  bool check_degree = false, overlap = false, timings = false;

  auto* c_count = app.add_subcommand("count", "estimate the copy count from a stream");
  c_count->add_option("--pattern", pattern_file)->required();
  c_count->add_option("--stream", stream_file)->required();
  c_count->add_option("--epsilon", epsilon, "target relative error");
  c_count->add_option("--constant", constant, "oversampling constant");
  c_count->add_option("--seed", seed);
  c_count->add_option("--reps", reps, "odd number of repetitions, medianed");
  c_count->add_option("--p", fixed_p, "fixed sampling rate instead of the level grid");
  c_count->add_option("--known-t", known_t, "size the rate for a known count");
  c_count->add_flag("--check-degree", check_degree, "warn when outside the degree regime");

  auto* c_oracle = app.add_subcommand("oracle", "exact count by backtracking");
  c_oracle->add_option("--pattern", pattern_file)->required();
  c_oracle->add_option("--stream", stream_file)->required();

  auto* c_bounds = app.add_subcommand("bounds", "cover exponents and space bounds");
  c_bounds->add_option("--pattern", pattern_file)->required();
  c_bounds->add_option("--m", m_hint, "stream edge count for numeric bounds");
  c_bounds->add_option("--t", t_hint, "copy count for numeric bounds");
  c_bounds->add_option("--epsilon", epsilon);

  auto* c_gen = app.add_subcommand("gen", "generate benchmark streams with ground truth");
  c_gen->add_option("--kind", kind, "planted | reduction | random")->required();
  c_gen->add_option("--out", out_file)->required();
  c_gen->add_option("--truth", truth_file, "sidecar path (default <out>.truth.json)");
  c_gen->add_option("--pattern", pattern_file);
  c_gen->add_option("--t", t, "planted copies / reduction count parameter");
  c_gen->add_option("--pad", pad, "padding edges (planted)");
  c_gen->add_flag("--overlap", overlap, "allow overlapping copies (planted)");
  c_gen->add_option("--n", n, "vertex budget (reduction, random)");
  c_gen->add_option("--m", m, "edge count (random)");
  c_gen->add_option("--d", d, "max degree (random)");
  c_gen->add_option("--arity", arity, "edge arity (random)");
  c_gen->add_option("--epsilon", eps_str, "rational, e.g. 1/2 (reduction)");
  c_gen->add_option("--promise", promise, "yes | no (reduction)");
  c_gen->add_option("--seed", seed);

  auto* c_bench = app.add_subcommand("bench", "space/accuracy table over sampling levels");
  c_bench->add_option("--pattern", pattern_file)->required();
  c_bench->add_option("--stream", stream_file);
  c_bench->add_option("--known-t", known_t, "ground truth for --stream");
  c_bench->add_option("--kind", kind, "planted (generated instead of --stream)");
  c_bench->add_option("--t", t, "planted copies");
  c_bench->add_option("--pad", pad, "padding edges");
  c_bench->add_option("--reps", reps, "seeds per level")->check(CLI::PositiveNumber);
  c_bench->add_option("--levels", level_count, "number of levels (default from stream size)");
  c_bench->add_option("--seed", seed);
  c_bench->add_option("--csv", csv_file, "also write rows as CSV");
  c_bench->add_flag("--timings", timings, "include wall-clock times (breaks reproducibility)");

  for (auto* sub : {c_count, c_oracle, c_bounds, c_gen, c_bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(c_count)) {
      if (reps < 1 || reps % 2 == 0) {
        std::cerr << "count: --reps must be odd and positive\n";
        return 1;
      }
      return run_count(pattern_file, stream_file, epsilon, constant, seed, reps, fixed_p, known_t,
                       check_degree, pretty);
    }
    if (app.got_subcommand(c_oracle)) return run_oracle(pattern_file, stream_file, pretty);
    if (app.got_subcommand(c_bounds))
      return run_bounds(pattern_file, m_hint, t_hint, epsilon, pretty);
    if (app.got_subcommand(c_gen))
      return run_gen(kind, pattern_file, out_file, truth_file, t, pad, overlap, n, m, d, arity,
                     eps_str, promise, seed, pretty);
    if (app.got_subcommand(c_bench))
      return run_bench(pattern_file, stream_file, kind, t, pad, known_t, reps, level_count, seed,
                       csv_file, timings, pretty);
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
