#include "hilbertp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "hilbertp/generators.hpp"
#include "hilbertp/geometry.hpp"
#include "hilbertp/io.hpp"
#include "hilbertp/rademacher.hpp"
#include "hilbertp/seed.hpp"

namespace hilbertp::cli {

using nlohmann::json;

bool RouteResults::predicted_hilbert() const {
  return p.value() == 2.0 || two_valued.is_hilbert();
}

bool RouteResults::projection_says_hilbert(double tol) const { return std::abs(projection_norm - 1.0) <= tol; }

bool RouteResults::residual_says_hilbert(double tol) const { return gradient_residual <= tol; }

bool RouteResults::agree(double tol) const {
  if (!oracle.decided()) return false;
  const bool want = predicted_hilbert();
  return projection_says_hilbert(tol) == want && residual_says_hilbert(tol) == want &&
         oracle.is_hilbert() == want;
}

RouteResults run_routes(const Field& phi, Exponent p, double tol, const OracleOptions& opts) {
  RouteResults r;
  r.p = p;
  r.two_valued = two_valued_check(phi, tol);
  r.projection_norm = projection_pnorm(phi, p);
  r.gradient_residual = gradient_residual(phi, p, tol);
  r.oracle = hilbert_oracle(phi, p, opts);
  r.boundary_distance = boundary_distance(phi, tol);
  return r;
}

json exponent_json(Exponent p) { return p.is_infinite() ? json("inf") : json(p.value()); }

json to_json(const RouteResults& r, double tol) {
  return {{"p", exponent_json(r.p)},
          {"two_valued", io::to_json(r.two_valued)},
          {"predicted_hilbert", r.predicted_hilbert()},
          {"projection_norm", r.projection_norm},
          {"gradient_residual", r.gradient_residual},
          {"oracle", io::to_json(r.oracle)},
          {"boundary_distance", r.boundary_distance},
          {"agreement", r.agree(tol)}};
}

Exponent parse_exponent(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity") return Exponent::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw io::InputError("--p: cannot parse '" + text + "'");
  }
  if (used != t.size()) throw io::InputError("--p: cannot parse '" + text + "'");
  if (!(v >= 1.0) || !std::isfinite(v)) throw io::InputError("--p: exponent must be >= 1, got '" + text + "'");
  return Exponent(v);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs fn(i) for i in [0, n) on `jobs` threads. Results must be written by index.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Common {
  std::vector<std::string> p_text;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
  OracleOptions oracle;
};

void add_common(CLI::App* cmd, Common& c, bool with_p) {
  if (with_p) cmd->add_option("--p", c.p_text, "Exponent(s); repeatable, 'inf' accepted");
  cmd->add_option("--tol", c.tol, "Relative tolerance of the exact criteria")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json"}));
}

void add_oracle_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--oracle-tol", c.oracle.tol, "Oracle convergence tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", c.oracle.max_iters, "Oracle iterations per restart")->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", c.oracle.restarts, "Oracle restarts")->check(CLI::PositiveNumber);
}

std::vector<Exponent> exponents(const Common& c, std::vector<Exponent> fallback) {
  if (c.p_text.empty()) return fallback;
  std::vector<Exponent> out;
  for (const auto& t : c.p_text) out.push_back(parse_exponent(t));
  return out;
}

json report_header(const std::string& command, const std::string& digest, std::uint64_t seed) {
  return {{"command", command}, {"instance_digest", digest}, {"seed", seed}, {"tool_version", kToolVersion}};
}

void emit(std::ostream& out, const json& report) { out << report.dump(2) << '\n'; }

const std::vector<Exponent> kDefaultGrid = {Exponent(1.0), Exponent(1.5), Exponent(3.0), Exponent(4.0),
                                            Exponent::infinity()};

// ---- certify / projnorm / oracle ---------------------------------------------------------

int cmd_certify(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const json input = io::load_json_file(path);
  const Field phi = io::field_from_json(input);
  const auto ps = exponents(c, kDefaultGrid);
  OracleOptions opts = c.oracle;
  opts.seed = c.seed;

  std::vector<RouteResults> results(ps.size());
  std::vector<double> timings(ps.size());
  parallel_for(ps.size(), c.jobs, [&](std::size_t i) {
    const auto t0 = Clock::now();
    OracleOptions o = opts;
    o.seed = derive_seed(c.seed, i);
    results[i] = run_routes(phi, ps[i], c.tol, o);
    timings[i] = ms_since(t0);
  });

  json report = report_header("certify", io::digest(input), c.seed);
  report["verdicts"] = json::array();
  bool all_agree = true;
  for (const auto& r : results) {
    report["verdicts"].push_back(to_json(r, c.tol));
    all_agree = all_agree && r.agree(c.tol);
  }
  report["agreement"] = all_agree;
  report["timings_ms"] = timings;
  emit(out, report);
  for (const auto& r : results) {
    err << "p=" << exponent_json(r.p).dump() << ": predicted " << (r.predicted_hilbert() ? "hilbert" : "not hilbert")
        << ", oracle " << to_string(r.oracle.decision) << ", projection norm " << r.projection_norm
        << (r.agree(c.tol) ? "" : "  [DISAGREEMENT]") << '\n';
  }
  return all_agree ? kOk : kDisagreement;
}

int cmd_projnorm(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const json input = io::load_json_file(path);
  const Field phi = io::field_from_json(input);
  json report = report_header("projnorm", io::digest(input), c.seed);
  report["verdicts"] = json::array();
  for (const auto& p : exponents(c, kDefaultGrid)) {
    const double n = projection_pnorm(phi, p);
    report["verdicts"].push_back(
        {{"p", exponent_json(p)}, {"projection_norm", n}, {"norm_one", std::abs(n - 1.0) <= c.tol}});
    err << "p=" << exponent_json(p).dump() << ": |P_phi| = " << n << '\n';
  }
  emit(out, report);
  return kOk;
}

int cmd_oracle(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const json input = io::load_json_file(path);
  const Field phi = io::field_from_json(input);
  const auto ps = exponents(c, kDefaultGrid);
  std::vector<HilbertVerdict> verdicts(ps.size());
  std::vector<double> timings(ps.size());
  parallel_for(ps.size(), c.jobs, [&](std::size_t i) {
    const auto t0 = Clock::now();
    OracleOptions o = c.oracle;
    o.seed = derive_seed(c.seed, i);
    verdicts[i] = hilbert_oracle(phi, ps[i], o);
    timings[i] = ms_since(t0);
  });
  json report = report_header("oracle", io::digest(input), c.seed);
  report["verdicts"] = json::array();
  bool decided = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    json v = io::to_json(verdicts[i]);
    v["p"] = exponent_json(ps[i]);
    report["verdicts"].push_back(v);
    decided = decided && verdicts[i].decided();
    err << "p=" << exponent_json(ps[i]).dump() << ": " << to_string(verdicts[i].decision) << '\n';
  }
  report["timings_ms"] = timings;
  emit(out, report);
  return decided ? kOk : kDisagreement;
}

// ---- classify -----------------------------------------------------------------------------

int cmd_classify(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const json input = io::load_json_file(path);
  const RademacherSum s = io::sum_from_json(input);
  CaseLabel label;
  try {
    label = classify(s, c.tol);
  } catch (const TrivialError& e) {
    throw io::InputError(std::string("xs: ") + e.what());
  }
  json report = report_header("classify", io::digest(input), c.seed);
  json verdict = io::to_json(label);
  bool agree = true;
  if (s.size() <= kMaxIndependenceTerms) {
    const Field phi = expand(s);
    const auto tv = two_valued_check(phi, c.tol);
    const bool hilbert = label.kind != SumCase::not_hilbert;
    agree = tv.is_hilbert() == hilbert;
    verdict["cross_check"] = {{"two_valued", io::to_json(tv)},
                              {"boundary_distance", boundary_distance(phi, c.tol)},
                              {"agreement", agree}};
  }
  report["verdicts"] = json::array({verdict});
  emit(out, report);
  err << "classification: " << to_string(label.kind);
  if (!label.reason.empty()) err << " (" << label.reason << ")";
  err << (agree ? "" : "  [DISAGREEMENT with two-valued check]") << '\n';
  return agree ? kOk : kDisagreement;
}

// ---- lemmas -------------------------------------------------------------------------------

json lemma_suite(std::uint64_t seed, std::size_t trials, std::size_t dim, double tol) {
  const std::size_t d = std::max<std::size_t>(dim, 2);
  gen::Rng rng(derive_seed(seed, 1));
  double worst_1a = 0.0, worst_1b = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto tri = gen::random_lemma1a_triple(rng, d);
    worst_1a = std::max(worst_1a, norm(lemma1a_decompose(tri.u0, tri.u1, tri.u2, tol) - tri.v) / norm(tri.u0));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const auto [u0, u1, u2] = gen::random_lemma1b_triple(rng, d);
    worst_1b = std::max(worst_1b, std::abs(lemma1b_orthogonality(u0, u1, u2, tol)) / (norm(u1) * norm(u2)));
  }
  std::size_t lemma3_ok = 0, lemma3_runs = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t size = 3 + t % 3;
    auto [u0, us] = gen::random_flip_family(rng, std::max(d, size), size);
    ++lemma3_runs;
    lemma3_ok += lemma3_check(VectorFamily(u0, us), tol).all_equal ? 1 : 0;
  }
  const auto l2 = lemma2_search(derive_seed(seed, 4), trials * 50, std::max<std::size_t>(dim, 2), tol);
  json out = {{"lemma1a", {{"instances", trials}, {"max_relative_error", worst_1a}}},
              {"lemma1b", {{"instances", trials}, {"max_normalized_inner_product", worst_1b}}},
              {"lemma3", {{"families", lemma3_runs}, {"all_equal", lemma3_ok}}},
              {"lemma2",
               {{"trials", l2.trials}, {"hypothesis_hits", l2.hypothesis_hits}, {"violations", l2.violations}}}};
  if (l2.counterexample) out["lemma2"]["counterexample"] = *l2.counterexample;
  out["pass"] = worst_1a <= 1e-9 && worst_1b <= 10 * tol && lemma3_ok == lemma3_runs && l2.violations == 0;
  return out;
}

int cmd_lemmas(const Common& c, std::size_t trials, std::size_t dims, std::ostream& out, std::ostream& err) {
  if (trials == 0) throw io::InputError("--trials: must be at least 1");
  json report = report_header("lemmas", io::digest(json{{"trials", trials}, {"dims", dims}}), c.seed);
  const auto t0 = Clock::now();
  json suite = lemma_suite(c.seed, trials, dims, c.tol);
  report["verdicts"] = json::array({suite});
  report["timings_ms"] = {ms_since(t0)};
  emit(out, report);
  err << "lemma suite: " << (suite["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
  return suite["pass"].get<bool>() ? kOk : kCounterexample;
}

// ---- search -------------------------------------------------------------------------------

constexpr double kSweepMargin = 1e-3;
constexpr double kClassifierMargin = 1e-6;

Field draw_sweep_field(gen::Rng& rng, std::size_t max_dim) {
  const std::size_t atoms = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_dim, 1))(rng);
  if (std::bernoulli_distribution(0.5)(rng)) return gen::random_two_valued_field(rng, atoms, dim);
  return gen::random_field(rng, atoms, dim);
}

bool routes_disagree(const Field& phi, double tol, const OracleOptions& opts) {
  for (const auto& p : kDefaultGrid)
    if (!run_routes(phi, p, tol, opts).agree(tol)) return true;
  return false;
}

// Greedy shrinking: drop atoms (renormalizing) and coordinates while the failure persists.
Field minimize_field(Field phi, const std::function<bool(const Field&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t drop = 0; drop < phi.atoms() && phi.atoms() > 1; ++drop) {
      std::vector<double> w;
      std::vector<Vec> vals;
      double mass = 0.0;
      for (std::size_t i = 0; i < phi.atoms(); ++i) {
        if (i == drop) continue;
        w.push_back(phi.weight(i));
        mass += phi.weight(i);
        vals.emplace_back(phi[i].begin(), phi[i].end());
      }
      for (double& x : w) x /= mass;
      try {
        Field cand(ProbSpace(w), vals);
        if (!cand.is_zero() && fails(cand)) {
          phi = cand;
          progress = true;
          break;
        }
      } catch (const Error&) {
      }
    }
    for (std::size_t k = 0; !progress && k < phi.dim() && phi.dim() > 1; ++k) {
      std::vector<Vec> vals;
      for (std::size_t i = 0; i < phi.atoms(); ++i) {
        Vec v(phi[i].begin(), phi[i].end());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
        vals.push_back(v);
      }
      Field cand(phi.space(), vals);
      if (!cand.is_zero() && fails(cand)) {
        phi = cand;
        progress = true;
      }
    }
  }
  return phi;
}

RademacherSum draw_classifier_sum(gen::Rng& rng, std::size_t max_dim) {
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_dim, 1))(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0:
      return gen::random_lattice_sum(rng, k, dim, 0.0);
    case 1:
      return gen::random_lattice_sum(rng, k, dim, 0.1);
    case 2: {
      const std::size_t count = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(dim, 3))(rng);
      return gen::scramble(rng, make_case_a(gen::random_case_a_input(rng, dim, count)), 1);
    }
    case 3:
      return gen::scramble(rng, make_case_b(std::uniform_real_distribution<double>(0.2, 2.0)(rng) * gen::random_unit(rng, dim)), 2);
    default: {
      if (dim < 2) return gen::random_lattice_sum(rng, k, dim, 0.0);
      const auto [u, v] = gen::random_case_c_input(rng, dim);
      return gen::scramble(rng, make_case_c(u, v), 1);
    }
  }
}

enum class ClassifierOutcome { agree, disagree, skipped };

ClassifierOutcome classifier_check(const RademacherSum& s, double tol) {
  if (s.is_zero()) return ClassifierOutcome::skipped;
  const Field phi = expand(s);
  if (boundary_distance(phi, tol) <= kClassifierMargin) return ClassifierOutcome::skipped;
  const bool brute = two_valued_check(phi, tol).is_hilbert();
  const bool label = classify(s, tol).kind != SumCase::not_hilbert;
  return brute == label ? ClassifierOutcome::agree : ClassifierOutcome::disagree;
}

RademacherSum minimize_sum(RademacherSum s, double tol) {
  bool progress = true;
  while (progress && s.size() > 1) {
    progress = false;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<Vec> xs(s.xs());
      xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(drop));
      RademacherSum cand(xs);
      if (classifier_check(cand, tol) == ClassifierOutcome::disagree) {
        s = cand;
        progress = true;
        break;
      }
    }
  }
  return s;
}

int cmd_search(const std::string& mode, std::size_t trials, std::size_t dims, const Common& c, std::ostream& out,
               std::ostream& err) {
  if (trials == 0) throw io::InputError("--trials: must be at least 1");
  if (dims == 0) throw io::InputError("--dims: must be at least 1");
  const json params = {{"mode", mode}, {"trials", trials}, {"dims", dims}, {"tol", c.tol}};
  json report = report_header("search", io::digest(params), c.seed);
  const auto t0 = Clock::now();
  json summary = {{"mode", mode}, {"trials", trials}};
  std::optional<json> counterexample;

  if (mode == "theorem1") {
    std::vector<int> status(trials, 0);  // 0 agree, 1 disagree, 2 near boundary
    std::vector<std::optional<Field>> failing(trials);
    parallel_for(trials, c.jobs, [&](std::size_t i) {
      gen::Rng rng(derive_seed(c.seed, i));
      const Field phi = draw_sweep_field(rng, std::min<std::size_t>(dims, 4));
      if (boundary_distance(phi, c.tol) <= kSweepMargin) {
        status[i] = 2;
        return;
      }
      OracleOptions o = c.oracle;
      o.seed = derive_seed(c.seed, i + trials);
      if (routes_disagree(phi, c.tol, o)) {
        status[i] = 1;
        failing[i] = phi;
      }
    });
    const auto count = [&](int s) { return static_cast<std::size_t>(std::count(status.begin(), status.end(), s)); };
    summary["disagreements"] = count(1);
    summary["near_boundary_skipped"] = count(2);
    for (std::size_t i = 0; i < trials && !counterexample; ++i) {
      if (!failing[i]) continue;
      OracleOptions o = c.oracle;
      o.seed = derive_seed(c.seed, i + trials);
      const Field small = minimize_field(*failing[i], [&](const Field& f) {
        return boundary_distance(f, c.tol) > kSweepMargin && routes_disagree(f, c.tol, o);
      });
      counterexample = io::to_json(small);
    }
  } else if (mode == "classifier") {
    std::vector<ClassifierOutcome> status(trials);
    std::vector<std::optional<RademacherSum>> failing(trials);
    parallel_for(trials, c.jobs, [&](std::size_t i) {
      gen::Rng rng(derive_seed(c.seed, i));
      const RademacherSum s = draw_classifier_sum(rng, std::min<std::size_t>(dims, 3));
      status[i] = classifier_check(s, c.tol);
      if (status[i] == ClassifierOutcome::disagree) failing[i] = s;
    });
    summary["disagreements"] = std::count(status.begin(), status.end(), ClassifierOutcome::disagree);
    summary["near_boundary_skipped"] = std::count(status.begin(), status.end(), ClassifierOutcome::skipped);
    for (std::size_t i = 0; i < trials && !counterexample; ++i)
      if (failing[i]) counterexample = io::to_json(minimize_sum(*failing[i], c.tol));
  } else if (mode == "lemma2") {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(trials, 64));
    std::vector<Lemma2Search> parts(chunks);
    parallel_for(chunks, c.jobs, [&](std::size_t i) {
      const std::size_t lo = trials * i / chunks, hi = trials * (i + 1) / chunks;
      parts[i] = lemma2_search(derive_seed(c.seed, i), hi - lo, std::max<std::size_t>(dims, 2), c.tol);
    });
    std::size_t hits = 0, violations = 0;
    for (const auto& part : parts) {
      hits += part.hypothesis_hits;
      violations += part.violations;
      if (part.counterexample && !counterexample) counterexample = json(*part.counterexample);
    }
    summary["hypothesis_hits"] = hits;
    summary["violations"] = violations;
  } else {
    throw io::InputError("--mode: expected theorem1, classifier or lemma2");
  }

  report["verdicts"] = json::array({summary});
  if (counterexample) report["counterexample"] = *counterexample;
  report["timings_ms"] = {ms_since(t0)};
  emit(out, report);
  err << "search " << mode << ": " << trials << " trials, "
      << (counterexample ? "COUNTEREXAMPLE FOUND" : "no counterexample") << '\n';
  return counterexample ? kCounterexample : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify Hilbert points in finite vector-valued L^p spaces"};
  app.require_subcommand(1);
  Common common;
  std::string path, mode;
  std::size_t trials = 0, dims = 3;

  auto* certify = app.add_subcommand("certify", "Run every decision route on a field");
  certify->add_option("path", path, "Field JSON")->required();
  add_common(certify, common, true);
  add_oracle_options(certify, common);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a Rademacher sum");
  classify_cmd->add_option("path", path, "Sum JSON")->required();
  add_common(classify_cmd, common, false);

  auto* projnorm = app.add_subcommand("projnorm", "Operator norm of the rank-one projection");
  projnorm->add_option("path", path, "Field JSON")->required();
  add_common(projnorm, common, true);

  auto* oracle = app.add_subcommand("oracle", "Minimize |phi + f|_p over the orthogonal hyperplane");
  oracle->add_option("path", path, "Field JSON")->required();
  add_common(oracle, common, true);
  add_oracle_options(oracle, common);

  auto* lemmas = app.add_subcommand("lemmas", "Randomized checks of the geometry lemmas");
  trials = 200;
  lemmas->add_option("--trials", trials, "Instances per lemma");
  lemmas->add_option("--dims", dims, "Ambient dimension");
  add_common(lemmas, common, false);

  auto* search = app.add_subcommand("search", "Randomized falsification harness");
  search->add_option("--mode", mode, "theorem1 | classifier | lemma2")->required();
  search->add_option("--trials", trials, "Number of trials")->required();
  search->add_option("--dims", dims, "Largest dimension");
  add_common(search, common, false);
  add_oracle_options(search, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*certify) return cmd_certify(path, common, out, err);
    if (*classify_cmd) return cmd_classify(path, common, out, err);
    if (*projnorm) return cmd_projnorm(path, common, out, err);
    if (*oracle) return cmd_oracle(path, common, out, err);
    if (*lemmas) return cmd_lemmas(common, trials, dims, out, err);
    if (*search) return cmd_search(mode, trials, dims, common, out, err);
  } catch (const io::InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hilbertp::cli
