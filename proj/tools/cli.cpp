#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <list>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdk/characters.hpp"
#include "zdk/coeffs.hpp"
#include "zdk/detector.hpp"
#include "zdk/errors.hpp"
#include "zdk/explicit_formula.hpp"
#include "zdk/lfunc.hpp"
#include "zdk/model.hpp"
#include "zdk/sievesim.hpp"
#include "zdk/symfunc.hpp"
#include "zdk/zeros.hpp"
#include "zdk/zerostats.hpp"

namespace zdk::cli {

namespace {

using nlohmann::json;

// Flag values with fallback to the --config JSON file, then to a default.
class Params {
 public:
  void bind(CLI::App* app, const std::string& name, const std::string& help) {
    if (app->get_option_no_throw("--" + name) != nullptr) return;
    Slot& slot = slots_[name].emplace_back();
    slot.opt = app->add_option("--" + name, slot.value, help);
  }
  void load_config(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open config file " + path);
    try {
      config_ = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("config is not valid JSON: ") + e.what());
    }
    if (!config_.is_object()) throw ParseError(0, "config must be a JSON object");
  }

  bool given(const std::string& name) const { return from_flag(name) != nullptr || config_.contains(name); }
  std::string str(const std::string& name, const std::string& def = {}) const {
    if (const Slot* s = from_flag(name)) return s->value;
    if (config_.contains(name)) {
      const auto& v = config_.at(name);
      return v.is_string() ? v.get<std::string>() : v.dump();
    }
    return def;
  }
  double num(const std::string& name, double def) const {
    if (!given(name)) return def;
    const std::string s = str(name);
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("--" + name + " expects a number, got '" + s + "'");
    }
  }
  std::uint64_t integer(const std::string& name, std::uint64_t def) const {
    const double v = num(name, static_cast<double>(def));
    if (!(v >= 0.0) || v != std::floor(v) || v > 1.8e19)
      throw ValidationError("--" + name + " expects a nonnegative integer");
    return static_cast<std::uint64_t>(v);
  }

 private:
  struct Slot {
    CLI::Option* opt = nullptr;
    std::string value;
  };
  // One slot per subcommand that declares the flag; only the parsed one has a count.
  const Slot* from_flag(const std::string& name) const {
    const auto it = slots_.find(name);
    if (it == slots_.end()) return nullptr;
    for (const Slot& s : it->second)
      if (s.opt->count() > 0) return &s;
    return nullptr;
  }

  std::map<std::string, std::list<Slot>> slots_;
  json config_ = json::object();
};

struct Output {
  std::ofstream file;
  std::ostream* stream;

  Output(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw ValidationError("cannot write " + path);
      stream = &file;
    }
    *stream << std::setprecision(12);
  }
  std::ostream& operator*() { return *stream; }
};

LFunctionModel resolve_model(const Params& p) {
  if (p.given("model")) return load_model(p.str("model"));
  if (p.given("character")) {
    // chi_<q>_<index>
    const std::string label = p.str("character");
    unsigned long long q = 0, idx = 0;
    char tail = 0;
    if (std::sscanf(label.c_str(), "chi_%llu_%llu%c", &q, &idx, &tail) != 2)
      throw ValidationError("character label must look like chi_<q>_<index>");
    const auto all = DirichletCharacter::all(q);
    if (idx >= all.size()) throw ValidationError("no character " + label);
    return dirichlet_model(all[idx]);
  }
  if (p.given("q")) {
    const auto q = p.integer("q", 1);
    const auto prim = DirichletCharacter::primitive(q);
    if (prim.empty()) throw ValidationError("no primitive characters mod " + std::to_string(q));
    if (!p.given("chi")) return dirichlet_model(prim.front());
    const auto idx = p.integer("chi", 0);
    const auto all = DirichletCharacter::all(q);
    if (idx >= all.size()) throw ValidationError("character index out of range");
    return dirichlet_model(all[idx]);
  }
  if (p.given("random")) {
    return random_unitary_model(static_cast<int>(p.integer("m", 3)), p.integer("seed", 1), p.integer("q", 1));
  }
  return zeta_model();
}

zerostats::ZeroDataset resolve_zeros(const Params& p, const LFunctionModel& model, double T) {
  if (p.given("zeros")) {
    const double tmax = p.num("Tmax", T);
    return zerostats::ingest_zeros(p.str("zeros"), model.label, tmax, lfunc::zeros_symmetric(model));
  }
  return zerostats::computed_zeros(model, T);
}

void stat_header(std::ostream& os) { os << "statistic,T,alpha,value,bound\n"; }

void stat_row(std::ostream& os, const std::string& name, double T, std::optional<double> alpha, double value,
              std::optional<double> bound) {
  os << name << ',' << T << ',';
  if (alpha) os << *alpha;
  os << ',' << value << ',';
  if (bound) os << *bound;
  os << '\n';
}

std::vector<std::complex<double>> random_det_one(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<std::complex<double>> a(static_cast<std::size_t>(m));
  double sum = 0.0;
  for (int j = 0; j + 1 < m; ++j) {
    const double t = u(rng);
    sum += t;
    a[static_cast<std::size_t>(j)] = std::polar(1.0, t);
  }
  a.back() = std::polar(1.0, -sum);
  return a;
}

// ---- subcommands ----

int cmd_verify_symfunc(const Params& p, std::ostream& os) {
  const int m_max = static_cast<int>(p.integer("m", 4));
  const auto trials = p.integer("trials", 200);
  const double tol = p.num("tol", 1e-10);
  if (m_max < 1 || m_max > 5) throw ValidationError("--m must lie in 1..5");
  if (trials < 1) throw ValidationError("--trials must be >= 1");
  std::mt19937_64 rng(p.integer("seed", 1));
  bool ok = true;
  os << "check,m,trials,worst_residual,status\n";
  auto row = [&](const std::string& check, int m, double worst) {
    const bool pass = worst <= tol;
    ok = ok && pass;
    os << check << ',' << m << ',' << trials << ',' << worst << ',' << (pass ? "ok" : "FAIL") << '\n';
  };
  for (int m = 1; m <= m_max; ++m) {
    const auto parts = symfunc::Partition::all_up_to(m <= 4 ? 8 : 6, m);
    double w_tab = 0.0, w_hook = 0.0, w_shift = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const symfunc::SatakeVector sv(random_det_one(m, rng));
      for (const auto& lam : parts) {
        const auto b = symfunc::schur_bialternant(sv, lam);
        const auto o = symfunc::schur_tableau_oracle(sv, lam);
        w_tab = std::max(w_tab, std::abs(b - o) / std::max(std::abs(o), 1.0));
      }
      for (int k = 1; k <= 10; ++k) w_hook = std::max(w_hook, symfunc::hook_identity_residual(sv, k));
      for (const auto& lam : symfunc::Partition::all_up_to(4, m))
        for (int j = 1; j <= 2; ++j) w_shift = std::max(w_shift, symfunc::shift_invariance_residual(sv, lam, j));
    }
    row("bialternant_vs_tableau", m, w_tab);
    row("hook_identity", m, w_hook);
    row("shift_invariance", m, w_shift);
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_coeffs(const Params& p, std::ostream& os, std::ostream& err) {
  const LFunctionModel model = resolve_model(p);
  const auto kind = coeffs::kind_from_string(p.str("kind", "lambda"));
  const auto N = p.integer("N", 1000);
  const auto table = kind == coeffs::Kind::tau_m ? [&] {
    coeffs::CoefficientTable t{kind, N, model.m, std::vector<Complex>(N + 1)};
    for (std::uint64_t n = 1; n <= N; ++n) t.values[n] = static_cast<double>(coeffs::tau_m(model.m, n));
    return t;
  }()
                                                 : coeffs::build_table(model, kind, N);
  coeffs::write_csv(table, os);
  if (kind == coeffs::Kind::tau_m) return kSuccess;
  const auto rep = coeffs::bound_check(table, p.num("theta", model.theta));
  err << "bound_check,worst_ratio=" << rep.worst_ratio << ",worst_n=" << rep.worst_n
      << ",violations=" << rep.violations << ",checked=" << rep.checked << '\n';
  return rep.violations == 0 ? kSuccess : kVerificationFailure;
}

int cmd_zeros(const Params& p, std::ostream& os, std::ostream& err) {
  const LFunctionModel model = resolve_model(p);
  const double T = p.num("T", 50.0);
  const auto zd = resolve_zeros(p, model, T);
  if (p.given("list")) {
    std::ofstream f(p.str("list"));
    if (!f) throw ValidationError("cannot write " + p.str("list"));
    zerostats::write_zeros(zd, f);
  }
  if (T > zd.T_max) throw RangeError("T exceeds the dataset T_max");
  bool ok = true;
  stat_header(os);
  const double logT = std::log(std::max(T, 3.0));

  stat_row(os, "zero_count", T, std::nullopt, static_cast<double>(zd.count_up_to(T)), std::nullopt);
  if (model.continuation == Continuation::degree_one && model.m == 1) {
    const int counted = lfunc::count_zeros_rectangle(model, 0.0, T);
    const double gap = std::abs(counted - lfunc::rvm_estimate(model, T));
    stat_row(os, "contour_count", T, std::nullopt, counted, std::nullopt);
    stat_row(os, "rvm_gap", T, std::nullopt, gap, 3.0 * logT);
    ok = ok && gap <= 3.0 * logT && static_cast<std::size_t>(counted) == zd.count_up_to(T);
  }
  if (zd.count_up_to(T) > 0) {
    const double alpha = p.num("alpha", 1.0);
    const double d = zerostats::fujii_statistic(zd, alpha, T);
    stat_row(os, "fujii", T, alpha, d, std::nullopt);
    const double x = p.num("x", 2.0);
    auto a = [&](long n) { return model.character ? (*model.character)(n) : Complex{1.0, 0.0}; };
    const auto lg = zerostats::landau_gonek_sum(zd, x, T, a);
    stat_row(os, "landau_gonek_gap", T, std::nullopt, lg.gap, 5.0 * x * std::log(x * T));
    ok = ok && lg.gap <= 5.0 * x * std::log(x * T);
  }
  if (model.entire && model.m == 1 && model.character) {
    lfunc::DetectionConfig cfg;
    cfg.X = p.num("X", 1000.0);
    cfg.Y = p.num("Y", 100.0);
    cfg.delta = p.num("delta", 0.25);
    cfg.A = p.num("A", 3.0);
    const auto zs = zd.zeros_up_to(T);
    std::vector<double> gammas;
    for (const auto& z : zs)
      if (z.imag() > 0.0) gammas.push_back(z.imag());
    std::sort(gammas.begin(), gammas.end());
    if (gammas.size() > 3) gammas.resize(3);
    for (const double g : gammas) {
      const auto rep = lfunc::zero_detector(model, Complex{0.5, g}, cfg);
      stat_row(os, "detector_residual", T, std::nullopt, rep.identity_residual, rep.tolerance);
      ok = ok && rep.passed;
    }
    const double xe = p.num("xe", 10.0);
    try {
      const auto ef = zerostats::explicit_formula_balance(model, zd, xe);
      stat_row(os, "explicit_residual", T, std::nullopt, ef.residual, 1e-3);
      ok = ok && ef.residual <= 1e-3;
    } catch (const IncompleteDataset& e) {
      err << "explicit formula skipped: " << e.what() << '\n';
    }
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_detect(const Params& p, std::ostream& os) {
  const LFunctionModel model = resolve_model(p);
  lfunc::DetectionConfig cfg;
  cfg.X = p.num("X", 1000.0);
  cfg.Y = p.num("Y", 100.0);
  cfg.delta = p.num("delta", 0.25);
  cfg.A = p.num("A", 3.0);
  cfg.validate();
  std::vector<std::pair<double, bool>> inputs;  // (gamma, is_control)
  if (p.given("gamma")) {
    inputs.emplace_back(p.num("gamma", 0.0), false);
  } else {
    const auto count = p.integer("count", 3);
    auto zeros = lfunc::critical_line_zeros(model, p.num("T", 20.0));
    std::erase_if(zeros, [](double g) { return g <= 0.0; });
    if (zeros.size() < count) throw ValidationError("fewer than --count zeros below --T");
    for (std::size_t i = 0; i < count; ++i) inputs.emplace_back(zeros[i], false);
    if (!zeros.empty()) inputs.emplace_back(zeros.front() + 0.7, true);
  }
  bool ok = true;
  os << "gamma,kind,identity_residual,tolerance,abs_L,main_term_gap,passed\n";
  for (const auto& [g, control] : inputs) {
    const auto rep = lfunc::zero_detector(model, Complex{0.5, g}, cfg);
    os << g << ',' << (control ? "control" : "zero") << ',' << rep.identity_residual << ',' << rep.tolerance << ','
       << rep.abs_L_at_rho << ',' << rep.main_term_gap << ',' << (rep.passed ? 1 : 0) << '\n';
    // A control must not pass; a zero must.
    ok = ok && (control ? !rep.passed : rep.passed);
  }
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_count(const Params& p, std::ostream& os) {
  const LFunctionModel model = resolve_model(p);
  const double T = p.num("T", 100.0);
  const double sigma = p.num("sigma", 0.0);
  const int n = lfunc::count_zeros_rectangle(model, sigma, T);
  stat_header(os);
  stat_row(os, "zero_count", T, std::nullopt, n, std::nullopt);
  if (sigma > 0.0) return kSuccess;
  const double est = lfunc::rvm_estimate(model, T);
  const double bound = 3.0 * std::log(T);
  stat_row(os, "rvm_estimate", T, std::nullopt, est, std::nullopt);
  stat_row(os, "rvm_gap", T, std::nullopt, std::abs(n - est), bound);
  return std::abs(n - est) <= bound ? kSuccess : kVerificationFailure;
}

int cmd_fujii(const Params& p, std::ostream& os) {
  const LFunctionModel model = resolve_model(p);
  const double T = p.num("T", 100.0);
  const double alpha = p.num("alpha", 1.0);
  const auto zd = resolve_zeros(p, model, T);
  const double d = zerostats::fujii_statistic(zd, alpha, T);
  const double bound = T > std::exp(1.0) ? 10.0 * std::log(std::log(T)) / std::log(T) : 1.0;
  stat_header(os);
  stat_row(os, "fujii", T, alpha, d, bound);
  if (p.given("M") || p.given("B")) {
    const int M = p.given("M") ? static_cast<int>(p.integer("M", 8)) : zerostats::choose_M(p.num("B", 0.5), T, alpha);
    const auto fb = zerostats::family_equidistribution({zd}, alpha, T, M);
    stat_row(os, "erdos_turan_bound", T, alpha, fb.bound, std::nullopt);
    stat_row(os, "direct_discrepancy", T, alpha, fb.direct, fb.bound + 1e-6);
  }
  return d <= bound ? kSuccess : kVerificationFailure;
}

int cmd_landau(const Params& p, std::ostream& os) {
  const LFunctionModel model = resolve_model(p);
  const double T = p.num("T", 1000.0);
  const double x = p.num("x", 2.0);
  const auto zd = resolve_zeros(p, model, T);
  auto a = [&](long n) { return model.character ? (*model.character)(n) : Complex{1.0, 0.0}; };
  const auto lg = zerostats::landau_gonek_sum(zd, x, T, a);
  const double bound = 5.0 * x * std::log(x * T);
  stat_header(os);
  stat_row(os, "landau_gonek_abs_sum", T, std::nullopt, std::abs(lg.sum), std::nullopt);
  stat_row(os, "landau_gonek_main_term", T, std::nullopt, lg.main_term.real(), std::nullopt);
  stat_row(os, "landau_gonek_gap", T, std::nullopt, lg.gap, bound);
  return lg.gap <= bound ? kSuccess : kVerificationFailure;
}

int cmd_explicit(const Params& p, std::ostream& os) {
  const LFunctionModel model = resolve_model(p);
  const double T = p.num("T", 200.0);
  const double x = p.num("x", 10.0);
  const double tol = p.num("tol", 1e-3);
  const auto zd = resolve_zeros(p, model, T);
  const auto rep = zerostats::explicit_formula_balance(model, zd, x);
  stat_header(os);
  stat_row(os, "explicit_zero_side", T, std::nullopt, rep.zero_side.real(), std::nullopt);
  stat_row(os, "explicit_arithmetic_side", T, std::nullopt, rep.arithmetic_side, std::nullopt);
  stat_row(os, "explicit_residual", T, std::nullopt, rep.residual, tol);
  stat_row(os, "explicit_tail_bound", T, std::nullopt, rep.tail_bound, 1e-5);
  return rep.residual <= tol ? kSuccess : kVerificationFailure;
}

json estimate_json(const sievesim::Estimate& e) {
  return {{"estimate", {e.estimate.real(), e.estimate.imag()}}, {"stderr", e.stderr_}, {"samples", e.samples}, {"seed", e.seed}};
}

int cmd_sieve(const Params& p, std::ostream& os) {
  sievesim::EnsembleSpec spec;
  spec.m = static_cast<int>(p.integer("m", 3));
  spec.count = p.integer("samples", 100000);
  spec.seed = p.integer("seed", 1);
  spec.workers = static_cast<unsigned>(p.integer("workers", 1));
  spec.distribution = sievesim::distribution_from_string(p.str("distribution", "haar_su_m"));
  spec.validate();
  const int max_size = static_cast<int>(p.integer("max-size", 4));

  json report;
  report["spec"] = {{"m", spec.m},
                    {"samples", spec.count},
                    {"seed", spec.seed},
                    {"distribution", sievesim::to_string(spec.distribution)},
                    {"coprimality", "vacuous for synthetic ensembles"}};
  const auto gram = sievesim::schur_gram(spec, max_size);
  json entries = json::array();
  for (std::size_t a = 0; a < gram.partitions.size(); ++a)
    for (std::size_t b = 0; b < gram.partitions.size(); ++b) {
      json e = estimate_json(gram.gram[a][b]);
      e["lambda"] = gram.partitions[a].parts();
      e["mu"] = gram.partitions[b].parts();
      entries.push_back(e);
    }
  report["gram"] = {{"identity_within_3sigma", gram.identity_within_3sigma}, {"worst_z", gram.worst_z}, {"entries", entries}};
  bool ok = spec.distribution != sievesim::Distribution::haar_su_m || gram.identity_within_3sigma;

  if (spec.m >= 2) {
    const double x = p.num("x", 40.0);
    const auto tuples = sievesim::tuples_up_to(spec.m, x);
    sievesim::LinearForm form;
    form.m = spec.m;
    form.x = x;
    std::mt19937_64 rng(sievesim::kChunk ^ spec.seed);
    const std::size_t support = std::min<std::size_t>(tuples.size(), p.integer("support", 50));
    for (std::size_t i = 0; i < support; ++i) form.terms.emplace_back(tuples[i], (rng() & 1) ? 1.0 : -1.0);
    const auto rr = sievesim::large_sieve_ratio(spec, form);
    const bool within = rr.ratio <= 1.0 + 5.0 * rr.stderr_;
    report["large_sieve"] = {{"ratio", rr.ratio},   {"stderr", rr.stderr_}, {"support", rr.support},
                             {"samples", rr.samples}, {"seed", rr.seed},     {"within_5_stderr", within}};
    if (spec.distribution == sievesim::Distribution::haar_su_m) ok = ok && within;
  }

  const auto mu = sievesim::mu_power_correlation(spec, p.integer("mu-x", 30));
  json pairs = json::array();
  for (const auto& pe : mu.pairs)
    if (pe.shared || pe.b <= 12)
      pairs.push_back({{"a", pe.a}, {"b", pe.b}, {"estimate", {pe.estimate.real(), pe.estimate.imag()}},
                       {"stderr", pe.stderr_}, {"shared", pe.shared}});
  report["mu_correlation"] = {{"shared_pairs", mu.shared_pairs},
                              {"generic_pairs", mu.generic_pairs},
                              {"min_shared_z", std::isinf(mu.min_shared_z) ? -1.0 : mu.min_shared_z},
                              {"max_generic_z", mu.max_generic_z},
                              {"generic_exceedances", mu.generic_exceedances},
                              {"allowed_exceedances", mu.allowed_exceedances},
                              {"structure_ok", mu.structure_ok},
                              {"pairs", pairs}};
  if (spec.distribution == sievesim::Distribution::haar_su_m) ok = ok && mu.structure_ok;
  report["passed"] = ok;
  os << report.dump(2) << '\n';
  return ok ? kSuccess : kVerificationFailure;
}

int cmd_family_scalers(const Params& p, std::ostream& os) {
  const int m = static_cast<int>(p.integer("m", 2));
  const auto q = p.integer("q", 1);
  const double theta = p.num("theta", 0.0);
  const auto V = sievesim::index_V(m, q);
  const auto F = sievesim::family_factor_F(m, q, theta);
  os << "quantity,m,q,theta,value\n";
  auto row = [&](const std::string& name, double v) { os << name << ',' << m << ',' << q << ',' << theta << ',' << v << '\n'; };
  os << "index_V," << m << ',' << q << ',' << theta << ',' << V << '\n';
  row("F", F.F);
  row("F_logsum", F.F_logsum);
  row("two_omega", F.two_omega);
  row("two_m_omega", F.two_m_omega);
  row("F_over_two_omega", F.ratio);
  row("F_within_two_m_omega", F.within_two_m_omega ? 1.0 : 0.0);
  return F.within_two_m_omega ? kSuccess : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zdk: zero-density toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default flag values (flags override)");
  Params params;

  const std::vector<std::pair<std::string, std::string>> model_flags = {
      {"model", "model JSON file"},
      {"q", "modulus of a Dirichlet character"},
      {"chi", "index of the character mod q (label chi_<q>_<index>)"},
      {"character", "character label chi_<q>_<index>"},
      {"random", "use a random unitary model (value ignored)"},
      {"workers", "worker threads"},
      {"out", "output file (default stdout)"}};
  auto sub = [&](const std::string& name, const std::string& help,
                 const std::vector<std::pair<std::string, std::string>>& flags) {
    CLI::App* s = app.add_subcommand(name, help);
    for (const auto& [f, h] : model_flags) params.bind(s, f, h);
    for (const auto& [f, h] : flags) params.bind(s, f, h);
    return s;
  };

  auto* verify = sub("verify-symfunc", "Schur engine invariant suite",
                     {{"m", "largest degree (1..5)"}, {"trials", "random vectors per degree"}, {"seed", "RNG seed"},
                      {"tol", "residual tolerance"}});
  auto* coeffs_cmd = sub("coeffs", "Dirichlet coefficient table as CSV",
                         {{"kind", "lambda | mu | vonmangoldt | tau_m"}, {"N", "table length"}, {"m", "degree (random model)"},
                          {"seed", "seed (random model)"}, {"theta", "exponent for the bound check"}});
  auto* zeros_cmd = sub("zeros", "zero pipeline: counts, statistics, detector, explicit formula",
                        {{"zeros", "zero file"}, {"Tmax", "height covered by the zero file"}, {"T", "height"},
                         {"alpha", "Fujii alpha"}, {"x", "Landau-Gonek x"}, {"xe", "explicit formula x"},
                         {"X", "mollifier length"}, {"Y", "detector Y"}, {"delta", "delta"}, {"A", "contour shift"},
                         {"list", "write the zero ordinates here"}, {"m", "degree"}, {"seed", "seed"}});
  auto* detect = sub("detect", "zero detector at the first zeros and a control",
                     {{"X", "mollifier length"}, {"Y", "Y"}, {"delta", "delta"}, {"A", "contour shift"},
                      {"T", "search height"}, {"count", "number of zeros"}, {"gamma", "single ordinate to test"}});
  auto* count = sub("count", "argument-principle zero count",
                    {{"T", "height"}, {"sigma", "left edge"}, {"m", "degree"}, {"seed", "seed"}});
  auto* fujii = sub("fujii", "star discrepancy of {alpha gamma}",
                    {{"zeros", "zero file"}, {"Tmax", "height covered by the zero file"}, {"T", "height"},
                     {"alpha", "alpha"}, {"M", "Beurling-Selberg degree"}, {"B", "constant for the default M"}});
  auto* landau = sub("landau", "Landau-Gonek sum against its main term",
                     {{"zeros", "zero file"}, {"Tmax", "height covered by the zero file"}, {"T", "height"}, {"x", "x"}});
  auto* expl = sub("explicit", "explicit formula balance",
                   {{"zeros", "zero file"}, {"Tmax", "height covered by the zero file"}, {"T", "zeros up to this height"},
                    {"x", "x"}, {"tol", "residual tolerance"}});
  auto* sieve = sub("sieve", "Monte Carlo large-sieve surrogate (JSON)",
                    {{"m", "degree"}, {"samples", "sample count"}, {"seed", "seed"}, {"distribution", "haar_su_m | all_ones | adversarial_aligned"},
                     {"max-size", "largest |lambda| in the Gram matrix"}, {"x", "cutoff of the linear form"},
                     {"support", "number of tuples in the form"}, {"mu-x", "range of the mu correlation"}});
  auto* scalers = sub("family-scalers", "index V(q) and factor F(q)",
                      {{"m", "degree"}, {"q", "level"}, {"theta", "exponent"}});

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    params.load_config(config_path);
    Output o(params.str("out"), out);
    if (verify->parsed()) return cmd_verify_symfunc(params, *o);
    if (coeffs_cmd->parsed()) return cmd_coeffs(params, *o, err);
    if (zeros_cmd->parsed()) return cmd_zeros(params, *o, err);
    if (detect->parsed()) return cmd_detect(params, *o);
    if (count->parsed()) return cmd_count(params, *o);
    if (fujii->parsed()) return cmd_fujii(params, *o);
    if (landau->parsed()) return cmd_landau(params, *o);
    if (expl->parsed()) return cmd_explicit(params, *o);
    if (sieve->parsed()) return cmd_sieve(params, *o);
    if (scalers->parsed()) return cmd_family_scalers(params, *o);
  } catch (const QuadratureDivergence& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const BoundaryZero& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace zdk::cli
