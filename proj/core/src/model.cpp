#include "zdk/model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"
#include "zdk/parallel.hpp"

namespace zdk {

using nlohmann::json;

namespace {

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError("complex value must be a number or [re, im]");
}

std::vector<Complex> parse_complex_list(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of complex values");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(parse_complex(x));
  return out;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Per-prime generator seeded from (seed, p) so the data is independent of query order.
std::mt19937_64 prime_rng(std::uint64_t seed, std::uint64_t p) { return std::mt19937_64(substream_seed(seed, p)); }

std::vector<Complex> random_det_one_phases(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> a;
  double total = 0.0;
  for (int j = 0; j + 1 < m; ++j) {
    const double phi = u(rng);
    total += phi;
    a.push_back(std::polar(1.0, phi));
  }
  a.push_back(std::polar(1.0, -total));
  return a;
}

}  // namespace

LocalFactor LocalFactor::unramified(std::uint64_t p, std::vector<Complex> alphas) {
  LocalFactor f;
  f.prime = p;
  f.sv.emplace(std::move(alphas), p);
  return f;
}

LocalFactor LocalFactor::ramified_with(std::uint64_t p, std::vector<Complex> coeffs) {
  LocalFactor f;
  f.prime = p;
  f.ramified_coeffs = std::move(coeffs);
  return f;
}

LocalFactor LFunctionModel::local(std::uint64_t p) const {
  if (auto it = locals.find(p); it != locals.end()) return it->second;
  if (default_local) return default_local(p);
  throw MissingLocalFactor(p);
}

void LFunctionModel::validate() const {
  if (m < 1) throw ValidationError("degree m must be >= 1");
  if (q < 1) throw ValidationError("conductor q must be >= 1");
  if (static_cast<int>(kappas.size()) != m) throw ValidationError("need exactly m archimedean parameters");
  const double theta_m = symfunc::ramanujan_exponent(m);
  for (const auto& k : kappas)
    if (k.real() < -theta_m - 1e-12) throw ValidationError("Re(kappa) below -theta_m");
  if (continuation == Continuation::degree_one && m != 1)
    throw ValidationError("degree_one continuation requires m = 1");
  for (const auto& [p, f] : locals) {
    if (!is_prime(p)) throw ValidationError("local factor at non-prime " + std::to_string(p));
    if (f.sv && f.sv->m() != m) throw ValidationError("Satake vector length differs from m at p = " + std::to_string(p));
  }
}

LFunctionModel zeta_model() {
  LFunctionModel z;
  z.m = 1;
  z.q = 1;
  z.kappas = {0.0};
  z.entire = false;
  z.continuation = Continuation::degree_one;
  z.label = "zeta";
  z.default_local = [](std::uint64_t p) { return LocalFactor::unramified(p, {1.0}); };
  return z;
}

LFunctionModel dirichlet_model(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw PrincipalCharacter("dirichlet_model needs a nonprincipal character");
  if (!chi.is_primitive()) throw ValidationError("dirichlet_model needs a primitive character");
  LFunctionModel l;
  l.m = 1;
  l.q = chi.modulus();
  l.kappas = {static_cast<double>(chi.parity())};
  l.entire = true;
  l.continuation = Continuation::degree_one;
  l.label = chi.label();
  l.character = chi;
  l.default_local = [chi](std::uint64_t p) {
    if (chi.modulus() % p == 0) return LocalFactor::ramified_with(p, {});
    return LocalFactor::unramified(p, {chi(static_cast<std::int64_t>(p))});
  };
  return l;
}

LFunctionModel random_unitary_model(int m, std::uint64_t seed, std::uint64_t q) {
  if (m < 1) throw ValidationError("degree m must be >= 1");
  LFunctionModel l;
  l.m = m;
  l.q = q;
  l.kappas.assign(static_cast<std::size_t>(m), 0.0);
  l.label = "random_m" + std::to_string(m) + "_seed" + std::to_string(seed);
  l.default_local = [m, seed, q](std::uint64_t p) {
    auto rng = prime_rng(seed, p);
    if (q % p == 0) {
      std::uniform_int_distribution<int> len(0, 3);
      std::uniform_real_distribution<double> r(0.0, 1.0), u(0.0, 2.0 * std::numbers::pi);
      std::vector<Complex> c(static_cast<std::size_t>(len(rng)));
      for (auto& x : c) x = std::polar(r(rng), u(rng));
      return LocalFactor::ramified_with(p, std::move(c));
    }
    return LocalFactor::unramified(p, random_det_one_phases(m, rng));
  };
  return l;
}

LFunctionModel ramanujan_stress_model(int m, std::uint64_t seed) {
  if (m < 2) throw ValidationError("stress model needs m >= 2");
  LFunctionModel l;
  l.m = m;
  l.q = 1;
  l.kappas.assign(static_cast<std::size_t>(m), 0.0);
  l.theta = symfunc::ramanujan_exponent(m);
  l.label = "stress_m" + std::to_string(m);
  const double theta = l.theta;
  l.default_local = [m, seed, theta](std::uint64_t p) {
    auto rng = prime_rng(seed, p);
    auto a = random_det_one_phases(m, rng);
    const double s = std::pow(static_cast<double>(p), theta);
    a[0] *= s;
    a[1] /= s;
    return LocalFactor::unramified(p, std::move(a));
  };
  return l;
}

LFunctionModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  try {
    LFunctionModel l;
    if (j.contains("character")) {
      const auto chi = character_from_json(j.at("character").dump(), j.value("label", std::string{}));
      l = dirichlet_model(chi);
    }
    l.m = j.value("m", l.m);
    l.q = j.value("q", l.q);
    if (j.contains("kappas")) l.kappas = parse_complex_list(j.at("kappas"));
    l.entire = j.value("entire", l.entire);
    const std::string cont = j.value("continuation", std::string(l.continuation == Continuation::degree_one ? "degree_one" : "none"));
    if (cont == "degree_one")
      l.continuation = Continuation::degree_one;
    else if (cont == "none")
      l.continuation = Continuation::none;
    else
      throw ValidationError("continuation must be 'none' or 'degree_one'");
    l.theta = j.value("theta", l.theta);
    l.label = j.value("label", l.label);
    if (j.contains("locals")) {
      for (const auto& e : j.at("locals")) {
        const auto p = e.at("p").get<std::uint64_t>();
        if (e.contains("alphas"))
          l.locals[p] = LocalFactor::unramified(p, parse_complex_list(e.at("alphas")));
        else if (e.contains("coeffs"))
          l.locals[p] = LocalFactor::ramified_with(p, parse_complex_list(e.at("coeffs")));
        else
          throw ValidationError("local factor needs 'alphas' or 'coeffs'");
      }
    }
    if (j.contains("default_alphas")) {
      auto alphas = parse_complex_list(j.at("default_alphas"));
      const auto q = l.q;
      l.default_local = [alphas, q](std::uint64_t p) {
        if (q % p == 0) return LocalFactor::ramified_with(p, {});
        return LocalFactor::unramified(p, alphas);
      };
    }
    if (l.m == 1 && l.q == 1 && !l.character && l.continuation == Continuation::degree_one && !l.default_local)
      l.default_local = zeta_model().default_local;
    if (l.kappas.empty()) l.kappas.assign(static_cast<std::size_t>(l.m), 0.0);
    l.validate();
    return l;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("model JSON: ") + e.what());
  }
}

LFunctionModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open model file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

std::string model_to_json(const LFunctionModel& model, std::uint64_t max_prime) {
  json j;
  j["m"] = model.m;
  j["q"] = model.q;
  j["label"] = model.label;
  j["theta"] = model.theta;
  j["entire"] = model.entire;
  j["continuation"] = model.continuation == Continuation::degree_one ? "degree_one" : "none";
  j["kappas"] = json::array();
  for (const auto& k : model.kappas) j["kappas"].push_back(complex_to_json(k));
  if (model.character) j["character"] = json::parse(character_to_json(*model.character));
  j["locals"] = json::array();
  for (auto p : primes_up_to(max_prime)) {
    const auto f = model.local(p);
    json e;
    e["p"] = p;
    if (f.sv) {
      e["alphas"] = json::array();
      for (const auto& a : f.sv->alphas()) e["alphas"].push_back(complex_to_json(a));
    } else {
      e["coeffs"] = json::array();
      for (const auto& c : f.ramified_coeffs) e["coeffs"].push_back(complex_to_json(c));
    }
    j["locals"].push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace zdk
