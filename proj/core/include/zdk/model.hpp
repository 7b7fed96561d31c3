#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdk/characters.hpp"
#include "zdk/symfunc.hpp"

namespace zdk {

/// Local data at one prime: Satake parameters when unramified, otherwise an
/// explicit list lambda(p), lambda(p^2), ... (zero beyond its end).
struct LocalFactor {
  std::uint64_t prime = 0;
  std::optional<symfunc::SatakeVector> sv;
  std::vector<Complex> ramified_coeffs;

  bool ramified() const noexcept { return !sv.has_value(); }

  static LocalFactor unramified(std::uint64_t p, std::vector<Complex> alphas);
  static LocalFactor ramified_with(std::uint64_t p, std::vector<Complex> coeffs);
};

enum class Continuation { none, degree_one };

struct LFunctionModel {
  int m = 1;
  std::uint64_t q = 1;
  std::map<std::uint64_t, LocalFactor> locals;
  std::vector<Complex> kappas;
  bool entire = false;
  Continuation continuation = Continuation::none;
  /// Exponent with |alpha_j(p)| <= p^theta for every unramified prime.
  double theta = 0.0;
  std::string label;
  /// Set for degree-one models built from a Dirichlet character.
  std::optional<DirichletCharacter> character;
  /// Generates local factors for primes missing from `locals`.
  std::function<LocalFactor(std::uint64_t)> default_local;

  /// Throws MissingLocalFactor when neither `locals` nor `default_local` covers p.
  LocalFactor local(std::uint64_t p) const;
  bool is_zeta() const noexcept { return m == 1 && q == 1 && !character && continuation == Continuation::degree_one; }
  /// Checks field invariants; throws ValidationError.
  void validate() const;
};

/// zeta(s): m = 1, q = 1, alpha_p = 1, kappa = 0.
LFunctionModel zeta_model();

/// L(s, chi) for a primitive character; q is the modulus, kappa the parity.
LFunctionModel dirichlet_model(const DirichletCharacter& chi);

/// Synthetic unitary model: det-one Satake vectors with uniformly random phases at
/// primes not dividing q, random ramified coefficient lists (length <= 3, modulus <= 1)
/// at primes dividing q. Deterministic in (m, q, seed).
LFunctionModel random_unitary_model(int m, std::uint64_t seed, std::uint64_t q = 1);

/// Stress model: alpha = (p^theta e^{i phi}, p^-theta e^{i phi'}, unit phases...)
/// normalized to det one, with theta = ramanujan_exponent(m).
LFunctionModel ramanujan_stress_model(int m, std::uint64_t seed);

/// Model JSON: {m, q, kappas, locals: [{p, alphas | coeffs}], entire, continuation,
/// theta?, label?, character?, default_alphas?}. Complex values are numbers or [re, im].
LFunctionModel model_from_json(const std::string& text);
LFunctionModel load_model(const std::string& path);
/// Serializes the model with explicit locals for every prime <= max_prime.
std::string model_to_json(const LFunctionModel& model, std::uint64_t max_prime);

}  // namespace zdk
