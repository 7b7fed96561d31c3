#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zdk {

using Complex = std::complex<double>;

/// A Dirichlet character mod q stored as its full value table chi(0..q-1).
class DirichletCharacter {
 public:
  /// Validates that the table is completely multiplicative, periodic mod q, vanishes
  /// exactly on residues sharing a factor with q and takes root-of-unity values.
  DirichletCharacter(std::uint64_t q, std::vector<Complex> values, std::string label = {});

  /// Every character mod q, principal first. Ordering is deterministic
  /// (lexicographic in the exponents on the CRT generators).
  static std::vector<DirichletCharacter> all(std::uint64_t q);
  /// The primitive characters mod q, in the order of all().
  static std::vector<DirichletCharacter> primitive(std::uint64_t q);
  /// The nontrivial character mod 4.
  static DirichletCharacter mod4();

  std::uint64_t modulus() const noexcept { return q_; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Complex operator()(std::int64_t n) const noexcept;

  bool is_principal() const noexcept;
  bool is_real() const noexcept;
  /// 0 for even characters, 1 for odd ones.
  int parity() const noexcept { return parity_; }
  std::uint64_t conductor() const;
  bool is_primitive() const { return conductor() == q_; }
  DirichletCharacter conj() const;

  /// tau(chi) = sum_a chi(a) e(a/q).
  Complex gauss_sum() const;
  /// tau(chi) / (i^parity sqrt(q)); the root number of a primitive character.
  Complex root_number_gauss() const;

 private:
  std::uint64_t q_;
  std::vector<Complex> values_;
  std::string label_;
  int parity_ = 0;
};

/// Parses a JSON array of complex values (numbers or [re, im] pairs) indexed by residue.
DirichletCharacter character_from_json(const std::string& text, std::string label = {});
std::string character_to_json(const DirichletCharacter& chi);

}  // namespace zdk
