#include "zdk/sievesim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"
#include "zdk/parallel.hpp"

namespace zdk::sievesim {

namespace {

using Rng = std::mt19937_64;

// Standard errors below this come from rounding in a constant estimator.
constexpr double kDeterministic = 1e-12;

std::vector<Complex> haar_eigenphases(int m, Rng& rng) {
  if (m == 1) return {Complex{1.0, 0.0}};
  std::normal_distribution<double> gauss(0.0, std::numbers::sqrt2 / 2.0);
  Eigen::MatrixXcd z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) z(i, j) = Complex{gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q, false);
  std::vector<double> theta(static_cast<std::size_t>(m));
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    theta[static_cast<std::size_t>(j)] = std::arg(es.eigenvalues()(j));
    sum += theta[static_cast<std::size_t>(j)];
  }
  // Removing the mean phase divides by an m-th root of det, but which root depends on the
  // eigenvalues themselves; an independent central rotation removes that bias.
  const auto k = std::uniform_int_distribution<int>(0, m - 1)(rng);
  const double shift = 2.0 * std::numbers::pi * k / m - sum / m;
  std::vector<Complex> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = std::polar(1.0, theta[static_cast<std::size_t>(j)] + shift);
  return out;
}

// Per-chunk draw of `per_sample` Satake vectors for every sample in the chunk.
class Sampler {
 public:
  Sampler(const EnsembleSpec& spec, std::size_t chunk) : spec_(spec), rng_(substream_seed(spec.seed, chunk)) {
    if (spec.distribution == Distribution::adversarial_aligned) {
      Rng fixed(substream_seed(spec.seed, std::numeric_limits<std::uint64_t>::max()));
      aligned_ = haar_eigenphases(spec.m, fixed);
    }
  }

  std::vector<Complex> next() {
    switch (spec_.distribution) {
      case Distribution::haar_su_m: return haar_eigenphases(spec_.m, rng_);
      case Distribution::all_ones: return std::vector<Complex>(static_cast<std::size_t>(spec_.m), Complex{1.0, 0.0});
      case Distribution::adversarial_aligned: return aligned_;
    }
    return {};
  }

 private:
  const EnsembleSpec& spec_;
  Rng rng_;
  std::vector<Complex> aligned_;
};

struct Moments {
  Complex sum;
  double sum_abs2 = 0.0;
  std::size_t n = 0;

  void add(Complex x) {
    sum += x;
    sum_abs2 += std::norm(x);
    ++n;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_abs2 += o.sum_abs2;
    n += o.n;
  }
  Complex mean() const { return sum / static_cast<double>(n); }
  double stderr_of_mean() const {
    if (n < 2) return 0.0;
    const double N = static_cast<double>(n);
    const double var = std::max(0.0, (sum_abs2 - std::norm(sum) / N) / (N - 1.0));
    return std::sqrt(var / N);
  }
};

// P(|N(0,1)| > 3).
constexpr double kThreeSigmaRate = 0.0026997960632601866;

// Smallest k with P(Binomial(n, p) <= k) >= level.
std::size_t binomial_quantile(std::size_t n, double p, double level) {
  double pmf = std::pow(1.0 - p, static_cast<double>(n));
  double cdf = pmf;
  std::size_t k = 0;
  while (cdf < level && k < n) {
    pmf *= static_cast<double>(n - k) / static_cast<double>(k + 1) * p / (1.0 - p);
    cdf += pmf;
    ++k;
  }
  return k;
}

std::size_t n_chunks(std::size_t count) { return (count + kChunk - 1) / kChunk; }

std::size_t chunk_size(std::size_t count, std::size_t c) { return std::min(kChunk, count - c * kChunk); }

// Runs body(chunk, sampler, out_slot) for each chunk and merges slots in chunk order.
template <class Slot, class Body>
std::vector<Slot> run_chunks(const EnsembleSpec& spec, const Body& body) {
  const std::size_t chunks = n_chunks(spec.count);
  std::vector<Slot> slots(chunks);
  parallel_for(chunks, spec.workers, [&](std::size_t c) {
    Sampler sampler(spec, c);
    body(chunk_size(spec.count, c), sampler, slots[c]);
  });
  return slots;
}

}  // namespace

std::string to_string(Distribution d) {
  switch (d) {
    case Distribution::haar_su_m: return "haar_su_m";
    case Distribution::all_ones: return "all_ones";
    case Distribution::adversarial_aligned: return "adversarial_aligned";
  }
  return "?";
}

Distribution distribution_from_string(const std::string& s) {
  if (s == "haar_su_m" || s == "haar") return Distribution::haar_su_m;
  if (s == "all_ones") return Distribution::all_ones;
  if (s == "adversarial_aligned") return Distribution::adversarial_aligned;
  throw ValidationError("unknown distribution '" + s + "'");
}

void EnsembleSpec::validate() const {
  if (m < 1 || m > 8) throw ValidationError("ensemble degree m must lie in 1..8");
  if (count < 1) throw ValidationError("ensemble count must be >= 1");
}

std::vector<SatakeVector> sample_haar_satake(const EnsembleSpec& spec) {
  spec.validate();
  auto slots = run_chunks<std::vector<SatakeVector>>(spec, [](std::size_t n, Sampler& s, std::vector<SatakeVector>& out) {
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(s.next());
  });
  std::vector<SatakeVector> all;
  all.reserve(spec.count);
  for (auto& v : slots) std::move(v.begin(), v.end(), std::back_inserter(all));
  return all;
}

Estimate schur_orthogonality_mc(const EnsembleSpec& spec, const Partition& lambda, const Partition& mu) {
  spec.validate();
  if (lambda.size() > 8 || mu.size() > 8) throw SizeLimit("schur_orthogonality_mc supports |lambda|, |mu| <= 8");
  if (lambda.length() > spec.m || mu.length() > spec.m) throw ValidationError("partition longer than m");
  auto slots = run_chunks<Moments>(spec, [&](std::size_t n, Sampler& s, Moments& mom) {
    for (std::size_t i = 0; i < n; ++i) {
      const SatakeVector sv(s.next());
      mom.add(symfunc::schur_bialternant(sv, lambda) * std::conj(symfunc::schur_bialternant(sv, mu)));
    }
  });
  Moments total;
  for (const auto& m : slots) total.merge(m);
  return {total.mean(), total.stderr_of_mean(), total.n, spec.seed};
}

GramReport schur_gram(const EnsembleSpec& spec, int max_size) {
  spec.validate();
  if (max_size > 8) throw SizeLimit("schur_gram supports |lambda| <= 8");
  GramReport rep;
  rep.partitions = Partition::all_up_to(max_size, spec.m);
  const std::size_t P = rep.partitions.size();
  using Slot = std::vector<Moments>;
  auto slots = run_chunks<Slot>(spec, [&](std::size_t n, Sampler& s, Slot& mom) {
    mom.assign(P * P, Moments{});
    std::vector<Complex> vals(P);
    for (std::size_t i = 0; i < n; ++i) {
      const SatakeVector sv(s.next());
      for (std::size_t a = 0; a < P; ++a) vals[a] = symfunc::schur_bialternant(sv, rep.partitions[a]);
      for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = 0; b < P; ++b) mom[a * P + b].add(vals[a] * std::conj(vals[b]));
    }
  });
  rep.gram.assign(P, std::vector<Estimate>(P));
  rep.identity_within_3sigma = true;
  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t b = 0; b < P; ++b) {
      Moments total;
      for (const auto& sl : slots) total.merge(sl[a * P + b]);
      Estimate& e = rep.gram[a][b];
      e = {total.mean(), total.stderr_of_mean(), total.n, spec.seed};
      const bool same = rep.partitions[a].strip_full_columns(spec.m) == rep.partitions[b].strip_full_columns(spec.m);
      const double dev = std::abs(e.estimate - (same ? 1.0 : 0.0));
      if (e.stderr_ > kDeterministic) {
        rep.worst_z = std::max(rep.worst_z, dev / e.stderr_);
        if (dev > 3.0 * e.stderr_) rep.identity_within_3sigma = false;
      } else if (dev > 1e-9) {
        rep.identity_within_3sigma = false;
      }
    }
  }
  return rep;
}

std::uint64_t LinearForm::weight(const std::vector<std::uint64_t>& n) {
  // n = (n_{m-1}, ..., n_1): n_j carries exponent j.
  std::uint64_t w = 1;
  const std::size_t len = n.size();
  for (std::size_t i = 0; i < len; ++i) {
    const auto j = static_cast<int>(len - i);
    const std::uint64_t pw = ipow(n[i], j);
    if (pw != 0 && w > std::numeric_limits<std::uint64_t>::max() / pw) return std::numeric_limits<std::uint64_t>::max();
    w *= pw;
  }
  return w;
}

void LinearForm::validate() const {
  if (m < 2) throw ValidationError("linear forms need m >= 2");
  if (terms.empty()) throw EmptySupport("linear form has empty support");
  std::vector<std::vector<std::uint64_t>> seen;
  for (const auto& [n, beta] : terms) {
    if (static_cast<int>(n.size()) != m - 1) throw ValidationError("tuple length must be m - 1");
    for (const auto v : n)
      if (v == 0) throw ValidationError("tuple entries must be positive");
    if (static_cast<double>(weight(n)) > x) throw ValidationError("tuple weight exceeds the cutoff x");
    seen.push_back(n);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ValidationError("repeated tuple in linear form");
}

double LinearForm::beta_norm2() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::norm(t.second);
  return s;
}

std::vector<std::vector<std::uint64_t>> tuples_up_to(int m, double x) {
  if (m < 2) throw ValidationError("tuples need m >= 2");
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur(static_cast<std::size_t>(m - 1), 1);
  // Depth-first over positions, pruning on the partial weight.
  auto rec = [&](auto&& self, std::size_t pos, double w) -> void {
    if (pos == cur.size()) {
      out.push_back(cur);
      return;
    }
    const auto j = static_cast<double>(cur.size() - pos);
    for (std::uint64_t v = 1;; ++v) {
      const double nw = w * std::pow(static_cast<double>(v), j);
      if (nw > x + 1e-9) break;
      cur[pos] = v;
      self(self, pos + 1, nw);
    }
  };
  if (x >= 1.0) rec(rec, 0, 1.0);
  std::sort(out.begin(), out.end());
  return out;
}

RatioReport large_sieve_ratio(const EnsembleSpec& spec, const LinearForm& form) {
  spec.validate();
  form.validate();
  if (form.m != spec.m) throw ValidationError("linear form degree differs from the ensemble degree");

  // Local pieces: for each term, (prime index, exponent tuple at that prime).
  std::map<std::uint64_t, std::size_t> prime_index;
  std::vector<std::uint64_t> primes;
  struct LocalRef {
    std::size_t prime;
    std::size_t key;  // index into local_keys
  };
  std::vector<std::pair<std::size_t, ExponentTuple>> local_keys;
  std::map<std::pair<std::size_t, ExponentTuple>, std::size_t> key_index;
  std::vector<std::vector<LocalRef>> term_refs;
  for (const auto& [n, beta] : form.terms) {
    std::map<std::uint64_t, std::vector<int>> exps;
    for (std::size_t i = 0; i < n.size(); ++i)
      for (const auto& pp : factorize(n[i])) {
        auto& e = exps[pp.p];
        e.resize(n.size(), 0);
        e[i] = pp.k;
      }
    std::vector<LocalRef> refs;
    for (const auto& [p, e] : exps) {
      if (!prime_index.contains(p)) {
        prime_index[p] = primes.size();
        primes.push_back(p);
      }
      const std::size_t pi = prime_index[p];
      auto key = std::make_pair(pi, ExponentTuple(e));
      auto it = key_index.find(key);
      if (it == key_index.end()) {
        it = key_index.emplace(key, local_keys.size()).first;
        local_keys.push_back(key);
      }
      refs.push_back({pi, it->second});
    }
    term_refs.push_back(std::move(refs));
  }

  auto slots = run_chunks<Moments>(spec, [&](std::size_t n, Sampler& s, Moments& mom) {
    std::vector<Complex> local(local_keys.size());
    std::vector<SatakeVector> sv;
    for (std::size_t i = 0; i < n; ++i) {
      sv.clear();
      for (std::size_t p = 0; p < primes.size(); ++p) sv.emplace_back(s.next(), primes[p]);
      for (std::size_t k = 0; k < local_keys.size(); ++k)
        local[k] = symfunc::fourier_coefficient(sv[local_keys[k].first], local_keys[k].second);
      Complex acc{};
      for (std::size_t t = 0; t < form.terms.size(); ++t) {
        Complex B{1.0, 0.0};
        for (const auto& r : term_refs[t]) B *= local[r.key];
        acc += form.terms[t].second * B;
      }
      mom.add(std::norm(acc));
    }
  });
  Moments total;
  for (const auto& m : slots) total.merge(m);
  const double norm2 = form.beta_norm2();
  if (norm2 == 0.0) throw EmptySupport("linear form has only zero coefficients");
  RatioReport rep;
  rep.ratio = total.mean().real() / norm2;
  rep.stderr_ = total.stderr_of_mean() / norm2;
  rep.samples = total.n;
  rep.support = form.terms.size();
  rep.seed = spec.seed;
  return rep;
}

std::uint64_t mpower_free_part(std::uint64_t n, int m) {
  if (n == 0) throw ValidationError("mpower_free_part needs n >= 1");
  std::uint64_t out = 1;
  for (const auto& pp : factorize(n)) out *= ipow(pp.p, pp.k % m);
  return out;
}

MuCorrelationReport mu_power_correlation(const EnsembleSpec& spec, std::uint64_t x) {
  spec.validate();
  if (x < 1 || x > 10000) throw ValidationError("mu_power_correlation needs 1 <= x <= 1e4");
  const int m = spec.m;
  const auto primes = primes_up_to(static_cast<std::uint32_t>(x));
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(x));
  std::vector<std::size_t> prime_pos(x + 1, 0);
  for (std::size_t i = 0; i < primes.size(); ++i) prime_pos[primes[i]] = i;

  // mu vanishes once an exponent exceeds m.
  std::vector<bool> supported(x + 1, true);
  for (std::uint64_t n = 2; n <= x; ++n)
    for (const auto& pp : factorize(n))
      if (pp.k > m) supported[n] = false;

  MuCorrelationReport rep;
  const std::uint64_t full = std::min<std::uint64_t>(x, 100);
  for (std::uint64_t a = 1; a <= x; ++a) {
    for (std::uint64_t b = a; b <= x; ++b) {
      const bool shared = mpower_free_part(a, m) == mpower_free_part(b, m) && supported[a] && supported[b];
      if (b <= full || shared) rep.pairs.push_back({a, b, {}, 0.0, shared});
    }
  }

  const std::size_t P = rep.pairs.size();
  using Slot = std::vector<Moments>;
  auto slots = run_chunks<Slot>(spec, [&](std::size_t n, Sampler& s, Slot& mom) {
    mom.assign(P, Moments{});
    std::vector<std::vector<Complex>> local(primes.size());
    std::vector<Complex> mu(x + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < primes.size(); ++p) {
        const auto alphas = s.next();
        auto e = symfunc::elementary_symmetric(alphas);
        for (int k = 1; k <= m; k += 2) e[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k)];
        local[p] = std::move(e);
      }
      mu[1] = 1.0;
      for (std::uint64_t v = 2; v <= x; ++v) {
        const std::uint64_t p = spf[v];
        std::uint64_t rest = v;
        int k = 0;
        while (rest % p == 0) {
          rest /= p;
          ++k;
        }
        mu[v] = k > m ? Complex{} : local[prime_pos[p]][static_cast<std::size_t>(k)] * mu[rest];
      }
      for (std::size_t j = 0; j < P; ++j) mom[j].add(mu[rep.pairs[j].a] * std::conj(mu[rep.pairs[j].b]));
    }
  });

  rep.min_shared_z = std::numeric_limits<double>::infinity();
  rep.structure_ok = true;
  for (std::size_t j = 0; j < P; ++j) {
    Moments total;
    for (const auto& sl : slots) total.merge(sl[j]);
    PairEstimate& pe = rep.pairs[j];
    pe.estimate = total.mean();
    pe.stderr_ = total.stderr_of_mean();
    const double absv = std::abs(pe.estimate);
    // Constant products (up to rounding) are judged exactly rather than by z-score.
    const double z = pe.stderr_ > kDeterministic ? absv / pe.stderr_
                                                 : (absv > 1e-9 ? std::numeric_limits<double>::infinity() : 0.0);
    if (pe.shared) {
      ++rep.shared_pairs;
      rep.min_shared_z = std::min(rep.min_shared_z, z);
      if (!(z > 3.0)) rep.structure_ok = false;
    } else {
      ++rep.generic_pairs;
      if (pe.stderr_ > kDeterministic) rep.max_generic_z = std::max(rep.max_generic_z, z);
      if (z > 3.0) ++rep.generic_exceedances;
    }
  }
  rep.allowed_exceedances = binomial_quantile(rep.generic_pairs, kThreeSigmaRate, 0.999);
  if (rep.generic_exceedances > rep.allowed_exceedances) rep.structure_ok = false;
  return rep;
}

std::uint64_t index_V(int m, std::uint64_t q) {
  if (m < 1) throw ValidationError("index_V needs m >= 1");
  if (q < 1) throw ValidationError("index_V needs q >= 1");
  // prod_{p^k || q} p^{(k-1)(m-1)} (p^m - 1)/(p - 1), all integer arithmetic.
  const auto mul = [](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw RangeError("index_V overflows 64 bits");
    return a * b;
  };
  std::uint64_t v = 1;
  for (const auto& pp : factorize(q)) {
    std::uint64_t geo = 0;  // 1 + p + ... + p^{m-1}
    std::uint64_t pw = 1;
    for (int i = 0; i < m; ++i) {
      geo += pw;
      if (i + 1 < m) pw = mul(pw, pp.p);
    }
    v = mul(v, geo);
    for (int i = 0; i < (pp.k - 1) * (m - 1); ++i) v = mul(v, pp.p);
  }
  return v;
}

FamilyFactor family_factor_F(int m, std::uint64_t q, double theta) {
  if (m < 1) throw ValidationError("family_factor_F needs m >= 1");
  if (q < 1) throw ValidationError("family_factor_F needs q >= 1");
  if (!(theta >= 0.0 && theta < 0.5)) throw ValidationError("theta must lie in [0, 1/2)");
  FamilyFactor f;
  f.F = 1.0;
  double logsum = 0.0;
  int w = 0;
  for (const auto& pp : factorize(q)) {
    const double term = 1.0 + std::pow(static_cast<double>(pp.p), -(0.5 - theta));
    f.F *= std::pow(term, m);
    logsum += m * std::log(term);
    ++w;
  }
  f.F_logsum = std::exp(logsum);
  f.two_omega = std::ldexp(1.0, w);
  f.two_m_omega = std::ldexp(1.0, m * w);
  f.ratio = f.F / f.two_omega;
  f.within_two_m_omega = f.F <= f.two_m_omega * (1.0 + 1e-12);
  return f;
}

}  // namespace zdk::sievesim
