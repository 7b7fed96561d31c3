#include "zdk/detector.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "zdk/errors.hpp"
#include "zdk/special.hpp"

namespace zdk::lfunc {

namespace {

constexpr double kPi = std::numbers::pi;

// Sparse view of the mollifier for repeated evaluation.
struct Mollifier {
  std::vector<double> logn;
  std::vector<Complex> mu;
  std::vector<double> absmu;

  explicit Mollifier(const MollifierTruncation& mt) {
    const auto n_max = static_cast<std::uint64_t>(std::floor(mt.X));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (mt.mu.values[n] == Complex{}) continue;
      logn.push_back(std::log(static_cast<double>(n)));
      mu.push_back(mt.mu.values[n]);
      absmu.push_back(std::abs(mt.mu.values[n]));
    }
  }

  Complex operator()(Complex s) const {
    Complex acc{};
    for (std::size_t i = mu.size(); i-- > 0;) acc += mu[i] * std::exp(-s * logn[i]);
    return acc;
  }

  double trivial_bound(double sigma) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) acc += absmu[i] * std::exp(-sigma * logn[i]);
    return acc;
  }
};

double zeta_real(double sigma) { return special::riemann_zeta(Complex{sigma, 0.0}).real(); }

// Crude bound for |L(sigma + it)| of a degree-one L-function with |chi| <= 1.
double l_bound(double q, double sigma, double t) {
  if (sigma > 1.05) return zeta_real(sigma);
  const double c = q * (3.0 + std::abs(t));
  return std::pow(c, 0.5 + std::max(0.0, (1.0 - sigma) / 2.0)) * (1.0 + std::log(c));
}

double stirling_gamma_abs(Complex w) {
  return std::sqrt(2.0 * kPi) * std::pow(std::abs(w), w.real() - 0.5) * std::exp(-kPi * std::abs(w.imag()) / 2.0);
}

struct LineResult {
  Complex integral;
  double error = 0.0;
  double truncation = 0.0;
};

}  // namespace

double DetectionConfig::resolved_halfheight() const { return halfheight > 0.0 ? halfheight : 10.0 * std::log(Y); }

void DetectionConfig::validate() const {
  if (!(X >= 1.0)) throw ValidationError("X must be >= 1");
  if (!(Y > 1.0)) throw ValidationError("Y must be > 1");
  if (!(delta > 0.0 && delta < 0.5)) throw ValidationError("delta must lie in (0, 1/2)");
  if (!(step > 0.0)) throw ValidationError("quadrature step must be positive");
  if (!(resolved_A() > 0.0)) throw ValidationError("A must be positive");
}

DetectorReport zero_detector(const LFunctionModel& model, Complex rho, const DetectionConfig& cfg) {
  cfg.validate();
  if (model.m != 1 || !model.entire || model.continuation != Continuation::degree_one)
    throw ValidationError("zero_detector needs an entire degree-one model");
  const double beta = rho.real();
  if (beta < 0.5) throw ValidationError("zero_detector needs Re(rho) >= 1/2");

  const Mollifier moll(make_mollifier(model, cfg.X));
  const double logY = std::log(cfg.Y);
  const double H = cfg.resolved_halfheight();
  const double q = static_cast<double>(model.q);

  DetectorReport rep;
  const Complex L_rho = evaluate(model, rho);
  rep.abs_L_at_rho = std::abs(L_rho);
  rep.abs_LM_at_rho = std::abs(L_rho * moll(rho));
  rep.nonzero_input = rep.abs_L_at_rho > cfg.zero_tolerance;

  // right = true: integrand (1 - LM) Gamma Y^w; otherwise LM Gamma Y^w.
  auto line = [&](double c, bool right) {
    auto integrand = [&](double v) {
      const Complex w{c, v};
      const Complex s = rho + w;
      const Complex lm = evaluate(model, s) * moll(s);
      const Complex g = std::exp(special::log_gamma(w) + w * logY);
      return (right ? 1.0 - lm : lm) * g;
    };
    auto envelope = [&](double v) {
      const Complex w{c, v};
      const Complex s = rho + w;
      const double lm = l_bound(q, s.real(), s.imag()) * moll.trivial_bound(s.real());
      return 10.0 * (right ? 1.0 + lm : lm) * stirling_gamma_abs(w) * std::exp(c * logY);
    };
    int n = static_cast<int>(std::ceil(2.0 * H / cfg.step));
    if (n % 2 == 1) ++n;
    const double h = 2.0 * H / n;
    Complex sum_all{}, sum_even{};
    Complex f_first, f_last;
    for (int k = 0; k <= n; ++k) {
      const Complex f = integrand(-H + k * h);
      if (k == 0) f_first = f;
      if (k == n) f_last = f;
      sum_all += f;
      if (k % 2 == 0) sum_even += f;
    }
    const Complex t_h = h * (sum_all - 0.5 * (f_first + f_last));
    const Complex t_2h = 2.0 * h * (sum_even - 0.5 * (f_first + f_last));
    for (const double v : {-H, H}) {
      const double env = envelope(v);
      const double val = std::abs(v < 0 ? f_first : f_last);
      if (val > env)
        throw QuadratureDivergence("integrand " + std::to_string(val) + " exceeds Stirling envelope " +
                                   std::to_string(env) + " at |Im w| = " + std::to_string(H));
    }
    LineResult r;
    r.integral = t_h / (2.0 * kPi);
    r.error = std::abs(t_h - t_2h) / (2.0 * kPi);
    // Tail beyond H: envelope decays at least like e^{-pi v / 2} up to a slowly varying factor.
    r.truncation = 2.0 * std::max(envelope(-H), envelope(H)) / (kPi / 2.0) * (1.0 + H) / (2.0 * kPi);
    return r;
  };

  const double c_right = 1.0 - beta + cfg.resolved_A();
  // The left line would pass through the pole of Gamma when beta = 1/2; the residue
  // there is LM(rho), which vanishes at a zero, so the line can sit left of the pole.
  const double c_left = std::min(0.5 - beta, -1.0 / logY);
  const LineResult r1 = line(c_right, true);
  const LineResult r2 = line(c_left, false);

  rep.integral_right = r1.integral;
  rep.integral_left = r2.integral;
  rep.quadrature_error = r1.error + r2.error;
  rep.truncation_bound = r1.truncation + r2.truncation;
  if (rep.truncation_bound > 1e-6)
    throw QuadratureDivergence("truncation at |Im w| = " + std::to_string(H) +
                               " leaves an envelope tail of " + std::to_string(rep.truncation_bound));
  const Complex total = r1.integral + r2.integral;
  rep.identity_residual = std::abs(std::exp(-1.0 / cfg.Y) - total);
  rep.main_term_gap = std::abs(1.0 - total);
  rep.tolerance = std::max(10.0 / cfg.Y, 10.0 * rep.quadrature_error);
  rep.passed = !rep.nonzero_input && rep.identity_residual <= rep.tolerance;
  return rep;
}

}  // namespace zdk::lfunc
