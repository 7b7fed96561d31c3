#include "zdk/zerostats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>

#include "zdk/arith.hpp"
#include "zdk/beurling_selberg.hpp"
#include "zdk/errors.hpp"
#include "zdk/zeros.hpp"

namespace zdk::zerostats {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// {alpha gamma} for every zero with |gamma| <= T.
std::vector<double> fractional_points(const ZeroDataset& zd, double alpha, double T) {
  std::vector<double> pts;
  for (const Complex& rho : zd.zeros_up_to(T)) pts.push_back(frac(alpha * rho.imag()));
  return pts;
}

}  // namespace

void ZeroDataset::validate() const {
  if (!betas.empty() && betas.size() != ordinates.size())
    throw ValidationError("zero dataset: betas must be empty or match the ordinates");
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    if (!std::isfinite(ordinates[i])) throw ValidationError("zero dataset: non-finite ordinate");
    if (i > 0 && !(ordinates[i] > ordinates[i - 1])) throw UnsortedInput("zero dataset: ordinates must increase");
    if (std::abs(ordinates[i]) > T_max) throw ValidationError("zero dataset: ordinate beyond T_max");
  }
  if (symmetric && !ordinates.empty() && ordinates.front() < 0.0)
    throw ValidationError("zero dataset: symmetric datasets store nonnegative ordinates only");
  for (const double b : betas)
    if (!(b >= 0.0 && b <= 1.0)) throw ValidationError("zero dataset: beta outside [0, 1]");
}

std::vector<Complex> ZeroDataset::zeros_up_to(double T) const {
  std::vector<Complex> out;
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const double g = ordinates[i];
    if (std::abs(g) > T) continue;
    out.emplace_back(beta(i), g);
    // Self-dual: rho and 1 - conj(rho) mirror to beta - i gamma.
    if (symmetric && g != 0.0) out.emplace_back(beta(i), -g);
  }
  return out;
}

std::size_t ZeroDataset::count_up_to(double T) const {
  std::size_t n = 0;
  for (const double g : ordinates)
    if (std::abs(g) <= T) n += (symmetric && g != 0.0) ? 2 : 1;
  return n;
}

ZeroDataset ingest_zeros(std::istream& in, const std::string& label, double T_max, bool symmetric) {
  if (!(T_max > 0.0)) throw ValidationError("T_max must be positive");
  ZeroDataset zd;
  zd.label = label;
  zd.symmetric = symmetric;
  zd.T_max = T_max;
  zd.source = Source::ingested;
  std::string raw;
  std::size_t line = 0;
  double prev = -INFINITY;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    double g = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), g);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(g))
      throw ParseError(line, "expected one decimal ordinate, got '" + s + "'");
    if (!(g > prev)) throw UnsortedInput("ordinate at line " + std::to_string(line) + " does not increase");
    prev = g;
    if (symmetric && g < 0.0) throw ParseError(line, "negative ordinate in a symmetric dataset");
    if (std::abs(g) > T_max) continue;
    zd.ordinates.push_back(g);
  }
  return zd;
}

ZeroDataset ingest_zeros(const std::string& path, const std::string& label, double T_max, bool symmetric) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open zero file " + path);
  return ingest_zeros(in, label, T_max, symmetric);
}

ZeroDataset computed_zeros(const LFunctionModel& model, double T) {
  ZeroDataset zd;
  zd.label = model.label;
  zd.symmetric = lfunc::zeros_symmetric(model);
  zd.T_max = T;
  zd.source = Source::computed;
  zd.ordinates = lfunc::critical_line_zeros(model, T);
  return zd;
}

void write_zeros(const ZeroDataset& zd, std::ostream& out) {
  out << std::setprecision(17);
  for (const double g : zd.ordinates) out << g << '\n';
}

double frac(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

double star_discrepancy(std::vector<double> points) {
  if (points.empty()) throw ValidationError("star discrepancy of an empty point set");
  for (const double x : points)
    if (!(x >= 0.0 && x < 1.0)) throw ValidationError("star discrepancy needs points in [0, 1)");
  std::sort(points.begin(), points.end());
  const double N = static_cast<double>(points.size());
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    d = std::max({d, k / N - points[i], points[i] - (k - 1.0) / N});
  }
  return d;
}

double fujii_statistic(const ZeroDataset& zd, double alpha, double T) {
  if (T > zd.T_max) throw RangeError("T = " + std::to_string(T) + " exceeds dataset T_max = " + std::to_string(zd.T_max));
  if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
  return star_discrepancy(fractional_points(zd, alpha, T));
}

LandauGonekResult landau_gonek_sum(const ZeroDataset& zd, double x, double T, const std::function<Complex(long)>& a) {
  if (T > zd.T_max) throw RangeError("T = " + std::to_string(T) + " exceeds dataset T_max = " + std::to_string(zd.T_max));
  if (!(x > 1.0)) throw ValidationError("x must exceed 1");
  LandauGonekResult r;
  const double lx = std::log(x);
  for (const Complex& rho : zd.zeros_up_to(T)) r.sum += std::exp((rho - 0.5) * lx);
  r.nearest = std::lrint(x);  // default rounding mode: ties to even
  const double u = T * std::log(x / static_cast<double>(r.nearest));
  const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
  const double lam = r.nearest >= 2 ? von_mangoldt(static_cast<std::uint64_t>(r.nearest)) : 0.0;
  const Complex coeff = (lam != 0.0 && a) ? a(r.nearest) : Complex{1.0, 0.0};
  r.main_term = -(T / kPi) * sinc * lam * coeff / std::sqrt(x);
  r.gap = std::abs(r.sum - r.main_term);
  return r;
}

int choose_M(double B, double T, double alpha) {
  if (!(T > std::exp(1.0))) throw ValidationError("choose_M needs T > e");
  if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
  const double M = B * std::log(T) / (6.0 * kPi * std::abs(alpha) * std::log(std::log(T)));
  return std::max(1, static_cast<int>(std::floor(M)));
}

FamilyBound family_equidistribution(const std::vector<ZeroDataset>& datasets, double alpha, double T, int M) {
  if (datasets.empty()) throw ValidationError("family needs at least one dataset");
  if (M < 1) throw ValidationError("M must be >= 1");
  if (alpha == 0.0) throw ValidationError("alpha must be nonzero");
  const std::size_t D = datasets.size();

  // E_d(n) = N_d^{-1} sum e(n alpha gamma); points {alpha gamma} with their weights.
  std::vector<std::vector<Complex>> E(D, std::vector<Complex>(static_cast<std::size_t>(M) + 1));
  std::vector<std::pair<double, double>> weighted;
  for (std::size_t d = 0; d < D; ++d) {
    const ZeroDataset& zd = datasets[d];
    if (T > zd.T_max) throw IncompleteDataset("dataset " + zd.label + " only reaches T = " + std::to_string(zd.T_max));
    const auto zs = zd.zeros_up_to(T);
    if (zs.empty()) throw IncompleteDataset("dataset " + zd.label + " has no zeros up to T");
    const double w = 1.0 / static_cast<double>(zs.size());
    for (const Complex& rho : zs) {
      const double g = rho.imag();
      for (int n = 1; n <= M; ++n) E[d][static_cast<std::size_t>(n)] += w * std::polar(1.0, 2.0 * kPi * n * alpha * g);
      weighted.emplace_back(frac(alpha * g), w / static_cast<double>(D));
    }
  }
  std::vector<Complex> avgE(static_cast<std::size_t>(M) + 1);
  for (std::size_t d = 0; d < D; ++d)
    for (int n = 1; n <= M; ++n) avgE[static_cast<std::size_t>(n)] += E[d][static_cast<std::size_t>(n)] / static_cast<double>(D);

  // Interval endpoints t of the anchored intervals [0, t].
  std::vector<double> ts;
  for (int k = 1; k <= 1000; ++k) ts.push_back(k / 1000.0);
  for (const auto& [x, w] : weighted) ts.push_back(x);

  auto bound_for = [&](const std::vector<Complex>& En) {
    double sup = 0.0;
    for (const double t : ts) {
      const auto [plus, minus] = beurling_selberg(Interval(0.0, t), M);
      for (const TrigPolynomial* p : {&plus, &minus}) {
        Complex acc{};
        for (int n = 1; n <= M; ++n) acc += p->a(n) * En[static_cast<std::size_t>(n)];
        sup = std::max(sup, std::abs(acc));
      }
    }
    return 2.0 * sup + 1.0 / M;
  };

  FamilyBound fb;
  fb.bound = bound_for(avgE);
  for (std::size_t d = 0; d < D; ++d) fb.worst_single = std::max(fb.worst_single, bound_for(E[d]));

  // Star discrepancy of the averaged (weighted) empirical measure.
  std::sort(weighted.begin(), weighted.end());
  double F = 0.0;
  for (std::size_t i = 0; i < weighted.size();) {
    const double x = weighted[i].first;
    fb.direct = std::max(fb.direct, x - F);  // left limit at x
    while (i < weighted.size() && weighted[i].first == x) F += weighted[i++].second;
    fb.direct = std::max(fb.direct, F - x);
  }
  return fb;
}

}  // namespace zdk::zerostats
