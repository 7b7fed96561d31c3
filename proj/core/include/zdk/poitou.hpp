#pragma once

#include <complex>

namespace zdk::zerostats {

using Complex = std::complex<double>;

/// psi(t) = ((1 - |t|) cos(pi t) + sin(pi |t|) / pi) / cosh(t) on [-1, 1], zero outside.
double poitou_psi(double t);

/// Psi(z) = int psi(t) e^{-t z} dt by composite Gauss-Legendre, panels scaled with |Im z|.
Complex poitou_transform(Complex z);

struct PoitouReport {
  double psi_at_zero = 0.0;
  double even_defect = 0.0;        // max |psi(t) - psi(-t)|
  double min_psi = 0.0;            // min psi on the grid
  double min_re_transform = 0.0;   // min Re Psi on the strip grid
  double decay_constant = 0.0;     // max |Psi(z)| (1 + |z|)^3 e^{-|Re z|} on the strip grid
  double envelope_k4 = 0.0;        // max |Psi(iy)| (1 + |y|)^4 on the imaginary axis
};

/// Checks the admissibility properties on grids: psi nonnegative, even, psi(0) = 1;
/// Re Psi >= -1e-10 on |Re z| <= 1, |Im z| <= 50 (about 1e3 points); decay with k = 3.
/// Throws PositivityViolation when Re Psi or psi goes negative.
PoitouReport validate_poitou();

/// Cached envelope constant C with |Psi(iy)| <= C (1 + |y|)^{-4}.
double poitou_envelope_k4();

/// C with |Psi(iy)| <= C |y|^{-4} for |y| >= y0 (grid maximum over [y0, 1000] with headroom;
/// the y^{-4} amplitude is already settled by then).
double poitou_envelope_k4_beyond(double y0);

}  // namespace zdk::zerostats
