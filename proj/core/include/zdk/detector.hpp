#pragma once

#include <complex>

#include "zdk/lfunc.hpp"

namespace zdk::lfunc {

struct DetectionConfig {
  double X = 1000.0;
  double Y = 100.0;
  double delta = 0.25;
  /// Shift of the right contour; <= 0 selects (3 - delta) / (2 delta).
  double A = 0.0;
  /// Truncation |Im w| <= halfheight; <= 0 selects 10 log Y.
  double halfheight = 0.0;
  double step = 0.02;
  /// |L(rho)| above this marks the input as a non-zero.
  double zero_tolerance = 1e-6;

  double resolved_A() const { return A > 0.0 ? A : (3.0 - delta) / (2.0 * delta); }
  double resolved_halfheight() const;
  /// Throws ValidationError for out-of-range parameters.
  void validate() const;
};

struct DetectorReport {
  Complex integral_right;  // along Re w = 1 - beta + A
  Complex integral_left;   // along Re w = min(1/2 - beta, -1/log Y)
  double identity_residual = 0.0;  // |e^{-1/Y} - (I1 + I2)|
  double main_term_gap = 0.0;      // |1 - (I1 + I2)|, about 1/Y for a zero
  double quadrature_error = 0.0;   // |T_h - T_{2h}| summed over both lines
  double truncation_bound = 0.0;   // envelope estimate of the neglected tails
  double tolerance = 0.0;          // max(10 / Y, 10 * quadrature_error)
  double abs_L_at_rho = 0.0;
  double abs_LM_at_rho = 0.0;
  bool nonzero_input = false;
  bool passed = false;             // !nonzero_input && identity_residual <= tolerance
};

/// Evaluates both contour integrals of the mollified zero-detection identity at rho
/// for an entire degree-one model. Requires Re(rho) >= 1/2.
/// Throws QuadratureDivergence when the integrand at the truncation height exceeds its
/// Stirling envelope, or when the envelope tail is not negligible.
DetectorReport zero_detector(const LFunctionModel& model, Complex rho, const DetectionConfig& cfg);

}  // namespace zdk::lfunc
