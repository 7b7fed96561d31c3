#pragma once

#include <vector>

#include "zdk/model.hpp"

namespace zdk::lfunc {

/// Z(t) = e^{i theta(t)} L(1/2 + it), real-valued; sign changes locate critical zeros.
double hardy_z(const LFunctionModel& model, double t);

struct ZeroSearchOptions {
  double step = 0.05;
  double tolerance = 1e-10;
  /// Cross-check the number of sign changes against the argument principle and
  /// refine the scan step on mismatch.
  bool verify_count = true;
  int max_refinements = 4;
};

/// Ordinates of zeros on the critical line with |gamma| <= T, sorted ascending. Real
/// characters (and zeta) are scanned on (0, T] only; complex characters on [-T, T].
/// Throws ValidationError when sign changes cannot account for the counted zeros.
std::vector<double> critical_line_zeros(const LFunctionModel& model, double T, const ZeroSearchOptions& opts = {});

/// True when the model's zeros are symmetric under gamma -> -gamma.
bool zeros_symmetric(const LFunctionModel& model);

/// Number of zeros (with multiplicity) in [sigma, 1] x [-T, T] by the argument principle
/// on the completed function (xi for zeta). The right edge is Re s = 3/2; for
/// sigma <= 0 the left edge is Re s = -0.05. T is nudged by +1e-4 when a zero lies on
/// the contour; BoundaryZero after 5 attempts.
int count_zeros_rectangle(const LFunctionModel& model, double sigma, double T);

}  // namespace zdk::lfunc
