#pragma once

// Two-point chord/arc comparison: the lower profile
//
//   f(x, t) = 2 e^t arctan(e^{-t} sin(x / 2)),   x in [0, 2pi],
//
// its derivatives, the operator Lf = (f_x^2 - 1) / f_xx - f - f_t whose
// non-negativity drives the comparison, and the scan of
// Z = d - f(l, t - tbar) over all vertex pairs of a curve.

#include <cstddef>
#include <utility>

#include "icf/curve.hpp"

namespace icf {

struct ProfileParams {
  double x = 0.0;  // arc-length argument in [0, 2pi]
  double t = 0.0;  // profile time (flow time minus offset)
};

double f_value(ProfileParams p);
double f_x(ProfileParams p);
double f_xx(ProfileParams p);
double f_t(ProfileParams p);

/// arctan z - z / (1 + z^2); non-negative for z >= 0.
double g_aux(double z);

/// Closed form of Lf on x in (0, pi]. x = 0 raises SingularityError (the
/// limit there is 0); x outside [0, pi] raises ParameterError.
double lf_value(ProfileParams p);

/// Closed form of the x-derivative of Lf on (0, pi].
double dlf_value(ProfileParams p);

/// The degree-8 polynomial in z with alpha = e^{-2t} whose sign equals the
/// sign of D(Lf) / cos(x/2); z in [0, 1], alpha > 0.
double a_polynomial(double z, double alpha);

/// Rectangular (x, t) grid; nodes x_min + k x_step up to x_max inclusive.
struct ProfileGrid {
  double x_min = 1e-3;
  double x_max = 3.14159265358979323846;
  double x_step = 1e-3;
  double t_min = -5.0;
  double t_max = 5.0;
  double t_step = 0.01;

  void validate() const;
  std::size_t x_count() const;
  std::size_t t_count() const;
  double x_at(std::size_t k) const;
  double t_at(std::size_t k) const;
};

struct GridMinimum {
  double value = 0.0;
  double x = 0.0;
  double t = 0.0;
};

/// Minimum of Lf over the grid; grid x must lie in (0, pi].
GridMinimum lf_grid_min(const ProfileGrid& grid);

struct DlfCheck {
  GridMinimum finite_difference;     // min of the central difference of Lf
  GridMinimum closed_form;           // min of dlf_value
  double max_disagreement = 0.0;     // max |fd - closed| / max(1, |closed|)
  double worst_x = 0.0;
  double worst_t = 0.0;
};

/// Fourth-order central differences of lf_value with step h, cross-validated
/// node by node against dlf_value.
DlfCheck dlf_check(const ProfileGrid& grid, double h = 1e-4);

struct PolynomialGrid {
  double z_step = 1e-3;
  double log10_alpha_min = -3.0;
  double log10_alpha_max = 3.0;
  double log10_alpha_step = 0.01;
};

struct PolynomialMinimum {
  double value = 0.0;
  double z = 0.0;
  double alpha = 0.0;
};

PolynomialMinimum a_polynomial_grid_min(const PolynomialGrid& grid);

struct ProfileDerivativeErrors {
  double f_x = 0.0;
  double f_xx = 0.0;
  double f_t = 0.0;
};

/// Largest deviation of fourth-order central differences of f_value (step h) from the
/// closed-form derivatives over the grid, relative to max(1, |derivative|).
ProfileDerivativeErrors profile_derivative_check(const ProfileGrid& grid, double h = 1e-4);

struct OffsetSearch {
  double lo = -50.0;
  double hi = 50.0;
  double tolerance = 1e-6;
};

/// True when d(i, j) >= f(l(i, j), -tbar) for every vertex pair.
bool offset_admissible(const DiscreteCurve& curve, double tbar);

/// Smallest admissible tbar in the search interval, by bisection. The curve
/// must be convex with length 2pi. Raises NoAdmissibleOffsetError when the
/// upper end is not admissible.
double compute_tbar(const DiscreteCurve& curve, const OffsetSearch& search = {});

struct ComparisonReport {
  double tbar = 0.0;
  double min_Z = 0.0;
  std::pair<std::size_t, std::size_t> argmin_pair{0, 0};
  double time = 0.0;
};

/// Exhaustive minimum of Z = d - f(l, time - tbar) over all i < j.
ComparisonReport min_Z_scan(const DiscreteCurve& curve, double time, double tbar);

}  // namespace icf
