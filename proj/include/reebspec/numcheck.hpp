#pragma once

#include <functional>
#include <string>
#include <vector>

#include "reebspec/errors.hpp"

namespace reebspec {

/// Deformation profile for the thickened-trajectory model: a radial
/// profile g on [0, area/pi] (nonincreasing, vanishing near the right
/// end) and a cutoff beta on [0, length] that is 0 near the ends and 1 on
/// the plateau [plateau_begin, plateau_end]. Derivatives are supplied
/// analytically; the residual checks difference only the contact form.
struct ProfileSpec {
  double area = 0;    // disk area A
  double length = 0;  // trajectory length L
  std::function<double(double)> g, g_prime;        // argument x = r^2
  std::function<double(double)> beta, beta_prime;  // argument t
  double plateau_begin = 0, plateau_end = 0;
  std::string describe;

  double x_max() const;  // area / pi
};

/// g(x) = amplitude * (1 - x/x_max)^3 * cut(x), where cut is a smooth
/// step that is 1 until the transition band and 0 on the final
/// `cutoff_fraction` of [0, x_max]. cutoff_fraction = 0 disables the cut.
/// Beta ramps 0 -> 1 -> 0 with plateau [0.25, 0.75] * length.
ProfileSpec standard_profile(double area, double length, double amplitude,
                             double cutoff_fraction);

/// Same envelope with a caller-supplied polynomial sum_i c_i x^i in place
/// of the cubic.
ProfileSpec poly_profile(double area, double length,
                         const std::vector<double>& coeffs,
                         double cutoff_fraction);

/// g identically zero (the undeformed model).
ProfileSpec zero_profile(double area, double length);

/// Rescale the deformation: tau * g.
ProfileSpec scaled_profile(const ProfileSpec& p, double tau);

/// Samples 1 + x g'(x) on [0, x_max]; true iff strictly positive at every
/// sample. samples >= 2.
bool check_box_condition(const ProfileSpec& p, int samples);

struct GridSpec {
  int nt = 16, nr = 24, ntheta = 8;
  double r_min = 1e-3;
};

struct ResidualLocation {
  double t = 0, r = 0, theta = 0, s = 0;
};

struct GridResidualReport {
  GridSpec grid;
  double h = 0;
  double max_form_residual = 0;   // |lambda(R) - 1|
  double max_dform_residual = 0;  // max component of d(lambda)(R, .)
  ResidualLocation argmax;        // where max_dform_residual is attained
  double dt_coeff_min = 0, dt_coeff_max = 0;
  bool dt_coeff_in_range = false;  // within (0, 1] at every grid point
};

/// Finite-difference check (central differences, step h) of the two Reeb
/// identities lambda(R) = 1 and d(lambda)(R, .) = 0 for the deformed form
/// e^{beta(t) g(r^2)} (dt + r^2/2 dtheta) against the closed-form R.
/// OpenMP-parallel over grid points with a deterministic max-reduction.
GridResidualReport reeb_residual(const ProfileSpec& p, const GridSpec& grid,
                                 double h);
GridResidualReport reeb_residual_serial(const ProfileSpec& p,
                                        const GridSpec& grid, double h);

struct PsiGridSpec {
  int ns = 4, nt = 8, nr = 8, ntheta = 8;
  double s_min = -0.5, s_max = 0.7;
  double r_min = 1e-3, r_max = 1.0;
};

struct PsiResidualReport {
  PsiGridSpec grid;
  double h = 0;
  double length = 0;
  double max_pullback_residual = 0;  // entrywise, pulled-back form vs model
  double max_radii_residual = 0;     // pi r_i^2 image identities
  ResidualLocation argmax;
};

/// Checks that the explicit embedding
///   psi(s,t,r,theta) = (r e^{s/2+i theta}, sqrt(L/pi) e^{s/2+2 pi i t/L})
/// pulls the standard form of C^2 back to
///   e^s (ds dt + r^2/2 ds dtheta + r dr dtheta),
/// comparing the 4x4 antisymmetric coefficient matrices entrywise with a
/// finite-difference Jacobian, and that (pi r1^2, pi r2^2) = e^s (pi r^2, L).
PsiResidualReport psi_pullback_residual(double length, const PsiGridSpec& grid,
                                        double h);
PsiResidualReport psi_pullback_residual_serial(double length,
                                               const PsiGridSpec& grid,
                                               double h);

}  // namespace reebspec
