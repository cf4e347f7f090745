#include "reebspec/numcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace reebspec {

namespace {

constexpr double kPi = std::numbers::pi;

// C-infinity step: 0 for y <= 0, 1 for y >= 1, strictly increasing
// between.
double sigma(double y) { return y > 0 ? std::exp(-1.0 / y) : 0.0; }
double sigma_prime(double y) { return y > 0 ? sigma(y) / (y * y) : 0.0; }

double smooth_step(double y) {
  if (y <= 0) return 0.0;
  if (y >= 1) return 1.0;
  const double a = sigma(y), b = sigma(1.0 - y);
  return a / (a + b);
}

double smooth_step_prime(double y) {
  if (y <= 0 || y >= 1) return 0.0;
  const double a = sigma(y), b = sigma(1.0 - y);
  const double den = a + b;
  return (sigma_prime(y) * b + a * sigma_prime(1.0 - y)) / (den * den);
}

ProfileSpec envelope_profile(double area, double length,
                             std::function<double(double)> base,
                             std::function<double(double)> base_prime,
                             double cutoff_fraction, std::string describe) {
  if (area <= 0 || length <= 0)
    throw ContractViolation("profile needs positive area and length");
  if (cutoff_fraction < 0 || cutoff_fraction > 0.3)
    throw ContractViolation("cutoff fraction must lie in [0, 0.3]");

  ProfileSpec p;
  p.area = area;
  p.length = length;
  p.describe = std::move(describe);

  const double x_max = area / kPi;
  if (cutoff_fraction == 0) {
    p.g = std::move(base);
    p.g_prime = std::move(base_prime);
  } else {
    // cut == 1 up to x0, 0 from x1 = (1-f) x_max on.
    const double x1 = (1.0 - cutoff_fraction) * x_max;
    const double x0 = (1.0 - 3.0 * cutoff_fraction) * x_max;
    const double w = x1 - x0;
    auto cut = [x1, w](double x) { return smooth_step((x1 - x) / w); };
    auto cut_prime = [x1, w](double x) {
      return -smooth_step_prime((x1 - x) / w) / w;
    };
    p.g = [base, cut](double x) { return base(x) * cut(x); };
    p.g_prime = [base, base_prime, cut, cut_prime](double x) {
      return base_prime(x) * cut(x) + base(x) * cut_prime(x);
    };
  }

  // Beta: 0 on the outer 10%, 1 on the middle half.
  const double r0 = 0.10 * length, r1 = 0.25 * length;
  const double f1 = 0.75 * length, f0 = 0.90 * length;
  p.plateau_begin = r1;
  p.plateau_end = f1;
  p.beta = [r0, r1, f1, f0](double t) {
    if (t < r1) return smooth_step((t - r0) / (r1 - r0));
    if (t > f1) return smooth_step((f0 - t) / (f0 - f1));
    return 1.0;
  };
  p.beta_prime = [r0, r1, f1, f0](double t) {
    if (t < r1) return smooth_step_prime((t - r0) / (r1 - r0)) / (r1 - r0);
    if (t > f1) return -smooth_step_prime((f0 - t) / (f0 - f1)) / (f0 - f1);
    return 0.0;
  };
  return p;
}

}  // namespace

double ProfileSpec::x_max() const { return area / kPi; }

ProfileSpec standard_profile(double area, double length, double amplitude,
                             double cutoff_fraction) {
  const double x_max = area / kPi;
  auto base = [amplitude, x_max](double x) {
    const double u = 1.0 - x / x_max;
    return amplitude * u * u * u;
  };
  auto base_prime = [amplitude, x_max](double x) {
    const double u = 1.0 - x / x_max;
    return -3.0 * amplitude * u * u / x_max;
  };
  return envelope_profile(area, length, base, base_prime, cutoff_fraction,
                          "cubic(c=" + std::to_string(amplitude) +
                              ",cutoff=" + std::to_string(cutoff_fraction) +
                              ")");
}

ProfileSpec poly_profile(double area, double length,
                         const std::vector<double>& coeffs,
                         double cutoff_fraction) {
  auto base = [coeffs](double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  auto base_prime = [coeffs](double x) {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 1;)
      acc = acc * x + coeffs[i] * static_cast<double>(i);
    return acc;
  };
  return envelope_profile(area, length, base, base_prime, cutoff_fraction,
                          "poly(" + std::to_string(coeffs.size()) +
                              " coefficients)");
}

ProfileSpec zero_profile(double area, double length) {
  auto zero = [](double) { return 0.0; };
  ProfileSpec p = envelope_profile(area, length, zero, zero, 0.0, "zero");
  return p;
}

ProfileSpec scaled_profile(const ProfileSpec& p, double tau) {
  ProfileSpec out = p;
  auto g = p.g;
  auto gp = p.g_prime;
  out.g = [g, tau](double x) { return tau * g(x); };
  out.g_prime = [gp, tau](double x) { return tau * gp(x); };
  out.describe = std::to_string(tau) + "*" + p.describe;
  return out;
}

bool check_box_condition(const ProfileSpec& p, int samples) {
  if (samples < 2) throw ContractViolation("need at least 2 samples");
  const double x_max = p.x_max();
  for (int i = 0; i < samples; ++i) {
    const double x = x_max * static_cast<double>(i) /
                     static_cast<double>(samples - 1);
    if (!(1.0 + x * p.g_prime(x) > 0.0)) return false;
  }
  return true;
}

namespace {

struct MaxTracker {
  double value = -1.0;
  long index = -1;

  void feed(double v, long idx) {
    if (v > value || (v == value && (index < 0 || idx < index))) {
      value = v;
      index = idx;
    }
  }
  // Order-independent combine: larger value wins, ties to smaller index.
  void merge(const MaxTracker& other) {
    if (other.index < 0) return;
    if (other.value > value || (other.value == value && other.index < index))
      *this = other;
  }
};

struct ReebPointResult {
  double form_residual;
  double dform_residual;
  double dt_coeff;
};

ReebPointResult reeb_point(const ProfileSpec& p, double t, double r, double h) {
  const auto lam_t = [&p](double tt, double rr) {
    return std::exp(p.beta(tt) * p.g(rr * rr));
  };
  const auto lam_th = [&lam_t](double tt, double rr) {
    return 0.5 * rr * rr * lam_t(tt, rr);
  };

  const double x = r * r;
  const double bv = p.beta(t), bp = p.beta_prime(t);
  const double gv = p.g(x), gp = p.g_prime(x);
  const double pref = std::exp(-bv * gv);
  const double R_t = pref * (1.0 + x * bv * gp);
  const double R_r = pref * (-0.5 * r * bp * gv);
  const double R_th = pref * (-2.0 * bv * gp);

  // lambda(R) = 1 is algebraic; the derivative identity needs the
  // exterior derivative, which is where the finite differences enter.
  const double form_res =
      std::abs(lam_t(t, r) * R_t + lam_th(t, r) * R_th - 1.0);

  const double dt_lam_t = (lam_t(t + h, r) - lam_t(t - h, r)) / (2.0 * h);
  const double dt_lam_th = (lam_th(t + h, r) - lam_th(t - h, r)) / (2.0 * h);
  const double dr_lam_t = (lam_t(t, r + h) - lam_t(t, r - h)) / (2.0 * h);
  const double dr_lam_th = (lam_th(t, r + h) - lam_th(t, r - h)) / (2.0 * h);
  // The coefficients carry no theta dependence, so the remaining partials
  // vanish identically.
  const double e_tr = -dr_lam_t;
  const double e_tth = dt_lam_th;
  const double e_rth = dr_lam_th;

  const double comp_t = -e_tr * R_r - e_tth * R_th;
  const double comp_r = e_tr * R_t - e_rth * R_th;
  const double comp_th = e_tth * R_t + e_rth * R_r;
  const double dform_res =
      std::max({std::abs(comp_t), std::abs(comp_r), std::abs(comp_th)});

  return {form_res, dform_res, R_t};
}

GridResidualReport reeb_residual_impl(const ProfileSpec& p,
                                      const GridSpec& grid, double h,
                                      bool parallel) {
  if (grid.r_min <= 0)
    throw SingularGrid("grid must exclude the polar axis, r_min = " +
                       std::to_string(grid.r_min));
  if (grid.nt < 1 || grid.nr < 1 || grid.ntheta < 1 || h <= 0)
    throw ContractViolation("grid dimensions and h must be positive");
  if (!check_box_condition(p, 256))
    throw ContractViolation("profile violates the box condition 1+x g'(x)>0");

  const double r_out = std::sqrt(p.x_max());
  if (grid.r_min >= r_out)
    throw SingularGrid("r_min reaches the disk radius");

  const long total = static_cast<long>(grid.nt) * grid.nr;
  MaxTracker form_max, dform_max;
  double dt_min = std::numeric_limits<double>::infinity();
  double dt_max = -std::numeric_limits<double>::infinity();

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    MaxTracker local_form, local_dform;
    double local_min = std::numeric_limits<double>::infinity();
    double local_max = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
#pragma omp for nowait
#endif
    for (long idx = 0; idx < total; ++idx) {
      const int it = static_cast<int>(idx / grid.nr);
      const int ir = static_cast<int>(idx % grid.nr);
      const double t = p.length * (it + 0.5) / grid.nt;
      const double r =
          grid.r_min + (r_out - grid.r_min) * (ir + 0.5) / grid.nr;
      const ReebPointResult res = reeb_point(p, t, r, h);
      local_form.feed(res.form_residual, idx);
      local_dform.feed(res.dform_residual, idx);
      local_min = std::min(local_min, res.dt_coeff);
      local_max = std::max(local_max, res.dt_coeff);
    }
#ifdef _OPENMP
#pragma omp critical(reebspec_reeb_reduce)
#endif
    {
      form_max.merge(local_form);
      dform_max.merge(local_dform);
      dt_min = std::min(dt_min, local_min);
      dt_max = std::max(dt_max, local_max);
    }
  }

  GridResidualReport report;
  report.grid = grid;
  report.h = h;
  report.max_form_residual = form_max.value;
  report.max_dform_residual = dform_max.value;
  const long idx = dform_max.index;
  report.argmax.t = p.length * (idx / grid.nr + 0.5) / grid.nt;
  report.argmax.r =
      grid.r_min + (r_out - grid.r_min) * (idx % grid.nr + 0.5) / grid.nr;
  report.dt_coeff_min = dt_min;
  report.dt_coeff_max = dt_max;
  report.dt_coeff_in_range = dt_min > 0.0 && dt_max <= 1.0;
  return report;
}

}  // namespace

GridResidualReport reeb_residual(const ProfileSpec& p, const GridSpec& grid,
                                 double h) {
  return reeb_residual_impl(p, grid, h, true);
}

GridResidualReport reeb_residual_serial(const ProfileSpec& p,
                                        const GridSpec& grid, double h) {
  return reeb_residual_impl(p, grid, h, false);
}

namespace {

struct Psi {
  double length;

  std::array<double, 4> operator()(double s, double t, double r,
                                   double th) const {
    const double es2 = std::exp(0.5 * s);
    const double rho2 = std::sqrt(length / kPi);
    const double phi2 = 2.0 * kPi * t / length;
    return {r * es2 * std::cos(th), r * es2 * std::sin(th),
            rho2 * es2 * std::cos(phi2), rho2 * es2 * std::sin(phi2)};
  }
};

double psi_point_residual(const Psi& psi, double s, double t, double r,
                          double th, double h, double* radii_residual) {
  // Central-difference Jacobian in the (s, t, r, theta) directions.
  std::array<std::array<double, 4>, 4> jac{};  // jac[component][direction]
  const auto fill = [&](int dir, std::array<double, 4> plus,
                        std::array<double, 4> minus) {
    for (int a = 0; a < 4; ++a) jac[a][dir] = (plus[a] - minus[a]) / (2.0 * h);
  };
  fill(0, psi(s + h, t, r, th), psi(s - h, t, r, th));
  fill(1, psi(s, t + h, r, th), psi(s, t - h, r, th));
  fill(2, psi(s, t, r + h, th), psi(s, t, r - h, th));
  fill(3, psi(s, t, r, th + h), psi(s, t, r, th - h));

  const double es = std::exp(s);
  std::array<std::array<double, 4>, 4> target{};
  target[0][1] = es;                // ds dt
  target[0][3] = 0.5 * r * r * es;  // r^2/2 ds dtheta
  target[2][3] = r * es;            // r dr dtheta

  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const double pulled = jac[0][i] * jac[1][j] - jac[0][j] * jac[1][i] +
                            jac[2][i] * jac[3][j] - jac[2][j] * jac[3][i];
      worst = std::max(worst, std::abs(pulled - target[i][j]));
    }
  }

  const auto image = psi(s, t, r, th);
  const double pr1 = kPi * (image[0] * image[0] + image[1] * image[1]);
  const double pr2 = kPi * (image[2] * image[2] + image[3] * image[3]);
  *radii_residual = std::max(std::abs(pr1 - es * kPi * r * r),
                             std::abs(pr2 - es * psi.length));
  return worst;
}

PsiResidualReport psi_residual_impl(double length, const PsiGridSpec& grid,
                                    double h, bool parallel) {
  if (grid.r_min <= 0)
    throw SingularGrid("grid must exclude the polar axis, r_min = " +
                       std::to_string(grid.r_min));
  if (length <= 0 || h <= 0 || grid.ns < 1 || grid.nt < 1 || grid.nr < 1 ||
      grid.ntheta < 1 || grid.r_max <= grid.r_min || grid.s_max <= grid.s_min)
    throw ContractViolation("invalid psi grid");

  const Psi psi{length};
  const long total =
      static_cast<long>(grid.ns) * grid.nt * grid.nr * grid.ntheta;
  MaxTracker pull_max, radii_max;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    MaxTracker local_pull, local_radii;
#ifdef _OPENMP
#pragma omp for nowait
#endif
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      const int ith = static_cast<int>(rest % grid.ntheta);
      rest /= grid.ntheta;
      const int ir = static_cast<int>(rest % grid.nr);
      rest /= grid.nr;
      const int it = static_cast<int>(rest % grid.nt);
      const int is = static_cast<int>(rest / grid.nt);

      const double s =
          grid.s_min + (grid.s_max - grid.s_min) * (is + 0.5) / grid.ns;
      const double t = length * (it + 0.5) / grid.nt;
      const double r =
          grid.r_min + (grid.r_max - grid.r_min) * (ir + 0.5) / grid.nr;
      const double th = 2.0 * kPi * (ith + 0.5) / grid.ntheta;

      double radii = 0.0;
      const double pull = psi_point_residual(psi, s, t, r, th, h, &radii);
      local_pull.feed(pull, idx);
      local_radii.feed(radii, idx);
    }
#ifdef _OPENMP
#pragma omp critical(reebspec_psi_reduce)
#endif
    {
      pull_max.merge(local_pull);
      radii_max.merge(local_radii);
    }
  }

  PsiResidualReport report;
  report.grid = grid;
  report.h = h;
  report.length = length;
  report.max_pullback_residual = pull_max.value;
  report.max_radii_residual = radii_max.value;

  long rest = pull_max.index;
  const int ith = static_cast<int>(rest % grid.ntheta);
  rest /= grid.ntheta;
  const int ir = static_cast<int>(rest % grid.nr);
  rest /= grid.nr;
  const int it = static_cast<int>(rest % grid.nt);
  const int is = static_cast<int>(rest / grid.nt);
  report.argmax.s =
      grid.s_min + (grid.s_max - grid.s_min) * (is + 0.5) / grid.ns;
  report.argmax.t = length * (it + 0.5) / grid.nt;
  report.argmax.r =
      grid.r_min + (grid.r_max - grid.r_min) * (ir + 0.5) / grid.nr;
  report.argmax.theta = 2.0 * kPi * (ith + 0.5) / grid.ntheta;
  return report;
}

}  // namespace

PsiResidualReport psi_pullback_residual(double length, const PsiGridSpec& grid,
                                        double h) {
  return psi_residual_impl(length, grid, h, true);
}

PsiResidualReport psi_pullback_residual_serial(double length,
                                               const PsiGridSpec& grid,
                                               double h) {
  return psi_residual_impl(length, grid, h, false);
}

}  // namespace reebspec
