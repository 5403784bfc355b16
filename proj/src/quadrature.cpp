#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include "unfold/bform.hpp"

namespace unfold {

namespace {

using cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPatchRadius = 0.5;
constexpr double kOuterRadius = 2.0;
// Angular rules are spectrally convergent; asking for near machine precision
// costs little and keeps the inner error far below the outer one.
constexpr double kInnerRelTol = 1e-13;

struct BudgetHit {};

struct Params {
  double a1, a2;
  int e1, e2;
};

// Shared bookkeeping for one pass over all regions.
class Integrator {
 public:
  Integrator(const Params& p, std::size_t budget) : p_(p), budget_(budget) {}

  std::size_t evaluations() const { return evaluations_; }

  // Integral over one region. `outer` maps the outer variable to
  // (integrand value, weighted absolute error of its inner integral).
  template <class Outer>
  void add_region(Outer&& outer, double lo, double hi, double rel_tol, bool smooth) {
    double inner_err = 0.0;
    auto f = [&](double x) {
      const auto [v, e] = outer(x);
      inner_err = std::max(inner_err, e);
      return v;
    };
    double err = 0.0, l1 = 0.0;
    cplx v;
    if (smooth) {
      v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 12, rel_tol, &err, &l1);
    } else {
      static thread_local boost::math::quadrature::tanh_sinh<double> ts;
      v = ts.integrate(f, lo, hi, rel_tol, &err, &l1);
    }
    value_ += v;
    error_ += err + (hi - lo) * inner_err;
    l1_ += l1;
    ++regions_;
  }

  QuadratureResult result() const {
    // Roundoff floor proportional to the absolute mass.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * l1_;
    return {value_, error_ + floor, regions_, evaluations_};
  }

  // Full-circle or arc angular integral of g over [lo, hi] (absolute error returned).
  template <class G>
  std::pair<cplx, double> angular(G&& g, double lo, double hi, bool full_circle) {
    auto counted = [&](double phi) {
      if (++evaluations_ > budget_) throw BudgetHit{};
      return g(phi);
    };
    double err = 0.0, l1 = 0.0;
    cplx v;
    if (full_circle)
      v = boost::math::quadrature::trapezoidal(counted, lo, hi, kInnerRelTol, 14, &err, &l1);
    else
      v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(counted, lo, hi, 12, kInnerRelTol, &err, &l1);
    return {v, err};
  }

  const Params& params() const { return p_; }

 private:
  Params p_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
  std::size_t regions_ = 0;
  cplx value_{};
  double error_ = 0.0;
  double l1_ = 0.0;
};

cplx ipow(cplx z, int e) { return e == 0 ? cplx(1.0) : z; }

// |w|^p for complex w given |w|².
double abs_pow(double abs_sq, double p) { return std::pow(abs_sq, 0.5 * p); }

// Disc of radius ½ about a singular point c ∈ {0, 1}. With u = r^{2α} the
// radial factor r^{2α−1} dr becomes du / (2α).
void disc_region(Integrator& in, bool about_one, double rel_tol) {
  const auto& p = in.params();
  const double alpha = about_one ? p.a2 : p.a1;
  const int e_here = about_one ? p.e2 : p.e1;
  const int e_other = about_one ? p.e1 : p.e2;
  const double beta_other = about_one ? p.a1 : p.a2;
  const double inv = 1.0 / (2.0 * alpha);

  auto outer = [&](double u) -> std::pair<cplx, double> {
    const double r = std::pow(u, inv);
    // The other factor, seen from this centre: (z − 1) about 0, z about 1.
    auto g = [&](double phi) {
      const cplx local = std::polar(r, phi);
      const cplx other = about_one ? 1.0 + local : local - 1.0;
      return std::polar(1.0, e_here * phi) * ipow(other, e_other) * abs_pow(std::norm(other), 2.0 * beta_other - 2.0);
    };
    const auto [v, e] = in.angular(g, 0.0, kTwoPi, true);
    const double scale = inv * (e_here ? r : 1.0);
    return {scale * v, scale * e};
  };
  in.add_region(outer, 0.0, std::pow(kPatchRadius, 2.0 * alpha), rel_tol, false);
}

// Polar about 0 for ½ ≤ r ≤ 2, leaving out the disc |z − 1| < ½.
void middle_region(Integrator& in, double rel_tol) {
  const auto& p = in.params();
  auto integrand = [&](double r, double phi) {
    const cplx z = std::polar(r, phi);
    const cplx zm1 = z - 1.0;
    return std::polar(1.0, p.e1 * phi) * ipow(zm1, p.e2) * abs_pow(std::norm(zm1), 2.0 * p.a2 - 2.0);
  };
  auto radial = [&](double r) { return std::pow(r, 2.0 * p.a1 - 1.0 + p.e1); };

  // Arc part: the excluded angles are |φ| < φ0(r), cos φ0 = (r² + ¾) / 2r.
  auto arc = [&](double r) -> std::pair<cplx, double> {
    const double c = std::clamp((r * r + 0.75) / (2.0 * r), -1.0, 1.0);
    const double phi0 = std::acos(c);
    const auto [v, e] = in.angular([&](double phi) { return integrand(r, phi); }, phi0, kTwoPi - phi0, false);
    const double w = radial(r);
    return {w * v, w * e};
  };
  in.add_region(arc, kPatchRadius, 1.0 + kPatchRadius, rel_tol, false);

  auto ring = [&](double r) -> std::pair<cplx, double> {
    const auto [v, e] = in.angular([&](double phi) { return integrand(r, phi); }, 0.0, kTwoPi, true);
    const double w = radial(r);
    return {w * v, w * e};
  };
  in.add_region(ring, 1.0 + kPatchRadius, kOuterRadius, rel_tol, true);
}

// |z| > 2. With ζ = 1/z, |ζ| = w and z = r e^{iφ}, the angular integral of the
// integrand is w^{4−2s−ε} ∫ e^{iεφ} h(w e^{−iφ}) dφ where s = α₁+α₂,
// ε = ε₁+ε₂ and h(ζ) = (1−ζ)^{ε₂} |1−ζ|^{2α₂−2}. With r dr = w^{−3} dw and
// v = w^{2−2s} the exterior becomes ∫_0^V K dv / (2−2s), K bounded.
void exterior_region(Integrator& in, double rel_tol) {
  const auto& p = in.params();
  const double s = p.a1 + p.a2;
  const int eps = p.e1 + p.e2;
  const double expo = 2.0 - 2.0 * s;
  const double inv = 1.0 / expo;
  const double pw = p.a2 - 1.0;

  // h(ζ) − 1 without cancellation: |1−ζ|² = 1 + x, x = |ζ|² − 2 Re ζ.
  auto h_minus_one = [&](cplx zeta) {
    const double x = std::norm(zeta) - 2.0 * zeta.real();
    const double m = std::expm1(pw * std::log1p(x));
    return p.e2 ? (1.0 - zeta) * m - zeta : cplx(m);
  };

  auto outer = [&](double v) -> std::pair<cplx, double> {
    const double w = std::pow(v, inv);
    if (eps == 0) {
      const auto [j, e] =
          in.angular([&](double phi) { return 1.0 + h_minus_one(std::polar(w, -phi)); }, 0.0, kTwoPi, true);
      return {inv * j, inv * e};
    }
    if (w == 0.0) {
      // lim J(w)/w: the coefficient of ζ in h, times 2π.
      const double c = p.e2 ? -p.a2 : 1.0 - p.a2;
      return {inv * kTwoPi * c, 0.0};
    }
    const auto [j, e] = in.angular([&](double phi) { return std::polar(1.0, phi) * h_minus_one(std::polar(w, -phi)); },
                                   0.0, kTwoPi, true);
    return {inv * j / w, inv * e / w};
  };
  in.add_region(outer, 0.0, std::pow(1.0 / kOuterRadius, expo), rel_tol, false);
}

void validate(const ExactFraction& alpha1, const ExactFraction& alpha2, int eps1, int eps2, const QuadratureOptions& o) {
  const ExactFraction half(1, 2);
  for (const auto& a : {alpha1, alpha2}) {
    if (a <= ExactFraction(0) || a >= half) throw InvalidInput("alpha must lie in (0, 1/2), got " + a.str());
  }
  for (const int e : {eps1, eps2}) {
    if (e != 0 && e != 1) throw InvalidInput("epsilon must be 0 or 1");
  }
  if (eps1 && eps2) throw InvalidInput("integrand is not integrable: at most one epsilon may be nonzero");
  if (!(o.tol > 0.0)) throw InvalidInput("tolerance must be positive");
}

}  // namespace

QuadratureResult planar_integral(const ExactFraction& alpha1, const ExactFraction& alpha2, int eps1, int eps2,
                                 const QuadratureOptions& options) {
  validate(alpha1, alpha2, eps1, eps2, options);
  const Params params{alpha1.to_double(), alpha2.to_double(), eps1, eps2};

  QuadratureResult best{{std::nan(""), std::nan("")}, std::numeric_limits<double>::infinity(), 0, 0};
  std::size_t spent = 0;
  std::size_t regions = 0;
  // Tighten the outer rules until the combined estimate meets tol. Relative
  // targets below kMinOuterRel only burn evaluations.
  constexpr double kMinOuterRel = 1e-13;
  double previous = 0.0;
  for (const double factor : {1e-2, 1e-4, 0.0}) {
    const double rel = std::max(options.tol * factor, kMinOuterRel);
    if (rel == previous) continue;
    previous = rel;
    Integrator in(params, options.max_evaluations - spent);
    try {
      disc_region(in, false, rel);
      disc_region(in, true, rel);
      middle_region(in, rel);
      exterior_region(in, rel);
    } catch (const BudgetHit&) {
      best.evaluations = options.max_evaluations;
      throw QuadratureBudgetExceeded("evaluation budget of " + std::to_string(options.max_evaluations) +
                                         " exhausted before reaching tol",
                                     best);
    }
    spent += in.evaluations();
    auto r = in.result();
    regions += r.regions_evaluated;
    if (r.error_estimate < best.error_estimate) best = r;
    best.regions_evaluated = regions;
    best.evaluations = spent;
    if (best.error_estimate <= options.tol) return best;
  }
  char msg[96];
  std::snprintf(msg, sizeof msg, "tolerance %.3e not reached; best error estimate %.3e", options.tol,
                best.error_estimate);
  throw QuadratureBudgetExceeded(msg, best);
}

bool nonvanishing(const QuadratureResult& r) { return std::abs(r.value) > 10.0 * r.error_estimate; }

bool nonvanishing_check(const ExactFraction& alpha1, const ExactFraction& alpha2, int eps1, int eps2,
                        const QuadratureOptions& options) {
  return nonvanishing(planar_integral(alpha1, alpha2, eps1, eps2, options));
}

}  // namespace unfold
