#include "cliffexp/exp.hpp"

#include <cmath>

#include "cliffexp/errors.hpp"

namespace cliffexp {

namespace {

constexpr double kSmoothingFactor = 1e3;

struct Parts {
  double a0, a1, a2, a3, a12, a13, a23, a123;
};

Parts parts_of(const Multivector& x) {
  const auto& c = x.coeffs();
  return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]};
}

double degeneracy_tolerance(const Multivector& x, const ExpOptions& options) {
  double sumsq = 0.0;
  for (std::size_t i = 1; i < 7; ++i) sumsq += x[i] * x[i];
  return options.degeneracy_eps * (sumsq + 1.0);
}

DegeneracyBranch classify(bool plus_zero, bool minus_zero) {
  if (plus_zero && minus_zero) return DegeneracyBranch::BothDegenerate;
  if (plus_zero) return DegeneracyBranch::PlusDegenerate;
  if (minus_zero) return DegeneracyBranch::MinusDegenerate;
  return DegeneracyBranch::Generic;
}

ExpFactors factors_cl03(const Multivector& x, double tol) {
  const Parts p = parts_of(x);
  ExpFactors f;
  f.signature = x.signature();
  f.center = center_decompose(x);
  f.tolerance = tol;
  f.a_plus_sq = (p.a3 - p.a12) * (p.a3 - p.a12) + (p.a2 + p.a13) * (p.a2 + p.a13) +
                (p.a1 - p.a23) * (p.a1 - p.a23);
  f.a_minus_sq = (p.a3 + p.a12) * (p.a3 + p.a12) + (p.a2 - p.a13) * (p.a2 - p.a13) +
                 (p.a1 + p.a23) * (p.a1 + p.a23);
  f.a_plus = std::sqrt(f.a_plus_sq);
  f.a_minus = std::sqrt(f.a_minus_sq);
  f.branch = classify(f.a_plus_sq < tol, f.a_minus_sq < tol);
  return f;
}

ExpFactors factors_cl21(const Multivector& x, double tol) {
  const Parts p = parts_of(x);
  ExpFactors f;
  f.signature = x.signature();
  f.center = center_decompose(x);
  f.tolerance = tol;
  f.a_plus_sq = -(p.a3 - p.a12) * (p.a3 - p.a12) + (p.a2 - p.a13) * (p.a2 - p.a13) +
                (p.a1 + p.a23) * (p.a1 + p.a23);
  f.a_minus_sq = -(p.a3 + p.a12) * (p.a3 + p.a12) + (p.a2 + p.a13) * (p.a2 + p.a13) +
                 (p.a1 - p.a23) * (p.a1 - p.a23);
  f.a_plus = std::sqrt(std::abs(f.a_plus_sq));
  f.a_minus = std::sqrt(std::abs(f.a_minus_sq));
  f.branch = classify(std::abs(f.a_plus_sq) < tol, std::abs(f.a_minus_sq) < tol);
  return f;
}

ExpFactors factors_cl30_cl12(const Multivector& x, double tol) {
  ExpFactors f;
  f.signature = x.signature();
  f.center = center_decompose(x);
  f.tolerance = tol;
  const double s = f.center.scalar;
  const double i = f.center.pseudoscalar;
  f.c_norm = std::hypot(s, i);
  if (f.c_norm > 0.0) {
    // Same values as the three-row case table on aI and the sign of aS, in a
    // form without cancellation in aS + |c|.
    if (s >= 0.0) {
      f.a_plus = std::sqrt(0.5 * (s + f.c_norm));
      f.a_minus = i / (2.0 * f.a_plus);
    } else {
      const double mag = std::sqrt(0.5 * (f.c_norm - s));
      f.a_minus = (i < 0.0) ? -mag : mag;
      f.a_plus = i / (2.0 * f.a_minus);
    }
  }
  f.a_plus_sq = f.a_plus * f.a_plus;
  f.a_minus_sq = f.a_minus * f.a_minus;
  if (f.c_norm < tol) {
    f.branch = DegeneracyBranch::BothDegenerate;
  } else if (std::abs(i) < tol) {
    f.branch = (s > 0.0) ? DegeneracyBranch::MinusDegenerate : DegeneracyBranch::PlusDegenerate;
  } else {
    f.branch = DegeneracyBranch::Generic;
  }
  return f;
}

Multivector exp_cl03(const Multivector& x, const ExpFactors& f) {
  const Parts p = parts_of(x);
  const double tol = f.tolerance;
  const double sp = detail::si(-f.a_plus_sq, tol);
  const double sm = detail::si(-f.a_minus_sq, tol);
  const double cp = detail::co(-f.a_plus_sq, tol);
  const double cm = detail::co(-f.a_minus_sq, tol);
  const double half = 0.5 * std::exp(p.a0);
  const double ep = half * std::exp(p.a123);
  const double em = half * std::exp(-p.a123);

  const double d1 = p.a1 - p.a23, s1 = p.a1 + p.a23;
  const double d2 = p.a2 + p.a13, s2 = p.a2 - p.a13;
  const double d3 = p.a3 - p.a12, s3 = p.a3 + p.a12;

  return Multivector(x.signature(), {
      ep * cp + em * cm,
      ep * d1 * sp + em * s1 * sm,
      ep * d2 * sp + em * s2 * sm,
      ep * d3 * sp + em * s3 * sm,
      -ep * d3 * sp + em * s3 * sm,
      ep * d2 * sp - em * s2 * sm,
      -ep * d1 * sp + em * s1 * sm,
      ep * cp - em * cm,
  });
}

Multivector exp_cl21(const Multivector& x, const ExpFactors& f) {
  const Parts p = parts_of(x);
  const double tol = f.tolerance;
  const double sp = detail::si(f.a_plus_sq, tol);
  const double sm = detail::si(f.a_minus_sq, tol);
  const double cp = detail::co(f.a_plus_sq, tol);
  const double cm = detail::co(f.a_minus_sq, tol);
  const double half = 0.5 * std::exp(p.a0);
  const double ep = half * std::exp(p.a123);
  const double em = half * std::exp(-p.a123);

  const double d1 = p.a1 + p.a23, s1 = p.a1 - p.a23;
  const double d2 = p.a2 - p.a13, s2 = p.a2 + p.a13;
  const double d3 = p.a3 - p.a12, s3 = p.a3 + p.a12;

  return Multivector(x.signature(), {
      ep * cp + em * cm,
      ep * d1 * sp + em * s1 * sm,
      ep * d2 * sp + em * s2 * sm,
      ep * d3 * sp + em * s3 * sm,
      -ep * d3 * sp + em * s3 * sm,
      -ep * d2 * sp + em * s2 * sm,
      ep * d1 * sp - em * s1 * sm,
      ep * cp - em * cm,
  });
}

Multivector exp_cl30_cl12(const Multivector& x, const ExpFactors& f) {
  const Parts p = parts_of(x);
  const Signature sig = x.signature();
  const double scale = std::exp(p.a0);
  const double C = std::cos(p.a123);
  const double S = std::sin(p.a123);

  if (f.branch == DegeneracyBranch::BothDegenerate) {
    // (a + 𝒜)² = 0: exp = e^{a0}(cos a123 + I sin a123)(1 + a + 𝒜).
    const Multivector rotation = Multivector::central(sig, scale * C, scale * S);
    return rotation * (x.vector_bivector_part() + 1.0);
  }

  const auto [pm_i, mp_i] = detail::upper_lower_signs(sig);
  const double pm = pm_i;  // upper sign: Cl30 +, Cl12 −
  const double mp = mp_i;

  const double ap = f.a_plus;
  const double am = f.a_minus;
  const double tol = f.tolerance;
  const double ch = detail::co(f.a_plus_sq, tol);
  const double cm = detail::co(-f.a_minus_sq, tol);
  const double shc = detail::si(f.a_plus_sq, tol);   // sinh a₊ / a₊
  const double snc = detail::si(-f.a_minus_sq, tol); // sin a₋ / a₋
  const double sh = ap * shc;
  const double sn = am * snc;

  const double b0 = C * cm * ch - S * sn * sh;
  const double b123 = S * cm * ch + C * sn * sh;

  // b/|c| = cosh a₊ sin a₋ X/|c| + sinh a₊ cos a₋ Y/|c| with the sin/sinh
  // factors split as a₋·sinc, a₊·sinhc so that the ratios stay bounded.
  const double wx = ch * snc * am / f.c_norm;
  const double wy = cm * shc * ap / f.c_norm;

  const double a1 = p.a1, a2 = p.a2, a3 = p.a3, a12 = p.a12, a13 = p.a13, a23 = p.a23;

  const double x1 = (am * a1 - ap * a23) * C - (ap * a1 + am * a23) * S;
  const double y1 = (ap * a1 + am * a23) * C + (am * a1 - ap * a23) * S;

  const double x2 = pm * ((pm * am * a2 + ap * a13) * C + (mp * ap * a2 + am * a13) * S);
  const double y2 = (ap * a2 + mp * am * a13) * C + (am * a2 + pm * ap * a13) * S;

  const double x3 = (am * a3 + mp * ap * a12) * C + mp * (pm * ap * a3 + am * a12) * S;
  const double y3 = (ap * a3 + pm * am * a12) * C + (am * a3 + mp * ap * a12) * S;

  const double x12 = (pm * ap * a3 + am * a12) * C + pm * (am * a3 + mp * ap * a12) * S;
  const double y12 = (mp * am * a3 + ap * a12) * C + (pm * ap * a3 + am * a12) * S;

  const double x13 = mp * ((ap * a2 + mp * am * a13) * C + (am * a2 + pm * ap * a13) * S);
  const double y13 = (pm * am * a2 + ap * a13) * C + (mp * ap * a2 + am * a13) * S;

  const double x23 = (ap * a1 + am * a23) * C + (am * a1 - ap * a23) * S;
  const double y23 = (-am * a1 + ap * a23) * C + (ap * a1 + am * a23) * S;

  return Multivector(sig, {
      scale * b0,
      scale * (wx * x1 + wy * y1),
      scale * (wx * x2 + wy * y2),
      scale * (wx * x3 + wy * y3),
      scale * (wx * x12 + wy * y12),
      scale * (wx * x13 + wy * y13),
      scale * (wx * x23 + wy * y23),
      scale * b123,
  });
}

}  // namespace

namespace detail {

double si(double q, double tol) {
  const double aq = std::abs(q);
  if (aq < tol) return 1.0;
  if (aq < kSmoothingFactor * tol) {
    return 1.0 + q * (1.0 / 6.0 + q * (1.0 / 120.0 + q * (1.0 / 5040.0)));
  }
  const double r = std::sqrt(aq);
  return (q > 0.0) ? std::sinh(r) / r : std::sin(r) / r;
}

double co(double q, double tol) {
  const double aq = std::abs(q);
  if (aq < tol) return 1.0;
  if (aq < kSmoothingFactor * tol) {
    return 1.0 + q * (0.5 + q * (1.0 / 24.0 + q * (1.0 / 720.0)));
  }
  const double r = std::sqrt(aq);
  return (q > 0.0) ? std::cosh(r) : std::cos(r);
}

std::array<int, 2> upper_lower_signs(Signature sig) {
  switch (sig) {
    case Signature::Cl30: return {+1, -1};
    case Signature::Cl12: return {-1, +1};
    default: throw UnsupportedSignature("shared Cl30/Cl12 exponential body", sig);
  }
}

}  // namespace detail

std::string_view branch_name(DegeneracyBranch branch) {
  switch (branch) {
    case DegeneracyBranch::Generic: return "generic";
    case DegeneracyBranch::PlusDegenerate: return "plus-degenerate";
    case DegeneracyBranch::MinusDegenerate: return "minus-degenerate";
    case DegeneracyBranch::BothDegenerate: return "both-degenerate";
  }
  return "?";
}

ExpFactors exp_factors(const Multivector& x, const ExpOptions& options) {
  const double tol = degeneracy_tolerance(x, options);
  switch (x.signature()) {
    case Signature::Cl03: return factors_cl03(x, tol);
    case Signature::Cl21: return factors_cl21(x, tol);
    case Signature::Cl30:
    case Signature::Cl12: return factors_cl30_cl12(x, tol);
  }
  return {};
}

Multivector exp(const Multivector& x, const ExpOptions& options) {
  const ExpFactors f = exp_factors(x, options);
  switch (x.signature()) {
    case Signature::Cl03: return exp_cl03(x, f);
    case Signature::Cl21: return exp_cl21(x, f);
    case Signature::Cl30:
    case Signature::Cl12: return exp_cl30_cl12(x, f);
  }
  return Multivector::scalar(x.signature(), 1.0);
}

}  // namespace cliffexp
