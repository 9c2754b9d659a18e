#include <doctest.h>

#include <cmath>

#include <cliffexp/cliffexp.hpp>

#include "support.hpp"

using namespace cliffexp;
using namespace cliffexp::testing;

TEST_CASE("exp of simple elements") {
  CHECK(exp(Multivector(Signature::Cl30)) == one(Signature::Cl30));
  CHECK(exp(Multivector::scalar(Signature::Cl21, 1.0))[Blade::Scalar] == doctest::Approx(std::exp(1.0)));

  // e12 squares to −1 in Cl30: exp(θ e12) = cos θ + e12 sin θ
  const double theta = 0.7;
  const Multivector r = exp(Multivector::basis(Signature::Cl30, Blade::E12, theta));
  CHECK(r[Blade::Scalar] == doctest::Approx(std::cos(theta)));
  CHECK(r[Blade::E12] == doctest::Approx(std::sin(theta)));

  // e3 squares to −1 in Cl21
  const Multivector v = exp(Multivector::basis(Signature::Cl21, Blade::E3, theta));
  CHECK(v[Blade::Scalar] == doctest::Approx(std::cos(theta)));
  CHECK(v[Blade::E3] == doctest::Approx(std::sin(theta)));

  // e1 squares to −1 in Cl03
  const Multivector w = exp(Multivector::basis(Signature::Cl03, Blade::E1, theta));
  CHECK(w[Blade::Scalar] == doctest::Approx(std::cos(theta)));
  CHECK(w[Blade::E1] == doctest::Approx(std::sin(theta)));

  // Null vector: exp(e1 + e3) = 1 + e1 + e3 in Cl21
  const Multivector null(Signature::Cl21, {0, 1, 0, 1, 0, 0, 0, 0});
  CHECK(rel_diff(exp(null), one(Signature::Cl21) + null) < 1e-15);
}

TEST_CASE("appendix exponential in Cl30") {
  const Multivector a(Signature::Cl30, {4, 1, 3, -5, 10, 9, -9, -4});
  const Multivector x = a / 17.0;
  const Multivector sinh = (exp(x) - exp(-x)) / 2.0;
  CHECK(sinh[Blade::Scalar] == doctest::Approx(0.0806082).epsilon(1e-5));
  CHECK(sinh[Blade::E12] == doctest::Approx(0.5504206).epsilon(1e-6));
}

TEST_CASE("exp properties across algebras") {
  Rng rng(21);
  for (Signature sig : kAllSignatures) {
    CAPTURE(signature_name(sig));
    for (int k = 0; k < 300; ++k) {
      const Multivector a = random_mv(rng, sig);
      const Multivector ea = exp(a);
      CHECK(max_abs_diff(ea * exp(-a), one(sig)) < 1e-12);
      // scalar and pseudoscalar parts commute with everything
      const Multivector central = Multivector::central(sig, a[Blade::Scalar], a[Blade::E123]);
      CHECK(rel_diff(ea, exp(central) * exp(a.vector_bivector_part())) < 1e-12);
      // Det(exp A) = exp(4 a0)
      CHECK(determinant(ea) == doctest::Approx(std::exp(4 * a[Blade::Scalar])).epsilon(1e-10));
      // long series agrees
      CHECK(rel_diff(ea, series_eval(a, {SeriesFamily::Exp, 40}).value) < 1e-12);
    }
  }
}

TEST_CASE("Cl03 closed form against the idempotent decomposition") {
  // In Cl03, I² = +1 and p± = (1 ± I)/2 split the algebra, so
  // exp(A) = p₊ exp(A p₊) + p₋ exp(A p₋) where each half behaves like a
  // quaternion exponential. Check through the series instead of the formula.
  Rng rng(22);
  const Signature sig = Signature::Cl03;
  const Multivector unit_i = Multivector::basis(sig, Blade::E123);
  const Multivector p_plus = (one(sig) + unit_i) / 2.0;
  const Multivector p_minus = (one(sig) - unit_i) / 2.0;
  for (int k = 0; k < 200; ++k) {
    const Multivector a = random_mv(rng, sig, -2.0, 2.0);
    const Multivector split = p_plus * series_eval(a * p_plus, {SeriesFamily::Exp, 60}).value +
                              p_minus * series_eval(a * p_minus, {SeriesFamily::Exp, 60}).value;
    CHECK(rel_diff(exp(a), split) < 1e-10);
  }
}

TEST_CASE("branch tags") {
  CHECK(exp_factors(Multivector(Signature::Cl30)).branch == DegeneracyBranch::BothDegenerate);
  CHECK(exp_factors(Multivector::basis(Signature::Cl30, Blade::E1)).branch ==
        DegeneracyBranch::MinusDegenerate);
  CHECK(exp_factors(Multivector::basis(Signature::Cl30, Blade::E12)).branch ==
        DegeneracyBranch::PlusDegenerate);
  CHECK(exp_factors(Multivector(Signature::Cl30, {0, 1, 0, 0, 0, 0, 0.5, 0})).branch ==
        DegeneracyBranch::Generic);
  CHECK(branch_name(DegeneracyBranch::Generic) == "generic");
}

TEST_CASE("exp is continuous across degenerate branches") {
  Rng rng(23);
  for (double ratio : {0.5, 1.0, 1.5}) {
    for (int k = 0; k < 50; ++k) {
      const Multivector x = cl30_orthogonal_pair(rng, ratio);
      const Multivector at = exp(x);
      for (double eps : {1e-4, 1e-7, 1e-10}) {
        const Multivector nudged = x + Multivector(Signature::Cl30, {0, eps, -eps, eps, eps, 0, -eps, 0});
        CHECK(max_abs_diff(exp(nudged), at) < 50 * eps);
      }
    }
  }
}

TEST_CASE("factor identities") {
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    for (Signature sig : {Signature::Cl30, Signature::Cl12}) {
      const ExpFactors f = exp_factors(random_mv(rng, sig));
      CHECK(f.a_plus >= 0.0);
      CHECK(f.a_plus * f.a_plus - f.a_minus * f.a_minus == doctest::Approx(f.center.scalar).scale(1.0));
      CHECK(2 * f.a_plus * f.a_minus == doctest::Approx(f.center.pseudoscalar).scale(1.0));
      CHECK(f.c_norm == doctest::Approx(std::hypot(f.center.scalar, f.center.pseudoscalar)));
    }
    const ExpFactors f03 = exp_factors(random_mv(rng, Signature::Cl03));
    CHECK(f03.a_plus_sq >= 0.0);
    CHECK(f03.a_minus_sq >= 0.0);
  }
}

TEST_CASE("degeneracy threshold is configurable") {
  // A nearly degenerate Cl30 input flips branch when the threshold grows.
  Rng rng(25);
  Multivector x = cl30_orthogonal_pair(rng, 1.0);
  x = x + Multivector(Signature::Cl30, {0, 1e-7, 0, 0, 0, 0, 0, 0});
  CHECK(exp_factors(x, {1e-20}).branch == DegeneracyBranch::Generic);
  CHECK(exp_factors(x, {1e-3}).branch == DegeneracyBranch::BothDegenerate);
  CHECK(max_abs_diff(exp(x, {1e-20}), exp(x, {1e-3})) < 1e-6);
}

TEST_CASE("particular cases") {
  const Signature sig = Signature::Cl30;
  const Multivector v = vec(sig, 0.3, -0.4, 1.2);
  CHECK(max_abs_diff(exp_particular(v), exp(v)) < 1e-14);
  const Multivector b = bivec(Signature::Cl21, 0.3, 0.4, 0.5);
  CHECK(max_abs_diff(exp_particular(b), exp(b)) < 1e-14);
  const Multivector c = Multivector::central(Signature::Cl03, 0.2, -0.9);
  CHECK(max_abs_diff(exp_particular(c), exp(c)) < 1e-14);
  CHECK_THROWS_AS(exp_particular(v + bivec(sig, 1, 0, 0)), MixedGradeInput);
  CHECK_THROWS_AS(exp_particular(v + Multivector::scalar(sig, 1.0)), MixedGradeInput);
}

TEST_CASE("si and co helpers") {
  CHECK(detail::si(0.0, 1e-12) == 1.0);
  CHECK(detail::co(0.0, 1e-12) == 1.0);
  CHECK(detail::si(4.0, 1e-12) == doctest::Approx(std::sinh(2.0) / 2.0));
  CHECK(detail::si(-4.0, 1e-12) == doctest::Approx(std::sin(2.0) / 2.0));
  CHECK(detail::co(-4.0, 1e-12) == doctest::Approx(std::cos(2.0)));
  // Maclaurin branch is continuous with the direct formula
  CHECK(detail::si(5e-10, 1e-12) == doctest::Approx(1.0 + 5e-10 / 6.0).epsilon(1e-15));
  CHECK(detail::upper_lower_signs(Signature::Cl30) == std::array<int, 2>{1, -1});
  CHECK(detail::upper_lower_signs(Signature::Cl12) == std::array<int, 2>{-1, 1});
  CHECK_THROWS_AS(detail::upper_lower_signs(Signature::Cl21), UnsupportedSignature);
}
