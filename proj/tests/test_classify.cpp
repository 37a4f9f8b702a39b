#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tusi/classify.hpp"
#include "tusi/error.hpp"

using namespace tusi;
using doctest::Approx;

namespace {

const double kRt3 = std::sqrt(3.0);

// Every oracle root lies in its interval, one per interval, in order.
void check_against_oracle(const Classification& c, const Polynomial& p, double slack = 1e-9) {
  const auto o = test::oracle_of(p);
  REQUIRE(o.count() == c.count());
  for (int i = 0; i < c.count(); ++i) {
    const RootInterval& iv = c.intervals[i];
    const double r = o.roots[i];
    if (iv.kind == IntervalKind::exact_point) {
      CHECK(r == Approx(iv.lo).epsilon(slack));
      CHECK(o.multiplicities[i] == iv.multiplicity);
    } else {
      CHECK(iv.contains(r));
    }
  }
}

}  // namespace

TEST_CASE("interval membership") {
  const RootInterval open{0, 1, IntervalKind::open, 1};
  CHECK(open.contains(0.5));
  CHECK_FALSE(open.contains(0.0));
  CHECK_FALSE(open.contains(1.0));
  const RootInterval half{0, 1, IntervalKind::half_open, 1};
  CHECK(half.contains(0.0));
  CHECK_FALSE(half.contains(1.0));
  const RootInterval point{0.25, 0.25, IntervalKind::exact_point, 2};
  CHECK(point.contains(0.25));
  CHECK_FALSE(point.contains(0.26));
}

TEST_CASE("classify_tusi: the five cases") {
  SUBCASE("delta = 1") {
    const auto c = classify_tusi(TusiForm(1));
    CHECK(c.regime == Regime::delta_eq_1);
    REQUIRE(c.count() == 2);
    CHECK(c.intervals[0].kind == IntervalKind::exact_point);
    CHECK(c.intervals[0].lo == Approx(-1.0 / 3.0));
    CHECK(c.intervals[0].multiplicity == 1);
    CHECK(c.intervals[1].lo == Approx(2.0 / 3.0));
    CHECK(c.intervals[1].multiplicity == 2);
  }
  SUBCASE("delta = 0") {
    const auto c = classify_tusi(TusiForm(0));
    CHECK(c.regime == Regime::delta_eq_0);
    REQUIRE(c.count() == 2);
    CHECK(c.intervals[0].lo == 0.0);
    CHECK(c.intervals[0].multiplicity == 2);
    CHECK(c.intervals[1].lo == 1.0);
  }
  SUBCASE("delta = 1/2") {
    const auto c = classify_tusi(TusiForm(0.5));
    CHECK(c.regime == Regime::delta_in_0_1);
    REQUIRE(c.count() == 3);
    const double exact[] = {1.0 / 3.0 - 1.0 / kRt3, 1.0 / 3.0, 1.0 / 3.0 + 1.0 / kRt3};
    for (int i = 0; i < 3; ++i) CHECK(c.intervals[i].contains(exact[i]));
    CHECK(c.intervals[0].lo == Approx(-1.0 / 3.0));
    CHECK(c.intervals[0].hi == 0.0);
    CHECK(c.intervals[1].hi == Approx(2.0 / 3.0));
    CHECK(c.intervals[2].hi == 1.0);
  }
  SUBCASE("delta > 1 and delta < 0 are finite, sign-verified") {
    auto c = classify_tusi(TusiForm(2));
    CHECK(c.regime == Regime::delta_gt_1);
    REQUIRE(c.count() == 1);
    CHECK(c.intervals[0].lo == Approx(-(1.0 + 8.0 / 27.0)));
    CHECK(c.intervals[0].hi == Approx(-1.0 / 3.0));
    c = classify_tusi(TusiForm(-1));
    CHECK(c.regime == Regime::delta_lt_0);
    CHECK(c.intervals[0].lo == 1.0);
    CHECK(c.intervals[0].hi == Approx(1.0 + 4.0 / 27.0));
  }
  SUBCASE("snapping near the boundaries") {
    auto c = classify_tusi(TusiForm(1.0 + 1e-14));
    CHECK(c.regime == Regime::delta_eq_1);
    CHECK(c.boundary_snapped);
    c = classify_tusi(TusiForm(-1e-13));
    CHECK(c.regime == Regime::delta_eq_0);
    CHECK(c.boundary_snapped);
    c = classify_tusi(TusiForm(1.0 + 1e-9));
    CHECK(c.regime == Regime::delta_gt_1);
    CHECK_FALSE(c.boundary_snapped);
  }
}

TEST_CASE("classify_tusi agrees with the oracle on a delta grid") {
  for (double d : {-2.0, -1.0, -0.5, -0.01, 0.0, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0, 1.01, 2.0}) {
    CAPTURE(d);
    check_against_oracle(classify_tusi(TusiForm(d)), TusiForm(d).polynomial());
  }
}

TEST_CASE("classify_tusi_general") {
  auto c = classify_tusi_general(TusiGeneralForm(1, 4.0 / 27.0));
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].lo == Approx(-1.0 / 3.0));
  CHECK(c.intervals[1].lo == Approx(2.0 / 3.0));
  CHECK(c.intervals[1].multiplicity == 2);

  c = classify_tusi_general(TusiGeneralForm(3, 1));
  REQUIRE(c.count() == 3);
  CHECK(c.intervals[0].lo == Approx(-1.0));
  CHECK(c.intervals[0].hi == 0.0);
  CHECK(c.intervals[1].hi == Approx(2.0));
  CHECK(c.intervals[2].hi == Approx(3.0));
  check_against_oracle(c, TusiGeneralForm(3, 1).polynomial());

  c = classify_tusi_general(TusiGeneralForm(2, -1));
  REQUIRE(c.count() == 1);
  CHECK(c.intervals[0].lo == Approx(2.0));
  check_against_oracle(c, TusiGeneralForm(2, -1).polynomial());
}

TEST_CASE("classify_tusi_general is b times classify_tusi") {
  std::mt19937_64 rng(test::kSeed);
  for (int i = 0; i < 500; ++i) {
    const double b = test::log_uniform(rng, 0.1, 10);
    const double c = test::uniform(rng, -1, 2) * 4.0 * b * b * b / 27.0;
    const TusiGeneralForm g(b, c);
    const auto scaled = classify_tusi_general(g);
    const auto unit = classify_tusi(TusiForm(g.delta()));
    REQUIRE(scaled.count() == unit.count());
    for (int k = 0; k < unit.count(); ++k) {
      CHECK(scaled.intervals[k].lo == Approx(b * unit.intervals[k].lo).epsilon(1e-12));
      CHECK(scaled.intervals[k].hi == Approx(b * unit.intervals[k].hi).epsilon(1e-12));
    }
  }
}

TEST_CASE("discriminant") {
  auto d = discriminant(ReducedForm(-3, 2));
  CHECK(d.delta_cap == 0.0);
  REQUIRE(d.delta_tusi.has_value());
  CHECK(*d.delta_tusi == 1.0);
  CHECK(d.sign == 0);

  d = discriminant(ReducedForm(-1.0 / 3.0, 0));
  CHECK(d.delta_cap == Approx(1.0 / 729.0).epsilon(1e-14));
  CHECK(*d.delta_tusi == Approx(0.5));
  CHECK(d.sign == 1);

  d = discriminant(ReducedForm(1, 0));
  CHECK(d.delta_cap == Approx(-1.0 / 27.0));
  CHECK_FALSE(d.delta_tusi.has_value());
  CHECK(d.sign == -1);

  d = discriminant(ReducedForm(0, 0));
  CHECK(d.sign == 0);
}

TEST_CASE("classify_reduced") {
  auto c = classify_reduced(ReducedForm(1, -2));
  CHECK(c.regime == Regime::p_positive_single);
  REQUIRE(c.count() == 1);
  CHECK(c.intervals[0].contains(1.0));

  c = classify_reduced(ReducedForm(-1.0 / 3.0, 0));
  CHECK(c.regime == Regime::delta_in_0_1);
  REQUIRE(c.count() == 3);
  CHECK(c.intervals[0].contains(-1.0 / kRt3));
  CHECK(c.intervals[1].contains(0.0));
  CHECK(c.intervals[2].contains(1.0 / kRt3));

  c = classify_reduced(ReducedForm(-3, 2));
  CHECK(c.regime == Regime::delta_eq_1);
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].lo == Approx(-2.0));
  CHECK(c.intervals[0].multiplicity == 1);
  CHECK(c.intervals[1].lo == Approx(1.0));
  CHECK(c.intervals[1].multiplicity == 2);

  c = classify_reduced(ReducedForm(0, 0));
  CHECK(c.regime == Regime::p_zero_triple);
  REQUIRE(c.count() == 1);
  CHECK(c.intervals[0].multiplicity == 3);

  c = classify_reduced(ReducedForm(0, -8));
  CHECK(c.regime == Regime::p_zero_single);
  CHECK(c.intervals[0].contains(2.0));

  c = classify_reduced(ReducedForm(-6, -9));
  CHECK(c.regime == Regime::delta_lt_0);
  REQUIRE(c.count() == 1);
  CHECK(c.intervals[0].contains(3.0));
}

TEST_CASE("three real roots iff Delta > 0 iff the oracle finds three") {
  std::mt19937_64 rng(test::kSeed + 2);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const double p = -test::log_uniform(rng, 1e-3, 1e3);
    const double q = test::uniform(rng, -1e3, 1e3) * std::pow(-p, 1.5) / 100.0;
    const ReducedForm r(p, q);
    const Discriminant d = discriminant(r);
    const auto c = classify_reduced(r);
    if (d.boundary_snapped) {
      CHECK(c.boundary_snapped);
      continue;
    }
    const bool three = d.delta_cap > 0.0;
    CHECK(three == (c.count() == 3));
    CHECK(three == (*d.delta_tusi > 0.0 && *d.delta_tusi < 1.0));
    // |3 sqrt(3) q / (4 sqrt(-p^3))| < 1/2
    CHECK(three == (std::abs(3.0 * kRt3 * q / (4.0 * std::sqrt(-p * p * p))) < 0.5));
    CHECK(three == (test::oracle_of(r.polynomial()).count() == 3));
    ++checked;
  }
  CHECK(checked > 1900);
}

TEST_CASE("classify_quadratic") {
  auto c = classify_quadratic(QuadraticTusiForm::from_delta(1));
  CHECK(c.regime == Regime::quadratic_double);
  REQUIRE(c.count() == 1);
  CHECK(c.intervals[0].lo == 0.5);
  CHECK(c.intervals[0].multiplicity == 2);

  c = classify_quadratic(QuadraticTusiForm::from_delta(0));
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].lo == 0.0);
  CHECK(c.intervals[1].lo == 1.0);

  c = classify_quadratic(QuadraticTusiForm::from_delta(-3));
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].lo == -0.5);
  CHECK(c.intervals[1].lo == 1.5);

  c = classify_quadratic(QuadraticTusiForm::from_delta(2));
  CHECK(c.regime == Regime::quadratic_none);
  CHECK(c.count() == 0);

  c = classify_quadratic(QuadraticTusiForm(1, 0.25));
  CHECK(c.regime == Regime::quadratic_double);
  c = classify_quadratic(QuadraticTusiForm(3, 2));
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].lo == 1.0);
  CHECK(c.intervals[1].lo == 2.0);
  CHECK(classify_quadratic(QuadraticTusiForm(1, 1)).count() == 0);
}

TEST_CASE("maximizer") {
  auto m = maximizer(2);
  CHECK(m.alpha_star == 0.5);
  CHECK(m.phi_star == 0.25);
  m = maximizer(3);
  CHECK(m.alpha_star == Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(m.phi_star == Approx(4.0 / 27.0).epsilon(1e-15));
  m = maximizer(4);
  CHECK(m.alpha_star == 0.75);
  CHECK(m.phi_star == Approx(27.0 / 256.0).epsilon(1e-15));
  CHECK_THROWS_AS(maximizer(1), InputError);

  // Both evaluation routes agree across the switch-over.
  for (int n : {30, 31, 40}) {
    const double direct = std::pow(n - 1.0, n - 1) / std::pow(double(n), n);
    CHECK(maximizer(n).phi_star == Approx(direct).epsilon(1e-14));
  }
  CHECK(std::isfinite(maximizer(500).phi_star));
  CHECK(maximizer(500).phi_star > 0.0);
}

TEST_CASE("U_n and V_n factorizations") {
  for (int n = 2; n <= 12; ++n) {
    const auto [a_star, phi_star] = maximizer(n);
    CHECK(std::abs(factor_u(n)(a_star)) <= 1e-13);
  }
  for (int n = 2; n <= 8; ++n) {
    const auto [a_star, phi_star] = maximizer(n);
    const Polynomial u = factor_u(n);
    const Polynomial v = factor_v(n);
    CHECK(u.degree() == n - 1);
    CHECK(v.degree() == n - 2);
    for (int i = 0; i <= 1000; ++i) {
      const double a = -2.0 + 4.0 * i / 1000;
      const double lhs = phi_n(n, a) - phi_star;
      const double scale = 1.0 + std::pow(std::abs(a), n);
      REQUIRE(std::abs(lhs - (a_star - a) * u(a)) <= 1e-12 * scale);
      REQUIRE(std::abs(lhs + (a - a_star) * (a - a_star) * v(a)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("classify_generalized") {
  auto c = classify_generalized(GeneralizedTusiForm(4, 2));
  CHECK(c.regime == Regime::even_delta_gt_1);
  CHECK(c.count() == 0);

  c = classify_generalized(GeneralizedTusiForm(5, 0.5));
  CHECK(c.regime == Regime::odd_delta_in_0_1);
  REQUIRE(c.count() == 3);
  CHECK(c.intervals[0].lo == Approx(-0.8));
  CHECK(c.intervals[0].hi == 0.0);
  CHECK(c.intervals[1].hi == Approx(0.8));
  CHECK(c.intervals[2].hi == 1.0);

  c = classify_generalized(GeneralizedTusiForm(3, 1));
  CHECK(c.regime == Regime::odd_delta_eq_1);
  REQUIRE(c.count() == 2);
  CHECK(c.intervals[0].kind == IntervalKind::half_open);
  CHECK(c.intervals[0].lo == Approx(-2.0 / 3.0));
  CHECK(c.intervals[0].contains(-1.0 / 3.0));
  CHECK(c.intervals[1].lo == Approx(2.0 / 3.0));
  CHECK(c.intervals[1].multiplicity == 2);

  c = classify_generalized(GeneralizedTusiForm(4, -1));
  CHECK(c.regime == Regime::even_delta_lt_0);
  CHECK(c.count() == 2);
  c = classify_generalized(GeneralizedTusiForm(6, 0));
  CHECK(c.regime == Regime::any_delta_eq_0);
  CHECK(c.intervals[0].multiplicity == 5);

  CHECK_THROWS_AS(GeneralizedTusiForm(1, 0.5), InputError);
}

TEST_CASE("odd n, delta > 1: the root crosses -alpha* at delta = 2n - 1") {
  // phi_n(-alpha*) = (2n - 1) phi_n*.
  for (int n : {3, 5, 7}) {
    const auto [a_star, phi_star] = maximizer(n);
    CHECK(phi_n(n, -a_star) == Approx((2.0 * n - 1.0) * phi_star).epsilon(1e-13));
    const double turn = 2.0 * n - 1.0;

    auto c = classify_generalized(GeneralizedTusiForm(n, 2.0));
    REQUIRE(c.count() == 1);
    CHECK(c.intervals[0].lo == Approx(-a_star));
    CHECK(c.intervals[0].hi == 0.0);

    c = classify_generalized(GeneralizedTusiForm(n, turn));
    REQUIRE(c.count() == 1);
    CHECK(c.intervals[0].kind == IntervalKind::exact_point);
    CHECK(c.intervals[0].lo == Approx(-a_star));

    c = classify_generalized(GeneralizedTusiForm(n, turn + 3));
    REQUIRE(c.count() == 1);
    CHECK(c.intervals[0].hi == Approx(-a_star));
    check_against_oracle(c, GeneralizedTusiForm(n, turn + 3).polynomial());
  }
}

TEST_CASE("classify_generalized agrees with the oracle") {
  for (int n = 2; n <= 8; ++n) {
    for (double d : {-2.0, -1.0, -0.3, 0.0, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 4.0, 20.0}) {
      CAPTURE(n);
      CAPTURE(d);
      const GeneralizedTusiForm g(n, d);
      check_against_oracle(classify_generalized(g), g.polynomial(), 1e-7);
    }
  }
}

TEST_CASE("bound_tightening") {
  SUBCASE("negative normal form") {
    const NormalForm f(-1, 0.7);
    const RootInterval neg = bounds::negative_root_bracket(f);
    CHECK(neg.lo == Approx(-std::sqrt(2.0)));
    CHECK(neg.hi == 0.0);
    const RootInterval all = bounds::bound_tightening(f);
    CHECK(all.kind == IntervalKind::half_open);
    CHECK(all.lo == Approx(-std::sqrt(2.0)));
    CHECK(all.hi == 1.0);
    for (double r : test::oracle_of(f.polynomial()).roots) CHECK(all.contains(r));
    // Large q' moves the bound past -sqrt 2.
    CHECK(bounds::negative_root_bracket(NormalForm(-1, 4)).lo == Approx(-2.0));
    CHECK_THROWS_AS(bounds::bound_tightening(NormalForm(-1, 0)), PreconditionError);
  }
  SUBCASE("positive normal form") {
    const RootInterval iv = bounds::bound_tightening(NormalForm(1, -2));
    CHECK(iv.lo == 0.0);
    CHECK(iv.hi == 2.0);
    CHECK(bounds::bound_tightening(NormalForm(1, 3)).hi == 0.0);
    CHECK(bounds::bound_tightening(NormalForm(1, 0)).kind == IntervalKind::exact_point);
  }
  SUBCASE("Tusi form") {
    const RootInterval iv = bounds::bound_tightening(TusiForm(2));
    CHECK(iv.lo == Approx(-(1.0 + 8.0 / 27.0)));
    CHECK(iv.hi == Approx(-1.0 / 3.0));
    const auto o = test::oracle_of(TusiForm(2).polynomial());
    REQUIRE(o.count() == 1);
    CHECK(iv.contains(o.roots[0]));
    CHECK_THROWS_AS(bounds::bound_tightening(TusiForm(0.5)), PreconditionError);
  }
}

TEST_CASE("map_classification reverses order for negative scale") {
  const auto c = classify_tusi(TusiForm(0.5));
  const auto m = map_classification(c, AffineMap(-2.0, 1.0));
  REQUIRE(m.count() == 3);
  for (int i = 0; i + 1 < m.count(); ++i) CHECK(m.intervals[i].hi <= m.intervals[i + 1].lo);
  CHECK(m.intervals[0].lo == Approx(-1.0));
  CHECK(m.intervals[2].hi == Approx(1.0 + 2.0 / 3.0));
}
