#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "pmech/superpoly.hpp"

using namespace pmech;

namespace {

VarTablePtr table_1d() {
  return VarTable::make({{"q", "p", VarParity::Even}, {"theta", "pi", VarParity::Odd}});
}

SuperPolynomial v(const VarTablePtr& t, const char* name) {
  return SuperPolynomial::variable(t, name);
}

}  // namespace

TEST_CASE("odd generators square to zero") {
  auto t = table_1d();
  CHECK((v(t, "theta") * v(t, "theta")).is_zero());
  CHECK((v(t, "pi") * v(t, "pi")).is_zero());
}

TEST_CASE("odd generators anticommute") {
  auto t = table_1d();
  SuperPolynomial tp = v(t, "theta") * v(t, "pi");
  SuperPolynomial pt = v(t, "pi") * v(t, "theta");
  CHECK((tp + pt).is_zero());
  CHECK(tp.max_abs_coeff() == doctest::Approx(1.0));
}

TEST_CASE("mixed product expands over all cross terms") {
  auto t = table_1d();
  SuperPolynomial prod = (v(t, "q") + v(t, "theta")) * (v(t, "p") + v(t, "pi"));
  SuperPolynomial expected = v(t, "q") * v(t, "p") + v(t, "q") * v(t, "pi") +
                             v(t, "theta") * v(t, "p") + v(t, "theta") * v(t, "pi");
  CHECK((prod - expected).is_zero());
  CHECK(prod.terms().size() == 4);
}

TEST_CASE("tables must match") {
  auto a = table_1d();
  auto b = VarTable::make({{"x", "px", VarParity::Even}, {"theta", "pi", VarParity::Odd}});
  CHECK_THROWS_AS((void)(v(a, "q") * v(b, "x")), std::invalid_argument);
}

TEST_CASE("parity classification") {
  auto t = table_1d();
  CHECK(parity_of(v(t, "q") * v(t, "q")) == ParityClass::Even);
  CHECK(parity_of(v(t, "theta") * v(t, "pi")) == ParityClass::Even);
  CHECK(parity_of(v(t, "theta")) == ParityClass::Odd);
  CHECK(parity_of(v(t, "q") + v(t, "theta")) == ParityClass::Mixed);
  CHECK(parity_of(SuperPolynomial::zero(t)) == ParityClass::Even);
}

TEST_CASE("left and right odd derivatives differ by the crossing sign") {
  auto t = table_1d();
  SuperPolynomial tp = v(t, "theta") * v(t, "pi");
  const int theta = t->index_of("theta");
  CHECK((tp.derivative_right(theta) + v(t, "pi")).is_zero());
  CHECK((tp.derivative_left(theta) - v(t, "pi")).is_zero());
  // second derivative in the same odd variable vanishes
  CHECK(tp.derivative_left(theta).derivative_left(theta).is_zero());
}

TEST_CASE("even derivative is the ordinary one") {
  auto t = table_1d();
  const int q = t->index_of("q");
  SuperPolynomial q2 = v(t, "q") * v(t, "q");
  CHECK((q2.derivative_left(q) - 2.0 * v(t, "q")).is_zero());
  CHECK((q2.derivative_right(q) - 2.0 * v(t, "q")).is_zero());
}

TEST_CASE("derivative of an unknown variable index throws") {
  auto t = table_1d();
  CHECK_THROWS_AS((void)v(t, "q").derivative_left(17), std::invalid_argument);
  CHECK_THROWS_AS((void)SuperPolynomial::variable(t, "nope"), std::invalid_argument);
}

TEST_CASE("flavor conversion carries the parity-dependent sign") {
  auto t = table_1d();
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    const bool odd_f = it % 2;
    SuperPolynomial f = testing::random_homogeneous(t, odd_f, 3, rng);
    for (int vi = 0; vi < t->size(); ++vi) {
      const int dv = t->info(vi).parity == VarParity::Odd;
      const int df = odd_f;
      const double sign = (dv * (dv + df)) % 2 ? -1.0 : 1.0;
      SuperPolynomial defect = f.derivative_left(vi) - sign * f.derivative_right(vi);
      CHECK(defect.max_abs_coeff() < 1e-12);
    }
  }
}

TEST_CASE("graded commutation of homogeneous products") {
  auto t = table_1d();
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    const bool da = it & 1, db = (it >> 1) & 1;
    SuperPolynomial a = testing::random_homogeneous(t, da, 3, rng);
    SuperPolynomial b = testing::random_homogeneous(t, db, 3, rng);
    const double sign = (da && db) ? -1.0 : 1.0;
    CHECK((a * b - sign * (b * a)).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("multiplication is associative") {
  auto t = table_1d();
  std::mt19937 rng(13);
  for (int it = 0; it < 100; ++it) {
    SuperPolynomial a = testing::random_homogeneous(t, it & 1, 3, rng);
    SuperPolynomial b = testing::random_homogeneous(t, (it >> 1) & 1, 3, rng);
    SuperPolynomial c = testing::random_homogeneous(t, (it >> 2) & 1, 3, rng);
    CHECK(((a * b) * c - a * (b * c)).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("left derivative obeys the graded Leibniz rule") {
  auto t = table_1d();
  std::mt19937 rng(17);
  for (int it = 0; it < 200; ++it) {
    const bool da = it & 1, db = (it >> 1) & 1;
    SuperPolynomial a = testing::random_homogeneous(t, da, 3, rng);
    SuperPolynomial b = testing::random_homogeneous(t, db, 3, rng);
    for (int vi = 0; vi < t->size(); ++vi) {
      const int dv = t->info(vi).parity == VarParity::Odd;
      const double sign = (dv && da) ? -1.0 : 1.0;
      SuperPolynomial defect = (a * b).derivative_left(vi) - a.derivative_left(vi) * b -
                               sign * (a * b.derivative_left(vi));
      CHECK(defect.max_abs_coeff() < 1e-12);
    }
  }
}

TEST_CASE("independent sign oracle agrees on 1000 random products") {
  // a larger table exercises longer odd factor chains
  auto t = VarTable::make({{"q1", "p1", VarParity::Even},
                           {"q2", "p2", VarParity::Even},
                           {"theta1", "pi1", VarParity::Odd},
                           {"theta2", "pi2", VarParity::Odd},
                           {"theta3", "pi3", VarParity::Odd}});
  std::mt19937 rng(23);
  for (int it = 0; it < 1000; ++it) {
    testing::RawMonomial a = testing::random_raw(t, rng, 2);
    testing::RawMonomial b = testing::random_raw(t, rng, 2);
    SuperPolynomial via_impl = testing::to_poly(a, t) * testing::to_poly(b, t);
    SuperPolynomial via_oracle = testing::oracle_product(a, b, t);
    CHECK((via_impl - via_oracle).max_abs_coeff() < 1e-12);
  }
}

TEST_CASE("pruning drops sub-threshold coefficients") {
  auto t = table_1d();
  SuperPolynomial tiny = 1e-16 * v(t, "q");
  CHECK((v(t, "q") + tiny - v(t, "q")).is_zero());
}

TEST_CASE("printing is canonical and round-readable") {
  auto t = table_1d();
  SuperPolynomial h = 0.5 * (v(t, "p") * v(t, "p") + v(t, "q") * v(t, "q")) +
                      Complex{0.0, 1.0} * (v(t, "pi") * v(t, "theta"));
  CHECK(h.str() == "0.5*p^2 + 0.5*q^2 - i*theta*pi");
  CHECK(SuperPolynomial::zero(t).str() == "0");
}
