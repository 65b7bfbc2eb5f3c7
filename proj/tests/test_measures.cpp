#include <cmath>

#include <doctest.h>

#include "entorder/errors.hpp"
#include "entorder/measures.hpp"
#include "entorder/sampler.hpp"
#include "test_helpers.hpp"

using namespace entorder;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kKappa = (kSqrt2 - 1.0) / 2.0;

double werner_closed(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

double horodecki_neg_closed(double p) {
  const double r = 1.0 - p;
  return std::sqrt(r * r + p * p) - r;
}

double mixture_neg_closed(double p, double q) {
  return std::sqrt(1.0 - 2.0 * p * (1.0 - p) * (1.0 - q)) - (1.0 - p);
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("werner states match the closed form") {
  for (int i = 0; i <= 40; ++i) {
    const double p = i / 40.0;
    const DensityMatrix rho = werner(p);
    CHECK(std::abs(concurrence(rho) - werner_closed(p)) < 1e-12);
    CHECK(std::abs(negativity(rho) - werner_closed(p)) < 1e-12);
  }
}

TEST_CASE("horodecki states match the closed form") {
  for (int i = 0; i <= 40; ++i) {
    const double p = i / 40.0;
    const DensityMatrix rho = horodecki(p);
    CHECK(std::abs(concurrence(rho) - p) < 1e-12);
    CHECK(std::abs(negativity(rho) - horodecki_neg_closed(p)) < 1e-12);
  }
  // Frozen reference values.
  CHECK(negativity(horodecki(0.1)) ==
        doctest::Approx(0.005538513813741663).epsilon(1e-10));
  CHECK(negativity(horodecki(0.5)) ==
        doctest::Approx(0.207106781186547524).epsilon(1e-12));
  CHECK(negativity(horodecki(0.9)) ==
        doctest::Approx(0.805538513813741663).epsilon(1e-12));
}

TEST_CASE("mixtures match the closed form") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const double p = i / 10.0;
      const double q = j / 10.0;
      const DensityMatrix rho = mixture(p, q);
      CHECK(std::abs(concurrence(rho) - p) < 1e-11);
      CHECK(std::abs(negativity(rho) - mixture_neg_closed(p, q)) < 1e-11);
    }
  }
  CHECK(negativity(mixture(0.5, 0.5)) ==
        doctest::Approx(0.366025403784438647).epsilon(1e-12));
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.25) ==
        doctest::Approx(0.811278124459132843).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.1), ParamOutOfRange);
  CHECK_THROWS_AS(binary_entropy(1.1), ParamOutOfRange);
}

TEST_CASE("entanglement of formation from concurrence") {
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eof_from_concurrence(0.5) ==
        doctest::Approx(0.354578902665269884).epsilon(1e-14));
  CHECK_THROWS_AS(eof_from_concurrence(1.5), ParamOutOfRange);

  // Strictly increasing on (0, 1).
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double value = eof_from_concurrence(i / 50.0);
    CHECK(value > prev);
    prev = value;
  }
}

TEST_CASE("pure-state shortcut equals the generic path") {
  const double params[] = {0.0, 0.1, 0.25, 0.5, 0.7, 0.99, 1.0};
  for (const double p : params) {
    const PureState psi = pure_theta(p);
    const double direct = pure_measures(psi);
    CHECK(direct == doctest::Approx(2.0 * std::sqrt(p * (1.0 - p)))
                        .epsilon(1e-12));
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    CHECK(std::abs(concurrence(rho) - direct) < 1e-10);
    CHECK(std::abs(negativity(rho) - direct) < 1e-10);
  }
  CHECK(pure_measures(bell_singlet()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("measure_all joins the pieces consistently") {
  const MeasureSet top = measure_all(werner(1.0));
  CHECK(top.concurrence == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(top.negativity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(top.log_negativity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(top.eof == doctest::Approx(1.0).epsilon(1e-12));

  const MeasureSet bottom = measure_all(werner(0.0));
  CHECK(bottom.concurrence == 0.0);
  CHECK(bottom.negativity == 0.0);
  CHECK(bottom.log_negativity == 0.0);
  CHECK(bottom.eof == 0.0);

  const MeasureSet x = measure_all(horodecki(0.5));
  CHECK(x.log_negativity ==
        doctest::Approx(0.271553303163611973).epsilon(1e-12));
  CHECK(x.eof == doctest::Approx(0.354578902665269884).epsilon(1e-12));
  CHECK(x.negativity <= x.concurrence + 1e-12);
}

TEST_CASE("concurrence lambdas are descending and reproduce werner") {
  const auto l = concurrence_lambdas(werner(0.8));
  CHECK(l[0] >= l[1]);
  CHECK(l[1] >= l[2]);
  CHECK(l[2] >= l[3]);
  // Closed form: lambdas of the Werner state are (1+3p)/4 and (1-p)/4 thrice.
  CHECK(l[0] == doctest::Approx(0.85).epsilon(1e-10));
  CHECK(l[1] == doctest::Approx(0.05).epsilon(1e-9));
  CHECK(l[0] - l[1] - l[2] - l[3] == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("local unitaries leave both measures unchanged") {
  Xoshiro256pp rng(77001);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho = random_density(rng, 1 + trial % 4);
    const CMat4 u =
        tensor(test_support::random_su2(rng), test_support::random_su2(rng));
    const DensityMatrix rotated(u * rho.matrix() * dagger(u));
    CHECK(std::abs(concurrence(rotated) - concurrence(rho)) < 1e-9);
    CHECK(std::abs(negativity(rotated) - negativity(rho)) < 1e-9);
  }
}

}  // TEST_SUITE
