#include <doctest.h>

#include <cmath>

#include "kernel.hpp"
#include "sampling.hpp"

using namespace ellsum;

namespace {

// Independent oracle: plain partial product with a fixed factor count.
cplx qpoch_brute(cplx z, cplx p, int terms) {
  cplx acc{1.0, 0.0};
  cplx w = z;
  for (int i = 0; i < terms; ++i) {
    acc *= cplx{1.0, 0.0} - w;
    w *= p;
  }
  return acc;
}

cplx theta_brute(cplx z, cplx p, int terms) {
  return qpoch_brute(z, p, terms) * qpoch_brute(p / z, p, terms);
}

real rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("qpochhammer_inf basics") {
  CHECK(qpochhammer_inf({0.7, 0.0}, {0.0, 0.0}).real() == doctest::Approx(0.3));
  CHECK(qpochhammer_inf({0.0, 0.0}, {0.5, 0.0}) == cplx{1.0, 0.0});

  // brute-force partial product at quadruple the requested term count
  const cplx z{0.5, 0.0}, p{0.1, 0.0};
  CHECK(rel(qpochhammer_inf(z, p), qpoch_brute(z, p, 200)) < 1e-14);

  CHECK_THROWS_AS(qpochhammer_inf({0.5, 0.0}, {1.0, 0.0}), DomainError);
  Precision tight;
  tight.max_terms = 5;
  CHECK_THROWS_AS(qpochhammer_inf({0.5, 0.0}, {0.9, 0.0}, tight), TruncationFailure);
}

TEST_CASE("qpochhammer_inf accuracy up to |p| = 0.9") {
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const cplx z = rng.ring(0.3, 2.0);
    const cplx p = rng.ring(0.1, 0.9);
    CHECK(rel(qpochhammer_inf(z, p), qpoch_brute(z, p, 2000)) < 1e-13);
  }
}

TEST_CASE("theta basics") {
  CHECK(theta({0.7, 0.0}, {0.0, 0.0}).real() == doctest::Approx(0.3));
  CHECK(theta({1.0, 0.0}, {0.3, 0.0}) == cplx{0.0, 0.0});  // (1-z) factor vanishes
  const cplx z{2.0, 1.0}, p{0.2, 0.1};
  CHECK(rel(theta(z, p), theta_brute(z, p, 500)) < 1e-13);
  CHECK_THROWS_AS(theta({0.0, 0.0}, {0.2, 0.0}), DomainError);
  CHECK_THROWS_AS(theta({0.5, 0.0}, {1.2, 0.0}), DomainError);
}

TEST_CASE("theta quasi-periodicity and inversion") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const cplx p = rng.ring(0.05, 0.3);
    const cplx z = rng.ring(0.5, 2.0);
    CHECK(rel(theta(p * z, p), -theta(z, p) / z) < 1e-11);
    CHECK(rel(theta(cplx{1.0, 0.0} / z, p), -theta(z, p) / z) < 1e-11);
  }
}

TEST_CASE("theta_factorial basics and inversion convention") {
  const Nome nome{{0.2, 0.0}, {0.3, 0.0}};
  CHECK(theta_factorial({0.4, 0.0}, 0, nome) == cplx{1.0, 0.0});
  CHECK(theta_factorial({0.4, 0.0}, 1, nome) == theta({0.4, 0.0}, {0.2, 0.0}));

  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const cplx z = rng.ring(0.5, 2.0);
    const Nome nm{rng.ring(0.05, 0.3), rng.ring(0.05, 0.3)};
    // theta(z)_{-1} * theta(q^{-1} z) = 1, forced by the convention
    const cplx lhs = theta_factorial(z, -1, nm) * theta(z / nm.q, nm.p);
    CHECK(std::abs(lhs - cplx{1.0, 0.0}) < 1e-13);
  }
}

TEST_CASE("theta_factorial telescoping on both signs") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const cplx z = rng.ring(0.5, 2.0);
    const Nome nm{rng.ring(0.05, 0.3), rng.ring(0.05, 0.3)};
    for (long k = -3; k <= 3; ++k) {
      const cplx lhs = theta_factorial(z, k + 1, nm);
      const cplx rhs = theta_factorial(z, k, nm) * theta(ipow(nm.q, k) * z, nm.p);
      CHECK(rel(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("theta_factorial near-pole guard") {
  // Denominator theta(q^{-1} z) with z = q makes the k < 0 branch divide by
  // theta(1) = 0.
  const Nome nome{{0.2, 0.0}, {0.3, 0.0}};
  CHECK_THROWS_AS(theta_factorial(nome.q, -1, nome), NearPole);
}

TEST_CASE("elliptic gamma identities") {
  const Nome nome{{0.2, 0.0}, {0.25, 0.0}};
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    const cplx z = rng.ring(0.5, 2.0);
    CHECK(rel(elliptic_gamma(nome.q * z, nome) / elliptic_gamma(z, nome),
              theta(z, nome.p)) < 1e-10);
    const cplx prod = elliptic_gamma(z, nome) *
                      elliptic_gamma(nome.p * nome.q / z, nome);
    CHECK(std::abs(prod - cplx{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("elliptic gamma ladder") {
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    const Nome nm{rng.ring(0.05, 0.3), rng.ring(0.05, 0.3)};
    const cplx z = rng.ring(0.5, 2.0);
    const cplx gz = elliptic_gamma(z, nm);
    for (long k = 0; k <= 4; ++k) {
      CHECK(rel(elliptic_gamma(ipow(nm.q, k) * z, nm) / gz, theta_factorial(z, k, nm)) <
            1e-11);
    }
  }
}

TEST_CASE("elliptic gamma p = 0 collapse") {
  const Nome nome{{0.0, 0.0}, {0.25, 0.0}};
  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    const cplx z = rng.ring(0.5, 2.0);
    CHECK(rel(elliptic_gamma(z, nome), cplx{1.0, 0.0} / qpochhammer_inf(z, nome.q)) <
          1e-12);
  }
}

TEST_CASE("Riemann relation") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const cplx p = rng.ring(0.05, 0.3);
    const cplx x = rng.ring(0.5, 2.0), y = rng.ring(0.5, 2.0);
    const cplx u = rng.ring(0.5, 2.0), v = rng.ring(0.5, 2.0);
    const cplx lhs = theta_pm(x, u, p) * theta_pm(y, v, p) -
                     theta_pm(x, v, p) * theta_pm(y, u, p);
    const cplx rhs = y / u * theta_pm(x, y, p) * theta_pm(u, v, p);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-11);
  }
}

TEST_CASE("Riemann relation vanishes identically at u = v") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    const cplx p = rng.ring(0.05, 0.3);
    const cplx x = rng.ring(0.5, 2.0), y = rng.ring(0.5, 2.0);
    const cplx u = rng.ring(0.5, 2.0);
    const cplx lhs = theta_pm(x, u, p) * theta_pm(y, u, p) -
                     theta_pm(x, u, p) * theta_pm(y, u, p);
    const cplx rhs = y / u * theta_pm(x, y, p) * theta(u * u, p) * theta(u / u, p);
    const real scale = std::abs(y / u * theta_pm(x, y, p) * theta(u * u, p));
    CHECK(std::abs(lhs) / scale < 1e-12);
    CHECK(std::abs(rhs) / scale < 1e-12);
  }
}

TEST_CASE("ipow") {
  CHECK(ipow({2.0, 0.0}, 10) == cplx{1024.0, 0.0});
  CHECK(ipow({2.0, 0.0}, 0) == cplx{1.0, 0.0});
  CHECK(std::abs(ipow({2.0, 0.0}, -2) - cplx{0.25, 0.0}) < 1e-15);
}
