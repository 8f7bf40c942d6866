#include <doctest.h>

#include <cmath>
#include <vector>

#include "jackson.hpp"
#include "sampling.hpp"

using namespace ellsum;

namespace {

real rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

ParameterSet draw(Rng& rng, int n, int N, Balancing mode) {
  return sample_parameter_set(rng, n, N, mode, Precision{});
}

const Observable kOne{[](std::span<const cplx>) { return cplx{1.0, 0.0}; }, "1"};

}  // namespace

TEST_CASE("expectation of 1 is the lhs sum; of 0 is 0; N=0 picks phi(xi)") {
  Rng rng(151);
  const ParameterSet ps = draw(rng, 2, 2, Balancing::sum_q);
  CHECK(rel(expectation(ps, kOne).value, lhs_sum(ps)) < 1e-12);

  const Observable zero{[](std::span<const cplx>) { return cplx{}; }, "0"};
  CHECK(expectation(ps, zero).value == cplx{});

  const ParameterSet ps0 = draw(rng, 2, 0, Balancing::sum_q);
  const Observable probe{[](std::span<const cplx> z) { return z[0] + z[1]; }, "z1+z2"};
  const std::vector<cplx> xi = base_point(ps0);
  CHECK(rel(expectation(ps0, probe).value, xi[0] + xi[1]) < 1e-12);
}

TEST_CASE("expectation rejects singular observables") {
  Rng rng(157);
  const ParameterSet ps = draw(rng, 1, 1, Balancing::sum_q);
  const Observable bad{
      [](std::span<const cplx>) { return cplx{std::nan(""), 0.0}; }, "nan"};
  CHECK_THROWS_AS(expectation(ps, bad), ObservableSingular);
}

TEST_CASE("f_minus is f_plus with the axis variable inverted") {
  Rng rng(163);
  const ParameterSet ps = draw(rng, 3, 1, Balancing::inv_one);
  std::vector<cplx> z(3);
  for (cplx& v : z) v = rng.ring(0.5, 2.0);
  for (int i = 0; i < 3; ++i) {
    std::vector<cplx> zi = z;
    zi[i] = cplx{1.0, 0.0} / zi[i];
    CHECK(rel(f_minus(ps, z, i), f_plus(ps, zi, i)) < 1e-14);
  }
}

TEST_CASE("vanishing table at the reference points") {
  Rng rng(167);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 1, Balancing::inv_one);
    const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});
    real orbit = 0.0, worst = 0.0;
    for (int s = 0; s <= n; ++s) {
      const auto zeta = reference_point(ip, s);
      for (int i = 0; i < n; ++i) {
        const real fp = std::abs(f_plus(ps, zeta, i));
        const real fm = std::abs(f_minus(ps, zeta, i));
        orbit = std::max({orbit, fp, fm});
        worst = std::max(worst, fm);
        if (i + 1 != s && i + 1 != n) worst = std::max(worst, fp);
      }
    }
    CHECK(worst / orbit < 1e-11);
  }
}

TEST_CASE("the shift ratio is -F+/T(F-)") {
  Rng rng(173);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 1, Balancing::sum_q);
    std::vector<cplx> z(n);
    for (cplx& v : z) v = rng.ring(0.5, 2.0);
    for (int i = 0; i < n; ++i) {
      std::vector<cplx> shifted = z;
      shifted[i] *= ps.nome.q;
      const cplx want = -f_plus(ps, z, i) / f_minus(ps, shifted, i);
      CHECK(rel(phi_shift_ratio(ps, z, i), want) < 1e-12);
    }
  }
}

TEST_CASE("nabla of 0 is 0 and q-Stokes holds for the boundary observables") {
  Rng rng(179);
  const ParameterSet ps = draw(rng, 2, 2, Balancing::inv_one);
  const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});

  const Observable zero{[](std::span<const cplx>) { return cplx{}; }, "0"};
  for (int i = 0; i < 2; ++i)
    CHECK(expectation(ps, nabla(ps, zero, i)).value == cplx{});

  for (int r = 1; r <= 2; ++r)
    for (int axis = 0; axis < 2; ++axis) {
      Observable phi{[&ps, &ip, r, axis](std::span<const cplx> z) {
                       std::vector<cplx> zhat;
                       for (int j = 0; j < 2; ++j)
                         if (j != axis) zhat.push_back(z[j]);
                       InvariantParams sub = ip;
                       sub.n = 1;
                       return f_minus(ps, z, axis) * e_recursive(sub, r - 1, zhat);
                     },
                     "phi_i"};
      const Expectation e = expectation(ps, nabla(ps, phi, axis));
      CHECK(std::abs(e.value) <= 1e-10 * e.abs_sum);
    }
}

TEST_CASE("n=1 N=0 expectation of nabla telescopes to zero via support vanishing") {
  Rng rng(181);
  const ParameterSet ps = draw(rng, 1, 0, Balancing::inv_one);
  // phi_1 = F_1^-; its value at xi carries theta(a_1/a_1) = theta(1) = 0, and
  // the single-step ratio at xi carries theta(a_6 a_1) = theta(q^0) = 0.
  const Observable phi{[&ps](std::span<const cplx> z) { return f_minus(ps, z, 0); },
                       "phi_1"};
  const std::vector<cplx> xi = base_point(ps);
  std::vector<cplx> nearby = xi;
  nearby[0] *= cplx{1.05, 0.0};
  const real ratio_scale = std::abs(phi_shift_ratio(ps, nearby, 0));
  CHECK(std::abs(phi_shift_ratio(ps, xi, 0)) <= 1e-11 * ratio_scale);
  const Expectation e = expectation(ps, nabla(ps, phi, 0));
  const real scale = std::abs(f_plus(ps, nearby, 0)) + std::abs(ps.a[0]);
  CHECK(std::abs(e.value) <= 1e-11 * scale);
}

TEST_CASE("two-term coefficients: closed forms match the direct F+ values") {
  Rng rng(191);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 2, Balancing::inv_one);
    const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});
    for (int r = 1; r <= n; ++r) {
      const TwoTermCoefficients c = two_term_coefficients(ps, AnchorBinding{1, 2}, r);
      const cplx crr_direct = f_plus(ps, reference_point(ip, r), r - 1);
      const cplx crr1_direct = f_plus(ps, reference_point(ip, r - 1), n - 1);
      CHECK(rel(c.c_rr, crr_direct) < 1e-12);
      CHECK(rel(c.c_rr1, crr1_direct) < 1e-12);
      CHECK(rel(c.c_r, crr1_direct / crr_direct) < 1e-12);
    }
  }
}

TEST_CASE("h_r expands in E_r and E_{r-1} with the F+ coefficients") {
  Rng rng(193);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 1, Balancing::inv_one);
    const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});
    for (int r = 1; r <= n; ++r) {
      const TwoTermCoefficients c = two_term_coefficients(ps, AnchorBinding{1, 2}, r);
      for (int trial = 0; trial < 50; ++trial) {
        // keep clear of the removable F poles along z_i^2 = 1, z_i = z_j^{+-1}
        std::vector<cplx> z(n);
        for (;;) {
          for (cplx& v : z) v = rng.ring(0.5, 2.0);
          real lo = 1e300;
          for (int a = 0; a < n; ++a) {
            lo = std::min(lo, std::abs(theta(z[a] * z[a], ps.nome.p)));
            for (int b = a + 1; b < n; ++b)
              lo = std::min({lo, std::abs(theta(z[a] * z[b], ps.nome.p)),
                             std::abs(theta(z[a] / z[b], ps.nome.p))});
          }
          if (lo >= 0.05) break;
        }
        const std::vector<cplx> terms = h_r_terms(ps, ip, r, z);
        cplx lhs{};
        real scale = 0.0;
        for (const cplx& term : terms) {
          lhs += term;
          scale = std::max(scale, std::abs(term));
        }
        const cplx er = c.c_rr * e_recursive(ip, r, z);
        const cplx er1 = c.c_rr1 * e_recursive(ip, r - 1, z);
        scale = std::max({scale, std::abs(er), std::abs(er1)});
        // normalized by the largest summed term: the expansion is a
        // cancellation identity, like <h_r> = 0
        CHECK(std::abs(lhs - (er + er1)) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("<h_r> cancels to zero") {
  Rng rng(197);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 2, Balancing::inv_one);
    const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});
    for (int r = 1; r <= n; ++r) {
      Observable obs{
          [&ps, &ip, r](std::span<const cplx> z) { return h_r(ps, ip, r, z); }, "h_r"};
      const Expectation e = expectation(ps, obs);
      CHECK(std::abs(e.value) <= 1e-10 * e.max_abs_term);
    }
  }
}

TEST_CASE("two-term relation and coefficient consistency") {
  Rng rng(199);
  for (int n = 1; n <= 3; ++n)
    for (int N = 1; N <= 2; ++N) {
      const ParameterSet ps = draw(rng, n, N, Balancing::inv_one);
      for (int r = 1; r <= n; ++r) {
        const TwoTermReport rep = two_term_check(ps, AnchorBinding{1, 2}, r);
        CHECK(rep.residual < 1e-9);
        CHECK(rep.coeff_residual < 1e-12);
      }
    }
}

TEST_CASE("n=1 N=0 degenerate case: h_1 vanishes pointwise at xi") {
  Rng rng(211);
  const ParameterSet ps = draw(rng, 1, 0, Balancing::inv_one);
  const std::vector<cplx> xi = base_point(ps);
  // both boundary terms carry a theta(1) = 0 factor under a_1 a_6 = 1
  const real fp = std::abs(f_plus(ps, xi, 0));
  const real fm = std::abs(f_minus(ps, xi, 0));
  std::vector<cplx> nearby = xi;
  nearby[0] *= cplx{1.05, 0.0};
  const real scale = std::abs(f_plus(ps, nearby, 0));
  CHECK(fp / scale < 1e-11);
  CHECK(fm / scale < 1e-11);
}

TEST_CASE("En-E0 corollary and the two-term chain") {
  Rng rng(223);
  for (int n = 1; n <= 3; ++n) {
    const ParameterSet ps = draw(rng, n, 2, Balancing::inv_one);
    const EnE0Report rep = en_e0_check(ps, AnchorBinding{1, 2});
    CHECK(rep.residual < 1e-9);
    CHECK(rep.chain_residual < 1e-10);
  }
  // n = 1: the corollary factor degenerates to the single two-term ratio
  const ParameterSet ps1 = draw(rng, 1, 1, Balancing::inv_one);
  const EnE0Report rep1 = en_e0_check(ps1, AnchorBinding{1, 2});
  const TwoTermCoefficients c = two_term_coefficients(ps1, AnchorBinding{1, 2}, 1);
  CHECK(rel(rep1.corollary_factor, -c.c_r) < 1e-12);
}

TEST_CASE("contiguity recursion in (a_5, a_6)") {
  Rng rng(227);
  SUBCASE("n=1 N=1 endpoint reduces to 1 and the step factor is the value") {
    const ParameterSet ps = draw(rng, 1, 1, Balancing::sum_q);
    const JRecursionReport rep = j_recursion_check(ps);
    CHECK(rep.endpoint_residual <= 1e-12);
    CHECK(std::abs(rep.j_shifted - cplx{1.0, 0.0}) <= 1e-12);
    CHECK(rel(rep.j, rep.step_factor) < 1e-9);
    CHECK(rep.step_residual < 1e-9);
  }
  SUBCASE("n=2 N=2 residuals") {
    const ParameterSet ps = draw(rng, 2, 2, Balancing::sum_q);
    const JRecursionReport rep = j_recursion_check(ps);
    CHECK(rep.step_residual < 1e-9);
    CHECK(rep.telescope_residual < 1e-9);
    CHECK(rep.endpoint_residual <= 1e-12);
  }
  SUBCASE("requires N >= 1") {
    const ParameterSet ps = draw(rng, 1, 0, Balancing::sum_q);
    CHECK_THROWS_AS(j_recursion_check(ps), RangeError);
  }
}

TEST_CASE("parameter-shift identities for J(a_5, q a_6) and J(q a_5, a_6)") {
  Rng rng(229);
  for (int n = 1; n <= 2; ++n) {
    const ParameterSet ps = draw(rng, n, 2, Balancing::sum_q);
    const JShiftReport rep = j_shift_check(ps);
    CHECK(rep.residual_en < 1e-9);
    CHECK(rep.residual_e0 < 1e-9);
  }
}

TEST_CASE("h_r stays bounded approaching z_1 = z_2 and z_1 = +-1") {
  // Individual F_i^+- carry simple poles on these divisors; boundedness of
  // the sum is the testable trace of holomorphy. A pole would grow ~1000x
  // over the three probed decades; allow 100x.
  Rng rng(233);
  const ParameterSet ps = draw(rng, 2, 1, Balancing::inv_one);
  const InvariantParams ip = bind_anchors(ps, AnchorBinding{1, 2});
  const cplx z2 = rng.ring(0.5, 2.0);
  for (int r = 1; r <= 2; ++r) {
    for (const cplx target : {z2, cplx{1.0, 0.0}, cplx{-1.0, 0.0}}) {
      real lo = 1e300, hi = 0.0;
      for (int k = 2; k <= 5; ++k) {
        const real d = std::pow(10.0, -k);
        const std::vector<cplx> z{target * (1.0 + d), z2};
        const real mag = std::abs(h_r(ps, ip, r, z));
        lo = std::min(lo, mag);
        hi = std::max(hi, mag);
      }
      CHECK(hi / lo < 100.0);
    }
  }
}
