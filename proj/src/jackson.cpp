#include "jackson.hpp"

#include <cmath>

namespace ellsum {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// E_{r}^{(m)} for a possibly reduced rank m <= ip.n (m = 0 bottoms out).
cplx e_rank(const InvariantParams& ip, int m, int r, std::span<const cplx> z,
            const Precision& prec) {
  if (r < 0 || r > m) return cplx{};
  if (m == 0) return cplx{1.0, 0.0};
  InvariantParams sub = ip;
  sub.n = m;
  return e_recursive(sub, r, z, prec);
}

std::array<int, 4> complement_of(AnchorBinding anchors) {
  std::array<int, 4> others{};
  int w = 0;
  for (int m = 1; m <= 6; ++m)
    if (m != anchors.first && m != anchors.second) others[w++] = m;
  if (w != 4 || anchors.first == anchors.second)
    throw RangeError("anchor binding must name two distinct indices in 1..6");
  return others;
}

ParameterSet with_param_shift(const ParameterSet& ps, int idx0, cplx factor, int dN) {
  ParameterSet out = ps;
  out.a[idx0] *= factor;
  out.N = ps.N + dN;
  if (out.N < 0) throw RangeError("parameter shift drives truncation level negative");
  out.balancing = Balancing::none;
  out.truncation_satisfied =
      std::abs(out.truncation_product() - cplx{1.0, 0.0}) <= 1e-10;
  return out;
}

real rel_pair(cplx x, cplx y) {
  const real scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

}  // namespace

Expectation expectation(const ParameterSet& ps, const Observable& phi,
                        const Precision& prec, SumMode mode) {
  if (!ps.truncation_satisfied)
    throw DomainError("expectation: truncation condition not satisfied");
  const std::vector<cplx> xi = base_point(ps);
  std::vector<cplx> z(ps.n);
  Expectation out;
  cplx comp{};
  for (SimplexIter it(ps.n, ps.N); it.valid(); it.advance()) {
    const std::vector<int>& nu = it.nu();
    for (int i = 0; i < ps.n; ++i) z[i] = xi[i] * ipow(ps.nome.q, nu[i]);
    const cplx pv = phi.eval(z);
    if (!finite(pv))
      throw ObservableSingular("expectation: observable '" + phi.label +
                               "' non-finite at a lattice point");
    const cplx term = pv * lattice_weight(ps, xi, nu, prec);
    const real mag = std::abs(term);
    out.max_abs_term = std::max(out.max_abs_term, mag);
    out.abs_sum += mag;
    if (mode == SumMode::compensated) {
      const cplx y = term - comp;
      const cplx s = out.value + y;
      comp = (s - out.value) - y;
      out.value = s;
    } else {
      out.value += term;
    }
  }
  return out;
}

cplx f_plus(const ParameterSet& ps, std::span<const cplx> z, int axis,
            const Precision& prec) {
  const int n = ps.n;
  if (axis < 0 || axis >= n) throw RangeError("f_plus: axis out of range");
  if (static_cast<int>(z.size()) != n) throw RangeError("f_plus: dimension mismatch");
  const cplx p = ps.nome.p;
  const cplx zi = z[axis];
  RatioAcc acc(prec.pole_guard);
  for (int m = 0; m < 6; ++m) acc.num_factor(theta(ps.a[m] * zi, p, prec));
  acc.scalar(cplx{1.0, 0.0} / (zi * zi));
  acc.den_factor(theta(zi * zi, p, prec));
  for (int j = 0; j < n; ++j) {
    if (j == axis) continue;
    acc.num_factor(theta(ps.t * zi * z[j], p, prec));
    acc.num_factor(theta(ps.t * zi / z[j], p, prec));
    acc.den_factor(theta(zi * z[j], p, prec));
    acc.den_factor(theta(zi / z[j], p, prec));
  }
  return acc.result();
}

cplx f_minus(const ParameterSet& ps, std::span<const cplx> z, int axis,
             const Precision& prec) {
  std::vector<cplx> zz(z.begin(), z.end());
  zz[axis] = cplx{1.0, 0.0} / zz[axis];
  return f_plus(ps, zz, axis, prec);
}

Observable nabla(const ParameterSet& ps, Observable phi, int axis, const Precision& prec) {
  auto inner = phi.eval;
  const std::string label = "nabla_" + std::to_string(axis + 1) + "(" + phi.label + ")";
  auto eval = [ps, inner, axis, prec](std::span<const cplx> z) -> cplx {
    const cplx here = inner(z);
    const cplx ratio = phi_shift_ratio(ps, z, axis, prec);
    if (ratio == cplx{}) return here;  // upper support boundary
    std::vector<cplx> shifted(z.begin(), z.end());
    shifted[axis] *= ps.nome.q;
    return here - ratio * inner(shifted);
  };
  return Observable{eval, label};
}

InvariantParams bind_anchors(const ParameterSet& ps, AnchorBinding anchors,
                             const Precision& prec) {
  complement_of(anchors);  // validates the binding
  return make_invariant_params(ps.a[anchors.first - 1], ps.a[anchors.second - 1],
                               ps.t, ps.nome.p, ps.n, prec);
}

TwoTermCoefficients two_term_coefficients(const ParameterSet& ps, AnchorBinding anchors,
                                          int r, const Precision& prec) {
  const int n = ps.n;
  if (r < 1 || r > n) throw RangeError("two_term_coefficients: r must lie in [1, n]");
  const std::array<int, 4> others = complement_of(anchors);
  const cplx A = ps.a[anchors.first - 1];
  const cplx B = ps.a[anchors.second - 1];
  const cplx t = ps.t;
  const cplx p = ps.nome.p;

  TwoTermCoefficients out;
  {
    RatioAcc acc(prec.pole_guard);
    acc.num_factor(theta(ipow(t, r), p, prec));
    acc.num_factor(theta(A * B * ipow(t, n - 1), p, prec));
    acc.num_factor(theta(A / B * ipow(t, r), p, prec));
    acc.scalar(cplx{1.0, 0.0} / ipow(A * ipow(t, r - 1), 2));
    acc.den_factor(theta(t, p, prec));
    acc.den_factor(theta(A / B * ipow(t, 2 * r - n), p, prec));
    for (int m : others) acc.num_factor(theta(ps.a[m - 1] * A * ipow(t, r - 1), p, prec));
    out.c_rr = acc.result();
  }
  {
    RatioAcc acc(prec.pole_guard);
    acc.num_factor(theta(ipow(t, n - r + 1), p, prec));
    acc.num_factor(theta(A * B * ipow(t, n - 1), p, prec));
    acc.num_factor(theta(B / A * ipow(t, n - r + 1), p, prec));
    acc.scalar(cplx{1.0, 0.0} / ipow(B * ipow(t, n - r), 2));
    acc.den_factor(theta(t, p, prec));
    acc.den_factor(theta(B / A * ipow(t, n - 2 * r + 2), p, prec));
    for (int m : others) acc.num_factor(theta(ps.a[m - 1] * B * ipow(t, n - r), p, prec));
    out.c_rr1 = acc.result();
  }
  {
    RatioAcc acc(prec.pole_guard);
    acc.scalar(ipow(A, 2) * ipow(t, 2L * (r - 1)) / (ipow(B, 2) * ipow(t, 2L * (n - r))));
    acc.num_factor(theta(ipow(t, n - r + 1), p, prec));
    acc.num_factor(theta(B / A * ipow(t, n - r + 1), p, prec));
    acc.num_factor(theta(A / B * ipow(t, 2 * r - n), p, prec));
    acc.den_factor(theta(ipow(t, r), p, prec));
    acc.den_factor(theta(B / A * ipow(t, n - 2 * r + 2), p, prec));
    acc.den_factor(theta(A / B * ipow(t, r), p, prec));
    for (int m : others) {
      acc.num_factor(theta(ps.a[m - 1] * B * ipow(t, n - r), p, prec));
      acc.den_factor(theta(ps.a[m - 1] * A * ipow(t, r - 1), p, prec));
    }
    out.c_r = acc.result();
  }
  return out;
}

std::vector<cplx> h_r_terms(const ParameterSet& ps, const InvariantParams& ip, int r,
                            std::span<const cplx> z, const Precision& prec) {
  const int n = ps.n;
  if (r < 1 || r > n) throw RangeError("h_r: r must lie in [1, n]");
  if (static_cast<int>(z.size()) != n) throw RangeError("h_r: dimension mismatch");
  std::vector<cplx> terms(n);
  std::vector<cplx> zhat(n - 1);
  for (int i = 0; i < n; ++i) {
    int w = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) zhat[w++] = z[j];
    const cplx boundary = f_minus(ps, z, i, prec) + f_plus(ps, z, i, prec);
    terms[i] = boundary * e_rank(ip, n - 1, r - 1, zhat, prec);
  }
  return terms;
}

cplx h_r(const ParameterSet& ps, const InvariantParams& ip, int r,
         std::span<const cplx> z, const Precision& prec) {
  cplx total{};
  for (const cplx& term : h_r_terms(ps, ip, r, z, prec)) total += term;
  return total;
}

TwoTermReport two_term_check(const ParameterSet& ps, AnchorBinding anchors, int r,
                             const Precision& prec) {
  const InvariantParams ip = bind_anchors(ps, anchors, prec);
  TwoTermReport out;
  out.coeff = two_term_coefficients(ps, anchors, r, prec);

  auto e_obs = [&](int s) {
    return Observable{[ip, s, prec](std::span<const cplx> z) {
                        return e_recursive(ip, s, z, prec);
                      },
                      "E_" + std::to_string(s)};
  };
  const Expectation er = expectation(ps, e_obs(r), prec);
  const Expectation er1 = expectation(ps, e_obs(r - 1), prec);
  out.e_r = er.value;
  out.e_r1 = er1.value;

  const real scale = std::max(std::abs(out.e_r), std::abs(out.e_r1));
  out.residual = scale == 0.0 ? 0.0 : std::abs(out.e_r + out.coeff.c_r * out.e_r1) / scale;
  out.coeff_residual =
      std::abs(out.coeff.c_r * out.coeff.c_rr - out.coeff.c_rr1) / std::abs(out.coeff.c_rr1);
  if (scale > 0.0) out.amplification = std::max(er.max_abs_term, er1.max_abs_term) / scale;
  return out;
}

EnE0Report en_e0_check(const ParameterSet& ps, AnchorBinding anchors,
                       const Precision& prec) {
  const int n = ps.n;
  const InvariantParams ip = bind_anchors(ps, anchors, prec);
  const std::array<int, 4> others = complement_of(anchors);
  const cplx A = ps.a[anchors.first - 1];
  const cplx B = ps.a[anchors.second - 1];

  EnE0Report out;
  RatioAcc acc(prec.pole_guard);
  for (int i = 1; i <= n; ++i) {
    acc.scalar(ipow(A, 3) / ipow(B, 3));
    acc.num_factor(theta(B / A * ipow(ps.t, i - 1), ps.nome.p, prec));
    acc.den_factor(theta(A / B * ipow(ps.t, i - 1), ps.nome.p, prec));
    for (int m : others) {
      acc.num_factor(theta(ps.a[m - 1] * B * ipow(ps.t, i - 1), ps.nome.p, prec));
      acc.den_factor(theta(ps.a[m - 1] * A * ipow(ps.t, i - 1), ps.nome.p, prec));
    }
  }
  out.corollary_factor = acc.result();

  auto e_obs = [&](int s) {
    return Observable{[ip, s, prec](std::span<const cplx> z) {
                        return e_recursive(ip, s, z, prec);
                      },
                      "E_" + std::to_string(s)};
  };
  const Expectation en = expectation(ps, e_obs(n), prec);
  const Expectation e0 = expectation(ps, e_obs(0), prec);
  out.e_n = en.value;
  out.e_0 = e0.value;
  out.residual = rel_pair(out.e_n, out.e_0 * out.corollary_factor);
  const real scale =
      std::max(std::abs(out.e_n), std::abs(out.e_0 * out.corollary_factor));
  if (scale > 0.0)
    out.amplification =
        std::max(en.max_abs_term, e0.max_abs_term * std::abs(out.corollary_factor)) /
        scale;

  cplx chain{1.0, 0.0};
  for (int r = 1; r <= n; ++r) chain *= -two_term_coefficients(ps, anchors, r, prec).c_r;
  out.chain_residual = rel_pair(chain, out.corollary_factor);
  return out;
}

cplx j_step_factor(const ParameterSet& ps, const Precision& prec) {
  const cplx q = ps.nome.q;
  const cplx p = ps.nome.p;
  RatioAcc acc(prec.pole_guard);
  for (int i = 1; i <= ps.n; ++i) {
    acc.num_factor(theta(ps.a[0] / ps.a[5] * ipow(ps.t, i - 1), p, prec));
    acc.den_factor(theta(ps.a[4] / (q * ps.a[0]) * ipow(ps.t, 1 - i), p, prec));
    for (int m = 1; m <= 3; ++m) {
      acc.num_factor(theta(ps.a[m] * ps.a[4] / q * ipow(ps.t, i - 1), p, prec));
      acc.den_factor(theta(cplx{1.0, 0.0} / (ps.a[m] * ps.a[5]) * ipow(ps.t, 1 - i), p, prec));
    }
  }
  return acc.result();
}

JRecursionReport j_recursion_check(const ParameterSet& ps, const Precision& prec) {
  if (ps.N < 1) throw RangeError("j_recursion_check: requires N >= 1");
  const Observable one{[](std::span<const cplx>) { return cplx{1.0, 0.0}; }, "1"};

  JRecursionReport out;
  const Expectation j = expectation(ps, one, prec);
  out.j = j.value;

  const ParameterSet down = shift_a5_a6(ps, 1);
  const Expectation jsh = expectation(down, one, prec);
  out.j_shifted = jsh.value;
  out.step_factor = j_step_factor(ps, prec);
  out.step_residual = rel_pair(out.j, out.j_shifted * out.step_factor);
  if (out.j != cplx{} && out.j_shifted != cplx{})
    out.amplification = std::max(j.max_abs_term / std::abs(out.j),
                                 jsh.max_abs_term / std::abs(out.j_shifted));

  cplx telescoped{1.0, 0.0};
  for (int k = 0; k < ps.N; ++k) telescoped *= j_step_factor(shift_a5_a6(ps, k), prec);
  out.telescope_residual = rel_pair(telescoped, rhs_product(ps, prec));

  const cplx endpoint = expectation(shift_a5_a6(ps, ps.N), one, prec).value;
  out.endpoint_residual = std::abs(endpoint - cplx{1.0, 0.0});
  return out;
}

JShiftReport j_shift_check(const ParameterSet& ps, const Precision& prec) {
  if (ps.N < 1) throw RangeError("j_shift_check: requires N >= 1");
  const int n = ps.n;
  const cplx p = ps.nome.p;
  const cplx a1 = ps.a[0];
  const cplx a5 = ps.a[4];
  const cplx a6 = ps.a[5];
  const InvariantParams ip = bind_anchors(ps, AnchorBinding{5, 6}, prec);
  const Observable one{[](std::span<const cplx>) { return cplx{1.0, 0.0}; }, "1"};

  auto e_obs = [&](int s) {
    return Observable{[ip, s, prec](std::span<const cplx> z) {
                        return e_recursive(ip, s, z, prec);
                      },
                      "E_" + std::to_string(s)};
  };

  JShiftReport out;
  auto track_amp = [&out](const Expectation& e, real scale) {
    if (scale > 0.0) out.amplification = std::max(out.amplification, e.max_abs_term / scale);
  };
  {
    const ParameterSet shifted = with_param_shift(ps, 5, ps.nome.q, -1);
    const Expectation j6 = expectation(shifted, one, prec);
    RatioAcc w(prec.pole_guard);
    for (int i = 0; i < n; ++i) {
      w.num_factor(theta_pm(a6, a5 * ipow(ps.t, i), p, prec));
      w.den_factor(theta_pm(a6, a1 * ipow(ps.t, i), p, prec));
    }
    const Expectation en = expectation(ps, e_obs(n), prec);
    const cplx weighted = en.value * w.result();
    out.residual_en = rel_pair(j6.value, weighted);
    const real scale = std::max(std::abs(j6.value), std::abs(weighted));
    track_amp(j6, scale);
    if (en.value != cplx{})
      track_amp(en, scale / std::abs(w.result() == cplx{} ? cplx{1.0, 0.0} : w.result()));
  }
  {
    const ParameterSet shifted = with_param_shift(ps, 4, ps.nome.q, 0);
    const Expectation j5 = expectation(shifted, one, prec);
    RatioAcc w(prec.pole_guard);
    for (int i = 0; i < n; ++i) {
      w.num_factor(theta_pm(a5, a6 * ipow(ps.t, i), p, prec));
      w.den_factor(theta_pm(a5, a1 * ipow(ps.t, i), p, prec));
    }
    const Expectation e0 = expectation(ps, e_obs(0), prec);
    const cplx weighted = e0.value * w.result();
    out.residual_e0 = rel_pair(j5.value, weighted);
    const real scale = std::max(std::abs(j5.value), std::abs(weighted));
    track_amp(j5, scale);
    if (e0.value != cplx{})
      track_amp(e0, scale / std::abs(w.result() == cplx{} ? cplx{1.0, 0.0} : w.result()));
  }
  return out;
}

}  // namespace ellsum
