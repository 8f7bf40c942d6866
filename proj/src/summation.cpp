#include "summation.hpp"

#include <cmath>

namespace ellsum {

void RatioAcc::num_factor(cplx v) {
  if (v == cplx{})
    ++num_zeros_;
  else
    val_ *= v;
}

void RatioAcc::den_factor(cplx v) {
  if (std::abs(v) < guard_)
    den_small_ = true;
  else
    val_ /= v;
}

void RatioAcc::factorial_ratio(cplx z_num, cplx z_den, long k, const Nome& nome,
                               const Precision& prec) {
  if (k >= 0) {
    cplx wn = z_num, wd = z_den;
    for (long j = 0; j < k; ++j) {
      num_factor(theta(wn, nome.p, prec));
      den_factor(theta(wd, nome.p, prec));
      wn *= nome.q;
      wd *= nome.q;
    }
  } else {
    // theta(z;p;q)_k = 1 / theta(q^k z;p;q)_{-k}: the numerator factorial
    // contributes theta(q^{-j} z_num) downstairs and the denominator one
    // theta(q^{-j} z_den) upstairs.
    cplx wn = z_num, wd = z_den;
    for (long j = 0; j < -k; ++j) {
      wn /= nome.q;
      wd /= nome.q;
      num_factor(theta(wd, nome.p, prec));
      den_factor(theta(wn, nome.p, prec));
    }
  }
}

cplx RatioAcc::result() const {
  if (den_small_) throw NearPole("denominator theta below pole guard");
  if (num_zeros_ > 0) return cplx{};
  return val_;
}

namespace {

// Shared by summand (printed prefactor) and lattice_weight (general-balancing
// prefactor): everything except the per-axis scalar power base.
void accumulate_theta_blocks(RatioAcc& acc, const ParameterSet& ps,
                             std::span<const cplx> z, std::span<const int> nu,
                             const Precision& prec) {
  const cplx p = ps.nome.p;
  const cplx q = ps.nome.q;
  const cplx t = ps.t;
  const int n = ps.n;

  for (int i = 0; i < n; ++i) {
    acc.num_factor(theta(ipow(q, 2L * nu[i]) * z[i] * z[i], p, prec));
    acc.den_factor(theta(z[i] * z[i], p, prec));
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      acc.num_factor(theta(ipow(q, nu[k] - nu[j]) * z[k] / z[j], p, prec));
      acc.num_factor(theta(ipow(q, nu[j] + nu[k]) * z[j] * z[k], p, prec));
      acc.den_factor(theta(z[k] / z[j], p, prec));
      acc.den_factor(theta(z[j] * z[k], p, prec));
    }
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < 6; ++m)
      acc.factorial_ratio(ps.a[m] * z[i], q / ps.a[m] * z[i], nu[i], ps.nome, prec);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      acc.factorial_ratio(t * z[k] / z[j], q / t * z[k] / z[j],
                          static_cast<long>(nu[k]) - nu[j], ps.nome, prec);
      acc.factorial_ratio(t * z[j] * z[k], q / t * z[j] * z[k],
                          static_cast<long>(nu[j]) + nu[k], ps.nome, prec);
    }
}

}  // namespace

cplx summand(const ParameterSet& ps, std::span<const cplx> xi,
             std::span<const int> nu, const Precision& prec) {
  const int n = ps.n;
  if (static_cast<int>(nu.size()) != n || static_cast<int>(xi.size()) != n)
    throw RangeError("summand: dimension mismatch");
  {
    int prev = 0;
    for (int v : nu)
      if (v < prev || v > ps.N)
        throw RangeError("summand: nu outside the ordered simplex");
      else
        prev = v;
  }
  RatioAcc acc(prec.pole_guard);
  for (int i = 0; i < n; ++i)
    acc.scalar(ipow(ps.nome.q * ipow(ps.t, 2L * (n - 1 - i)), nu[i]));
  accumulate_theta_blocks(acc, ps, xi, nu, prec);
  return acc.result();
}

cplx lattice_weight(const ParameterSet& ps, std::span<const cplx> z,
                    std::span<const int> nu, const Precision& prec) {
  const int n = ps.n;
  if (static_cast<int>(nu.size()) != n || static_cast<int>(z.size()) != n)
    throw RangeError("lattice_weight: dimension mismatch");
  for (int i = 0; i + 1 < n; ++i)
    if (nu[i] > nu[i + 1])
      throw RangeError("lattice_weight: nu must be weakly increasing");

  cplx prod_a{1.0, 0.0};
  for (const cplx& am : ps.a) prod_a *= am;

  RatioAcc acc(prec.pole_guard);
  // Per axis: q^{-nu_i} from the theta block times the merged six-fold
  // (q^{1/2} a_m^{-1})^{nu_i} = (q^3 / (a_1..a_6))^{nu_i}.
  const cplx axis_base = ps.nome.q * ps.nome.q / prod_a;
  for (int i = 0; i < n; ++i) acc.scalar(ipow(axis_base, nu[i]));
  // Per pair j<k: q^{-nu_k} times (q t^{-2})^{nu_k}.
  for (int k = 1; k < n; ++k) acc.scalar(ipow(ps.t, -2L * k * nu[k]));
  accumulate_theta_blocks(acc, ps, z, nu, prec);
  return acc.result();
}

namespace {

// Factors of the single-step ratio (4.7-style). For the inverse step the
// numerator/denominator roles swap at the theta level, so exact zeros land
// upstairs and produce an exact 0 instead of a division by zero.
void shift_ratio_factors(RatioAcc& acc, const ParameterSet& ps,
                         std::span<const cplx> z, int axis, bool inverse,
                         const Precision& prec) {
  const int n = ps.n;
  const cplx p = ps.nome.p;
  const cplx q = ps.nome.q;
  const cplx zi = z[axis];

  cplx prod_a{1.0, 0.0};
  for (const cplx& am : ps.a) prod_a *= am;

  auto num = [&](cplx v) { inverse ? acc.den_factor(v) : acc.num_factor(v); };
  auto den = [&](cplx v) { inverse ? acc.num_factor(v) : acc.den_factor(v); };

  // 1/q from the leading ratio, q^3/(a_1..a_6) merged from the six q^{1/2} a_m^{-1}
  const cplx scale = q * q / prod_a;
  acc.scalar(inverse ? cplx{1.0, 0.0} / scale : scale);
  num(theta(q * q * zi * zi, p, prec));
  den(theta(zi * zi, p, prec));
  for (int m = 0; m < 6; ++m) {
    num(theta(ps.a[m] * zi, p, prec));
    den(theta(q / ps.a[m] * zi, p, prec));
  }
  for (int k = 0; k < n; ++k) {
    if (k == axis) continue;
    num(theta(ps.t * zi * z[k], p, prec));
    num(theta(ps.t * zi / z[k], p, prec));
    num(theta(z[k] / (q * zi), p, prec));
    num(theta(cplx{1.0, 0.0} / (q * zi * z[k]), p, prec));
    den(theta(ps.t * z[k] / (q * zi), p, prec));
    den(theta(ps.t / (q * zi * z[k]), p, prec));
    den(theta(zi * z[k], p, prec));
    den(theta(zi / z[k], p, prec));
  }
}

}  // namespace

cplx phi_shift_ratio(const ParameterSet& ps, std::span<const cplx> z, int axis,
                     const Precision& prec) {
  const int n = ps.n;
  if (axis < 0 || axis >= n) throw RangeError("phi_shift_ratio: axis out of range");
  if (static_cast<int>(z.size()) != n) throw RangeError("phi_shift_ratio: dimension mismatch");
  RatioAcc acc(prec.pole_guard);
  shift_ratio_factors(acc, ps, z, axis, false, prec);
  return acc.result();
}

cplx phi_lattice_ratio(const ParameterSet& ps, std::span<const int> nu,
                       const Precision& prec) {
  const int n = ps.n;
  if (static_cast<int>(nu.size()) != n) throw RangeError("phi_lattice_ratio: dimension mismatch");
  std::vector<cplx> z = base_point(ps);
  cplx total{1.0, 0.0};
  for (int i = n - 1; i >= 0; --i) {
    for (int s = 0; s < nu[i]; ++s) {  // up-steps
      total *= phi_shift_ratio(ps, z, i, prec);
      if (total == cplx{}) return total;
      z[i] *= ps.nome.q;
    }
    for (int s = 0; s > nu[i]; --s) {  // down-steps
      z[i] /= ps.nome.q;
      RatioAcc step(prec.pole_guard);
      shift_ratio_factors(step, ps, z, i, true, prec);
      total *= step.result();
      if (total == cplx{}) return total;
    }
  }
  return total;
}

cplx lhs_sum(const ParameterSet& ps, const Precision& prec, SumMode mode) {
  if (!ps.truncation_satisfied)
    throw DomainError("lhs_sum: truncation condition not satisfied (sum does not terminate)");
  const std::vector<cplx> xi = base_point(ps);
  cplx sum{};
  cplx comp{};
  for (SimplexIter it(ps.n, ps.N); it.valid(); it.advance()) {
    const cplx term = summand(ps, xi, it.nu(), prec);
    if (mode == SumMode::compensated) {
      const cplx y = term - comp;
      const cplx s = sum + y;
      comp = (s - sum) - y;
      sum = s;
    } else {
      sum += term;
    }
  }
  return sum;
}

cplx rhs_product(const ParameterSet& ps, const Precision& prec) {
  const cplx q = ps.nome.q;
  const cplx t = ps.t;
  const cplx a1 = ps.a[0];
  const long Nk = ps.N;
  RatioAcc acc(prec.pole_guard);
  static constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};  // (j,k) in {2,3,4}, 0-based
  for (int i = 1; i <= ps.n; ++i) {
    acc.factorial_ratio(q * a1 * a1 * ipow(t, ps.n + i - 2),
                        q / (a1 * ps.a[1] * ps.a[2] * ps.a[3]) * ipow(t, 2 - ps.n - i),
                        Nk, ps.nome, prec);
    for (int m = 0; m < 3; ++m)
      acc.factorial_ratio(q / (ps.a[pairs[m][0]] * ps.a[pairs[m][1]]) * ipow(t, 1 - i),
                          q / ps.a[m + 1] * a1 * ipow(t, i - 1), Nk, ps.nome, prec);
  }
  return acc.result();
}

cplx rhs_product_contiguity(const ParameterSet& ps, const Precision& prec) {
  const cplx q = ps.nome.q;
  const cplx t = ps.t;
  const cplx a1 = ps.a[0];
  const long Nk = ps.N;
  RatioAcc acc(prec.pole_guard);
  static constexpr int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int i = 1; i <= ps.n; ++i) {
    acc.factorial_ratio(q * a1 * a1 * ipow(t, ps.n + i - 2),
                        ps.a[4] * ps.a[5] * ipow(t, ps.n - i), Nk, ps.nome, prec);
    for (int m = 0; m < 3; ++m)
      acc.factorial_ratio(q / (ps.a[pairs[m][0]] * ps.a[pairs[m][1]]) * ipow(t, -ps.n + i),
                          q / ps.a[m + 1] * a1 * ipow(t, ps.n - i), Nk, ps.nome, prec);
  }
  return acc.result();
}

}  // namespace ellsum
