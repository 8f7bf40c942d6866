#include "params.hpp"

#include <cmath>
#include <string>

namespace ellsum {

cplx ParameterSet::balancing_product() const {
  cplx prod{1.0, 0.0};
  for (const cplx& am : a) prod *= am;
  return prod * ipow(t, 2L * (n - 1));
}

cplx ParameterSet::truncation_product() const {
  return a[0] * a[5] * ipow(t, n - 1) * ipow(nome.q, N);
}

namespace {

bool close_to(cplx value, cplx target) {
  return std::abs(value - target) <= 1e-12 * std::abs(target);
}

void require_generic(cplx th, const char* what, const Precision& prec) {
  if (std::abs(th) < prec.pole_guard)
    throw GenericityFailure(std::string("theta modulus below pole guard: ") + what);
}

// Guards every theta that lhs_sum / rhs_product put in a denominator, the
// t-power and anchor-collision normalizers (rejects t = 1, a_1 = a_2 and the
// derived a_5 = a_6 collisions), all at the configured pole guard.
void check_genericity(const ParameterSet& ps, const Precision& prec) {
  const cplx p = ps.nome.p;
  const cplx q = ps.nome.q;
  const int n = ps.n;
  const std::vector<cplx> xi = base_point(ps);

  for (int i = 0; i < n; ++i) require_generic(theta(xi[i] * xi[i], p, prec), "theta(xi_i^2)", prec);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      require_generic(theta(xi[k] / xi[j], p, prec), "theta(xi_k/xi_j)", prec);
      require_generic(theta(xi[j] * xi[k], p, prec), "theta(xi_j xi_k)", prec);
    }

  // rhs_product denominator factorial factors
  const cplx a1234 = ps.a[0] * ps.a[1] * ps.a[2] * ps.a[3];
  for (int i = 1; i <= n; ++i) {
    cplx w = q / a1234 * ipow(ps.t, 2 - n - i);
    for (int s = 0; s < ps.N; ++s) {
      require_generic(theta(w, p, prec), "rhs theta(q a_1^-1..a_4^-1 t^{2-n-i})_N", prec);
      w *= q;
    }
    for (int m = 1; m <= 3; ++m) {
      cplx v = q / ps.a[m] * ps.a[0] * ipow(ps.t, i - 1);
      for (int s = 0; s < ps.N; ++s) {
        require_generic(theta(v, p, prec), "rhs theta(q a_m^-1 a_1 t^{i-1})_N", prec);
        v *= q;
      }
    }
  }

  for (int k = 1; k <= n; ++k)
    require_generic(theta(ipow(ps.t, k), p, prec), "theta(t^k)", prec);
  require_generic(theta(ps.a[0] / ps.a[1], p, prec), "theta(a_1/a_2)", prec);
  require_generic(theta(ps.a[4] / ps.a[5], p, prec), "theta(a_5/a_6)", prec);
}

}  // namespace

ParameterSet solve_constraints(const FreeParameters& free, Balancing mode,
                               const Precision& prec) {
  if (free.n < 1) throw DomainError("solve_constraints: n must be >= 1");
  if (free.N < 0) throw DomainError("solve_constraints: N must be >= 0");
  if (!(std::abs(free.p) < 1.0)) throw DomainError("solve_constraints: |p| must be < 1");
  if (free.q == cplx{} || !(std::abs(free.q) < 1.0))
    throw DomainError("solve_constraints: q must be nonzero with |q| < 1");
  for (const cplx& am : free.a)
    if (am == cplx{}) throw DomainError("solve_constraints: a_m must be nonzero");
  if (free.t == cplx{}) throw DomainError("solve_constraints: t must be nonzero");

  ParameterSet ps;
  ps.t = free.t;
  ps.nome = Nome{free.p, free.q};
  ps.n = free.n;
  ps.N = free.N;
  ps.balancing = mode;
  for (int m = 0; m < 4; ++m) ps.a[m] = free.a[m];

  const cplx tpow = ipow(free.t, free.n - 1);
  switch (mode) {
    case Balancing::sum_q:
    case Balancing::inv_one: {
      ps.a[5] = ipow(free.q, -free.N) / (free.a[0] * tpow);
      const cplx prod4 = free.a[0] * free.a[1] * free.a[2] * free.a[3];
      const cplx rest = prod4 * ps.a[5] * ipow(free.t, 2L * (free.n - 1));
      ps.a[4] = (mode == Balancing::sum_q ? free.q : cplx{1.0, 0.0}) / rest;
      break;
    }
    case Balancing::none: {
      if (free.a5 == cplx{} || free.a6 == cplx{})
        throw DomainError("solve_constraints: a_5 and a_6 must be supplied in NONE mode");
      ps.a[4] = free.a5;
      ps.a[5] = free.a6;
      if (!close_to(ps.truncation_product(), cplx{1.0, 0.0}))
        throw DomainError("solve_constraints: truncation condition a_1 a_6 t^{n-1} = q^{-N} violated");
      break;
    }
  }

  ps.truncation_satisfied = close_to(ps.truncation_product(), cplx{1.0, 0.0});
  if (mode == Balancing::sum_q && !close_to(ps.balancing_product(), free.q))
    throw Error(errc::internal, "solve_constraints: SUM_Q closure failed");
  if (mode == Balancing::inv_one && !close_to(ps.balancing_product(), cplx{1.0, 0.0}))
    throw Error(errc::internal, "solve_constraints: INV_ONE closure failed");

  check_genericity(ps, prec);
  return ps;
}

ParameterSet shift_a5_a6(const ParameterSet& ps, int k) {
  if (ps.N - k < 0) throw RangeError("shift_a5_a6: shifted truncation level would be negative");
  ParameterSet out = ps;
  out.a[4] = ps.a[4] * ipow(ps.nome.q, -k);
  out.a[5] = ps.a[5] * ipow(ps.nome.q, k);
  out.N = ps.N - k;
  out.truncation_satisfied = std::abs(out.truncation_product() - cplx{1.0, 0.0}) <= 1e-10;
  return out;
}

std::vector<cplx> base_point(const ParameterSet& ps) {
  std::vector<cplx> xi(ps.n);
  cplx v = ps.a[0];
  for (int i = 0; i < ps.n; ++i) {
    xi[i] = v;
    v *= ps.t;
  }
  return xi;
}

SimplexIter::SimplexIter(int n, int N) : N_(N), valid_(n >= 1 && N >= 0), nu_(n, 0) {
  if (n < 1) throw DomainError("SimplexIter: n must be >= 1");
  if (N < 0) throw DomainError("SimplexIter: N must be >= 0");
}

void SimplexIter::advance() {
  const int n = static_cast<int>(nu_.size());
  int j = n - 1;
  while (j >= 0 && nu_[j] == N_) --j;
  if (j < 0) {
    valid_ = false;
    return;
  }
  const int v = nu_[j] + 1;
  for (int k = j; k < n; ++k) nu_[k] = v;
}

std::uint64_t simplex_count(int n, int N) {
  // C(N+n, n), exact in the product form
  std::uint64_t r = 1;
  for (int i = 1; i <= n; ++i) {
    r = r * static_cast<std::uint64_t>(N + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

bool in_simplex(const std::vector<int>& nu, int N) {
  int prev = 0;
  for (int v : nu) {
    if (v < prev || v > N) return false;
    prev = v;
  }
  return true;
}

}  // namespace ellsum
