#include "invariants.hpp"

#include <algorithm>
#include <cmath>

namespace ellsum {

InvariantParams make_invariant_params(cplx a1, cplx a2, cplx t, cplx p, int n,
                                      const Precision& prec) {
  if (n < 1) throw DomainError("invariants: n must be >= 1");
  if (a1 == cplx{} || a2 == cplx{} || t == cplx{})
    throw DomainError("invariants: a1, a2, t must be nonzero");
  if (!(std::abs(p) < 1.0)) throw DomainError("invariants: |p| must be < 1");
  for (int d = 0; d <= 2 * n - 2; ++d) {
    if (std::abs(theta(a1 * a2 * ipow(t, d), p, prec)) < prec.pole_guard)
      throw GenericityFailure("invariants: theta(a1 a2 t^d) below pole guard");
  }
  for (int d = -n; d <= n; ++d) {
    if (std::abs(theta(a2 / a1 * ipow(t, d), p, prec)) < prec.pole_guard)
      throw GenericityFailure("invariants: theta(a2/a1 t^d) below pole guard");
  }
  for (int k = 1; k <= n; ++k) {
    if (std::abs(theta(ipow(t, k), p, prec)) < prec.pole_guard)
      throw GenericityFailure("invariants: theta(t^k) below pole guard");
  }
  return InvariantParams{a1, a2, t, p, n};
}

std::vector<cplx> reference_point(const InvariantParams& ip, int s) {
  if (s < 0 || s > ip.n) throw RangeError("reference_point: s must lie in [0, n]");
  std::vector<cplx> zeta(ip.n);
  cplx v = ip.a1;
  for (int i = 0; i < s; ++i) {
    zeta[i] = v;
    v *= ip.t;
  }
  v = ip.a2;
  for (int i = s; i < ip.n; ++i) {
    zeta[i] = v;
    v *= ip.t;
  }
  return zeta;
}

cplx e_explicit(const InvariantParams& ip, int r, std::span<const cplx> z,
                const Precision& prec) {
  const int n = ip.n;
  if (r < 0 || r > n) throw RangeError("e_explicit: r must lie in [0, n]");
  if (static_cast<int>(z.size()) != n) throw RangeError("e_explicit: dimension mismatch");

  // First r-subset of {0..n-1} in lexicographic order; complement J is
  // maintained alongside.
  std::vector<int> idx(r);
  for (int k = 0; k < r; ++k) idx[k] = k;

  auto term_for = [&](const std::vector<int>& I) {
    std::vector<char> in_I(n, 0);
    for (int v : I) in_I[v] = 1;
    cplx term{1.0, 0.0};
    for (int k = 0; k < r; ++k) {
      const int ik = I[k];  // 0-based; paper's i_k - k = ik - k (both shifted by 1)
      const cplx c = ip.a2 * ipow(ip.t, ik - k);
      const cplx dnm = theta_pm(c, ip.a1 * ipow(ip.t, k), ip.p, prec);
      if (std::abs(dnm) < prec.pole_guard) throw NearPole("e_explicit: anchor normalizer");
      term *= theta_pm(c, z[ik], ip.p, prec) / dnm;
    }
    int l = 0;
    for (int jl = 0; jl < n; ++jl) {
      if (in_I[jl]) continue;
      const cplx c = ip.a1 * ipow(ip.t, jl - l);
      const cplx dnm = theta_pm(c, ip.a2 * ipow(ip.t, l), ip.p, prec);
      if (std::abs(dnm) < prec.pole_guard) throw NearPole("e_explicit: anchor normalizer");
      term *= theta_pm(c, z[jl], ip.p, prec) / dnm;
      ++l;
    }
    return term;
  };

  cplx total{};
  if (r == 0) return term_for({});
  for (;;) {
    total += term_for(idx);
    // next combination
    int k = r - 1;
    while (k >= 0 && idx[k] == n - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

cplx e_recursive(const InvariantParams& ip, int r, std::span<const cplx> z,
                 const Precision& prec) {
  const int n = ip.n;
  if (r < 0 || r > n) throw RangeError("e_recursive: r must lie in [0, n]");
  if (static_cast<int>(z.size()) != n) throw RangeError("e_recursive: dimension mismatch");

  // table[s] = E_s^{(m)}(z_1..z_m), built bottom-up in m; per-call, so
  // concurrent evaluation needs no shared state.
  std::vector<cplx> table{cplx{1.0, 0.0}};  // m = 0
  for (int m = 1; m <= n; ++m) {
    std::vector<cplx> next(m + 1);
    for (int s = 0; s <= m; ++s) {
      cplx acc{};
      if (s >= 1) {
        const cplx dnm = theta_pm(ip.a2 * ipow(ip.t, m - s), ip.a1 * ipow(ip.t, s - 1), ip.p, prec);
        if (std::abs(dnm) < prec.pole_guard) throw NearPole("e_recursive: anchor normalizer");
        acc += table[s - 1] * theta_pm(ip.a2 * ipow(ip.t, m - s), z[m - 1], ip.p, prec) / dnm;
      }
      if (s <= m - 1) {
        const cplx dnm = theta_pm(ip.a1 * ipow(ip.t, s), ip.a2 * ipow(ip.t, m - s - 1), ip.p, prec);
        if (std::abs(dnm) < prec.pole_guard) throw NearPole("e_recursive: anchor normalizer");
        acc += table[s] * theta_pm(ip.a1 * ipow(ip.t, s), z[m - 1], ip.p, prec) / dnm;
      }
      next[s] = acc;
    }
    table = std::move(next);
  }
  return table[r];
}

std::vector<cplx> apply_wn(const WnElement& w, std::span<const cplx> z) {
  const int n = static_cast<int>(z.size());
  if (static_cast<int>(w.perm.size()) != n || static_cast<int>(w.signs.size()) != n)
    throw RangeError("apply_wn: dimension mismatch");
  std::vector<cplx> out(n);
  for (int j = 0; j < n; ++j) {
    const int i = w.perm[j];  // i = sigma(j), so z'_i = z_{sigma^{-1}(i)}^{eps_i} = z_j^{eps_i}
    if (i < 0 || i >= n) throw RangeError("apply_wn: permutation entry out of range");
    out[i] = w.signs[i] < 0 ? cplx{1.0, 0.0} / z[j] : z[j];
  }
  return out;
}

}  // namespace ellsum
