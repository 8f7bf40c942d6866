#include "kernel.hpp"

#include <cmath>

namespace ellsum {

namespace {

void require_base(cplx p, const char* name) {
  if (!(std::abs(p) < 1.0))
    throw DomainError(std::string(name) + " must satisfy |" + name + "| < 1");
}

}  // namespace

cplx qpochhammer_inf(cplx z, cplx p, const Precision& prec) {
  require_base(p, "p");
  const real pa = std::abs(p);
  const real tail_scale = 1.0 / (1.0 - pa);
  const real cutoff = 0.5 * prec.eps_trunc;
  cplx acc{1.0, 0.0};
  cplx w = z;
  for (int i = 0;; ++i) {
    if (i >= prec.max_terms)
      throw TruncationFailure("qpochhammer_inf: term cap exceeded");
    acc *= cplx{1.0, 0.0} - w;
    w *= p;
    if (std::abs(w) * tail_scale <= cutoff) break;
  }
  return acc;
}

cplx theta(cplx z, cplx p, const Precision& prec) {
  if (z == cplx{}) throw DomainError("theta: z must be nonzero");
  require_base(p, "p");
  return qpochhammer_inf(z, p, prec) * qpochhammer_inf(p / z, p, prec);
}

cplx theta_pm(cplx c, cplx w, cplx p, const Precision& prec) {
  return theta(c * w, p, prec) * theta(c / w, p, prec);
}

cplx theta_factorial(cplx z, long k, const Nome& nome, const Precision& prec) {
  if (z == cplx{}) throw DomainError("theta_factorial: z must be nonzero");
  if (k == 0) return cplx{1.0, 0.0};
  if (k > 0) {
    cplx acc{1.0, 0.0};
    cplx w = z;
    for (long j = 0; j < k; ++j) {
      acc *= theta(w, nome.p, prec);
      w *= nome.q;
    }
    return acc;
  }
  if (nome.q == cplx{}) throw DomainError("theta_factorial: q must be nonzero for k < 0");
  cplx acc{1.0, 0.0};
  cplx w = z;
  for (long j = 0; j < -k; ++j) {
    w /= nome.q;
    const cplx th = theta(w, nome.p, prec);
    if (std::abs(th) < prec.pole_guard)
      throw NearPole("theta_factorial: theta factor below pole guard in k < 0 branch");
    acc /= th;
  }
  return acc;
}

cplx qpochhammer_inf2(cplx z, cplx p, cplx q, const Precision& prec) {
  require_base(p, "p");
  require_base(q, "q");
  if (z == cplx{}) return cplx{1.0, 0.0};
  const real pa = std::abs(p);
  const real qa = std::abs(q);
  // Fixed per-term cutoff: the dropped |p^i q^j z| sum below eps_trunc/4
  // (one row tail of cutoff/(1-|q|) per executed row, executed rows decay
  // geometrically in |p|).
  const real cutoff = prec.eps_trunc * (1.0 - pa) * (1.0 - qa) / 64.0;
  const real row_stop = prec.eps_trunc * (1.0 - pa) * (1.0 - qa) / 8.0;
  cplx acc{1.0, 0.0};
  cplx rowhead = z;
  int count = 0;
  while (std::abs(rowhead) > row_stop) {  // remaining block tail <= eps/8
    cplx w = rowhead;
    do {
      acc *= cplx{1.0, 0.0} - w;
      if (++count > prec.max_terms)
        throw TruncationFailure("qpochhammer_inf2: term cap exceeded");
      w *= q;
    } while (std::abs(w) > cutoff);
    rowhead *= p;
  }
  return acc;
}

cplx elliptic_gamma(cplx z, const Nome& nome, const Precision& prec) {
  if (z == cplx{}) throw DomainError("elliptic_gamma: z must be nonzero");
  const cplx den = qpochhammer_inf2(z, nome.p, nome.q, prec);
  if (std::abs(den) < prec.pole_guard)
    throw NearPole("elliptic_gamma: (z;p,q)_inf below pole guard");
  return qpochhammer_inf2(nome.p * nome.q / z, nome.p, nome.q, prec) / den;
}

cplx ipow(cplx base, long e) {
  if (e == 0) return cplx{1.0, 0.0};
  if (e < 0) return cplx{1.0, 0.0} / ipow(base, -e);
  cplx acc{1.0, 0.0};
  cplx b = base;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    if (k > 1) b *= b;
  }
  return acc;
}

}  // namespace ellsum
