#ifndef ELLSUM_KERNEL_HPP
#define ELLSUM_KERNEL_HPP

#include "types.hpp"

namespace ellsum {

// Bases of the theta/elliptic-gamma expansions: p is the elliptic nome,
// q the independent shift base. Both must lie strictly inside the unit
// disc wherever they are used; p = 0 is a supported degenerate input
// (theta(z;0) = 1 - z).
struct Nome {
  cplx p{};
  cplx q{};
};

struct Precision {
  real eps_trunc = 1e-14;  // target relative truncation error of infinite products
  int max_terms = 10000;   // hard cap on product factors
  real pole_guard = 1e-12; // minimum |theta| allowed in a denominator
};

// (z;p)_inf = prod_{i>=0} (1 - p^i z), truncated once the geometric tail
// bound drops below eps_trunc.
cplx qpochhammer_inf(cplx z, cplx p, const Precision& prec = {});

// theta(z;p) = (z;p)_inf (p/z;p)_inf.
cplx theta(cplx z, cplx p, const Precision& prec = {});

// theta(z;p;q)_k for any integer k; k < 0 uses the inversion convention
// theta(z;p;q)_{-k} = 1 / theta(q^{-k} z;p;q)_k, the unique extension for
// which the telescoping rule theta(z)_{k+1} = theta(z)_k theta(q^k z) holds
// on all of Z.
cplx theta_factorial(cplx z, long k, const Nome& nome, const Precision& prec = {});

// Ruijsenaars elliptic gamma function (pq/z;p,q)_inf / (z;p,q)_inf.
cplx elliptic_gamma(cplx z, const Nome& nome, const Precision& prec = {});

// (z;p,q)_inf = prod_{i,j>=0} (1 - p^i q^j z).
cplx qpochhammer_inf2(cplx z, cplx p, cplx q, const Precision& prec = {});

// theta(c w^{+-1};p) = theta(c w;p) theta(c/w;p), the paper-style compressed
// exponent notation expanded to its two factors.
cplx theta_pm(cplx c, cplx w, cplx p, const Precision& prec = {});

// Integer power by repeated squaring; never takes a fractional power.
cplx ipow(cplx base, long e);

}  // namespace ellsum

#endif
