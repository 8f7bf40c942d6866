#ifndef ELLSUM_INVARIANTS_HPP
#define ELLSUM_INVARIANTS_HPP

#include <span>
#include <vector>

#include "kernel.hpp"
#include "types.hpp"

namespace ellsum {

// Interpolation anchors (a1, a2) of the fundamental invariants E_r. In the
// two-term and contiguity applications these are bound to a parameter pair
// of the summand weight (explicitly, by the caller).
struct InvariantParams {
  cplx a1{};
  cplx a2{};
  cplx t{};
  cplx p{};
  int n = 1;
};

// Validates nonzero inputs and genericity of every theta the explicit sum
// and the recurrence put in a denominator: theta(a1 a2 t^d;p) for
// d = 0..2n-2 and theta(a2/a1 t^d;p) for |d| <= n. Rejects t = 1 and
// a1 = a2 (reference points collide).
InvariantParams make_invariant_params(cplx a1, cplx a2, cplx t, cplx p, int n,
                                      const Precision& prec = {});

// zeta^(s) = (a1, a1 t, .., a1 t^{s-1}, a2, a2 t, .., a2 t^{n-s-1}).
std::vector<cplx> reference_point(const InvariantParams& ip, int s);

// E_r by the explicit interpolation sum over complementary index pairs.
cplx e_explicit(const InvariantParams& ip, int r, std::span<const cplx> z,
                const Precision& prec = {});

// E_r by the two-term recurrence in z_n; agrees with e_explicit and serves
// as its independent oracle. Out-of-range r gives 0, E_0^{(0)} = 1.
cplx e_recursive(const InvariantParams& ip, int r, std::span<const cplx> z,
                 const Precision& prec = {});

// Signed permutation (hyperoctahedral group element): z'_i = z_{perm^{-1}(i)}
// raised to signs[i] (+1 or -1). perm holds images: perm[j] = sigma(j),
// 0-based.
struct WnElement {
  std::vector<int> perm;
  std::vector<int> signs;
};

std::vector<cplx> apply_wn(const WnElement& w, std::span<const cplx> z);

}  // namespace ellsum

#endif
