#ifndef ELLSUM_SUMMATION_HPP
#define ELLSUM_SUMMATION_HPP

#include <span>
#include <vector>

#include "params.hpp"

namespace ellsum {

enum class SumMode { plain, compensated };

// The nu-th term of the summation formula's left-hand side at the point xi,
// composed exactly as printed: power prefactor, theta ratios in xi_i^2, the
// cross factors, the six a_m theta-factorial ratios and the t-type factorial
// ratios. Requires nu in the simplex.
cplx summand(const ParameterSet& ps, std::span<const cplx> xi,
             std::span<const int> nu, const Precision& prec = {});

// The q-shift ratio Phi~(q^nu z)/Phi~(z) for weakly increasing nu in Z^n.
// The scalar prefactor carries the balancing product a_1..a_6 explicitly, so
// this is valid in any balancing mode; under SUM_Q it coincides with summand
// at z = xi. Zero theta factors in the numerator yield an exact 0 (the
// support-vanishing mechanism); denominator thetas below the pole guard raise
// NearPole.
cplx lattice_weight(const ParameterSet& ps, std::span<const cplx> z,
                    std::span<const int> nu, const Precision& prec = {});

// Phi~(q^nu xi)/Phi~(xi) for arbitrary nu in Z^n, telescoped one q-shift at a
// time along axes n, n-1, ..., 1 (intermediate points stay weakly increasing
// for weakly increasing targets). Returns exact 0 as soon as a step vanishes.
cplx phi_lattice_ratio(const ParameterSet& ps, std::span<const int> nu,
                       const Precision& prec = {});

// Single q-shift ratio T_{q,z_i} Phi~(z) / Phi~(z); the six q^{1/2} a_m^{-1}
// scalars are merged into q^3/(a_1..a_6) so no square root is ever taken.
// axis is 0-based.
cplx phi_shift_ratio(const ParameterSet& ps, std::span<const cplx> z, int axis,
                     const Precision& prec = {});

// Sum of summand over the truncated simplex, accumulated in lexicographic
// order (optionally Kahan-compensated).
cplx lhs_sum(const ParameterSet& ps, const Precision& prec = {},
             SumMode mode = SumMode::plain);

// Closed-form right-hand side of the summation formula.
cplx rhs_product(const ParameterSet& ps, const Precision& prec = {});

// Equivalent closed form produced by the contiguity recursion; coincides with
// rhs_product under SUM_Q balancing.
cplx rhs_product_contiguity(const ParameterSet& ps, const Precision& prec = {});

// Accumulates a product of theta factors with separate bookkeeping for exact
// numerator zeros and guarded denominators; division happens factor by factor
// so intermediates stay in range even when individual thetas are huge.
class RatioAcc {
 public:
  explicit RatioAcc(real pole_guard) : guard_(pole_guard) {}

  void scalar(cplx v) { val_ *= v; }
  void num_factor(cplx v);
  void den_factor(cplx v);
  // theta(z_num;p;q)_k / theta(z_den;p;q)_k with matched interleaving; k may
  // be negative (inversion convention flips the factors across the bar).
  void factorial_ratio(cplx z_num, cplx z_den, long k, const Nome& nome,
                       const Precision& prec);
  cplx result() const;

 private:
  cplx val_{1.0, 0.0};
  int num_zeros_ = 0;
  bool den_small_ = false;
  real guard_;
};

}  // namespace ellsum

#endif
