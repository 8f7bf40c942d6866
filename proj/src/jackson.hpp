#ifndef ELLSUM_JACKSON_HPP
#define ELLSUM_JACKSON_HPP

#include <functional>
#include <span>
#include <string>

#include "invariants.hpp"
#include "summation.hpp"

namespace ellsum {

// Integrand of an expectation value; must be finite at every lattice point
// the truncated sum visits (checked at evaluation time).
struct Observable {
  std::function<cplx(std::span<const cplx>)> eval;
  std::string label;
};

struct Expectation {
  cplx value{};
  real max_abs_term = 0.0;  // cancellation scale: largest |term| summed
  real abs_sum = 0.0;       // sum of |term|
};

// <phi> = sum over the simplex of phi(q^nu xi) * Phi~(q^nu xi)/Phi~(xi), in
// lexicographic order. Throws ObservableSingular on a non-finite phi value.
Expectation expectation(const ParameterSet& ps, const Observable& phi,
                        const Precision& prec = {}, SumMode mode = SumMode::plain);

// Boundary functions of the two-term relations; axis is 0-based.
cplx f_plus(const ParameterSet& ps, std::span<const cplx> z, int axis,
            const Precision& prec = {});
cplx f_minus(const ParameterSet& ps, std::span<const cplx> z, int axis,
             const Precision& prec = {});

// nabla_{q,z_i} phi = phi - (T_{q,z_i}Phi~/Phi~) T_{q,z_i} phi.
Observable nabla(const ParameterSet& ps, Observable phi, int axis,
                 const Precision& prec = {});

// Which pair of a_1..a_6 anchors the invariants: indices are 1-based into
// the parameter vector. Theorem-style two-term relations use {1,2}; the
// contiguity recursion in (a_5,a_6) uses {5,6}.
struct AnchorBinding {
  int first = 1;
  int second = 2;
};

InvariantParams bind_anchors(const ParameterSet& ps, AnchorBinding anchors,
                             const Precision& prec = {});

struct TwoTermCoefficients {
  cplx c_r{};    // contiguity ratio <E_r> = -c_r <E_{r-1}>
  cplx c_rr{};   // coefficient of E_r in the h_r expansion, = F_r^+(zeta^(r))
  cplx c_rr1{};  // coefficient of E_{r-1}, = F_n^+(zeta^(r-1))
};

// Closed theta-product forms of the coefficients (c_r = c_rr1 / c_rr).
TwoTermCoefficients two_term_coefficients(const ParameterSet& ps, AnchorBinding anchors,
                                          int r, const Precision& prec = {});

// h_r(z) = sum_i (F_i^- + F_i^+)(z) E_{r-1}^{(n-1)}(z with z_i omitted).
cplx h_r(const ParameterSet& ps, const InvariantParams& ip, int r,
         std::span<const cplx> z, const Precision& prec = {});

// The n summands of h_r; their largest magnitude is the natural scale for
// residuals of the (heavily cancelling) expansion identity.
std::vector<cplx> h_r_terms(const ParameterSet& ps, const InvariantParams& ip, int r,
                            std::span<const cplx> z, const Precision& prec = {});

struct TwoTermReport {
  cplx e_r{};          // <E_r>
  cplx e_r1{};         // <E_{r-1}>
  TwoTermCoefficients coeff{};
  real residual = 0.0;        // |<E_r> + c_r <E_{r-1}>| / max(|<E_r>|, |<E_{r-1}>|)
  real coeff_residual = 0.0;  // |c_r c_rr - c_rr1| / |c_rr1|
  real amplification = 1.0;   // largest summed-term magnitude over the residual scale
};

// Requires INV_ONE balancing and a satisfied truncation condition.
TwoTermReport two_term_check(const ParameterSet& ps, AnchorBinding anchors, int r,
                             const Precision& prec = {});

struct EnE0Report {
  cplx e_n{};
  cplx e_0{};
  cplx corollary_factor{};
  real residual = 0.0;        // |<E_n> - <E_0> * factor| / max(|<E_n>|, |<E_0>*factor|)
  real chain_residual = 0.0;  // prod_r(-c_r) against the corollary factor
  real amplification = 1.0;
};

EnE0Report en_e0_check(const ParameterSet& ps, AnchorBinding anchors,
                       const Precision& prec = {});

struct JRecursionReport {
  cplx j{};                     // J(a_5, a_6) = <1>
  cplx j_shifted{};             // J(q^{-1} a_5, q a_6), truncation level N-1
  cplx step_factor{};
  real step_residual = 0.0;
  real telescope_residual = 0.0;  // N-fold product against rhs_product
  real endpoint_residual = 0.0;   // |J(q^{-N} a_5, q^N a_6) - 1|
  real amplification = 1.0;
};

// Requires SUM_Q balancing and N >= 1.
JRecursionReport j_recursion_check(const ParameterSet& ps, const Precision& prec = {});

// One descent step of the contiguity recursion evaluated at the given
// parameter values: J(a_5,a_6) = J(q^{-1}a_5, q a_6) * factor.
cplx j_step_factor(const ParameterSet& ps, const Precision& prec = {});

struct JShiftReport {
  real residual_en = 0.0;  // J(a_5, q a_6) against the theta-weighted <E_n>
  real residual_e0 = 0.0;  // J(q a_5, a_6) against the theta-weighted <E_0>
  real amplification = 1.0;
};

// The (a_5,a_6)-shift identities expressing parameter-shifted Jackson sums
// as theta-weighted expectations of E_n and E_0 with anchors (a_5,a_6).
// Valid in any balancing mode; needs N >= 1 for a nontrivial E_n side.
JShiftReport j_shift_check(const ParameterSet& ps, const Precision& prec = {});

}  // namespace ellsum

#endif
