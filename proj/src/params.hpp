#ifndef ELLSUM_PARAMS_HPP
#define ELLSUM_PARAMS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "kernel.hpp"
#include "types.hpp"

namespace ellsum {

// Multiplicative constraint imposed on a_1..a_6, t beyond the truncation
// condition: SUM_Q is the summation-formula balancing a_1..a_6 t^{2n-2} = q,
// INV_ONE the two-term-relation balancing a_1..a_6 t^{2n-2} = 1.
enum class Balancing { sum_q, inv_one, none };

struct ParameterSet {
  std::array<cplx, 6> a{};  // a[0] = a_1, ..., a[5] = a_6
  cplx t{};
  Nome nome{};
  int n = 1;  // rank
  int N = 0;  // truncation level
  bool truncation_satisfied = false;
  Balancing balancing = Balancing::none;

  cplx balancing_product() const;  // a_1..a_6 t^{2n-2}
  cplx truncation_product() const; // a_1 a_6 t^{n-1} q^N (equals 1 when truncated)
};

// Inputs to solve_constraints. a5/a6 are consumed only in Balancing::none;
// in the other modes they are derived.
struct FreeParameters {
  std::array<cplx, 4> a{};  // a_1..a_4
  cplx a5{};
  cplx a6{};
  cplx t{};
  cplx p{};
  cplx q{};
  int n = 1;
  int N = 0;
};

// Derives a_6 from the truncation condition a_1 a_6 t^{n-1} = q^{-N}, then
// a_5 from the requested balancing, and validates genericity of every theta
// that the identity evaluators put in a denominator. Throws GenericityFailure
// when a guarded theta modulus falls below prec.pole_guard (callers resample).
ParameterSet solve_constraints(const FreeParameters& free, Balancing mode,
                               const Precision& prec = {});

// Shifts (a_5, a_6) -> (q^{-k} a_5, q^k a_6); the truncation level drops by k
// and the balancing product is unchanged.
ParameterSet shift_a5_a6(const ParameterSet& ps, int k);

// xi = (a_1, a_1 t, ..., a_1 t^{n-1}).
std::vector<cplx> base_point(const ParameterSet& ps);

// Lexicographic enumeration of 0 <= nu_1 <= ... <= nu_n <= N.
class SimplexIter {
 public:
  SimplexIter(int n, int N);
  bool valid() const { return valid_; }
  const std::vector<int>& nu() const { return nu_; }
  void advance();

 private:
  int N_;
  bool valid_;
  std::vector<int> nu_;
};

std::uint64_t simplex_count(int n, int N);  // C(N+n, n)

bool in_simplex(const std::vector<int>& nu, int N);

}  // namespace ellsum

#endif
