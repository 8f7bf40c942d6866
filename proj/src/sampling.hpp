#ifndef ELLSUM_SAMPLING_HPP
#define ELLSUM_SAMPLING_HPP

#include <cstdint>
#include <string_view>

#include "params.hpp"

namespace ellsum {

// Deterministic 64-bit stream (splitmix64). Used instead of <random>
// distributions so identical seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  real u01();                      // uniform in [0, 1)
  real uniform(real lo, real hi);  // uniform in [lo, hi)
  cplx ring(real lo_mod, real hi_mod);  // modulus in [lo_mod, hi_mod), argument uniform

 private:
  std::uint64_t state_;
};

// Stable substream derivation: mixes the base seed with a label and grid
// coordinates so every record draws independently of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, int n, int N,
                          int draw);

// The sweep sampling ranges: |a_m| in [0.7, 1.4], |t| in [0.4, 0.8],
// |p|, |q| in [0.05, 0.3], all arguments uniform. zero_p forces the
// degenerate p = 0 path.
FreeParameters sample_free_parameters(Rng& rng, int n, int N, bool zero_p = false);

// Draws and solves until the genericity guards pass; rethrows
// GenericityFailure after max_retries attempts.
ParameterSet sample_parameter_set(Rng& rng, int n, int N, Balancing mode,
                                  const Precision& prec, bool zero_p = false,
                                  int max_retries = 50);

}  // namespace ellsum

#endif
