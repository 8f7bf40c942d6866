#include "sampling.hpp"

#include <cmath>
#include <numbers>

namespace ellsum {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

real Rng::u01() { return static_cast<real>(next() >> 11) * 0x1.0p-53; }

real Rng::uniform(real lo, real hi) { return lo + (hi - lo) * u01(); }

cplx Rng::ring(real lo_mod, real hi_mod) {
  const real mod = uniform(lo_mod, hi_mod);
  const real arg = 2.0 * std::numbers::pi_v<real> * u01();
  return cplx{mod * std::cos(arg), mod * std::sin(arg)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, int n, int N,
                          int draw) {
  std::uint64_t h = seed ^ 0x6a09e667f3bcc909ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  };
  for (char c : label) mix(static_cast<unsigned char>(c));
  mix(static_cast<std::uint64_t>(n) + 1);
  mix(static_cast<std::uint64_t>(N) + 1);
  mix(static_cast<std::uint64_t>(draw) + 1);
  return h;
}

FreeParameters sample_free_parameters(Rng& rng, int n, int N, bool zero_p) {
  FreeParameters free;
  for (int m = 0; m < 4; ++m) free.a[m] = rng.ring(0.7, 1.4);
  free.t = rng.ring(0.4, 0.8);
  free.p = rng.ring(0.05, 0.3);
  free.q = rng.ring(0.05, 0.3);
  if (zero_p) free.p = cplx{};
  free.n = n;
  free.N = N;
  return free;
}

ParameterSet sample_parameter_set(Rng& rng, int n, int N, Balancing mode,
                                  const Precision& prec, bool zero_p, int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const FreeParameters free = sample_free_parameters(rng, n, N, zero_p);
    try {
      return solve_constraints(free, mode, prec);
    } catch (const GenericityFailure&) {
      continue;
    }
  }
  throw GenericityFailure("sample_parameter_set: retries exhausted");
}

}  // namespace ellsum
