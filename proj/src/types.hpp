#ifndef ELLSUM_TYPES_HPP
#define ELLSUM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace ellsum {

// Only double precision ships; keep the scalar type in one place so it can
// be swapped.
using real = double;
using cplx = std::complex<real>;

enum class errc {
  domain = 1,
  truncation = 2,
  near_pole = 3,
  genericity = 4,
  range = 5,
  observable = 6,
  config = 7,
  internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(errc::domain, msg) {}
};
struct TruncationFailure : Error {
  explicit TruncationFailure(const std::string& msg) : Error(errc::truncation, msg) {}
};
struct NearPole : Error {
  explicit NearPole(const std::string& msg) : Error(errc::near_pole, msg) {}
};
struct GenericityFailure : Error {
  explicit GenericityFailure(const std::string& msg) : Error(errc::genericity, msg) {}
};
struct RangeError : Error {
  explicit RangeError(const std::string& msg) : Error(errc::range, msg) {}
};
struct ObservableSingular : Error {
  explicit ObservableSingular(const std::string& msg) : Error(errc::observable, msg) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(errc::config, msg) {}
};

}  // namespace ellsum

#endif
