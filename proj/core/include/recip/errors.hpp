#ifndef RECIP_ERRORS_HPP
#define RECIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recip {

// Error taxonomy used across the library:
//   ShapeError       -- input has the wrong combinatorial shape (odd degree,
//                       non-palindromic coefficients, deg g > n, ...)
//   DomainError      -- input is outside an operation's domain (zero
//                       polynomial where nonzero is required, p not prime, ...)
//   SeparabilityError-- an operation that needs a separable polynomial was
//                       handed one with a repeated root
//   ResourceError    -- an explicit budget (primes, lifting precision, time)
//                       was exhausted before the answer was decided

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct SeparabilityError : std::runtime_error {
  explicit SeparabilityError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recip

#endif
