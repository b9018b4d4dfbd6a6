#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace koshlab {

// Base class for all numerical-domain failures raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside a function's stated domain.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Evaluation at a pole; carries the offending integer when applicable.
class PoleError : public Error {
  public:
    PoleError(const std::string& msg, std::int64_t at) : Error(msg), pole_at(at) {}
    std::int64_t pole_at;
};

// Argument on a branch cut.
class BranchError : public Error {
  public:
    using Error::Error;
};

// Iteration/subdivision budget exhausted; carries the best estimate so far.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, std::complex<double> best, double err)
        : Error(msg), best_estimate(best), abs_err(err) {}
    std::complex<double> best_estimate;
    double abs_err;
};

// Sieve lookup beyond the cached limit.
class CacheMissError : public Error {
  public:
    using Error::Error;
};

// Parameter region the implementation deliberately does not cover.
class UnsupportedRegionError : public Error {
  public:
    using Error::Error;
};

}  // namespace koshlab
