#ifndef FRACOPS_ERRORS_HPP
#define FRACOPS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracops {

// Common base so callers can catch everything the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// gamma() evaluated at 0, -1, -2, ...
class PoleError : public Error {
 public:
  using Error::Error;
};

// Result magnitude exceeds the representable double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Input has an exponent <= -1, so the convolution integral diverges.
class NotIntegrableError : public Error {
 public:
  using Error::Error;
};

// Exponent pattern incompatible with an integrable m-th derivative.
class NotCaputoAdmissibleError : public Error {
 public:
  using Error::Error;
};

// Initial-data vector length does not match the operator order m.
class LengthError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Laplace image undefined: exponent <= -1.
class NotTransformableError : public Error {
 public:
  using Error::Error;
};

class TailBoundError : public Error {
 public:
  using Error::Error;
};

class UnboundedInitialValueError : public Error {
 public:
  using Error::Error;
};

class NotLiouvilleClassError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fracops

#endif
