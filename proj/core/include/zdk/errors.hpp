#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zdk {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// symfunc
class ConfluentParameters : public Error {
 public:
  using Error::Error;
};
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// coeffs
class MissingLocalFactor : public Error {
 public:
  explicit MissingLocalFactor(std::uint64_t p)
      : Error("no local factor supplied for prime " + std::to_string(p)), prime_(p) {}
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};
class CutoffMismatch : public Error {
 public:
  using Error::Error;
};

// lfunc
class RegionError : public Error {
 public:
  using Error::Error;
};
class PoleAtOne : public Error {
 public:
  PoleAtOne() : Error("Hurwitz zeta has a pole at s = 1") {}
};
class PrincipalCharacter : public Error {
 public:
  using Error::Error;
};
class QuadratureDivergence : public Error {
 public:
  using Error::Error;
};
class BoundaryZero : public Error {
 public:
  using Error::Error;
};

// zerostats
class UnsortedInput : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};
class RangeError : public Error {
 public:
  using Error::Error;
};
class IncompleteDataset : public Error {
 public:
  using Error::Error;
};
class PositivityViolation : public Error {
 public:
  using Error::Error;
};

// sievesim
class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or configuration detected before any computation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdk
