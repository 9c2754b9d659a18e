#pragma once

#include <stdexcept>
#include <string>

#include "cliffexp/multivector.hpp"

namespace cliffexp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch(Signature lhs, Signature rhs);
};

/// Raised by inverse() when the determinant is numerically zero. Carries the
/// adjugate and determinant that were computed.
class NonInvertible : public Error {
 public:
  NonInvertible(Multivector adjugate, double det);

  const Multivector& adjugate() const { return adjugate_; }
  double determinant() const { return det_; }

 private:
  Multivector adjugate_;
  double det_;
};

class NoIsolatedRoot : public Error {
 public:
  using Error::Error;
};

class NormUndefined : public Error {
 public:
  using Error::Error;
};

class MixedGradeInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedSignature : public Error {
 public:
  UnsupportedSignature(std::string_view what, Signature sig);
};

class SeriesOrderExceeded : public Error {
 public:
  SeriesOrderExceeded(int requested, int maximum);
  int maximum() const { return maximum_; }

 private:
  int maximum_;
};

class UnknownRemap : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffexp
