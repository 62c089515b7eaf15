#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qpol {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state violates normalization, Hermiticity, positivity or another invariant.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A Fock index (n, k) with k outside [0, n] or a negative manifold.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed state document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Request that has no solution in the supported families.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Three-photon amplitude pair outside the admissible region.
class OutsideRegion : public Error {
 public:
  using Error::Error;
};

}  // namespace qpol
