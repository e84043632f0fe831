#pragma once

#include <stdexcept>
#include <string>

namespace trieig {

// Base of every error raised by the library. The CLI maps subclasses to
// exit codes: input errors -> 2, certification/validation failures -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public InputError {
 public:
  using InputError::InputError;
};

class OutsideDomain : public InputError {
 public:
  using InputError::InputError;
};

class ZeroVector : public InputError {
 public:
  using InputError::InputError;
};

class WrongCase : public InputError {
 public:
  using InputError::InputError;
};

class LevelTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class NoInteriorVertices : public InputError {
 public:
  using InputError::InputError;
};

// The finite-element oracle declines triangles it cannot resolve honestly.
class OracleRefused : public InputError {
 public:
  using InputError::InputError;
};

class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

class EigenSolveFailure : public Error {
 public:
  using Error::Error;
};

class RootNotBracketed : public Error {
 public:
  using Error::Error;
};

class IterationStalled : public Error {
 public:
  using Error::Error;
};

class InterpolationResidualTooLarge : public Error {
 public:
  using Error::Error;
};

class CertificationFailed : public Error {
 public:
  using Error::Error;
};

class BoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace trieig
