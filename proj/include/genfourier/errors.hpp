#pragma once

#include <stdexcept>
#include <string>

namespace genfourier {

/// Argument outside the domain of a function or operation.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-range argument.
class ArgumentError : public std::invalid_argument {
public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// The requested Stieltjes integral does not exist (incompatible
/// discontinuities, or an integrator without usable derivative data).
class IntegrabilityError : public std::runtime_error {
public:
  explicit IntegrabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Quadrature failed to converge to the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
  AccuracyError(const std::string& msg, double est_error)
      : std::runtime_error(msg), est_error(est_error) {}
  double est_error;
};

/// A stated hypothesis of an identity does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Catalog / config text could not be parsed.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace genfourier
