#pragma once

#include <genfourier/expr.hpp>
#include <genfourier/errors.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace genfourier::funcmodel {

/// A distinguished point of a piecewise function.  One-sided values are the
/// limits of the adjacent pieces; `value_at` is the function's assigned value
/// at the point (free in general, so stored explicitly).
struct Breakpoint {
  double x = 0.0;
  std::optional<double> left_value;   // absent at the left domain endpoint
  std::optional<double> right_value;  // absent at the right domain endpoint
  double value_at = 0.0;

  bool jumps_from_left() const { return left_value && *left_value != value_at; }
  bool jumps_from_right() const { return right_value && *right_value != value_at; }
  bool is_removable() const {
    return left_value && right_value && *left_value == *right_value && *left_value == value_at;
  }
};

/// A maximal smooth span (lo, hi) with a closed-form expression and an
/// optional closed-form derivative valid on the open span.
struct SmoothPiece {
  double lo = 0.0;
  double hi = 0.0;
  ExprPtr expr;
  ExprPtr deriv;  // may be null

  bool is_constant() const { return expr && expr->is_constant(); }
};

/// Overrides used when assembling a PiecewiseFn.  Values left unset are
/// derived from the adjacent pieces (one-sided limits) with value_at
/// defaulting to the right limit (left limit at the right domain endpoint).
struct BreakSpec {
  double x = 0.0;
  std::optional<double> value_at;
  std::optional<double> left_value;
  std::optional<double> right_value;
};

/// A function on [lo, hi] represented as smooth pieces that tile the domain
/// exactly, plus breakpoints carrying one-sided values for every piece
/// boundary.  Immutable after construction.
class PiecewiseFn {
public:
  /// Assembles and validates the representation.  Pieces must be contiguous
  /// and ascending; every piece boundary becomes a breakpoint.
  static PiecewiseFn build(std::vector<SmoothPiece> pieces, std::vector<BreakSpec> overrides = {},
                           bool bv_flag = false);

  double domain_lo() const { return pieces_.front().lo; }
  double domain_hi() const { return pieces_.back().hi; }
  bool bv_flag() const { return bv_; }

  const std::vector<SmoothPiece>& pieces() const { return pieces_; }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

  /// Value at x: the stored value at a breakpoint, else the owning piece.
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// One-sided limits; stored at breakpoints, eval elsewhere.
  double left_limit(double x) const;
  double right_limit(double x) const;

  /// Jump with the step-integrator endpoint conventions: right-minus-left in
  /// the interior, one-sided against value_at at the domain endpoints.
  double jump_at(double x) const;

  /// Breakpoint lookup by exact coordinate.
  const Breakpoint* breakpoint_at(double x) const;

  /// True when every piece is constant (a step function).
  bool is_step() const;

  /// Bounded variation declared, or every non-constant piece differentiable.
  bool is_good() const;

  /// The restriction to [lo, hi] (which must lie inside the domain), with
  /// optional reassignment of the values at the new endpoints.
  PiecewiseFn restricted(double lo, double hi, std::optional<double> value_at_lo = std::nullopt,
                         std::optional<double> value_at_hi = std::nullopt) const;

  /// Index of the piece whose closure contains x (ties resolve left).
  size_t piece_index(double x) const;

private:
  PiecewiseFn() = default;
  std::vector<SmoothPiece> pieces_;
  std::vector<Breakpoint> breakpoints_;
  bool bv_ = false;
};

/// Named collection of piecewise functions.  Registration spot-checks any
/// declared derivative against central finite differences and the stored
/// one-sided values against the piece expressions.
class FunctionCatalog {
public:
  void add(const std::string& name, PiecewiseFn fn);
  const PiecewiseFn& get(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::vector<std::string> names() const;

  const std::map<std::string, PiecewiseFn>& entries() const { return entries_; }

private:
  std::map<std::string, PiecewiseFn> entries_;
};

/// Registration-time checks (throws ArgumentError on failure).
void validate_function(const std::string& name, const PiecewiseFn& fn);

/// The functions used throughout the test and verification suites:
///   identity, square, parabola, cosine, sawtooth, step_half, vkink,
///   const_one on [0,1]; identity10, square10, cube10, quartic10 on [0,10].
FunctionCatalog builtin_catalog();

/// Catalog text format (see README for the grammar).  Serialization prints
/// doubles with %.17g, so parse(serialize(c)) reproduces every value exactly.
std::string serialize_catalog(const FunctionCatalog& catalog);
FunctionCatalog parse_catalog(std::istream& in);
FunctionCatalog parse_catalog_text(const std::string& text);

}  // namespace genfourier::funcmodel
