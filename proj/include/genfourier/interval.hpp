#pragma once

#include <genfourier/errors.hpp>

namespace genfourier {

/// Closed interval [c, d] of length 2*delta.  delta = (d - c) / 2 is exact in
/// IEEE arithmetic (division by two), so 2 * delta == d - c always holds.
struct Interval {
  double c;
  double d;
  double delta;

  Interval(double c_, double d_) : c(c_), d(d_), delta((d_ - c_) / 2.0) {
    if (!(c < d)) throw ArgumentError("Interval: requires c < d");
  }

  double length() const { return d - c; }
  bool contains(double x) const { return c <= x && x <= d; }
};

}  // namespace genfourier
