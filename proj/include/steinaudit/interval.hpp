#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace steinaudit {

/// An extended-real interval. Infinite endpoints are always open; finite
/// endpoints may be open or closed (the distinction only matters for the
/// closure, all integration happens over the interior).
struct Interval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool lower_open = true;
  bool upper_open = true;

  static Interval whole_line() { return {}; }
  static Interval positive_half() { return {0.0, std::numeric_limits<double>::infinity(), true, true}; }
  static Interval negative_half() { return {-std::numeric_limits<double>::infinity(), 0.0, true, true}; }
  static Interval open(double a, double b) { return {a, b, true, true}; }
  static Interval closed(double a, double b) { return {a, b, false, false}; }

  bool lower_infinite() const { return std::isinf(lower); }
  bool upper_infinite() const { return std::isinf(upper); }
  bool bounded() const { return !lower_infinite() && !upper_infinite(); }

  bool contains_interior(double x) const { return x > lower && x < upper; }
  bool contains_closure(double x) const { return x >= lower && x <= upper; }

  // Interior-as-point-set comparisons; open/closed flags are irrelevant here.
  bool subset_of(const Interval& other) const {
    return lower >= other.lower && upper <= other.upper;
  }
  bool same_interior(const Interval& other) const {
    return lower == other.lower && upper == other.upper;
  }

  double width() const { return upper - lower; }

  /// Some finite point strictly inside the interval.
  double interior_point() const {
    if (bounded()) return 0.5 * (lower + upper);
    if (!lower_infinite()) return lower + 1.0;
    if (!upper_infinite()) return upper - 1.0;
    return 0.0;
  }

  std::string str() const;
};

/// Throws InvalidParams unless lower < upper and infinite endpoints are open.
Interval validated(Interval iv);

}  // namespace steinaudit
