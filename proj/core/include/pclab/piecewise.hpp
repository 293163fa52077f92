#pragma once

#include "pclab/rational.hpp"

#include <vector>

namespace pclab {

// Continuous piecewise-linear function on [0, 1] with exact rational
// breakpoints and values. Linear interpolation between breakpoints.
class PiecewiseLinear {
  public:
    // Breakpoints must start at 0, end at 1, strictly increasing.
    PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys);

    static PiecewiseLinear affine(const Rational& slope, const Rational& intercept);
    static PiecewiseLinear constant(const Rational& value);

    Rational operator()(const Rational& x) const;

    const std::vector<Rational>& breakpoints() const { return xs_; }
    const std::vector<Rational>& values() const { return ys_; }

    // f(x) + (slope*x + intercept), exact.
    PiecewiseLinear plus_affine(const Rational& slope, const Rational& intercept) const;

    Rational min_value() const;

    // Drops breakpoints that lie on the segment between their neighbours.
    PiecewiseLinear simplified() const;

    bool is_convex() const;

    friend PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g);
    friend PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g);

  private:
    std::vector<Rational> xs_;
    std::vector<Rational> ys_;
};

PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g);

// min over s in [0,1] of max{ shift + u(s), h(s) }, computed exactly as a
// piecewise-linear function of the shift on [shift_lo, shift_hi], then
// re-parameterised to [0,1] via shift = shift_lo + t*(shift_hi - shift_lo).
// u and h live on s in [0,1]. Used by the exponent-recurrence oracle, where
// the shift is a_r/2 and t recovers a_r.
PiecewiseLinear parametric_min_max(const PiecewiseLinear& u, const PiecewiseLinear& h,
                                   const Rational& shift_lo, const Rational& shift_hi);

}  // namespace pclab
