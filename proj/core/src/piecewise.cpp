#include "pclab/piecewise.hpp"

#include <algorithm>
#include <optional>

namespace pclab {

namespace {

struct Affine {
    Rational slope;
    Rational intercept;
    Rational at(const Rational& x) const { return slope * x + intercept; }
};

Affine segment_form(const Rational& x0, const Rational& y0, const Rational& x1,
                    const Rational& y1) {
    Rational slope = (y1 - y0) / (x1 - x0);
    return Affine{slope, y0 - slope * x0};
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() < 2 || xs_.size() != ys_.size())
        throw std::invalid_argument("piecewise: need matching breakpoints/values, >= 2");
    if (xs_.front() != 0 || xs_.back() != 1)
        throw std::invalid_argument("piecewise: domain must be [0,1]");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        if (!(xs_[i - 1] < xs_[i]))
            throw std::invalid_argument("piecewise: breakpoints must increase");
}

PiecewiseLinear PiecewiseLinear::affine(const Rational& slope, const Rational& intercept) {
    return PiecewiseLinear({Rational(0), Rational(1)}, {intercept, slope + intercept});
}

PiecewiseLinear PiecewiseLinear::constant(const Rational& value) {
    return affine(Rational(0), value);
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (x < 0 || x > 1) throw std::domain_error("piecewise: evaluation outside [0,1]");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.end()) return ys_.back();
    std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
    if (hi == 0) return ys_.front();
    std::size_t lo = hi - 1;
    if (xs_[lo] == x) return ys_[lo];
    return segment_form(xs_[lo], ys_[lo], xs_[hi], ys_[hi]).at(x);
}

PiecewiseLinear PiecewiseLinear::plus_affine(const Rational& slope,
                                             const Rational& intercept) const {
    std::vector<Rational> ys = ys_;
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] += slope * xs_[i] + intercept;
    return PiecewiseLinear(xs_, std::move(ys));
}

Rational PiecewiseLinear::min_value() const {
    return *std::min_element(ys_.begin(), ys_.end());
}

PiecewiseLinear PiecewiseLinear::simplified() const {
    std::vector<Rational> xs{xs_.front()};
    std::vector<Rational> ys{ys_.front()};
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
        // keep xs_[i] unless collinear with neighbours
        Rational lhs = (ys_[i] - ys[ys.size() - 1]) * (xs_[i + 1] - xs_[i]);
        Rational rhs = (ys_[i + 1] - ys_[i]) * (xs_[i] - xs[xs.size() - 1]);
        if (lhs != rhs) {
            xs.push_back(xs_[i]);
            ys.push_back(ys_[i]);
        }
    }
    xs.push_back(xs_.back());
    ys.push_back(ys_.back());
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

bool PiecewiseLinear::is_convex() const {
    std::optional<Rational> prev;
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        Rational slope = (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
        if (prev && slope < *prev) return false;
        prev = slope;
    }
    return true;
}

namespace {

template <typename Pick>
PiecewiseLinear combine(const PiecewiseLinear& f, const PiecewiseLinear& g, Pick pick) {
    std::vector<Rational> grid = f.breakpoints();
    grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
    grid = sorted_unique(std::move(grid));

    // add interior crossings per refined segment
    std::vector<Rational> xs = grid;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const Rational &a = grid[i], &b = grid[i + 1];
        Affine fa = segment_form(a, f(a), b, f(b));
        Affine ga = segment_form(a, g(a), b, g(b));
        if (fa.slope == ga.slope) continue;
        Rational x = (ga.intercept - fa.intercept) / (fa.slope - ga.slope);
        if (a < x && x < b) xs.push_back(x);
    }
    xs = sorted_unique(std::move(xs));

    std::vector<Rational> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) ys.push_back(pick(f(x), g(x)));
    return PiecewiseLinear(std::move(xs), std::move(ys)).simplified();
}

}  // namespace

PiecewiseLinear pointwise_max(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    return combine(f, g, [](const Rational& a, const Rational& b) { return std::max(a, b); });
}

PiecewiseLinear pointwise_min(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    return combine(f, g, [](const Rational& a, const Rational& b) { return std::min(a, b); });
}

namespace {

// One candidate value function of the shift parameter: affine on a validity
// window, +infinity (absent) elsewhere.
struct Candidate {
    Affine value;
    Rational valid_lo, valid_hi;  // inclusive window in shift-space
    bool covers(const Rational& a, const Rational& b) const {
        return valid_lo <= a && b <= valid_hi;
    }
};

}  // namespace

PiecewiseLinear parametric_min_max(const PiecewiseLinear& u, const PiecewiseLinear& h,
                                   const Rational& shift_lo, const Rational& shift_hi) {
    if (!(shift_lo < shift_hi))
        throw std::invalid_argument("parametric_min_max: empty shift range");

    std::vector<Rational> grid = u.breakpoints();
    grid.insert(grid.end(), h.breakpoints().begin(), h.breakpoints().end());
    grid = sorted_unique(std::move(grid));

    std::vector<Candidate> candidates;
    std::vector<Rational> cuts{shift_lo, shift_hi};

    // Breakpoint candidates: value max{shift + u(s_j), h(s_j)} is convex with a
    // kink where the two branches meet.
    for (const auto& s : grid) {
        Rational us = u(s), hs = h(s);
        Rational kink = hs - us;
        candidates.push_back({Affine{Rational(1), us}, kink, shift_hi});      // shift + u(s)
        candidates.push_back({Affine{Rational(0), hs}, shift_lo, kink});      // h(s)
        if (shift_lo < kink && kink < shift_hi) cuts.push_back(kink);
    }

    // Interior-crossing candidates: on each segment, shift + u and h cross at
    // s_x(shift); the max at the crossing equals h(s_x(shift)), affine in shift.
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const Rational &a = grid[i], &b = grid[i + 1];
        Affine ua = segment_form(a, u(a), b, u(b));
        Affine ha = segment_form(a, h(a), b, h(b));
        if (ua.slope == ha.slope) continue;
        // s_x = (ha.intercept - ua.intercept - shift) / (ua.slope - ha.slope)
        Rational d = ua.slope - ha.slope;
        // validity: a <= s_x <= b
        Rational at_a = ha.intercept - ua.intercept - d * a;   // shift making s_x = a
        Rational at_b = ha.intercept - ua.intercept - d * b;
        Rational lo = std::min(at_a, at_b), hi = std::max(at_a, at_b);
        lo = std::max(lo, shift_lo);
        hi = std::min(hi, shift_hi);
        if (!(lo <= hi)) continue;
        // value = ha at s_x: slope_in_shift = -ha.slope/d
        Affine val{-ha.slope / d,
                   ha.intercept + ha.slope * (ha.intercept - ua.intercept) / d};
        candidates.push_back({val, lo, hi});
        if (shift_lo < lo && lo < shift_hi) cuts.push_back(lo);
        if (shift_lo < hi && hi < shift_hi) cuts.push_back(hi);
    }

    cuts = sorted_unique(std::move(cuts));

    // Within each atomic interval every candidate is affine or absent; cut
    // further at pairwise intersections so the minimum is a single candidate
    // per micro-interval.
    std::vector<Rational> all_cuts = cuts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational &a = cuts[i], &b = cuts[i + 1];
        std::vector<const Candidate*> active;
        for (const auto& c : candidates)
            if (c.covers(a, b)) active.push_back(&c);
        for (std::size_t p = 0; p < active.size(); ++p)
            for (std::size_t q = p + 1; q < active.size(); ++q) {
                const Affine &fa = active[p]->value, &ga = active[q]->value;
                if (fa.slope == ga.slope) continue;
                Rational x = (ga.intercept - fa.intercept) / (fa.slope - ga.slope);
                if (a < x && x < b) all_cuts.push_back(x);
            }
    }
    all_cuts = sorted_unique(std::move(all_cuts));

    auto min_at = [&](const Rational& shift) {
        bool have = false;
        Rational best;
        for (const auto& c : candidates) {
            if (!(c.valid_lo <= shift && shift <= c.valid_hi)) continue;
            Rational v = c.value.at(shift);
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
        if (!have) throw std::logic_error("parametric_min_max: no candidate");
        return best;
    };

    Rational span = shift_hi - shift_lo;
    std::vector<Rational> xs, ys;
    xs.reserve(all_cuts.size());
    for (const auto& c : all_cuts) {
        xs.push_back((c - shift_lo) / span);
        ys.push_back(min_at(c));
    }
    return PiecewiseLinear(std::move(xs), std::move(ys)).simplified();
}

}  // namespace pclab
