#include "padspec/newton.hpp"

#include "padspec/error.hpp"

#include <algorithm>
#include <map>

namespace padspec {

NewtonPolygon NewtonPolygon::build(const std::vector<std::pair<long, Val>>& coeff_vals) {
    std::map<long, Val> by_index;
    long top = 0;
    bool any = false;
    for (const auto& [i, v] : coeff_vals) {
        if (i < 0) fail("EmptyPolynomial", "negative coefficient index");
        if (!any || i > top) top = i;
        any = true;
        auto it = by_index.find(i);
        if (it == by_index.end())
            by_index.emplace(i, v);
        else
            it->second = it->second.ultra_add(v); // duplicate index: keep the larger value
    }
    if (!any) fail("EmptyPolynomial", "no coefficients");

    std::vector<std::pair<long, Rational>> pts;
    for (const auto& [i, v] : by_index)
        if (!v.is_zero()) pts.emplace_back(i, v.exponent());
    if (pts.empty()) fail("EmptyPolynomial", "all coefficients vanish");
    if (pts.back().first != top) fail("EmptyPolynomial", "leading coefficient vanishes");

    NewtonPolygon np;
    np.degree_ = top;
    np.zero_roots_ = pts.front().first;

    // Lower convex hull, exact rational arithmetic.
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep b only if it lies strictly below segment a--pt
            Rational lhs = (b.second - a.second) * Rational(pt.first - a.first);
            Rational rhs = (pt.second - a.second) * Rational(b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    np.hull_ = hull;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        Rational s = (hull[k + 1].second - hull[k].second) / Rational(hull[k + 1].first - hull[k].first);
        np.segments_.push_back({s, hull[k + 1].first - hull[k].first});
    }
    return np;
}

std::vector<Val> NewtonPolygon::root_norms() const {
    std::vector<Val> out;
    for (long k = 0; k < zero_roots_; ++k) out.push_back(Val::zero());
    for (const auto& seg : segments_)
        for (long k = 0; k < seg.length; ++k) out.push_back(Val::from_exponent(-seg.slope));
    // segments have increasing slope, so exponent -slope decreases: already
    // ascending in absolute value after the zero roots.
    return out;
}

long width_at(const std::vector<std::pair<long, Val>>& coeff_vals, const Rational& rho_T) {
    bool found = false;
    Rational best;
    long lo = 0, hi = 0;
    for (const auto& [i, v] : coeff_vals) {
        if (v.is_zero()) continue;
        Rational e = v.exponent() + Rational(i) * rho_T;
        if (!found || e < best) {
            best = e;
            lo = hi = i;
            found = true;
        } else if (e == best) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
    if (!found) fail("EmptyPolynomial", "width of the zero polynomial");
    return hi - lo;
}

SlopeSplit slope_split(const NewtonPolygon& poly, const Val& threshold) {
    if (threshold.is_zero()) fail("ThresholdHitsRoot", "threshold must be a positive radius");
    SlopeSplit out;
    for (const auto& z : poly.root_norms()) {
        if (z == threshold) fail("ThresholdHitsRoot", "a root norm equals the threshold");
        if (z.abs_lt(threshold))
            out.lower.push_back(z);
        else
            out.upper.push_back(z);
    }
    return out;
}

} // namespace padspec
