#include "cyclereal/augment.hpp"

#include <algorithm>
#include <cmath>

namespace cyclereal {

namespace {

Rational dist2(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

std::vector<CycleSpec> AugmentedConfiguration::all_cycles() const {
    std::vector<CycleSpec> all = base.cycles;
    all.reserve(base.cycles.size() + extra_circles.size());
    for (const auto& circle : extra_circles) {
        CycleSpec spec;
        spec.circle = circle;
        spec.period = 0.0;  // not prescribed
        spec.multiplicity = 1;
        spec.interior_stability = +1;  // placeholder; extras carry no prescription
        all.push_back(spec);
    }
    return all;
}

Rational min_clearance_lower_bound(const std::vector<Circle>& circles) {
    Rational best(-1);
    auto consider = [&best](const Rational& v) {
        if (best.sign() < 0 || v < best) best = v;
    };
    const size_t n = circles.size();
    for (size_t k = 0; k < n; ++k) consider(circles[k].radius);
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            Rational d2 = dist2(circles[j].center, circles[k].center);
            if (k > j) {
                // circle-to-circle gap
                Rational rsum = circles[j].radius + circles[k].radius;
                if (d2 > rsum * rsum) {
                    // separated: dist - (r_j + r_k); lower bound of dist
                    consider(sqrt_lower_bound(d2) - rsum);
                } else {
                    // nested: big - small - dist; upper bound of dist
                    Rational big = std::max(circles[j].radius, circles[k].radius);
                    Rational small = std::min(circles[j].radius, circles[k].radius);
                    consider(big - small - sqrt_upper_bound(d2));
                }
            }
            // center k against circle j: |dist - r_j|
            if (d2 > circles[j].radius * circles[j].radius) {
                consider(sqrt_lower_bound(d2) - circles[j].radius);
            } else {
                consider(circles[j].radius - sqrt_upper_bound(d2));
            }
        }
    }
    return best;
}

double cycle_clearance(const std::vector<Circle>& circles, size_t k) {
    const Circle& ck = circles[k];
    double r = ck.radius.to_double();
    double best = r;  // own center sits at distance r from the curve
    double cx = ck.center.x.to_double(), cy = ck.center.y.to_double();
    for (size_t j = 0; j < circles.size(); ++j) {
        if (j == k) continue;
        const Circle& cj = circles[j];
        double d = std::hypot(cj.center.x.to_double() - cx, cj.center.y.to_double() - cy);
        double rj = cj.radius.to_double();
        // gap between the two curves (either separated or nested)
        double gap = std::min(std::abs(d - (r + rj)), std::abs(std::abs(r - rj) - d));
        best = std::min(best, gap);
        // other center against this curve
        best = std::min(best, std::abs(d - r));
    }
    return best;
}

AugmentedConfiguration augment_for_stability(const Configuration& c, const NestingIndex& idx,
                                             AugmentMode mode, const AugmentOptions& opts) {
    const int n = static_cast<int>(c.cycles.size());
    if (mode == AugmentMode::Hyperbolic) {
        for (const auto& s : c.cycles)
            if (s.multiplicity != 1)
                throw AugmentError(AugmentError::Code::AugmentationFailed,
                                   "hyperbolic augmentation requires all multiplicities 1");
    }

    std::vector<Circle> base_circles;
    base_circles.reserve(c.cycles.size());
    for (const auto& s : c.cycles) base_circles.push_back(s.circle);

    Rational clearance = min_clearance_lower_bound(base_circles);
    Rational eps = clearance / Rational(4);
    if (eps < opts.min_epsilon)
        throw AugmentError(AugmentError::Code::ClearanceTooSmall,
                           "clearance lower bound " + clearance.str() +
                               " gives epsilon below the configured floor");

    AugmentedConfiguration aug;
    aug.base = c;
    aug.epsilon = eps;

    auto add_circle = [&aug](const Point& center, const Rational& radius) {
        aug.extra_circles.push_back(Circle{center, radius});
        // Singular point at angle 0 from the center: exact rational coordinates.
        aug.singular_points.push_back(Point{center.x + radius, center.y});
    };

    for (int k = 0; k < n; ++k) {
        const auto& s = c.cycles[k];
        const Rational& r = s.circle.radius;
        const int nu = s.interior_stability;
        if (mode == AugmentMode::Hyperbolic) {
            add_circle(s.circle.center, nu > 0 ? r - eps : r + eps);  // radius r - nu*eps
            continue;
        }
        if (s.multiplicity % 2 == 1) {
            aug.count_n1 += 1;
            add_circle(s.circle.center, nu > 0 ? r - eps : r + eps);
        } else if (nu == +1) {
            aug.count_n2_rules += 1;
            add_circle(s.circle.center, r - eps);
            add_circle(s.circle.center, r + eps);
        }  // even multiplicity with nu = -1: nothing
        if (s.multiplicity % 2 == 0 && idx.cycle[static_cast<size_t>(k)].containing_multiplicity % 2 == 1)
            aug.count_n2_stated += 1;
    }
    aug.total_count = n + static_cast<int>(aug.extra_circles.size());

    // The parity argument behind the rules is verified, not assumed.
    NestingIndex full = validate_augmented(aug);
    std::vector<int> mults;
    mults.reserve(static_cast<size_t>(aug.total_count));
    for (const auto& s : c.cycles) mults.push_back(s.multiplicity);
    for (size_t j = 0; j < aug.extra_circles.size(); ++j) mults.push_back(1);
    for (int k = 0; k < n; ++k) {
        int achieved = expected_interior_stability(full, mults, k);
        if (achieved != c.cycles[static_cast<size_t>(k)].interior_stability)
            throw AugmentError(AugmentError::Code::AugmentationFailed,
                               "augmentation rules do not produce prescribed stability for cycle " +
                                   std::to_string(k));
    }

    // q_j must sit on its circle exactly.
    for (size_t j = 0; j < aug.extra_circles.size(); ++j) {
        const auto& circle = aug.extra_circles[j];
        Rational fq = circle_polynomial(circle).eval_exact(aug.singular_points[j].x,
                                                           aug.singular_points[j].y);
        if (!fq.is_zero())
            throw AugmentError(AugmentError::Code::AugmentationFailed,
                               "singular point off its circle (internal error)");
    }

    return aug;
}

NestingIndex validate_augmented(const AugmentedConfiguration& aug) {
    Configuration combined;
    combined.cycles = aug.all_cycles();
    // Extras carry no period prescription: give the validator a positive dummy.
    for (size_t k = aug.base.cycles.size(); k < combined.cycles.size(); ++k)
        combined.cycles[k].period = 1.0;
    return validate_configuration(combined);
}

}  // namespace cyclereal
