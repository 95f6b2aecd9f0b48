#include "cyclereal/configuration.hpp"

#include <algorithm>

namespace cyclereal {

BivariatePolynomial circle_polynomial(const Circle& c) {
    using P = BivariatePolynomial;
    P dx = P::var_x() - P::constant(c.center.x);
    P dy = P::var_y() - P::constant(c.center.y);
    return dx * dx + dy * dy - P::constant(c.radius * c.radius);
}

BivariatePolynomial center_distance_polynomial(const Point& p) {
    using P = BivariatePolynomial;
    P dx = P::var_x() - P::constant(p.x);
    P dy = P::var_y() - P::constant(p.y);
    return dx * dx + dy * dy;
}

std::string ConfigError::code_name(Code c) {
    switch (c) {
        case Code::NonpositiveRadius: return "NonpositiveRadius";
        case Code::DuplicateCircle: return "DuplicateCircle";
        case Code::Overlap: return "Overlap";
        case Code::CenterOnCircle: return "CenterOnCircle";
        case Code::BadPrescription: return "BadPrescription";
        case Code::BadInput: return "BadInput";
    }
    return "Unknown";
}

namespace {

Rational dist2(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

NestingIndex validate_configuration(const Configuration& c) {
    const int n = static_cast<int>(c.cycles.size());
    if (n == 0)
        throw ConfigError(ConfigError::Code::BadInput, "configuration has no cycles");

    for (int k = 0; k < n; ++k) {
        const auto& s = c.cycles[k];
        if (s.circle.radius.sign() <= 0)
            throw ConfigError(ConfigError::Code::NonpositiveRadius,
                              "circle " + std::to_string(k) + " has nonpositive radius", -1, k);
        if (!(s.period > 0.0))
            throw ConfigError(ConfigError::Code::BadPrescription,
                              "cycle " + std::to_string(k) + " has nonpositive period", -1, k);
        if (s.multiplicity < 1)
            throw ConfigError(ConfigError::Code::BadPrescription,
                              "cycle " + std::to_string(k) + " has multiplicity < 1", -1, k);
        if (s.interior_stability != 1 && s.interior_stability != -1)
            throw ConfigError(ConfigError::Code::BadPrescription,
                              "cycle " + std::to_string(k) + " has stability not in {-1,+1}", -1, k);
    }

    NestingIndex idx;
    idx.cycle_count = n;
    idx.cycle.resize(n);
    idx.contains.assign(n, std::vector<bool>(n, false));

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const Circle& cj = c.cycles[j].circle;
            const Circle& ck = c.cycles[k].circle;
            Rational d2 = dist2(cj.center, ck.center);
            if (d2.is_zero() && cj.radius == ck.radius)
                throw ConfigError(ConfigError::Code::DuplicateCircle,
                                  "circles " + std::to_string(j) + " and " + std::to_string(k) +
                                      " coincide",
                                  j, k);
            Rational rsum = cj.radius + ck.radius;
            Rational rdiff = cj.radius - ck.radius;
            if (d2 > rsum * rsum) continue;  // disjoint, not nested
            if (d2 < rdiff * rdiff) {
                // One strictly inside the other; the smaller radius is inside.
                if (cj.radius > ck.radius)
                    idx.contains[j][k] = true;
                else
                    idx.contains[k][j] = true;
                continue;
            }
            throw ConfigError(ConfigError::Code::Overlap,
                              "circles " + std::to_string(j) + " and " + std::to_string(k) +
                                  " intersect or touch",
                              j, k);
        }
    }

    // No center may lie on any circle.
    for (int j = 0; j < n; ++j) {
        const Circle& cj = c.cycles[j].circle;
        Rational rj2 = cj.radius * cj.radius;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            if (dist2(cj.center, c.cycles[k].circle.center) == rj2)
                throw ConfigError(ConfigError::Code::CenterOnCircle,
                                  "center of circle " + std::to_string(k) + " lies on circle " +
                                      std::to_string(j),
                                  j, k);
        }
    }

    // Depth, parent, primary flags, M_k.
    for (int k = 0; k < n; ++k) {
        auto& pc = idx.cycle[k];
        std::optional<int> parent;
        for (int j = 0; j < n; ++j) {
            if (!idx.contains[j][k]) continue;
            pc.depth += 1;
            pc.containing_multiplicity += c.cycles[j].multiplicity;
            if (!parent || idx.contains[*parent][j]) parent = j;
        }
        pc.parent = parent;
        pc.primary = std::none_of(idx.contains[k].begin(), idx.contains[k].end(),
                                  [](bool b) { return b; });
    }
    for (int k = 0; k < n; ++k)
        if (idx.cycle[k].primary) idx.primary_count += 1;

    // s_k: primary cycles inside the closed disk (itself included if primary).
    for (int k = 0; k < n; ++k) {
        int s = idx.cycle[k].primary ? 1 : 0;
        for (int j = 0; j < n; ++j)
            if (idx.contains[k][j] && idx.cycle[j].primary) s += 1;
        idx.cycle[k].primaries_inside = s;
    }

    return idx;
}

int expected_interior_stability(const NestingIndex& idx, const std::vector<int>& multiplicities,
                                int k) {
    int mk = multiplicities.at(static_cast<size_t>(k));
    int exp = mk + idx.cycle[static_cast<size_t>(k)].containing_multiplicity + 1;
    return exp % 2 == 0 ? +1 : -1;
}

int expected_stability_hyperbolic(const NestingIndex& idx, int k) {
    return idx.cycle[static_cast<size_t>(k)].depth % 2 == 0 ? +1 : -1;
}

namespace {

// Lays out node's children inside the disk (center, radius), recursively.
void layout_children(const NestingForest& forest, const std::vector<int>& children, Point center,
                     const Rational& radius, const Rational& margin_scale,
                     std::vector<Circle>& out) {
    const long c = static_cast<long>(children.size());
    if (c == 0) return;
    // Children packed on the horizontal diameter with equal radii; margin is
    // nominally a tenth of the parent radius, shrunk when many children must
    // fit (and by margin_scale on deterministic retries).
    Rational margin = radius * Rational(1, 10);
    Rational cap = radius * Rational(1, c + 1);
    if (cap < margin) margin = cap;
    margin *= margin_scale;
    // row width W = c*2*rho + (c-1)*margin fills 2*(radius - margin)
    Rational rho = (radius * 2 - margin * (c + 1)) / Rational(2 * c);
    Rational step = rho * 2 + margin;
    Rational x0 = center.x - (step * (c - 1)) / Rational(2);
    for (long t = 0; t < c; ++t) {
        int node = children[static_cast<size_t>(t)];
        Point child_center{x0 + step * Rational(t), center.y};
        out[static_cast<size_t>(node)] = Circle{child_center, rho};
        layout_children(forest, forest.nodes[static_cast<size_t>(node)].children, child_center,
                        rho, margin_scale, out);
    }
}

}  // namespace

Configuration layout_forest(const NestingForest& forest) {
    if (forest.nodes.empty())
        throw ConfigError(ConfigError::Code::BadInput, "forest has no nodes");
    // Retry with slightly smaller margins if an exact degeneracy (a center
    // landing on a circle) shows up; each retry is deterministic.
    for (int attempt = 0; attempt < 40; ++attempt) {
        Rational margin_scale = Rational(9, 10).pow(static_cast<unsigned>(attempt));
        std::vector<Circle> circles(forest.nodes.size());
        Rational root_radius(1);
        for (size_t t = 0; t < forest.roots.size(); ++t) {
            int node = forest.roots[t];
            Point center{Rational(3) * Rational(static_cast<long>(t)), Rational(0)};
            circles[static_cast<size_t>(node)] = Circle{center, root_radius};
            layout_children(forest, forest.nodes[static_cast<size_t>(node)].children, center,
                            root_radius, margin_scale, circles);
        }
        Configuration config;
        config.cycles.reserve(forest.nodes.size());
        for (size_t k = 0; k < forest.nodes.size(); ++k) {
            const auto& node = forest.nodes[k];
            config.cycles.push_back(
                CycleSpec{circles[k], node.period, node.multiplicity, node.interior_stability});
        }
        try {
            validate_configuration(config);
            return config;
        } catch (const ConfigError& e) {
            if (e.code != ConfigError::Code::CenterOnCircle || attempt == 39) throw;
        }
    }
    throw ConfigError(ConfigError::Code::BadInput, "layout failed");  // unreachable
}

NestingForest forest_of(const Configuration& c, const NestingIndex& idx) {
    NestingForest f;
    f.nodes.resize(c.cycles.size());
    for (size_t k = 0; k < c.cycles.size(); ++k) {
        f.nodes[k].period = c.cycles[k].period;
        f.nodes[k].multiplicity = c.cycles[k].multiplicity;
        f.nodes[k].interior_stability = c.cycles[k].interior_stability;
        const auto& pc = idx.cycle[k];
        if (pc.parent)
            f.nodes[static_cast<size_t>(*pc.parent)].children.push_back(static_cast<int>(k));
        else
            f.roots.push_back(static_cast<int>(k));
    }
    return f;
}

}  // namespace cyclereal
