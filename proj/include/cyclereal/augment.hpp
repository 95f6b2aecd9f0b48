#pragma once

#include <vector>

#include "cyclereal/configuration.hpp"

namespace cyclereal {

enum class AugmentMode {
    Hyperbolic,  // all multiplicities 1: one concentric circle per cycle
    General,     // parity rules by multiplicity and prescribed stability
};

class AugmentError : public std::runtime_error {
public:
    enum class Code { AugmentationFailed, ClearanceTooSmall };

    AugmentError(Code code, std::string message)
        : std::runtime_error(std::move(message)), code(code) {}

    Code code;
};

/// Base configuration plus the helper circles that force the prescribed
/// interior stabilities, with one singular point placed on each helper.
struct AugmentedConfiguration {
    Configuration base;
    std::vector<Circle> extra_circles;
    Rational epsilon;
    std::vector<Point> singular_points;  // q_j, one per extra circle, on it exactly

    int total_count = 0;    // N = n + (extra circles added by the rules)
    int count_n1 = 0;       // cycles with odd multiplicity
    int count_n2_rules = 0; // cycles with even multiplicity and nu = +1 (circles added in pairs)
    int count_n2_stated = 0;  // cycles with even multiplicity and M_k odd (stated count)

    size_t base_count() const { return base.cycles.size(); }

    /// Base cycles followed by the extra circles (multiplicity 1 each).
    /// Extra cycles carry no prescriptions; their period slot holds 0.
    std::vector<CycleSpec> all_cycles() const;
};

struct AugmentOptions {
    Rational min_epsilon = Rational(1, 1000000000);  // ClearanceTooSmall below this
};

/// Certified rational lower bound on the minimum clearance of a circle set:
/// min over circle-to-circle gaps, circle-to-center gaps and all radii.
Rational min_clearance_lower_bound(const std::vector<Circle>& circles);

/// Distance from cycle k to the nearest other feature (another circle as a
/// curve, a center point, or its own center), in double precision. Used to
/// size measurement offsets.
double cycle_clearance(const std::vector<Circle>& circles, size_t k);

/// Adds helper circles so that every base cycle's interior stability comes
/// out as prescribed, then re-validates and re-checks the stability formula
/// (-1)^(m_k + M_k + 1) = nu_k over the augmented set.
AugmentedConfiguration augment_for_stability(const Configuration& c, const NestingIndex& idx,
                                             AugmentMode mode, const AugmentOptions& opts = {});

/// Nesting index of base + extra circles (extras have multiplicity 1).
NestingIndex validate_augmented(const AugmentedConfiguration& aug);

}  // namespace cyclereal
