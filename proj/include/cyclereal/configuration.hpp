#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclereal/polynomial.hpp"
#include "cyclereal/rational.hpp"

namespace cyclereal {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
    Point center;
    Rational radius;

    friend bool operator==(const Circle&, const Circle&) = default;
};

/// f_k(x,y) = (x-x_k)^2 + (y-y_k)^2 - r_k^2
BivariatePolynomial circle_polynomial(const Circle& c);
/// g_k(x,y) = (x-x_k)^2 + (y-y_k)^2
BivariatePolynomial center_distance_polynomial(const Point& p);

/// One cycle with its prescriptions: period T_k, multiplicity m_k and
/// interior stability nu_k (-1 stable, +1 unstable).
struct CycleSpec {
    Circle circle;
    double period = 1.0;
    int multiplicity = 1;
    int interior_stability = +1;

    /// Exterior stability, determined as (-1)^(m+1) * nu.
    int exterior_stability() const {
        return (multiplicity % 2 == 1) ? interior_stability : -interior_stability;
    }
};

struct Configuration {
    std::vector<CycleSpec> cycles;

    size_t size() const { return cycles.size(); }
};

class ConfigError : public std::runtime_error {
public:
    enum class Code {
        NonpositiveRadius,
        DuplicateCircle,
        Overlap,
        CenterOnCircle,
        BadPrescription,
        BadInput,
    };

    ConfigError(Code code, std::string message, int j = -1, int k = -1)
        : std::runtime_error(std::move(message)), code(code), j(j), k(k) {}

    static std::string code_name(Code c);

    Code code;
    int j;
    int k;
};

/// Derived nesting combinatorics of a valid configuration.
struct NestingIndex {
    struct PerCycle {
        std::optional<int> parent;  // smallest circle strictly containing this one
        bool primary = false;       // bounded disk contains no other cycle
        int depth = 0;              // N_k: number of cycles strictly containing C_k
        int containing_multiplicity = 0;  // M_k: sum of their multiplicities
        int primaries_inside = 0;   // s_k: primary cycles in the closed disk of C_k
    };

    std::vector<PerCycle> cycle;
    std::vector<std::vector<bool>> contains;  // contains[j][k]: C_k strictly inside C_j
    int primary_count = 0;  // r
    int cycle_count = 0;    // n
};

/// Validates disjointness and center placement exactly (rational arithmetic
/// on squared distances) and derives the nesting index.
NestingIndex validate_configuration(const Configuration& c);

/// Interior stability the construction yields without augmentation:
/// (-1)^(m_k + M_k + 1).
int expected_interior_stability(const NestingIndex& idx, const std::vector<int>& multiplicities,
                                int k);
/// All-hyperbolic shortcut (-1)^(N_k); agrees with the general formula when
/// every multiplicity is 1.
int expected_stability_hyperbolic(const NestingIndex& idx, int k);

/// Abstract configuration up to homeomorphism: a rooted forest of cycles,
/// each node carrying its prescriptions.
struct NestingForest {
    struct Node {
        double period = 1.0;
        int multiplicity = 1;
        int interior_stability = +1;
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    std::vector<int> roots;

    size_t size() const { return nodes.size(); }
};

/// Realizes a nesting forest as concrete circles with rational centers and
/// radii. Deterministic; the k-th output cycle corresponds to forest node k,
/// and the containment forest of the result is isomorphic to the input.
Configuration layout_forest(const NestingForest& forest);

/// Reads the containment forest off a validated configuration (inverse view
/// of layout_forest, used by round-trip tests).
NestingForest forest_of(const Configuration& c, const NestingIndex& idx);

}  // namespace cyclereal
