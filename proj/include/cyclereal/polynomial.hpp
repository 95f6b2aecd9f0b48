#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cyclereal/rational.hpp"

namespace cyclereal {

/// Exponent pair of a monomial x^i y^j.
struct Monomial {
    int i = 0;
    int j = 0;

    int total() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: by total degree, then by x-exponent.
/// This is the fixed term order used for exact division.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.i < b.i;
}

/// Sparse bivariate polynomial in x, y with exact rational coefficients.
///
/// Terms are stored sorted by graded-lex order with no zero coefficients,
/// so equal polynomials have identical representations.
class BivariatePolynomial {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    /// Sentinel degree of the zero polynomial ("minus infinity").
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    BivariatePolynomial() = default;

    static BivariatePolynomial zero() { return {}; }
    static BivariatePolynomial constant(Rational c);
    static BivariatePolynomial monomial(int i, int j, Rational c);
    static BivariatePolynomial var_x() { return monomial(1, 0, Rational(1)); }
    static BivariatePolynomial var_y() { return monomial(0, 1, Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of x^i y^j (zero if absent).
    Rational coefficient(int i, int j) const;

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const Rational& s);
    friend BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& a) { return a * s; }

    BivariatePolynomial pow(unsigned e) const;
    BivariatePolynomial diff_x() const;
    BivariatePolynomial diff_y() const;

    /// Horner evaluation after converting coefficients to double.
    double eval(double x, double y) const;
    /// Exact evaluation at a rational point.
    Rational eval_exact(const Rational& x, const Rational& y) const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    /// Human-readable form, e.g. "2*x^3 - 4*x^2*y + 2*y".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p);

    /// Serialization: [[i, j, "num/den"], ...] sorted by (i+j, i). Bit-exact.
    nlohmann::ordered_json to_json() const;
    static BivariatePolynomial from_json(const nlohmann::json& j);

    /// Builds from unsorted (possibly duplicated) terms; canonicalizes.
    static BivariatePolynomial from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;  // graded-lex ascending, no zero coefficients
};

/// q with p = q * d exactly, or nullopt when d does not divide p.
/// Division uses the fixed graded-lex term order; success iff remainder is 0.
/// Throws std::invalid_argument when d is the zero polynomial.
std::optional<BivariatePolynomial> exact_divide(const BivariatePolynomial& p,
                                                const BivariatePolynomial& d);

/// Largest k with f^k dividing p exactly. Requires p nonzero and f nonconstant.
int vanishing_order(const BivariatePolynomial& p, const BivariatePolynomial& f);

/// Double-precision Horner evaluator compiled from a polynomial.
/// Used on hot paths (ODE right-hand sides, quadrature integrands).
class CompiledBivariate {
public:
    CompiledBivariate() = default;
    explicit CompiledBivariate(const BivariatePolynomial& p);

    double operator()(double x, double y) const;

private:
    struct Row {
        int ypow;
        int max_xpow;
        std::vector<double> xcoef;  // dense in x, ascending power
    };
    std::vector<Row> rows_;  // ascending y power
};

}  // namespace cyclereal
