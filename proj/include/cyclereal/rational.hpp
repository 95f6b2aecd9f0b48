#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclereal {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in canonical form: denominator > 0 and gcd(|num|, den) = 1.
/// Arithmetic is exact; conversion to double happens only at the evaluation
/// boundary.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num/den" or a plain integer "num". Throws std::invalid_argument.
    static Rational parse(std::string_view s);
    static std::optional<Rational> try_parse(std::string_view s);

    /// Exact dyadic representation of a finite double.
    static Rational from_double(double x);

    /// Nearest rational with small denominator such that the relative error
    /// against x is at most rel_tol (continued-fraction convergents).
    static Rational from_double_rounded(double x, double rel_tol);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(unsigned long e) const;

    double to_double() const { return v_.get_d(); }

    /// "num" when the denominator is 1, otherwise "num/den".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Rational lower/upper bounds for sqrt(x), x >= 0, tight to about 2^-bits.
Rational sqrt_lower_bound(const Rational& x, unsigned bits = 64);
Rational sqrt_upper_bound(const Rational& x, unsigned bits = 64);

}  // namespace cyclereal
