#include "cyclereal/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cyclereal {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::try_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s)) return std::nullopt;
            return Rational(mpq_class(mpz_class(std::string(s))));
        }
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) return std::nullopt;
        mpz_class num(std::string(ns)), den(std::string(ds));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Rational Rational::parse(std::string_view s) {
    auto r = try_parse(s);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    return *r;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

Rational Rational::from_double_rounded(double x, double rel_tol) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite double");
    if (x == 0.0) return Rational(0);
    Rational exact = from_double(x);
    // Continued-fraction convergents of |x|; stop at the first within rel_tol.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpq_class rest = ::abs(exact.num()) / mpq_class(exact.den());
    Rational target(mpq_class(::abs(exact.num()), exact.den()));
    Rational bound = target.abs() * Rational::from_double(rel_tol);
    for (int it = 0; it < 128; ++it) {
        mpz_class a = rest.get_num() / rest.get_den();  // floor (rest >= 0)
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        Rational conv{p2, q2};
        if ((conv - target).abs() <= bound) {
            return exact.sign() < 0 ? -conv : conv;
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class frac = rest - a;
        if (frac == 0) break;
        rest = 1 / frac;
    }
    return exact;
}

Rational Rational::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational sqrt_lower_bound(const Rational& x, unsigned bits) {
    if (x.sign() < 0) throw std::domain_error("sqrt_lower_bound: negative argument");
    if (x.is_zero()) return Rational(0);
    // sqrt(p/q) = sqrt(p*q)/q; floor(sqrt(p*q*4^bits)) / (q*2^bits) <= sqrt(p/q)
    mpz_class pq = x.num() * x.den();
    mpz_class scaled = pq << (2 * bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = x.den() << bits;
    return Rational(root, den);
}

Rational sqrt_upper_bound(const Rational& x, unsigned bits) {
    if (x.sign() < 0) throw std::domain_error("sqrt_upper_bound: negative argument");
    if (x.is_zero()) return Rational(0);
    mpz_class pq = x.num() * x.den();
    mpz_class scaled = pq << (2 * bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = x.den() << bits;
    return Rational(root + 1, den);
}

}  // namespace cyclereal
