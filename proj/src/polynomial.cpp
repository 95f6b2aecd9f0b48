#include "cyclereal/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cyclereal {

namespace {

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

}  // namespace

BivariatePolynomial BivariatePolynomial::constant(Rational c) {
    return monomial(0, 0, std::move(c));
}

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, Rational c) {
    BivariatePolynomial p;
    if (i < 0 || j < 0) throw std::invalid_argument("monomial: negative exponent");
    if (!c.is_zero()) p.terms_.push_back({{i, j}, std::move(c)});
    return p;
}

int BivariatePolynomial::degree() const {
    if (terms_.empty()) return kZeroDegree;
    return terms_.back().m.total();
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
    Monomial key{i, j};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Monomial& m) { return graded_lex_less(t.m, m); });
    if (it != terms_.end() && it->m == key) return it->c;
    return Rational(0);
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

// Merges two graded-lex sorted term lists with coefficient combiner sign.
std::vector<BivariatePolynomial::Term> merge_terms(const std::vector<BivariatePolynomial::Term>& a,
                                                   const std::vector<BivariatePolynomial::Term>& b,
                                                   int bsign) {
    std::vector<BivariatePolynomial::Term> out;
    out.reserve(a.size() + b.size());
    size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].m == b[ib].m) {
            Rational c = bsign > 0 ? a[ia].c + b[ib].c : a[ia].c - b[ib].c;
            if (!c.is_zero()) out.push_back({a[ia].m, std::move(c)});
            ++ia;
            ++ib;
        } else if (graded_lex_less(a[ia].m, b[ib].m)) {
            out.push_back(a[ia++]);
        } else {
            auto t = b[ib++];
            if (bsign < 0) t.c = -t.c;
            out.push_back(std::move(t));
        }
    }
    for (; ia < a.size(); ++ia) out.push_back(a[ia]);
    for (; ib < b.size(); ++ib) {
        auto t = b[ib];
        if (bsign < 0) t.c = -t.c;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, +1);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, -1);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, Rational, MonomialLess> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m{ta.m.i + tb.m.i, ta.m.j + tb.m.j};
            auto [it, inserted] = acc.try_emplace(m, Rational(0));
            it->second += ta.c * tb.c;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    return r;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const Rational& s) {
    BivariatePolynomial r;
    if (s.is_zero()) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.m, t.c * s});
    return r;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned e) const {
    BivariatePolynomial result = constant(Rational(1));
    BivariatePolynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::diff_x() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.m.i == 0) continue;
        out.push_back({{t.m.i - 1, t.m.j}, t.c * Rational(t.m.i)});
    }
    return from_terms(std::move(out));
}

BivariatePolynomial BivariatePolynomial::diff_y() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.m.j == 0) continue;
        out.push_back({{t.m.i, t.m.j - 1}, t.c * Rational(t.m.j)});
    }
    return from_terms(std::move(out));
}

double BivariatePolynomial::eval(double x, double y) const {
    return CompiledBivariate(*this)(x, y);
}

Rational BivariatePolynomial::eval_exact(const Rational& x, const Rational& y) const {
    // Horner in x within groups of equal y power, then Horner in y.
    // Terms are graded-lex sorted; regroup by y power first.
    std::map<int, std::map<int, const Rational*>> by_y;
    for (const auto& t : terms_) by_y[t.m.j][t.m.i] = &t.c;
    Rational result(0);
    int prev_j = -1;
    // Iterate y powers descending for Horner.
    for (auto it = by_y.rbegin(); it != by_y.rend(); ++it) {
        int j = it->first;
        if (prev_j >= 0) result *= y.pow(static_cast<unsigned long>(prev_j - j));
        Rational row(0);
        int prev_i = -1;
        for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit) {
            int i = rit->first;
            if (prev_i >= 0) row *= x.pow(static_cast<unsigned long>(prev_i - i));
            row += *rit->second;
            prev_i = i;
        }
        if (prev_i > 0) row *= x.pow(static_cast<unsigned long>(prev_i));
        result += row;
        prev_j = j;
    }
    if (prev_j > 0) result *= y.pow(static_cast<unsigned long>(prev_j));
    return result;
}

BivariatePolynomial BivariatePolynomial::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Rational, MonomialLess> acc;
    for (auto& t : terms) {
        auto [it, inserted] = acc.try_emplace(t.m, Rational(0));
        it->second += t.c;
    }
    BivariatePolynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest-degree terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->c;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_vars = it->m.i > 0 || it->m.j > 0;
        if (!has_vars || !(c == Rational(1))) {
            os << c.str();
            if (has_vars) os << "*";
        }
        if (it->m.i > 0) {
            os << "x";
            if (it->m.i > 1) os << "^" << it->m.i;
        }
        if (it->m.j > 0) {
            if (it->m.i > 0) os << "*";
            os << "y";
            if (it->m.j > 1) os << "^" << it->m.j;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p) { return os << p.str(); }

nlohmann::ordered_json BivariatePolynomial::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms_) {
        arr.push_back(nlohmann::ordered_json::array({t.m.i, t.m.j, t.c.str()}));
    }
    return arr;
}

BivariatePolynomial BivariatePolynomial::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected array");
    std::vector<Term> terms;
    terms.reserve(j.size());
    for (const auto& rec : j) {
        if (!rec.is_array() || rec.size() != 3)
            throw std::invalid_argument("polynomial: expected [i, j, coeff] records");
        int i = rec[0].get<int>();
        int jj = rec[1].get<int>();
        if (i < 0 || jj < 0) throw std::invalid_argument("polynomial: negative exponent");
        terms.push_back({{i, jj}, Rational::parse(rec[2].get<std::string>())});
    }
    return from_terms(std::move(terms));
}

std::optional<BivariatePolynomial> exact_divide(const BivariatePolynomial& p,
                                                const BivariatePolynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    BivariatePolynomial r = p;
    std::vector<BivariatePolynomial::Term> quotient;
    const auto& dlead = d.terms().back();
    while (!r.is_zero()) {
        const auto& rlead = r.terms().back();
        if (rlead.m.i < dlead.m.i || rlead.m.j < dlead.m.j) return std::nullopt;
        BivariatePolynomial::Term t{{rlead.m.i - dlead.m.i, rlead.m.j - dlead.m.j},
                                    rlead.c / dlead.c};
        quotient.push_back(t);
        r -= BivariatePolynomial::monomial(t.m.i, t.m.j, t.c) * d;
    }
    return BivariatePolynomial::from_terms(std::move(quotient));
}

int vanishing_order(const BivariatePolynomial& p, const BivariatePolynomial& f) {
    if (p.is_zero()) throw std::domain_error("vanishing_order: undefined for zero polynomial");
    if (f.degree() <= 0) throw std::domain_error("vanishing_order: divisor must be nonconstant");
    int order = 0;
    BivariatePolynomial cur = p;
    while (true) {
        auto q = exact_divide(cur, f);
        if (!q) return order;
        cur = std::move(*q);
        ++order;
    }
}

CompiledBivariate::CompiledBivariate(const BivariatePolynomial& p) {
    std::map<int, std::map<int, double>> by_y;
    for (const auto& t : p.terms()) by_y[t.m.j][t.m.i] = t.c.to_double();
    rows_.reserve(by_y.size());
    for (const auto& [j, xs] : by_y) {
        Row row;
        row.ypow = j;
        row.max_xpow = xs.rbegin()->first;
        row.xcoef.assign(static_cast<size_t>(row.max_xpow) + 1, 0.0);
        for (const auto& [i, c] : xs) row.xcoef[static_cast<size_t>(i)] = c;
        rows_.push_back(std::move(row));
    }
}

double CompiledBivariate::operator()(double x, double y) const {
    double result = 0.0;
    int prev_j = -1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        if (prev_j >= 0) {
            for (int k = it->ypow; k < prev_j; ++k) result *= y;
        }
        double row = 0.0;
        for (auto cit = it->xcoef.rbegin(); cit != it->xcoef.rend(); ++cit) row = row * x + *cit;
        result += row;
        prev_j = it->ypow;
    }
    for (int k = 0; k < prev_j; ++k) result *= y;
    return result;
}

}  // namespace cyclereal
