#pragma once
// Polynomials over Q in x_0..x_n with weighted degree wt(x^a) = sum a_i q_i.
//
// Text grammar (whitespace-insensitive):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | 'x' index ['^' exponent]
//   number := digits ['/' digits]
// Canonical printing sorts terms by exponent tuple, descending lexicographic.

#include "arith.hpp"
#include "point.hpp"
#include "weights.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wph {

using Exponents = std::vector<unsigned long>;

class WPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, std::greater<>>;

    explicit WPolynomial(Weights w) : w_(std::move(w)) {}

    static WPolynomial constant(const Weights& w, const Rational& c) {
        WPolynomial f(w);
        f.add_term(c, Exponents(w.size(), 0));
        return f;
    }

    static WPolynomial variable(const Weights& w, std::size_t i) {
        if (i >= w.size()) throw Error(Errc::ArityMismatch, "variable x" + std::to_string(i) + " out of range");
        Exponents e(w.size(), 0);
        e[i] = 1;
        WPolynomial f(w);
        f.add_term(Rational(1), e);
        return f;
    }

    static WPolynomial parse(std::string_view text, const Weights& w);

    void add_term(const Rational& c, const Exponents& e) {
        if (e.size() != w_.size()) throw Error(Errc::ArityMismatch, "exponent tuple length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Weights& weights() const noexcept { return w_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    unsigned long term_degree(const Exponents& e) const {
        unsigned long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w_[i];
        return d;
    }

    /// The common weighted degree, or nullopt when terms have mixed degrees.
    std::optional<unsigned long> weighted_degree() const {
        if (is_zero()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
        std::optional<unsigned long> d;
        for (const auto& [e, c] : terms_) {
            unsigned long de = term_degree(e);
            if (d && *d != de) return std::nullopt;
            d = de;
        }
        return d;
    }

    bool is_homogeneous() const { return weighted_degree().has_value(); }

    /// Degree, throwing NotHomogeneous for mixed polynomials.
    unsigned long homogeneous_degree() const {
        auto d = weighted_degree();
        if (!d) throw Error(Errc::NotHomogeneous, "'" + to_string() + "' is not weighted homogeneous for " + w_.to_string());
        return *d;
    }

    Rational eval(std::span<const Rational> x) const {
        if (x.size() != w_.size())
            throw Error(Errc::ArityMismatch, "evaluating at " + std::to_string(x.size()) + " values, need " +
                                                 std::to_string(w_.size()));
        Rational s = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size() && t != 0; ++i)
                if (e[i]) t *= ipow(x[i], e[i]);
            s += t;
        }
        return s;
    }

    Rational eval(const WPoint& x) const {
        if (!(x.weights() == w_)) throw Error(Errc::WeightMismatch, "point and polynomial weights differ");
        return eval(std::span<const Rational>(x.coords()));
    }

    friend WPolynomial operator+(const WPolynomial& a, const WPolynomial& b) {
        a.check_same(b);
        WPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(c, e);
        return r;
    }
    friend WPolynomial operator-(const WPolynomial& a, const WPolynomial& b) {
        a.check_same(b);
        WPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(-c, e);
        return r;
    }
    friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
        a.check_same(b);
        WPolynomial r(a.w_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(ca * cb, e);
            }
        return r;
    }

    friend bool operator==(const WPolynomial& a, const WPolynomial& b) { return a.w_ == b.w_ && a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const Rational mag = abs(c);
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                if (!mono.empty()) mono += '*';
                mono += "x" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                s += mag.get_str();
            else if (mag == 1)
                s += mono;
            else
                s += mag.get_str() + "*" + mono;
        }
        return s;
    }

private:
    void check_same(const WPolynomial& o) const {
        if (!(w_ == o.w_)) throw Error(Errc::WeightMismatch, "polynomials over different weights");
    }

    Weights w_;
    TermMap terms_;
};

inline WPolynomial WPolynomial::parse(std::string_view text, const Weights& w) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(Errc::ParseError, "empty polynomial");
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    };
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits");
        return s.substr(start, pos - start);
    };
    WPolynomial f(w);
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coef = sign;
        Exponents e(w.size(), 0);
        while (true) {
            if (pos >= s.size()) fail("expected a factor");
            if (s[pos] == 'x') {
                ++pos;
                std::string idx = digits();
                if (idx.size() > 9) fail("variable index too large");
                std::size_t i = std::stoul(idx);
                if (i >= w.size())
                    throw Error(Errc::ArityMismatch, "variable x" + idx + " but weights " + w.to_string() + " have " +
                                                         std::to_string(w.size()) + " variables");
                unsigned long k = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::string ex = digits();
                    if (ex.size() > 9) fail("exponent too large");
                    k = std::stoul(ex);
                }
                e[i] += k;
            } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                Integer num(digits());
                Integer den = 1;
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    den = Integer(digits());
                    if (den == 0) fail("zero denominator");
                }
                coef *= make_rational(num, den);
            } else {
                fail("unexpected character '" + std::string(1, s[pos]) + "'");
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        f.add_term(coef, e);
    }
    return f;
}

/// All exponent tuples of weighted degree exactly d.
inline std::vector<Exponents> monomials_of_degree(const Weights& w, unsigned long d) {
    std::vector<Exponents> out;
    Exponents e(w.size(), 0);
    std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t i, unsigned long left) {
        if (i + 1 == w.size()) {
            if (left % w[i] == 0) {
                e[i] = left / w[i];
                out.push_back(e);
            }
            return;
        }
        for (unsigned long k = 0; k * w[i] <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k * w[i]);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

/// For binary f of weighted degree d: divide by x1^{d/q1} and substitute
/// X = x0^{q1} / x1^{q0}. Entry k of the result is the coefficient of X^k.
inline std::vector<Rational> dehomogenize_binary(const WPolynomial& f) {
    const Weights& w = f.weights();
    if (w.size() != 2) throw Error(Errc::ArityMismatch, "dehomogenize_binary needs two variables");
    f.homogeneous_degree();
    const unsigned long q1 = w[1];
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] % q1 != 0)
            throw Error(Errc::NonIntegralExponent, "x0^" + std::to_string(e[0]) + " maps to X^(" + std::to_string(e[0]) +
                                                       "/" + std::to_string(q1) + ")");
        const std::size_t k = e[0] / q1;
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
        coeffs[k] += c;
    }
    return coeffs;
}

} // namespace wph
