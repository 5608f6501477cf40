#pragma once
// Points of WP_w^n(Q): the lambda-star action, normalization, orbit equality
// and the Veronese image.

#include "arith.hpp"
#include "gcd.hpp"
#include "weights.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wph {

class WPoint {
public:
    WPoint(std::vector<Rational> coords, Weights w) : coords_(std::move(coords)), w_(std::move(w)) {
        if (coords_.size() != w_.size())
            throw Error(Errc::ArityMismatch, "point has " + std::to_string(coords_.size()) + " coordinates, weights " +
                                                 w_.to_string() + " need " + std::to_string(w_.size()));
        if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; }))
            throw Error(Errc::AllZero, "all coordinates are zero");
        for (auto& c : coords_) c.canonicalize();
    }

    static WPoint from_integers(const std::vector<Integer>& xs, Weights w) {
        return WPoint(std::vector<Rational>(xs.begin(), xs.end()), std::move(w));
    }

    /// Parses "[a0:a1:...:an]" with integer or p/q entries.
    static WPoint parse(std::string_view text, Weights w);

    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }
    const Weights& weights() const noexcept { return w_; }
    std::size_t size() const noexcept { return coords_.size(); }

    bool is_integral() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.get_den() == 1; });
    }

    /// Coordinates as integers; requires is_integral().
    std::vector<Integer> integer_coords() const {
        if (!is_integral()) throw Error(Errc::NotNormalized, "point " + to_string() + " is not integral");
        std::vector<Integer> out;
        for (const auto& c : coords_) out.emplace_back(c.get_num());
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ':';
            s += coords_[i].get_str();
        }
        return s + "]";
    }

    /// Coordinate-wise identity (not orbit equality; see equals()).
    friend bool operator==(const WPoint& a, const WPoint& b) { return a.w_ == b.w_ && a.coords_ == b.coords_; }

    /// Lexicographic order on coordinates.
    friend bool operator<(const WPoint& a, const WPoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
    Weights w_;
};

/// Parses an integer or p/q; throws ParseError.
inline Rational parse_rational(std::string_view tok) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto strip_plus = [](std::string_view s) { return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s); };
    auto slash = tok.find('/');
    std::string_view num = tok.substr(0, slash);
    if (!valid_int(num)) throw Error(Errc::ParseError, "bad rational '" + std::string(tok) + "'");
    if (slash == std::string_view::npos) return Rational(Integer{strip_plus(num)});
    std::string_view den = tok.substr(slash + 1);
    if (!valid_int(den) || den.front() == '-' || den.front() == '+')
        throw Error(Errc::ParseError, "bad rational '" + std::string(tok) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(tok) + "'");
    return make_rational(Integer{strip_plus(num)}, d);
}

/// Splits "[a:b:c]" (or "(a,b,c)") into trimmed entries.
inline std::vector<std::string> split_tuple(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || !((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
        throw Error(Errc::ParseError, "expected [a0:...:an] or (a0,...,an), got '" + std::string(text) + "'");
    const char sep = s.front() == '[' ? ':' : ',';
    std::vector<std::string> out;
    std::string_view body(s);
    body = body.substr(1, body.size() - 2);
    while (true) {
        auto pos = body.find(sep);
        out.emplace_back(body.substr(0, pos));
        if (out.back().empty()) throw Error(Errc::ParseError, "empty entry in '" + std::string(text) + "'");
        if (pos == std::string_view::npos) break;
        body.remove_prefix(pos + 1);
    }
    return out;
}

inline std::vector<Rational> parse_rational_tuple(std::string_view text) {
    std::vector<Rational> out;
    for (const auto& tok : split_tuple(text)) out.push_back(parse_rational(tok));
    return out;
}

inline WPoint WPoint::parse(std::string_view text, Weights w) {
    return WPoint(parse_rational_tuple(text), std::move(w));
}

/// lambda * x = (lambda^{q_0} x_0, ..., lambda^{q_n} x_n).
inline WPoint scale(const WPoint& x, const Rational& lambda) {
    if (lambda == 0) throw Error(Errc::ZeroScalar, "scaling by 0");
    std::vector<Rational> c;
    c.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c.push_back(ipow(lambda, static_cast<unsigned long>(x.weights()[i])) * x[i]);
    return WPoint(std::move(c), x.weights());
}

/// Exact k-th root of a rational, if it exists in Q.
inline std::optional<Rational> rational_root(const Rational& r, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (r < 0 && k % 2 == 0) return std::nullopt;
    Integer num = abs(Integer(r.get_num()));
    Integer den(r.get_den());
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
    Rational out = make_rational(rn, rd);
    return r < 0 ? Rational(-out) : out;
}

/// Orbit equality: exists lambda in Q* with y_i = lambda^{q_i} x_i.
inline bool equals(const WPoint& x, const WPoint& y) {
    if (!(x.weights() == y.weights()))
        throw Error(Errc::WeightMismatch, "comparing points over " + x.weights().to_string() + " and " +
                                              y.weights().to_string());
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((x[i] == 0) != (y[i] == 0)) return false;
        if (x[i] != 0 && !pivot) pivot = i;
    }
    const std::size_t i = *pivot;
    const Weight q = x.weights()[i];
    auto root = rational_root(y[i] / x[i], q);
    if (!root) return false;
    std::vector<Rational> candidates{*root};
    if (q % 2 == 0) candidates.push_back(-*root);
    for (const Rational& lambda : candidates) {
        bool ok = true;
        for (std::size_t j = 0; j < x.size() && ok; ++j)
            ok = ipow(lambda, static_cast<unsigned long>(x.weights()[j])) * x[j] == y[j];
        if (ok) return true;
    }
    return false;
}

struct Normalization {
    WPoint point;    // integral, wgcd 1, sign canon applied
    Rational lambda; // point == lambda * x
    Integer wgcd;    // wgcd of the integral tuple before division
};

/// Unique integral representative with wgcd 1. The sign canon makes the first
/// nonzero coordinate of odd weight positive; -1 acts trivially otherwise.
inline Normalization normalization(const WPoint& x) {
    Integer den_lcm = 1;
    for (const auto& c : x.coords()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    WPoint integral = scale(x, Rational(den_lcm));
    std::vector<Integer> ints = integral.integer_coords();
    Integer g = wgcd(ints, x.weights());
    Rational lambda = make_rational(den_lcm, g);
    WPoint y = g == 1 ? integral : scale(integral, make_rational(1, g));
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0 || x.weights()[i] % 2 == 0) continue;
        if (y[i] < 0) {
            y = scale(y, Rational(-1));
            lambda = -lambda;
        }
        break;
    }
    return Normalization{std::move(y), std::move(lambda), std::move(g)};
}

inline WPoint normalize(const WPoint& x) { return normalization(x).point; }

inline bool is_normalized(const WPoint& x) { return x.is_integral() && normalize(x) == x; }

/// A point of P^n(Q) in reduced form: coprime integers, first nonzero > 0.
struct ProjectivePoint {
    std::vector<Integer> coords;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ':';
            s += coords[i].get_str();
        }
        return s + "]";
    }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline ProjectivePoint to_projective(std::span<const Rational> xs) {
    if (std::all_of(xs.begin(), xs.end(), [](const Rational& c) { return c == 0; }))
        throw Error(Errc::AllZero, "all coordinates are zero");
    Integer den_lcm = 1;
    for (const auto& c : xs) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& c : xs) {
        Rational scaled = c * den_lcm;
        ints.emplace_back(scaled.get_num());
        g = gcd(g, ints.back());
    }
    int sign = 1;
    for (const auto& v : ints)
        if (v != 0) {
            sign = sgn(v);
            break;
        }
    for (auto& v : ints) v = sign * v / g;
    return ProjectivePoint{std::move(ints)};
}

/// phi_m(x) = [x_0^{m/q_0} : ... : x_n^{m/q_n}].
inline ProjectivePoint veronese(const WPoint& x) {
    const VeroneseData vd = veronese_data(x.weights());
    std::vector<Rational> c;
    for (std::size_t i = 0; i < x.size(); ++i) c.push_back(ipow(x[i], static_cast<unsigned long>(vd.exponents[i])));
    return to_projective(c);
}

/// Image of a point under a weight map y_i = x_i^{e_i}.
inline WPoint apply(const WeightMap& map, const WPoint& x) {
    if (!(x.weights() == map.source))
        throw Error(Errc::WeightMismatch, "map source " + map.source.to_string() + " vs point weights " +
                                              x.weights().to_string());
    std::vector<Rational> c;
    for (std::size_t i = 0; i < x.size(); ++i) c.push_back(ipow(x[i], static_cast<unsigned long>(map.exponents[i])));
    return WPoint(std::move(c), map.target);
}

} // namespace wph
