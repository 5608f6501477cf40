#pragma once
// Global heights over Q: the Weil height on P^n and the weighted height
//   wh(x) = prod_v max_i |x_i|_v^{1/q_i},
// carried exactly as wh(x)^m with m = lcm(q), which is rational because every
// m/q_i is an integer.

#include "arith.hpp"
#include "point.hpp"

#include <span>
#include <utility>
#include <vector>

namespace wph {

struct WeilHeight {
    Integer H; // max |x_i| over coprime integer coordinates
    double h;  // log H
};

inline WeilHeight weil_height(std::span<const Rational> xs) {
    ProjectivePoint p = to_projective(xs);
    Integer H = 0;
    for (const auto& c : p.coords) H = std::max(H, Integer(abs(c)));
    return WeilHeight{H, log_abs(H)};
}

inline WeilHeight weil_height(const ProjectivePoint& p) {
    std::vector<Rational> c(p.coords.begin(), p.coords.end());
    return weil_height(c);
}

struct PlaceFactor {
    Place place;
    Rational factor; // max_i |x_i|_v^{m/q_i}
};

struct HeightValue {
    Weight m = 1;
    Rational wh_pow_m;
    double lwh = 0.0;
    std::vector<PlaceFactor> per_place;

    /// lwh as the exact formal sum (1/m) log wh^m.
    LogSum formal() const { return Rational(1, m) * LogSum::log_of(wh_pow_m); }
};

/// max_i |x_i|_v^{m/q_i} at one place, zero coordinates skipped.
inline Rational weighted_max_at(const WPoint& x, const Place& place) {
    const Weight m = x.weights().lcm();
    if (place.is_archimedean()) {
        Rational best = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Rational t = ipow(Rational(abs(x[i])), static_cast<unsigned long>(m / x.weights()[i]));
            if (t > best) best = t;
        }
        return best;
    }
    // |x_i|_p^{m/q_i} = p^{-ord_p(x_i) m/q_i}; the max has the least exponent.
    bool have = false;
    long least = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        long e = val(x[i], place.prime) * static_cast<long>(m / x.weights()[i]);
        if (!have || e < least) least = e;
        have = true;
    }
    return ipow(Rational(place.prime), -least);
}

inline std::vector<Rational> nonzero_coords(const WPoint& x) {
    std::vector<Rational> out;
    for (const auto& c : x.coords())
        if (c != 0) out.push_back(c);
    return out;
}

inline HeightValue wheight(const WPoint& x) {
    HeightValue hv;
    hv.m = x.weights().lcm();
    hv.wh_pow_m = 1;
    for (const Place& v : relevant_places(nonzero_coords(x))) {
        Rational f = weighted_max_at(x, v);
        hv.wh_pow_m *= f;
        hv.per_place.push_back({v, f});
    }
    hv.lwh = log_abs(hv.wh_pow_m) / static_cast<double>(hv.m);
    return hv;
}

struct VeroneseCheck {
    Rational lhs; // wh(x)^m
    Rational rhs; // H(phi_m(x))
    bool equal;
};

/// Compares wh(x)^m with H(phi_m(x)); needs reduced weights with coprime m/q_i.
inline VeroneseCheck veronese_check(const WPoint& x) {
    const Weights& w = x.weights();
    if (!w.is_reduced() || !veronese_data(w).is_embedding)
        throw Error(Errc::HypothesisViolated,
                    "weights " + w.to_string() + " must be reduced with gcd(m/q_i) = 1");
    Rational lhs = wheight(x).wh_pow_m;
    Rational rhs(weil_height(veronese(x)).H);
    return VeroneseCheck{lhs, rhs, lhs == rhs};
}

} // namespace wph
