#pragma once
// Weighted greatest common divisors of coordinate tuples.
//
//   wgcd(x)  = prod_p p^{min_i floor(ord_p(x_i) / q_i)}     (integers)
//   hwgcd(x) = prod_p p^{min_i floor(ord_p^+(x_i) / q_i)}   (rationals)
//
// Zero coordinates have infinite valuation and never attain the min.

#include "arith.hpp"
#include "weights.hpp"

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace wph {

namespace detail {

template <class T>
void check_tuple(std::span<const T> xs, const Weights& w) {
    if (xs.size() != w.size())
        throw Error(Errc::ArityMismatch, "tuple has " + std::to_string(xs.size()) + " entries, weights have " +
                                             std::to_string(w.size()));
    for (const T& x : xs)
        if (x != 0) return;
    throw Error(Errc::AllZero, "all coordinates are zero");
}

/// Primes p with exponent min_i floor(max(ord_p(x_i), 0) / q_i) > 0. Only
/// primes dividing every nonzero numerator can qualify.
inline std::vector<std::pair<Integer, unsigned long>> weighted_gcd_exponents(std::span<const Rational> xs,
                                                                              const Weights& w) {
    Integer g = 0;
    for (const Rational& x : xs)
        if (x != 0) g = gcd(g, Integer(x.get_num()));
    std::vector<std::pair<Integer, unsigned long>> out;
    if (g == 1) return out;
    for (const auto& [p, unused] : factorize(g).factors) {
        long best = std::numeric_limits<long>::max();
        for (std::size_t i = 0; i < xs.size() && best > 0; ++i) {
            if (xs[i] == 0) continue;
            long v = std::max(val(xs[i], p), 0L);
            best = std::min(best, v / static_cast<long>(w[i]));
        }
        if (best > 0) out.emplace_back(p, static_cast<unsigned long>(best));
    }
    return out;
}

inline std::vector<Rational> to_rationals(std::span<const Integer> xs) {
    return std::vector<Rational>(xs.begin(), xs.end());
}

} // namespace detail

/// Exponents e_p with wgcd = prod p^{e_p}, ascending primes.
inline std::vector<std::pair<Integer, unsigned long>> wgcd_exponents(std::span<const Integer> xs, const Weights& w) {
    detail::check_tuple(xs, w);
    auto rs = detail::to_rationals(xs);
    return detail::weighted_gcd_exponents(rs, w);
}

inline Integer wgcd(std::span<const Integer> xs, const Weights& w) {
    Integer g = 1;
    for (const auto& [p, e] : wgcd_exponents(xs, w)) g *= ipow(p, e);
    return g;
}

/// log wgcd as the formal sum sum_p e_p log p.
inline LogSum log_wgcd(std::span<const Integer> xs, const Weights& w) {
    LogSum s;
    for (const auto& [p, e] : wgcd_exponents(xs, w)) s.add(p, Rational(static_cast<long>(e)));
    return s;
}

/// Finite-place generalized weighted gcd; always a positive integer.
inline Integer hwgcd(std::span<const Rational> xs, const Weights& w) {
    detail::check_tuple(xs, w);
    Integer g = 1;
    for (const auto& [p, e] : detail::weighted_gcd_exponents(xs, w)) g *= ipow(p, e);
    return g;
}

/// min_i nu_inf^+(x_i) / q_i, without a floor, as a formal log.
inline LogSum archimedean_gcd_term(std::span<const Rational> xs, const Weights& w) {
    detail::check_tuple(xs, w);
    // nu_inf^+(x) / q = (1/q) log R with R = max(1, 1/|x|); compare R^{m/q}.
    const Weight m = w.lcm();
    std::size_t best = xs.size();
    Rational best_key;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) continue;
        Rational inv = Rational(1) / abs(xs[i]);
        Rational r = inv > 1 ? inv : Rational(1);
        Rational key = ipow(r, m / w[i]);
        if (best == xs.size() || key < best_key) {
            best = i;
            best_key = key;
        }
    }
    Rational inv = Rational(1) / abs(xs[best]);
    if (inv <= 1) return {};
    return Rational(1, w[best]) * LogSum::log_of(inv);
}

/// Sum over finite places of min_i floor(nu_p^+(x_i)/q_i) log p, plus the
/// unfloored archimedean term when requested.
inline LogSum log_hwgcd(std::span<const Rational> xs, const Weights& w, bool include_archimedean) {
    detail::check_tuple(xs, w);
    LogSum s;
    for (const auto& [p, e] : detail::weighted_gcd_exponents(xs, w)) s.add(p, Rational(static_cast<long>(e)));
    if (include_archimedean) s += archimedean_gcd_term(xs, w);
    return s;
}

/// T_nu at a finite place: min_i floor(nu_p^+(x_i) / q_i).
inline long t_nu_finite(std::span<const Rational> xs, const Weights& w, const Integer& p) {
    detail::check_tuple(xs, w);
    long best = std::numeric_limits<long>::max();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) continue;
        best = std::min(best, *val_plus_finite(xs[i], p) / static_cast<long>(w[i]));
    }
    return best;
}

/// T_nu at any place. At infinity the floor of a real nu^+ / q_i is taken
/// literally, matching the finite-place formula.
inline double t_nu(std::span<const Rational> xs, const Weights& w, const Place& place) {
    if (!place.is_archimedean()) return static_cast<double>(t_nu_finite(xs, w, place.prime));
    detail::check_tuple(xs, w);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] == 0) continue;
        best = std::min(best, std::floor(val_plus(xs[i], place) / static_cast<double>(w[i])));
    }
    return best;
}

} // namespace wph
