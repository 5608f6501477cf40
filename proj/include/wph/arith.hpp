#pragma once
// Exact integer/rational arithmetic over Q: factorization, p-adic valuations,
// nu^+, prime-to-S parts, and formal sums of logarithms of primes.

#include "error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wph {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::ZeroInput, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Integer power with a machine exponent.
inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational ipow(const Rational& base, unsigned long e) {
    Integer n = ipow(Integer(base.get_num()), e);
    Integer d = ipow(Integer(base.get_den()), e);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Signed integer power; negative exponents require a nonzero base.
inline Rational ipow(const Rational& base, long e) {
    if (e >= 0) return ipow(base, static_cast<unsigned long>(e));
    if (base == 0) throw Error(Errc::ZeroInput, "negative power of zero");
    return ipow(Rational(1) / base, static_cast<unsigned long>(-e));
}

/// Natural log of |z| for arbitrarily large z, z != 0.
inline double log_abs(const Integer& z) {
    if (z == 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_abs(const Rational& r) {
    if (r == 0) return -std::numeric_limits<double>::infinity();
    return log_abs(Integer(r.get_num())) - log_abs(Integer(r.get_den()));
}

inline double to_double(const Rational& r) {
    // Go through logs for values outside double range of num/den.
    if (r == 0) return 0.0;
    if (mpz_sizeinbase(r.get_num_mpz_t(), 2) < 1000 && mpz_sizeinbase(r.get_den_mpz_t(), 2) < 1000)
        return r.get_d();
    double mag = std::exp(log_abs(r));
    return sgn(r) < 0 ? -mag : mag;
}

// ---------------------------------------------------------------------------
// Primality

namespace detail {

inline bool miller_rabin_witness(const Integer& n, const Integer& d, unsigned long s, unsigned long a) {
    Integer x;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer nm1 = n - 1;
    if (x == 1 || x == nm1) return false;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1) return false;
    }
    return true;
}

constexpr unsigned long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

} // namespace detail

/// Deterministic Miller-Rabin with the first 13 prime bases (proven correct
/// below 3.3e24); larger inputs use GMP's BPSW-based test.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : detail::kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Integer kDeterministicBound("3317044064679887385961981");
    if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long a : detail::kSmallPrimes)
        if (detail::miller_rabin_witness(n, d, s, a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Places of Q

struct Place {
    enum class Kind { Archimedean, Finite };

    Kind kind = Kind::Archimedean;
    Integer prime = 0;

    static Place archimedean() { return Place{}; }

    static Place finite(const Integer& p) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
        return Place{Kind::Finite, p};
    }

    bool is_archimedean() const noexcept { return kind == Kind::Archimedean; }

    std::string to_string() const { return is_archimedean() ? std::string("inf") : prime.get_str(); }

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind == b.kind && (a.is_archimedean() || a.prime == b.prime);
    }
    // Archimedean first, then ascending primes.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind != b.kind) return a.is_archimedean();
        return !a.is_archimedean() && a.prime < b.prime;
    }
};

// ---------------------------------------------------------------------------
// Factorization

struct Factorization {
    int sign = 1;
    std::vector<std::pair<Integer, unsigned long>> factors;

    Integer product() const {
        Integer r = sign;
        for (const auto& [p, e] : factors) r *= ipow(p, e);
        return r;
    }
};

namespace detail {

inline constexpr unsigned long kTrialLimit = 1UL << 16;

inline void push_factor(std::map<Integer, unsigned long>& acc, const Integer& p, unsigned long e) {
    acc[p] += e;
}

/// Strips all factors below kTrialLimit from n.
inline void trial_divide(Integer& n, std::map<Integer, unsigned long>& acc) {
    if (n.fits_ulong_p()) {
        unsigned long u = n.get_ui();
        for (unsigned long d = 2; d <= kTrialLimit && d * d <= u; d += (d == 2 ? 1 : 2)) {
            if (u % d != 0) continue;
            unsigned long e = 0;
            while (u % d == 0) { u /= d; ++e; }
            push_factor(acc, Integer(d), e);
        }
        n = u;
        if (u > 1 && (u <= kTrialLimit || (u / kTrialLimit) < kTrialLimit)) {
            // Cofactor below kTrialLimit^2 with no small factor is prime.
            push_factor(acc, n, 1);
            n = 1;
        }
        return;
    }
    for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            ++e;
        }
        push_factor(acc, Integer(d), e);
    }
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of odd composite n.
inline Integer pollard_brent(const Integer& n, gmp_randclass& rng) {
    for (;;) {
        Integer y = rng.get_z_range(n - 1) + 1;
        Integer c = rng.get_z_range(n - 1) + 1;
        const unsigned long block = 128;
        Integer g = 1, q = 1, x, ys;
        unsigned long r = 1;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split_large(const Integer& n, std::map<Integer, unsigned long>& acc, gmp_randclass& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        push_factor(acc, n, 1);
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        std::map<Integer, unsigned long> sub;
        split_large(root, sub, rng);
        for (const auto& [p, e] : sub) push_factor(acc, p, 2 * e);
        return;
    }
    Integer d = pollard_brent(n, rng);
    split_large(d, acc, rng);
    split_large(Integer(n / d), acc, rng);
}

} // namespace detail

/// Factors a nonzero integer. Trial division below 2^16, then seeded
/// Pollard-Brent, so results and timings are reproducible.
inline Factorization factorize(const Integer& n) {
    if (n == 0) throw Error(Errc::ZeroInput, "cannot factor 0");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Integer rest = abs(n);
    std::map<Integer, unsigned long> acc;
    detail::trial_divide(rest, acc);
    if (rest > 1) {
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(0x5eed5eedUL);
        detail::split_large(rest, acc, rng);
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

// ---------------------------------------------------------------------------
// Valuations

/// ord_p(z) for z != 0.
inline long val(const Integer& z, const Integer& p) {
    if (z == 0) throw Error(Errc::ZeroInput, "valuation of 0 is +infinity");
    if (p < 2) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

inline long val(const Rational& r, const Integer& p) {
    if (r == 0) throw Error(Errc::ZeroInput, "valuation of 0 is +infinity");
    return val(Integer(r.get_num()), p) - val(Integer(r.get_den()), p);
}

/// max(ord_p(r), 0) as a multiplicity; nullopt stands for +infinity (r = 0).
inline std::optional<long> val_plus_finite(const Rational& r, const Integer& p) {
    if (r == 0) return std::nullopt;
    return std::max(val(r, p), 0L);
}

/// nu^+ at a place: a multiplicity at finite places, max(-log|r|, 0) at the
/// archimedean place. r = 0 gives +infinity.
inline double val_plus(const Rational& r, const Place& place) {
    if (r == 0) return std::numeric_limits<double>::infinity();
    if (place.is_archimedean()) return std::max(-log_abs(r), 0.0);
    return static_cast<double>(*val_plus_finite(r, place.prime));
}

/// Prime-to-S part of |n|.
inline Integer s_part(const Integer& n, std::span<const Integer> primes) {
    if (n == 0) throw Error(Errc::ZeroInput, "prime-to-S part of 0");
    Integer r = abs(n);
    for (const Integer& p : primes) {
        if (p < 2) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
        mpz_remove(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    }
    return r;
}

/// The archimedean place plus every prime dividing some numerator or
/// denominator, in ascending order.
inline std::vector<Place> relevant_places(std::span<const Rational> values) {
    std::map<Integer, bool> primes;
    for (const Rational& v : values) {
        if (v == 0) throw Error(Errc::ZeroInput, "relevant places of 0");
        for (const Integer& part : {Integer(v.get_num()), Integer(v.get_den())})
            if (abs(part) != 1)
                for (const auto& [p, e] : factorize(part).factors) primes[p] = true;
    }
    std::vector<Place> out{Place::archimedean()};
    for (const auto& [p, unused] : primes) out.push_back(Place{Place::Kind::Finite, p});
    return out;
}

/// |r|_v: the usual absolute value at infinity, p^(-ord_p r) at p.
inline Rational abs_at(const Rational& r, const Place& place) {
    if (place.is_archimedean()) return abs(r);
    if (r == 0) return 0;
    return ipow(Rational(place.prime), -val(r, place.prime));
}

// ---------------------------------------------------------------------------
// Formal logarithms

/// A formal Q-linear combination sum_p c_p log p. Logs of distinct primes are
/// linearly independent over Q, so equality here is exact equality of reals.
class LogSum {
public:
    LogSum() = default;

    /// log|r| for r != 0.
    static LogSum log_of(const Rational& r) {
        if (r == 0) throw Error(Errc::ZeroInput, "log of 0");
        LogSum s;
        for (const auto& [p, e] : factorize(Integer(r.get_num())).factors) s.add(p, Rational(static_cast<long>(e)));
        Integer den(r.get_den());
        if (den != 1)
            for (const auto& [p, e] : factorize(den).factors) s.add(p, Rational(-static_cast<long>(e)));
        return s;
    }

    static LogSum log_prime(const Integer& p, const Rational& coefficient) {
        LogSum s;
        s.add(p, coefficient);
        return s;
    }

    void add(const Integer& p, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LogSum& operator+=(const LogSum& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    LogSum& operator-=(const LogSum& o) {
        for (const auto& [p, c] : o.terms_) add(p, Rational(-c));
        return *this;
    }
    LogSum& operator*=(const Rational& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= k;
        return *this;
    }
    friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
    friend LogSum operator-(LogSum a, const LogSum& b) { return a -= b; }
    friend LogSum operator*(const Rational& k, LogSum a) { return a *= k; }

    friend bool operator==(const LogSum& a, const LogSum& b) { return a.terms_ == b.terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    /// exp of the sum when every coefficient is an integer.
    std::optional<Rational> exp_exact() const {
        Rational r = 1;
        for (const auto& [p, c] : terms_) {
            if (c.get_den() != 1) return std::nullopt;
            r *= ipow(Rational(p), static_cast<long>(c.get_num().get_si()));
        }
        return r;
    }

    double value() const {
        double s = 0.0;
        for (const auto& [p, c] : terms_) s += to_double(c) * log_abs(p);
        return s;
    }

    const std::map<Integer, Rational>& terms() const noexcept { return terms_; }

private:
    std::map<Integer, Rational> terms_;
};

} // namespace wph
