#include "oracles.hpp"

#include <gtest/gtest.h>
#include <wph/arith.hpp>

#include <cmath>

using namespace wph;

namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

} // namespace

TEST(Factorize, One) {
    auto f = factorize(Integer(1));
    EXPECT_EQ(f.sign, 1);
    EXPECT_TRUE(f.factors.empty());
}

TEST(Factorize, MinusTwelve) {
    auto f = factorize(Integer(-12));
    EXPECT_EQ(f.sign, -1);
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0], std::make_pair(Integer(2), 2UL));
    EXPECT_EQ(f.factors[1], std::make_pair(Integer(3), 1UL));
}

TEST(Factorize, TenToTwelvePlus39) {
    Integer n("1000000000039");
    auto f = factorize(n);
    EXPECT_EQ(f.product(), n);
    // Independent check: trial division finds no factor up to sqrt(n).
    EXPECT_TRUE(oracle::is_prime(1000000000039LL));
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].first, n);
}

TEST(Factorize, ZeroThrows) {
    try {
        factorize(Integer(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInput);
    }
}

TEST(Factorize, LargeSemiprimesAndPowers) {
    // Products of primes beyond the trial-division limit.
    Integer p1("1000000007"), p2("998244353"), p3("1000000000039");
    for (const Integer& n : {Integer(p1 * p2), Integer(p1 * p1 * p3), Integer(p2 * p3 * 12)}) {
        auto f = factorize(n);
        EXPECT_EQ(f.product(), n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            EXPECT_TRUE(is_prime(f.factors[i].first));
            if (i) {
                EXPECT_LT(f.factors[i - 1].first, f.factors[i].first);
            }
        }
    }
}

TEST(Factorize, MatchesTrialDivisionOnRandomInputs) {
    oracle::Gen g(101);
    for (int k = 0; k < 500; ++k) {
        std::int64_t n = g.integer(-2000000000LL, 2000000000LL);
        if (n == 0) continue;
        auto f = factorize(Integer(static_cast<long>(n)));
        auto ref = oracle::factor(n);
        ASSERT_EQ(f.factors.size(), ref.size()) << n;
        std::size_t i = 0;
        for (auto [p, e] : ref) {
            EXPECT_EQ(f.factors[i].first, Integer(static_cast<long>(p)));
            EXPECT_EQ(f.factors[i].second, static_cast<unsigned long>(e));
            ++i;
        }
        EXPECT_EQ(f.sign, n < 0 ? -1 : 1);
    }
}

TEST(Primality, AgreesWithTrialDivision) {
    for (long n = -5; n < 5000; ++n) EXPECT_EQ(is_prime(Integer(n)), oracle::is_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesRejected) {
    // 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7.
    EXPECT_FALSE(is_prime(Integer("3215031751")));
    EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
    EXPECT_TRUE(is_prime(Integer("18446744073709551557")));
}

TEST(Val, Examples) {
    EXPECT_EQ(val(q(8, 3), Integer(2)), 3);
    EXPECT_EQ(val(q(8, 3), Integer(3)), -1);
    EXPECT_EQ(val(Integer(48), Integer(2)), 4);
}

TEST(Val, ZeroThrows) {
    try {
        val(q(0), Integer(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroInput);
    }
}

TEST(Val, IsAHomomorphism) {
    oracle::Gen g(7);
    for (int k = 0; k < 300; ++k) {
        Rational a = g.nonzero_rational(100000, 100000), b = g.nonzero_rational(100000, 100000);
        for (long p : {2L, 3L, 5L, 7L, 11L}) {
            Integer P(p);
            EXPECT_EQ(val(Rational(a * b), P), val(a, P) + val(b, P));
            EXPECT_EQ(val(a, P), oracle::ord(a, P));
        }
    }
}

TEST(ValPlus, Examples) {
    EXPECT_EQ(val_plus(q(8, 3), Place::finite(Integer(2))), 3.0);
    EXPECT_EQ(val_plus(q(8, 3), Place::archimedean()), 0.0);
    EXPECT_NEAR(val_plus(q(1, 5), Place::archimedean()), std::log(5.0), 1e-15);
    EXPECT_EQ(val_plus(q(8, 3), Place::finite(Integer(3))), 0.0);
    EXPECT_TRUE(std::isinf(val_plus(q(0), Place::finite(Integer(2)))));
}

TEST(Place, RejectsComposite) {
    try {
        Place::finite(Integer(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
}

TEST(SPart, Examples) {
    std::vector<Integer> s23{Integer(2), Integer(3)};
    std::vector<Integer> s2{Integer(2)};
    EXPECT_EQ(s_part(Integer(720), s23), 5);
    EXPECT_EQ(s_part(Integer(7), s23), 7);
    EXPECT_EQ(s_part(Integer(-8), s2), 1);
}

TEST(SPart, TimesSOnlyPartIsAbsValue) {
    oracle::Gen g(3);
    std::vector<Integer> s{Integer(2), Integer(5), Integer(7)};
    for (int k = 0; k < 300; ++k) {
        std::int64_t n = g.integer(-10000000, 10000000);
        if (n == 0) continue;
        Integer sfree = s_part(Integer(static_cast<long>(n)), s);
        Integer sonly = 1;
        for (auto [p, e] : oracle::factor(n))
            if (p == 2 || p == 5 || p == 7)
                for (int i = 0; i < e; ++i) sonly *= static_cast<long>(p);
        EXPECT_EQ(sfree * sonly, Integer(static_cast<long>(std::llabs(n))));
        for (const auto& p : s) EXPECT_NE(sfree % p, 0);
    }
}

TEST(RelevantPlaces, Examples) {
    std::vector<Rational> ones{q(1), q(1)};
    auto a = relevant_places(ones);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_TRUE(a[0].is_archimedean());

    std::vector<Rational> v{q(3), q(4)};
    auto b = relevant_places(v);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_TRUE(b[0].is_archimedean());
    EXPECT_EQ(b[1].prime, 2);
    EXPECT_EQ(b[2].prime, 3);

    std::vector<Rational> w{q(8, 3)};
    EXPECT_EQ(relevant_places(w), b);
}

TEST(RelevantPlaces, ZeroThrows) {
    std::vector<Rational> v{q(0)};
    EXPECT_THROW(relevant_places(v), Error);
}

TEST(ProductFormula, FormalAndFloat) {
    oracle::Gen g(11);
    for (int k = 0; k < 300; ++k) {
        Rational r = g.nonzero_rational(1000000, 1000000);
        std::vector<Rational> one{r};
        LogSum formal;
        double total = 0;
        for (const Place& v : relevant_places(one)) {
            LogSum local = LogSum::log_of(abs_at(r, v));
            total += v.is_archimedean() ? std::log(std::fabs(to_double(r))) : local.value();
            formal += local;
        }
        // log|r|_inf is exactly the formal log|r|; the finite parts cancel it.
        LogSum finite_only;
        for (const Place& v : relevant_places(one))
            if (!v.is_archimedean()) finite_only += LogSum::log_of(abs_at(r, v));
        EXPECT_EQ(finite_only + LogSum::log_of(r), LogSum());
        EXPECT_NEAR(total, 0.0, 1e-12);
    }
}

TEST(LogSum, Arithmetic) {
    LogSum a = LogSum::log_of(q(12)), b = LogSum::log_of(q(1, 6));
    LogSum c = a + b;
    EXPECT_EQ(c, LogSum::log_of(q(2)));
    EXPECT_EQ(*c.exp_exact(), q(2));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(q(1, 2) * LogSum::log_of(q(9)), LogSum::log_of(q(3)));
    EXPECT_FALSE((q(1, 2) * LogSum::log_of(q(2))).exp_exact());
    EXPECT_NEAR(LogSum::log_of(q(27)).value(), std::log(27.0), 1e-14);
}

TEST(Log, HugeValuesStayFinite) {
    Integer big = ipow(Integer(10), 400UL);
    EXPECT_NEAR(log_abs(big), 400 * std::log(10.0), 1e-9);
    EXPECT_NEAR(log_abs(Rational(Rational(1) / Rational(big))), -400 * std::log(10.0), 1e-9);
}
