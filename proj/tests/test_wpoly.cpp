#include "oracles.hpp"

#include <gtest/gtest.h>
#include <wph/wpoly.hpp>

using namespace wph;

namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

WPolynomial F(const char* s, const Weights& w) { return WPolynomial::parse(s, w); }

template <class Fn>
Errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return Errc::InvalidConfig;
}

/// Random homogeneous polynomial of degree d with small integer coefficients.
WPolynomial random_homogeneous(oracle::Gen& g, const Weights& w, unsigned long d) {
    WPolynomial f(w);
    auto monos = monomials_of_degree(w, d);
    while (f.is_zero())
        for (const auto& e : monos)
            if (g.integer(0, 2) == 0) f.add_term(q(g.integer(-9, 9)), e);
    return f;
}

} // namespace

TEST(WPoly, WeightedDegreeExamples) {
    EXPECT_EQ(F("x0*x1", Weights{2, 3}).weighted_degree(), 5u);
    EXPECT_EQ(F("x1 - x0^2", Weights{1, 2}).weighted_degree(), 2u);
    EXPECT_FALSE(F("x1 - x0", Weights{1, 2}).weighted_degree().has_value());
    EXPECT_EQ(code_of([] { WPolynomial(Weights{1, 2}).weighted_degree(); }), Errc::ZeroPolynomial);
    EXPECT_EQ(code_of([] { F("x1 - x0", Weights{1, 2}).homogeneous_degree(); }), Errc::NotHomogeneous);
}

TEST(WPoly, EvalExamples) {
    Weights w{1, 2};
    std::vector<Rational> x{q(1), q(5)};
    EXPECT_EQ(F("x1 - x0^2", w).eval(x), q(4));
    std::vector<Rational> zero{q(0), q(0)};
    EXPECT_EQ(F("3*x0^2*x1 - x1^2", w).eval(zero), q(0));
    std::vector<Rational> y{q(3), q(4)};
    EXPECT_EQ(F("x0*x1", Weights{1, 1}).eval(y), q(12));
    std::vector<Rational> bad{q(1)};
    EXPECT_EQ(code_of([&] { F("x0", w).eval(bad); }), Errc::ArityMismatch);
}

TEST(WPoly, ParseAndCanonicalPrint) {
    Weights w{1, 2, 3};
    WPolynomial f = F(" 3*x0^2*x1 - x2 + 1/2*x0*x0*x1 ", w);
    EXPECT_EQ(f.to_string(), "7/2*x0^2*x1 - x2");
    EXPECT_EQ(F("-x0 + x0", w).to_string(), "0");
    EXPECT_EQ(F(f.to_string().c_str(), w), f);
    EXPECT_EQ(F("2", w).to_string(), "2");
    for (const char* bad : {"", "x", "x0^", "3**x0", "x0 +", "y1", "x0^-1", "1/0"})
        EXPECT_EQ(code_of([&] { F(bad, w); }), Errc::ParseError) << bad;
    EXPECT_EQ(code_of([&] { F("x3", w); }), Errc::ArityMismatch);
}

TEST(WPoly, Arithmetic) {
    Weights w{1, 2};
    WPolynomial a = F("x1 - x0^2", w), b = F("x1 + x0^2", w);
    EXPECT_EQ((a * b).to_string(), "-x0^4 + x1^2");
    EXPECT_EQ((a + b).to_string(), "2*x1");
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(code_of([&] { (void)(a + F("x0", Weights{1, 1})); }), Errc::WeightMismatch);
}

TEST(WPoly, ScalingLaw) {
    oracle::Gen g(53);
    for (int k = 0; k < 300; ++k) {
        Weights w = g.weights(static_cast<std::size_t>(g.integer(2, 4)), 5);
        unsigned long d = static_cast<unsigned long>(g.integer(1, 12));
        if (monomials_of_degree(w, d).empty()) continue;
        WPolynomial f = random_homogeneous(g, w, d);
        WPoint x = g.point(w, 50, 20);
        Rational lambda = g.nonzero_rational(7, 7);
        Rational lhs = f.eval(scale(x, lambda));
        Rational rhs = ipow(lambda, d) * f.eval(x);
        EXPECT_EQ(lhs, rhs) << f.to_string() << " at " << x.to_string();
        EXPECT_EQ(f.eval(x) == 0, lhs == 0);
    }
}

TEST(WPoly, MonomialsOfDegree) {
    // Degree 6 monomials for (1,2,3): count by brute force.
    Weights w{1, 2, 3};
    std::size_t brute = 0;
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; b <= 3; ++b)
            for (unsigned c = 0; c <= 2; ++c) brute += (a + 2 * b + 3 * c == 6);
    auto monos = monomials_of_degree(w, 6);
    EXPECT_EQ(monos.size(), brute);
    for (const auto& e : monos) EXPECT_EQ(e[0] + 2 * e[1] + 3 * e[2], 6u);
}

TEST(Dehomogenize, Examples) {
    // x0^3 + x1 over (1,3): X = x0^3/x1, so f/x1 = X + 1.
    EXPECT_EQ(dehomogenize_binary(F("x0^3 + x1", Weights{1, 3})), (std::vector<Rational>{q(1), q(1)}));
    EXPECT_EQ(dehomogenize_binary(F("x0*x1", Weights{1, 1})), (std::vector<Rational>{q(0), q(1)}));
    EXPECT_EQ(code_of([] { dehomogenize_binary(F("x0^2*x1 + x1^2", Weights{3, 2})); }), Errc::NotHomogeneous);
    EXPECT_EQ(code_of([] { dehomogenize_binary(F("x0*x1", Weights{1, 2})); }), Errc::NonIntegralExponent);
    EXPECT_EQ(code_of([] { dehomogenize_binary(F("x0", Weights{1, 1, 1})); }), Errc::ArityMismatch);
}

TEST(Dehomogenize, RoundTripsThroughSubstitution) {
    // f(x0, x1) = x1^{d/q1} * fX(x0^{q1} / x1^{q0}) whenever q0 = 1.
    oracle::Gen g(59);
    for (int k = 0; k < 200; ++k) {
        Weight q1 = static_cast<Weight>(g.integer(1, 4));
        Weights w{1, q1};
        unsigned long d = q1 * static_cast<unsigned long>(g.integer(1, 4));
        WPolynomial f = random_homogeneous(g, w, d);
        auto coeffs = dehomogenize_binary(f);
        Rational x0 = g.nonzero_rational(9, 9), x1 = g.nonzero_rational(9, 9);
        Rational X = ipow(x0, static_cast<unsigned long>(q1)) / x1;
        Rational acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * X + coeffs[i];
        std::vector<Rational> pt{x0, x1};
        EXPECT_EQ(f.eval(pt), ipow(x1, d / q1) * acc) << f.to_string();
    }
}
