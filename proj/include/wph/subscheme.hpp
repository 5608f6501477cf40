#pragma once
// Closed subschemes given by generators, and the weighted gcd of a point
// relative to one: log wgcd(f_1(x), ..., f_t(x)) with per-generator weights.

#include "gcd.hpp"
#include "point.hpp"
#include "wpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wph {

class Subscheme {
public:
    /// gcd_weights defaults to each generator's weighted degree, which requires
    /// homogeneous generators.
    explicit Subscheme(std::vector<WPolynomial> generators, std::optional<std::vector<Weight>> gcd_weights = std::nullopt)
        : generators_(std::move(generators)) {
        if (generators_.empty()) throw Error(Errc::DegenerateGenerators, "a subscheme needs at least one generator");
        for (const auto& f : generators_) {
            if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "zero generator");
            if (!(f.weights() == generators_.front().weights()))
                throw Error(Errc::WeightMismatch, "generators over different weights");
        }
        std::vector<Weight> gw;
        if (gcd_weights) {
            gw = std::move(*gcd_weights);
            if (gw.size() != generators_.size())
                throw Error(Errc::ArityMismatch, "need one gcd weight per generator");
        } else {
            for (const auto& f : generators_) {
                auto d = f.weighted_degree();
                if (!d)
                    throw Error(Errc::NotHomogeneous,
                                "generator '" + f.to_string() + "' is not homogeneous; supply gcd weights explicitly");
                gw.push_back(*d);
            }
        }
        for (Weight g : gw)
            if (g == 0) throw Error(Errc::InvalidConfig, "gcd weights must be >= 1 (a generator of degree 0?)");
        gcd_weights_ = Weights(std::move(gw));
    }

    const std::vector<WPolynomial>& generators() const noexcept { return generators_; }
    const Weights& gcd_weights() const noexcept { return *gcd_weights_; }
    const Weights& weights() const noexcept { return generators_.front().weights(); }

    bool all_homogeneous() const {
        for (const auto& f : generators_)
            if (!f.is_homogeneous()) return false;
        return true;
    }

    /// Generator values at x.
    std::vector<Rational> values_at(const WPoint& x) const {
        std::vector<Rational> v;
        for (const auto& f : generators_) v.push_back(f.eval(x));
        return v;
    }

    bool contains(const WPoint& x) const {
        for (const auto& f : generators_)
            if (f.eval(x) != 0) return false;
        return true;
    }

    /// Union of generator lists (the ideal sum, i.e. the intersection Y1 n Y2).
    friend Subscheme intersect(const Subscheme& a, const Subscheme& b) {
        auto gens = a.generators_;
        gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
        auto gw = a.gcd_weights().values();
        gw.insert(gw.end(), b.gcd_weights().values().begin(), b.gcd_weights().values().end());
        return Subscheme(std::move(gens), std::move(gw));
    }

private:
    std::vector<WPolynomial> generators_;
    std::optional<Weights> gcd_weights_;
};

inline double t_nu(const WPoint& x, const Place& place) {
    return t_nu(std::span<const Rational>(x.coords()), x.weights(), place);
}

inline LogSum log_hwgcd(const WPoint& x, bool include_archimedean) {
    return log_hwgcd(std::span<const Rational>(x.coords()), x.weights(), include_archimedean);
}

/// log wgcd(f_1(x), ..., f_t(x)) using the subscheme's gcd weights, for a
/// normalized integral x off the subscheme.
inline LogSum hwgcd_subscheme(const WPoint& x, const Subscheme& y) {
    if (!x.is_integral() || wgcd(x.integer_coords(), x.weights()) != 1)
        throw Error(Errc::NotNormalized, "point " + x.to_string() + " is not normalized integral");
    for (const auto& f : y.generators())
        for (const auto& [e, c] : f.terms())
            if (c.get_den() != 1)
                throw Error(Errc::InvalidConfig, "generator '" + f.to_string() + "' has non-integer coefficients");
    std::vector<Integer> vals;
    for (const auto& f : y.generators()) {
        Rational v = f.eval(x);
        vals.emplace_back(v.get_num());
    }
    if (std::all_of(vals.begin(), vals.end(), [](const Integer& v) { return v == 0; }))
        throw Error(Errc::PointOnSubscheme, "all generators vanish at " + x.to_string());
    return log_wgcd(vals, y.gcd_weights());
}

} // namespace wph
