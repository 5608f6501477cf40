#pragma once
// Exhaustive audit of the implication
//   log hwgcd(x) = 0  =>  x is singular
// over normalized integral points with |x_i| <= bound. Points where it
// fails are reported together with their valuation data.

#include "arith.hpp"
#include "gcd.hpp"
#include "point.hpp"
#include "singular.hpp"
#include "subscheme.hpp"

#include <functional>
#include <map>
#include <vector>

namespace wph {

struct AuditEntry {
    WPoint point;
    LogSum log_hwgcd;
    bool singular = false;
    std::vector<Factorization> coordinate_factors; // one per coordinate; sign 0 for a zero coordinate
    std::vector<std::pair<Integer, long>> t_values;  // T_nu at primes dividing m or some coordinate
};

struct AuditReport {
    Weights weights;
    long bound = 0;
    std::size_t checked = 0;
    std::size_t zero_log_hwgcd = 0;
    std::size_t singular = 0;
    std::vector<AuditEntry> counterexamples;

    const AuditEntry* find(const WPoint& x) const {
        for (const auto& e : counterexamples)
            if (e.point == x) return &e;
        return nullptr;
    }
};

inline AuditEntry audit_point(const WPoint& x) {
    AuditEntry e{x, log_hwgcd(x, true), is_singular(x), {}, {}};
    std::map<Integer, bool> primes;
    for (Weight p : primes_dividing(x.weights().lcm())) primes[Integer(static_cast<unsigned long>(p))] = true;
    for (const auto& c : x.coords()) {
        if (c == 0) {
            e.coordinate_factors.push_back(Factorization{0, {}});
            continue;
        }
        auto f = factorize(c.get_num());
        for (const auto& [p, k] : f.factors) primes[p] = true;
        e.coordinate_factors.push_back(std::move(f));
    }
    for (const auto& [p, unused] : primes)
        e.t_values.emplace_back(p, t_nu_finite(std::span<const Rational>(x.coords()), x.weights(), p));
    return e;
}

inline AuditReport sing1_audit(const Weights& w, long bound) {
    if (!w.is_well_formed())
        throw Error(Errc::IllFormedWeights, "weights " + w.to_string() + " are not well-formed");
    AuditReport report{w, bound, 0, 0, 0, {}};
    if (bound < 0) return report;
    const std::size_t n = w.size();
    std::vector<Integer> cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (std::all_of(cur.begin(), cur.end(), [](const Integer& v) { return v == 0; })) return;
            WPoint x = WPoint::from_integers(cur, w);
            if (!is_normalized(x)) return;
            ++report.checked;
            const bool zero = log_hwgcd(x, true).is_zero();
            const bool sing = is_singular(x);
            report.zero_log_hwgcd += zero;
            report.singular += sing;
            if (zero && !sing) report.counterexamples.push_back(audit_point(x));
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return report;
}

} // namespace wph
