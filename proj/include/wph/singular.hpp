#pragma once
// Singular locus of WP_w^n: x is singular iff the weights at its nonzero
// coordinates share a factor. The locus is the union over primes p | m of
// S_w(p) = { x : supp(x) is contained in J(p) }, J(p) = { i : p | q_i }.

#include "arith.hpp"
#include "point.hpp"
#include "weights.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace wph {

struct SingularComponent {
    Weight prime;
    std::vector<std::size_t> indices; // J(p), ascending
    std::size_t dimension;            // #J(p) - 1
};

inline bool is_singular(const WPoint& x) {
    Weight g = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) g = std::gcd(g, x.weights()[i]);
    return g > 1;
}

inline std::vector<std::size_t> j_set(const Weights& w, Weight p) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] % p == 0) j.push_back(i);
    return j;
}

inline std::vector<Weight> primes_dividing(Weight m) {
    std::vector<Weight> ps;
    for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(m))).factors) ps.push_back(p.get_ui());
    return ps;
}

/// Every S_w(p) for p | m, including non-maximal ones.
inline std::vector<SingularComponent> all_singular_strata(const Weights& w) {
    std::vector<SingularComponent> out;
    for (Weight p : primes_dividing(w.lcm())) {
        auto j = j_set(w, p);
        out.push_back({p, j, j.size() - 1});
    }
    return out;
}

/// Components with maximal J(p). Primes with identical J(p) are all kept.
inline std::vector<SingularComponent> singular_components(const Weights& w) {
    auto all = all_singular_strata(w);
    std::vector<SingularComponent> out;
    for (const auto& c : all) {
        bool dominated = std::any_of(all.begin(), all.end(), [&](const SingularComponent& o) {
            return o.indices.size() > c.indices.size() &&
                   std::includes(o.indices.begin(), o.indices.end(), c.indices.begin(), c.indices.end());
        });
        if (!dominated) out.push_back(c);
    }
    return out;
}

inline bool component_membership(const WPoint& x, Weight p) {
    const Weights& w = x.weights();
    if (p < 2 || w.lcm() % p != 0 || !is_prime(Integer(static_cast<unsigned long>(p))))
        throw Error(Errc::PrimeNotDividingM, std::to_string(p) + " is not a prime dividing m = " + std::to_string(w.lcm()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && w[i] % p != 0) return false;
    return true;
}

/// Well-formedness of a degree-d hypersurface: the space is well-formed and
/// the gcd of any n-1 weights divides d. An empty gcd (n = 1) imposes nothing.
inline bool hypersurface_well_formed(const Weights& w, Weight d) {
    if (!w.is_well_formed()) return false;
    const auto& q = w.values();
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            Weight g = 0;
            for (std::size_t k = 0; k < q.size(); ++k)
                if (k != i && k != j) g = std::gcd(g, q[k]);
            if (g != 0 && d % g != 0) return false;
        }
    return true;
}

} // namespace wph
