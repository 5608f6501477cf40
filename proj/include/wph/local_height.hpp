#pragma once
// Local weighted heights per place,
//   zeta(x, v) = -(1/m) log( |f(x)|_v / max_i |x_i|_v^{e_i} ),
// with e_i = q_i (MetricMode::Paper) or e_i = m/q_i (MetricMode::Alt), and
// their sums over the places of Q. Everything is kept as a formal sum of
// logs of primes; doubles appear only in the reported values.

#include "arith.hpp"
#include "height.hpp"
#include "point.hpp"
#include "subscheme.hpp"
#include "wpoly.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace wph {

enum class MetricMode { Paper, Alt };

inline std::string_view to_string(MetricMode m) { return m == MetricMode::Paper ? "paper" : "alt"; }

inline MetricMode parse_metric_mode(std::string_view s) {
    if (s == "paper") return MetricMode::Paper;
    if (s == "alt") return MetricMode::Alt;
    throw Error(Errc::ParseError, "metric must be 'paper' or 'alt', got '" + std::string(s) + "'");
}

struct LocalHeight {
    Place place;
    LogSum formal;
    double value = 0.0;
};

/// max_i |x_i|_v^{e_i}; zero coordinates contribute 0.
inline Rational metric_denominator(const WPoint& x, const Place& v, MetricMode mode) {
    if (mode == MetricMode::Alt) return weighted_max_at(x, v);
    Rational best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rational t = ipow(abs_at(x[i], v), static_cast<unsigned long>(x.weights()[i]));
        if (t > best) best = t;
    }
    return best;
}

namespace detail {

inline LocalHeight local_from_ratio(const Place& v, const Rational& ratio, Weight m) {
    LocalHeight h{v, Rational(1, m) * LogSum::log_of(ratio), 0.0};
    h.value = h.formal.value();
    return h;
}

inline void require_homogeneous(const WPolynomial& f, bool allow_mixed) {
    if (!allow_mixed && !f.is_homogeneous())
        throw Error(Errc::NotHomogeneous, "'" + f.to_string() + "' is not weighted homogeneous");
}

} // namespace detail

/// Local height of div(f) at v.
inline LocalHeight zeta_principal(const WPoint& x, const WPolynomial& f, const Place& v, MetricMode mode,
                                  bool allow_mixed = false) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "principal divisor of the zero polynomial");
    detail::require_homogeneous(f, allow_mixed);
    Rational fx = f.eval(x);
    if (fx == 0) throw Error(Errc::OnSupport, x.to_string() + " lies on div(" + f.to_string() + ")");
    Rational ratio = metric_denominator(x, v, mode) / abs_at(fx, v);
    return detail::local_from_ratio(v, ratio, x.weights().lcm());
}

/// Local height of the hyperplane section cut out by a form l. The formula is
/// the principal one; l may have any weighted degree.
inline LocalHeight zeta_hyperplane(const WPoint& x, const WPolynomial& l, const Place& v, MetricMode mode) {
    return zeta_principal(x, l, v, mode);
}

/// min over generators of the principal local heights. Generators vanishing
/// at x contribute +infinity.
inline LocalHeight zeta_subscheme(const WPoint& x, const Subscheme& y, const Place& v, MetricMode mode,
                                  bool allow_mixed = false) {
    std::optional<Rational> best;
    for (const auto& f : y.generators()) {
        detail::require_homogeneous(f, allow_mixed);
        Rational fx = f.eval(x);
        if (fx == 0) continue;
        Rational ratio = metric_denominator(x, v, mode) / abs_at(fx, v);
        if (!best || ratio < *best) best = ratio;
    }
    if (!best) throw Error(Errc::PointOnSubscheme, "all generators vanish at " + x.to_string());
    return detail::local_from_ratio(v, *best, x.weights().lcm());
}

/// (1/m) sum_v log max_i |x_i|_v^{e_i}; in Alt mode this is exactly lwh(x).
inline LogSum metric_height(const WPoint& x, MetricMode mode) {
    LogSum s;
    for (const Place& v : relevant_places(nonzero_coords(x))) s += LogSum::log_of(metric_denominator(x, v, mode));
    return Rational(1, x.weights().lcm()) * s;
}

struct DivisorSpec {
    enum class Kind { Hyperplane, Principal, SubschemeMin };

    Kind kind;
    std::variant<WPolynomial, Subscheme> payload;

    static DivisorSpec hyperplane(WPolynomial l) { return {Kind::Hyperplane, std::move(l)}; }
    static DivisorSpec principal(WPolynomial f) {
        if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "principal divisor of the zero polynomial");
        return {Kind::Principal, std::move(f)};
    }
    static DivisorSpec subscheme(Subscheme y) { return {Kind::SubschemeMin, std::move(y)}; }
};

struct GlobalSum {
    LogSum formal;
    double value = 0.0;
    std::vector<LocalHeight> per_place;
};

/// Sum of local heights over every place where a term can be nonzero.
inline GlobalSum global_sum(const WPoint& x, const DivisorSpec& spec, MetricMode mode, bool allow_mixed = false) {
    std::vector<Rational> support = nonzero_coords(x);
    if (const auto* f = std::get_if<WPolynomial>(&spec.payload)) {
        Rational fx = f->eval(x);
        if (fx == 0) throw Error(Errc::OnSupport, x.to_string() + " lies on div(" + f->to_string() + ")");
        support.push_back(fx);
    } else {
        const auto& y = std::get<Subscheme>(spec.payload);
        bool any = false;
        for (const Rational& v : y.values_at(x))
            if (v != 0) {
                support.push_back(v);
                any = true;
            }
        if (!any) throw Error(Errc::OnSupport, x.to_string() + " lies on the subscheme");
    }
    GlobalSum g;
    for (const Place& v : relevant_places(support)) {
        LocalHeight h = spec.kind == DivisorSpec::Kind::SubschemeMin
                            ? zeta_subscheme(x, std::get<Subscheme>(spec.payload), v, mode, allow_mixed)
                            : zeta_principal(x, std::get<WPolynomial>(spec.payload), v, mode, allow_mixed);
        g.formal += h.formal;
        g.per_place.push_back(std::move(h));
    }
    g.value = g.formal.value();
    return g;
}

} // namespace wph
