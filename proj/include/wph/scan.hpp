#pragma once
// Tabulation harness for the Vojta-conditional weighted gcd bound
//
//   wgcd(f_1(x), ..., f_t(x)) <= max_i |x_i|^{eps/q_i} * (|x_0 ... x_n|'_S)^{1/(q (r - 1 + delta))}
//
// over normalized integral points of a finite domain. Nothing here decides
// the conjecture; rows with lhs > rhs are only flagged.

#include "arith.hpp"
#include "gcd.hpp"
#include "local_height.hpp"
#include "point.hpp"
#include "subscheme.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace wph {

/// All integer tuples with |x_i| <= bounds[i].
struct BoxDomain {
    std::vector<Integer> bounds;
};

/// x_0 = 1 and x_i (i >= 1) ranging over the positive S-units <= max_value.
struct SUnitDomain {
    std::vector<Integer> primes;
    Integer max_value;
};

using ScanDomain = std::variant<BoxDomain, SUnitDomain>;

struct ScanConfig {
    Weights weights;
    Subscheme generators;
    Rational epsilon = 1;
    Rational delta = 0;
    std::vector<Integer> s_primes;
    ScanDomain domain;
    std::optional<unsigned long> codim; // defaults to the generator count
    MetricMode metric_mode = MetricMode::Paper;
    unsigned threads = 0; // 0: hardware concurrency

    unsigned long r() const { return codim.value_or(generators.generators().size()); }
};

struct ScanRow {
    std::vector<Integer> point;
    Integer lhs;
    Integer max_pow_m;            // max_i |x_i|^{m/q_i}
    std::optional<Integer> s_free; // |x_0...x_n|'_S; nullopt when a coordinate is 0 (rhs = +inf)
    double rhs = 0.0;
    double ratio = 0.0;
    bool exceptional = false;
};

struct ScanSummary {
    std::size_t enumerated = 0;
    std::size_t not_normalized = 0;
    std::size_t on_subscheme = 0;
    std::size_t rows = 0;
    std::size_t exceptional = 0;
    double max_ratio = 0.0;
    std::vector<Integer> max_ratio_point;
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanRow> rows;
    ScanSummary summary;
    double runtime_ms = 0.0;
};

inline std::string format_real(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string format_point(const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ':';
        s += xs[i].get_str();
    }
    return s + "]";
}

/// Positive integers <= max whose prime factors all lie in primes, ascending.
inline std::vector<Integer> s_units_up_to(const std::vector<Integer>& primes, const Integer& max_value) {
    std::vector<Integer> out{Integer(1)};
    if (max_value < 1) return {};
    for (const Integer& p : primes) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            Integer v = out[i] * p;
            while (v <= max_value) {
                out.push_back(v);
                v *= p;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

struct RhsExponents {
    Rational eps;    // epsilon
    Rational s_exp;  // 1 / (q (r - 1 + delta))
};

inline RhsExponents rhs_exponents(const ScanConfig& c) {
    if (c.epsilon <= 0) throw Error(Errc::InvalidConfig, "epsilon must be positive");
    if (c.delta < 0) throw Error(Errc::InvalidConfig, "delta must be non-negative");
    Rational denom = Rational(static_cast<long>(c.r()) - 1) + c.delta;
    if (denom <= 0) throw Error(Errc::InvalidConfig, "r - 1 + delta must be positive (r = " + std::to_string(c.r()) + ")");
    unsigned __int128 q = c.weights.product();
    if (q > static_cast<unsigned __int128>(std::numeric_limits<unsigned long>::max()))
        throw Error(Errc::InvalidConfig, "weight product too large");
    Rational qr(Integer(static_cast<unsigned long>(q)));
    return RhsExponents{c.epsilon, Rational(1) / (qr * denom)};
}

/// lhs > Mm^{eps/m} * P^{s_exp}, decided in log space when clear and by
/// exact integer powers otherwise.
inline bool exceeds(const Integer& lhs, const Integer& max_pow_m, const Integer& s_free, Weight m,
                    const RhsExponents& ex) {
    const double l = log_abs(lhs);
    const double r = to_double(ex.eps) / static_cast<double>(m) * log_abs(max_pow_m) + to_double(ex.s_exp) * log_abs(s_free);
    if (std::fabs(l - r) > 1e-9 * std::max({1.0, std::fabs(l), std::fabs(r)})) return l > r;
    // lhs^N vs Mm^{a h} P^{g m b} with eps = a/b, s_exp = g/h, N = m b h.
    const Integer a(ex.eps.get_num()), b(ex.eps.get_den()), g(ex.s_exp.get_num()), h(ex.s_exp.get_den());
    if (!b.fits_ulong_p() || !h.fits_ulong_p() || !a.fits_ulong_p() || !g.fits_ulong_p())
        throw Error(Errc::InvalidConfig, "exponents too large for exact comparison");
    const unsigned long N = m * b.get_ui() * h.get_ui();
    Integer left = ipow(lhs, N);
    Integer right = ipow(max_pow_m, a.get_ui() * h.get_ui()) * ipow(s_free, g.get_ui() * m * b.get_ui());
    return left > right;
}

inline std::optional<ScanRow> evaluate_point(const ScanConfig& c, const std::vector<Integer>& xs, const RhsExponents& ex,
                                             ScanSummary& tally) {
    ++tally.enumerated;
    const Weights& w = c.weights;
    if (wgcd(xs, w) != 1) {
        ++tally.not_normalized;
        return std::nullopt;
    }
    const WPoint x = WPoint::from_integers(xs, w);
    std::vector<Integer> vals;
    bool any = false;
    for (const auto& f : c.generators.generators()) {
        vals.emplace_back(f.eval(x).get_num());
        any = any || vals.back() != 0;
    }
    if (!any) {
        ++tally.on_subscheme;
        return std::nullopt;
    }
    ScanRow row;
    row.point = xs;
    row.lhs = wgcd(vals, c.generators.gcd_weights());
    const Weight m = w.lcm();
    row.max_pow_m = 0;
    Integer prod = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Integer t = ipow(Integer(abs(xs[i])), static_cast<unsigned long>(m / w[i]));
        if (t > row.max_pow_m) row.max_pow_m = t;
        prod *= xs[i];
    }
    if (prod != 0) row.s_free = s_part(prod, c.s_primes);
    if (row.s_free) {
        const double log_rhs = to_double(ex.eps) / static_cast<double>(m) * log_abs(row.max_pow_m) +
                               to_double(ex.s_exp) * log_abs(*row.s_free);
        row.rhs = std::exp(log_rhs);
        row.ratio = std::exp(log_abs(row.lhs) - log_rhs);
        row.exceptional = exceeds(row.lhs, row.max_pow_m, *row.s_free, m, ex);
    } else {
        row.rhs = std::numeric_limits<double>::infinity();
        row.ratio = 0.0;
        row.exceptional = false;
    }
    return row;
}

struct Chunk {
    std::vector<ScanRow> rows;
    ScanSummary tally;
};

/// Enumerates the domain as a list of independent chunks of points in
/// ascending lexicographic order; chunk k precedes chunk k+1.
inline std::vector<std::vector<std::vector<Integer>>> partition_domain(const ScanConfig& c) {
    const std::size_t dim = c.weights.size();
    std::vector<std::vector<std::vector<Integer>>> chunks;
    if (const auto* box = std::get_if<BoxDomain>(&c.domain)) {
        std::vector<Integer> bounds = box->bounds;
        if (bounds.size() == 1) bounds.assign(dim, bounds.front());
        if (bounds.size() != dim) throw Error(Errc::InvalidConfig, "box needs one bound or one per coordinate");
        for (const auto& b : bounds)
            if (b < 0) throw Error(Errc::EmptyDomain, "negative box bound");
        // One chunk per value of x_0.
        for (Integer x0 = -bounds[0]; x0 <= bounds[0]; ++x0) {
            std::vector<std::vector<Integer>> pts;
            std::vector<Integer> cur(dim);
            cur[0] = x0;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == dim) {
                    if (std::any_of(cur.begin(), cur.end(), [](const Integer& v) { return v != 0; })) pts.push_back(cur);
                    return;
                }
                for (Integer v = -bounds[i]; v <= bounds[i]; ++v) {
                    cur[i] = v;
                    rec(i + 1);
                }
            };
            rec(1);
            chunks.push_back(std::move(pts));
        }
    } else {
        const auto& su = std::get<SUnitDomain>(c.domain);
        if (su.max_value < 1) throw Error(Errc::EmptyDomain, "S-unit grid max must be >= 1");
        const auto units = s_units_up_to(su.primes, su.max_value);
        if (dim < 2) throw Error(Errc::InvalidConfig, "S-unit grid needs at least two coordinates");
        // One chunk per value of x_1.
        for (const Integer& x1 : units) {
            std::vector<std::vector<Integer>> pts;
            std::vector<Integer> cur(dim);
            cur[0] = 1;
            cur[1] = x1;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == dim) {
                    pts.push_back(cur);
                    return;
                }
                for (const Integer& u : units) {
                    cur[i] = u;
                    rec(i + 1);
                }
            };
            rec(2);
            chunks.push_back(std::move(pts));
        }
    }
    return chunks;
}

} // namespace detail

inline ScanReport vojta_scan(const ScanConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    if (!(config.generators.weights() == config.weights))
        throw Error(Errc::WeightMismatch, "generators and scan weights differ");
    const auto ex = detail::rhs_exponents(config);
    const auto chunks = detail::partition_domain(config);

    std::vector<detail::Chunk> results(chunks.size());
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks.size(), 1)));
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < threads; ++t)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t k = next++; k < chunks.size(); k = next++)
                for (const auto& xs : chunks[k])
                    if (auto row = detail::evaluate_point(config, xs, ex, results[k].tally))
                        results[k].rows.push_back(std::move(*row));
        }));
    for (auto& f : workers) f.get();

    ScanReport report{config, {}, {}, 0.0};
    ScanSummary& s = report.summary;
    for (auto& chunk : results) {
        s.enumerated += chunk.tally.enumerated;
        s.not_normalized += chunk.tally.not_normalized;
        s.on_subscheme += chunk.tally.on_subscheme;
        for (auto& row : chunk.rows) report.rows.push_back(std::move(row));
    }
    if (s.enumerated == 0) throw Error(Errc::EmptyDomain, "the scan domain contains no points");
    if (report.rows.empty() && s.on_subscheme > 0)
        throw Error(Errc::DegenerateGenerators, "every normalized domain point lies on the subscheme");
    if (report.rows.empty()) throw Error(Errc::EmptyDomain, "the scan domain has no normalized points");
    s.rows = report.rows.size();
    for (const auto& row : report.rows) {
        if (row.exceptional) ++s.exceptional;
        if (s.max_ratio_point.empty() || row.ratio > s.max_ratio) {
            s.max_ratio = row.ratio;
            s.max_ratio_point = row.point;
        }
    }
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline std::string to_csv(const ScanReport& report) {
    std::string out = "point,lhs,rhs,ratio,exceptional\n";
    for (const auto& row : report.rows) {
        out += format_point(row.point);
        out += ',';
        out += row.lhs.get_str();
        out += ',';
        out += format_real(row.rhs);
        out += ',';
        out += format_real(row.ratio);
        out += row.exceptional ? ",true\n" : ",false\n";
    }
    return out;
}

/// S-unit pairs: w = (1, q1, q2), generators x1 - x0 and x2 - x0 with gcd
/// weights (q1, q2), S = {2, 3}, x_1, x_2 <= max_value.
inline ScanConfig sunit_pair_preset(Weight q1 = 2, Weight q2 = 3, const Integer& max_value = Integer(1000000),
                                    const Rational& epsilon = Rational(1)) {
    Weights w{1, q1, q2};
    std::vector<WPolynomial> gens{WPolynomial::parse("x1 - x0", w), WPolynomial::parse("x2 - x0", w)};
    std::vector<Integer> s{Integer(2), Integer(3)};
    return ScanConfig{w,
                      Subscheme(std::move(gens), std::vector<Weight>{q1, q2}),
                      epsilon,
                      Rational(0),
                      s,
                      SUnitDomain{s, max_value},
                      std::nullopt,
                      MetricMode::Paper,
                      0};
}

} // namespace wph
