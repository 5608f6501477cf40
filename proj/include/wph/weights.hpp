#pragma once
// Weight tuples w = (q_0,...,q_n) and the reduction / well-forming /
// Veronese constructions relating weighted projective spaces.

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace wph {

using Weight = std::uint64_t;

namespace detail {

inline Weight checked_lcm(Weight a, Weight b) {
    Weight g = std::gcd(a, b);
    Weight r = 0;
    if (__builtin_mul_overflow(a / g, b, &r)) throw Error(Errc::InvalidConfig, "lcm of weights overflows 64 bits");
    return r;
}

inline Weight gcd_of(const std::vector<Weight>& v, std::size_t skip = static_cast<std::size_t>(-1)) {
    Weight g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != skip) g = std::gcd(g, v[i]);
    return g;
}

inline Weight lcm_of(const std::vector<Weight>& v, std::size_t skip = static_cast<std::size_t>(-1)) {
    Weight l = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != skip) l = checked_lcm(l, v[i]);
    return l;
}

} // namespace detail

class Weights {
public:
    explicit Weights(std::vector<Weight> q) : q_(std::move(q)) {
        if (q_.empty()) throw Error(Errc::InvalidConfig, "weights must be nonempty");
        for (Weight qi : q_)
            if (qi == 0) throw Error(Errc::InvalidConfig, "weights must be positive");
        m_ = detail::lcm_of(q_);
    }

    Weights(std::initializer_list<Weight> q) : Weights(std::vector<Weight>(q)) {}

    /// Parses "w=(q0,...,qn)" or "(q0,...,qn)".
    static Weights parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        std::string_view v(s);
        if (v.starts_with("w=")) v.remove_prefix(2);
        if (v.size() < 2 || v.front() != '(' || v.back() != ')')
            throw Error(Errc::ParseError, "weights must look like (q0,...,qn): '" + std::string(text) + "'");
        v = v.substr(1, v.size() - 2);
        std::vector<Weight> q;
        while (true) {
            auto comma = v.find(',');
            std::string_view tok = v.substr(0, comma);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw Error(Errc::ParseError, "bad weight entry '" + std::string(tok) + "'");
            if (tok.size() > 18) throw Error(Errc::ParseError, "weight entry too large");
            Weight val = std::stoull(std::string(tok));
            if (val == 0) throw Error(Errc::ParseError, "weights must be positive");
            q.push_back(val);
            if (comma == std::string_view::npos) break;
            v.remove_prefix(comma + 1);
        }
        return Weights(std::move(q));
    }

    std::size_t size() const noexcept { return q_.size(); }
    /// n for WP^n.
    std::size_t dimension() const noexcept { return q_.size() - 1; }
    Weight operator[](std::size_t i) const { return q_.at(i); }
    const std::vector<Weight>& values() const noexcept { return q_; }

    Weight lcm() const noexcept { return m_; }
    Weight gcd() const { return detail::gcd_of(q_); }

    /// Product of all weights, returned wide since it can exceed 64 bits.
    unsigned __int128 product() const {
        unsigned __int128 p = 1;
        for (Weight qi : q_) p *= qi;
        return p;
    }

    bool is_reduced() const { return gcd() == 1; }

    /// Every n-subset has gcd 1.
    bool is_well_formed() const {
        if (q_.size() == 1) return q_[0] == 1;
        for (std::size_t i = 0; i < q_.size(); ++i)
            if (detail::gcd_of(q_, i) != 1) return false;
        return true;
    }

    bool all_ones() const {
        return std::all_of(q_.begin(), q_.end(), [](Weight qi) { return qi == 1; });
    }

    /// Canonical representative under permutation of coordinates.
    Weights sorted() const {
        auto v = q_;
        std::sort(v.begin(), v.end());
        return Weights(std::move(v));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < q_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(q_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Weights& a, const Weights& b) { return a.q_ == b.q_; }

private:
    std::vector<Weight> q_;
    Weight m_ = 1;
};

/// An isomorphism WP_source -> WP_target of the form y_i = x_i^{e_i}.
struct WeightMap {
    Weights source;
    Weights target;
    std::vector<Weight> exponents;

    bool is_identity() const {
        return source == target && std::all_of(exponents.begin(), exponents.end(), [](Weight e) { return e == 1; });
    }
};

/// Divides out d = gcd(q); coordinates map to x_i^d.
inline WeightMap reduce(const Weights& w) {
    const Weight d = w.gcd();
    std::vector<Weight> q;
    for (Weight qi : w.values()) q.push_back(qi / d);
    return WeightMap{w, Weights(std::move(q)), std::vector<Weight>(w.size(), d)};
}

/// One-pass well-forming of a reduced tuple: with d_i the gcd of all weights
/// but q_i and a_i the lcm of all d_j but d_i, target q_i / a_i via x_i^{d_i}.
inline WeightMap well_form(const Weights& w) {
    if (!w.is_reduced()) throw Error(Errc::NotReduced, "well_form needs reduced weights, got " + w.to_string());
    const auto& q = w.values();
    if (q.size() == 1) return WeightMap{w, w, {1}};
    std::vector<Weight> d(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) d[i] = detail::gcd_of(q, i);
    std::vector<Weight> target(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) target[i] = q[i] / detail::lcm_of(d, i);
    return WeightMap{w, Weights(std::move(target)), std::move(d)};
}

/// reduce followed by well_form, composed into a single map.
inline WeightMap reduce_and_well_form(const Weights& w) {
    WeightMap r = reduce(w);
    WeightMap f = well_form(r.target);
    std::vector<Weight> e(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = r.exponents[i] * f.exponents[i];
    return WeightMap{w, f.target, std::move(e)};
}

struct VeroneseData {
    Weight m;
    std::vector<Weight> exponents; // m / q_i
    bool is_embedding;             // gcd of the exponents is 1
};

inline VeroneseData veronese_data(const Weights& w) {
    VeroneseData v{w.lcm(), {}, false};
    for (Weight qi : w.values()) v.exponents.push_back(v.m / qi);
    v.is_embedding = detail::gcd_of(v.exponents) == 1;
    return v;
}

} // namespace wph
