#pragma once
// The `wph` command-line front end. run() parses arguments, dispatches to a
// subcommand and writes JSON (or CSV) to `out`; diagnostics go to `err`.
// Exit codes: 0 success, 2 parse errors, 3 domain errors.

#include "audit.hpp"
#include "height.hpp"
#include "local_height.hpp"
#include "scan.hpp"
#include "singular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace wph::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// A real rounded to 12 significant digits; infinities become strings.
inline Json real(double v) {
    if (!std::isfinite(v)) return format_real(v);
    return std::stod(format_real(v));
}

inline Json formal(const LogSum& s) {
    Json a = Json::array();
    for (const auto& [p, c] : s.terms()) a.push_back(Json::array({p.get_str(), c.get_str()}));
    return a;
}

inline Json log_json(const LogSum& s) { return Json{{"value", real(s.value())}, {"formal", formal(s)}}; }

inline std::string factor_string(const Factorization& f) {
    if (f.sign == 0) return "0";
    std::string s = f.sign < 0 ? "-" : "";
    if (f.factors.empty()) return s + "1";
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) s += '*';
        s += f.factors[i].first.get_str();
        if (f.factors[i].second > 1) s += '^' + std::to_string(f.factors[i].second);
    }
    return s;
}

inline std::vector<Weight> weight_list(const Weights& w) { return w.values(); }

inline Place parse_place(const std::string& s) {
    if (s == "inf" || s == "infinity") return Place::archimedean();
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::ParseError, "bad place '" + s + "'");
    if (s.empty()) throw Error(Errc::ParseError, "empty place");
    return Place::finite(Integer(s));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Integer parse_integer(const std::string& s) {
    Rational r = parse_rational(s);
    if (r.get_den() != 1) throw Error(Errc::ParseError, "expected an integer, got '" + s + "'");
    return Integer(r.get_num());
}

inline std::vector<Integer> parse_prime_list(const std::string& s) {
    std::vector<Integer> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) {
        Integer p = parse_integer(tok);
        if (!is_prime(p)) throw Error(Errc::NotPrime, p.get_str() + " is not prime");
        out.push_back(p);
    }
    return out;
}

/// "box:B", "box:b0,...,bn" or "sunit:p1,p2,...:MAX".
inline ScanDomain parse_domain(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "domain must be box:... or sunit:...");
    const std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    if (kind == "box") {
        BoxDomain b;
        for (const auto& tok : split(rest, ',')) b.bounds.push_back(parse_integer(tok));
        return b;
    }
    if (kind == "sunit") {
        auto c2 = rest.rfind(':');
        if (c2 == std::string::npos) throw Error(Errc::ParseError, "sunit domain needs primes:max");
        return SUnitDomain{parse_prime_list(rest.substr(0, c2)), parse_integer(rest.substr(c2 + 1))};
    }
    throw Error(Errc::ParseError, "unknown domain kind '" + kind + "'");
}

inline std::vector<WPolynomial> parse_generators(const std::string& s, const Weights& w) {
    std::vector<WPolynomial> gens;
    for (const auto& tok : split(s, ';'))
        if (!tok.empty()) gens.push_back(WPolynomial::parse(tok, w));
    if (gens.empty()) throw Error(Errc::ParseError, "no generators given");
    return gens;
}

inline std::optional<std::vector<Weight>> parse_gcd_weights(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return Weights::parse(s).values();
}

inline bool parse_on_off(const std::string& s) {
    if (s == "on") return true;
    if (s == "off") return false;
    throw Error(Errc::ParseError, "expected on|off, got '" + s + "'");
}

struct Options {
    std::string point, weights, metric = "paper", gcd_weights, epsilon = "1", delta = "0", s_primes, domain,
                                     format, archimedean = "on", generators, divisor, hyperplane, place, preset;
    long codim = -1;
    long bound = 0;
    long degree = -1;
    unsigned threads = 0;
};

namespace detail {

inline Json cmd_height(const Options& o) {
    WPoint x = WPoint::parse(o.point, Weights::parse(o.weights));
    HeightValue hv = wheight(x);
    Json per = Json::array();
    for (const auto& pf : hv.per_place) per.push_back({{"place", pf.place.to_string()}, {"factor", pf.factor.get_str()}});
    return Json{{"point", x.to_string()},  {"weights", x.weights().to_string()},
                {"m", hv.m},               {"wh_pow_m", hv.wh_pow_m.get_str()},
                {"lwh", real(hv.lwh)},     {"lwh_formal", formal(hv.formal())},
                {"per_place", per},        {"normalized", normalize(x).to_string()}};
}

inline Json cmd_wgcd(const Options& o) {
    Weights w = Weights::parse(o.weights);
    std::vector<Integer> xs;
    for (const auto& tok : split_tuple(o.point)) xs.push_back(parse_integer(tok));
    Json ex = Json::array();
    for (const auto& [p, e] : wgcd_exponents(xs, w)) ex.push_back(Json::array({p.get_str(), e}));
    return Json{{"weights", w.to_string()}, {"wgcd", wgcd(xs, w).get_str()}, {"exponents", ex},
                {"log_wgcd", log_json(log_wgcd(xs, w))}};
}

inline Json cmd_hwgcd(const Options& o) {
    Weights w = Weights::parse(o.weights);
    auto xs = parse_rational_tuple(o.point);
    const bool arch = parse_on_off(o.archimedean);
    Json j{{"weights", w.to_string()},
           {"hwgcd", hwgcd(xs, w).get_str()},
           {"archimedean", arch},
           {"log_hwgcd", log_json(log_hwgcd(xs, w, arch))}};
    if (arch) j["archimedean_term"] = log_json(archimedean_gcd_term(xs, w));
    if (!o.place.empty()) {
        Place v = parse_place(o.place);
        j["place"] = v.to_string();
        j["t_nu"] = real(t_nu(xs, w, v));
    }
    return j;
}

inline Json cmd_normalize(const Options& o) {
    WPoint x = WPoint::parse(o.point, Weights::parse(o.weights));
    Normalization n = normalization(x);
    return Json{{"point", n.point.to_string()}, {"wgcd", n.wgcd.get_str()}, {"lambda", n.lambda.get_str()}};
}

inline Json cmd_veronese(const Options& o) {
    Weights w = Weights::parse(o.weights);
    WeightMap map = reduce(w);
    WeightMap full = reduce_and_well_form(w);
    const Weights& target = full.target;
    const std::vector<Weight>& e = full.exponents;
    VeroneseData vd = veronese_data(target);
    Json j{{"weights", w.to_string()},
           {"reduced_weights", map.target.to_string()},
           {"well_formed_weights", target.to_string()},
           {"m", vd.m},
           {"exponents", vd.exponents},
           {"is_embedding", vd.is_embedding}};

    auto tokens = split_tuple(o.point);
    if (tokens.size() != w.size())
        throw Error(Errc::ArityMismatch, "point has " + std::to_string(tokens.size()) + " entries, weights have " +
                                             std::to_string(w.size()));
    bool symbolic = false;
    for (const auto& t : tokens)
        if (!t.empty() && (std::isalpha(static_cast<unsigned char>(t.front())) || t.front() == '_')) symbolic = true;
    if (symbolic) {
        std::string coord = "[", image = "[";
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            for (char c : tokens[i])
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw Error(Errc::ParseError, "bad symbol '" + tokens[i] + "'");
            if (i) {
                coord += ':';
                image += ':';
            }
            coord += e[i] == 1 ? tokens[i] : tokens[i] + "^" + std::to_string(e[i]);
            image += vd.exponents[i] == 1 ? tokens[i] : tokens[i] + "^" + std::to_string(vd.exponents[i]);
        }
        j["coordinate_map"] = coord + "]";
        j["image"] = image + "]";
        return j;
    }
    WPoint x = WPoint::parse(o.point, w);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < x.size(); ++i) c.push_back(ipow(x[i], static_cast<unsigned long>(e[i])));
    WPoint y(std::move(c), target);
    ProjectivePoint img = veronese(y);
    j["point"] = x.to_string();
    j["mapped_point"] = y.to_string();
    j["image"] = img.to_string();
    j["weil_height"] = weil_height(img).H.get_str();
    j["wh_pow_m"] = wheight(y).wh_pow_m.get_str();
    return j;
}

inline Json cmd_singular(const Options& o) {
    Weights w = Weights::parse(o.weights);
    Json comps = Json::array();
    for (const auto& c : singular_components(w))
        comps.push_back({{"prime", c.prime}, {"indices", c.indices}, {"dimension", c.dimension}});
    Json j{{"weights", w.to_string()}, {"m", w.lcm()}, {"well_formed", w.is_well_formed()}, {"components", comps}};
    if (o.degree >= 0) j["hypersurface_well_formed"] = hypersurface_well_formed(w, static_cast<Weight>(o.degree));
    if (!o.point.empty()) {
        WPoint x = WPoint::parse(o.point, w);
        j["point"] = x.to_string();
        j["is_singular"] = is_singular(x);
        Json mem = Json::object();
        for (Weight p : primes_dividing(w.lcm())) mem[std::to_string(p)] = component_membership(x, p);
        j["membership"] = mem;
    }
    return j;
}

inline std::optional<DivisorSpec> divisor_from(const Options& o, const Weights& w, std::ostream& err) {
    int given = !o.divisor.empty() + !o.hyperplane.empty() + !o.generators.empty();
    if (given > 1) throw Error(Errc::ParseError, "give only one of --divisor, --hyperplane, --generators");
    if (!o.divisor.empty()) return DivisorSpec::principal(WPolynomial::parse(o.divisor, w));
    if (!o.hyperplane.empty()) return DivisorSpec::hyperplane(WPolynomial::parse(o.hyperplane, w));
    if (!o.generators.empty()) {
        Subscheme y(parse_generators(o.generators, w), parse_gcd_weights(o.gcd_weights));
        if (!y.all_homogeneous()) err << "warning: non-homogeneous generators\n";
        return DivisorSpec::subscheme(std::move(y));
    }
    return std::nullopt;
}

inline Json local_json(const LocalHeight& h) {
    return Json{{"place", h.place.to_string()}, {"value", real(h.value)}, {"formal", formal(h.formal)}};
}

inline Json cmd_zeta(const Options& o, std::ostream& err) {
    Weights w = Weights::parse(o.weights);
    WPoint x = WPoint::parse(o.point, w);
    MetricMode mode = parse_metric_mode(o.metric);
    auto spec = divisor_from(o, w, err);
    if (!spec) throw Error(Errc::ParseError, "zeta needs --divisor, --hyperplane or --generators");
    Json j{{"point", x.to_string()}, {"weights", w.to_string()}, {"metric", std::string(to_string(mode))}};
    auto local = [&](const Place& v) {
        return spec->kind == DivisorSpec::Kind::SubschemeMin
                   ? zeta_subscheme(x, std::get<Subscheme>(spec->payload), v, mode, true)
                   : zeta_principal(x, std::get<WPolynomial>(spec->payload), v, mode, true);
    };
    if (!o.place.empty()) {
        LocalHeight h = local(parse_place(o.place));
        j["place"] = h.place.to_string();
        j["zeta"] = real(h.value);
        j["formal"] = formal(h.formal);
        return j;
    }
    GlobalSum g = global_sum(x, *spec, mode, true);
    Json per = Json::array();
    for (const auto& h : g.per_place) per.push_back(local_json(h));
    j["per_place"] = per;
    j["sum"] = log_json(g.formal);
    return j;
}

inline Json cmd_global_height(const Options& o, std::ostream& err) {
    Weights w = Weights::parse(o.weights);
    WPoint x = WPoint::parse(o.point, w);
    MetricMode mode = parse_metric_mode(o.metric);
    HeightValue hv = wheight(x);
    LogSum paper = metric_height(x, MetricMode::Paper), alt = metric_height(x, MetricMode::Alt);
    Json j{{"point", x.to_string()},
           {"weights", w.to_string()},
           {"metric", std::string(to_string(mode))},
           {"lwh", log_json(hv.formal())},
           {"metric_height", {{"paper", log_json(paper)}, {"alt", log_json(alt)}}},
           {"discrepancy", log_json(paper - alt)}};
    if (auto spec = divisor_from(o, w, err)) {
        GlobalSum g = global_sum(x, *spec, mode, true);
        Json per = Json::array();
        for (const auto& h : g.per_place) per.push_back(local_json(h));
        j["divisor_sum"] = log_json(g.formal);
        j["per_place"] = per;
        j["matches_metric_height"] = g.formal == metric_height(x, mode);
    }
    return j;
}

inline Json scan_config_json(const ScanConfig& c) {
    Json gens = Json::array();
    for (const auto& f : c.generators.generators()) gens.push_back(f.to_string());
    Json primes = Json::array();
    for (const auto& p : c.s_primes) primes.push_back(p.get_str());
    Json dom;
    if (const auto* b = std::get_if<BoxDomain>(&c.domain)) {
        Json bounds = Json::array();
        for (const auto& v : b->bounds) bounds.push_back(v.get_str());
        dom = {{"kind", "box"}, {"bounds", bounds}};
    } else {
        const auto& s = std::get<SUnitDomain>(c.domain);
        Json ps = Json::array();
        for (const auto& v : s.primes) ps.push_back(v.get_str());
        dom = {{"kind", "sunit"}, {"primes", ps}, {"max", s.max_value.get_str()}};
    }
    return Json{{"weights", c.weights.to_string()},
                {"generators", gens},
                {"gcd_weights", c.generators.gcd_weights().to_string()},
                {"epsilon", c.epsilon.get_str()},
                {"delta", c.delta.get_str()},
                {"r", c.r()},
                {"s_primes", primes},
                {"domain", dom},
                {"metric", std::string(to_string(c.metric_mode))}};
}

inline Json scan_json(const ScanReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"point", format_point(row.point)},
                        {"lhs", row.lhs.get_str()},
                        {"rhs", real(row.rhs)},
                        {"ratio", real(row.ratio)},
                        {"exceptional", row.exceptional}});
    const auto& s = r.summary;
    return Json{{"config", scan_config_json(r.config)},
                {"summary",
                 {{"enumerated", s.enumerated},
                  {"not_normalized", s.not_normalized},
                  {"on_subscheme", s.on_subscheme},
                  {"rows", s.rows},
                  {"exceptional", s.exceptional},
                  {"max_ratio", real(s.max_ratio)},
                  {"max_ratio_point", format_point(s.max_ratio_point)}}},
                {"rows", rows}};
}

inline ScanConfig scan_config_from(const Options& o, std::ostream& err) {
    if (!o.preset.empty()) {
        if (o.preset != "sunit-pairs") throw Error(Errc::ParseError, "unknown preset '" + o.preset + "'");
        Weights w = o.weights.empty() ? Weights{1, 2, 3} : Weights::parse(o.weights);
        if (w.size() != 3 || w[0] != 1) throw Error(Errc::InvalidConfig, "the sunit-pairs preset needs weights (1,q1,q2)");
        Integer max = 1000000;
        if (!o.domain.empty()) {
            auto d = parse_domain(o.domain);
            if (const auto* s = std::get_if<SUnitDomain>(&d)) max = s->max_value;
            else throw Error(Errc::InvalidConfig, "the sunit-pairs preset needs an sunit domain");
        }
        ScanConfig c = sunit_pair_preset(w[1], w[2], max, parse_rational(o.epsilon));
        c.delta = parse_rational(o.delta);
        if (o.codim >= 0) c.codim = static_cast<unsigned long>(o.codim);
        c.metric_mode = parse_metric_mode(o.metric);
        c.threads = o.threads;
        return c;
    }
    if (o.weights.empty() || o.generators.empty() || o.domain.empty())
        throw Error(Errc::ParseError, "vojta-scan needs --weights, --generators and --domain (or --preset)");
    Weights w = Weights::parse(o.weights);
    Subscheme y(parse_generators(o.generators, w), parse_gcd_weights(o.gcd_weights));
    if (!y.all_homogeneous()) err << "warning: non-homogeneous generators; using gcd weights " << y.gcd_weights().to_string() << "\n";
    ScanConfig c{w, std::move(y), parse_rational(o.epsilon), parse_rational(o.delta), parse_prime_list(o.s_primes),
                 parse_domain(o.domain), std::nullopt, parse_metric_mode(o.metric), o.threads};
    if (o.codim >= 0) c.codim = static_cast<unsigned long>(o.codim);
    return c;
}

inline std::string audit_csv(const AuditReport& r) {
    std::string out = "point,log_hwgcd,singular,factors,t_values\n";
    for (const auto& e : r.counterexamples) {
        std::string f, t;
        for (std::size_t i = 0; i < e.coordinate_factors.size(); ++i) f += (i ? " " : "") + factor_string(e.coordinate_factors[i]);
        for (std::size_t i = 0; i < e.t_values.size(); ++i)
            t += (i ? " " : "") + e.t_values[i].first.get_str() + ":" + std::to_string(e.t_values[i].second);
        out += e.point.to_string() + "," + format_real(e.log_hwgcd.value()) + "," + (e.singular ? "true" : "false") + "," + f + "," + t + "\n";
    }
    return out;
}

inline Json audit_entry_json(const AuditEntry& e) {
    Json f = Json::array(), t = Json::array();
    for (const auto& c : e.coordinate_factors) f.push_back(factor_string(c));
    for (const auto& [p, v] : e.t_values) t.push_back(Json::array({p.get_str(), v}));
    return Json{{"point", e.point.to_string()},
                {"log_hwgcd", log_json(e.log_hwgcd)},
                {"singular", e.singular},
                {"coordinate_factors", f},
                {"t_values", t}};
}

inline Json audit_json(const AuditReport& r, const std::optional<WPoint>& query) {
    Json ces = Json::array();
    for (const auto& e : r.counterexamples) ces.push_back(audit_entry_json(e));
    Json j{{"weights", r.weights.to_string()},
           {"bound", r.bound},
           {"checked", r.checked},
           {"zero_log_hwgcd", r.zero_log_hwgcd},
           {"singular", r.singular},
           {"counterexample_count", r.counterexamples.size()}};
    if (query) {
        const bool in_range = is_normalized(*query) && std::all_of(query->coords().begin(), query->coords().end(),
                                                                  [&](const Rational& c) { return abs(c) <= r.bound; });
        j["status"] = {{"point", query->to_string()},
                       {"in_range", in_range},
                       {"log_hwgcd_zero", log_hwgcd(*query, true).is_zero()},
                       {"singular", is_singular(*query)},
                       {"counterexample", r.find(*query) != nullptr}};
    }
    j["counterexamples"] = ces;
    return j;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic on weighted projective spaces over Q", "wph"};
    app.require_subcommand(1);
    Options o;

    auto with_weights = [&](CLI::App* s, bool required = true) {
        auto* opt = s->add_option("--weights,-w", o.weights, "weights, e.g. \"(2,3)\"");
        if (required) opt->required();
    };
    auto with_point = [&](CLI::App* s, const char* what, bool required = true) {
        auto* opt = s->add_option("point", o.point, what);
        if (required) opt->required();
    };
    auto with_divisor = [&](CLI::App* s) {
        s->add_option("--divisor", o.divisor, "principal divisor div(f)");
        s->add_option("--hyperplane", o.hyperplane, "hyperplane section l = 0");
        s->add_option("--generators", o.generators, "subscheme generators \"f1; f2; ...\"");
        s->add_option("--gcd-weights", o.gcd_weights, "per-generator gcd weights");
        s->add_option("--metric", o.metric, "paper|alt")->check(CLI::IsMember({"paper", "alt"}));
    };

    auto* height = app.add_subcommand("height", "weighted height of a point");
    with_point(height, "point [x0:...:xn]");
    with_weights(height);
    auto* wg = app.add_subcommand("wgcd", "weighted gcd of an integer tuple");
    with_point(wg, "tuple (x0,...,xn)");
    with_weights(wg);
    auto* hw = app.add_subcommand("hwgcd", "generalized weighted gcd of a rational tuple");
    with_point(hw, "tuple (x0,...,xn)");
    with_weights(hw);
    hw->add_option("--archimedean", o.archimedean, "on|off")->check(CLI::IsMember({"on", "off"}));
    hw->add_option("--place", o.place, "report T_nu at this place (inf or a prime)");
    auto* norm = app.add_subcommand("normalize", "normalized representative");
    with_point(norm, "point");
    with_weights(norm);
    auto* ver = app.add_subcommand("veronese", "reduction, well-forming and Veronese embedding");
    with_point(ver, "point, numeric or symbolic");
    with_weights(ver);
    auto* sing = app.add_subcommand("singular", "singular locus and point membership");
    with_point(sing, "point (optional)", false);
    with_weights(sing);
    sing->add_option("--degree", o.degree, "check well-formedness of a degree-d hypersurface");
    auto* zeta = app.add_subcommand("zeta", "local heights");
    with_point(zeta, "point");
    with_weights(zeta);
    with_divisor(zeta);
    zeta->add_option("--place", o.place, "inf or a prime; default: all relevant places");
    auto* gh = app.add_subcommand("global-height", "global heights and metric comparison");
    with_point(gh, "point");
    with_weights(gh);
    with_divisor(gh);
    auto* scan = app.add_subcommand("vojta-scan", "tabulate the Vojta-conditional gcd bound");
    with_weights(scan, false);
    scan->add_option("--generators", o.generators, "generators \"f1; f2\"");
    scan->add_option("--gcd-weights", o.gcd_weights, "per-generator gcd weights");
    scan->add_option("--codim", o.codim, "override r (default: generator count)");
    scan->add_option("--epsilon", o.epsilon, "epsilon > 0 (rational)");
    scan->add_option("--delta", o.delta, "delta >= 0 (rational)");
    scan->add_option("--s-primes", o.s_primes, "comma-separated primes");
    scan->add_option("--domain", o.domain, "box:B | box:b0,...,bn | sunit:p1,...:MAX");
    scan->add_option("--metric", o.metric, "paper|alt")->check(CLI::IsMember({"paper", "alt"}));
    scan->add_option("--preset", o.preset, "sunit-pairs");
    scan->add_option("--threads", o.threads, "worker threads (0: hardware)");
    scan->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    auto* audit = app.add_subcommand("sing1-audit", "audit: log hwgcd = 0 implies singular");
    with_weights(audit);
    audit->add_option("--bound", o.bound, "coordinate bound")->required();
    audit->add_option("--point", o.point, "report the status of this point");
    audit->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return kExitParse;
    }

    try {
        if (height->parsed()) out << detail::cmd_height(o).dump() << "\n";
        else if (wg->parsed()) out << detail::cmd_wgcd(o).dump() << "\n";
        else if (hw->parsed()) out << detail::cmd_hwgcd(o).dump() << "\n";
        else if (norm->parsed()) out << detail::cmd_normalize(o).dump() << "\n";
        else if (ver->parsed()) out << detail::cmd_veronese(o).dump() << "\n";
        else if (sing->parsed()) out << detail::cmd_singular(o).dump() << "\n";
        else if (zeta->parsed()) out << detail::cmd_zeta(o, err).dump() << "\n";
        else if (gh->parsed()) out << detail::cmd_global_height(o, err).dump() << "\n";
        else if (scan->parsed()) {
            ScanReport r = vojta_scan(detail::scan_config_from(o, err));
            if (o.format == "json") out << detail::scan_json(r).dump() << "\n";
            else out << to_csv(r);
            err << "rows: " << r.summary.rows << ", exceptional: " << r.summary.exceptional
                << ", runtime_ms: " << format_real(r.runtime_ms) << "\n";
        } else if (audit->parsed()) {
            Weights w = Weights::parse(o.weights);
            AuditReport r = sing1_audit(w, o.bound);
            std::optional<WPoint> q;
            if (!o.point.empty()) q = WPoint::parse(o.point, w);
            if (o.format == "csv") out << detail::audit_csv(r);
            else out << detail::audit_json(r, q).dump() << "\n";
        }
    } catch (const Error& e) {
        err << Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return e.code() == Errc::ParseError ? kExitParse : kExitDomain;
    }
    return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

} // namespace wph::cli
