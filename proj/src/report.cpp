#include "tsg/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tsg/adic.hpp"
#include "tsg/character.hpp"
#include "tsg/density.hpp"
#include "tsg/generator.hpp"
#include "tsg/polar.hpp"
#include "tsg/torus.hpp"
#include "tsg/tseq.hpp"

namespace tsg {

namespace {

using nlohmann::json;

struct Checks {
    json list = json::array();
    bool all = true;

    void add(const std::string& name, bool pass) {
        list.push_back({{"check", name}, {"pass", pass}});
        all = all && pass;
    }
};

double get_num(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument("missing numeric parameter \"" + key + "\"");
    return j[key].get<double>();
}

double get_num_or(const json& j, const std::string& key, double dflt) {
    return j.contains(key) ? get_num(j, key) : dflt;
}

std::vector<double> get_vec(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument("missing array parameter \"" + key + "\"");
    std::vector<double> v;
    for (auto& e : j[key]) v.push_back(e.get<double>());
    return v;
}

std::string csv_rows(const json& results) {
    std::ostringstream os;
    os.precision(17);
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto& [k, v] : node.items())
                    walk(v, prefix.empty() ? k : prefix + "." + k);
            } else if (node.is_array()) {
                for (std::size_t i = 0; i < node.size(); ++i)
                    walk(node[i], prefix + "[" + std::to_string(i) + "]");
            } else {
                os << prefix << "," << (node.is_string()
                                            ? node.get<std::string>()
                                            : node.dump())
                   << "\n";
            }
        };
    walk(results, "");
    return os.str();
}

// ---- metric ---------------------------------------------------------------

void cmd_metric(const json& params, std::uint64_t, json& results, Checks& checks) {
    PExponent p(get_num(params, "p"));
    RealSeq x(get_vec(params, "x"), p), y(get_vec(params, "y"), p);

    double dstar = quotient_dist(x, y);
    TorusSeq ix = quotient_iso(x), iy = quotient_iso(y);
    double d = dist_p(ix, iy, p);
    double rho = rho_p(ix, iy, p);

    results["quotient_dist"] = dstar;
    results["dist_p"] = d;
    results["rho_p"] = rho;
    results["sandwich_lower"] = M_PI * dstar;
    results["sandwich_upper"] = 2.0 * M_PI * dstar;

    double tol = 1e-12 * std::max(1.0, d);
    checks.add("pi*quotient <= dist_p", d >= M_PI * dstar - tol);
    checks.add("dist_p <= 2pi*quotient", d <= 2.0 * M_PI * dstar + tol);
    checks.add("rho_p matches quotient metric", std::abs(rho - dstar) <= tol);
    checks.add("symmetry", dist_p(iy, ix, p) == d);
    checks.add("identity at zero distance", dist_p(ix, ix, p) == 0.0);
}

// ---- kakutani -------------------------------------------------------------

TorusSeq parse_shift(const json& spec) {
    if (spec.is_array()) {
        std::vector<double> v;
        for (auto& e : spec) v.push_back(e.get<double>());
        return TorusSeq::from_turns(v);
    }
    if (!spec.is_object() || !spec.contains("kind"))
        throw std::invalid_argument("shift: expected array or {kind, ...}");
    std::string kind = spec["kind"].get<std::string>();
    std::size_t count = static_cast<std::size_t>(get_num(spec, "count"));
    std::vector<double> v(count);
    if (kind == "constant") {
        double val = get_num(spec, "value");
        std::fill(v.begin(), v.end(), val);
    } else if (kind == "harmonic") {
        double offset = get_num(spec, "offset");
        for (std::size_t n = 1; n <= count; ++n)
            v[n - 1] = 1.0 / (static_cast<double>(n) + offset);
    } else {
        throw std::invalid_argument("shift: unknown kind \"" + kind + "\"");
    }
    return TorusSeq::from_turns(v);
}

void cmd_kakutani(const json& params, std::uint64_t, json& results, Checks& checks) {
    std::string fam_name = params.value("family", "exponential");
    std::size_t n_max = static_cast<std::size_t>(get_num(params, "n_max"));
    TorusSeq shift = parse_shift(params.at("shift"));

    DensityFamily fam;
    if (fam_name == "linear_shift") {
        fam = DensityFamily::linear_shift();
    } else if (fam_name == "exponential") {
        if (!params.contains("c"))
            throw std::invalid_argument("kakutani: exponential family needs \"c\"");
        const json& c = params["c"];
        if (c.is_number())
            fam = DensityFamily::exponential_const(c.get<double>(), n_max);
        else if (c.is_array()) {
            std::vector<double> cs;
            for (auto& e : c) cs.push_back(e.get<double>());
            fam = DensityFamily::exponential(std::move(cs));
        } else
            throw std::invalid_argument("kakutani: \"c\" must be number or array");
    } else {
        throw std::invalid_argument("kakutani: unknown family \"" + fam_name + "\"");
    }

    double p_eq = get_num_or(params, "p_eq", 1e-3);
    double p_sing = get_num_or(params, "p_sing", 1e-12);
    double quad_tol = get_num_or(params, "quad_tol", 1e-10);
    HellingerTrace trace = kakutani_classify(fam, shift, n_max, p_eq, p_sing, quad_tol);

    std::size_t stride =
        static_cast<std::size_t>(get_num_or(params, "trace_stride", 1.0));
    json jtrace = json::array();
    for (std::size_t i = 0; i < trace.partial_products.size(); ++i)
        if (stride <= 1 || i % stride == 0 || i + 1 == trace.partial_products.size())
            jtrace.push_back({{"N", i + 1}, {"product", trace.partial_products[i]}});

    results["verdict"] = to_string(trace.verdict);
    results["final_product"] = trace.final_product();
    results["n_max"] = n_max;
    results["trace"] = std::move(jtrace);

    bool monotone = true, in_range = true;
    double prev = 1.0;
    for (double v : trace.partial_products) {
        monotone = monotone && v <= prev;
        in_range = in_range && v > 0.0 && v <= 1.0;
        prev = v;
    }
    checks.add("partial products nonincreasing", monotone);
    checks.add("partial products in (0,1]", in_range);
}

// ---- polar ----------------------------------------------------------------

void cmd_polar(const json& params, std::uint64_t seed, json& results, Checks& checks) {
    Character chi = Character::from_json(params.at("chi"));
    double eps = get_num(params, "epsilon");
    PExponent p(get_num(params, "p"));

    PolarVerdict verdict = polar_member_closed(chi, eps, p);
    results["verdict"] = to_string(verdict);

    if (p.p == 1.0) {
        results["norm_b"] = chi.norm_b();
        results["member_bound"] = 1.0 / (4.0 * eps);
        results["nonmember_bound"] = 1.0 / (2.0 * eps);
        double nb = static_cast<double>(chi.norm_b());
        checks.add("sandwich verdict consistent",
                   (verdict == PolarVerdict::Member) ==
                       (nb <= (1.0 / (4.0 * eps)) * (1.0 + 1e-12)));
        return;
    }

    double q = p.conjugate();
    results["q"] = q;
    results["norm_q"] = chi.norm_q(q);
    double closed = eps * chi.norm_q(q);
    results["closed_value"] = closed;

    if (chi.is_zero()) {
        checks.add("zero character is member", verdict == PolarVerdict::Member);
        return;
    }

    PolarSup sup = polar_sup(chi, eps, p);
    results["sup_value"] = sup.value;
    results["extremal"] = {{"indices", sup.indices}, {"phi", sup.extremal_phi}};

    checks.add("sup oracle matches closed form",
               std::abs(sup.value - closed) <= 1e-12 * std::max(1.0, closed));
    checks.add("membership iff sup <= 1/4",
               (verdict == PolarVerdict::Member) ==
                   (sup.value <= 0.25 * (1.0 + 1e-12)));
    double sphere = 0.0;
    for (double f : sup.extremal_phi) sphere += std::pow(std::abs(f), p.p);
    checks.add("extremal point on the eps sphere",
               std::abs(std::pow(sphere, 1.0 / p.p) - eps) <= 1e-12);

    if (verdict == PolarVerdict::Member) {
        std::size_t samples =
            static_cast<std::size_t>(get_num_or(params, "samples", 1000.0));
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-eps, eps);
        std::size_t window = chi.max_index();
        bool sound = true;
        for (std::size_t i = 0; i < samples && sound; ++i) {
            std::vector<double> phis(window);
            double norm;
            do {
                norm = 0.0;
                for (auto& f : phis) {
                    f = u(rng);
                    norm += std::pow(std::abs(f), p.p);
                }
            } while (std::pow(norm, 1.0 / p.p) >= eps);
            double phase = pair(chi, TorusSeq::from_turns(phis)).value;
            sound = std::abs(phase) <= 0.25 + 1e-9;
        }
        checks.add("sampled ball points keep |phase| <= 1/4", sound);
    }
}

// ---- hull -----------------------------------------------------------------

void cmd_hull(const json& params, std::uint64_t, json& results, Checks& checks) {
    PExponent p(get_num(params, "p"));
    double eps = get_num(params, "epsilon");
    double R = get_num(params, "R");

    HullResult hull = hull_witness(p, eps, R);
    if (std::holds_alternative<HullWitness>(hull)) {
        const HullWitness& w = std::get<HullWitness>(hull);
        results = w.to_json();
        checks.add("distance reaches R", w.dist >= R);
        checks.add("bipolar certified <= 1/4", w.bipolar <= 0.25);
        bool minimal = w.N == 0 ||
                       chord(w.delta) * std::pow(static_cast<double>(w.N - 1),
                                                 1.0 / p.p) < R;
        checks.add("witness length minimal", minimal);
    } else {
        const HullCertificate& c = std::get<HullCertificate>(hull);
        results = c.to_json();
        Character probe;
        probe.set(1, c.n_star);
        double at_bound =
            std::abs(pair(probe, TorusSeq::from_turns({c.coordinate_bound})).value);
        double above =
            std::abs(pair(probe, TorusSeq::from_turns({c.coordinate_bound * 1.01}))
                         .value);
        checks.add("bound coordinate passes the probe character",
                   at_bound <= 0.25 + 1e-12);
        checks.add("exceeding the bound fails the probe character", above > 0.25);
    }
}

// ---- monothetic -----------------------------------------------------------

void cmd_monothetic(const json& params, std::uint64_t, json& results, Checks& checks) {
    std::size_t n_max = static_cast<std::size_t>(get_num(params, "n_max"));
    std::uint64_t covering_cap =
        static_cast<std::uint64_t>(get_num_or(params, "covering_cap", 1e7));
    GeneratorSpec spec = build_generator(n_max, covering_cap);
    results["generator"] = spec.to_json();

    bool decreasing = true;
    double prev = 0.5;
    for (auto& a : spec.alphas) {
        decreasing = decreasing && a.value > 0.0 && a.value < prev;
        prev = a.value;
    }
    checks.add("coordinates decreasing in (0, 1/2)", decreasing);
    bool certified = true;
    for (std::size_t n = 2; n <= spec.size(); ++n)
        certified = certified &&
                    spec.alphas[n - 1].value <
                        1.0 / (std::ldexp(1.0, static_cast<int>(n)) *
                               static_cast<double>(spec.k_bounds[n - 2]));
    checks.add("covering-bound conditions certified", certified);

    if (params.contains("omega")) {
        TorusSeq omega = TorusSeq::from_turns(get_vec(params, "omega"));
        double eps = get_num(params, "epsilon");
        PExponent p(get_num(params, "p"));
        std::uint64_t cap = static_cast<std::uint64_t>(get_num_or(params, "cap", 1e7));
        PowerApprox ap = approx_power(omega, eps, spec, p, cap);
        results["approx"] = {{"k", ap.k},
                             {"level", ap.level},
                             {"residuals", ap.residuals},
                             {"dist", ap.dist},
                             {"level_deficit", ap.level_deficit}};
        checks.add("power within eps (direct metric)", ap.dist < eps);
        double tol = std::ldexp(1.0, -static_cast<int>(ap.level));
        bool res_ok = true;
        for (double r : ap.residuals) res_ok = res_ok && r < tol;
        checks.add("residuals below 1/2^level", res_ok);
    }
}

// ---- adic -----------------------------------------------------------------

GammaSeq parse_base(const json& params) {
    const json& b = params.at("base");
    if (b.is_object() && b.contains("squares"))
        return GammaSeq::squares(static_cast<std::size_t>(b["squares"].get<double>()));
    if (!b.is_array())
        throw std::invalid_argument("adic: \"base\" must be array or {squares: n}");
    std::vector<BigInt> base;
    for (auto& e : b)
        base.push_back(e.is_string() ? BigInt(e.get<std::string>())
                                     : BigInt(e.get<std::int64_t>()));
    return GammaSeq(std::move(base));
}

BigRat params_rat(const json& params, const std::string& key) {
    const json& v = params.at(key);
    if (v.is_string()) return rat_parse(v.get<std::string>());
    if (v.is_number_integer()) return BigRat(v.get<std::int64_t>());
    throw std::invalid_argument("adic: \"" + key + "\" must be \"p/q\" or integer");
}

void cmd_adic(const json& params, std::uint64_t, json& results, Checks& checks) {
    GammaSeq base = parse_base(params);
    std::string action = params.value("action", "digits");
    results["base"] = base.to_json();
    results["action"] = action;

    if (action == "digits") {
        BigRat x = params_rat(params, "x");
        std::size_t depth = static_cast<std::size_t>(
            get_num_or(params, "depth", static_cast<double>(base.length())));
        DigitExpansion e = digits_of(x, base, depth);
        results["digits"] = e.digits.to_json();
        results["exact"] = e.exact();
        results["remainder"] = BigRat(e.remainder).str();
        checks.add("value + remainder reproduces x exactly",
                   from_digits(e.digits, base) + e.remainder == x);
        bool in_range = true;
        for (std::size_t k = 1; k <= e.digits.digits.size(); ++k)
            in_range = in_range && e.digits.digits[k - 1] >= 0 &&
                       e.digits.digits[k - 1] < base.a(k);
        checks.add("digits within base ranges", in_range);
    } else if (action == "q_approx") {
        BigRat x = params_rat(params, "x");
        double eps = get_num(params, "epsilon");
        DigitExpansion e = digits_of(x, base, base.length());
        if (!e.exact())
            throw std::invalid_argument("adic q_approx: x not representable at "
                                        "the base's depth");
        AdicDigits trunc = q_approx(e.digits, base, eps);
        BigRat tv = from_digits(trunc, base);
        BigRat r0 = r0_dist(x, tv, base, base.length() + 1);
        results["N"] = trunc.digits.size() + 1;
        results["truncation"] = trunc.to_json();
        results["truncation_value"] = tv.str();
        results["r0"] = r0.str();
        results["r0_double"] = r0.convert_to<double>();
        checks.add("exact r0 below eps", r0 < BigRat(eps));
    } else if (action == "pair") {
        BigInt n = params.at("n").is_string()
                       ? BigInt(params["n"].get<std::string>())
                       : BigInt(params["n"].get<std::int64_t>());
        BigRat x = params_rat(params, "x");
        DigitChar chi = int_to_digitchar(n, base);
        BigRat direct = pair_gp_exact(n, x, base);
        BigRat via_digits = digitchar_pair_exact(chi, x, base);
        results["digitchar"] = chi.to_json();
        results["phase"] = direct.str();
        results["phase_double"] = direct.convert_to<double>();
        checks.add("digit-form pairing equals integer pairing exactly",
                   direct == via_digits);
        checks.add("digit representation round-trips",
                   digitchar_to_int(chi, base) == n);
    } else if (action == "annihilator") {
        SparseGammaChar chi = SparseGammaChar::from_json(params.at("chi"));
        BigInt reduced = quotient_reduce(chi, base);
        bool ann = annihilator_test(chi, base);
        results["annihilator"] = ann;
        results["reduced"] = reduced.str();
        checks.add("annihilator iff reduced sum vanishes", ann == (reduced == 0));
        if (ann) {
            bool trivial = true;
            for (std::size_t m = 1; m <= base.length() + 1 && trivial; ++m)
                trivial = rat_dist_to_int(BigRat(reduced, base.gamma(m))) == 0;
            checks.add("annihilator pairs trivially with rational samples", trivial);
        }
    } else if (action == "norm") {
        BigRat x = params_rat(params, "x");
        PExponent p(get_num(params, "p"));
        std::size_t N = static_cast<std::size_t>(get_num(params, "N"));
        double v = norm_gp(x, base, p, N);
        results["norm"] = v;
        checks.add("norm nonnegative", v >= 0.0);
        checks.add("zero only at zero", (v == 0.0) == (x == 0));
    } else if (action == "embed") {
        BigRat x = params_rat(params, "x");
        std::size_t N = static_cast<std::size_t>(get_num(params, "N"));
        TorusSeq t = embed_Sp(x, base, N);
        json angles = json::array();
        for (auto& a : t.coords) angles.push_back(a.value);
        results["angles"] = angles;
        auto lhs = embed_Sp_exact(rat_frac(x + x), base, N);
        auto ex = embed_Sp_exact(x, base, N);
        bool homo = true;
        for (std::size_t k = 0; k < N; ++k)
            homo = homo && rat_dist_to_int(lhs[k] - (ex[k] + ex[k])) == 0;
        checks.add("embedding is a homomorphism at 2x", homo);
    } else if (action == "r0") {
        BigRat x = params_rat(params, "x");
        BigRat y = params_rat(params, "y");
        std::size_t N = static_cast<std::size_t>(
            get_num_or(params, "N", static_cast<double>(base.length() + 1)));
        BigRat d = r0_dist(x, y, base, N);
        results["r0"] = d.str();
        results["r0_double"] = d.convert_to<double>();
        checks.add("symmetric", r0_dist(y, x, base, N) == d);
        checks.add("zero iff equal at depth",
                   (d == 0) == (r0_dist(x, y, base, N) == 0));
    } else {
        throw std::invalid_argument("adic: unknown action \"" + action + "\"");
    }
}

} // namespace

std::string Report::rendered(const std::string& format) const {
    if (format == "csv") return csv;
    if (format == "json") return doc.dump(2) + "\n";
    throw std::invalid_argument("Report: unknown format \"" + format + "\"");
}

Report run_command(const RunConfig& cfg) {
    std::string cmd = cfg.command;
    if (cmd.rfind("cmd_", 0) == 0) cmd = cmd.substr(4);

    Report rep;
    json results = json::object();
    Checks checks;

    if (cmd == "metric")
        cmd_metric(cfg.params, cfg.seed, results, checks);
    else if (cmd == "kakutani")
        cmd_kakutani(cfg.params, cfg.seed, results, checks);
    else if (cmd == "polar")
        cmd_polar(cfg.params, cfg.seed, results, checks);
    else if (cmd == "hull")
        cmd_hull(cfg.params, cfg.seed, results, checks);
    else if (cmd == "monothetic")
        cmd_monothetic(cfg.params, cfg.seed, results, checks);
    else if (cmd == "adic")
        cmd_adic(cfg.params, cfg.seed, results, checks);
    else
        throw std::invalid_argument("unknown command \"" + cfg.command + "\"");

    rep.doc = {{"command", cmd},
               {"inputs", cfg.params},
               {"seed", cfg.seed},
               {"results", results},
               {"verification", checks.list}};
    rep.verified = checks.all;

    if (cmd == "kakutani" && results.contains("trace")) {
        std::ostringstream os;
        os << "# N,product\n";
        os.precision(17);
        for (auto& row : results["trace"])
            os << row["N"].get<std::size_t>() << ","
               << row["product"].get<double>() << "\n";
        rep.csv = os.str();
    } else {
        rep.csv = csv_rows(results);
    }
    return rep;
}

} // namespace tsg
