#include "tmc/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>

namespace tmc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Rational rational_value(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
    // decimals are taken at face value, as written in the file
    if (v.is_number_float()) return parse_rational(v.dump());
    bad("expected a number or a rational string, got " + v.dump());
}

Real real_value(const Json& v) {
    if (v.is_string()) return parse_real(v.get<std::string>());
    if (v.is_number()) return parse_real(v.dump());
    bad("expected a number or a numeric string, got " + v.dump());
}

void check_schema(const Json& j) {
    if (!j.is_object()) bad("document must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema) bad("unsupported schema " + j.at("schema").dump());
}

Json real_json(const Real& x) { return to_string(x); }

}  // namespace

Json curve_to_json(const CurveSpec& curve) {
    Json q = Json::array();
    for (const auto& c : curve.q) q.push_back(to_string(c));
    return {{"m", curve.m}, {"q", q}};
}

CurveSpec curve_from_json(const Json& j) {
    CurveSpec c;
    c.m = int_field(j, "m");
    const Json& q = field(j, "q");
    if (!q.is_array()) bad("curve.q must be an array");
    for (const auto& v : q) c.q.push_back(rational_value(v));
    c.validate();
    return c;
}

Json moments_to_json(const CurveSpec& curve, const MomentSequence2D& beta) {
    Json list = Json::array();
    for (int d = 0; d <= beta.degree(); ++d)
        for (int j = 0; j <= d; ++j) list.push_back({{"i", d - j}, {"j", j}, {"v", to_string(beta(d - j, j))}});
    return {{"schema", kSchema}, {"curve", curve_to_json(curve)}, {"degree", beta.degree()}, {"moments", list}};
}

MomentsFile moments_from_json(const Json& j) {
    check_schema(j);
    MomentsFile f;
    f.curve = curve_from_json(field(j, "curve"));
    const int degree = int_field(j, "degree");
    if (degree < 2 || degree % 2) bad("degree must be even and at least 2");
    f.beta = MomentSequence2D(degree);
    const Json& list = field(j, "moments");
    if (!list.is_array()) bad("moments must be an array");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : list) {
        const int i = int_field(e, "i"), k = int_field(e, "j");
        if (i < 0 || k < 0 || i + k > degree) bad("moment index (" + std::to_string(i) + "," + std::to_string(k) + ") out of range");
        if (!seen.insert({i, k}).second) bad("moment (" + std::to_string(i) + "," + std::to_string(k) + ") given twice");
        f.beta(i, k) = rational_value(field(e, "v"));
    }
    const std::size_t expected = static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
    if (seen.size() != expected) bad("expected " + std::to_string(expected) + " moments, got " + std::to_string(seen.size()));
    f.beta.validate();
    return f;
}

Json measure_to_json(const AtomicMeasure& measure) {
    Json atoms = Json::array();
    for (const auto& a : measure.atoms) atoms.push_back({{"x", real_json(a.x)}, {"y", real_json(a.y)}, {"rho", real_json(a.rho)}});
    return {{"schema", kSchema}, {"atoms", atoms}};
}

Json measure_to_json(const RationalMeasure& measure) {
    Json atoms = Json::array();
    for (const auto& a : measure) atoms.push_back({{"x", to_string(a.x)}, {"y", to_string(a.y)}, {"rho", to_string(a.rho)}});
    return {{"schema", kSchema}, {"atoms", atoms}};
}

AtomicMeasure measure_from_json(const Json& j) {
    check_schema(j);
    const Json& atoms = field(j, "atoms");
    if (!atoms.is_array()) bad("atoms must be an array");
    AtomicMeasure m;
    for (const auto& a : atoms) m.atoms.push_back({real_value(field(a, "x")), real_value(field(a, "y")), real_value(field(a, "rho"))});
    return m;
}

Json reduction_to_json(const StrongSequence& gamma) {
    Json list = Json::array();
    for (int s = gamma.lo(); s <= gamma.hi(); ++s) {
        const AffineScalar& g = gamma[s];
        Json coeffs = Json::object();
        for (const auto& [id, c] : g.coeffs())
            if (c != 0) coeffs[parameter_name(id)] = to_string(c);
        list.push_back({{"s", s}, {"const", to_string(g.constant())}, {"coeffs", coeffs}, {"class", entry_class_name(gamma.entry_class(s))}});
    }
    Json free = Json::object();
    for (int k = 0; k < gamma.parameter_count(); ++k) free[parameter_name(k + 1)] = gamma.free[static_cast<std::size_t>(k)];
    return {{"schema", kSchema}, {"n", gamma.n}, {"m", gamma.m}, {"free", free}, {"gamma", list}};
}

Json cubic_certificate_to_json(const CubicCertificate& cert) {
    Json j = {{"branch", cubic_branch_name(cert.branch)}, {"D", to_string(cert.d)}, {"rank", cert.rank}};
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    if (cert.quantities) {
        j["t_min"] = to_string(cert.quantities->t_min);
        j["t_max"] = to_string(cert.quantities->t_max);
        j["E"] = to_string(cert.quantities->e);
    }
    if (cert.branch == CubicBranch::NoMeasure && !cert.chosen_t_exact) return j;
    if (!cert.w_roots.empty()) {
        Json w = Json::array();
        for (const auto& x : cert.w_roots) w.push_back(real_json(x));
        j["w_roots"] = w;
        j["window"] = {real_json(cert.window_lo), real_json(cert.window_hi)};
        const Real shift = to_real(cert.link.shift);
        j["beta_window"] = {{"i", cert.link.i}, {"j", cert.link.j},
                            {"bounds", {real_json(cert.window_lo + shift), real_json(cert.window_hi + shift)}}};
    }
    if (cert.branch != CubicBranch::NoMeasure) j["chosen_t"] = real_json(cert.chosen_t);
    if (cert.chosen_t_exact) j["chosen_t_exact"] = to_string(*cert.chosen_t_exact);
    return j;
}

Json quartic_certificate_to_json(const QuarticCertificate& cert) {
    Json j = {{"branch", quartic_branch_name(cert.branch)}, {"core_pd", cert.core_pd}};
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    if (cert.quadratic) {
        const F1Quadratic& q = *cert.quadratic;
        j["det_f1"] = {{"c2", to_string(q.c2)}, {"c1", to_string(q.c1)}, {"c0", to_string(q.c0)}};
        if (q.has_roots) j["t1_roots"] = {real_json(q.lo), real_json(q.hi)};
    }
    const bool has_triple = cert.branch != QuarticBranch::NoMeasure && (cert.branch != QuarticBranch::NoMeasureFound || cert.quadratic);
    if (has_triple) {
        j["chosen"] = {{"t1", real_json(cert.t1)}, {"t2", real_json(cert.t2)}, {"t3", real_json(cert.t3)}};
        j["min_eig"] = real_json(cert.min_eig);
    }
    if (cert.quadratic && cert.quadratic->has_roots) j["search_value"] = real_json(cert.search_value);
    if (cert.slacks) j["slacks"] = {{"ineq3", real_json(cert.slacks->slack3)}, {"ineq5", real_json(cert.slacks->slack5)}};
    j["attempts"] = cert.attempts;
    return j;
}

Json verify_report_to_json(const VerifyReport& r) {
    return {{"ok", r.ok()},
            {"moments_ok", r.moments_ok},
            {"curve_ok", r.curve_ok},
            {"positive_ok", r.positive_ok},
            {"variety_ok", r.variety_ok},
            {"max_moment_error", to_string(r.max_moment_error, 6)},
            {"max_curve_residual", to_string(r.max_curve_residual, 6)},
            {"atom_count", r.atom_count},
            {"rank_m", r.rank_m},
            {"violations", r.violations}};
}

Json outcome_to_json(const SolveOutcome& o) {
    Json j = {{"schema", kSchema}, {"status", solve_status_name(o.status)}, {"m", o.m}, {"n", o.n}, {"rank_m", o.rank_m}};
    if (!o.reason.empty()) j["reason"] = o.reason;
    if (o.cubic) j["certificate"] = cubic_certificate_to_json(*o.cubic);
    if (o.quartic) j["certificate"] = quartic_certificate_to_json(*o.quartic);
    if (o.report) j["verification"] = verify_report_to_json(*o.report);
    if (o.dropped_atoms) j["dropped_near_zero_atoms"] = true;
    if (o.measure) j["measure"] = measure_to_json(*o.measure);
    return j;
}

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) bad("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        bad(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const Json& j) {
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tmc
