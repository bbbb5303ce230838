#include "umbilic/io.hpp"

#include <cstdio>

namespace umbilic {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("expected complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_array(const VectorXc& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

VectorXc complex_vector(const json& j) {
    if (!j.is_array()) throw InputError("expected array of complex numbers");
    VectorXc v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

}  // namespace

json to_json(const WeightedSymmetricProfile& p) {
    return {{"degree", p.degree()}, {"delta", complex_array(p.delta())}};
}

WeightedSymmetricProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("delta"))
        throw InputError("profile JSON needs \"degree\" and \"delta\"");
    if (!j["degree"].is_number_integer()) throw InputError("profile degree must be an integer");
    const int degree = j["degree"].get<int>();
    VectorXc delta = complex_vector(j["delta"]);
    if (degree < 1 || delta.size() != degree) throw InputError("profile: delta length must equal degree");
    return WeightedSymmetricProfile(std::move(delta));
}

json to_json(const RootSet& r) {
    json res = json::array();
    for (double v : r.residuals) res.push_back(v);
    return {{"roots", complex_array(r.roots)}, {"residuals", res}, {"circle_gap", r.circle_gap}};
}

RootSet rootset_from_json(const json& j) {
    RootSet r;
    r.roots = complex_vector(j.at("roots"));
    const auto& res = j.at("residuals");
    r.residuals.resize(static_cast<Eigen::Index>(res.size()));
    for (std::size_t i = 0; i < res.size(); ++i) r.residuals[static_cast<Eigen::Index>(i)] = res[i].get<double>();
    r.circle_gap = j.at("circle_gap").get<double>();
    return r;
}

json to_json(const LagrangianCheckResult& c) {
    return {{"modulus_defect", c.modulus_defect},
            {"relation_defects", c.relation_defects},
            {"midline_defect", c.midline_defect},
            {"max_defect", c.max_defect()},
            {"pass", c.pass}};
}

json to_json(const SectionSeries& s) {
    json entries = json::array();
    for (const auto& [key, value] : s.entries())
        entries.push_back({{"n", key.first}, {"m", key.second}, {"re", value.real()}, {"im", value.imag()}});
    return {{"entries", entries}};
}

SectionSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw InputError("series JSON needs an \"entries\" array");
    SectionSeries s;
    for (const auto& e : j["entries"]) {
        try {
            s.add(e.at("n").get<int>(), e.at("m").get<int>(), {e.at("re").get<double>(), e.at("im").get<double>()});
        } catch (const json::exception& ex) {
            throw InputError(std::string("series entry: ") + ex.what());
        }
    }
    return s;
}

json to_json(const UmbilicSurface& s) {
    json out = {{"degree", s.degree},
                {"parity", s.even ? "even" : "odd"},
                {"l", s.half},
                {"a_low", complex_array(s.a_low)},
                {"a_N1", complex_to_json(s.a_n1)},
                {"scale", s.scale},
                {"phase", s.phase},
                {"support_constant", s.support_constant}};
    if (s.even) out["a_mid"] = s.a_mid;
    return out;
}

json to_json(const ConvexityReport& r) {
    return {{"worst_margin", r.worst_margin},
            {"pass", r.pass},
            {"support_constant", r.support_constant},
            {"doublings", r.doublings}};
}

json to_json(const UmbilicReport& r) {
    json radii = r.index_detail.radii, windings = r.index_detail.windings, samples = r.index_detail.samples;
    return {{"profile", to_json(r.profile)},
            {"degree", r.degree},
            {"index", r.index()},
            {"twice_index", r.twice_index},
            {"winding", r.winding},
            {"K", r.K},
            {"K_contour", r.K_contour},
            {"min_GN", r.min_GN},
            {"min_GN_lower_bound", r.min_GN_lower_bound},
            {"circle_gap", r.circle_gap},
            {"reconstruction_error", r.reconstruction_error},
            {"support_constant", r.support_constant},
            {"relations", to_json(r.relations)},
            {"roots", to_json(r.roots)},
            {"identity_ok", r.identity_ok},
            {"hamburger_ok", r.hamburger_ok},
            {"main_bound_ok", r.main_bound_ok},
            {"counts_agree", r.counts_agree},
            {"diagnostics", {{"radii", radii}, {"windings", windings}, {"samples", samples}}}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string report_csv_header() {
    return "N,K,twice_index,identity_ok,hamburger_ok,main_bound_ok,counts_agree,min_GN,circle_gap";
}

std::string report_csv_row(const UmbilicReport& r) {
    auto b = [](bool v) { return v ? "1" : "0"; };
    return std::to_string(r.degree) + "," + std::to_string(r.K) + "," + std::to_string(r.twice_index) + "," +
           b(r.identity_ok) + "," + b(r.hamburger_ok) + "," + b(r.main_bound_ok) + "," + b(r.counts_agree) + "," +
           format_double(r.min_GN) + "," + format_double(r.circle_gap);
}

}  // namespace umbilic
