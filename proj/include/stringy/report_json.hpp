#pragma once

// JSON rendering and parsing for the report types. Lives apart from the core
// headers because it pulls in the vendored json library; everything numeric
// crosses the boundary as exact "p/q" or decimal strings, never as floats.

#include "stringy/io.hpp"
#include "stringy/stringy.hpp"
#include "stringy/wps.hpp"

#include <json.hpp>

namespace stringy {

using nlohmann::json;

inline constexpr const char* kReportSchema = "report/1";

inline std::string rat_str(const Rat& a) { return a.get_num().get_str() + "/" + a.get_den().get_str(); }

inline Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + s + "' is not a rational");
    }
}

inline Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("'" + s + "' is not an integer");
    }
}

inline CYClass parse_cy_class(const std::string& s) {
    for (CYClass c : {CYClass::NoMinimalModel, CYClass::MinimalNotCY, CYClass::AlmostPseudoreflexive,
                      CYClass::Pseudoreflexive, CYClass::Reflexive})
        if (s == to_string(c)) return c;
    throw ParseError("'" + s + "' is not a classification");
}

namespace detail {

inline json to_json(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

inline json to_json(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

inline json to_json(const IMat& m) {
    json a = json::array();
    for (const IVec& v : m) a.push_back(to_json(v));
    return a;
}

inline json to_json(const QMat& m) {
    json a = json::array();
    for (const QVec& v : m) a.push_back(to_json(v));
    return a;
}

inline json to_json(const UPoly& p) {
    json a = json::array();
    for (const Rat& c : p.coefficients()) a.push_back(rat_str(c));
    return a;
}

inline json to_json(const RationalFunctionUQ& f) {
    return json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

inline IVec ivec_from(const json& a) {
    IVec v;
    for (const json& x : a) v.push_back(parse_int(x.get<std::string>()));
    return v;
}

inline QVec qvec_from(const json& a) {
    QVec v;
    for (const json& x : a) v.push_back(parse_rat(x.get<std::string>()));
    return v;
}

inline IMat imat_from(const json& a) {
    IMat m;
    for (const json& r : a) m.push_back(ivec_from(r));
    return m;
}

inline QMat qmat_from(const json& a) {
    QMat m;
    for (const json& r : a) m.push_back(qvec_from(r));
    return m;
}

inline UPoly upoly_from(const json& a) {
    UPoly p;
    size_t deg = 0;
    for (const json& x : a) p = p + UPoly::monomial(parse_rat(x.get<std::string>()), deg++);
    return p;
}

inline RationalFunctionUQ ratfun_from(const json& j) {
    return RationalFunctionUQ(upoly_from(j.at("numerator")), upoly_from(j.at("denominator")));
}

inline json fine_body(const FineResult& r) {
    json j{{"interior_empty", r.interior_empty},
           {"interior_dim", r.interior_dim},
           {"interior_vertices", to_json(r.interior_vertices)},
           {"support", to_json(r.support)},
           {"hull_bounded", r.hull_bounded}};
    j["canonical_vertices"] = r.canonical ? to_json(r.canonical->vertices()) : json(nullptr);
    return j;
}

inline FineResult fine_from(const json& j) {
    FineResult r;
    r.interior_empty = j.at("interior_empty").get<bool>();
    r.interior_dim = j.at("interior_dim").get<size_t>();
    r.interior_vertices = qmat_from(j.at("interior_vertices"));
    r.support = imat_from(j.at("support"));
    r.hull_bounded = j.at("hull_bounded").get<bool>();
    if (!j.at("canonical_vertices").is_null())
        r.canonical = Polytope::hull(qmat_from(j.at("canonical_vertices")));
    return r;
}

inline void check_header(const json& j, const std::string& kind) {
    if (!j.is_object() || j.value("schema", "") != kReportSchema)
        throw ParseError("expected a document with schema '" + std::string(kReportSchema) + "'");
    if (j.value("kind", "") != kind)
        throw ParseError("expected a '" + kind + "' document, got '" + j.value("kind", "") + "'");
}

} // namespace detail

inline json render(const FineResult& r) {
    json j = detail::fine_body(r);
    j["schema"] = kReportSchema;
    j["kind"] = "fine";
    return j;
}

inline FineResult parse_fine_result(const json& j) {
    detail::check_header(j, "fine");
    return detail::fine_from(j);
}

inline json render(const ClassifyResult& r) {
    return json{{"schema", kReportSchema},
                {"kind", "classify"},
                {"verdict", to_string(r.verdict)},
                {"translation", detail::to_json(r.translation)},
                {"fine", detail::fine_body(r.fine)}};
}

inline ClassifyResult parse_classify_result(const json& j) {
    detail::check_header(j, "classify");
    ClassifyResult r;
    r.verdict = parse_cy_class(j.at("verdict").get<std::string>());
    r.translation = detail::ivec_from(j.at("translation"));
    r.fine = detail::fine_from(j.at("fine"));
    return r;
}

inline json render(const StringyReport& r) {
    json terms = json::array();
    for (const FaceTerm& t : r.terms)
        terms.push_back(json{{"face", t.face},
                             {"dim", t.dim},
                             {"volume", rat_str(t.volume)},
                             {"cap_volume", rat_str(t.cap_volume)},
                             {"term", rat_str(t.term)}});
    return json{{"schema", kReportSchema},
                {"kind", "stringy"},
                {"id", r.id},
                {"verdict", to_string(r.verdict)},
                {"translation", detail::to_json(r.translation)},
                {"e_str", rat_str(r.e_str)},
                {"terms", terms},
                {"efun", detail::to_json(r.efun)},
                {"efun_polynomial", r.efun_polynomial},
                {"symmetry_ok", r.symmetry_ok},
                {"integral", r.integral},
                {"denominator", r.denominator.get_str()}};
}

inline StringyReport parse_stringy_report(const json& j) {
    detail::check_header(j, "stringy");
    StringyReport r;
    r.id = j.at("id").get<std::string>();
    r.verdict = parse_cy_class(j.at("verdict").get<std::string>());
    r.translation = detail::ivec_from(j.at("translation"));
    r.e_str = parse_rat(j.at("e_str").get<std::string>());
    for (const json& t : j.at("terms")) {
        FaceTerm ft;
        ft.face = t.at("face").get<size_t>();
        ft.dim = t.at("dim").get<size_t>();
        ft.volume = parse_rat(t.at("volume").get<std::string>());
        ft.cap_volume = parse_rat(t.at("cap_volume").get<std::string>());
        ft.term = parse_rat(t.at("term").get<std::string>());
        r.terms.push_back(std::move(ft));
    }
    r.efun = detail::ratfun_from(j.at("efun"));
    r.efun_polynomial = j.at("efun_polynomial").get<bool>();
    r.symmetry_ok = j.at("symmetry_ok").get<bool>();
    r.integral = j.at("integral").get<bool>();
    r.denominator = parse_int(j.at("denominator").get<std::string>());
    return r;
}

inline json render(const MirrorReport& r) {
    return json{{"schema", kReportSchema},
                {"kind", "mirror"},
                {"e_delta", rat_str(r.e_delta)},
                {"e_dual", rat_str(r.e_dual)},
                {"sign", r.sign},
                {"pass", r.pass}};
}

inline MirrorReport parse_mirror_report(const json& j) {
    detail::check_header(j, "mirror");
    MirrorReport r;
    r.e_delta = parse_rat(j.at("e_delta").get<std::string>());
    r.e_dual = parse_rat(j.at("e_dual").get<std::string>());
    r.sign = j.at("sign").get<int>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

inline json render(const QuasiRegularReport& r) {
    json facets = json::array();
    for (const SingularFacetInfo& f : r.facets)
        facets.push_back(json{{"face", f.face},
                              {"distance", f.distance.get_str()},
                              {"volume", rat_str(f.volume)},
                              {"product", rat_str(f.product)}});
    json j{{"schema", kReportSchema},
           {"kind", "quasi-regular"},
           {"facets", facets},
           {"residual", rat_str(r.residual)},
           {"single_singular", r.single_singular}};
    j["quasi_regular"] = r.quasi_regular ? json(*r.quasi_regular) : json(nullptr);
    return j;
}

inline QuasiRegularReport parse_quasi_regular_report(const json& j) {
    detail::check_header(j, "quasi-regular");
    QuasiRegularReport r;
    for (const json& t : j.at("facets")) {
        SingularFacetInfo f;
        f.face = t.at("face").get<size_t>();
        f.distance = parse_int(t.at("distance").get<std::string>());
        f.volume = parse_rat(t.at("volume").get<std::string>());
        f.product = parse_rat(t.at("product").get<std::string>());
        r.facets.push_back(std::move(f));
    }
    r.residual = parse_rat(j.at("residual").get<std::string>());
    r.single_singular = j.at("single_singular").get<bool>();
    if (!j.at("quasi_regular").is_null()) r.quasi_regular = j.at("quasi_regular").get<bool>();
    return r;
}

inline json render(const WPSReport& r) {
    return json{{"schema", kReportSchema},
                {"kind", "wps"},
                {"params", json{{"a", r.params.a}, {"b", r.params.b}, {"l", r.params.l}}},
                {"dim", r.dim},
                {"e_x", rat_str(r.e_x)},
                {"e_dual", rat_str(r.e_dual)},
                {"aggregate", rat_str(r.aggregate)},
                {"x_integral", r.x_integral},
                {"dual_integral", r.dual_integral},
                {"x_denominator_divides_b", r.x_denominator_divides_b},
                {"dual_denominator_divides_a", r.dual_denominator_divides_a},
                {"mirror_pass", r.mirror_pass}};
}

inline WPSReport parse_wps_report(const json& j) {
    detail::check_header(j, "wps");
    WPSReport r;
    r.params.a = j.at("params").at("a").get<long>();
    r.params.b = j.at("params").at("b").get<long>();
    r.params.l = j.at("params").at("l").get<long>();
    r.dim = j.at("dim").get<long>();
    r.e_x = parse_rat(j.at("e_x").get<std::string>());
    r.e_dual = parse_rat(j.at("e_dual").get<std::string>());
    r.aggregate = parse_rat(j.at("aggregate").get<std::string>());
    r.x_integral = j.at("x_integral").get<bool>();
    r.dual_integral = j.at("dual_integral").get<bool>();
    r.x_denominator_divides_b = j.at("x_denominator_divides_b").get<bool>();
    r.dual_denominator_divides_a = j.at("dual_denominator_divides_a").get<bool>();
    r.mirror_pass = j.at("mirror_pass").get<bool>();
    return r;
}

} // namespace stringy
