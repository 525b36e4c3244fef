#include <jetframe/errors.hpp>
#include <jetframe/json_io.hpp>

#include <fstream>
#include <sstream>

namespace jetframe {

namespace {

VarKind kind_from_name(const std::string& s) {
    for (int k = 0; k <= 7; ++k)
        if (s == kind_name(static_cast<VarKind>(k))) return static_cast<VarKind>(k);
    throw ParseError("unknown variable kind '" + s + "'");
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const VarId& v) {
    Json j;
    j["kind"] = kind_name(v.kind());
    switch (v.kind()) {
        case VarKind::Z:
        case VarKind::Jet:
        case VarKind::GeoJet:
            j["i"] = v.i();
            if (v.kind() != VarKind::Z) j["p"] = v.p();
            break;
        case VarKind::TJet: j["p"] = v.p(); break;
        case VarKind::Param:
            j["j"] = v.component();
            j["alpha"] = v.alpha();
            break;
        case VarKind::W: j["j"] = v.component(); break;
        case VarKind::LogWJet:
        case VarKind::WJet:
            j["j"] = v.component();
            j["p"] = v.p();
            break;
    }
    return j;
}

VarId varid_from_json(const Json& j) {
    return guarded("VarId", [&] {
        switch (kind_from_name(j.at("kind").get<std::string>())) {
            case VarKind::Z: return VarId::z(j.at("i").get<int>());
            case VarKind::Jet: return VarId::jet(j.at("i").get<int>(), j.at("p").get<int>());
            case VarKind::GeoJet: return VarId::geo(j.at("i").get<int>(), j.at("p").get<int>());
            case VarKind::TJet: return VarId::t(j.at("p").get<int>());
            case VarKind::Param: return VarId::param(j.at("j").get<int>(), j.at("alpha").get<MultiIndex>());
            case VarKind::W: return VarId::w(j.at("j").get<int>());
            case VarKind::LogWJet: return VarId::logw(j.at("j").get<int>(), j.at("p").get<int>());
            case VarKind::WJet: return VarId::wjet(j.at("j").get<int>(), j.at("p").get<int>());
        }
        throw ParseError("unreachable variable kind");
    });
}

Json to_json(const Monomial& m) {
    Json a = Json::array();
    for (auto& [v, e] : m.entries()) a.push_back(Json::array({to_json(v), e}));
    return a;
}

Monomial monomial_from_json(const Json& j) {
    return guarded("Monomial", [&] {
        std::vector<Monomial::Entry> e;
        for (auto& x : j) e.emplace_back(varid_from_json(x.at(0)), x.at(1).get<int>());
        return Monomial::from_entries(std::move(e));
    });
}

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json t;
        t["exponents"] = to_json(m);
        t["coef"] = to_string(c);
        a.push_back(std::move(t));
    }
    return a;
}

Poly poly_from_json(const Json& j) {
    return guarded("Poly", [&] {
        Poly p;
        for (auto& t : j) p.add_term(monomial_from_json(t.at("exponents")), parse_rational(t.at("coef").get<std::string>()));
        return p;
    });
}

Json to_json(const FracPoly& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

FracPoly fracpoly_from_json(const Json& j) {
    return guarded("FracPoly", [&] {
        Monomial den = j.contains("den") ? monomial_from_json(j.at("den")) : Monomial{};
        return FracPoly(poly_from_json(j.at("num")), den);
    });
}

Json to_json(const VectorField& v, const VarId& pivot_jet) {
    Json a = Json::array();
    for (auto& [var, f] : v.coeffs()) {
        Json c;
        c["var"] = to_json(var);
        c["num"] = to_json(f.num());
        c["epow"] = f.epow(pivot_jet);
        c["den"] = to_json(f.den());
        a.push_back(std::move(c));
    }
    Json j;
    j["coeffs"] = std::move(a);
    return j;
}

VectorField vectorfield_from_json(const Json& j) {
    return guarded("VectorField", [&] {
        VectorField v;
        for (auto& c : j.at("coeffs")) v.add(varid_from_json(c.at("var")), fracpoly_from_json(c));
        return v;
    });
}

Json to_json(const JetConfig& cfg) {
    Json j;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["degrees"] = cfg.degrees;
    j["case"] = case_name(cfg.kase);
    j["pivot"] = cfg.pivot;
    j["hat_alpha"] = cfg.hat_alpha;
    return j;
}

JetConfig config_from_json(const Json& j) {
    return guarded("JetConfig", [&] {
        JetConfig cfg;
        cfg.n = j.at("n").get<int>();
        cfg.k = j.at("k").get<int>();
        cfg.degrees = j.at("degrees").get<std::vector<int>>();
        cfg.kase = parse_case(j.at("case").get<std::string>());
        cfg.pivot = j.value("pivot", 1);
        if (j.contains("hat_alpha") && !j.at("hat_alpha").empty()) {
            cfg.hat_alpha = j.at("hat_alpha").get<std::vector<MultiIndex>>();
            cfg.validate();
            return cfg;
        }
        return JetConfig::make(cfg.n, cfg.k, cfg.degrees, cfg.kase, cfg.pivot);
    });
}

Json to_json(const TruncCurve& c) {
    Json j;
    j["k"] = c.k;
    Json coords = Json::array();
    for (auto& s : c.f) {
        Json l = Json::array();
        for (auto& x : s.coeffs()) l.push_back(to_string(x));
        coords.push_back(std::move(l));
    }
    j["coords"] = std::move(coords);
    return j;
}

TruncCurve curve_from_json(const Json& j) {
    return guarded("TruncCurve", [&] {
        TruncCurve c;
        c.k = j.at("k").get<int>();
        for (auto& l : j.at("coords")) {
            std::vector<Rational> v;
            for (auto& x : l) v.push_back(parse_rational(x.get<std::string>()));
            c.f.emplace_back(std::move(v), c.k);
        }
        return c;
    });
}

Json to_json(const BellMatrix& b) {
    Json a = Json::array();
    for (auto& row : b)
        for (auto& p : row) a.push_back(to_json(p));
    return a;
}

Json to_json(const Substitution& s) {
    Json a = Json::array();
    for (auto& [v, f] : s) {
        Json e;
        e["var"] = to_json(v);
        e["value"] = to_json(f);
        a.push_back(std::move(e));
    }
    return a;
}

Json to_json(const FrameSpec& spec) {
    Json j;
    j["config"] = to_json(spec.cfg);
    Json fields = Json::array();
    VarId pj = spec.cfg.pivot_jet();
    for (auto& f : spec.fields) {
        Json e;
        e["tag"] = f.tag;
        e["family"] = f.family;
        Json p = Json::object();
        if (f.tag == "T_jq" || f.tag == "T_10") {
            p["j"] = f.j;
            p["q"] = f.q;
        } else if (f.tag == "T_l") {
            p["l"] = f.l;
        } else if (f.tag == "T_beta") {
            p["component"] = f.component;
            p["beta"] = f.beta;
            if (!f.lambda.empty()) p["lambda"] = f.lambda;
            p["variant"] = f.variant;
        } else if (f.tag == "T_wq") {
            p["component"] = f.component;
            p["q"] = f.q;
            p["variant"] = f.variant;
        }
        e["params"] = std::move(p);
        e["field"] = to_json(f.field, pj);
        e["pole_order"] = f.pole_order;
        e["a_degree"] = f.a_degree;
        fields.push_back(std::move(e));
    }
    j["fields"] = std::move(fields);
    j["notes"] = spec.notes;
    return j;
}

FrameSpec framespec_from_json(const Json& j) {
    return guarded("FrameSpec", [&] {
        FrameSpec spec;
        spec.cfg = config_from_json(j.at("config"));
        for (auto& e : j.at("fields")) {
            FrameField f;
            f.tag = e.at("tag").get<std::string>();
            f.family = e.at("family").get<std::string>();
            const Json& p = e.at("params");
            f.j = p.value("j", 0);
            f.q = p.value("q", 0);
            f.l = p.value("l", 0);
            f.component = p.value("component", 0);
            if (p.contains("beta")) f.beta = p.at("beta").get<MultiIndex>();
            if (p.contains("lambda")) f.lambda = p.at("lambda").get<MultiIndex>();
            f.variant = p.value("variant", "");
            f.field = vectorfield_from_json(e.at("field"));
            f.pole_order = e.at("pole_order").get<int>();
            f.a_degree = e.at("a_degree").get<int>();
            spec.fields.push_back(std::move(f));
        }
        if (j.contains("notes")) spec.notes = j.at("notes").get<std::vector<std::string>>();
        return spec;
    });
}

Json to_json(const PoleTable& t) {
    Json j;
    Json rows = Json::array();
    for (auto& r : t.rows) {
        Json e;
        e["field"] = r.field;
        e["computed"] = r.computed;
        e["predicted"] = r.predicted ? Json(*r.predicted) : Json(nullptr);
        e["matches"] = r.matches;
        e["a_degree"] = r.a_degree;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["max"] = t.max;
    j["achiever"] = t.achiever;
    j["bound"] = t.bound;
    j["max_ok"] = t.max_ok();
    j["all_match"] = t.all_match;
    j["a_degree_ok"] = t.a_degree_ok;
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["config"] = r.cfg ? to_json(*r.cfg) : Json(nullptr);
    j["seed"] = r.seed;
    j["expected_dimension"] = r.expected_dimension;
    j["frame_size"] = r.frame_size;
    Json v = Json::array();
    for (auto& t : r.verdicts) {
        Json e;
        e["field"] = t.field;
        e["mode"] = mode_name(t.mode);
        e["pass"] = t.verdict.pass;
        if (!t.verdict.pass) {
            e["component"] = t.verdict.component;
            e["witness"] = t.verdict.witness;
        }
        v.push_back(std::move(e));
    }
    j["verdicts"] = std::move(v);
    Json rr = Json::array();
    for (auto& x : r.rank_results) {
        Json e;
        e["seed"] = x.seed;
        e["rank"] = x.rank;
        e["expected"] = x.expected;
        e["gradients_ok"] = x.gradients_ok;
        if (!x.gradient_failures.empty()) e["gradient_failures"] = x.gradient_failures;
        rr.push_back(std::move(e));
    }
    j["rank_results"] = std::move(rr);
    j["pole_table"] = r.pole_table ? to_json(*r.pole_table) : Json(nullptr);
    Json ids = Json::array();
    for (auto& i : r.identity_suite) {
        Json e;
        e["name"] = i.name;
        e["pass"] = i.pass;
        e["detail"] = i.detail;
        ids.push_back(std::move(e));
    }
    j["identity_suite"] = std::move(ids);
    j["notes"] = r.notes;
    j["pass"] = r.pass;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace jetframe
