// Acceptance checks, one line per criterion.
#include <CLI11.hpp>

#include <jetframe/errors.hpp>
#include <jetframe/identities.hpp>
#include <jetframe/verify.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace jetframe;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

std::vector<VectorField> fields_of(const FrameSpec& spec) {
    std::vector<VectorField> out;
    for (auto& f : spec.fields) out.push_back(f.field);
    return out;
}

Poly zpow(int n, const MultiIndex& beta) {
    Poly r(1);
    for (int i = 0; i < n; ++i) r = r * Poly::var(VarId::z(i + 1), beta[i]);
    return r;
}

/// Lambda vector equal to value * e_q
bool lambda_equals(const LambdaVec& lv, const Poly& value, int q) {
    for (int p = 0; p < static_cast<int>(lv.entries.size()); ++p)
        if (!(lv.entries[p] == (p == q ? FracPoly(value) : FracPoly{}))) return false;
    return true;
}

/// tangency of every field plus rank and gradients at `points` seeded vertical points
void frame_checks(const JetConfig& cfg, const FrameSpec& spec, int points, Outcome& out) {
    TangencyMode mode = required_mode(cfg);
    for (auto& f : spec.fields)
        if (!check_tangency(cfg, f.field, mode).pass) out.fail(cfg.label() + ": " + f.describe() + " not tangent; ");
    auto fs = fields_of(spec);
    const int want = expected_dimension(cfg);
    for (int s = 1; s <= points; ++s) {
        VerticalPoint vp = sample_vertical_point(cfg, static_cast<std::uint64_t>(s));
        int r = rank_at_point(cfg, fs, vp.assignment);
        if (r != want)
            out.fail(cfg.label() + ": rank " + std::to_string(r) + " != " + std::to_string(want) + "; ");
        if (!gradient_failures(cfg, fs, vp.assignment).empty()) out.fail(cfg.label() + ": gradient check; ");
    }
}

Outcome criterion1(bool literal) {
    Outcome out;
    int suites = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 5; ++k) {
            ++suites;
            for (auto& r : identity_suite(n, k, 1, 100))
                if (!r.pass) out.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + r.name + ": " + r.detail);
        }
    std::string bad;
    for (int k = 1; k <= 5; ++k) {
        IdentityResult r = check_tgt_sym(k, literal);
        if (!r.pass) bad += (bad.empty() ? "" : ",") + std::to_string(k);
    }
    if (!bad.empty()) out.fail(std::string(literal ? "factor l" : "factor q") + " identity fails for k=" + bad);
    if (out.pass) out.detail << suites << " suites, n<=3, k<=5";
    return out;
}

Outcome criterion2() {
    Outcome out;
    int blocks = 0;
    for (auto cfg : {JetConfig::make(2, 1, {2}), JetConfig::make(2, 2, {3}), JetConfig::make(3, 2, {3})}) {
        FieldForge forge(cfg);
        for (auto& beta : indices_upto(cfg.n, cfg.d(1) + 2))
            for (int q = 0; q <= cfg.k; ++q) {
                VectorField u = forge.U_general(1, q, beta);
                ++blocks;
                if (!lambda_equals(lambda(cfg, Base::Dz1, u, 1), zpow(cfg.n, beta), q))
                    out.fail(cfg.label() + " q=" + std::to_string(q) + " beta=" + to_string(beta));
            }
    }
    if (out.pass) out.detail << blocks << " blocks";
    return out;
}

Outcome criterion3() {
    Outcome out;
    int fields = 0, multi = 0;
    auto run = [&](const JetConfig& cfg) {
        FieldForge forge(cfg);
        auto eqs = defining_equations(cfg, Base::Dt)[0];
        for (auto& beta : cfg.params(1)) {
            if (length(beta) < cfg.k + 1) continue;
            auto ls = forge.merker_lambdas(beta);
            if (ls.size() >= 2) ++multi;
            for (auto& lam : ls) {
                VectorField t;
                try {
                    t = forge.T_merker(1, beta, lam);
                } catch (const ReservedIndex&) {
                    continue;
                }
                ++fields;
                for (auto& e : eqs)
                    if (!t.apply(e).is_zero()) out.fail(cfg.label() + " beta=" + to_string(beta) + " lambda=" + to_string(lam));
            }
        }
    };
    run(JetConfig::make(2, 2, {3}));
    // every beta above has a single lambda; this one has several
    run(JetConfig::make(2, 1, {3}));
    if (out.pass) out.detail << fields << " fields, " << multi << " with several lambdas";
    return out;
}

Outcome criterion4() {
    Outcome out;
    for (auto cfg : {JetConfig::make(2, 1, {2}), JetConfig::make(2, 2, {3}), JetConfig::make(3, 2, {3}),
                     JetConfig::make(2, 3, {4})}) {
        FrameSpec spec = assemble_frame(cfg);
        frame_checks(cfg, spec, 3, out);
        // controls: a bare d/da_beta is not tangent, and dropping T_{1,0} loses rank
        for (auto& f : spec.fields)
            if (f.tag == "T_beta") {
                VectorField bare = VectorField::basis(VarId::param(f.component, f.beta));
                if (check_tangency(cfg, bare, TangencyMode::Identical).pass)
                    out.fail(cfg.label() + ": bare d/da_" + to_string(f.beta) + " passed; ");
            }
        FrameSpec without = assemble_frame(cfg, FrameOptions{false});
        VerticalPoint vp = sample_vertical_point(cfg, 1);
        if (rank_at_point(cfg, fields_of(without), vp.assignment) >= expected_dimension(cfg))
            out.fail(cfg.label() + ": frame without T_10 kept full rank; ");
    }
    if (out.pass) out.detail << "4 configurations, 3 points each, controls rejected";
    return out;
}

Outcome criterion5() {
    Outcome out;
    for (auto cfg : {JetConfig::make(2, 1, {1, 2}), JetConfig::make(3, 1, {2, 2})})
        frame_checks(cfg, assemble_frame(cfg), 3, out);
    if (out.pass) out.detail << "2 configurations";
    return out;
}

Outcome criterion6() {
    Outcome out;
    for (auto cfg : {JetConfig::make(1, 1, {2}, Case::Logarithmic), JetConfig::make(2, 2, {3}, Case::Logarithmic),
                     JetConfig::make(1, 1, {2, 2}, Case::Logarithmic)}) {
        FrameSpec spec = assemble_frame(cfg);
        for (auto& f : spec.fields)
            if (f.tag == "T_wq" && !check_tangency(cfg, f.field, TangencyMode::ModuloQ).pass)
                out.fail(cfg.label() + ": " + f.describe() + "; ");
        frame_checks(cfg, spec, 3, out);
    }
    if (out.pass) out.detail << "3 configurations";
    return out;
}

std::vector<FrameSpec> pole_frames() {
    std::vector<FrameSpec> out;
    for (auto cfg : {JetConfig::make(2, 1, {2}), JetConfig::make(2, 2, {3}), JetConfig::make(3, 2, {3}),
                     JetConfig::make(2, 3, {4}), JetConfig::make(2, 1, {1, 2}), JetConfig::make(3, 1, {2, 2})})
        out.push_back(assemble_frame(cfg));
    return out;
}

Outcome criterion7_max() {
    Outcome out;
    for (auto& spec : pole_frames()) {
        PoleTable t = pole_audit(spec);
        if (t.max != t.bound)
            out.fail(spec.cfg.label() + ": max " + std::to_string(t.max) + " != 5k-2 = " + std::to_string(t.bound) + "; ");
        else if (spec.cfg.k >= 2)
            out.detail << spec.cfg.label() << " max " << t.max << " at " << t.achiever << "; ";
    }
    return out;
}

Outcome criterion7_adegree() {
    Outcome out;
    int fields = 0;
    for (auto& spec : pole_frames())
        for (auto& f : spec.fields) {
            ++fields;
            if (f.a_degree > 1) out.fail(spec.cfg.label() + ": " + f.describe() + " has a-degree " + std::to_string(f.a_degree));
        }
    if (out.pass) out.detail << fields << " fields with a-degree <= 1";
    return out;
}

Outcome criterion7_fields() {
    Outcome out;
    int rows = 0, bad = 0;
    std::map<std::string, int> by_tag;
    for (auto& spec : pole_frames())
        for (auto& r : pole_audit(spec).rows) {
            ++rows;
            if (!r.matches) {
                ++bad;
                by_tag[r.field.substr(0, r.field.find('('))]++;
            }
        }
    if (bad) {
        out.pass = false;
        out.detail << bad << "/" << rows << " fields differ from the closed forms (";
        bool first = true;
        for (auto& [tag, n] : by_tag) {
            out.detail << (first ? "" : ", ") << tag << " x" << n;
            first = false;
        }
        out.detail << ")";
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    Outcome f = criterion7_fields(), m = criterion7_max(), a = criterion7_adegree();
    out.pass = f.pass && m.pass && a.pass;
    out.detail << "per-field " << (f.pass ? "ok" : f.detail.str()) << "; maxima " << (m.pass ? "ok" : "FAIL")
               << "; a-degree " << (a.pass ? "ok" : "FAIL");
    return out;
}

Outcome criterion8() {
    Outcome out;
    FiberCurveResult r = fiber_curve_check(JetConfig::make(2, 2, {3}), 1, 50);
    out.pass = r.pass();
    out.detail << r.on_fiber << "/" << r.curves << " on the fiber, " << r.perturbed_rejected << "/" << r.curves
               << " perturbed rejected";
    return out;
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> cs{
        {"1", "identity suite", [] { return criterion1(true); }},
        {"2", "building blocks", criterion2},
        {"3", "Merker annihilation", criterion3},
        {"4", "compact frames", criterion4},
        {"5", "complete intersections", criterion5},
        {"6", "logarithmic frames", criterion6},
        {"7", "pole orders", criterion7},
        {"8", "fiber curves", criterion8},
    };
    return cs;
}

const std::vector<Criterion>& extras() {
    static const std::vector<Criterion> cs{
        {"1-corrected", "identity suite, tangent symbol factor q", [] { return criterion1(false); }},
        {"7-max", "pole order maxima", criterion7_max},
        {"7-adegree", "a-degree", criterion7_adegree},
        {"7-fields", "per-field pole orders", criterion7_fields},
    };
    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<std::string> only;
    app.add_option("--criterion", only, "run only these (1..8, 1-corrected, 7-max, 7-adegree, 7-fields)");
    CLI11_PARSE(app, argc, argv);

    std::vector<const Criterion*> run;
    if (only.empty()) {
        for (auto& c : criteria()) run.push_back(&c);
    } else {
        for (auto& id : only) {
            const Criterion* hit = nullptr;
            for (auto* list : {&criteria(), &extras()})
                for (auto& c : *list)
                    if (c.id == id) hit = &c;
            if (!hit) {
                std::cerr << "unknown criterion " << id << "\n";
                return 2;
            }
            run.push_back(hit);
        }
    }

    bool all = true;
    for (auto* c : run) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c->run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::cout << "criterion " << c->id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c->title << "  ["
                  << o.detail.str() << "] (" << std::fixed;
        std::cout.precision(1);
        std::cout << secs << "s)" << std::endl;
    }
    return all ? 0 : 1;
}
