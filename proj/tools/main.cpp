// jetframe: build slanted vector-field frames on vertical jets and verify them.
#include <jetframe/errors.hpp>
#include <jetframe/json_io.hpp>
#include <jetframe/verify.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace jetframe;

namespace {

struct ConfigArgs {
    std::optional<int> n;
    std::optional<int> k;
    std::vector<int> degrees;
    std::string kase = "compact";
    int pivot = 1;

    bool given() const { return n.has_value() || !degrees.empty(); }
    JetConfig build() const {
        if (!n || !k || degrees.empty()) throw InvalidConfig("--n, --k and --d are all required");
        return JetConfig::make(*n, *k, degrees, parse_case(kase), pivot);
    }
};

void add_config_options(CLI::App* app, ConfigArgs& a) {
    app->add_option("--n", a.n, "number of affine coordinates")->check(CLI::Range(1, 9));
    app->add_option("--k", a.k, "jet order")->check(CLI::Range(1, 64));
    app->add_option("--d", a.degrees, "degrees, comma separated")->delimiter(',');
    app->add_option("--case", a.kase, "compact or log")->check(CLI::IsMember({"compact", "log", "logarithmic"}));
    app->add_option("--pivot", a.pivot, "chart index i with z_i' != 0");
}

std::vector<JetConfig> preset(const std::string& name) {
    std::vector<JetConfig> out{
        JetConfig::make(2, 1, {2}),
        JetConfig::make(2, 2, {3}),
        JetConfig::make(2, 1, {1, 2}),
        JetConfig::make(1, 1, {2}, Case::Logarithmic),
    };
    if (name == "medium") {
        out.push_back(JetConfig::make(3, 2, {3}));
        out.push_back(JetConfig::make(2, 3, {4}));
        out.push_back(JetConfig::make(3, 1, {2, 2}));
        out.push_back(JetConfig::make(2, 2, {3}, Case::Logarithmic));
        out.push_back(JetConfig::make(1, 1, {2, 2}, Case::Logarithmic));
    }
    return out;
}

std::string summary(const FrameSpec& spec) {
    std::ostringstream s;
    s << spec.cfg.label() << ": " << spec.fields.size() << " fields (";
    bool first = true;
    for (auto& [fam, cnt] : spec.family_counts()) {
        s << (first ? "" : ", ") << fam << " " << cnt;
        first = false;
    }
    s << "), expected dimension " << expected_dimension(spec.cfg) << ", max pole order " << spec.max_pole_order();
    return s.str();
}

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << dump(j);
    else
        write_text_file(out, dump(j));
}

void print_report(const Report& r) {
    std::cout << (r.cfg ? r.cfg->label() : std::string("identities")) << "\n";
    if (!r.verdicts.empty()) {
        int bad = 0;
        for (auto& v : r.verdicts)
            if (!v.verdict.pass) {
                ++bad;
                std::cout << "  tangency FAIL " << v.field << " component " << v.verdict.component << " slot "
                          << v.verdict.witness << "\n";
            }
        std::cout << "  tangency: " << r.verdicts.size() - bad << "/" << r.verdicts.size() << " fields pass\n";
    }
    for (auto& x : r.rank_results) {
        std::cout << "  point seed " << x.seed << ": rank " << x.rank << " / expected " << x.expected
                  << (x.gradients_ok ? "" : ", gradient check FAIL") << "\n";
    }
    if (r.pole_table)
        std::cout << "  pole order max " << r.pole_table->max << " (" << r.pole_table->achiever << "), bound "
                  << r.pole_table->bound << ", a-degree " << (r.pole_table->a_degree_ok ? "<= 1" : "> 1") << "\n";
    for (auto& i : r.identity_suite)
        std::cout << "  identity " << i.name << ": " << (i.pass ? "pass" : "FAIL") << " (" << i.detail << ")\n";
    std::cout << "  verdict: " << (r.pass ? "pass" : "FAIL") << "\n";
}

void print_pole_table(const PoleTable& t) {
    std::cout << std::left << std::setw(34) << "field" << std::setw(10) << "computed" << std::setw(11) << "predicted"
              << "a-degree\n";
    for (auto& r : t.rows)
        std::cout << std::left << std::setw(34) << r.field << std::setw(10) << r.computed << std::setw(11)
                  << (r.predicted ? std::to_string(*r.predicted) : "-") << r.a_degree << "\n";
    std::cout << "max " << t.max << " at " << t.achiever << " (bound 5k-2 = " << t.bound << ")\n";
}

FrameSpec load_or_build(const std::string& file, const ConfigArgs& ca, bool include_t10 = true) {
    if (!file.empty()) return framespec_from_json(read_json_file(file));
    FrameOptions fo;
    fo.include_T10 = include_t10;
    return assemble_frame(ca.build(), fo);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slanted vector-field frames on vertical jets of universal hypersurfaces"};
    app.require_subcommand(1);

    // gen
    ConfigArgs gen_cfg;
    std::string gen_out;
    bool gen_no_t10 = false;
    auto* gen = app.add_subcommand("gen", "build a frame and write it as JSON");
    add_config_options(gen, gen_cfg);
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->add_flag("--no-t10", gen_no_t10, "leave T_10 out (negative control)");

    // verify
    ConfigArgs ver_cfg;
    std::string ver_file, ver_out, ver_preset;
    std::vector<std::string> suites;
    bool ver_all = false;
    int points = 3;
    std::uint64_t seed = 1;
    auto* ver = app.add_subcommand("verify", "run verification suites");
    add_config_options(ver, ver_cfg);
    ver->add_option("frame", ver_file, "FrameSpec JSON file");
    ver->add_option("--suite", suites, "tangency, rank, gradients, pole, identities")
        ->delimiter(',')
        ->check(CLI::IsMember({"tangency", "rank", "gradients", "pole", "identities"}));
    ver->add_flag("--all", ver_all, "every suite, identities included");
    ver->add_option("--points", points, "sampled vertical points")->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", seed, "64-bit seed");
    ver->add_option("--out", ver_out, "Report JSON file");
    ver->add_option("--preset", ver_preset, "small or medium config matrix")->check(CLI::IsMember({"small", "medium"}));

    // pole
    ConfigArgs pole_cfg;
    std::string pole_file, pole_out;
    bool pole_json = false;
    auto* pole = app.add_subcommand("pole", "pole-order audit");
    add_config_options(pole, pole_cfg);
    pole->add_option("frame", pole_file, "FrameSpec JSON file");
    pole->add_flag("--json", pole_json, "print JSON instead of a table");
    pole->add_option("--out", pole_out, "also write the JSON table here");

    // export
    ConfigArgs exp_cfg;
    std::string what = "frame", exp_out;
    std::uint64_t exp_seed = 1;
    auto* exp = app.add_subcommand("export", "export symbolic artifacts as JSON");
    add_config_options(exp, exp_cfg);
    exp->add_option("--what", what, "frame, bell-z1, bell-t, geo-in-std, std-in-geo, equations, point, curve")
        ->check(CLI::IsMember({"frame", "bell-z1", "bell-t", "geo-in-std", "std-in-geo", "equations", "point", "curve"}));
    exp->add_option("--seed", exp_seed, "seed for point and curve");
    exp->add_option("--out", exp_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            FrameOptions fo;
            fo.include_T10 = !gen_no_t10;
            FrameSpec spec = assemble_frame(gen_cfg.build(), fo);
            emit(to_json(spec), gen_out);
            (gen_out.empty() ? std::cerr : std::cout) << summary(spec) << "\n";
            return 0;
        }

        if (*ver) {
            VerifyOptions opt;
            opt.points = points;
            opt.seed = seed;
            if (!suites.empty() && !ver_all) {
                auto has = [&](const char* s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
                opt.tangency = has("tangency");
                opt.rank = has("rank");
                opt.gradients = has("gradients");
                opt.pole = has("pole");
                opt.identities = has("identities");
            } else {
                opt.identities = ver_all;
            }
            if (!opt.rank && !opt.gradients) opt.points = 0;
            std::vector<Report> reports;
            bool only_identities = opt.identities && !opt.tangency && !opt.rank && !opt.gradients && !opt.pole;
            if (!ver_preset.empty()) {
                for (auto& cfg : preset(ver_preset)) reports.push_back(verify_frame(assemble_frame(cfg), opt));
            } else if (only_identities && ver_file.empty()) {
                int n = ver_cfg.n.value_or(2);
                int k = ver_cfg.k.value_or(2);
                reports.push_back(verify_identities(n, k, seed));
            } else {
                if (ver_file.empty() && !ver_cfg.given()) throw InvalidConfig("give a frame file, an inline config or --preset");
                reports.push_back(verify_frame(load_or_build(ver_file, ver_cfg), opt));
            }
            bool pass = true;
            for (auto& r : reports) {
                print_report(r);
                pass = pass && r.pass;
            }
            if (!ver_out.empty()) {
                Json j;
                if (reports.size() == 1) {
                    j = to_json(reports.front());
                } else {
                    j = Json::array();
                    for (auto& r : reports) j.push_back(to_json(r));
                }
                write_text_file(ver_out, dump(j));
            }
            std::cout << (pass ? "PASS" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        if (*pole) {
            FrameSpec spec = load_or_build(pole_file, pole_cfg);
            PoleTable t = pole_audit(spec);
            if (pole_json)
                std::cout << dump(to_json(t));
            else
                print_pole_table(t);
            if (!pole_out.empty()) write_text_file(pole_out, dump(to_json(t)));
            return t.max_ok() && t.a_degree_ok ? 0 : 1;
        }

        if (*exp) {
            JetConfig cfg = exp_cfg.build();
            Json j;
            if (what == "frame") {
                j = to_json(assemble_frame(cfg));
            } else if (what == "bell-z1") {
                j = to_json(bell_matrix_z1(cfg));
            } else if (what == "bell-t") {
                j = to_json(bell_matrix_t(cfg.k));
            } else if (what == "geo-in-std") {
                j = to_json(geo_in_std(cfg));
            } else if (what == "std-in-geo") {
                j = to_json(std_in_geo(cfg));
            } else if (what == "equations") {
                j = Json::array();
                for (auto& comp : defining_equations(cfg, Base::Dt)) {
                    Json c = Json::array();
                    for (auto& e : comp) c.push_back(to_json(e));
                    j.push_back(std::move(c));
                }
            } else if (what == "point") {
                VerticalPoint vp = sample_vertical_point(cfg, exp_seed);
                j = Json::array();
                for (auto& [v, x] : vp.assignment) {
                    Json e;
                    e["var"] = to_json(v);
                    e["value"] = to_string(x);
                    j.push_back(std::move(e));
                }
            } else {
                Rng rng(exp_seed);
                j = to_json(TruncCurve::random(cfg.n, cfg.k, rng));
            }
            emit(j, exp_out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
