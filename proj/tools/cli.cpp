#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "torusknot/checks.hpp"
#include "torusknot/json_io.hpp"
#include "torusknot/render.hpp"

namespace torusknot::cli {

namespace {

struct KnotArgs {
    Int p = 0;
    Int q = 0;
};

void add_knot(CLI::App* cmd, KnotArgs& k) {
    cmd->add_option("p", k.p, "first torus knot parameter, 1 < p < |q|")->required();
    cmd->add_option("q", k.q, "second parameter, negative for negative torus knots")->required();
}

CLI::Option* add_format(CLI::App* cmd, std::string& format, std::vector<std::string> choices) {
    format = choices.front();
    return cmd->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
}

std::string torsion_text(int torsion2) {
    if (torsion2 % 2 == 0) return std::to_string(torsion2 / 2);
    return std::to_string(torsion2) + "/2";
}

std::string bound_text(const std::optional<Int>& v, const char* marker) { return v ? std::to_string(*v) : marker; }

std::string affine_text(int slope, Int intercept) {
    std::ostringstream s;
    s << "rot = " << (slope < 0 ? "-tb" : "tb");
    if (intercept > 0) s << " + " << intercept;
    if (intercept < 0) s << " - " << -intercept;
    return s.str();
}

std::string law_text(const KnotFamilyRecord& f) {
    std::ostringstream s;
    switch (f.kind) {
    case FamilyKind::v_vertex:
    case FamilyKind::extra_Le:
        s << "point (rot " << f.rot_intercept << ", tb " << *f.tb_max << ")";
        break;
    case FamilyKind::diamond_peak:
        s << "peak rot " << f.rot_intercept << " at tb " << *f.tb_max << ", valley tb " << f.floor;
        break;
    case FamilyKind::wing_peak:
        s << affine_text(f.rot_slope, f.rot_intercept) << (f.sigma > 0 ? " - 2b" : " + 2b") << " for b = 0.." << f.depth
          << ", tb <= " << *f.tb_max << " - b";
        break;
    default:
        s << affine_text(f.rot_slope, f.rot_intercept) << ", tb " << bound_text(f.tb_min, "-inf") << ".."
          << bound_text(f.tb_max, "+inf");
    }
    return s.str();
}

void print_atlas_text(std::ostream& out, const Atlas& a) {
    out << "T(" << a.knot.p << "," << a.knot.q << "): m=" << a.counts.m << " n=" << a.counts.n
        << " totally2=" << a.counts.totally2 << ", " << a.structures.size() << " ranges (torsion shown up to "
        << torsion_text(a.max_torsion2) << ")\n";
    for (const auto& s : a.structures) {
        out << "\nd3=" << s.d3 << " " << to_string(s.role) << (s.exceptional ? " (exceptional)" : "") << "\n";
        out << "  orbits:";
        for (const auto& o : s.orbits) out << " " << o;
        out << "\n";
        for (const auto& n : s.notes) out << "  note: " << n << "\n";
        for (const auto& f : s.families) {
            out << "  " << std::left << std::setw(9) << f.label << std::setw(15) << to_string(f.kind) << law_text(f)
                << "; tor " << torsion_text(f.torsion2) << (f.torsion_unbounded ? " (tower)" : "") << "; S+ "
                << f.stab_plus << ", S- " << f.stab_minus;
            for (const auto& [k, d] : f.merge_offsets) out << "; offset " << d << " from level " << k;
            out << std::right << "\n";
        }
    }
    out << "\ntransverse\n";
    if (a.transverse.empty()) out << "  none\n";
    for (const auto& t : a.transverse) {
        out << "  d3=" << t.d3 << ":";
        for (const auto& c : t.classes)
            out << " [sl " << c.sl << ", tor " << torsion_text(c.torsion2) << ", stabilizes to " << c.next << "]";
        out << "\n";
    }
}

Json slope_json(const Slope& s) { return s.str(); }

Json path_json(const FareyPath& p) {
    Json j = Json::array();
    for (const auto& v : p.vertices) j.push_back(slope_json(v));
    return j;
}

Json block_json(const Block& b, const std::vector<FarSlope>& far) {
    Json j{{"index", b.index}, {"side", b.side == Side::A ? "A" : "B"}, {"length", b.length()}, {"vertices", Json::array()}};
    for (const auto& v : b.vertices) j["vertices"].push_back(slope_json(v));
    if (b.index > 0) {
        const FarSlope& f = far.at(static_cast<std::size_t>(b.index) - 1);
        j["far_slope"] = slope_json(f.s);
        j["n"] = f.n;
    }
    return j;
}

int cmd_paths(std::ostream& out, const KnotArgs& k, const std::string& format) {
    KnotModel m = make_model(k.p, k.q);
    const PathPair& pp = m.pair;
    if (format == "json") {
        Json j{{"knot", {{"p", k.p}, {"q", k.q}}},
               {"slope", slope_json(m.knot().slope())},
               {"continued_fraction", pp.cf.digits},
               {"regime", pp.cf.regime == Regime::negative ? "negative" : "positive"},
               {"p1", path_json(pp.p1)},
               {"p2", path_json(pp.p2)},
               {"p2_truncated", path_json(truncated_p2(pp))},
               {"blocks", Json::array()}};
        for (const auto& b : m.blocks.blocks) j["blocks"].push_back(block_json(b, m.far));
        j["suffix"] = m.blocks.suffix ? block_json(*m.blocks.suffix, m.far) : Json(nullptr);
        out << dump(j);
        return kExitOk;
    }
    out << "q/p = " << m.knot().slope().str() << ", continued fraction [";
    for (std::size_t i = 0; i < pp.cf.digits.size(); ++i) out << (i ? ", " : "") << pp.cf.digits[i];
    out << "] (" << (pp.cf.regime == Regime::negative ? "negative" : "positive") << " regime)\n";
    out << "P1: " << path_string(pp.p1) << "\n";
    out << "P2: " << path_string(pp.p2) << "\n";
    if (k.q < 0) out << "P2 truncated: " << path_string(truncated_p2(pp)) << "\n";
    for (const auto& b : m.blocks.blocks) {
        out << "D" << b.index << " (" << (b.side == Side::A ? "P1" : "P2") << ", " << b.length()
            << " edges): " << path_string({b.vertices}) << ", n=" << m.far[b.index - 1].n << "\n";
    }
    if (m.blocks.suffix) out << "suffix (P2, unindexed): " << path_string({m.blocks.suffix->vertices}) << "\n";
    return kExitOk;
}

Json class_json(const KnotModel& m, const SurgeryFrame& frame, const DecoratedPathPair& d) {
    auto cls = classify_consistency(m, d);
    return Json{{"decoration", to_string(d)},
                {"tuple", to_tuple(d)},
                {"level", cls.level},
                {"totally_2_inconsistent", cls.totally_2_inconsistent},
                {"tight", cls.tight},
                {"d3", d3(frame, compile_diagram(m, d).rotation_vector())},
                {"R", rotation_data(m, d).R}};
}

int cmd_decorations(std::ostream& out, const KnotArgs& k, const std::string& format, bool orbits) {
    KnotModel m = make_model(k.p, k.q);
    SurgeryFrame frame = make_frame(m);
    Json j{{"knot", {{"p", k.p}, {"q", k.q}}}, {"count", count_m(k.p, k.q)}};
    if (orbits) {
        j["orbits"] = Json::array();
        for (const auto& o : compatibility_orbits(m)) {
            Json oj{{"key", to_string(o.key)}, {"members", Json::array()}};
            for (const auto& d : o.members) oj["members"].push_back(class_json(m, frame, d));
            j["orbits"].push_back(oj);
        }
    } else {
        j["classes"] = Json::array();
        for (const auto& d : enumerate_decorations(m)) j["classes"].push_back(class_json(m, frame, d));
    }
    if (format == "json") {
        out << dump(j);
        return kExitOk;
    }
    auto line = [&](const Json& c) {
        std::string level = c["level"].get<int>() == 0 ? "consistent" : std::to_string(c["level"].get<int>()) + "-inc";
        out << "  " << std::left << std::setw(18) << c["tuple"].get<std::string>() << std::setw(22)
            << c["decoration"].get<std::string>() << std::setw(11) << level << " d3=" << std::setw(6)
            << c["d3"].get<Int>() << " R=" << std::setw(6) << c["R"].get<Int>() << std::right
            << (c["tight"].get<bool>() ? " tight" : "") << (c["totally_2_inconsistent"].get<bool>() ? " totally-2-inc" : "")
            << "\n";
    };
    out << "T(" << k.p << "," << k.q << "): " << j["count"].get<Int>() << " decoration classes\n";
    if (orbits) {
        for (const auto& o : j["orbits"]) {
            out << "orbit " << o["key"].get<std::string>() << "\n";
            for (const auto& c : o["members"]) line(c);
        }
    } else {
        for (const auto& c : j["classes"]) line(c);
    }
    return kExitOk;
}

std::string coefficient_text(const Slope& s) {
    return s.is_integer() && s.num > 0 ? "+" + s.str() : s.str();
}

int cmd_surgery(std::ostream& out, const KnotArgs& k, const std::string& text, const std::string& format) {
    KnotModel m = make_model(k.p, k.q);
    DecoratedPathPair d = parse_decoration(m, text);
    SurgeryDiagram diag = compile_diagram(m, d);
    SignatureEuler se = signature_euler(diag);
    Int d3_value = d3(diag);
    Int rot = rot_surgered(diag, 0);
    if (format == "json") {
        Json comps = Json::array();
        for (const auto& c : diag.components) {
            comps.push_back(Json{{"chain", c.chain == 0 ? "p" : (c.chain == 1 ? "q" : "plus")},
                                 {"position", c.position},
                                 {"contact_coefficient", coefficient_text(c.contact_coefficient)},
                                 {"smooth_coefficient", c.smooth_coefficient.str()},
                                 {"tb", c.tb},
                                 {"rot", c.rotation},
                                 {"stabilizations", c.stabilizations}});
        }
        out << dump(Json{{"knot", {{"p", k.p}, {"q", k.q}}},
                         {"decoration", to_string(d)},
                         {"p_coefficient", diag.p_coefficient.str()},
                         {"q_coefficient", diag.q_coefficient.str()},
                         {"components", comps},
                         {"linking_matrix", diag.linking_matrix},
                         {"sigma", se.sigma},
                         {"chi", se.chi},
                         {"d3", d3_value},
                         {"rot", rot}});
        return kExitOk;
    }
    out << "decoration " << to_string(d) << " " << to_tuple(d) << "\n";
    out << "contact " << diag.p_coefficient.str() << " and " << diag.q_coefficient.str()
        << " surgery on Legendrian push-offs, plus two (+1) surgeries\n";
    out << "components (chain, position, contact coefficient, tb, rot, stabilizations):\n";
    for (const auto& c : diag.components) {
        out << "  " << (c.chain == 0 ? "p" : (c.chain == 1 ? "q" : "+")) << c.position << "  "
            << coefficient_text(c.contact_coefficient) << "  tb=" << c.tb << "  rot=" << c.rotation
            << "  stab=" << c.stabilizations << "\n";
    }
    out << "linking matrix:\n";
    for (const auto& row : diag.linking_matrix) {
        out << " ";
        for (Int x : row) out << " " << std::setw(4) << x;
        out << "\n";
    }
    out << "sigma=" << se.sigma << " chi=" << se.chi << " d3=" << d3_value << " rot=" << rot << "\n";
    return kExitOk;
}

int cmd_invariants(std::ostream& out, const KnotArgs& k, const std::string& text, const std::string& format) {
    KnotModel m = make_model(k.p, k.q);
    DecoratedPathPair d = parse_decoration(m, text);
    SurgeryDiagram diag = compile_diagram(m, d);
    RotationData rd = rotation_data(m, d);
    Int d3_value = d3(diag);
    auto cls = classify_consistency(m, d);
    Orbit orbit = compatibility_orbit(m, d);
    std::optional<Int> half;
    if (cls.totally_2_inconsistent) half = half_lutz_d3(m, d, d3_value);
    Json j{{"knot", {{"p", k.p}, {"q", k.q}}},
           {"decoration", to_string(d)},
           {"tuple", to_tuple(d)},
           {"level", cls.level},
           {"totally_2_inconsistent", cls.totally_2_inconsistent},
           {"tight", cls.tight},
           {"orbit_key", to_string(orbit.key)},
           {"d3", d3_value},
           {"r_m", rd.r_m},
           {"r_n", rd.r_n},
           {"R", rd.R},
           {"rot_surgery", rot_surgered(diag, 0)},
           {"tb", m.knot().pq()},
           {"sl", self_linking(m.knot().pq(), rd.R)},
           {"half_lutz_d3", half ? Json(*half) : Json(nullptr)}};
    if (format == "json") {
        out << dump(j);
        return kExitOk;
    }
    out << "decoration " << to_string(d) << " " << to_tuple(d) << "\n";
    out << "consistency: "
        << (cls.tight ? "tight" : (cls.level == 0 ? "totally consistent" : std::to_string(cls.level) + "-inconsistent"))
        << (cls.totally_2_inconsistent ? ", totally 2-inconsistent" : "") << "\n";
    out << "orbit key " << j["orbit_key"].get<std::string>() << "\n";
    out << "d3=" << d3_value << "\n";
    out << "r_m=" << rd.r_m << " r_n=" << rd.r_n << " R=" << rd.R << " (surgery rot " << j["rot_surgery"].get<Int>()
        << ")\n";
    out << "peak tb=" << m.knot().pq() << " rot=" << rd.R << " sl=" << j["sl"].get<Int>() << "\n";
    if (half) out << "half Lutz twist gives d3=" << *half << "\n";
    return kExitOk;
}

struct WindowArgs {
    std::optional<Int> tb_min, tb_max, rot_min, rot_max;
};

int cmd_mountain(std::ostream& out, const KnotArgs& k, Int d3_value, int max_torsion2, const WindowArgs& wa,
                 const std::string& format) {
    Atlas atlas = classify(k.p, k.q, max_torsion2);
    Window w = default_window(atlas, d3_value);
    if (wa.tb_min) w.tb_min = *wa.tb_min;
    if (wa.tb_max) w.tb_max = *wa.tb_max;
    if (wa.rot_min) w.rot_min = *wa.rot_min;
    if (wa.rot_max) w.rot_max = *wa.rot_max;
    if (w.tb_min > w.tb_max || w.rot_min > w.rot_max) throw std::invalid_argument("empty window");
    check_window(w);
    MountainRange range = mountain_range(atlas, d3_value, w);
    if (format == "json") {
        out << dump(to_json(range));
    } else if (format == "svg") {
        out << render_svg(range);
    } else {
        out << render_ascii(range);
    }
    return kExitOk;
}

int cmd_classify(std::ostream& out, const KnotArgs& k, int max_torsion2, const std::string& format) {
    Atlas atlas = classify(k.p, k.q, max_torsion2);
    if (format == "json") {
        out << dump(to_json(atlas));
    } else {
        print_atlas_text(out, atlas);
    }
    return kExitOk;
}

int cmd_verify(std::ostream& out, Int pmax, Int qmax, int max_torsion2, const std::string& format) {
    auto results = run_property_suites(make_cases(knot_grid(pmax, qmax), max_torsion2));
    bool ok = true;
    Json j{{"pmax", pmax}, {"qmax", qmax}, {"suites", Json::array()}};
    for (const auto& r : results) {
        ok = ok && r.ok();
        j["suites"].push_back(Json{{"name", r.name},
                                   {"cases", r.cases},
                                   {"failures", r.failure_count},
                                   {"examples", r.failures}});
    }
    j["ok"] = ok;
    if (format == "json") {
        out << dump(j);
    } else {
        for (const auto& r : results) {
            out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failure_count
                << " failures\n";
            for (const auto& f : r.failures) out << "  " << f << "\n";
        }
        out << (ok ? "all suites passed" : "verification failed") << " (p <= " << pmax << ", |q| <= " << qmax << ")\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classifies non-loose Legendrian and transverse torus knots in overtwisted S^3", "torusknot"};
    app.require_subcommand(1);

    KnotArgs knot;
    std::string format, decoration;
    int max_torsion2 = 2;
    Int d3_value = 0, pmax = 9, qmax = 14;
    bool orbits = false;
    WindowArgs window;

    auto* classify_cmd = app.add_subcommand("classify", "full atlas of ranges and transverse classes");
    add_knot(classify_cmd, knot);
    add_format(classify_cmd, format, {"text", "json"});
    classify_cmd->add_option("--max-torsion2", max_torsion2, "highest doubled torsion level printed")
        ->check(CLI::NonNegativeNumber);

    auto* paths_cmd = app.add_subcommand("paths", "Farey path pair and continued fraction blocks");
    add_knot(paths_cmd, knot);
    add_format(paths_cmd, format, {"text", "json"});

    auto* decorations_cmd = app.add_subcommand("decorations", "decoration classes with d3 and R");
    add_knot(decorations_cmd, knot);
    add_format(decorations_cmd, format, {"text", "json"});
    decorations_cmd->add_flag("--orbits", orbits, "group classes into compatibility orbits");

    auto* surgery_cmd = app.add_subcommand("surgery", "contact surgery diagram of one decoration");
    add_knot(surgery_cmd, knot);
    surgery_cmd->add_option("decoration", decoration, "e.g. \"P1:-+|P2:+--\" or \"(+,-,+,-,-)\"")->required();
    add_format(surgery_cmd, format, {"text", "json"});

    auto* invariants_cmd = app.add_subcommand("invariants", "d3, rotation and torsion data of one decoration");
    add_knot(invariants_cmd, knot);
    invariants_cmd->add_option("decoration", decoration, "e.g. \"P1:-+|P2:+--\" or \"(+,-,+,-,-)\"")->required();
    add_format(invariants_cmd, format, {"text", "json"});

    auto* mountain_cmd = app.add_subcommand("mountain", "lattice picture of one contact structure");
    add_knot(mountain_cmd, knot);
    mountain_cmd->add_option("--d3", d3_value, "d3 of the contact structure")->required();
    add_format(mountain_cmd, format, {"ascii", "svg", "json"});
    mountain_cmd->add_option("--max-torsion2", max_torsion2, "highest doubled torsion level")
        ->check(CLI::NonNegativeNumber);
    mountain_cmd->add_option("--tb-min", window.tb_min, "lowest tb row");
    mountain_cmd->add_option("--tb-max", window.tb_max, "highest tb row");
    mountain_cmd->add_option("--rot-min", window.rot_min, "leftmost rot column");
    mountain_cmd->add_option("--rot-max", window.rot_max, "rightmost rot column");

    auto* verify_cmd = app.add_subcommand("verify", "run the property suites over a grid of knots");
    verify_cmd->add_option("--pmax", pmax, "largest p")->check(CLI::Range(Int{2}, Int{1000}));
    verify_cmd->add_option("--qmax", qmax, "largest |q|")->check(CLI::Range(Int{3}, Int{1000}));
    verify_cmd->add_option("--max-torsion2", max_torsion2, "highest doubled torsion level")
        ->check(CLI::NonNegativeNumber);
    add_format(verify_cmd, format, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(out, knot, max_torsion2, format);
        if (*paths_cmd) return cmd_paths(out, knot, format);
        if (*decorations_cmd) return cmd_decorations(out, knot, format, orbits);
        if (*surgery_cmd) return cmd_surgery(out, knot, decoration, format);
        if (*invariants_cmd) return cmd_invariants(out, knot, decoration, format);
        if (*mountain_cmd) return cmd_mountain(out, knot, d3_value, max_torsion2, window, format);
        if (*verify_cmd) return cmd_verify(out, pmax, qmax, max_torsion2, format);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace torusknot::cli
