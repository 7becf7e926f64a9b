// Acceptance driver: one PASS/FAIL line per criterion, details indented below.
// Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "torusknot/checks.hpp"

using namespace torusknot;

namespace {

constexpr std::size_t kShownDetails = 12;
constexpr int kTorsionDepth = 4;  // doubled torsion compared against the infinite towers

struct Verdict {
    std::vector<std::string> problems;
    std::vector<std::string> info;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::string tag(Int p, Int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ") "; }

template <class T>
std::string show(const std::set<T>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& x : s) {
        out << (first ? "" : ",") << x;
        first = false;
    }
    out << "}";
    return out.str();
}

const StructureRecord* find_structure(const Atlas& a, Int d3) {
    for (const auto& s : a.structures) {
        if (s.d3 == d3) return &s;
    }
    return nullptr;
}

std::set<Int> d3_set(const Atlas& a) {
    std::set<Int> out;
    for (const auto& s : a.structures) out.insert(s.d3);
    return out;
}

// (rot, torsion2) of every knot at tb, one entry per family, torsion capped.
using Knots = std::multiset<std::pair<Int, int>>;

Knots knots_by_family(const StructureRecord& s, Int tb) {
    Knots out;
    for (const auto& f : s.families) {
        if (f.torsion2 > kTorsionDepth) continue;
        for (Int r : rots_at(f, tb)) out.insert({r, f.torsion2});
    }
    return out;
}

std::set<Int> points_at(const StructureRecord& s, Int tb) {
    std::set<Int> out;
    for (const auto& f : s.families) {
        for (Int r : rots_at(f, tb)) out.insert(r);
    }
    return out;
}

// L+ lines have slope -1 and keep S+, L- lines the reverse.
bool leg_stabilizations_ok(const KnotFamilyRecord& f) {
    if (f.rot_slope == -1) return f.stab_plus == "stays" && f.stab_minus == "loose";
    if (f.rot_slope == 1) return f.stab_plus == "loose" && f.stab_minus == "stays";
    return false;
}

// Torsion levels 2k + first, k >= 0, up to the compared depth.
std::vector<int> tower(int first) {
    std::vector<int> out;
    for (int t = first; t <= kTorsionDepth; t += 2) out.push_back(t);
    return out;
}

// A tower of legs rot = -+(tb - c) whose doubled torsion starts at `upper`
// above the threshold tb and at `lower` on or below it.
Knots tower_knots(Int tb, Int c, Int threshold, int upper, int lower) {
    Knots out;
    for (int t : tower(tb > threshold ? upper : lower)) {
        out.insert({-(tb - c), t});
        out.insert({tb - c, t});
    }
    return out;
}

void compare_knots(Verdict& v, const std::string& where, const Knots& got, const Knots& want, Int tb) {
    if (got == want) return;
    std::ostringstream out;
    out << where << "tb=" << tb << " knots differ: got";
    for (auto [r, t] : got) out << " (" << r << ",t" << t << ")";
    out << " want";
    for (auto [r, t] : want) out << " (" << r << ",t" << t << ")";
    v.problems.push_back(out.str());
}

// Criterion 1 ----------------------------------------------------------------

Verdict positive_two_strand() {
    Verdict v;
    for (Int n = 1; n <= 10; ++n) {
        const Int q = 2 * n + 1;
        const std::string where = tag(2, q);
        Atlas a = classify(2, q, kTorsionDepth);
        v.expect(d3_set(a) == std::set<Int>{1, 0, 1 - 2 * n}, where + "structures " + show(d3_set(a)));
        const StructureRecord* xi0 = find_structure(a, 0);
        const StructureRecord* xi1 = find_structure(a, 1);
        const StructureRecord* xit = find_structure(a, 1 - 2 * n);
        if (!xi0 || !xi1 || !xit) continue;

        const Int lo = -q - 6, hi = 4 * n + 2 + 6;
        for (Int tb = lo; tb <= hi; ++tb) {
            compare_knots(v, where + "xi_0 ", knots_by_family(*xi0, tb), tower_knots(tb, 2 * n - 1, 2 * n - 1, 1, 2), tb);
            compare_knots(v, where + "xi_" + std::to_string(1 - 2 * n) + " ", knots_by_family(*xit, tb),
                          tower_knots(tb, -(2 * n - 1), 2 * n - 1, 0, 1), tb);
        }
        for (const auto* s : {xi0, xit}) {
            for (const auto& f : s->families) {
                v.expect(f.torsion_unbounded, where + "finite tower " + f.label);
                v.expect(leg_stabilizations_ok(f), where + "stabilizations of " + f.label);
            }
        }

        // xi_1: every knot is unique, so points and their stabilizations say everything.
        std::map<Int, std::set<Int>> want;
        for (Int tb = lo; tb <= hi; ++tb) {
            if (tb > 2 * n + 1) want[tb].insert({-(tb - 2 * n - 1), tb - 2 * n - 1});
            if (tb >= 2 * n + 4 && tb <= 4 * n + 2) want[tb].insert({-(tb - 2 * n - 3), tb - 2 * n - 3});
            if (tb == 2 * n + 1 || tb == 2 * n + 3) want[tb].insert(0);
        }
        bool untwisted = true;
        for (const auto& f : xi1->families) untwisted = untwisted && f.torsion2 == 0;
        v.expect(untwisted, where + "xi_1 carries torsion");
        for (Int tb = lo; tb <= hi; ++tb) {
            std::set<Int> got = points_at(*xi1, tb);
            v.expect(got == want[tb], where + "xi_1 tb=" + std::to_string(tb) + " rot " + show(got) + " want " +
                                          show(want[tb]));
        }
        // Expected stabilizations on points: S+ of (r, t) is (r + 1, t - 1) or loose.
        auto on = [&](Int r, Int t) { return want.count(t) && want[t].count(r); };
        for (Int tb = 2 * n + 1; tb <= hi; ++tb) {
            for (Int r : want[tb]) {
                bool is_leg_plus = tb > 2 * n + 1 && r == -(tb - 2 * n - 1) && r != 0;
                bool is_leg_minus = tb > 2 * n + 1 && r == tb - 2 * n - 1 && r != 0;
                bool is_vertex = tb == 2 * n + 1;
                bool plus_loose = is_leg_minus || is_vertex;
                bool minus_loose = is_leg_plus || is_vertex;
                v.expect(plus_loose == !on(r + 1, tb - 1),
                         where + "xi_1 S+ at (" + std::to_string(r) + "," + std::to_string(tb) + ")");
                v.expect(minus_loose == !on(r - 1, tb - 1),
                         where + "xi_1 S- at (" + std::to_string(r) + "," + std::to_string(tb) + ")");
            }
        }
        for (const auto& f : xi1->families) {
            if (f.kind == FamilyKind::v_leg_plus || f.kind == FamilyKind::v_leg_minus) {
                v.expect(leg_stabilizations_ok(f), where + "xi_1 stabilizations of " + f.label);
            }
            if (f.kind == FamilyKind::v_vertex) {
                v.expect(f.stab_plus == "loose" && f.stab_minus == "loose", where + "xi_1 vertex stabilizations");
            }
        }
    }
    return v;
}

// Criterion 2 ----------------------------------------------------------------

Verdict negative_two_strand() {
    Verdict v;
    for (Int n = 1; n <= 10; ++n) {
        const Int q = -(2 * n + 1);
        const std::string where = tag(2, q);
        Atlas a = classify(2, q, kTorsionDepth);
        std::set<Int> want_d3;
        for (Int l = -n + 1; l <= n - 1; l += 2) want_d3.insert({n + l + 1, n - l});
        v.expect(d3_set(a) == want_d3, where + "structures " + show(d3_set(a)));

        // d3 and |R| per orbit key
        KnotModel model = make_model(2, q);
        SurgeryFrame frame = make_frame(model);
        std::map<Int, std::set<Int>> r_by_d3;
        for (const auto& o : compatibility_orbits(model)) {
            Int d = d3(frame, compile_diagram(model, o.key).rotation_vector());
            r_by_d3[d].insert(std::abs(rotation_data(model, o.key).R));
        }
        std::map<Int, std::set<Int>> want_r;
        for (Int l = -n + 1; l <= n - 1; l += 2) want_r[n + l + 1].insert(4 * n + 2 * l + 3);
        v.expect(r_by_d3 == want_r, where + "d3 -> |R| differs");

        const Int lo = q - 6, hi = 2 * n + 6;
        for (Int l = -n + 1; l <= n - 1; l += 2) {
            const StructureRecord* whole = find_structure(a, n + l + 1);
            const StructureRecord* half = find_structure(a, n - l);
            if (!whole || !half) continue;
            for (Int tb = lo; tb <= hi; ++tb) {
                Knots w = tower_knots(tb, 2 * l + 1, tb, 0, 0);
                if (l == n - 1 && tb == 2 * n - 1) w.insert({0, 0});
                compare_knots(v, where + "xi_" + std::to_string(n + l + 1) + " ", knots_by_family(*whole, tb), w, tb);
                compare_knots(v, where + "xi_" + std::to_string(n - l) + " ", knots_by_family(*half, tb),
                              tower_knots(tb, -(2 * l + 1), tb, 1, 1), tb);
            }
            for (const auto* s : {whole, half}) {
                for (const auto& f : s->families) {
                    if (f.kind == FamilyKind::extra_Le) continue;
                    v.expect(leg_stabilizations_ok(f), where + "stabilizations of " + f.label);
                }
            }
        }

        const StructureRecord* top = find_structure(a, 2 * n);
        int extras = 0;
        if (top) {
            for (const auto& f : top->families) {
                if (f.kind != FamilyKind::extra_Le) continue;
                ++extras;
                v.expect(f.tb_max == 2 * n - 1 && f.rot_intercept == 0 && f.torsion2 == 0, where + "L_e placement");
                // S+ must land on the L+ leg at (1, 2n - 2), S- on the L- leg at (-1, 2n - 2).
                for (auto [stab, rot] : {std::pair{f.stab_plus, Int{1}}, std::pair{f.stab_minus, Int{-1}}}) {
                    bool ok = false;
                    for (const auto& g : top->families) {
                        if (stab != "becomes:" + g.label || g.torsion2 != 0) continue;
                        auto r = rots_at(g, 2 * n - 2);
                        ok = std::find(r.begin(), r.end(), rot) != r.end();
                    }
                    v.expect(ok, where + "L_e stabilization " + stab);
                }
            }
        }
        v.expect(extras == 1, where + std::to_string(extras) + " extra knots in xi_" + std::to_string(2 * n));
        MountainRange range = mountain_range(a, 2 * n);
        bool marked = false;
        for (const auto& p : range.points) {
            if (p.tb == 2 * n - 1 && p.rot == 0) marked = p.extra && p.multiplicity == 3;
        }
        v.expect(marked, where + "crossing (0," + std::to_string(2 * n - 1) + ") is not a triple point with L_e");
    }
    return v;
}

// Criterion 3 ----------------------------------------------------------------

std::set<Int> abs_r_off_exceptional(Int p, Int q) {
    KnotModel model = make_model(p, q);
    SurgeryFrame frame = make_frame(model);
    const Int pq = p * q;
    const Int exceptional = pq > 0 ? 1 : std::abs(pq) - p - std::abs(q) + 1;
    std::set<Int> out;
    for (const auto& d : enumerate_decorations(model)) {
        if (classify_consistency(model, d).tight) continue;
        if (d3(frame, compile_diagram(model, d).rotation_vector()) == exceptional) continue;
        out.insert(std::abs(rotation_data(model, d).R));
    }
    return out;
}

Verdict five_eight() {
    Verdict v;
    Atlas pos = classify(5, 8);
    Atlas neg = classify(5, -8);
    v.expect(d3_set(pos) == std::set<Int>{1, 0, -1, -2, -3, -4, -7, -8, -9, -15, -19, -27},
             "(5,8) structures " + show(d3_set(pos)));
    v.expect(d3_set(neg) == std::set<Int>{1, 2, 7, 8, 14, 28}, "(5,-8) structures " + show(d3_set(neg)));
    v.expect(abs_r_off_exceptional(5, 8) == std::set<Int>{19, 21, 27, 37, 41, 51, 57, 67},
             "(5,8) |R| " + show(abs_r_off_exceptional(5, 8)));
    v.expect(abs_r_off_exceptional(5, -8) == std::set<Int>{15, 17, 35, 47},
             "(5,-8) |R| " + show(abs_r_off_exceptional(5, -8)));

    if (const StructureRecord* xi1 = find_structure(pos, 1)) {
        std::set<Int> peaks;
        std::optional<Int> vertex;
        for (const auto& f : xi1->families) {
            if (f.kind == FamilyKind::diamond_peak && f.tb_max == Int{40}) peaks.insert(f.rot_intercept);
            if (f.kind == FamilyKind::v_vertex) vertex = f.tb_max;
        }
        v.expect(peaks == std::set<Int>{-9, -7, -3, 3, 7, 9}, "(5,8) xi_1 peaks " + show(peaks));
        v.expect(vertex == Int{29}, "(5,8) xi_1 V vertex");
    } else {
        v.problems.push_back("(5,8) has no xi_1");
    }
    bool le = false;
    if (const StructureRecord* xi28 = find_structure(neg, 28)) {
        for (const auto& f : xi28->families) le = le || (f.kind == FamilyKind::extra_Le && f.tb_max == Int{27});
    }
    v.expect(le, "(5,-8) L_e at tb=27 in xi_28");

    KnotModel m_pos = make_model(5, 8);
    SurgeryDiagram d_pos = compile_diagram(m_pos, enumerate_decorations(m_pos)[0]);
    v.expect(d_pos.linking_matrix == IntMatrix{{-4, -2, -1, -1, -1, -1},
                                               {-2, -3, -1, -1, -1, -1},
                                               {-1, -1, -5, -3, -1, -1},
                                               {-1, -1, -3, -4, -1, -1},
                                               {-1, -1, -1, -1, 0, -1},
                                               {-1, -1, -1, -1, -1, 0}},
             "(5,8) linking matrix");
    SignatureEuler se_pos = signature_euler(d_pos);
    v.expect(se_pos.sigma == -4 && se_pos.chi == 7, "(5,8) sigma/chi");

    KnotModel m_neg = make_model(5, -8);
    SurgeryDiagram d_neg = compile_diagram(m_neg, enumerate_decorations(m_neg)[0]);
    v.expect(d_neg.linking_matrix == IntMatrix{{-4, -3, -1, -1, -1, -1, -1},
                                               {-3, -4, -1, -1, -1, -1, -1},
                                               {-1, -1, -4, -3, -2, -1, -1},
                                               {-1, -1, -3, -4, -2, -1, -1},
                                               {-1, -1, -2, -2, -3, -1, -1},
                                               {-1, -1, -1, -1, -1, 0, -1},
                                               {-1, -1, -1, -1, -1, -1, 0}},
             "(5,-8) linking matrix");
    SignatureEuler se_neg = signature_euler(d_neg);
    v.expect(se_neg.sigma == -3 && se_neg.chi == 8, "(5,-8) sigma/chi");
    return v;
}

// Criterion 4 ----------------------------------------------------------------

Verdict trefoils() {
    Verdict v;
    Atlas right = classify(2, 3);
    std::set<std::pair<Int, Int>> got;
    for (const auto& s : right.structures) {
        for (const auto& f : s.families) {
            if (f.torsion2 != 0) continue;
            for (Int r : rots_at(f, 7)) got.insert({s.d3, r});
        }
    }
    v.expect(got == std::set<std::pair<Int, Int>>{{1, -4}, {1, 4}, {-1, -8}, {-1, 8}}, "right trefoil tb=7 knots");
    v.expect(knots_at(right, 7) == 4, "right trefoil count at tb=7 is " + std::to_string(knots_at(right, 7)));

    Atlas left = classify(2, -3);
    bool any = false;
    for (const auto& s : left.structures) {
        for (const auto& f : s.families) {
            if (f.torsion2 != 0) continue;
            any = true;
            v.expect(s.d3 == 2, "left trefoil tor=0 family " + f.label + " in xi_" + std::to_string(s.d3));
        }
    }
    v.expect(any, "left trefoil has no tor=0 knots");
    return v;
}

// Criteria 5-8 -----------------------------------------------------------------

Verdict from_suite(const CheckResult& r) {
    Verdict v;
    for (const auto& f : r.failures) v.problems.push_back(f);
    if (r.failure_count > r.failures.size()) {
        v.problems.push_back("... " + std::to_string(r.failure_count - r.failures.size()) + " more");
    }
    v.info.push_back(r.name + ": " + std::to_string(r.cases) + " cases");
    return v;
}

// Criterion 9 ----------------------------------------------------------------

// Expected transverse classes of one structure: |sl| with doubled torsion,
// plus how many of them stabilize to another non-loose class.
struct TransverseWant {
    std::multiset<std::pair<Int, int>> classes;
    int chains = 0;
};

TransverseWant single(Int sl) { return {{{sl, 0}}, 0}; }

TransverseWant family(Int sl, int first) {
    TransverseWant w;
    for (int t : tower(first)) w.classes.insert({sl, t});
    return w;
}

void compare_transverse(Verdict& v, const std::string& where, const Atlas& a, const std::map<Int, TransverseWant>& want) {
    std::set<Int> got_d3, want_d3;
    for (const auto& t : a.transverse) got_d3.insert(t.d3);
    for (const auto& [d, w] : want) want_d3.insert(d);
    v.expect(got_d3 == want_d3, where + "transverse structures " + show(got_d3) + " want " + show(want_d3));
    for (const auto& t : a.transverse) {
        auto it = want.find(t.d3);
        if (it == want.end()) continue;
        std::multiset<std::pair<Int, int>> got;
        int chains = 0;
        for (const auto& c : t.classes) {
            if (c.torsion2 <= kTorsionDepth) got.insert({std::abs(c.sl), c.torsion2});
            chains += c.next != "loose";
        }
        if (got != it->second.classes) {
            std::ostringstream out;
            out << where << "xi_" << t.d3 << " (|sl|,2tor) got";
            for (auto [s, k] : got) out << " (" << s << "," << k << ")";
            out << " want";
            for (auto [s, k] : it->second.classes) out << " (" << s << "," << k << ")";
            v.problems.push_back(out.str());
        }
        v.expect(chains == it->second.chains, where + "xi_" + std::to_string(t.d3) + " stabilization chains");
    }
}

Verdict transverse() {
    Verdict v;
    for (Int n = 1; n <= 10; ++n) {
        Atlas a = classify(2, 2 * n + 1, kTorsionDepth);
        compare_transverse(v, tag(2, 2 * n + 1), a, {{0, family(2 * n - 1, 2)}, {1 - 2 * n, family(2 * n - 1, 1)}});
        Atlas b = classify(2, -(2 * n + 1), kTorsionDepth);
        std::map<Int, TransverseWant> want;
        for (Int l = -n + 1; l <= n - 1; l += 2) {
            want[n + l + 1] = family(std::abs(2 * l + 1), 0);
            want[n - l] = family(std::abs(2 * l + 1), 1);
        }
        compare_transverse(v, tag(2, -(2 * n + 1)), b, want);
    }

    Atlas pos = classify(5, 8, kTorsionDepth);
    compare_transverse(v, "(5,8) ", pos,
                       {{-1, {{{19, 0}, {21, 0}}, 1}},
                        {-3, single(13)},
                        {-7, single(3)},
                        {-9, family(1, 2)},
                        {-15, family(11, 2)},
                        {-19, family(17, 2)},
                        {-27, family(27, 2)},
                        {-8, family(1, 1)},
                        {-4, family(11, 1)},
                        {-2, family(17, 1)},
                        {0, family(27, 1)}});
    Atlas neg = classify(5, -8, kTorsionDepth);
    compare_transverse(v, "(5,-8) ", neg,
                       {{2, {{{27, 0}, {25, 0}}, 1}},
                        {8, single(7)},
                        {14, family(7, 0)},
                        {28, family(27, 0)},
                        {1, family(27, 1)},
                        {7, family(7, 1)}});
    return v;
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    std::vector<KnotCase> grid = make_cases(knot_grid(40, 40));

    std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"(2,2n+1) golden, n = 1..10", positive_two_strand},
        {"(2,-(2n+1)) golden, n = 1..10", negative_two_strand},
        {"(5,8) and (5,-8) golden", five_eight},
        {"trefoil spot checks", trefoils},
        {"dual rotation over |q| <= 40", [&] { return from_suite(check_dual_rot(grid)); }},
        {"counting over |q| <= 40", [&] { return from_suite(check_counts(grid)); }},
        {"structural identities over |q| <= 40", [&] { return from_suite(check_structural(grid)); }},
        {"bound over |q| <= 40", [&] { return from_suite(check_bound(grid)); }},
        {"transverse golden", transverse},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v = criteria[i].second();
        bool pass = v.problems.empty();
        failed += !pass;
        std::cout << "criterion " << i + 1 << ": " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "\n";
        for (const auto& s : v.info) std::cout << "    " << s << "\n";
        for (std::size_t j = 0; j < v.problems.size() && j < kShownDetails; ++j) {
            std::cout << "    " << v.problems[j] << "\n";
        }
        if (v.problems.size() > kShownDetails) {
            std::cout << "    ... " << v.problems.size() - kShownDetails << " more\n";
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << grid.size() << " knots in the grid, " << seconds << " s\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
