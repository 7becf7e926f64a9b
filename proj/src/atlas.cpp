#include "torusknot/atlas.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace torusknot {

namespace {

const std::vector<std::pair<FamilyKind, std::string>> kind_names = {
    {FamilyKind::x_leg_plus, "x_leg_plus"},   {FamilyKind::x_leg_minus, "x_leg_minus"},
    {FamilyKind::v_leg_plus, "v_leg_plus"},   {FamilyKind::v_leg_minus, "v_leg_minus"},
    {FamilyKind::v_vertex, "v_vertex"},       {FamilyKind::wing_peak, "wing_peak"},
    {FamilyKind::diamond_peak, "diamond_peak"}, {FamilyKind::extra_Le, "extra_Le"},
    {FamilyKind::torsion_member, "torsion_member"}};

const std::vector<std::pair<StructureRole, std::string>> role_names = {
    {StructureRole::generic, "generic"},
    {StructureRole::exceptional, "exceptional"},
    {StructureRole::special, "special"},
    {StructureRole::half_lutz, "half_lutz"},
    {StructureRole::special_half_lutz, "special_half_lutz"}};

Int iabs(Int x) { return x < 0 ? checked_sub(0, x) : x; }

int sign_of(Int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool is_point(FamilyKind k) { return k == FamilyKind::v_vertex || k == FamilyKind::extra_Le; }

// Everything the assembly needs about one orbit.
struct OrbitData {
    Orbit orbit;
    Int d3 = 0;
    std::vector<Int> R;  // signed R per member
    int sigma = 0;
    bool towers = false;
    bool has_tc = false;
    bool split = false;  // P1 uniformly one sign, P2 uniformly the other
};

bool is_split(const DecoratedPathPair& d) {
    if (d.signs1.empty() || d.signs2.empty()) return false;
    int s = d.signs1.front();
    for (int x : d.signs1)
        if (x != s) return false;
    for (int x : d.signs2)
        if (x != -s) return false;
    return true;
}

OrbitData orbit_data(const KnotModel& model, const SurgeryFrame& frame, Orbit orbit) {
    OrbitData od;
    od.d3 = d3(frame, compile_diagram(model, orbit.key).rotation_vector());
    for (const auto& m : orbit.members) od.R.push_back(rotation_data(model, m).R);
    od.sigma = -sign_of(model.knot().pq()) * sign_of(od.R.front());
    if (od.sigma == 0) throw std::logic_error("orbit key with vanishing rotation");
    od.towers = classify_consistency(model, orbit.key).totally_2_inconsistent;
    od.has_tc = std::find(orbit.levels.begin(), orbit.levels.end(), 0) != orbit.levels.end();
    od.split = is_split(orbit.key);
    od.orbit = std::move(orbit);
    return od;
}

std::string sign_char(int sigma) { return sigma > 0 ? "+" : "-"; }

std::string leg_label(int sigma) { return "L" + sign_char(sigma); }

std::string member_label(const std::string& stem, int level, int sigma) {
    return stem + std::to_string(level) + sign_char(sigma);
}

// The stabilization that keeps a sigma-family on its own line, and the doomed one.
void set_stabs(KnotFamilyRecord& f, int sigma, const std::string& kept, const std::string& doomed) {
    f.stab_plus = sigma > 0 ? kept : doomed;
    f.stab_minus = sigma > 0 ? doomed : kept;
}

KnotFamilyRecord x_leg(int sigma, Int crossing, int group) {
    KnotFamilyRecord f;
    f.kind = sigma > 0 ? FamilyKind::x_leg_plus : FamilyKind::x_leg_minus;
    f.label = leg_label(sigma);
    f.group = group;
    f.rot_slope = -sigma;
    f.rot_intercept = checked_mul(sigma, crossing);
    f.sigma = sigma;
    set_stabs(f, sigma, "stays", "loose");
    return f;
}

// Wing lines of every member above the key, peaks at tb = pq.
std::vector<KnotFamilyRecord> wings(const KnotModel& model, const OrbitData& od, int group) {
    std::vector<KnotFamilyRecord> out;
    const Int pq = model.knot().pq();
    const auto& levels = od.orbit.levels;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i] < 3) continue;
        KnotFamilyRecord f;
        f.kind = FamilyKind::wing_peak;
        f.label = member_label("W", levels[i], od.sigma);
        f.group = group;
        f.tb_max = pq;
        f.rot_slope = -od.sigma;
        f.rot_intercept = checked_add(od.R[i], checked_mul(od.sigma, pq));
        f.sigma = od.sigma;
        f.depth = static_cast<int>(wing_extent(model, levels[i]) - 1);
        f.merge_offsets.push_back({levels[i], iabs(checked_sub(od.R[i], od.R[i - 1]))});
        set_stabs(f, od.sigma, "stays", f.depth > 0 ? "merges" : "loose");
        out.push_back(f);
    }
    return out;
}

// Copies of base families at each torsion level; lower segments below the
// threshold (if any) carry one extra half twist.
std::vector<KnotFamilyRecord> tower(const std::vector<KnotFamilyRecord>& base, int first, int max_torsion2,
                                    std::optional<Int> threshold) {
    std::vector<KnotFamilyRecord> out;
    int top = std::max(max_torsion2, first);
    for (int t2 = first; t2 <= top; t2 += 2) {
        for (const auto& b : base) {
            auto level = [&](KnotFamilyRecord f, int tor2) {
                if (tor2 > top) return;
                f.torsion2 = tor2;
                f.torsion_unbounded = true;
                if (tor2 > 0) {
                    f.kind = FamilyKind::torsion_member;
                    f.label += "@t" + std::to_string(tor2);
                }
                out.push_back(std::move(f));
            };
            if (threshold) {
                KnotFamilyRecord upper = b, lower = b;
                upper.tb_min = checked_add(*threshold, 1);
                lower.tb_max = *threshold;
                level(upper, t2);
                level(lower, t2 + 1);
            } else {
                level(b, t2);
            }
        }
    }
    return out;
}

Int crossing_of(const Knot& k, Int abs_r) {
    return k.pq() > 0 ? checked_sub(k.pq(), abs_r) : checked_add(k.pq(), abs_r);
}

struct Assembly {
    const KnotModel& model;
    int max_torsion2;
    std::vector<StructureRecord> out;

    void orbit_pair(const OrbitData& plus, const OrbitData& minus) {
        const Knot& k = model.knot();
        const Int pq = k.pq();
        StructureRecord s;
        s.d3 = plus.d3;
        s.orbits = {to_string(plus.orbit.key), to_string(minus.orbit.key)};
        if (plus.has_tc) {
            exceptional_positive(s, plus, minus);
            out.push_back(std::move(s));
            return;
        }
        const Int c = crossing_of(k, iabs(plus.R.front()));
        const Int e = checked_sub(checked_sub(iabs(pq), k.p), iabs(k.q));
        const bool exceptional = pq < 0 && plus.split;
        const bool special = pq > 0 && plus.split;
        s.exceptional = exceptional;
        s.role = exceptional ? StructureRole::exceptional : (special ? StructureRole::special : StructureRole::generic);

        std::vector<KnotFamilyRecord> base;
        int group = 0;
        for (const OrbitData* od : {&plus, &minus}) {
            base.push_back(x_leg(od->sigma, c, group));
            auto w = wings(model, *od, group);
            base.insert(base.end(), w.begin(), w.end());
            ++group;
        }
        std::optional<Int> threshold;
        if (special) threshold = checked_sub(checked_sub(pq, k.p), k.q);
        if (plus.towers) {
            s.families = tower(base, 0, max_torsion2, threshold);
        } else {
            s.families = base;
        }
        if (exceptional) {
            if (c != e) throw std::logic_error("exceptional crossing off its expected place");
            KnotFamilyRecord le;
            le.kind = FamilyKind::extra_Le;
            le.label = "Le";
            le.group = group;
            le.tb_max = e;
            le.tb_min = e;
            le.stab_plus = "becomes:L+";
            le.stab_minus = "becomes:L-";
            s.families.push_back(le);
        }
        out.push_back(s);

        if (plus.towers) half_lutz(s, plus, minus, c, threshold);
    }

    void half_lutz(const StructureRecord& parent, const OrbitData& plus, const OrbitData& minus, Int c,
                   std::optional<Int> threshold) {
        StructureRecord h;
        h.d3 = half_lutz_d3(model, plus.orbit.key, plus.d3);
        h.role = threshold ? StructureRole::special_half_lutz : StructureRole::half_lutz;
        h.orbits = parent.orbits;
        h.notes.push_back("half Lutz twist of the d3=" + std::to_string(parent.d3) + " towers");
        std::vector<KnotFamilyRecord> base;
        int group = 0;
        for (const OrbitData* od : {&plus, &minus}) base.push_back(x_leg(od->sigma, -c, group++));
        h.families = tower(base, 1, max_torsion2, threshold);
        out.push_back(h);
    }

    // pq > 0, orbit containing the totally consistent member: infinite V plus diamonds.
    void exceptional_positive(StructureRecord& s, const OrbitData& plus, const OrbitData& minus) {
        const Knot& k = model.knot();
        const Int pq = k.pq();
        const Int v = checked_add(checked_sub(checked_sub(pq, k.p), k.q), 2);
        s.exceptional = true;
        s.role = StructureRole::exceptional;
        for (int sigma : {1, -1}) {
            KnotFamilyRecord f;
            f.kind = sigma > 0 ? FamilyKind::v_leg_plus : FamilyKind::v_leg_minus;
            f.label = "V" + sign_char(sigma);
            f.tb_min = checked_add(v, 1);
            f.rot_slope = -sigma;
            f.rot_intercept = checked_mul(sigma, v);
            f.sigma = sigma;
            set_stabs(f, sigma, "stays", "loose");
            s.families.push_back(f);
        }
        KnotFamilyRecord vert;
        vert.kind = FamilyKind::v_vertex;
        vert.label = "V0";
        vert.tb_max = v;
        vert.tb_min = v;
        vert.stab_plus = "loose";
        vert.stab_minus = "loose";
        s.families.push_back(vert);
        for (const OrbitData* od : {&plus, &minus}) {
            const auto& levels = od->orbit.levels;
            for (std::size_t i = 1; i < levels.size(); ++i) {
                if (levels[i] != 0 && levels[i] < 3) continue;
                KnotFamilyRecord f;
                f.kind = FamilyKind::diamond_peak;
                f.label = member_label("D", levels[i],
                                       od->sigma);
                f.tb_max = pq;
                f.rot_intercept = od->R[i];
                f.sigma = od->sigma;
                f.floor = v;
                f.stab_plus = "merges";
                f.stab_minus = "merges";
                f.merge_offsets.push_back({levels[i], iabs(checked_sub(od->R[i], od->R[i - 1]))});
                s.families.push_back(f);
            }
        }
    }
};

std::vector<Int> line_candidates(int slope, Int intercept, std::optional<Int> lo, std::optional<Int> hi) {
    Int far = iabs(intercept) + 1;
    if (lo) far = std::max(far, iabs(*lo) + 1);
    if (hi) far = std::max(far, iabs(*hi) + 1);
    std::vector<Int> c = {0, -slope * intercept, far, -far};
    if (lo) c.push_back(*lo);
    if (hi) c.push_back(*hi);
    std::vector<Int> out;
    for (Int t : c)
        if ((!lo || t >= *lo) && (!hi || t <= *hi)) out.push_back(t);
    return out;
}

// tb values at which the family can reach its largest |rot| - |tb|.
std::vector<Int> extreme_tbs(const KnotFamilyRecord& f) {
    if (is_point(f.kind)) return {*f.tb_max};
    if (f.kind == FamilyKind::diamond_peak) {
        std::vector<Int> out;
        for (Int t = f.floor; t <= *f.tb_max; ++t) out.push_back(t);
        return out;
    }
    if (f.kind == FamilyKind::wing_peak) {
        std::vector<Int> out;
        for (int b = 0; b <= f.depth; ++b) {
            Int icpt = f.rot_intercept - 2 * f.sigma * b;
            auto c = line_candidates(f.rot_slope, icpt, f.tb_min, *f.tb_max - b);
            out.insert(out.end(), c.begin(), c.end());
        }
        return out;
    }
    return line_candidates(f.rot_slope, f.rot_intercept, f.tb_min, f.tb_max);
}

}  // namespace

std::string to_string(FamilyKind k) {
    for (const auto& [kind, name] : kind_names)
        if (kind == k) return name;
    throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_string(const std::string& s) {
    for (const auto& [kind, name] : kind_names)
        if (name == s) return kind;
    throw std::invalid_argument("unknown family kind: " + s);
}

std::string to_string(StructureRole r) {
    for (const auto& [role, name] : role_names)
        if (role == r) return name;
    throw std::logic_error("unknown structure role");
}

StructureRole structure_role_from_string(const std::string& s) {
    for (const auto& [role, name] : role_names)
        if (name == s) return role;
    throw std::invalid_argument("unknown structure role: " + s);
}

std::optional<Int> KnotFamilyRecord::rot_at_tbmax() const {
    if (!tb_max) return std::nullopt;
    if (is_point(kind) || kind == FamilyKind::diamond_peak) return rot_intercept;
    return checked_add(checked_mul(rot_slope, *tb_max), rot_intercept);
}

std::vector<Int> rots_at(const KnotFamilyRecord& f, Int tb) {
    std::vector<Int> out;
    if (f.tb_min && tb < *f.tb_min) return out;
    if (f.tb_max && tb > *f.tb_max) return out;
    switch (f.kind) {
    case FamilyKind::v_vertex:
    case FamilyKind::extra_Le:
        out.push_back(f.rot_intercept);
        break;
    case FamilyKind::diamond_peak: {
        Int reach = checked_sub(*f.tb_max, tb);
        for (Int r = f.rot_intercept - reach; r <= f.rot_intercept + reach; r += 2)
            if (tb - iabs(r) >= f.floor) out.push_back(r);
        break;
    }
    case FamilyKind::wing_peak:
        for (int b = 0; b <= f.depth; ++b)
            if (tb <= *f.tb_max - b) out.push_back(f.rot_slope * tb + f.rot_intercept - 2 * f.sigma * b);
        break;
    default:
        out.push_back(checked_add(checked_mul(f.rot_slope, tb), f.rot_intercept));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int wing_extent(const KnotModel& model, int level) {
    if (level < 2 || static_cast<std::size_t>(level) > model.far.size() + 1) {
        throw std::out_of_range("wing extent needs a level between 2 and the block count plus one");
    }
    return model.far[level - 2].n;
}

Atlas classify(Int p, Int q, int max_torsion2) {
    if (max_torsion2 < 0) throw std::invalid_argument("max_torsion2 must be non-negative");
    KnotModel model = make_model(p, q);
    Atlas atlas;
    atlas.knot = model.knot();
    atlas.max_torsion2 = max_torsion2;
    atlas.counts = {count_m(p, q), count_n(p, q), count_totally_2_inconsistent(p, q)};

    const SurgeryFrame frame = make_frame(model);
    std::map<DecoratedPathPair, OrbitData> by_key;
    for (auto& o : compatibility_orbits(model)) {
        DecoratedPathPair key = o.key;
        by_key.emplace(key, orbit_data(model, frame, std::move(o)));
    }
    Assembly asm_{model, max_torsion2, {}};
    for (const auto& [key, od] : by_key) {
        if (od.sigma < 0) continue;
        auto partner = by_key.find(negate(model, key));
        if (partner == by_key.end()) throw std::logic_error("orbit without a mirror orbit");
        if (partner->second.d3 != od.d3) throw std::logic_error("mirror orbits disagree on d3");
        asm_.orbit_pair(od, partner->second);
    }
    auto& structures = asm_.out;
    std::stable_sort(structures.begin(), structures.end(),
                     [](const StructureRecord& a, const StructureRecord& b) { return a.d3 > b.d3; });
    std::map<Int, int> per_d3;
    for (const auto& s : structures) ++per_d3[s.d3];
    for (auto& s : structures) {
        if (per_d3[s.d3] > 1) s.notes.push_back("shares d3 with another range; conjecturally distinct structures");
    }
    atlas.structures = std::move(structures);
    for (const auto& s : atlas.structures) {
        auto cls = transverse_classes(s);
        if (!cls.empty()) atlas.transverse.push_back({s.d3, std::move(cls)});
    }
    return atlas;
}

std::vector<TransverseClass> transverse_classes(const StructureRecord& s) {
    // S- keeps a knot on lines of slope +1; those reaching tb -> -infinity survive the quotient.
    std::map<int, std::map<Int, std::string, std::greater<>>> by_torsion;
    for (const auto& f : s.families) {
        if (is_point(f.kind) || f.kind == FamilyKind::diamond_peak) continue;
        if (f.rot_slope != 1 || f.tb_min) continue;
        int lines = f.kind == FamilyKind::wing_peak ? f.depth : 0;
        for (int b = 0; b <= lines; ++b) {
            Int sl = checked_add(-f.rot_intercept, 2 * f.sigma * b);
            by_torsion[f.torsion2].emplace(sl, f.label);
        }
    }
    std::vector<TransverseClass> out;
    for (const auto& [t2, sls] : by_torsion) {
        for (const auto& [sl, origin] : sls) {
            TransverseClass c;
            c.sl = sl;
            c.torsion2 = t2;
            c.next = sls.count(sl - 2) ? "sl=" + std::to_string(sl - 2) : "loose";
            c.origin = origin;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<TransverseRecord> transverse_classify(Int p, Int q, int max_torsion2) {
    return classify(p, q, max_torsion2).transverse;
}

Int Window::cells() const {
    if (tb_max < tb_min || rot_max < rot_min) return 0;
    return checked_mul(tb_max - tb_min + 1, rot_max - rot_min + 1);
}

Window default_window(const Atlas& atlas, Int d3) {
    const Knot& k = atlas.knot;
    const Int pq = k.pq();
    std::vector<Int> features;
    bool found = false;
    for (const auto& s : atlas.structures) {
        if (s.d3 != d3) continue;
        found = true;
        for (const auto& f : s.families) {
            if (f.tb_max) features.push_back(*f.tb_max);
            if (f.tb_min) features.push_back(*f.tb_min);
            if (f.rot_slope != 0) features.push_back(-f.rot_slope * f.rot_intercept);
        }
    }
    if (!found) throw std::invalid_argument("no structure with d3 = " + std::to_string(d3));
    Window w;
    w.tb_min = checked_sub(pq, checked_add(k.p, iabs(k.q)));
    w.tb_max = checked_add(pq, 5);
    for (Int t : features) {
        w.tb_min = std::min(w.tb_min, t - 2);
        w.tb_max = std::max(w.tb_max, t + 2);
    }
    Int reach = 0;
    for (const auto& s : atlas.structures) {
        if (s.d3 != d3) continue;
        for (const auto& f : s.families) {
            for (Int t : {w.tb_min, w.tb_max})
                for (Int r : rots_at(f, t)) reach = std::max(reach, iabs(r));
            for (Int t : features)
                if (t >= w.tb_min && t <= w.tb_max)
                    for (Int r : rots_at(f, t)) reach = std::max(reach, iabs(r));
        }
    }
    w.rot_min = -reach - 1;
    w.rot_max = reach + 1;
    return w;
}

MountainRange mountain_range(const Atlas& atlas, Int d3) { return mountain_range(atlas, d3, default_window(atlas, d3)); }

MountainRange mountain_range(const Atlas& atlas, Int d3, const Window& window) {
    MountainRange mr;
    mr.knot = atlas.knot;
    mr.d3 = d3;
    mr.window = window;
    struct Cell {
        std::set<std::pair<int, int>> groups;
        bool towers = false;
        bool extra = false;
        std::vector<std::string> refs;
    };
    std::map<std::pair<Int, Int>, Cell> cells;  // (-tb, rot)
    int index = 0;
    int matched = 0;
    for (const auto& s : atlas.structures) {
        ++index;
        if (s.d3 != d3) continue;
        ++matched;
        for (const auto& n : s.notes) mr.notes.push_back(n);
        for (const auto& f : s.families) {
            Int hi = f.tb_max ? std::min(*f.tb_max, window.tb_max) : window.tb_max;
            Int lo = f.tb_min ? std::max(*f.tb_min, window.tb_min) : window.tb_min;
            for (Int tb = hi; tb >= lo; --tb) {
                for (Int r : rots_at(f, tb)) {
                    if (r < window.rot_min || r > window.rot_max) continue;
                    Cell& c = cells[{-tb, r}];
                    c.groups.insert({index, f.group});
                    c.towers = c.towers || f.torsion_unbounded;
                    c.extra = c.extra || f.kind == FamilyKind::extra_Le;
                    if (std::find(c.refs.begin(), c.refs.end(), f.label) == c.refs.end()) c.refs.push_back(f.label);
                }
            }
        }
    }
    if (matched == 0) throw std::invalid_argument("no structure with d3 = " + std::to_string(d3));
    std::sort(mr.notes.begin(), mr.notes.end());
    mr.notes.erase(std::unique(mr.notes.begin(), mr.notes.end()), mr.notes.end());
    if (matched > 1) mr.notes.push_back(std::to_string(matched) + " ranges overlaid");
    for (auto& [key, c] : cells) {
        LatticePoint pt;
        pt.tb = -key.first;
        pt.rot = key.second;
        pt.multiplicity = static_cast<int>(c.groups.size());
        pt.towers = c.towers;
        pt.extra = c.extra;
        pt.refs = std::move(c.refs);
        mr.points.push_back(std::move(pt));
    }
    return mr;
}

bool family_within_bound(const KnotFamilyRecord& f, const Knot& knot) {
    const Int bound = iabs(knot.pq()) - knot.p - iabs(knot.q);
    for (Int tb : extreme_tbs(f))
        for (Int r : rots_at(f, tb))
            if (iabs(r) - iabs(tb) > bound) return false;
    return true;
}

}  // namespace torusknot
