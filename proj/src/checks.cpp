#include "torusknot/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace torusknot {

namespace {

constexpr std::size_t kKeptFailures = 8;

std::string knot_tag(const Knot& k) { return "(" + std::to_string(k.p) + "," + std::to_string(k.q) + ") "; }

Int iabs(Int x) { return x < 0 ? checked_sub(0, x) : x; }

DecoratedPathPair uniform(const KnotModel& model, int s1, int s2) {
    return canonicalize(model, std::vector<int>(model.pair.p1.edge_count(), s1),
                        std::vector<int>(model.pair.p2.edge_count(), s2));
}

Int class_d3(const KnotCase& c, const DecoratedPathPair& d) {
    return d3(c.frame, compile_diagram(c.model, d).rotation_vector());
}

}  // namespace

void CheckResult::fail(const std::string& message) {
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(message);
}

KnotCase make_case(Int p, Int q, int max_torsion2) {
    KnotCase c{make_model(p, q), {}, {}, {}, {}};
    c.frame = make_frame(c.model);
    c.decorations = enumerate_decorations(c.model);
    c.orbits = compatibility_orbits(c.model);
    c.atlas = classify(p, q, max_torsion2);
    return c;
}

std::vector<Knot> knot_grid(Int pmax, Int qmax) {
    std::vector<Knot> out;
    for (Int q = 3; q <= qmax; ++q)
        for (Int p = 2; p < q && p <= pmax; ++p)
            if (std::gcd(p, q) == 1) {
                out.push_back({p, q});
                out.push_back({p, -q});
            }
    return out;
}

std::vector<KnotCase> make_cases(const std::vector<Knot>& grid, int max_torsion2) {
    std::vector<KnotCase> out;
    out.reserve(grid.size());
    for (const auto& k : grid) out.push_back(make_case(k.p, k.q, max_torsion2));
    return out;
}

CheckResult check_dual_rot(const std::vector<KnotCase>& cases) {
    CheckResult r{"dual rotation", 0, 0, {}};
    for (const auto& c : cases) {
        std::set<Int> seen;
        for (const auto& d : c.decorations) {
            ++r.cases;
            Int R = rotation_data(c.model, d).R;
            Int surgered = rot_surgered(c.frame, compile_diagram(c.model, d).rotation_vector());
            if (R != surgered) {
                r.fail(knot_tag(c.model.knot()) + to_tuple(d) + " R=" + std::to_string(R) +
                       " surgery=" + std::to_string(surgered));
            }
            if (!seen.insert(R).second) r.fail(knot_tag(c.model.knot()) + "repeated R=" + std::to_string(R));
        }
    }
    return r;
}

CheckResult check_counts(const std::vector<KnotCase>& cases) {
    CheckResult r{"counts", 0, 0, {}};
    for (const auto& c : cases) {
        ++r.cases;
        const Knot& k = c.model.knot();
        Int level2 = 0, totally = 0, tight = 0;
        for (const auto& d : c.decorations) {
            auto cls = classify_consistency(c.model, d);
            level2 += cls.level == 2;
            totally += cls.totally_2_inconsistent;
            tight += cls.tight;
        }
        auto expect = [&](const std::string& what, Int got, Int want) {
            if (got != want) r.fail(knot_tag(k) + what + " " + std::to_string(got) + " != " + std::to_string(want));
        };
        expect("classes", static_cast<Int>(c.decorations.size()), count_m(k.p, k.q));
        expect("2-inconsistent", level2, 2 * count_n(k.p, k.q));
        expect("totally 2-inconsistent", totally, count_totally_2_inconsistent(k.p, k.q));
        expect("tight", tight, k.pq() < 0 ? 2 * iabs(ceil_div(k.q, k.p)) : 0);
    }
    return r;
}

int torsion2_at_pq(const StructureRecord& s, const Knot& knot) {
    int best = -1;
    for (const auto& f : s.families)
        if (!rots_at(f, knot.pq()).empty() && (best < 0 || f.torsion2 < best)) best = f.torsion2;
    return best;
}

CheckResult check_structural(const std::vector<KnotCase>& cases) {
    CheckResult r{"structural identities", 0, 0, {}};
    for (const auto& c : cases) {
        const Knot& k = c.model.knot();
        const Int pq = k.pq();
        ++r.cases;
        Int same = class_d3(c, uniform(c.model, 1, 1));
        if (same != (pq < 0 ? 0 : 1)) r.fail(knot_tag(k) + "all-same d3 " + std::to_string(same));
        Int split = class_d3(c, uniform(c.model, 1, -1));
        Int want = pq < 0 ? iabs(pq) - k.p - iabs(k.q) + 1 : -pq + k.p + k.q;
        if (split != want) r.fail(knot_tag(k) + "split d3 " + std::to_string(split) + " != " + std::to_string(want));
        for (const auto& d : c.decorations) {
            ++r.cases;
            if (class_d3(c, d) != class_d3(c, negate(c.model, d))) r.fail(knot_tag(k) + "mirror d3 " + to_tuple(d));
        }
        for (const auto& s : c.atlas.structures) {
            ++r.cases;
            int t2 = torsion2_at_pq(s, k);
            if (t2 < 0) {
                r.fail(knot_tag(k) + "no knot at tb=pq in d3=" + std::to_string(s.d3));
            } else if (!parity_ok(pq > 0 ? 1 : -1, t2 % 2 == 1, s.d3)) {
                r.fail(knot_tag(k) + "parity d3=" + std::to_string(s.d3) + " torsion2=" + std::to_string(t2));
            }
        }
    }
    return r;
}

CheckResult check_bound(const std::vector<KnotCase>& cases) {
    CheckResult r{"bound", 0, 0, {}};
    for (const auto& c : cases) {
        for (const auto& s : c.atlas.structures) {
            for (const auto& f : s.families) {
                ++r.cases;
                if (!family_within_bound(f, c.atlas.knot)) {
                    r.fail(knot_tag(c.atlas.knot) + "d3=" + std::to_string(s.d3) + " " + f.label);
                }
            }
        }
    }
    return r;
}

CheckResult check_orbits(const std::vector<KnotCase>& cases) {
    CheckResult r{"orbits", 0, 0, {}};
    for (const auto& c : cases) {
        const Knot& k = c.model.knot();
        for (const auto& o : c.orbits) {
            ++r.cases;
            Int key_d3 = class_d3(c, o.key);
            for (const auto& m : o.members)
                if (class_d3(c, m) != key_d3) r.fail(knot_tag(k) + "d3 varies in orbit of " + to_tuple(o.key));
            if (classify_consistency(c.model, o.key).totally_2_inconsistent && o.members.size() != 1) {
                r.fail(knot_tag(k) + "tower orbit " + to_tuple(o.key) + " has several members");
            }
            for (std::size_t i = 1; i < o.members.size(); ++i) {
                int level = o.levels[i];
                if (level < 3) continue;
                if (o.levels[i - 1] != level - 1) r.fail(knot_tag(k) + "orbit levels skip");
                const auto& far = c.model.far;
                Int n_prime = iabs(dot(farey_sum(far[level - 2].s, far[level - 3].s), k.slope()));
                Int gap = iabs(rotation_data(c.model, o.members[i]).R - rotation_data(c.model, o.members[i - 1]).R);
                if (gap != 2 * n_prime || n_prime != far[level - 2].n - far[level - 3].n) {
                    r.fail(knot_tag(k) + "merge offset " + std::to_string(gap) + " vs 2n'=" + std::to_string(2 * n_prime));
                }
            }
        }
    }
    return r;
}

Int knots_at(const Atlas& atlas, Int tb) {
    Int total = 0;
    for (const auto& s : atlas.structures) {
        std::map<Int, std::set<int>> groups;
        for (const auto& f : s.families) {
            if (f.torsion2 != 0) continue;
            for (Int rot : rots_at(f, tb)) groups[rot].insert(f.group);
        }
        for (const auto& [rot, g] : groups) total += static_cast<Int>(g.size());
    }
    return total;
}

CheckResult check_atlas_shape(const std::vector<KnotCase>& cases) {
    CheckResult r{"atlas shape", 0, 0, {}};
    for (const auto& c : cases) {
        ++r.cases;
        const Atlas& a = c.atlas;
        const Knot& k = a.knot;
        const Int pq = k.pq();
        const Int n = count_n(k.p, k.q);
        const Int e = iabs(pq) - k.p - iabs(k.q);

        int exceptional = 0;
        for (const auto& s : a.structures) {
            if (!s.exceptional) continue;
            ++exceptional;
            if (s.d3 != (pq > 0 ? 1 : e + 1)) r.fail(knot_tag(k) + "exceptional d3 " + std::to_string(s.d3));
        }
        if (exceptional != 1) r.fail(knot_tag(k) + std::to_string(exceptional) + " exceptional structures");

        // Legs pass through rot = R of their orbit key at tb = pq.
        std::map<std::string, Int> key_r;
        for (const auto& o : c.orbits) key_r[to_string(o.key)] = rotation_data(c.model, o.key).R;
        for (const auto& s : a.structures) {
            if (s.role != StructureRole::generic && s.role != StructureRole::special &&
                s.role != StructureRole::exceptional)
                continue;
            for (const auto& f : s.families) {
                if (f.torsion2 != 0) continue;
                if (f.kind != FamilyKind::x_leg_plus && f.kind != FamilyKind::x_leg_minus) continue;
                const std::string& key = s.orbits.at(f.sigma > 0 ? 0 : 1);
                auto at = rots_at(f, pq);
                if (at.size() != 1 || at.front() != key_r[key]) r.fail(knot_tag(k) + "leg misses its peak " + f.label);
            }
        }

        Int at_pq = pq > 0 ? count_m(k.p, k.q) : count_m(k.p, k.q) - 2 * iabs(ceil_div(k.q, k.p));
        if (knots_at(a, pq) != at_pq) r.fail(knot_tag(k) + "knots at tb=pq " + std::to_string(knots_at(a, pq)));
        std::vector<Int> above;
        for (Int t = pq + 1; t <= pq + 6; ++t) above.push_back(t);
        if (pq < 0) above.push_back(e);
        for (Int t : above) {
            Int want = 2 * n + (pq < 0 && t == e ? 1 : 0);
            if (knots_at(a, t) != want) r.fail(knot_tag(k) + "knots at tb=" + std::to_string(t));
        }

        Int untwisted = 0;
        for (const auto& s : a.structures)
            untwisted += std::any_of(s.families.begin(), s.families.end(), [](const auto& f) { return f.torsion2 == 0; });
        if (untwisted > n) r.fail(knot_tag(k) + "too many structures without torsion");
        if (static_cast<Int>(a.structures.size()) > n + count_totally_2_inconsistent(k.p, k.q) / 2) {
            r.fail(knot_tag(k) + "too many structures");
        }

        // The totally consistent peak with positive rot survives S+^i S-^j exactly for i < p, j < q.
        if (pq > 0) {
            for (const auto& s : a.structures) {
                for (const auto& f : s.families) {
                    if (f.kind != FamilyKind::diamond_peak || f.merge_offsets.empty() || f.merge_offsets[0].first != 0)
                        continue;
                    Int along = f.rot_intercept > 0 ? k.p : k.q, across = f.rot_intercept > 0 ? k.q : k.p;
                    for (Int i = 0; i <= k.p + k.q; ++i)
                        for (Int j = 0; j <= k.p + k.q; ++j) {
                            auto rots = rots_at(f, pq - i - j);
                            bool in = std::binary_search(rots.begin(), rots.end(), f.rot_intercept + i - j);
                            if (in != (i < along && j < across)) {
                                r.fail(knot_tag(k) + "diamond " + f.label + " at S+^" + std::to_string(i) + " S-^" +
                                       std::to_string(j));
                            }
                        }
                }
            }
        }
    }
    return r;
}

std::vector<CheckResult> run_property_suites(const std::vector<KnotCase>& cases) {
    return {check_dual_rot(cases), check_counts(cases), check_structural(cases),
            check_bound(cases),    check_orbits(cases), check_atlas_shape(cases)};
}

}  // namespace torusknot
