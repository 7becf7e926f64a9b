#pragma once

#include <string>
#include <vector>

#include "torusknot/atlas.hpp"

namespace torusknot {

// Outcome of one property suite over a grid of knots.
struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // first few messages only

    bool ok() const { return failure_count == 0; }
    void fail(const std::string& message);
};

// Everything the suites need about one knot, computed once.
struct KnotCase {
    KnotModel model;
    SurgeryFrame frame;
    std::vector<DecoratedPathPair> decorations;
    std::vector<Orbit> orbits;
    Atlas atlas;
};

KnotCase make_case(Int p, Int q, int max_torsion2 = 2);

// Coprime (p, q) with 1 < p <= pmax, p < |q| <= qmax, both signs of q.
std::vector<Knot> knot_grid(Int pmax, Int qmax);
std::vector<KnotCase> make_cases(const std::vector<Knot>& grid, int max_torsion2 = 2);

// R against the surgery rotation for every class, and R injective per knot.
CheckResult check_dual_rot(const std::vector<KnotCase>& cases);
// Enumeration, 2-inconsistent, totally 2-inconsistent and tight counts.
CheckResult check_counts(const std::vector<KnotCase>& cases);
// Standard decorations, mirror symmetry of d3, parity of every structure.
CheckResult check_structural(const std::vector<KnotCase>& cases);
// -|tb| + |rot| <= |pq| - |p| - |q| for every family.
CheckResult check_bound(const std::vector<KnotCase>& cases);
// d3 constant along orbits, tower orbits are singletons, merge offsets 2n'.
CheckResult check_orbits(const std::vector<KnotCase>& cases);
// Exceptional structure, crossings, knot counts at and above tb = pq,
// structure count bounds and the diamond law.
CheckResult check_atlas_shape(const std::vector<KnotCase>& cases);

std::vector<CheckResult> run_property_suites(const std::vector<KnotCase>& cases);

// Torsion of the structure's knots at tb = pq, doubled.
int torsion2_at_pq(const StructureRecord& s, const Knot& knot);

// Number of knots with torsion zero at the given tb, summed over structures;
// coinciding families of one group count once.
Int knots_at(const Atlas& atlas, Int tb);

}  // namespace torusknot
