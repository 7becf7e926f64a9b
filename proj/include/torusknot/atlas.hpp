#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusknot/invariants.hpp"

namespace torusknot {

enum class FamilyKind {
    x_leg_plus,
    x_leg_minus,
    v_leg_plus,
    v_leg_minus,
    v_vertex,
    wing_peak,
    diamond_peak,
    extra_Le,
    torsion_member
};

std::string to_string(FamilyKind k);
FamilyKind family_kind_from_string(const std::string& s);

// One family of non-loose Legendrian knots. Geometry by kind:
//  legs and torsion members: the line rot = rot_slope * tb + rot_intercept on [tb_min, tb_max];
//  wing_peak: lines b = 0..depth, each rot = rot_slope * tb + rot_intercept - 2 sigma b for tb <= tb_max - b;
//  diamond_peak: peak rot_intercept at tb_max; every rot within tb_max - tb of it, of the
//  peak's parity, on or above the V whose vertex sits at tb = floor;
//  v_vertex, extra_Le: the single point (rot_intercept, tb_max).
struct KnotFamilyRecord {
    FamilyKind kind = FamilyKind::x_leg_plus;
    std::string label;
    int group = 0;  // families sharing a group are one knot where they overlap
    std::optional<Int> tb_max;  // nullopt means unbounded above
    std::optional<Int> tb_min;  // nullopt means unbounded below
    int rot_slope = 0;
    Int rot_intercept = 0;
    int torsion2 = 0;  // twice the Giroux torsion
    bool torsion_unbounded = false;
    std::string stab_plus;   // "stays", "loose", "merges" or "becomes:<label>"
    std::string stab_minus;
    std::vector<std::pair<int, Int>> merge_offsets;  // (member level, distance to its neighbour peak)
    int depth = 0;
    int sigma = 0;
    Int floor = 0;

    std::optional<Int> rot_at_tbmax() const;
    friend bool operator==(const KnotFamilyRecord&, const KnotFamilyRecord&) = default;
};

// Rotation numbers of the family's knots at the given tb, ascending.
std::vector<Int> rots_at(const KnotFamilyRecord& f, Int tb);

enum class StructureRole { generic, exceptional, special, half_lutz, special_half_lutz };
std::string to_string(StructureRole r);
StructureRole structure_role_from_string(const std::string& s);

struct StructureRecord {
    Int d3 = 0;
    bool exceptional = false;
    StructureRole role = StructureRole::generic;
    std::vector<std::string> orbits;  // decoration strings of the orbit keys
    std::vector<KnotFamilyRecord> families;
    std::vector<std::string> notes;

    friend bool operator==(const StructureRecord&, const StructureRecord&) = default;
};

struct TransverseClass {
    Int sl = 0;
    int torsion2 = 0;
    std::string next;    // "loose" or "sl=<value>"
    std::string origin;  // label of the Legendrian family

    friend bool operator==(const TransverseClass&, const TransverseClass&) = default;
};

struct TransverseRecord {
    Int d3 = 0;
    std::vector<TransverseClass> classes;

    friend bool operator==(const TransverseRecord&, const TransverseRecord&) = default;
};

struct AtlasCounts {
    Int m = 0;
    Int n = 0;
    Int totally2 = 0;

    friend bool operator==(const AtlasCounts&, const AtlasCounts&) = default;
};

struct Atlas {
    Knot knot;
    AtlasCounts counts;
    int max_torsion2 = 0;
    std::vector<StructureRecord> structures;
    std::vector<TransverseRecord> transverse;

    friend bool operator==(const Atlas&, const Atlas&) = default;
};

Atlas classify(Int p, Int q, int max_torsion2 = 2);

// Number of doomed-sign stabilizations a level-k orbit member survives: n_{k-1}.
Int wing_extent(const KnotModel& model, int level);

std::vector<TransverseRecord> transverse_classify(Int p, Int q, int max_torsion2 = 2);
std::vector<TransverseClass> transverse_classes(const StructureRecord& s);

struct LatticePoint {
    Int rot = 0;
    Int tb = 0;
    int multiplicity = 0;
    bool towers = false;
    bool extra = false;
    std::vector<std::string> refs;
};

struct Window {
    Int tb_min = 0, tb_max = 0, rot_min = 0, rot_max = 0;

    Int cells() const;
};

struct MountainRange {
    Knot knot;
    Int d3 = 0;
    Window window;
    std::vector<LatticePoint> points;  // tb descending, rot ascending
    std::vector<std::string> notes;
};

// Window spanning every crossing, vertex and peak of the ranges with this d3.
Window default_window(const Atlas& atlas, Int d3);
MountainRange mountain_range(const Atlas& atlas, Int d3);
MountainRange mountain_range(const Atlas& atlas, Int d3, const Window& window);

// Checks -|tb| + |rot| <= |pq| - |p| - |q| over every point of the family.
bool family_within_bound(const KnotFamilyRecord& f, const Knot& knot);

}  // namespace torusknot
