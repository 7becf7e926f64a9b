#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusknot/paths.hpp"

namespace torusknot {

// Everything derived from (p, q) alone, computed once and shared.
struct KnotModel {
    PathPair pair;
    BlockDecomposition blocks;
    std::vector<FarSlope> far;

    const Knot& knot() const { return pair.knot; }
    std::size_t block_count() const { return blocks.blocks.size(); }
    bool has_suffix() const { return blocks.suffix.has_value(); }
    // Indexed blocks followed by the suffix when present.
    std::vector<const Block*> all_blocks() const;
};

KnotModel make_model(Int p, Int q);

// Signs per edge of P1 and P2, +1 or -1, kept canonical: inside every block
// the + signs come first.
struct DecoratedPathPair {
    std::vector<int> signs1;
    std::vector<int> signs2;

    friend bool operator==(const DecoratedPathPair&, const DecoratedPathPair&) = default;
    friend auto operator<=>(const DecoratedPathPair&, const DecoratedPathPair&) = default;
};

// Number of + signs per block in all_blocks() order; this is the class key.
std::vector<int> plus_counts(const KnotModel& model, const DecoratedPathPair& d);
DecoratedPathPair from_plus_counts(const KnotModel& model, const std::vector<int>& counts);
DecoratedPathPair canonicalize(const KnotModel& model, std::vector<int> signs1, std::vector<int> signs2);
DecoratedPathPair negate(const KnotModel& model, const DecoratedPathPair& d);

// "P1:-+|P2:++-", each side in path order starting next to q/p.
std::string to_string(const DecoratedPathPair& d);
// Tuple form with P1 reversed then P2, e.g. "(+,-,+,-,-)".
std::string to_tuple(const DecoratedPathPair& d);
// Accepts either of the two forms above; "-" or U+2212 for minus.
DecoratedPathPair parse_decoration(const KnotModel& model, const std::string& text);

std::vector<DecoratedPathPair> enumerate_decorations(const KnotModel& model);

struct ConsistencyClass {
    int level = 0;  // 0 totally consistent, otherwise the i of i-inconsistent
    bool totally_2_inconsistent = false;
    bool tight = false;  // pq < 0 with every indexed block sharing one sign

    bool totally_consistent() const { return level == 0; }
};

ConsistencyClass classify_consistency(const KnotModel& model, const DecoratedPathPair& d);

// One compatibility shuffle toward the 2-inconsistent member; nullopt at a
// 2-inconsistent or tight class.
std::optional<DecoratedPathPair> shuffle_down(const KnotModel& model, const DecoratedPathPair& d);

struct Orbit {
    DecoratedPathPair key;                   // the 2-inconsistent member
    std::vector<DecoratedPathPair> members;  // key first, then by rising level, totally consistent last
    std::vector<int> levels;                 // level per member, 0 for totally consistent
};

// All orbits of non-tight classes, ordered by their key.
std::vector<Orbit> compatibility_orbits(const KnotModel& model);
// Orbit containing d; a tight class yields a one-member pseudo-orbit keyed by itself.
Orbit compatibility_orbit(const KnotModel& model, const DecoratedPathPair& d);

Int count_m(Int p, Int q);
Int count_n(Int p, Int q);
Int count_totally_2_inconsistent(Int p, Int q);
Int tight_count_lens(Int p, Int q);

}  // namespace torusknot
