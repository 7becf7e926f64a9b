#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torusknot/farey.hpp"

namespace torusknot {

// A torus knot class; the standing hypothesis is |q| > p > 1 with gcd 1.
struct Knot {
    Int p = 0;
    Int q = 0;

    Int pq() const { return checked_mul(p, q); }
    bool positive() const { return q > 0; }
    Slope slope() const { return make_slope(q, p); }
    friend bool operator==(const Knot&, const Knot&) = default;
};

// Throws std::invalid_argument citing the hypothesis when (p, q) is outside it.
Knot validate_knot(Int p, Int q);

struct FareyPath {
    std::vector<Slope> vertices;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct PathPair {
    Knot knot;
    CFExpansion cf;  // expansion of q/p in its regime
    FareyPath p1;    // q/p anticlockwise to floor(q/p)
    FareyPath p2;    // q/p clockwise to -1 (pq < 0) or to infinity (pq > 0)
};

PathPair build_pair(Int p, Int q);

// Prefix of P2 ending at ceil(q/p). Only meaningful for pq < 0; throws
// std::domain_error otherwise. truncated_p2 returns all of P2 when pq > 0.
FareyPath truncate_p2(const PathPair& pair);
FareyPath truncated_p2(const PathPair& pair);

enum class Side { A, B };  // A lives on P1, B on P2

// A maximal run of edges in which consecutive vertices two apart are still
// joined by an edge; the whole run shares a pivot vertex.
struct Block {
    int index = 0;  // 1-based interleaved index, 0 for the unindexed suffix
    Side side = Side::A;
    std::vector<std::size_t> edges;  // edge positions along p1 or p2
    std::vector<Slope> vertices;

    std::size_t length() const { return edges.size(); }
};

enum class ShortSide { A_first, B_first };

struct BlockDecomposition {
    std::vector<Block> blocks;   // in index order 1..N
    std::optional<Block> suffix; // pq < 0: the stretch of P2 from ceil(q/p) to -1
    ShortSide short_side = ShortSide::A_first;
};

BlockDecomposition decompose_blocks(const PathPair& pair);

struct FarSlope {
    int k = 0;
    Slope s;
    Int n = 0;
};

// For each indexed block k, the vertex farthest from q/p and n_k = |s_k . q/p|.
std::vector<FarSlope> block_far_slopes(const PathPair& pair);
std::vector<FarSlope> block_far_slopes(const PathPair& pair, const BlockDecomposition& blocks);

struct SignedPath {
    FareyPath path;
    std::vector<int> signs;  // +1 or -1 per edge
};

struct ShortenResult {
    bool overtwisted = false;
    SignedPath path;  // the minimal path when not overtwisted
};

// Removes vertices whose neighbours share an edge, nearest to `anchor` first,
// merging the two incident edges when their signs agree. Opposite signs at a
// removable vertex report an overtwisted result.
ShortenResult shorten(const SignedPath& path, std::size_t anchor = 0);

std::string path_string(const FareyPath& path);

}  // namespace torusknot
