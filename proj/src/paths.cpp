#include "torusknot/paths.hpp"

#include <numeric>
#include <stdexcept>

namespace torusknot {

Knot validate_knot(Int p, Int q) {
    Int aq = q < 0 ? checked_sub(0, q) : q;
    if (p <= 1 || aq <= p || std::gcd(p, aq) != 1) {
        throw std::invalid_argument("(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") violates the standing hypothesis |q| > p > 1 with gcd(p,q) = 1");
    }
    return Knot{p, q};
}

PathPair build_pair(Int p, Int q) {
    PathPair pair;
    pair.knot = validate_knot(p, q);
    pair.cf = cf_expand(pair.knot.slope());
    const auto& ds = pair.cf.digits;

    for (std::size_t k = ds.size(); k >= 1; --k) {
        pair.p1.vertices.push_back(cf_value(std::vector<Int>(ds.begin(), ds.begin() + k)));
    }

    pair.p2.vertices.push_back(pair.knot.slope());
    std::vector<Int> cur = ds;
    const Slope minus_one = make_slope(-1, 1);
    while (true) {
        cur.back() = checked_add(cur.back(), 1);
        while (cur.size() > 1 && cur.back() == -1) {
            cur.pop_back();
            cur.back() = checked_add(cur.back(), 1);
        }
        Slope v = cf_value(cur);
        pair.p2.vertices.push_back(v);
        if (q < 0) {
            if (v == minus_one) break;
        } else if (cur.size() == 1) {
            pair.p2.vertices.push_back(infinity());
            break;
        }
    }
    return pair;
}

FareyPath truncate_p2(const PathPair& pair) {
    if (pair.knot.q > 0) throw std::domain_error("P2 is only truncated when pq < 0");
    return truncated_p2(pair);
}

FareyPath truncated_p2(const PathPair& pair) {
    if (pair.knot.q > 0) return pair.p2;
    Slope ceiling = make_slope(ceil_div(pair.knot.q, pair.knot.p), 1);
    FareyPath out;
    for (const auto& v : pair.p2.vertices) {
        out.vertices.push_back(v);
        if (v == ceiling) return out;
    }
    throw std::logic_error("P2 does not pass through ceil(q/p)");
}

namespace {

std::vector<std::vector<std::size_t>> edge_runs(const FareyPath& path) {
    std::vector<std::vector<std::size_t>> runs;
    std::size_t n = path.edge_count();
    if (n == 0) return runs;
    std::vector<std::size_t> cur{0};
    for (std::size_t i = 1; i < n; ++i) {
        Int d = dot(path.vertices[i - 1], path.vertices[i + 1]);
        if (d == 2 || d == -2) {
            cur.push_back(i);
        } else {
            runs.push_back(cur);
            cur = {i};
        }
    }
    runs.push_back(cur);
    return runs;
}

Block make_block(const FareyPath& path, Side side, std::vector<std::size_t> edges) {
    Block b;
    b.side = side;
    for (std::size_t i = edges.front(); i <= edges.back() + 1; ++i) b.vertices.push_back(path.vertices[i]);
    b.edges = std::move(edges);
    return b;
}

}  // namespace

BlockDecomposition decompose_blocks(const PathPair& pair) {
    FareyPath p2t = truncated_p2(pair);
    auto runs_a = edge_runs(pair.p1);
    auto runs_b = edge_runs(p2t);

    BlockDecomposition out;
    bool a_turn = !(runs_b.front().size() == 1);
    out.short_side = a_turn ? ShortSide::A_first : ShortSide::B_first;

    std::size_t ia = 0, ib = 0;
    while (ia < runs_a.size() || ib < runs_b.size()) {
        bool take_a = a_turn ? ia < runs_a.size() : ib >= runs_b.size();
        Block b = take_a ? make_block(pair.p1, Side::A, runs_a[ia++]) : make_block(p2t, Side::B, runs_b[ib++]);
        b.index = static_cast<int>(out.blocks.size()) + 1;
        out.blocks.push_back(std::move(b));
        a_turn = !a_turn;
    }

    std::size_t first = p2t.edge_count();
    if (first < pair.p2.edge_count()) {
        std::vector<std::size_t> edges(pair.p2.edge_count() - first);
        std::iota(edges.begin(), edges.end(), first);
        out.suffix = make_block(pair.p2, Side::B, std::move(edges));
    }
    return out;
}

std::vector<FarSlope> block_far_slopes(const PathPair& pair) { return block_far_slopes(pair, decompose_blocks(pair)); }

std::vector<FarSlope> block_far_slopes(const PathPair& pair, const BlockDecomposition& blocks) {
    std::vector<FarSlope> out;
    Slope r = pair.knot.slope();
    for (const auto& b : blocks.blocks) {
        Int d = dot(b.vertices.back(), r);
        out.push_back({b.index, b.vertices.back(), d < 0 ? -d : d});
    }
    return out;
}

ShortenResult shorten(const SignedPath& input, std::size_t anchor) {
    if (input.signs.size() != input.path.edge_count()) throw std::invalid_argument("one sign per edge required");
    ShortenResult res;
    res.path = input;
    auto& vs = res.path.path.vertices;
    auto& ss = res.path.signs;
    while (true) {
        std::optional<std::size_t> best;
        std::size_t best_dist = 0;
        for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
            if (!is_edge(vs[i - 1], vs[i + 1])) continue;
            std::size_t dist = i > anchor ? i - anchor : anchor - i;
            if (!best || dist < best_dist) {
                best = i;
                best_dist = dist;
            }
        }
        if (!best) return res;
        std::size_t i = *best;
        if (ss[i - 1] != ss[i]) {
            res.overtwisted = true;
            return res;
        }
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(i));
        ss.erase(ss.begin() + static_cast<std::ptrdiff_t>(i));
        if (anchor >= i && anchor > 0) --anchor;
    }
}

std::string path_string(const FareyPath& path) {
    std::string s = "{";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        if (i) s += ", ";
        s += path.vertices[i].str();
    }
    return s + "}";
}

}  // namespace torusknot
