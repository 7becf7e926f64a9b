#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "torusknot/paths.hpp"

using namespace torusknot;

namespace {

std::vector<Slope> slopes(std::initializer_list<std::pair<Int, Int>> v) {
    std::vector<Slope> out;
    for (auto [n, d] : v) out.push_back(make_slope(n, d));
    return out;
}

}  // namespace

TEST_CASE("knot validation cites the standing hypothesis") {
    CHECK_NOTHROW(validate_knot(5, -8));
    for (auto [p, q] : std::vector<std::pair<Int, Int>>{{1, 3}, {4, 6}, {3, 2}, {3, -3}, {0, 5}}) {
        try {
            validate_knot(p, q);
            FAIL("accepted (" << p << "," << q << ")");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("|q| > p > 1") != std::string::npos);
        }
    }
}

TEST_CASE("path pairs of (5,8) and (5,-8)") {
    PathPair pos = build_pair(5, 8);
    CHECK(pos.p1.vertices == slopes({{8, 5}, {3, 2}, {1, 1}}));
    CHECK(pos.p2.vertices == slopes({{8, 5}, {5, 3}, {2, 1}, {1, 0}}));
    CHECK(path_string(pos.p1) == "{8/5, 3/2, 1}");

    PathPair neg = build_pair(5, -8);
    CHECK(neg.p1.vertices == slopes({{-8, 5}, {-5, 3}, {-2, 1}}));
    CHECK(neg.p2.vertices == slopes({{-8, 5}, {-3, 2}, {-1, 1}}));
}

TEST_CASE("path pairs of (2,-(2n+1))") {
    for (Int n = 1; n <= 10; ++n) {
        PathPair pair = build_pair(2, -(2 * n + 1));
        CHECK(pair.p1.vertices == slopes({{-(2 * n + 1), 2}, {-n - 1, 1}}));
        REQUIRE(pair.p2.vertices.size() == static_cast<std::size_t>(n + 1));
        CHECK(pair.p2.vertices.front() == make_slope(-(2 * n + 1), 2));
        for (Int j = 1; j <= n; ++j) CHECK(pair.p2.vertices[j] == make_slope(-n - 1 + j, 1));
    }
}

TEST_CASE("consecutive path vertices are Farey neighbours") {
    for (Int p = 2; p <= 9; ++p) {
        for (Int q = p + 1; q <= 25; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (Int s : {1, -1}) {
                PathPair pair = build_pair(p, s * q);
                for (const FareyPath* path : {&pair.p1, &pair.p2}) {
                    for (std::size_t i = 0; i + 1 < path->vertices.size(); ++i) {
                        CHECK(is_edge(path->vertices[i], path->vertices[i + 1]));
                    }
                }
                CHECK(pair.p1.vertices.back() == make_slope(floor_div(s * q, p), 1));
            }
        }
    }
}

TEST_CASE("truncation of P2 at ceil(q/p)") {
    CHECK(truncate_p2(build_pair(8, -21)).vertices == slopes({{-21, 8}, {-13, 5}, {-5, 2}, {-2, 1}}));
    CHECK(truncate_p2(build_pair(2, -3)).vertices == slopes({{-3, 2}, {-1, 1}}));
    CHECK(truncate_p2(build_pair(5, -8)).vertices == slopes({{-8, 5}, {-3, 2}, {-1, 1}}));
    CHECK_THROWS_AS(truncate_p2(build_pair(5, 8)), std::domain_error);
    CHECK(truncated_p2(build_pair(5, 8)).vertices.size() == 4);
}

TEST_CASE("block decompositions") {
    SUBCASE("(8,-21)") {
        BlockDecomposition b = decompose_blocks(build_pair(8, -21));
        REQUIRE(b.blocks.size() == 4);
        CHECK(b.blocks[0].side == Side::A);
        CHECK(b.blocks[0].vertices == slopes({{-21, 8}, {-8, 3}}));
        CHECK(b.blocks[1].side == Side::B);
        CHECK(b.blocks[1].vertices == slopes({{-21, 8}, {-13, 5}, {-5, 2}}));
        CHECK(b.blocks[2].vertices == slopes({{-8, 3}, {-3, 1}}));
        CHECK(b.blocks[3].vertices == slopes({{-5, 2}, {-2, 1}}));
    }
    SUBCASE("(5,8)") {
        BlockDecomposition b = decompose_blocks(build_pair(5, 8));
        REQUIRE(b.blocks.size() == 4);
        CHECK(b.blocks[0].vertices == slopes({{8, 5}, {3, 2}}));
        CHECK(b.blocks[1].vertices == slopes({{8, 5}, {5, 3}, {2, 1}}));
        CHECK(b.blocks[2].vertices == slopes({{3, 2}, {1, 1}}));
        CHECK(b.blocks[3].vertices == slopes({{2, 1}, {1, 0}}));
        CHECK_FALSE(b.suffix.has_value());
    }
    SUBCASE("(5,-8) starts on the B side") {
        BlockDecomposition b = decompose_blocks(build_pair(5, -8));
        REQUIRE(b.blocks.size() == 3);
        CHECK(b.short_side == ShortSide::B_first);
        CHECK(b.blocks[0].side == Side::B);
        CHECK(b.blocks[0].vertices == slopes({{-8, 5}, {-3, 2}}));
        CHECK(b.blocks[1].side == Side::A);
        CHECK(b.blocks[1].vertices == slopes({{-8, 5}, {-5, 3}, {-2, 1}}));
        CHECK(b.blocks[2].vertices == slopes({{-3, 2}, {-1, 1}}));
        for (std::size_t i = 0; i < b.blocks.size(); ++i) CHECK(b.blocks[i].index == static_cast<int>(i + 1));
    }
}

TEST_CASE("far slopes and n_k") {
    auto far = block_far_slopes(build_pair(5, -8));
    REQUIRE(far.size() == 3);
    CHECK(far[0].s == make_slope(-3, 2));
    CHECK(far[0].n == 1);
    CHECK(far[1].n == 2);
    CHECK(far[2].n == 3);
    auto pos = block_far_slopes(build_pair(5, 8));
    REQUIRE(pos.size() == 4);
    CHECK(pos[0].n == 1);
    CHECK(pos[2].n == 3);
    // the leading block is always a single Farey edge away from q/p
    for (Int q : {7, 9, 11, 12, 13, -7, -9, -11, -12, -13}) CHECK(block_far_slopes(build_pair(5, q))[0].n == 1);
}

TEST_CASE("shortening") {
    SUBCASE("uniform signs collapse the concatenated path to one edge") {
        for (Int q : {-21, -13, -8, -5}) {
            Int p = q == -21 ? 8 : 5;
            if (q == -5) p = 3;
            PathPair pair = build_pair(p, q);
            SignedPath path;
            for (auto it = pair.p1.vertices.rbegin(); it != pair.p1.vertices.rend(); ++it) path.path.vertices.push_back(*it);
            FareyPath t = truncate_p2(pair);
            path.path.vertices.insert(path.path.vertices.end(), t.vertices.begin() + 1, t.vertices.end());
            path.signs.assign(path.path.edge_count(), 1);
            ShortenResult r = shorten(path);
            REQUIRE_FALSE(r.overtwisted);
            CHECK(r.path.path.vertices ==
                  std::vector<Slope>{make_slope(floor_div(q, p), 1), make_slope(ceil_div(q, p), 1)});
            CHECK(r.path.signs == std::vector<int>{1});
        }
    }
    SUBCASE("opposite signs at a removable vertex are overtwisted") {
        SignedPath path{{slopes({{-3, 1}, {-5, 2}, {-2, 1}})}, {1, -1}};
        CHECK(shorten(path).overtwisted);
    }
    SUBCASE("a minimal path is left alone") {
        SignedPath path{{slopes({{8, 5}, {3, 2}, {1, 1}})}, {1, -1}};
        ShortenResult r = shorten(path);
        REQUIRE_FALSE(r.overtwisted);
        CHECK(r.path.path.vertices == path.path.vertices);
        CHECK(r.path.signs == path.signs);
    }
}
