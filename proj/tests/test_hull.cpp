#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tropjac/hull.hpp"

using namespace tropjac;

namespace {

RatVector pt(std::initializer_list<int> xs) {
    RatVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (int x : xs) v(i++) = Rat(x);
    return v;
}

// Brute-force facet oracle: every (d+1)-subset spanning in projection whose
// functional supports all points, collected with full tight sets.
std::vector<std::vector<int>> brute_lower_facets(const std::vector<RatVector>& pts) {
    int d = static_cast<int>(pts[0].size()) - 1;
    int n = static_cast<int>(pts.size());
    std::set<std::vector<int>> out;
    std::vector<int> idx(d + 1);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == d + 1) {
            RatMatrix m(d + 1, d + 1);
            RatVector rhs(d + 1);
            for (int r = 0; r <= d; ++r) {
                for (int j = 0; j < d; ++j) m(r, j) = pts[idx[r]](j);
                m(r, d) = Rat(1);
                rhs(r) = pts[idx[r]](d);
            }
            if (rank(m) < d + 1) return;
            auto sol = solve(m, rhs);
            if (!sol) return;
            std::vector<int> tight;
            for (int q = 0; q < n; ++q) {
                Rat val = (*sol)(d);
                for (int j = 0; j < d; ++j) val += (*sol)(j) * pts[q](j);
                if (pts[q](d) < val) return;
                if (pts[q](d) == val) tight.push_back(q);
            }
            out.insert(tight);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return {out.begin(), out.end()};
}

} // namespace

TEST_CASE("parabola lift gives two segments") {
    std::vector<RatVector> pts = {pt({-1, 1}), pt({0, 0}), pt({1, 1})};
    auto facets = lower_hull(pts);
    REQUIRE(facets.size() == 2);
    CHECK(facets[0].points == std::vector<int>{0, 1});
    CHECK(facets[1].points == std::vector<int>{1, 2});
}

TEST_CASE("x^2 lift over the 3x3 grid gives two vertical strips") {
    std::vector<RatVector> pts;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) pts.push_back(pt({x, y, x * x}));
    auto facets = lower_hull(pts);
    REQUIRE(facets.size() == 2);
    for (const auto& f : facets) CHECK(f.points.size() == 6);
    // Strips do not depend on y: functional has zero y-coefficient.
    for (const auto& f : facets) CHECK(f.a(1) == Rat(0));
}

TEST_CASE("ties produce one non-simplicial facet") {
    std::vector<RatVector> pts = {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})};
    auto facets = lower_hull(pts);
    REQUIRE(facets.size() == 1);
    CHECK(facets[0].points == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("generic 3D points match the brute-force oracle") {
    std::vector<RatVector> pts = {
        pt({0, 0, 3}),  pt({4, 0, 1}),  pt({0, 4, 2}),
        pt({4, 4, 7}),  pt({1, 2, 0}),  pt({3, 1, 5}),
    };
    auto facets = lower_hull(pts);
    auto oracle = brute_lower_facets(pts);
    REQUIRE(facets.size() == oracle.size());
    for (size_t i = 0; i < facets.size(); ++i) CHECK(facets[i].points == oracle[i]);
}

TEST_CASE("random 4D lifts match the brute-force oracle") {
    unsigned long long seed = 99;
    auto next = [&seed](int m) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((seed >> 33) % m);
    };
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<RatVector> pts;
        std::set<std::pair<int, std::pair<int, int>>> used;
        while (pts.size() < 9) {
            int x = next(5), y = next(5), z = next(5);
            if (!used.insert({x, {y, z}}).second) continue;
            pts.push_back(pt({x, y, z, next(9) - 4}));
        }
        auto facets = lower_hull(pts);
        auto oracle = brute_lower_facets(pts);
        REQUIRE(facets.size() == oracle.size());
        for (size_t i = 0; i < facets.size(); ++i) CHECK(facets[i].points == oracle[i]);
        // Support property: every point on or above every facet.
        for (const auto& f : facets) {
            for (const auto& p : pts) {
                Rat val = f.b;
                for (Index j = 0; j + 1 < p.size(); ++j) val += f.a(j) * p(j);
                CHECK(p(p.size() - 1) >= val);
            }
        }
    }
}

TEST_CASE("vertical point sets are rejected") {
    std::vector<RatVector> pts = {pt({0, 0, 0}), pt({0, 0, 1}), pt({0, 1, 0}), pt({0, 1, 1})};
    CHECK_THROWS_WITH_AS(lower_hull(pts), doctest::Contains("DegenerateLift"), Error);
}

TEST_CASE("duplicate projections keep the lowest lift") {
    // (1,1) sits above the segment (0,0)-(2,1); the duplicate (0,5) is dominated.
    std::vector<RatVector> pts = {pt({0, 0}), pt({0, 5}), pt({1, 1}), pt({2, 1})};
    auto facets = lower_hull(pts);
    REQUIRE(facets.size() == 1);
    CHECK(facets[0].points == std::vector<int>{0, 3});

    std::vector<RatVector> pts2 = {pt({0, 0}), pt({1, 0}), pt({2, 1}), pt({1, 5})};
    auto facets2 = lower_hull(pts2);
    REQUIRE(facets2.size() == 2);
    CHECK(facets2[0].points == std::vector<int>{0, 1});
    CHECK(facets2[1].points == std::vector<int>{1, 2});
}
