#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropjac/lattice.hpp"
#include "tropjac/linalg.hpp"

using namespace tropjac;

namespace {

RatMatrix rat_mat(std::initializer_list<std::initializer_list<int>> rows) {
    RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (int x : r) m(i, j++) = Rat(x);
        ++i;
    }
    return m;
}

IntMatrix int_mat(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (int x : r) m(i, j++) = Int(x);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("det, rank, inverse, solve") {
    RatMatrix m = rat_mat({{2, 1}, {1, 1}});
    CHECK(det(m) == Rat(1));
    CHECK(rank(m) == 2);
    RatMatrix mi = inverse(m);
    RatMatrix id = m * mi;
    CHECK(id(0, 0) == Rat(1));
    CHECK(id(0, 1) == Rat(0));

    RatVector b(2);
    b << Rat(3), Rat(2);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == Rat(1));
    CHECK((*x)(1) == Rat(1));

    RatMatrix sing = rat_mat({{1, 2}, {2, 4}});
    CHECK(det(sing) == Rat(0));
    RatVector bad(2);
    bad << Rat(1), Rat(3);
    CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("nullspace") {
    RatMatrix m = rat_mat({{1, 1, 1}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        Rat s = v(0) + v(1) + v(2);
        CHECK(s == Rat(0));
    }
}

TEST_CASE("primitive normalization") {
    RatVector v(3);
    v << Rat::parse("-2/3"), Rat::parse("4/3"), Rat(0);
    IntVector p = primitive(v);
    CHECK(p(0) == Int(-1));
    CHECK(p(1) == Int(2));
    IntVector ps = primitive_signed(v);
    CHECK(ps(0) == Int(1));
    CHECK(ps(1) == Int(-2));
}

TEST_CASE("psd check") {
    CHECK(psd_check(rat_mat({{2, -1}, {-1, 2}})).psd);
    CHECK(psd_check(rat_mat({{2, -1}, {-1, 2}})).rank == 2);
    CHECK(psd_check(rat_mat({{1, 1}, {1, 1}})).psd);
    CHECK(psd_check(rat_mat({{1, 1}, {1, 1}})).rank == 1);
    CHECK(!psd_check(rat_mat({{0, 1}, {1, 0}})).psd);
    CHECK(!psd_check(rat_mat({{-1, 0}, {0, 1}})).psd);
    CHECK(psd_check(rat_mat({{0, 0}, {0, 0}})).psd);
}

TEST_CASE("smith form reproduces the matrix") {
    IntMatrix a = int_mat({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithForm f = smith_form(a);
    CHECK(is_unimodular(f.s));
    CHECK(is_unimodular(f.t));
    IntMatrix back = f.s * f.d * f.t;
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) CHECK(back(i, j) == a(i, j));
    // Divisibility chain.
    CHECK((f.d(1, 1) % f.d(0, 0)).is_zero());
    CHECK((f.d(2, 2) % f.d(1, 1)).is_zero());
}

TEST_CASE("integer kernel is saturated") {
    IntMatrix a = int_mat({{1, 1, 1}});
    auto k = integer_kernel(a);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK((v(0) + v(1) + v(2)).is_zero());
    // Kernel of [[2,2]]: generated by (1,-1), not (2,-2).
    auto k2 = integer_kernel(int_mat({{2, 2}}));
    REQUIRE(k2.size() == 1);
    CHECK(abs(k2[0](0)) == Int(1));
}

TEST_CASE("unimodular completion") {
    std::vector<IntVector> basis;
    IntVector v(2);
    v << Int(1), Int(-1);
    basis.push_back(v);
    IntMatrix u = hermite_unimodular_complete(basis, 2);
    CHECK(is_unimodular(u));
    CHECK(u(0, 1) * Int(-1) == u(1, 1)); // last column is +-(1,-1)

    CHECK(is_unimodular(hermite_unimodular_complete({}, 3)));

    IntVector w(3);
    w << Int(2), Int(1), Int(0);
    IntMatrix u3 = hermite_unimodular_complete({w}, 3);
    CHECK(is_unimodular(u3));
    // Last column spans the same rank-1 lattice as (2,1,0).
    Int s = u3(1, 2);
    CHECK(abs(s) == Int(1));
    CHECK(u3(0, 2) == s * Int(2));
    CHECK(u3(2, 2) == Int(0));

    IntVector bad(2);
    bad << Int(2), Int(0); // spans a non-saturated lattice
    CHECK_THROWS_AS(hermite_unimodular_complete({bad}, 2), Error);
}
