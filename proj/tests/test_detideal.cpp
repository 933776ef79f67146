#include <doctest.h>

#include <random>

#include "germlab/detideal.hpp"
#include "germlab/jetlin.hpp"
#include "support.hpp"

using namespace germlab;
using namespace testing;

namespace {

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b, int N) {
    return span_equal(as_ideal(a), as_ideal(b), 1, N);
}

PolyMatrix product(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.size(), std::vector<Poly>(b[0].size()));
    int nv = a[0][0].nvars();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            Poly s(nv);
            for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

}  // namespace

TEST_CASE("minors") {
    auto v = vars({"x", "y", "z", "w"});
    auto m = minors(mat(v, {{"x", "y"}, {"z", "w"}}), 2);
    REQUIRE(m.size() == 1);
    CHECK(m[0].value == P("x*w - y*z", v));

    auto v3 = vars({"x", "y", "z"});
    MatrixGerm axes = mat(v3, {{"x", "0", "z"}, {"0", "y", "z"}});
    auto vals = minor_values(axes, 2);
    REQUIRE(vals.size() == 3);
    CHECK(vals[0] == P("x*y", v3));
    CHECK(vals[1] == P("x*z", v3));
    CHECK(vals[2] == P("-y*z", v3));

    auto ones = minor_values(axes, 1);
    REQUIRE(ones.size() == 6);
    CHECK(ones[0] == P("x", v3));
    CHECK(ones[1].is_zero());
    CHECK_THROWS(minors(axes, 3));
}

TEST_CASE("pfaffians") {
    auto v = vars({"b"});
    auto p = pfaffians(mat(v, Kind::Skew, {{"0", "b"}, {"-b", "0"}}), 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].value == P("b", v));

    auto g = vars({"a12", "a13", "a14", "a23", "a24", "a34"});
    MatrixGerm a = mat(g, Kind::Skew,
                       {{"0", "a12", "a13", "a14"},
                        {"-a12", "0", "a23", "a24"},
                        {"-a13", "-a23", "0", "a34"},
                        {"-a14", "-a24", "-a34", "0"}});
    auto top = pfaffian_values(a, 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == P("a12*a34 - a13*a24 + a14*a23", g));
    CHECK(pfaffian_values(a, 1).size() == 6);

    auto xy = vars({"x", "y", "z", "w"});
    MatrixGerm block = mat(xy, Kind::Skew,
                           {{"0", "0", "x", "y"}, {"0", "0", "z", "w"}, {"-x", "-z", "0", "0"}, {"-y", "-w", "0", "0"}});
    // equal to det B up to the sign (-1)^(n(n-1)/2) of the block ordering
    CHECK(pfaffian(block.entries) == -P("x*w - y*z", xy));
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937 rng(31);
    for (int size : {2, 4, 6}) {
        for (int t = 0; t < (size == 6 ? 3 : 10); ++t) {
            PolyMatrix a = random_skew(rng, size, 3, 1, 2, 2);
            Poly pf = pfaffian(a);
            CHECK(jet(pf * pf, 8) == jet(determinant(a), 8));
        }
    }
}

TEST_CASE("expected codimension") {
    CHECK(expected_codim(Kind::General, 2, 3, 2) == 2);
    CHECK(expected_codim(Kind::Symmetric, 3, 3, 2) == 3);
    CHECK(expected_codim(Kind::Skew, 4, 4, 2) == 1);
    CHECK(expected_codim(Kind::General, 3, 3, 3) == 1);
    CHECK(expected_codim(Kind::Symmetric, 2, 2, 2) == 1);
    CHECK_THROWS(expected_codim(Kind::Skew, 4, 4, 3));
}

TEST_CASE("hilbert-burch vector") {
    auto v = vars({"x", "y", "z"});
    MatrixGerm axes = mat(v, {{"x", "0", "z"}, {"0", "y", "z"}});
    auto f = hilbert_burch_vector(axes);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == P("-y*z", v));
    CHECK(f[1] == P("-x*z", v));
    CHECK(f[2] == P("x*y", v));
    CHECK(hilbert_burch_vector(axes.transposed()) == f);

    auto ab = vars({"a", "b"});
    auto g = hilbert_burch_vector(mat(ab, {{"a", "b"}}));
    REQUIRE(g.size() == 2);
    CHECK(g[0] == P("b", ab));
    CHECK(g[1] == P("-a", ab));
    CHECK(dot(g, {P("a", ab), P("b", ab)}).is_zero());
}

TEST_CASE("generator vectors annihilate their matrices exactly") {
    std::mt19937 rng(37);
    auto v = vars({"x", "y", "z"});
    for (int t = 0; t < 20; ++t) {
        int m = 1 + static_cast<int>(rng() % 3);
        MatrixGerm a(v, Kind::General, random_matrix(rng, m, m + 1, 3, 1, 3, 3));
        auto f = hilbert_burch_vector(a);
        for (int i = 0; i < m; ++i) CHECK(dot(a.entries[i], f).is_zero());
    }
    for (int size : {3, 5}) {
        for (int t = 0; t < 8; ++t) {
            MatrixGerm a(v, Kind::Skew, random_skew(rng, size, 3, 1, 2, 2));
            auto f = buchsbaum_eisenbud_vector(a);
            for (int i = 0; i < size; ++i) CHECK(dot(a.entries[i], f).is_zero());
        }
    }
}

TEST_CASE("buchsbaum-eisenbud vector") {
    auto v = vars({"a", "b", "c"});
    auto f = buchsbaum_eisenbud_vector(mat(v, Kind::Skew, {{"0", "a", "b"}, {"-a", "0", "c"}, {"-b", "-c", "0"}}));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == P("c", v));
    CHECK(f[1] == P("-b", v));
    CHECK(f[2] == P("a", v));
    auto z = buchsbaum_eisenbud_vector(mat(v, Kind::Skew, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}));
    for (const auto& e : z) CHECK(e.is_zero());
}

TEST_CASE("minor ideals are invariant under unimodular factors") {
    std::mt19937 rng(41);
    auto v = vars({"x", "y", "z"});
    const int N = 6;
    for (int t = 0; t < 15; ++t) {
        MatrixGerm a(v, Kind::General, random_matrix(rng, 2, 3, 3, 1, 2, 2));
        PolyMatrix p = random_unimodular(rng, 2, 3);
        PolyMatrix q = random_unimodular(rng, 3, 3);
        PolyMatrix b = matmul_trunc(matmul_trunc(p, a.entries, N), invert_matrix_jet(q, N), N);
        CHECK(same_ideal(minor_values(MatrixGerm(v, Kind::General, b), 2), minor_values(a, 2), N));
        CHECK(same_ideal(minor_values(MatrixGerm(v, Kind::General, b), 1), minor_values(a, 1), N));
    }
}

TEST_CASE("unit reduction lowers the minor size by one") {
    std::mt19937 rng(43);
    auto v = vars({"x", "y", "z"});
    for (int t = 0; t < 15; ++t) {
        PolyMatrix e = random_matrix(rng, 3, 3, 3, 1, 2, 2);
        e[rng() % 3][rng() % 3] += Poly::constant(3, Rational(1 + static_cast<int>(rng() % 3)));
        MatrixGerm a(v, Kind::General, e);
        if (!a.has_unit_entry()) continue;
        UnitReduction r = reduce_units(a);
        CHECK(r.steps >= 1);
        CHECK_FALSE(r.reduced.has_unit_entry());
        if (r.steps == 1) {
            CHECK(r.reduced.rows() == 2);
            CHECK(same_ideal(minor_values(a, 2), minor_values(r.reduced, 1), 6));
            CHECK(same_ideal(minor_values(a, 3), minor_values(r.reduced, 2), 6));
        }
    }
}

TEST_CASE("symmetric unit reduction keeps the kind") {
    auto v = vars({"x", "y", "z"});
    MatrixGerm a = mat(v, Kind::Symmetric, {{"1 + x", "y", "z"}, {"y", "x", "0"}, {"z", "0", "y^2"}});
    UnitReduction r = reduce_units(a);
    CHECK(r.reduced.kind == Kind::Symmetric);
    CHECK(r.reduced.rows() == 2);
    CHECK(same_ideal(minor_values(a, 3), minor_values(r.reduced, 2), 6));
}

TEST_CASE("matrix germ validation") {
    auto v = vars({"x", "y"});
    CHECK_THROWS_AS(mat(v, Kind::Symmetric, {{"x", "y"}, {"x", "y"}}), std::invalid_argument);
    CHECK_THROWS_AS(mat(v, Kind::Skew, {{"x", "y"}, {"-y", "0"}}), std::invalid_argument);
    CHECK_THROWS_AS(mat(v, {{"x", "y"}, {"x"}}), std::invalid_argument);
    CHECK(mat(v, {{"1 + x"}}).has_unit_entry());
}

TEST_CASE("determinant of a product is the product of determinants") {
    std::mt19937 rng(47);
    for (int t = 0; t < 10; ++t) {
        PolyMatrix a = random_matrix(rng, 3, 3, 2, 0, 2, 2), b = random_matrix(rng, 3, 3, 2, 0, 2, 2);
        CHECK(determinant(product(a, b)) == determinant(a) * determinant(b));
    }
}
