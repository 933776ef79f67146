#include <doctest.h>

#include <random>

#include "germlab/invariants.hpp"
#include "germlab/tables.hpp"
#include "germlab/tangent.hpp"
#include "support.hpp"

using namespace germlab;
using namespace testing;

namespace {

int mu(const Poly& f) {
    auto r = milnor(f);
    REQUIRE(r.certified);
    return r.dim;
}

int tj(const Poly& f) {
    auto r = tjurina_number(f);
    REQUIRE(r.certified);
    return r.dim;
}

SingularityLabel label(Family f, int i) { return SingularityLabel{f, i}; }

}  // namespace

TEST_CASE("milnor numbers") {
    auto x = vars({"x"});
    CHECK(mu(P("x^6", x)) == 5);
    CHECK(mu(P("x", x)) == 0);
    auto v = vars({"x", "y", "z"});
    CHECK(mu(P("x^3 + y^3 + z^3", v)) == 8);
}

TEST_CASE("tjurina numbers") {
    auto v = vars({"x", "y"});
    CHECK(tj(P("x^3 + y^4", v)) == 6);
    CHECK(tj(P("x^2*y + y^4", v)) == 5);
    Poly f = P("x^5 + x^2*y^2 + y^5", v);
    CHECK(tj(f) < mu(f));
}

TEST_CASE("boundary milnor numbers") {
    auto v = vars({"x", "y"});
    auto b = boundary_milnor(P("x^4 + y^2", v), 0);
    REQUIRE(b.certified());
    CHECK(b.mu_f.dim == 3);
    CHECK(b.mu_restricted.dim == 1);
    CHECK(b.mu_boundary.dim == 4);

    b = boundary_milnor(P("x*y + y^3", v), 0);
    CHECK(b.mu_f.dim == 1);
    CHECK(b.mu_restricted.dim == 2);
    CHECK(b.mu_boundary.dim == 3);

    b = boundary_milnor(P("x^2 + y^3", v), 0);
    CHECK(b.mu_f.dim == 2);
    CHECK(b.mu_restricted.dim == 2);
    CHECK(b.mu_boundary.dim == 4);
}

TEST_CASE("boundary milnor sum identity") {
    auto v = vars({"x", "y"});
    std::vector<Poly> forms;
    for (int k = 2; k <= 8; ++k) {
        forms.push_back(P("y^2", v) + Poly::monomial(Monomial::var(2, 0, k)));
        forms.push_back(P("x*y", v) + Poly::monomial(Monomial::var(2, 1, k)));
    }
    forms.push_back(P("x^2 + y^3", v));
    for (const auto& f : forms) {
        auto b = boundary_milnor(f, 0);
        REQUIRE(b.certified());
        CHECK(b.mu_f.dim + b.mu_restricted.dim == b.mu_boundary.dim);
    }
}

TEST_CASE("milnor numbers of complete intersections") {
    auto v = vars({"x", "y"});
    auto r = milnor_icis({P("x*y", v), P("x^2 + y^2", v)});
    CHECK(r.certified);
    CHECK(r.mu == 3);
    auto w = vars({"x", "y", "z"});
    r = milnor_icis({P("x^2 + y^2 + z^2", w), P("y*z", w)});
    CHECK(r.certified);
    CHECK(r.mu == 5);
    auto x = vars({"x"});
    CHECK(milnor_icis({P("x^5", x)}).mu == 4);
}

TEST_CASE("singular milnor number of determinantal hypersurfaces") {
    auto v3 = vars({"x", "y", "z"});
    auto s = singular_milnor_hypersurface(mat(v3, Kind::Symmetric, {{"x", "y"}, {"y", "z"}}));
    CHECK(s.certified);
    CHECK(s.mu_f == 1);
    CHECK(s.e == 1);
    CHECK(s.mu_a == 0);
    auto v4 = vars({"x", "y", "z", "w"});
    s = singular_milnor_hypersurface(mat(v4, {{"x", "y"}, {"z", "w"}}));
    CHECK(s.mu_f == 1);
    CHECK(s.e == 1);
    CHECK(s.mu_a == 0);
    CHECK_THROWS(singular_milnor_hypersurface(mat(v3, {{"x", "y"}, {"z", "x"}})));
}

TEST_CASE("quasi-homogeneity of functions") {
    auto v = vars({"x", "y"});
    auto w = quasi_homogeneous(P("x^3 + y^4", v));
    REQUIRE(w);
    CHECK(w->weights == std::vector<long long>{4, 3});
    CHECK(w->degree == 12);
    auto v4 = vars({"x", "y", "z", "w"});
    w = quasi_homogeneous(P("x*w - y*z", v4));
    REQUIRE(w);
    CHECK(w->weights == std::vector<long long>{1, 1, 1, 1});
    CHECK(w->degree == 2);
    CHECK_FALSE(quasi_homogeneous(P("x^3 + y^7 + x^2*y^2", v)));
    CHECK(quasi_homogeneous(P("x^2*y + y^4", v)));
}

TEST_CASE("quasi-homogeneity of matrices") {
    auto v3 = vars({"x", "y", "z"});
    auto q = quasi_homogeneous_matrix(mat(v3, {{"x", "0", "z"}, {"0", "y", "z"}}));
    REQUIRE(q);
    CHECK(q->weights[0] == q->weights[1]);
    CHECK(q->weights[1] == q->weights[2]);

    auto v = vars({"x", "y"});
    MatrixGerm a = mat(v, {{"x", "y^3"}, {"y", "x^2"}});
    q = quasi_homogeneous_matrix(a);
    REQUIRE(q);
    CHECK(q->weights == std::vector<long long>{4, 3});
    // every entry is homogeneous of degree r_i + c_j
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto spec = weighted_degree_spectrum(a.at(i, j), {Rational(4), Rational(3)});
            REQUIRE(spec.size() == 1);
            CHECK(*spec.begin() == Rational(q->row_degrees[i] + q->col_degrees[j]));
        }

    CHECK_FALSE(quasi_homogeneous_matrix(mat(v, {{"x", "y"}, {"y", "x + x^2"}})));
}

TEST_CASE("ADE recognition") {
    auto v4 = vars({"x", "y", "z", "w"});
    CHECK(ade_recognize(P("x^3 + y^4 + z^2 + w^2", v4)) == label(Family::E, 6));
    auto v = vars({"x", "y"});
    CHECK(ade_recognize(P("x^2*y + y^4", v)) == label(Family::D, 5));
    auto v3 = vars({"x", "y", "z"});
    CHECK(ade_recognize(P("x^2 + y^2 + z^2", v3)) == label(Family::A, 1));
    CHECK(ade_recognize(P("x^3 + x*y^3", v)) == label(Family::E, 7));
    CHECK(ade_recognize(P("x^3 + y^5", v)) == label(Family::E, 8));
    CHECK(ade_recognize(P("x + y^2", v)).family == Family::Smooth);
    CHECK(ade_recognize(P("x^2 + y^2 + z^2 + x^3*y", v3)) == label(Family::A, 1));
    CHECK(ade_recognize(P("x^3 + y^3 + z^3", v3)).family == Family::NotSimple);
    CHECK(ade_recognize(P("x^4 + y^4", v)).family == Family::NotSimple);
    ColengthOptions small;
    small.max_order = 12;
    CHECK(ade_recognize(P("x^2", v), small).family == Family::NotIsolated);
    // the form printed with y^2 in place of y^3 is the D4 cone
    CHECK(ade_recognize(P("x^3 + x*y^2", v)) == label(Family::D, 4));
}

TEST_CASE("ADE normal forms up to index 10") {
    auto x = vars({"x"});
    auto v = vars({"x", "y"});
    for (int k = 1; k <= 10; ++k) {
        Poly a = Poly::monomial(Monomial::var(1, 0, k + 1));
        CHECK(ade_recognize(a) == label(Family::A, k));
        CHECK(mu(a) == k);
        CHECK(tj(a) == k);
        if (k >= 4) {
            Poly d = P("x^2*y", v) + Poly::monomial(Monomial::var(2, 1, k - 1));
            CHECK(ade_recognize(d) == label(Family::D, k));
            CHECK(mu(d) == k);
            CHECK(tj(d) == k);
        }
    }
    (void)x;
}

TEST_CASE("univariate gcd and linear factor counts") {
    using Q = std::vector<Rational>;
    // (t - 1)(t + 2) and (t - 1)(t - 3)
    Q a{Rational(-2), Rational(1), Rational(1)}, b{Rational(3), Rational(-4), Rational(1)};
    CHECK(univariate_gcd(a, b) == Q{Rational(-1), Rational(1)});
    CHECK(univariate_gcd({Rational(0)}, {Rational(0)}).empty());
    // s^3: one factor; s^2 t: two; s t (s - t): three
    CHECK(distinct_linear_factors({Rational(1), Rational(0), Rational(0), Rational(0)}) == 1);
    CHECK(distinct_linear_factors({Rational(0), Rational(1), Rational(0), Rational(0)}) == 2);
    CHECK(distinct_linear_factors({Rational(0), Rational(1), Rational(-1), Rational(0)}) == 3);
    CHECK(distinct_linear_factors({Rational(0), Rational(0), Rational(0), Rational(0)}) == -1);
}

TEST_CASE("mu >= tau on random certifying germs") {
    std::mt19937 rng(59);
    auto v = vars({"x", "y"});
    int seen = 0;
    ColengthOptions opt;
    opt.max_order = 24;
    for (int t = 0; t < 200 && seen < 50; ++t) {
        Poly f = random_poly(rng, 2, 2, 6, 4);
        if (f.is_zero()) continue;
        auto m = milnor(f, opt), ta = tjurina_number(f, opt);
        if (!m.certified || !ta.certified) continue;
        ++seen;
        CHECK(m.dim >= ta.dim);
        if (quasi_homogeneous(f)) CHECK(m.dim == ta.dim);
    }
    CHECK(seen == 50);
}

TEST_CASE("mu and tau on encoded hypersurfaces") {
    int checked = 0;
    for (const char* file : {"simple-functions.tbl", "boundary-functions.tbl"}) {
        for (const auto& row : load_tables(std::string(GERMLAB_DATA_DIR) + "/" + file)) {
            for (const auto& pv : parameter_tuples(row, 6)) {
                MatrixGerm a = instantiate(row, pv);
                const Poly& f = a.at(0, 0);
                auto m = milnor(f), t = tjurina_number(f);
                REQUIRE(m.certified);
                REQUIRE(t.certified);
                CHECK(m.dim >= t.dim);
                if (quasi_homogeneous(f)) CHECK(m.dim == t.dim);
                ++checked;
            }
        }
    }
    CHECK(checked > 20);
}
