#include <doctest.h>

#include <random>

#include "germlab/poly.hpp"
#include "germlab/parse.hpp"
#include "support.hpp"

using namespace germlab;
using namespace testing;

TEST_CASE("rational arithmetic stays exact across the int64 boundary") {
    Rational big(1LL << 62);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 124));
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-(1LL << 40), 1LL << 40);
    for (int i = 0; i < 200; ++i) {
        long long a = d(rng), b = d(rng) | 1, c = d(rng), e = d(rng) | 1;
        Rational x(a, b), y(c, e);
        mpq_class qx(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
        mpq_class qy(mpz_class(std::to_string(c)), mpz_class(std::to_string(e)));
        qx.canonicalize();
        qy.canonicalize();
        CHECK((x * y).to_mpq() == qx * qy);
        CHECK((x + y).to_mpq() == qx + qy);
        CHECK((x - y).to_mpq() == qx - qy);
        if (c) CHECK((x / y).to_mpq() == qx / qy);
        CHECK((x < y) == (qx < qy));
    }
}

TEST_CASE("parse_poly") {
    auto v = vars({"x", "y", "z", "w"});
    Poly f = P("x*w - y*z", v);
    CHECK(f.size() == 2);
    CHECK(f.coeff(Monomial::from({1, 0, 0, 1})) == Rational(1));
    CHECK(f.coeff(Monomial::from({0, 1, 1, 0})) == Rational(-1));
    CHECK(P("0", v).is_zero());

    Poly s = P("x + y", v);
    CHECK(P("(x + y)^3", v) == s * s * s);
    CHECK(to_string(P("(x + y)^3", v), v) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
    CHECK(P("1/2*x - 2/4*y", v) == P("x*1/2 - y*1/2", v));
    CHECK(P("-x + y", v) == P("y - x", v));
    CHECK(P("2^3*x", v) == P("8*x", v));
}

TEST_CASE("parse errors carry a position") {
    auto v = vars({"x", "y"});
    try {
        parse_poly("x + q", v);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_poly("x +", v), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-1", v), ParseError);
    CHECK_THROWS_AS(parse_poly("x/y", v), ParseError);
}

TEST_CASE("eval_int_expr") {
    CHECK(eval_int_expr("2*k+1", {{"k", 3}}) == 7);
    CHECK(eval_int_expr("k*l - (k-1)", {{"k", 2}, {"l", 5}}) == 9);
    CHECK(eval_int_expr("-k", {{"k", 2}}) == -2);
    CHECK_THROWS(eval_int_expr("k/2", {{"k", 3}}));
}

TEST_CASE("print then parse is stable") {
    auto v = vars({"x", "y", "z"});
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly f = random_poly(rng, 3, 0, 5, 6);
        Poly g = parse_poly(to_string(f, v), v);
        CHECK(g == f);
        CHECK(to_string(g, v) == to_string(f, v));
    }
}

TEST_CASE("monomial order is graded, lex-larger first") {
    auto v = vars({"x", "y"});
    Poly f = P("y^2 + x*y + x^2 + y + x + 1", v);
    CHECK(to_string(f, v) == "1 + x + y + x^2 + x*y + y^2");
}

TEST_CASE("partial derivatives") {
    auto v = vars({"x", "y"});
    CHECK(partial(P("x^4", v), 0) == P("4*x^3", v));
    CHECK(partial(P("x^2*y + y^3", v), 1) == P("x^2 + 3*y^2", v));
    CHECK(partial(P("7", v), 0).is_zero());
}

TEST_CASE("partial is linear and obeys the product rule") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        Poly f = random_poly(rng, 3, 0, 4, 5), g = random_poly(rng, 3, 0, 4, 5);
        for (int i = 0; i < 3; ++i) {
            CHECK(partial(f + g * Rational(3), i) == partial(f, i) + partial(g, i) * Rational(3));
            CHECK(partial(f * g, i) == partial(f, i) * g + f * partial(g, i));
        }
    }
}

TEST_CASE("jets") {
    auto v = vars({"x", "y"});
    CHECK(jet(P("x + x^5", v), 3) == P("x", v));
    CHECK(jet(P("3 + x + y^2", v), 0) == P("3", v));
    CHECK(jet(P("x^3 + 3*x^2*y", v), 2).is_zero());

    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(rng, 2, 0, 7, 8);
        for (int n = 0; n < 8; ++n)
            for (int m = 0; m < 8; ++m) CHECK(jet(jet(f, n), m) == jet(f, std::min(n, m)));
    }
}

TEST_CASE("truncated products agree with jets of products") {
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
        Poly f = random_poly(rng, 3, 0, 4, 5), g = random_poly(rng, 3, 0, 4, 5);
        for (int b = 1; b < 7; ++b) CHECK(Poly::mul_trunc(f, g, b) == jet(f * g, b - 1));
    }
}

TEST_CASE("weighted degree spectrum") {
    auto v2 = vars({"x", "y"});
    auto v4 = vars({"x", "y", "z", "w"});
    CHECK(weighted_degree_spectrum(P("x^3 + y^4", v2), {Rational(4), Rational(3)}) == std::set<Rational>{Rational(12)});
    std::vector<Rational> ones(4, Rational(1));
    CHECK(weighted_degree_spectrum(P("x*w - y*z", v4), ones) == std::set<Rational>{Rational(2)});
    CHECK(weighted_degree_spectrum(P("x^3 + y^7 + x^2*y^2", v2), {Rational(1, 3), Rational(1, 7)}) ==
          std::set<Rational>{Rational(1), Rational(20, 21)});
}

TEST_CASE("spectrum of a product is the sumset of the spectra") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> wd(1, 5);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> w{Rational(wd(rng)), Rational(wd(rng), 2), Rational(wd(rng), 3)};
        // positive coefficients rule out cancellation, so the sumset is hit exactly
        Poly f = random_poly(rng, 3, 0, 4, 4), g = random_poly(rng, 3, 0, 4, 4);
        std::vector<Poly::Term> pf, pg;
        for (auto [m, c] : f.terms()) pf.emplace_back(m, c.sign() < 0 ? -c : c);
        for (auto [m, c] : g.terms()) pg.emplace_back(m, c.sign() < 0 ? -c : c);
        Poly fp = Poly::from_terms(3, pf), gp = Poly::from_terms(3, pg);
        if (fp.is_zero() || gp.is_zero()) continue;
        auto a = weighted_degree_spectrum(fp, w), b = weighted_degree_spectrum(gp, w);
        std::set<Rational> sum;
        for (const auto& x : a)
            for (const auto& y : b) sum.insert(x + y);
        CHECK(weighted_degree_spectrum(fp * gp, w) == sum);

        // with signs, cancellation can only remove interior degrees
        if (f.is_zero() || g.is_zero()) continue;
        auto sf = weighted_degree_spectrum(f, w), sg = weighted_degree_spectrum(g, w);
        auto sp = weighted_degree_spectrum(f * g, w);
        CHECK(*sp.begin() == *sf.begin() + *sg.begin());
        CHECK(*sp.rbegin() == *sf.rbegin() + *sg.rbegin());
    }
}

TEST_CASE("hessian rank and kernel") {
    auto v3 = vars({"x", "y", "z"});
    auto v2 = vars({"x", "y"});
    auto h = hessian_rank_and_kernel(P("x^2 + y^2 + z^2", v3));
    CHECK(h.rank == 3);
    CHECK(h.kernel.empty());
    h = hessian_rank_and_kernel(P("x^3 + y^4", v2));
    CHECK(h.rank == 0);
    CHECK(h.kernel.size() == 2);
    h = hessian_rank_and_kernel(P("x^2*y + y^4", v2));
    CHECK(h.rank == 0);
    h = hessian_rank_and_kernel(P("x*y + z^3", v3));
    CHECK(h.rank == 2);
    REQUIRE(h.kernel.size() == 1);
    CHECK(h.kernel[0][0].is_zero());
    CHECK(h.kernel[0][1].is_zero());
}

TEST_CASE("substitution and embedding") {
    auto v = vars({"x", "y"});
    Poly f = P("x^2 + y", v);
    CHECK(f.substitute({P("x + y", v), P("x", v)}) == P("x^2 + 2*x*y + y^2 + x", v));
    CHECK(f.substitute_trunc({P("x + y", v), P("x", v)}, 2) == P("x", v));
    auto w = vars({"y", "z", "x"});
    CHECK(f.embed(3, {2, 0}) == P("x^2 + y", w));
}
