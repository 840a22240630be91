#include <doctest.h>

#include "helpers.hpp"
#include "mixsing/classify.hpp"
#include "mixsing/invariants.hpp"

using namespace mixsing;
using namespace testutil;

namespace {

Monomial single(const char* s, int n = 2) { return parse(s, n).terms.at(0); }

// Random polar weighted polynomial: monomials of polar degree d under P.
MixedPolynomial random_polar(std::mt19937_64& rng, IVec& P, long long& d) {
    std::uniform_int_distribution<int> e(0, 4), w(-3, 3), c(1, 4);
    for (;;) {
        P = {w(rng), w(rng)};
        if (gcd_vec(P) != 1) continue;
        std::vector<Monomial> ts;
        d = 0;
        for (int tries = 0; tries < 400 && ts.size() < 3; ++tries) {
            Monomial m;
            m.nu = {e(rng), e(rng)};
            m.mu = {e(rng), e(rng)};
            long long pd = pdeg(P, m);
            if (pd <= 0) continue;
            if (ts.empty()) d = pd;
            if (pd != d) continue;
            m.coeff = GaussianRational(c(rng));
            ts.push_back(m);
        }
        MixedPolynomial f(2, ts);
        if (f.size() >= 2 && polar_type(f)) return f;
    }
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("radial types") {
    auto r = radial_type(parse("z1^3 + z1^2*zb1 + z2^2"));
    REQUIRE(r);
    CHECK(r->Q == IVec{2, 3});
    CHECK(r->d_r == 6);
    auto s = radial_type(parse("-2z1^2*zb1 + z2^2*zb2 + 3z1^2*zb2"));
    REQUIRE(s);
    CHECK(s->Q == IVec{1, 1});
    CHECK(s->d_r == 3);
    CHECK_FALSE(radial_type(parse("z1 + z1^2")));
    CHECK_FALSE(radial_type(parse("z1^2*zb2")));
}

TEST_CASE("polar types") {
    auto p = polar_type(parse("z1^2*zb1 - z2^2*zb2"));
    REQUIRE(p);
    CHECK(p->P == IVec{1, 1});
    CHECK(p->d_p == 1);
    CHECK_FALSE(polar_type(parse("z1*zb1 - z2^2")));
    CHECK_FALSE(polar_type(parse("zb2^2*(z1^2 + z2^2)")));
    auto t = polar_type(parse("-2z1^2*zb1 + z2^2*zb2 + 3z1^2*zb2"));
    REQUIRE(t);
    CHECK(t->P == IVec{1, 1});
    CHECK(t->d_p == 1);
}

TEST_CASE("conjugate weighted homogeneity") {
    auto c = conjugate_wh(parse("z1^2 + z2^2 + zb3^3"));
    REQUIRE(c);
    CHECK(c->J == std::vector<int>{2});
    CHECK(c->P == IVec{3, 3, 2});
    CHECK(c->d == 6);
    auto h = conjugate_wh(parse("z1^2 + z2^3"));
    REQUIRE(h);
    CHECK(h->J.empty());
    CHECK(h->P == IVec{3, 2});
    CHECK_FALSE(conjugate_wh(parse("z1*zb1")));
}

TEST_CASE("pseudo conjugate weighted homogeneity") {
    auto fp = pseudo_conjugate_wh(parse("z1^2*(z1^3 + zb2^2)"));
    REQUIRE(fp);
    CHECK(fp->M.nu == IVec{2, 0});
    CHECK(fp->M.mu == IVec{0, 0});
    CHECK(fp->J == std::vector<int>{1});
    CHECK(fp->pdeg_check != 0);
    CHECK_FALSE(pseudo_conjugate_wh(parse("zb2^2*(z1^2 + z2^2)")));
    // z^nu zbar^mu (z1^2 + z2^2 + zb3^3) works unless 3 sum(nu-mu) - 2(nu3-mu3) + 6 = 0
    CHECK(pseudo_conjugate_wh(parse("z1*(z1^2 + z2^2 + zb3^3)")));
    CHECK_FALSE(pseudo_conjugate_wh(parse("zb1^2*(z1^2 + z2^2 + zb3^3)")));
}

TEST_CASE("good polar factorizations") {
    auto mid = good_polar_factorization(parse("zb1*z2*(z1^2 - zb2^2)"));
    REQUIRE(mid);
    CHECK(mid->k == 2);
    CHECK(std::abs(mid->a - mid->a_pr) == 1);
    CHECK(std::abs(mid->b - mid->b_pr) == 1);
    CHECK(mid->squarefree());
    CHECK(lkn_star_good(*mid) == 2);

    auto bin = good_polar_factorization(parse("z2^2*zb2 - z1^2*zb1"));
    REQUIRE(bin);
    CHECK(bin->k == 1);
    CHECK(bin->a == 2);
    CHECK(bin->a_pr == 1);
    CHECK(bin->b == 2);
    CHECK(bin->b_pr == 1);
    REQUIRE(bin->roots.size() == 1);
    CHECK(std::abs(bin->roots[0].lambda - cplx(1)) < 1e-12);

    auto dbl = good_polar_factorization(parse("z2^2 - 2z1*z2 + z1^2"));
    REQUIRE(dbl);
    CHECK(dbl->k == 2);
    REQUIRE(dbl->roots.size() == 1);
    CHECK(dbl->roots[0].mult == 2);
    CHECK_FALSE(dbl->squarefree());

    CHECK_FALSE(good_polar_factorization(parse("z1^2 + z1*z2 + z2^2 + z1*zb1")));
    CHECK_FALSE(good_polar_factorization(parse("z1*zb1 - z2*zb2")));
}

TEST_CASE("polar admissibility") {
    CHECK(is_polar_admissible(single("z1^2*zb2")));
    CHECK_FALSE(is_polar_admissible(single("z1*zb1*z2")));
    CHECK_FALSE(is_polar_admissible(single("z2^4")));
}

TEST_CASE("simplicial data") {
    auto chain = simplicial_check(parse("z1^3*zb2 + z2^3*zb3 + z3^3*zb1"));
    REQUIRE(chain);
    CHECK(chain->det_N_abs == 26);
    auto bin = simplicial_check(parse("z2^2*zb2 - z1^2*zb1"));
    REQUIRE(bin);
    CHECK(bin->M == IMat{{0, 3}, {3, 0}});
    CHECK(bin->N == IMat{{0, 1}, {1, 0}});
    CHECK(bin->det_N_abs == 1);
    CHECK_FALSE(simplicial_check(parse("z1*zb1 - z2*zb2")));
    CHECK_FALSE(simplicial_check(parse("z1^2 + z2^2 + z1*z2")));
}

TEST_CASE("end monomial check") {
    CHECK(end_monomial_check(parse("z1^2*zb1 - z2^2*zb2")));
    CHECK_FALSE(end_monomial_check(parse("z1*zb1*z2^2 + z1^3*zb1")));
    CHECK(end_monomial_check(parse("z1^3 + z2^2")));
}

TEST_CASE("absolute cone") {
    auto pos = absolute_cone(parse("z1*zb1 + z2^2*zb2^2 + z3^3*zb3^3"));
    REQUIRE(pos);
    CHECK_FALSE(pos->zero_in_open_cone);
    REQUIRE(pos->exps.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(pos->exps[i] == pos->vars[i] + 1);
    auto mix = absolute_cone(parse("z1*zb1 + z2^2*zb2^2 - z3*zb3"));
    REQUIRE(mix);
    CHECK(mix->zero_in_open_cone);
    // i and -1 and 1-i: the open cone is the whole plane
    auto cx = absolute_cone(parse("i*z1*zb1 - z2*zb2 + (1-1i)*z3*zb3"));
    REQUIRE(cx);
    CHECK(cx->zero_in_open_cone);
    auto half = absolute_cone(parse("i*z1*zb1 + z2*zb2 + (1+1i)*z3*zb3"));
    REQUIRE(half);
    CHECK_FALSE(half->zero_in_open_cone);
    CHECK_FALSE(absolute_cone(parse("z1*zb1 + z2^2")));
}

TEST_CASE("univariate helpers") {
    UPoly p{GaussianRational(1), GaussianRational(-2), GaussianRational(1)};  // (1 - w)^2
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].second == 2);
    auto roots = numeric_roots(UPoly{GaussianRational(1), GaussianRational(0), GaussianRational(1)});
    REQUIRE(roots.size() == 2);
    for (auto r : roots) CHECK(std::abs(std::abs(r) - 1) < 1e-12);
}

TEST_CASE("property: polar type covariant under pullback") {
    std::mt19937_64 rng(401);
    for (int k = 0; k < 120; ++k) {
        IVec P;
        long long d;
        auto f = random_polar(rng, P, d);
        auto pt = polar_type(f);
        REQUIRE(pt);
        CHECK(pt->d_p == d);
        UnimodularMatrix s(random_unimodular(rng, 2));
        auto g = pullback(f, s);
        auto qt = polar_type(g);
        REQUIRE(qt);
        CHECK(qt->d_p == pt->d_p);
        CHECK(qt->P == pullback_weight(pt->P, s));
        // a non-polar perturbation stays non-polar
        auto h = f + parse("z1*zb1*z2*zb2", 2);
        CHECK(polar_type(h).has_value() == polar_type(pullback(h, s)).has_value());
    }
}

TEST_CASE("property: conjugate weighted homogeneous gives the polar type") {
    std::mt19937_64 rng(402);
    std::uniform_int_distribution<int> e(0, 6), w(1, 4);
    int checked = 0;
    for (int k = 0; k < 400 && checked < 100; ++k) {
        int n = 2 + k % 2;
        IVec P(n);
        for (auto& x : P) x = w(rng);
        P = primitive(P);
        std::vector<Monomial> ts;
        long long d = 0;
        for (int tries = 0; tries < 500 && ts.size() < 4; ++tries) {
            Monomial m;
            m.nu.resize(n);
            m.mu.assign(n, 0);
            for (auto& x : m.nu) x = e(rng);
            long long r = dot(P, m.nu);
            if (r == 0) continue;
            if (ts.empty()) d = r;
            if (r != d) continue;
            m.coeff = GaussianRational(1 + (long long)ts.size());
            ts.push_back(m);
        }
        MixedPolynomial h(n, ts);
        if (h.size() < 2) continue;
        std::vector<int> J;
        for (int j = 0; j < n; ++j)
            if (rng() & 1) J.push_back(j);
        auto f = conjugate_vars(h, J);
        auto c = conjugate_wh(f);
        auto pt = polar_type(f);
        if (!c) continue;
        REQUIRE(pt);
        IVec Pj = c->P;
        for (int j : c->J) Pj[j] = -Pj[j];
        CHECK(pt->P == Pj);
        CHECK(pt->d_p == c->d);
        CHECK(conjugate_vars(f, c->J).is_holomorphic());
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("property: good factorization reconstructs the face") {
    std::mt19937_64 rng(403);
    std::uniform_int_distribution<int> e(0, 3), lam(-4, 4), kk(1, 3);
    int checked = 0;
    for (int it = 0; it < 300 && checked < 100; ++it) {
        long long a = e(rng), ap = e(rng), b = e(rng), bp = e(rng);
        if (a == ap || b == bp) continue;
        if (gcd_vec({a, ap, b, bp}) != 1) continue;
        int k = kk(rng);
        std::vector<GaussianRational> ls;
        while ((int)ls.size() < k) {
            GaussianRational l(Rational(lam(rng)), Rational(lam(rng)));
            if (l.is_zero()) continue;
            if (std::find(ls.begin(), ls.end(), l) != ls.end()) continue;
            ls.push_back(l);
        }
        Monomial Y, X;
        Y.coeff = X.coeff = GaussianRational(1);
        Y.nu = {0, a};
        Y.mu = {0, ap};
        X.nu = {b, 0};
        X.mu = {bp, 0};
        MixedPolynomial f = MixedPolynomial::constant(2, GaussianRational(Rational(2), Rational(1)));
        for (const auto& l : ls) {
            X.coeff = -l;
            f = f * MixedPolynomial(2, {Y, X});
        }
        Monomial pre;
        pre.coeff = GaussianRational(1);
        pre.nu = {e(rng), e(rng)};
        pre.mu = {e(rng), e(rng)};
        f = multiply_monomial(f, pre);
        auto g = good_polar_factorization(f);
        REQUIRE(g);
        CHECK(g->k == k);
        CHECK(g->squarefree());
        CHECK(lkn_star_good(*g) == k * gcd_abs(a - ap, b - bp));
        for (int s = 0; s < 20; ++s) {
            auto z = random_torus_point(rng, 2);
            CHECK(rel_err(evaluate(*g, z), evaluate(f, z)) < 1e-9);
        }
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("property: binomial gcd equals determinant over polar degree") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> e(0, 5);
    int checked = 0;
    for (int it = 0; it < 500 && checked < 100; ++it) {
        long long a = e(rng), ap = e(rng), b = e(rng), bp = e(rng);
        if (a == ap || b == bp) continue;
        Monomial Y, X;
        Y.coeff = GaussianRational(1);
        X.coeff = GaussianRational(-3);
        Y.nu = {0, a};
        Y.mu = {0, ap};
        X.nu = {b, 0};
        X.mu = {bp, 0};
        MixedPolynomial f(2, {Y, X});
        auto sd = simplicial_check(f);
        auto pt = polar_type(f);
        REQUIRE(sd);
        REQUIRE(pt);
        CHECK(sd->det_N_abs % pt->d_p == 0);
        CHECK(sd->det_N_abs / pt->d_p == lkn_star_binomial(a, ap, b, bp));
        ++checked;
    }
    CHECK(checked >= 100);
}

}
