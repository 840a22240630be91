#include <doctest.h>

#include "helpers.hpp"
#include "mixsing/invariants.hpp"
#include "mixsing/newton.hpp"
#include "mixsing/nondegen.hpp"

#include <numeric>

using namespace mixsing;
using namespace testutil;

namespace {

using Z = ZetaFunction;

const char* F0 = "-2z1^2*zb1 + z2^2*zb2";
const char* F3 = "-2z1^2*zb1 + z2^2*zb2 + 3z1^2*zb2";
const char* THREE_FACE = "z1^5 + zb1*z2*(z1^2 - zb2^2) + zb2^5";

// Components of {a t1 + b t2 = 0} on the torus: follow the |b| branches of t2
// as t1 goes once around and count the cycles of the induced permutation.
long long circle_oracle(long long a, long long b) {
    if (b == 0) return std::abs(a);
    long long m = std::abs(b);
    std::vector<bool> seen(m, false);
    long long cycles = 0;
    for (long long k = 0; k < m; ++k) {
        if (seen[k]) continue;
        ++cycles;
        for (long long j = k; !seen[j]; j = (((j - a * (b > 0 ? 1 : -1)) % m) + m) % m) seen[j] = true;
    }
    return cycles;
}

// dim C[x,y] / (f_x, f_y, m^N) over GF(p), holomorphic f with integer coefficients.
long long milnor_oracle(const MixedPolynomial& f, int N) {
    const long long p = 1000003;
    auto idx = [N](int i, int j) { return (i + j) * (i + j + 1) / 2 + j; };
    int cols = N * (N + 1) / 2;
    std::vector<std::vector<long long>> rows;
    auto w = wirtinger(f);
    for (int v = 0; v < 2; ++v) {
        const auto& g = w.df[v];
        for (int s = 0; s < N; ++s)
            for (int b = 0; b <= s; ++b) {
                int a = s - b;
                std::vector<long long> row(cols, 0);
                bool any = false;
                for (const auto& t : g.terms) {
                    int i = a + (int)t.nu[0], j = b + (int)t.nu[1];
                    if (i + j >= N) continue;
                    long long c = t.coeff.re.convert_to<long long>() % p;
                    row[idx(i, j)] = ((row[idx(i, j)] + c) % p + p) % p;
                    any = true;
                }
                if (any) rows.push_back(row);
            }
    }
    auto inv = [p](long long x) {
        long long r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    long long rank = 0;
    for (int c = 0; c < cols && rank < (long long)rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        long long iv = inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = x * iv % p;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == (size_t)rank || rows[r][c] == 0) continue;
            long long fct = rows[r][c];
            for (int k = c; k < cols; ++k) rows[r][k] = ((rows[r][k] - fct * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return cols - rank;
}

void check_triangle(const CurveInvariants& ci) {
    CHECK(ci.mu == 1 - ci.chi_F);
    CHECK(degree(zeta_char_poly(ci.zeta)) == ci.mu);
    for (const auto& r : ci.per_face) CHECK(r.chi_F_star + r.r_star * r.m == 0);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("binomial link numbers") {
    CHECK(lkn_star_binomial(2, 0, 0, 2) == 2);
    CHECK(lkn_star_binomial(2, 1, 2, 1) == 1);
    CHECK(lkn_star_binomial(3, 0, 5, 0) == 1);
    CHECK_THROWS_AS(lkn_star_binomial(1, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lkn_star_binomial(2, 0, 3, 3), std::invalid_argument);
}

TEST_CASE("good face link numbers") {
    auto f = parse(THREE_FACE);
    auto b = boundary2d(f);
    REQUIRE(b.edges.size() == 3);
    std::vector<long long> per;
    for (const auto& e : b.edges) {
        auto g = good_polar_factorization(face_function(e.weight, f));
        REQUIRE(g);
        per.push_back(lkn_star_good(*g));
    }
    CHECK(per == std::vector<long long>{1, 2, 1});
    auto lines = good_polar_factorization(parse("(z2 - z1)*(z2 - 2z1)*(z2 - 3z1)"));
    REQUIRE(lines);
    CHECK(lkn_star_good(*lines) == 3);
    auto dbl = good_polar_factorization(parse("z2^2 - 2z1*z2 + z1^2"));
    REQUIRE(dbl);
    CHECK_THROWS(lkn_star_good(*dbl));
}

TEST_CASE("total link numbers") {
    CHECK(lkn_total(parse(THREE_FACE)) == 4);
    auto h = parse("z1^4 + z2^6");
    CHECK(lkn_total(h) == boundary_lattice_points(boundary2d(h)) - 1);
    CHECK(lkn_total(h) == 2);
    auto pc = parse("z1^5 + z1^2*zb2^2 + z2^3*zb2^2");
    CHECK(lkn_total(pc) == boundary_lattice_points(boundary2d(pc)) - 1);
    CHECK_THROWS_AS(lkn_total(parse("z1^3 + z1^2*zb1 + z2^2")), std::invalid_argument);
}

TEST_CASE("tracker examples") {
    auto check = [](const char* s, int expect) {
        auto t = lkn_numeric(parse(s), 2048, 0);
        CHECK_MESSAGE(t.ok(), s);
        CHECK_MESSAGE(t.cycles == expect, s);
        std::vector<int> perm = t.permutation;
        std::sort(perm.begin(), perm.end());
        std::vector<int> id(perm.size());
        std::iota(id.begin(), id.end(), 0);
        CHECK(perm == id);
        CHECK(t.permutation.size() == t.solutions_at_zero.size());
    };
    check(F0, 1);
    check(F3, 3);
    check("z1^3 + 0.5z1*zb1^2 - z2^3", 3);
    check("z1^3 + 2z1*zb1^2 - z2^3", 1);
    CHECK_THROWS(lkn_numeric(parse("z1 + z1^2*z2"), 2048, 0));
}

TEST_CASE("tracker is stable under step doubling") {
    for (const char* s : {F0, F3, "z1^3 + 0.5z1*zb1^2 - z2^3", "z1^3 + 2z1*zb1^2 - z2^3"}) {
        auto a = lkn_numeric(parse(s), 2048, 0);
        auto b = lkn_numeric(parse(s), 4096, 0);
        CHECK_MESSAGE(a.cycles == b.cycles, s);
    }
}

TEST_CASE("euler characteristics and zeta from the polar route") {
    auto c3 = chi_zeta_polar(parse(F3), 3);
    CHECK(c3.chi_F_star == -3);
    CHECK(c3.chi_F == -1);
    CHECK(c3.zeta == Z({{1, 1}}));
    auto c0 = chi_zeta_polar(parse(F0), 1);
    CHECK(c0.chi_F_star == -1);
    CHECK(c0.chi_F == 1);
    auto b = chi_zeta_polar(parse("z1^3 + z2^3"), 3);
    CHECK(b.chi_F_star == -9);
    CHECK(b.chi_F == -3);
}

TEST_CASE("zeta and milnor number from the face formula") {
    auto cusp = parse("z2^2 - z1^3");
    auto fr = face_records(cusp);
    auto cz = zeta_from_faces(cusp, fr);
    CHECK(cz.zeta == Z({{2, -1}, {3, -1}, {6, 1}}));
    CHECK(cz.chi_F == -1);
    CHECK(milnor_from_faces(cusp, fr) == 2);

    auto f3 = parse(F3);
    auto f3r = face_records(f3);
    CHECK(zeta_from_faces(f3, f3r).zeta == Z({{1, 1}}));
    CHECK(zeta_from_faces(f3, f3r).chi_F == -1);
    CHECK(milnor_from_faces(f3, f3r) == 2);

    auto br = parse("z1^3 + z2^5");
    CHECK(milnor_from_faces(br, face_records(br)) == 8);

    try {
        face_records(parse("z1^3 + z1^2*zb1 + z2^2"));
        FAIL("no refusal");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("multiple vertex") != std::string::npos);
    }
}

TEST_CASE("pipeline examples") {
    auto a = curve_invariants(parse(F3));
    CHECK(a.lkn == 3);
    CHECK(a.chi_F == -1);
    CHECK(a.mu == 2);
    CHECK(a.zeta.to_string() == "(1-t)");
    REQUIRE(a.per_face.size() == 1);
    CHECK(a.per_face[0].chi_F_star == -3);
    check_triangle(a);

    auto c = curve_invariants(parse("z2^2 - z1^3"));
    CHECK(c.mu == 2);
    CHECK(c.zeta.to_string() == "(1-t^2)^-1(1-t^3)^-1(1-t^6)");
    CHECK(format_int_poly(zeta_char_poly(c.zeta)) == "t^2 - t + 1");
    check_triangle(c);

    auto e = curve_invariants(parse("z1^3 + z2^5"));
    CHECK(e.mu == 8);
    check_triangle(e);

    auto x = curve_invariants(parse("z1^3*zb1^2 + z1^2*z2^2 + z2^3*zb2"));
    CHECK(x.mu == 4);
    check_triangle(x);
    CHECK(x.warnings.empty());
}

TEST_CASE("closed forms for good polar weighted curves") {
    auto cusp = good_polar_factorization(parse("z2^2 - z1^3"));
    REQUIRE(cusp);
    auto r = good_polar_closed_form(*cusp);
    CHECK(r.d_p == 6);
    CHECK(r.lkn == 1);
    CHECK(r.mu == 2);
    CHECK(r.zeta == Z({{2, -1}, {3, -1}, {6, 1}}));

    // polar exponents a = 2, b = 2: z2^2 - z1^2 |z1|^2
    auto two = good_polar_factorization(parse("z2^2 - z1^3*zb1"));
    REQUIRE(two);
    auto s = good_polar_closed_form(*two);
    CHECK(s.d_p == 2);
    CHECK(s.lkn == 2);
    CHECK(s.mu == 1);
    CHECK(s.zeta.is_trivial());

    auto lines = good_polar_factorization(parse("z2^2 - z1^2"));
    REQUIRE(lines);
    CHECK(good_polar_closed_form(*lines).mu == 1);

    auto dbl = good_polar_factorization(parse("z2^2 - 2z1*z2 + z1^2"));
    REQUIRE(dbl);
    CHECK_THROWS(good_polar_closed_form(*dbl));
}

TEST_CASE("simplicial zeta") {
    auto bin = parse("z2^2*zb2 - z1^2*zb1");
    auto sd = simplicial_check(bin);
    REQUIRE(sd);
    CHECK(zeta_simplicial(*sd, 2, 1) == Z({{1, 1}}));
    auto cusp = simplicial_check(parse("z2^2 - z1^3"));
    REQUIRE(cusp);
    CHECK(cusp->det_N_abs == 6);
    CHECK(zeta_simplicial(*cusp, 2, 6) == Z({{6, 1}}));
    auto chain = parse("z1^3*zb2 + z2^3*zb3 + z3^3*zb1");
    auto sc = simplicial_check(chain);
    auto pt = polar_type(chain);
    REQUIRE(sc);
    REQUIRE(pt);
    CHECK(pt->d_p == 2);
    CHECK(zeta_simplicial(*sc, 3, pt->d_p) == Z({{2, -13}}));
    CHECK_THROWS(zeta_simplicial(*sd, 2, 4));
}

TEST_CASE("circle components") {
    CHECK(circle_components(2, 3) == 1);
    CHECK(circle_components(4, 6) == 2);
    CHECK(circle_components(0, 5) == 5);
    CHECK_THROWS(circle_components(0, 0));
    for (long long a = -9; a <= 9; ++a)
        for (long long b = -9; b <= 9; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(circle_components(a, b) == circle_oracle(a, b));
        }
}

TEST_CASE("zeta normalization and characteristic polynomials") {
    Z z({{3, -1}, {1, 2}, {3, 1}, {2, 0}, {1, -1}});
    CHECK(z == Z({{1, 1}}));
    CHECK((z * z.inverse()).is_trivial());
    CHECK_THROWS(Z({{0, 1}}));
    CHECK(Z().to_string() == "1");
    CHECK(Z({{4, 2}}).to_string() == "(1-t^4)^2");

    auto cusp = Z({{6, 1}, {2, -1}, {3, -1}});
    auto p = zeta_char_poly(cusp);
    CHECK(p == IntPoly{1, -1, 1});
    CHECK(format_int_poly(p) == "t^2 - t + 1");
    CHECK(zeta_char_poly(Z()) == IntPoly{1, -1});
    CHECK(zeta_char_poly(Z({{1, 1}})) == IntPoly{1, -2, 1});
    CHECK_THROWS_AS(zeta_char_poly(Z({{2, -1}})), std::domain_error);
}

TEST_CASE("property: binomial routes agree") {
    std::mt19937_64 rng(601);
    std::uniform_int_distribution<int> e(0, 5);
    int checked = 0;
    while (checked < 24) {
        long long a = e(rng), ap = e(rng), b = e(rng), bp = e(rng);
        if (a == ap || b == bp) continue;
        Monomial Y, X;
        Y.coeff = GaussianRational(1);
        X.coeff = GaussianRational(-2);
        Y.nu = {0, a};
        Y.mu = {0, ap};
        X.nu = {b, 0};
        X.mu = {bp, 0};
        MixedPolynomial f(2, {Y, X});
        long long g = lkn_star_binomial(a, ap, b, bp);
        auto sd = simplicial_check(f);
        auto pt = polar_type(f);
        REQUIRE(sd);
        REQUIRE(pt);
        CHECK(sd->det_N_abs / pt->d_p == g);
        auto t = lkn_numeric(f, 2048, 0);
        CHECK(t.ok());
        CHECK_MESSAGE(t.cycles == g, format(f));
        ++checked;
    }
}

TEST_CASE("property: closed forms match the pipeline") {
    std::mt19937_64 rng(602);
    std::uniform_int_distribution<int> e(0, 3), kk(1, 2);
    int checked = 0;
    for (int it = 0; it < 400 && checked < 30; ++it) {
        long long a = e(rng), ap = e(rng), b = e(rng), bp = e(rng);
        if (a == ap || b == bp || gcd_vec({a, ap, b, bp}) != 1) continue;
        int k = kk(rng);
        Monomial Y, X;
        Y.coeff = GaussianRational(1);
        Y.nu = {0, a};
        Y.mu = {0, ap};
        X.nu = {b, 0};
        X.mu = {bp, 0};
        MixedPolynomial f = MixedPolynomial::constant(2, GaussianRational(1));
        for (int j = 1; j <= k; ++j) {
            X.coeff = GaussianRational(-j);
            f = f * MixedPolynomial(2, {Y, X});
        }
        auto fac = good_polar_factorization(f);
        REQUIRE(fac);
        auto c = good_polar_closed_form(*fac);
        CurveInvariants ci;
        try {
            ci = curve_invariants(f);
        } catch (const std::exception& ex) {
            FAIL_CHECK(format(f) << ": " << ex.what());
            continue;
        }
        CHECK_MESSAGE(ci.mu == c.mu, format(f));
        CHECK_MESSAGE(ci.zeta == c.zeta, format(f));
        CHECK_MESSAGE(ci.lkn == c.lkn, format(f));
        check_triangle(ci);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("property: holomorphic milnor numbers match the local algebra") {
    std::vector<const char*> corpus{
        "z2^2 - z1^3",          "z1^3 + z2^5",          "z1^2 + z2^7",         "z1^4 + z2^4",
        "z1^3 + z2^4",          "z1^4 + z2^5",          "z1^3 + z1*z2^3",      "z1^5 + z1^2*z2^2 + z2^5",
        "z1^4 + z1*z2^2 + z2^6", "z1^6 + z1^2*z2 + z2^3", "z1^3 + z2^3",        "z1^2*z2 + z1^4 + z2^4",
        "z1^4 - z2^2 + 3z1^2*z2",
    };
    ProbeConfig cfg;
    int compared = 0;
    for (const char* s : corpus) {
        auto f = parse(s);
        if (!is_convenient(f)) continue;
        if (!check_all(f, CheckMode::nondeg, cfg).clean) continue;
        auto ci = curve_invariants(f);
        CHECK_MESSAGE(ci.mu == milnor_oracle(f, 30), s);
        check_triangle(ci);
        ++compared;
    }
    CHECK(compared >= 10);
}

}
