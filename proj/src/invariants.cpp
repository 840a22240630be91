#include "mixsing/invariants.hpp"

#include "mixsing/newton.hpp"
#include "mixsing/numeric_poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace mixsing {

const char* to_string(Route r) {
    switch (r) {
        case Route::gcd_formula: return "gcd_formula";
        case Route::lattice_count: return "lattice_count";
        case Route::det_formula: return "det_formula";
        case Route::tracker: return "tracker";
        case Route::face_formula: return "face_formula";
        case Route::milnor_formula: return "milnor_formula";
        case Route::end_correction: return "end_correction";
        case Route::closed_form: return "closed_form";
    }
    return "?";
}

long long lkn_star_binomial(long long a, long long a_pr, long long b, long long b_pr) {
    long long c1 = b - b_pr, c2 = a - a_pr;
    if (c1 == 0 || c2 == 0) throw std::invalid_argument("binomial is not polar weighted (zero polar exponent)");
    return gcd_abs(c1, c2);
}

long long lkn_star_good(const GoodPolarFactorization& fac) {
    if (!fac.squarefree()) throw std::invalid_argument("repeated root in the factorization: degenerate face");
    return fac.k * lkn_star_binomial(fac.a, fac.a_pr, fac.b, fac.b_pr);
}

namespace {

struct Slice {
    NumericPoly f, f1, fb1, f2, fb2;
    explicit Slice(const MixedPolynomial& g)
        : f(g), f1(d_dz(g, 0)), fb1(d_dzbar(g, 0)), f2(d_dz(g, 1)), fb2(d_dzbar(g, 1)) {}

    // One Newton step on z1 at fixed z2; returns the step.
    bool step(cplx& z1, cplx z2, cplx& delta, double& resid, double& mass) const {
        CVec z{z1, z2};
        cplx F = f.eval_mass(z, mass);
        resid = std::abs(F);
        cplx A = f1(z), B = fb1(z);
        cplx dx = A + B, dy = cplx(0, 1) * (A - B);
        Eigen::Matrix2d J;
        J << dx.real(), dy.real(), dx.imag(), dy.imag();
        double det = J.determinant();
        if (!(std::abs(det) > 1e-300)) return false;
        Eigen::Vector2d s = J.inverse() * Eigen::Vector2d(-F.real(), -F.imag());
        delta = cplx(s[0], s[1]);
        return std::isfinite(s[0]) && std::isfinite(s[1]);
    }

    bool tangent(cplx z1, cplx z2, cplx& t) const {
        CVec z{z1, z2};
        cplx A = f1(z), B = fb1(z);
        cplx dx = A + B, dy = cplx(0, 1) * (A - B);
        cplx da = cplx(0, 1) * z2 * f2(z) - cplx(0, 1) * std::conj(z2) * fb2(z);
        Eigen::Matrix2d J;
        J << dx.real(), dy.real(), dx.imag(), dy.imag();
        if (!(std::abs(J.determinant()) > 1e-300)) return false;
        Eigen::Vector2d s = J.inverse() * Eigen::Vector2d(-da.real(), -da.imag());
        t = cplx(s[0], s[1]);
        return std::isfinite(s[0]) && std::isfinite(s[1]);
    }

    bool correct(cplx& z1, cplx z2, int max_it) const {
        for (int it = 0; it < max_it; ++it) {
            cplx d;
            double r, m;
            if (!step(z1, z2, d, r, m)) return false;
            z1 += d;
            if (std::abs(d) <= 1e-12 * std::max(1.0, std::abs(z1))) return true;
        }
        return false;
    }
};

double tol_at(cplx z, double t) { return t * std::max(1.0, std::abs(z)); }

std::vector<cplx> seed_roots(const Slice& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(0.0, 2 * std::numbers::pi / 48);
    double off = ud(rng);
    std::vector<cplx> roots;
    const cplx z2(1, 0);
    for (int i = 0; i <= 32; ++i) {
        double lr = -4.0 + 8.0 * i / 32;
        for (int j = 0; j < 48; ++j) {
            cplx z1 = std::polar(std::exp(lr), off + 2 * std::numbers::pi * j / 48);
            bool ok = false;
            for (int it = 0; it < 80; ++it) {
                cplx d;
                double r, m;
                if (!s.step(z1, z2, d, r, m)) break;
                double lim = 0.5 * std::abs(z1) + 1e-3;
                if (std::abs(d) > lim) d *= lim / std::abs(d);
                z1 += d;
                if (!std::isfinite(std::abs(z1)) || std::abs(z1) > 1e9) break;
                if (std::abs(d) <= 1e-13 * std::max(1.0, std::abs(z1))) {
                    ok = true;
                    break;
                }
            }
            if (!ok || std::abs(z1) < 1e-9) continue;
            double m;
            cplx F = s.f.eval_mass({z1, z2}, m);
            if (std::abs(F) > 1e-9 * std::max(m, 1e-300)) continue;
            bool dup = false;
            for (cplx r : roots) dup = dup || std::abs(r - z1) < tol_at(r, 1e-8);
            if (!dup) roots.push_back(z1);
        }
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

// The zero set on |z2| = 1 as a curve in (log|z1|, arg z1, a).
struct Curve {
    const Slice& s;

    bool eval(const Eigen::Vector3d& u, Eigen::Vector2d& F, Eigen::Matrix<double, 2, 3>& J) const {
        cplx z1 = std::polar(std::exp(u[0]), u[1]), z2 = std::polar(1.0, u[2]);
        CVec z{z1, z2};
        double m;
        cplx v = s.f.eval_mass(z, m);
        if (!(m > 0) || !std::isfinite(m)) return false;
        cplx A = s.f1(z), B = s.fb1(z), C = s.f2(z), D = s.fb2(z);
        const cplx I(0, 1);
        cplx dr = z1 * A + std::conj(z1) * B;
        cplx dt = I * (z1 * A - std::conj(z1) * B);
        cplx da = I * (z2 * C - std::conj(z2) * D);
        F << v.real() / m, v.imag() / m;
        J << dr.real() / m, dt.real() / m, da.real() / m, dr.imag() / m, dt.imag() / m, da.imag() / m;
        return true;
    }

    bool tangent(const Eigen::Vector3d& u, Eigen::Vector3d& t) const {
        Eigen::Vector2d F;
        Eigen::Matrix<double, 2, 3> J;
        if (!eval(u, F, J)) return false;
        t = Eigen::Vector3d(J.row(0).transpose()).cross(Eigen::Vector3d(J.row(1).transpose()));
        double n = t.norm();
        if (!(n > 1e-14)) return false;
        t /= n;
        return true;
    }

    bool correct(Eigen::Vector3d& u, const Eigen::Vector3d& t) const {
        for (int it = 0; it < 8; ++it) {
            Eigen::Vector2d F;
            Eigen::Matrix<double, 2, 3> J;
            if (!eval(u, F, J)) return false;
            Eigen::Matrix3d M;
            M.topRows<2>() = J;
            M.row(2) = t.transpose();
            Eigen::Vector3d rhs(-F[0], -F[1], 0.0);
            Eigen::Vector3d d = M.partialPivLu().solve(rhs);
            if (!d.allFinite()) return false;
            u += d;
            if (d.norm() < 1e-12) return true;
        }
        return false;
    }
};

// Trace the component through root i; crossings of a = 0 mod 2 pi in order, ending with i.
bool trace_component(const Slice& s, const std::vector<cplx>& roots, size_t i, int steps, std::vector<int>& seq,
                     std::string& why) {
    Curve c{s};
    const double two_pi = 2 * std::numbers::pi;
    const double hmax = two_pi / steps;
    Eigen::Vector3d u(std::log(std::abs(roots[i])), std::arg(roots[i]), 0.0), t;
    if (!c.tangent(u, t)) {
        why = "singular start at root " + std::to_string(i);
        return false;
    }
    if (t[2] < 0) t = -t;
    double h = hmax, travelled = 0;
    const long long limit = 400LL * steps;
    seq.clear();
    for (long long it = 0; it < limit; ++it) {
        Eigen::Vector3d un = u + h * t, tn;
        bool ok = c.correct(un, t) && (un - (u + h * t)).norm() < 0.3 * h && c.tangent(un, tn);
        if (ok) {
            if (tn.dot(t) < 0) tn = -tn;
            ok = tn.dot(t) > 0.8;
        }
        if (!ok) {
            h /= 2;
            if (h < hmax * 1e-4) {
                why = "step size underflow near a=" + std::to_string(std::fmod(u[2], two_pi));
                return false;
            }
            continue;
        }
        if (std::abs(un[0]) > 25) {
            why = "path leaves the torus";
            return false;
        }
        double k0 = std::floor(u[2] / two_pi), k1 = std::floor(un[2] / two_pi);
        travelled += (un - u).norm();
        if (k0 != k1) {
            double ak = two_pi * std::max(k0, k1);
            double lam = (ak - u[2]) / (un[2] - u[2]);
            Eigen::Vector3d ux = u + lam * (un - u);
            cplx z1 = std::polar(std::exp(ux[0]), ux[1]);
            if (!s.correct(z1, cplx(1, 0), 20)) {
                why = "crossing of a=0 did not converge";
                return false;
            }
            int j = -1;
            for (size_t r = 0; r < roots.size(); ++r)
                if (std::abs(z1 - roots[r]) < tol_at(roots[r], 1e-6)) j = static_cast<int>(r);
            if (j < 0) {
                why = "crossing of a=0 does not match a seeded root";
                return false;
            }
            if (!(static_cast<size_t>(j) == i && travelled < 2 * hmax)) {
                if (std::find(seq.begin(), seq.end(), j) != seq.end()) {
                    why = "path jump: root " + std::to_string(j) + " crossed twice";
                    return false;
                }
                seq.push_back(j);
                if (static_cast<size_t>(j) == i) return true;
            }
        }
        u = un;
        t = tn;
        h = std::min(1.5 * h, hmax);
    }
    why = "component did not close";
    return false;
}

int count_cycles(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int c = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(perm[j])) seen[j] = true;
    }
    return c;
}

}  // namespace

TrackerResult lkn_numeric(const MixedPolynomial& f, int steps, std::uint64_t seed) {
    if (f.n != 2) throw std::invalid_argument("tracker requires n=2");
    if (steps < 8) throw std::invalid_argument("tracker needs at least 8 steps");
    auto rt = radial_type(f);
    if (!rt || rt->Q[0] <= 0 || rt->Q[1] <= 0)
        throw std::invalid_argument("tracker requires a radially weighted homogeneous f with positive weights");
    Slice s(f);
    TrackerResult res;
    res.solutions_at_zero = seed_roots(s, seed);
    const size_t N = res.solutions_at_zero.size();
    int cur = steps;
    for (int level = 0; level <= 2; ++level, cur *= 4) {
        res.failures.clear();
        res.steps_used = cur;
        res.permutation.assign(N, -1);
        for (size_t i = 0; i < N && res.failures.empty(); ++i) {
            if (res.permutation[i] >= 0) continue;
            std::vector<int> seq;
            std::string why;
            if (!trace_component(s, res.solutions_at_zero, i, cur, seq, why)) {
                res.failures.push_back("root " + std::to_string(i) + ": " + why);
                break;
            }
            int prev = static_cast<int>(i);
            for (int j : seq) {
                if (res.permutation[static_cast<size_t>(prev)] >= 0) {
                    res.failures.push_back("root " + std::to_string(prev) + " reached from two components");
                    break;
                }
                res.permutation[static_cast<size_t>(prev)] = j;
                prev = j;
            }
        }
        if (res.failures.empty()) {
            res.cycles = count_cycles(res.permutation);
            return res;
        }
    }
    res.permutation.clear();
    res.cycles = -1;
    return res;
}

namespace {

long long axis_abs(const std::optional<long long>& a, const char* name) {
    if (*a == 0) throw std::invalid_argument(std::string("polar section ") + name + " is 0");
    return std::llabs(*a);
}

std::string point_str(const IVec& p) { return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")"; }

}  // namespace

namespace {

std::vector<FaceRecord> resolve_faces(const MixedPolynomial& f, const InvariantOptions& opt, bool polar) {
    if (f.n != 2) throw std::invalid_argument("curve invariants require n=2");
    NewtonBoundary2D B = boundary2d(f);
    for (const auto& v : B.vertices)
        if (v.term_indices.size() != 1)
            throw std::invalid_argument("vertex " + point_str(v.point) + " is a multiple vertex" +
                                        (polar ? "" : "; use the tracker (lkn) instead"));
    for (size_t i = 1; polar && i + 1 < B.vertices.size(); ++i)
        if (!is_polar_admissible(f.terms[B.vertices[i].term_indices[0]]))
            throw std::invalid_argument("inner vertex " + point_str(B.vertices[i].point) + " is not polar admissible");
    std::vector<FaceRecord> out;
    for (size_t i = 0; i < B.edges.size(); ++i) {
        const Face& e = B.edges[i];
        MixedPolynomial fD = face_function(e.weight, f);
        FaceRecord r;
        r.face_id = static_cast<int>(i);
        r.weight = e.weight;
        r.face_function = format(fD);
        if (polar) {
            auto pt = polar_type(fD);
            if (!pt)
                throw std::invalid_argument("face " + std::to_string(i) + " (" + r.face_function +
                                            ") is not polar weighted");
            r.m = pt->d_p;
        }
        if (auto fac = good_polar_factorization(fD)) {
            if (!fac->squarefree())
                throw std::invalid_argument("face " + std::to_string(i) + " has a repeated root: degenerate face");
            r.r_star = lkn_star_good(*fac);
            r.route = Route::gcd_formula;
        } else if (pseudo_conjugate_wh(fD)) {
            IVec d{B.vertices[i + 1].point[0] - B.vertices[i].point[0], B.vertices[i + 1].point[1] - B.vertices[i].point[1]};
            r.r_star = gcd_vec(d);
            r.route = Route::lattice_count;
        } else if (opt.allow_tracker) {
            TrackerResult tr = lkn_numeric(fD, opt.steps, opt.seed);
            if (!tr.ok()) throw NonConvergence("tracker failed on face " + std::to_string(i) + ": " + tr.failures.front());
            r.r_star = tr.cycles;
            r.route = Route::tracker;
        } else {
            throw std::invalid_argument("face " + std::to_string(i) + ": no exact route for lkn*");
        }
        r.chi_F_star = -r.r_star * r.m;
        out.push_back(r);
    }
    return out;
}

}  // namespace

std::vector<FaceRecord> face_records(const MixedPolynomial& f, const InvariantOptions& opt) {
    return resolve_faces(f, opt, true);
}

long long lkn_total(const MixedPolynomial& f, const InvariantOptions& opt) {
    long long s = 0;
    for (const auto& r : resolve_faces(f, opt, false)) s += r.r_star;
    PolarSections ps = polar_sections(f);
    // a missing axis vertex means that coordinate axis lies in V
    if (!ps.a1) ++s;
    if (!ps.a2) ++s;
    return s;
}

ChiZeta zeta_from_faces(const MixedPolynomial& f, const std::vector<FaceRecord>& faces) {
    PolarSections ps = polar_sections(f);
    if (!ps.a1 && !ps.a2) throw std::invalid_argument("Newton boundary meets neither axis");
    ChiZeta out;
    std::vector<std::pair<long long, long long>> fs;
    for (const auto& r : faces) {
        out.chi_F_star += r.chi_F_star;
        fs.emplace_back(r.m, r.r_star);
    }
    out.chi_F = out.chi_F_star;
    if (ps.a1) {
        long long a = axis_abs(ps.a1, "a1");
        out.chi_F += a;
        fs.emplace_back(a, -1);
    }
    if (ps.a2) {
        long long a = axis_abs(ps.a2, "a2");
        out.chi_F += a;
        fs.emplace_back(a, -1);
    }
    out.zeta = ZetaFunction(fs);
    return out;
}

long long milnor_from_faces(const MixedPolynomial& f, const std::vector<FaceRecord>& faces) {
    PolarSections ps = polar_sections(f);
    if (!ps.a1 && !ps.a2) throw std::invalid_argument("Newton boundary meets neither axis");
    long long mu = 1;
    for (const auto& r : faces) mu += r.r_star * r.m;
    if (ps.a1) mu -= axis_abs(ps.a1, "a1");
    if (ps.a2) mu -= axis_abs(ps.a2, "a2");
    return mu;
}

CurveInvariants curve_invariants(const MixedPolynomial& f, const InvariantOptions& opt) {
    CurveInvariants ci;
    ci.per_face = face_records(f, opt);
    PolarSections ps = polar_sections(f);
    if (ps.a1) ci.a1_abs = std::llabs(*ps.a1);
    if (ps.a2) ci.a2_abs = std::llabs(*ps.a2);
    ChiZeta cz = zeta_from_faces(f, ci.per_face);
    ci.chi_F = cz.chi_F;
    ci.zeta = cz.zeta;
    ci.mu = milnor_from_faces(f, ci.per_face);
    ci.lkn = 0;
    for (const auto& r : ci.per_face) ci.lkn += r.r_star;
    if (!ps.a1) ++ci.lkn;
    if (!ps.a2) ++ci.lkn;
    for (const auto& r : ci.per_face) ci.route["r_star[" + std::to_string(r.face_id) + "]"] = r.route;
    ci.route["chi_F"] = Route::face_formula;
    ci.route["zeta"] = Route::face_formula;
    ci.route["mu"] = Route::milnor_formula;
    if (!ps.a1 || !ps.a2) ci.warnings.push_back("boundary misses an axis: its polar section term is dropped");
    if (ci.mu != 1 - ci.chi_F) ci.warnings.push_back("mu differs from 1 - chi(F)");
    try {
        if (degree(zeta_char_poly(ci.zeta)) != ci.mu) ci.warnings.push_back("degree of zeta*(1-t) differs from mu");
    } catch (const std::domain_error&) {
        ci.warnings.push_back("zeta*(1-t) is not a polynomial");
    }
    for (const auto& r : ci.per_face) {
        auto sd = simplicial_check(face_function(r.weight, f));
        if (sd && r.m > 0 && sd->det_N_abs % r.m == 0 && sd->det_N_abs / r.m != r.r_star)
            ci.warnings.push_back("face " + std::to_string(r.face_id) + ": determinant route disagrees on lkn*");
    }
    return ci;
}

ChiZeta chi_zeta_polar(const MixedPolynomial& f, long long r_star) {
    if (f.n != 2) throw std::invalid_argument("requires n=2");
    auto pt = polar_type(f);
    if (!pt) throw std::invalid_argument("f is not polar weighted");
    NewtonBoundary2D B = boundary2d(f);
    const auto& e1 = B.vertices.front();
    const auto& e2 = B.vertices.back();
    if (e1.term_indices.size() != 1) throw std::invalid_argument("end vertex " + point_str(e1.point) + " is not simple");
    if (e2.term_indices.size() != 1) throw std::invalid_argument("end vertex " + point_str(e2.point) + " is not simple");
    ChiZeta out;
    out.chi_F_star = -r_star * pt->d_p;
    out.chi_F = out.chi_F_star;
    std::vector<std::pair<long long, long long>> fs{{pt->d_p, r_star}};
    if (e1.point[1] == 0) {
        const Monomial& m = f.terms[e1.term_indices[0]];
        long long a = std::llabs(m.nu[0] - m.mu[0]);
        if (a == 0) throw std::invalid_argument("polar section a1 is 0");
        out.chi_F += a;
        fs.emplace_back(a, -1);
    }
    if (e2.point[0] == 0) {
        const Monomial& m = f.terms[e2.term_indices[0]];
        long long a = std::llabs(m.nu[1] - m.mu[1]);
        if (a == 0) throw std::invalid_argument("polar section a2 is 0");
        out.chi_F += a;
        fs.emplace_back(a, -1);
    }
    out.zeta = ZetaFunction(fs);
    return out;
}

ClosedFormResult good_polar_closed_form(const GoodPolarFactorization& fac) {
    for (size_t j = 0; j < fac.pre_nu.size(); ++j)
        if (fac.pre_nu[j] != 0 || fac.pre_mu[j] != 0) throw std::invalid_argument("pre-monomial is not trivial");
    if (fac.a < 0 || fac.a_pr < 0 || fac.b < 0 || fac.b_pr < 0)
        throw std::invalid_argument("factor exponents must be nonnegative");
    if (!fac.squarefree()) throw std::invalid_argument("repeated lambda_j");
    long long A = std::llabs(fac.a - fac.a_pr), Bq = std::llabs(fac.b - fac.b_pr);
    if (A == 0 || Bq == 0) throw std::invalid_argument("not polar weighted");
    long long r = gcd_abs(A, Bq), k = fac.k;
    ClosedFormResult out;
    auto sgn = [](long long x) { return x > 0 ? 1LL : -1LL; };
    out.P = {A / r * sgn(fac.b - fac.b_pr), Bq / r * sgn(fac.a - fac.a_pr)};
    out.d_p = A * Bq * k / r;
    out.lkn = r * k;
    out.mu = (k * A - 1) * (k * Bq - 1);
    // the axis monomials are the k-th powers, so the polar sections are kA and kB
    out.zeta = ZetaFunction({{out.d_p, r * k}, {k * A, -1}, {k * Bq, -1}});
    return out;
}

ZetaFunction zeta_simplicial(const SimplicialData& sd, int n, long long d_p) {
    if (d_p <= 0) throw std::invalid_argument("polar degree must be positive");
    if (sd.det_N_abs % d_p != 0)
        throw std::invalid_argument("|det N| = " + std::to_string(sd.det_N_abs) + " is not divisible by d_p = " +
                                    std::to_string(d_p));
    long long e = sd.det_N_abs / d_p;
    return ZetaFunction({{d_p, n % 2 == 0 ? e : -e}});
}

long long circle_components(long long a, long long b) {
    if (a == 0 && b == 0) throw std::invalid_argument("circle_components: (0,0)");
    return gcd_abs(a, b);
}

}  // namespace mixsing
