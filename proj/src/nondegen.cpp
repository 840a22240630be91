#include "mixsing/nondegen.hpp"

#include "mixsing/classify.hpp"
#include "mixsing/newton.hpp"
#include "mixsing/numeric_poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace mixsing {

void ProbeConfig::validate() const {
    if (starts < 1 || iters < 1) throw std::invalid_argument("starts and iters must be >= 1");
    if (!(cert_threshold < report_threshold))
        throw std::invalid_argument("cert_threshold must be below report_threshold");
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::DegenerateWitness: return "DegenerateWitness";
        case VerdictKind::NoCriticalPointFound: return "NoCriticalPointFound";
        case VerdictKind::ZeroSetEmptyEvidence: return "ZeroSetEmptyEvidence";
        case VerdictKind::ZeroSetWitness: return "ZeroSetWitness";
        case VerdictKind::Borderline: return "Borderline";
    }
    return "?";
}

const char* to_string(CheckMode m) {
    switch (m) {
        case CheckMode::nondeg: return "nondeg";
        case CheckMode::strong: return "strong";
        case CheckMode::true_nd: return "true";
    }
    return "?";
}

namespace {

constexpr double kCertResidual = 1e-10;
constexpr double kMinCoord = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Goal { Critical, CriticalZero, Zero, CriticalOffZero };

std::vector<int> all_vars(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

// a = conj(df), b = dbarf
std::pair<double, cplx> align(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx t(0, 0);
    for (size_t k = 0; k < a.size(); ++k) t += a[k] * std::conj(b[k]);
    cplx alpha = std::abs(t) > 0 ? t / std::abs(t) : cplx(1, 0);
    double r = 0;
    for (size_t k = 0; k < a.size(); ++k) r += std::norm(a[k] - alpha * b[k]);
    return {std::sqrt(r), alpha};
}

struct Engine {
    int n;
    std::vector<int> fv;
    CVec base;
    std::vector<double> w;
    Goal goal;
    NumericPoly g;
    std::vector<NumericPoly> df, dbf;

    Engine(const MixedPolynomial& f, std::vector<int> free_vars, CVec base_, const IVec& P, Goal gl)
        : n(f.n), fv(std::move(free_vars)), base(std::move(base_)), goal(gl), g(f) {
        for (int j : fv) {
            df.emplace_back(d_dz(f, j));
            dbf.emplace_back(d_dzbar(f, j));
            w.push_back(P[j] > 0 ? static_cast<double>(P[j]) : 1.0);
        }
    }

    size_t m() const { return fv.size(); }

    CVec point(const std::vector<double>& x) const {
        CVec z = base;
        for (size_t k = 0; k < m(); ++k) z[fv[k]] = std::polar(std::exp(x[2 * k]), x[2 * k + 1]);
        return z;
    }

    std::pair<double, cplx> residual(const CVec& z) const {
        std::vector<cplx> a(m()), b(m());
        for (size_t k = 0; k < m(); ++k) {
            a[k] = std::conj(df[k](z));
            b[k] = dbf[k](z);
        }
        return align(a, b);
    }

    double objective(const std::vector<double>& x) const {
        CVec z = point(x);
        double S;
        cplx v = g.eval_mass(z, S);
        if (!(S > 0) || !std::isfinite(S)) return kInf;
        double G = 0;
        if (goal != Goal::Zero) {
            std::vector<cplx> a(m()), b(m());
            for (size_t k = 0; k < m(); ++k) {
                cplx zj = z[fv[k]];
                a[k] = std::conj(zj * df[k](z));
                b[k] = std::conj(zj) * dbf[k](z);
            }
            double r = align(a, b).first;
            G += r * r;
        }
        if (goal == Goal::CriticalZero || goal == Goal::Zero) G += std::norm(v);
        G /= S * S;
        return std::isfinite(G) ? G : kInf;
    }

    // The objective is invariant along the weight direction in log-radius.
    void project(std::vector<double>& x) const {
        double pw = 0, ww = 0;
        for (size_t k = 0; k < m(); ++k) {
            pw += x[2 * k] * w[k];
            ww += w[k] * w[k];
        }
        for (size_t k = 0; k < m(); ++k) x[2 * k] = std::clamp(x[2 * k] - pw / ww * w[k], -25.0, 25.0);
    }
};

struct StartResult {
    double G = kInf;
    std::vector<double> x;
};

StartResult descend(const Engine& e, std::uint64_t seed, int iters) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 2 * std::numbers::pi);
    const size_t dim = 2 * e.m();
    std::vector<double> x(dim), xn(dim), grad(dim), xp(dim);
    for (size_t k = 0; k < e.m(); ++k) {
        x[2 * k] = nd(rng);
        x[2 * k + 1] = ud(rng);
    }
    e.project(x);
    double G = e.objective(x);
    double eta = 0.1;
    int stall = 0;
    const double h = 1e-6;
    for (int it = 0; it < iters && G > 1e-28; ++it) {
        double gn = 0;
        for (size_t i = 0; i < dim; ++i) {
            xp = x;
            xp[i] += h;
            double gp = e.objective(xp);
            xp[i] -= 2 * h;
            double gm = e.objective(xp);
            grad[i] = std::isfinite(gp - gm) ? (gp - gm) / (2 * h) : 0.0;
            gn += grad[i] * grad[i];
        }
        if (gn < 1e-36) break;
        bool ok = false;
        double Gn = G;
        for (int tries = 0; tries < 40; ++tries) {
            for (size_t i = 0; i < dim; ++i) xn[i] = x[i] - eta * grad[i];
            e.project(xn);
            Gn = e.objective(xn);
            if (Gn < G) {
                ok = true;
                break;
            }
            eta *= 0.5;
        }
        if (!ok) break;
        stall = (G - Gn < 1e-9 * G) ? stall + 1 : 0;
        x = xn;
        G = Gn;
        eta = std::min(eta * 2, 1e3);
        if (stall >= 25) break;
    }
    return {G, x};
}

// Move free coordinates onto the unit sphere along the radial action.
void radial_normalize(CVec& z, const std::vector<int>& fv, const std::vector<double>& w) {
    auto h = [&](double s) {
        double t = 0;
        for (size_t k = 0; k < fv.size(); ++k) t += std::norm(z[fv[k]]) * std::exp(2 * s * w[k]);
        return t - 1;
    };
    double lo = -60, hi = 60;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (h(mid) > 0 ? hi : lo) = mid;
    }
    double s = 0.5 * (lo + hi);
    for (size_t k = 0; k < fv.size(); ++k) z[fv[k]] *= std::exp(s * w[k]);
}

struct Polished {
    CVec z;
    double residual = kInf;
    cplx alpha{1, 0};
    cplx f_value{0, 0};
    double mass = 0;
};

Polished polish(const Engine& e, const std::vector<double>& x) {
    CVec z = e.point(x);
    radial_normalize(z, e.fv, e.w);
    const size_t m = e.m();
    std::vector<double> u(2 * m + 1);
    for (size_t k = 0; k < m; ++k) {
        u[2 * k] = z[e.fv[k]].real();
        u[2 * k + 1] = z[e.fv[k]].imag();
    }
    u[2 * m] = e.goal == Goal::Zero ? 0.0 : std::arg(e.residual(z).second);

    auto to_z = [&](const std::vector<double>& v) {
        CVec p = e.base;
        for (size_t k = 0; k < m; ++k) p[e.fv[k]] = cplx(v[2 * k], v[2 * k + 1]);
        return p;
    };
    auto F = [&](const std::vector<double>& v) {
        CVec p = to_z(v);
        Eigen::VectorXd r;
        std::vector<double> out;
        if (e.goal != Goal::Zero) {
            cplx ph = std::polar(1.0, v[2 * m]);
            for (size_t k = 0; k < m; ++k) {
                cplx d = std::conj(e.df[k](p)) - ph * e.dbf[k](p);
                out.push_back(d.real());
                out.push_back(d.imag());
            }
        }
        if (e.goal == Goal::CriticalZero || e.goal == Goal::Zero) {
            cplx gv = e.g(p);
            out.push_back(gv.real());
            out.push_back(gv.imag());
        }
        double nn = 0;
        for (size_t k = 0; k < m; ++k) nn += std::norm(p[e.fv[k]]);
        out.push_back(nn - 1);
        return Eigen::Map<Eigen::VectorXd>(out.data(), static_cast<Eigen::Index>(out.size())).eval();
    };

    Eigen::VectorXd Fu = F(u);
    const double h = 1e-7;
    for (int it = 0; it < 60 && Fu.norm() > 1e-15; ++it) {
        Eigen::MatrixXd J(Fu.size(), static_cast<Eigen::Index>(u.size()));
        for (size_t i = 0; i < u.size(); ++i) {
            auto up = u, um = u;
            up[i] += h;
            um[i] -= h;
            J.col(static_cast<Eigen::Index>(i)) = (F(up) - F(um)) / (2 * h);
        }
        Eigen::VectorXd step = J.completeOrthogonalDecomposition().solve(-Fu);
        double t = 1.0;
        bool ok = false;
        for (int tries = 0; tries < 30; ++tries) {
            auto un = u;
            for (size_t i = 0; i < u.size(); ++i) un[i] += t * step[static_cast<Eigen::Index>(i)];
            Eigen::VectorXd Fn = F(un);
            if (Fn.allFinite() && Fn.norm() < Fu.norm()) {
                u = un;
                Fu = Fn;
                ok = true;
                break;
            }
            t *= 0.5;
        }
        if (!ok) break;
    }

    Polished out;
    out.z = to_z(u);
    auto [r, a] = e.residual(out.z);
    out.residual = r;
    out.alpha = a;
    out.f_value = e.g.eval_mass(out.z, out.mass);
    return out;
}

bool coords_ok(const CVec& z, const std::vector<int>& fv) {
    for (int j : fv)
        if (!(std::abs(z[j]) > kMinCoord) || !std::isfinite(std::abs(z[j]))) return false;
    return true;
}

bool certified(const Polished& p, const std::vector<int>& fv, Goal goal) {
    if (!coords_ok(p.z, fv)) return false;
    switch (goal) {
        case Goal::Critical: return p.residual < kCertResidual;
        case Goal::CriticalZero: return p.residual < kCertResidual && std::abs(p.f_value) < kCertResidual;
        case Goal::Zero: return std::abs(p.f_value) < kCertResidual;
        case Goal::CriticalOffZero:
            return p.residual < kCertResidual && std::abs(p.f_value) > 1e-6 * p.mass;
    }
    return false;
}

ProbeVerdict single_monomial(const MixedPolynomial& fP, const std::vector<int>& fv, const CVec& base, Goal goal,
                             const ProbeConfig& cfg) {
    ProbeVerdict v;
    v.config_echo = cfg;
    const Monomial& t = fP.terms.front();
    if (goal == Goal::Zero) {
        v.kind = VerdictKind::ZeroSetEmptyEvidence;
        v.detail = "single monomial: no zeros in the torus";
        v.stats.best_objective = 1.0;
        return v;
    }
    if (goal == Goal::CriticalZero) {
        v.kind = VerdictKind::NoCriticalPointFound;
        v.detail = "single monomial: no zeros in the torus";
        v.stats.best_objective = 1.0;
        return v;
    }
    bool balanced = true;
    for (int j : fv) balanced = balanced && t.nu[j] == t.mu[j];
    if (!balanced) {
        v.kind = VerdictKind::NoCriticalPointFound;
        v.detail = "single monomial with nu != mu: no critical points";
        v.stats.best_objective = 1.0;
        return v;
    }
    // nu = mu on the free variables: every torus point is critical
    CriticalPointCertificate c;
    c.point = base;
    for (int j : fv) c.point[j] = cplx(1.0 / std::sqrt(static_cast<double>(fv.size())), 0);
    auto [r, a] = critical_residual(fP, c.point, fv);
    c.residual = r;
    c.alpha = a;
    c.f_value = evaluate(fP, c.point);
    c.free_vars = fv;
    v.kind = VerdictKind::DegenerateWitness;
    v.detail = "single monomial with nu = mu: every torus point is critical";
    v.cert = c;
    return v;
}

ProbeVerdict run_probe(const MixedPolynomial& fP, const std::vector<int>& fv, const CVec& base, const IVec& P,
                       Goal goal, const ProbeConfig& cfg) {
    cfg.validate();
    if (fP.is_zero()) throw std::invalid_argument("empty face function");
    if (fP.size() == 1) return single_monomial(fP, fv, base, goal, cfg);

    Engine e(fP, fv, base, P, goal);
    std::vector<StartResult> runs;
    runs.reserve(cfg.starts);
    for (int s = 0; s < cfg.starts; ++s) runs.push_back(descend(e, cfg.seed + static_cast<std::uint64_t>(s), cfg.iters));

    ProbeVerdict v;
    v.config_echo = cfg;
    v.stats.starts = cfg.starts;
    std::vector<int> order(cfg.starts);
    for (int s = 0; s < cfg.starts; ++s) order[s] = s;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return runs[a].G < runs[b].G; });
    double best = std::sqrt(runs[order[0]].G);
    v.stats.best_objective = best;

    bool only_on_zero_fiber = goal == Goal::CriticalOffZero;
    bool near_axis = false;
    for (int idx = 0; idx < std::min(cfg.starts, 8); ++idx) {
        const StartResult& r = runs[order[idx]];
        if (!(std::sqrt(r.G) < cfg.report_threshold)) break;
        Polished p = polish(e, r.x);
        ++v.stats.polished;
        if (!(p.residual < kCertResidual && std::abs(p.f_value) <= 1e-6 * p.mass)) only_on_zero_fiber = false;
        if (!coords_ok(p.z, fv)) near_axis = true;
        if (!certified(p, fv, goal)) continue;
        if (goal == Goal::Zero) {
            v.kind = VerdictKind::ZeroSetWitness;
            v.zero_point = p.z;
            v.detail = "zero of the face function in the torus";
        } else {
            CriticalPointCertificate c{p.z, p.alpha, p.residual, p.f_value, fv};
            v.kind = VerdictKind::DegenerateWitness;
            v.cert = c;
            v.detail = "critical point certified by Newton polish";
        }
        return v;
    }
    if (goal == Goal::Zero) {
        if (best > 1e-3) {
            v.kind = VerdictKind::ZeroSetEmptyEvidence;
            v.detail = "min |f_P|/mass stays above 1e-3";
        } else {
            v.kind = VerdictKind::Borderline;
            v.detail = "small |f_P| without certified zero";
        }
        return v;
    }
    if (best < cfg.report_threshold && only_on_zero_fiber) {
        v.kind = VerdictKind::NoCriticalPointFound;
        v.detail = "critical points found only on the zero fiber";
    } else if (best < cfg.report_threshold) {
        v.kind = VerdictKind::Borderline;
        v.detail = near_axis ? "minimizer drifts toward a coordinate hyperplane"
                   : best < cfg.cert_threshold ? "objective below certificate threshold, polish did not certify"
                                               : "objective below report threshold";
    } else {
        v.kind = VerdictKind::NoCriticalPointFound;
        v.detail = "no critical point found";
    }
    return v;
}

bool sample_surjective(const MixedPolynomial& fP, const std::vector<int>& fv, const CVec& base, std::uint64_t seed) {
    NumericPoly g(fP);
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ud(0.0, 2 * std::numbers::pi);
    bool q[4] = {false, false, false, false};
    for (int s = 0; s < 1000; ++s) {
        CVec z = base;
        for (int j : fv) z[j] = std::polar(std::exp(nd(rng)), ud(rng));
        double S;
        cplx v = g.eval_mass(z, S);
        double tol = 1e-9 * S;
        if (std::abs(v.real()) <= tol || std::abs(v.imag()) <= tol) continue;
        q[(v.real() < 0 ? 1 : 0) + (v.imag() < 0 ? 2 : 0)] = true;
    }
    return q[0] && q[1] && q[2] && q[3];
}

void require_positive(const IVec& P, int n) {
    if (static_cast<int>(P.size()) != n) throw std::invalid_argument("weight length mismatch");
    for (long long p : P)
        if (p <= 0) throw std::invalid_argument("weight must be strictly positive");
}

ProbeVerdict probe_on(const MixedPolynomial& g, const std::vector<int>& I, const IVec& P, Goal goal,
                      const ProbeConfig& cfg) {
    MixedPolynomial fP = face_function(P, g);
    CVec base(g.n, cplx(1, 0));
    ProbeVerdict v = run_probe(fP, I, base, P, goal, cfg);
    if (goal == Goal::CriticalZero && face(P, g).dim >= 1) v.surjective_sample = sample_surjective(fP, I, base, cfg.seed);
    return v;
}

int severity(VerdictKind k) {
    switch (k) {
        case VerdictKind::DegenerateWitness: return 3;
        case VerdictKind::ZeroSetEmptyEvidence: return 2;
        case VerdictKind::Borderline: return 1;
        default: return 0;
    }
}

}  // namespace

std::pair<double, cplx> critical_residual(const MixedPolynomial& f, const CVec& z,
                                          const std::vector<int>& free_vars) {
    if (static_cast<int>(z.size()) != f.n) throw std::invalid_argument("point dimension mismatch");
    for (const cplx& c : z)
        if (c == cplx(0, 0)) throw std::invalid_argument("zero coordinate: point not in the torus");
    std::vector<cplx> a, b;
    for (int j : free_vars) {
        a.push_back(std::conj(evaluate(d_dz(f, j), z)));
        b.push_back(evaluate(d_dzbar(f, j), z));
    }
    return align(a, b);
}

std::pair<double, cplx> critical_residual(const MixedPolynomial& f, const CVec& z) {
    return critical_residual(f, z, all_vars(f.n));
}

bool verify_certificate(const MixedPolynomial& g, const CriticalPointCertificate& c) {
    std::vector<int> fv = c.free_vars.empty() ? all_vars(g.n) : c.free_vars;
    if (!coords_ok(c.point, fv)) return false;
    return critical_residual(g, c.point, fv).first < kCertResidual;
}

ProbeVerdict probe_face_nondegenerate(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg) {
    require_positive(P, f.n);
    return probe_on(f, all_vars(f.n), P, Goal::CriticalZero, cfg);
}

ProbeVerdict probe_face_strong(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg) {
    require_positive(P, f.n);
    return probe_on(f, all_vars(f.n), P, Goal::Critical, cfg);
}

ProbeVerdict probe_face_zero_set(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg) {
    require_positive(P, f.n);
    return probe_on(f, all_vars(f.n), P, Goal::Zero, cfg);
}

std::vector<std::pair<std::vector<int>, IVec>> enumerate_faces(const MixedPolynomial& f, bool& complete) {
    complete = true;
    std::vector<std::pair<std::vector<int>, IVec>> out;
    std::set<std::string> seen;
    auto add = [&](const std::vector<int>& I, const MixedPolynomial& g, const IVec& P) {
        if (seen.insert(format(face_function(P, g))).second) out.push_back({I, P});
    };
    for (const auto& I : nv_sets(f)) {
        if (I.empty()) continue;
        MixedPolynomial g = restrict_to(f, I);
        if (I.size() == 1) {
            IVec P(f.n, 0);
            P[I[0]] = 1;
            add(I, g, P);
        } else if (f.n == 2) {
            NewtonBoundary2D b = boundary2d(g);
            if (b.edges.empty()) {
                add(I, g, IVec{1, 1});
                continue;
            }
            for (const auto& e : b.edges) add(I, g, e.weight);
            for (size_t i = 0; i < b.vertices.size(); ++i) {
                IVec P;
                if (i == 0) P = {b.edges[0].weight[0], b.edges[0].weight[1] + 1};
                else if (i + 1 == b.vertices.size()) P = {b.edges[i - 1].weight[0] + 1, b.edges[i - 1].weight[1]};
                else P = {b.edges[i - 1].weight[0] + b.edges[i].weight[0], b.edges[i - 1].weight[1] + b.edges[i].weight[1]};
                add(I, g, P);
            }
        } else {
            complete = false;
            const int K = 4;
            std::vector<long long> c(I.size(), 1);
            while (true) {
                IVec P(f.n, 0);
                for (size_t k = 0; k < I.size(); ++k) P[I[k]] = c[k];
                add(I, g, P);
                size_t k = 0;
                while (k < c.size() && c[k] == K) c[k++] = 1;
                if (k == c.size()) break;
                ++c[k];
            }
        }
    }
    return out;
}

CheckReport check_all(const MixedPolynomial& f, CheckMode mode, const ProbeConfig& cfg) {
    cfg.validate();
    CheckReport rep;
    rep.mode = mode;
    int worst = -1;
    auto record = [&](FaceProbe fp) {
        int s = severity(fp.verdict.kind);
        if (s > 0) rep.clean = false;
        if (s > worst) {
            worst = s;
            rep.worst = fp.verdict.kind;
        }
        rep.faces.push_back(std::move(fp));
    };
    for (const auto& [I, P] : enumerate_faces(f, rep.complete)) {
        MixedPolynomial g = restrict_to(f, I);
        MixedPolynomial fP = face_function(P, g);
        FaceProbe fp;
        fp.I = I;
        fp.weight = P;
        fp.dim = face(P, g).dim;
        fp.face_function = format(fP);
        fp.check = mode == CheckMode::strong ? "strong" : "nondeg";
        fp.verdict = probe_on(g, I, P, mode == CheckMode::strong ? Goal::Critical : Goal::CriticalZero, cfg);
        int dim = fp.dim;
        record(fp);
        if (mode == CheckMode::true_nd && dim >= 1) {
            fp.check = "ne";
            fp.verdict = probe_on(g, I, P, Goal::Zero, cfg);
            record(fp);
        }
    }
    return rep;
}

std::vector<FaceProbe> probe_true(const MixedPolynomial& f, const ProbeConfig& cfg) {
    cfg.validate();
    std::vector<FaceProbe> out;
    bool complete;
    for (const auto& [I, P] : enumerate_faces(f, complete)) {
        MixedPolynomial g = restrict_to(f, I);
        Face F = face(P, g);
        if (F.dim < 1) continue;
        FaceProbe fp;
        fp.I = I;
        fp.weight = P;
        fp.dim = F.dim;
        fp.face_function = format(face_function(P, g));
        fp.check = "ne";
        fp.verdict = probe_on(g, I, P, Goal::Zero, cfg);
        out.push_back(std::move(fp));
    }
    return out;
}

AxisCheck axis_root_check(const MixedPolynomial& fv) {
    if (fv.is_zero()) throw std::invalid_argument("axis check: zero polynomial");
    int var = -1;
    long long N = -1;
    for (const auto& t : fv.terms) {
        for (int j = 0; j < fv.n; ++j) {
            if (t.nu[j] == 0 && t.mu[j] == 0) continue;
            if (var >= 0 && var != j) throw std::invalid_argument("axis check: more than one variable");
            var = j;
        }
    }
    if (var < 0) throw std::invalid_argument("axis check: constant polynomial");
    for (const auto& t : fv.terms) {
        if (t.nu[var] < 0 || t.mu[var] < 0) throw std::invalid_argument("axis check: negative exponent");
        long long d = t.nu[var] + t.mu[var];
        if (N >= 0 && d != N) throw std::invalid_argument("axis check: not homogeneous in (z, zbar)");
        N = d;
    }
    UPoly p(static_cast<size_t>(N) + 1);
    for (const auto& t : fv.terms) p[static_cast<size_t>(t.nu[var])] = t.coeff;
    AxisCheck out;
    for (const auto& [q, mult] : squarefree_decomposition(p)) {
        for (cplx r : numeric_roots(q)) {
            for (int k = 0; k < mult; ++k) out.roots.push_back(r);
            double dev = std::abs(std::abs(r) - 1.0);
            if (dev <= 1e-9) {
                for (int k = 0; k < mult; ++k) out.circle_roots.push_back(r);
            } else if (dev <= 1e-6) {
                out.borderline = true;
            }
        }
    }
    out.empty = out.circle_roots.empty();
    return out;
}

SSNDReport ssnd_check(const MixedPolynomial& f, const ProbeConfig& cfg) {
    cfg.validate();
    SSNDReport rep;
    rep.strong = check_all(f, CheckMode::strong, cfg);
    rep.holds = rep.strong.clean;
    ProbeConfig inner = cfg;
    inner.starts = 4;
    for (unsigned mask = 1; mask + 1 < (1u << f.n); ++mask) {
        IVec P(f.n, 0);
        std::vector<int> J, I;
        for (int j = 0; j < f.n; ++j) {
            if (mask & (1u << j)) {
                P[j] = 1;
                J.push_back(j);
            } else {
                I.push_back(j);
            }
        }
        FaceProbe fp;
        fp.I = J;
        fp.weight = P;
        fp.check = "ssnd";
        MixedPolynomial fP = face_function(P, f);
        fp.face_function = format(fP);
        fp.dim = face(P, f).dim;
        fp.verdict.config_echo = cfg;
        if (min_rdeg(P, f) == 0) {
            fp.verdict.kind = VerdictKind::NoCriticalPointFound;
            fp.verdict.detail = "d(P,f) = 0";
            rep.boundary_weights.push_back(std::move(fp));
            continue;
        }
        std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * mask));
        std::normal_distribution<double> nd(0.0, 1.0);
        std::uniform_real_distribution<double> ud(0.0, 2 * std::numbers::pi);
        ProbeVerdict agg;
        agg.kind = VerdictKind::NoCriticalPointFound;
        agg.config_echo = cfg;
        agg.stats.best_objective = kInf;
        agg.detail = "no critical point off the zero fiber";
        for (int s = 0; s < cfg.starts; ++s) {
            CVec base(f.n, cplx(1, 0));
            for (int i : I) base[i] = std::polar(std::exp(nd(rng)), ud(rng));
            inner.seed = cfg.seed + 7919ULL * static_cast<std::uint64_t>(s);
            ProbeVerdict v = run_probe(fP, J, base, P, Goal::CriticalOffZero, inner);
            agg.stats.starts += v.stats.starts;
            agg.stats.polished += v.stats.polished;
            agg.stats.best_objective = std::min(agg.stats.best_objective, v.stats.best_objective);
            if (v.kind == VerdictKind::DegenerateWitness) {
                agg.kind = v.kind;
                agg.cert = v.cert;
                agg.detail = v.detail;
                break;
            }
            if (v.kind == VerdictKind::Borderline) {
                agg.kind = v.kind;
                agg.detail = v.detail;
            }
        }
        if (severity(agg.kind) > 0) rep.holds = false;
        fp.verdict = agg;
        rep.boundary_weights.push_back(std::move(fp));
    }
    return rep;
}

}  // namespace mixsing
