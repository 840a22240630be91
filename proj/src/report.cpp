#include "mixsing/report.hpp"

#include "mixsing/classify.hpp"
#include "mixsing/newton.hpp"
#include "mixsing/toric.hpp"

#include <sstream>

namespace mixsing {

namespace {

Json cjson(cplx c) { return Json::array({c.real(), c.imag()}); }

Json cvec_json(const CVec& v) {
    Json a = Json::array();
    for (cplx c : v) a.push_back(cjson(c));
    return a;
}

Json ivec_json(const IVec& v) {
    Json a = Json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

Json opt_json(const std::optional<long long>& x) { return x ? Json(*x) : Json(nullptr); }

Json face_probe_json(const FaceProbe& fp) {
    Json j;
    j["restriction"] = Json::array();
    for (int i : fp.I) j["restriction"].push_back(i + 1);
    j["weight"] = ivec_json(fp.weight);
    j["dim"] = fp.dim;
    j["face_function"] = fp.face_function;
    j["check"] = fp.check;
    Json v = to_json(fp.verdict);
    v.erase("config");
    j["verdict"] = v;
    return j;
}

}  // namespace

Json envelope(const std::string& command, const std::string& input, const MixedPolynomial& f) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["input"] = input;
    j["canonical"] = format(f);
    j["n"] = f.n;
    return j;
}

Json to_json(const ProbeConfig& c) {
    Json j;
    j["starts"] = c.starts;
    j["iters"] = c.iters;
    j["seed"] = c.seed;
    j["cert_threshold"] = c.cert_threshold;
    j["report_threshold"] = c.report_threshold;
    return j;
}

Json to_json(const ProbeVerdict& v) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["detail"] = v.detail;
    if (v.cert) {
        Json c;
        c["point"] = cvec_json(v.cert->point);
        c["alpha"] = cjson(v.cert->alpha);
        c["residual"] = v.cert->residual;
        c["f_value"] = cjson(v.cert->f_value);
        j["certificate"] = c;
    }
    if (!v.zero_point.empty()) j["zero_point"] = cvec_json(v.zero_point);
    j["stats"] = {{"starts", v.stats.starts}, {"polished", v.stats.polished}, {"best_objective", v.stats.best_objective}};
    j["surjective_sample"] = v.surjective_sample ? Json(*v.surjective_sample) : Json(nullptr);
    j["config"] = to_json(v.config_echo);
    return j;
}

Json to_json(const CheckReport& r) {
    Json j;
    j["mode"] = to_string(r.mode);
    j["clean"] = r.clean;
    j["worst"] = to_string(r.worst);
    j["complete"] = r.complete;
    j["faces"] = Json::array();
    for (const auto& fp : r.faces) j["faces"].push_back(face_probe_json(fp));
    return j;
}

Json to_json(const TrackerResult& t) {
    Json j;
    j["solutions_at_zero"] = cvec_json(t.solutions_at_zero);
    j["permutation"] = Json::array();
    for (int p : t.permutation) j["permutation"].push_back(p);
    j["cycles"] = t.cycles;
    j["steps_used"] = t.steps_used;
    j["failures"] = t.failures;
    return j;
}

Json to_json(const ZetaFunction& z) {
    Json j;
    j["text"] = z.to_string();
    j["factors"] = Json::array();
    for (auto [d, e] : z.factors) j["factors"].push_back(Json::array({d, e}));
    try {
        IntPoly p = zeta_char_poly(z);
        j["char_poly"] = format_int_poly(p);
        j["char_poly_degree"] = degree(p);
    } catch (const std::domain_error&) {
        j["char_poly"] = nullptr;
    }
    return j;
}

Json to_json(const CurveInvariants& ci) {
    Json j;
    j["per_face"] = Json::array();
    for (const auto& r : ci.per_face) {
        j["per_face"].push_back({{"face_id", r.face_id},
                                 {"weight", ivec_json(r.weight)},
                                 {"face_function", r.face_function},
                                 {"m", r.m},
                                 {"r_star", r.r_star},
                                 {"chi_F_star", r.chi_F_star},
                                 {"route", to_string(r.route)}});
    }
    j["a1_abs"] = opt_json(ci.a1_abs);
    j["a2_abs"] = opt_json(ci.a2_abs);
    j["lkn"] = ci.lkn;
    j["chi_F"] = ci.chi_F;
    j["mu"] = ci.mu;
    j["zeta"] = to_json(ci.zeta);
    Json routes;
    for (const auto& [k, v] : ci.route) routes[k] = to_string(v);
    j["route"] = routes;
    j["warnings"] = ci.warnings;
    return j;
}

Json newton_report(const MixedPolynomial& f, const std::optional<IVec>& weight) {
    Json j;
    if (f.is_zero()) throw std::invalid_argument("empty Newton boundary: zero polynomial");
    if (weight) {
        Face F = face(*weight, f);
        j["weight"] = ivec_json(*weight);
        j["d"] = F.d_value;
        j["dim"] = F.dim;
        j["face_function"] = format(face_function(*weight, f));
        j["points"] = Json::array();
        for (const auto& p : F.points) j["points"].push_back(ivec_json(p.point));
        return j;
    }
    if (f.n != 2) throw std::invalid_argument("full boundary enumeration requires n=2; query faces with --weight");
    NewtonBoundary2D B = boundary2d(f);
    j["vertices"] = Json::array();
    for (const auto& v : B.vertices) {
        Json terms = Json::array();
        for (size_t t : v.term_indices) terms.push_back(format(MixedPolynomial(f.n, {f.terms[t]})));
        j["vertices"].push_back({{"point", ivec_json(v.point)}, {"simple", v.term_indices.size() == 1}, {"terms", terms}});
    }
    j["edges"] = Json::array();
    for (size_t i = 0; i < B.edges.size(); ++i) {
        const Face& e = B.edges[i];
        j["edges"].push_back({{"weight", ivec_json(e.weight)},
                              {"d", e.d_value},
                              {"face_function", format(face_function(e.weight, f))},
                              {"vertices", Json::array({i, i + 1})}});
    }
    j["convenient"] = B.convenient;
    Json ps;
    try {
        PolarSections s = polar_sections(f);
        ps["a1"] = opt_json(s.a1);
        ps["a2"] = opt_json(s.a2);
    } catch (const std::invalid_argument& e) {
        ps["error"] = e.what();
    }
    j["polar_sections"] = ps;
    j["lattice_points"] = boundary_lattice_points(B);
    return j;
}

std::string plot_data_csv(const MixedPolynomial& f) {
    NewtonBoundary2D B = boundary2d(f);
    std::ostringstream os;
    os << "x,y\n";
    for (const auto& v : B.vertices) os << v.point[0] << "," << v.point[1] << "\n";
    return os.str();
}

Json classification_report(const MixedPolynomial& f) {
    Json j;
    auto rt = radial_type(f);
    auto pt = polar_type(f);
    j["radial_type"] = rt ? Json{{"Q", ivec_json(rt->Q)}, {"d_r", rt->d_r}} : Json(nullptr);
    j["polar_type"] = pt ? Json{{"P", ivec_json(pt->P)}, {"d_p", pt->d_p}} : Json(nullptr);
    j["faces"] = Json::array();
    if (f.n != 2) return j;
    NewtonBoundary2D B = boundary2d(f);
    for (size_t i = 0; i < B.edges.size(); ++i) {
        MixedPolynomial fD = face_function(B.edges[i].weight, f);
        Json r;
        r["face_id"] = i;
        r["face_function"] = format(fD);
        auto fpt = polar_type(fD);
        r["polar_type"] = fpt ? Json{{"P", ivec_json(fpt->P)}, {"d_p", fpt->d_p}} : Json(nullptr);
        if (auto g = good_polar_factorization(fD)) {
            Json roots = Json::array();
            for (const auto& rm : g->roots) roots.push_back({{"lambda", cjson(rm.lambda)}, {"mult", rm.mult}});
            r["good_factorization"] = {{"k", g->k},
                                       {"a", g->a},
                                       {"a_pr", g->a_pr},
                                       {"b", g->b},
                                       {"b_pr", g->b_pr},
                                       {"lead", to_string(g->lead_coeff)},
                                       {"pre", format_monomial(g->pre_nu, g->pre_mu)},
                                       {"roots", roots},
                                       {"squarefree", g->squarefree()}};
        } else {
            r["good_factorization"] = nullptr;
        }
        r["pseudo_conjugate"] = pseudo_conjugate_wh(fD).has_value();
        auto sd = simplicial_check(fD);
        r["simplicial_det"] = sd ? Json(sd->det_N_abs) : Json(nullptr);
        j["faces"].push_back(r);
    }
    return j;
}

Json fan_report(const MixedPolynomial& f) {
    if (f.n != 2) throw std::invalid_argument("fan requires n=2");
    RegularFan2D fan = regular_subdivide(dual_diagram(f));
    Json j;
    j["dual_rays"] = Json::array();
    for (const auto& r : dual_diagram(f).rays) j["dual_rays"].push_back(ivec_json(r));
    j["vertices"] = Json::array();
    j["multiplicities"] = Json::array();
    j["gamma"] = Json::array();
    for (size_t i = 0; i < fan.vertices.size(); ++i) {
        j["vertices"].push_back(ivec_json(fan.vertices[i]));
        bool inner = i > 0 && i + 1 < fan.vertices.size();
        j["multiplicities"].push_back(inner ? Json(multiplicity(f, fan.vertices[i])) : Json(nullptr));
        j["gamma"].push_back(inner ? Json(transition_gamma(fan, static_cast<int>(i)).gamma) : Json(nullptr));
    }
    return j;
}

Json probe_report(const MixedPolynomial& f, CheckMode mode, const ProbeConfig& cfg, const std::optional<IVec>& weight) {
    Json j;
    j["config"] = to_json(cfg);
    j["mode"] = to_string(mode);
    if (weight) {
        ProbeVerdict v;
        if (mode == CheckMode::strong) v = probe_face_strong(f, *weight, cfg);
        else v = probe_face_nondegenerate(f, *weight, cfg);
        Json r = to_json(v);
        r.erase("config");
        j["weight"] = ivec_json(*weight);
        j["verdict"] = r;
        if (mode == CheckMode::true_nd) {
            Json z = to_json(probe_face_zero_set(f, *weight, cfg));
            z.erase("config");
            j["zero_set"] = z;
        }
        return j;
    }
    CheckReport rep = check_all(f, mode, cfg);
    j["verdict"] = to_string(rep.worst);
    j["clean"] = rep.clean;
    for (const auto& fp : rep.faces)
        if (fp.verdict.cert) {
            j["witness"] = {{"face_function", fp.face_function},
                            {"point", cvec_json(fp.verdict.cert->point)},
                            {"alpha", cjson(fp.verdict.cert->alpha)},
                            {"residual", fp.verdict.cert->residual}};
            break;
        }
    j["report"] = to_json(rep);
    return j;
}

Json lkn_report(const MixedPolynomial& f, int steps, std::uint64_t seed) {
    if (f.n != 2) throw std::invalid_argument("lkn requires n=2");
    Json j;
    j["steps"] = steps;
    j["seed"] = seed;
    long long axis = 0;
    if (restrict_to(f, {0}).is_zero()) ++axis;
    if (restrict_to(f, {1}).is_zero()) ++axis;
    auto rt = radial_type(f);
    if (rt && rt->Q[0] > 0 && rt->Q[1] > 0) {
        TrackerResult t = lkn_numeric(f, steps, seed);
        if (!t.ok()) throw NonConvergence("tracker: " + t.failures.front());
        j["route"] = "tracker";
        j["lkn_star"] = t.cycles;
        j["axis_components"] = axis;
        j["lkn"] = t.cycles + axis;
        j["tracker"] = to_json(t);
        return j;
    }
    InvariantOptions opt;
    opt.steps = steps;
    opt.seed = seed;
    j["route"] = "faces";
    j["lkn"] = lkn_total(f, opt);
    return j;
}

Json zeta_report(const MixedPolynomial& f, const InvariantOptions& opt) {
    CurveInvariants ci = curve_invariants(f, opt);
    Json j;
    j["zeta"] = to_json(ci.zeta);
    j["chi_F"] = ci.chi_F;
    j["mu"] = ci.mu;
    j["invariants"] = to_json(ci);
    return j;
}

AnalyzeResult analyze(const std::string& input, const MixedPolynomial& f, const ProbeConfig& cfg,
                      const InvariantOptions& opt) {
    AnalyzeResult out;
    Json& j = out.report;
    j = envelope("analyze", input, f);
    j["warnings"] = Json::array();
    std::string stage = "newton";
    auto fail = [&](const std::string& msg, int code) {
        out.error = StageError{stage, msg, code};
        j["error"] = {{"stage", stage}, {"message", msg}, {"exit_code", code}};
    };
    try {
        if (f.is_zero()) throw std::invalid_argument("empty Newton boundary: zero polynomial");
        if (f.n != 2) throw std::invalid_argument("the full pipeline requires n=2");
        j["newton"] = newton_report(f, std::nullopt);
        stage = "classify";
        j["classification"] = classification_report(f);
        stage = "nondegen";
        CheckReport rep = check_all(f, CheckMode::nondeg, cfg);
        Json nd = to_json(rep);
        nd["config"] = to_json(cfg);
        j["nondegeneracy"] = nd;
        for (const auto& fp : rep.faces)
            if (fp.verdict.surjective_sample && !*fp.verdict.surjective_sample)
                j["warnings"].push_back("face " + fp.face_function + ": sampled values miss a quadrant (surjectivity)");
        if (rep.worst == VerdictKind::Borderline) j["warnings"].push_back("non-degeneracy probe returned Borderline");
        if (rep.worst == VerdictKind::DegenerateWitness) throw std::invalid_argument("degenerate face found by the prober");
        stage = "toric";
        j["fan"] = fan_report(f);
        stage = "invariants";
        CurveInvariants ci = curve_invariants(f, opt);
        j["invariants"] = to_json(ci);
        for (const auto& w : ci.warnings) j["warnings"].push_back(w);
    } catch (const NonConvergence& e) {
        fail(e.what(), 3);
    } catch (const std::invalid_argument& e) {
        fail(e.what(), 2);
    } catch (const std::domain_error& e) {
        fail(e.what(), 2);
    }
    return out;
}

}  // namespace mixsing
