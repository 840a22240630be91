#include "mixsing/newton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mixsing {

std::vector<SupportPoint> support_points(const MixedPolynomial& f) {
    std::map<IVec, std::vector<size_t>> groups;
    for (size_t i = 0; i < f.terms.size(); ++i) groups[f.terms[i].support()].push_back(i);
    std::vector<SupportPoint> out;
    for (auto& [p, idx] : groups) out.push_back({p, idx});
    return out;
}

static void check_weight(const IVec& P, const MixedPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("empty Newton boundary (zero polynomial)");
    if (static_cast<int>(P.size()) != f.n) throw std::invalid_argument("weight length mismatch");
    for (long long p : P)
        if (p < 0) throw std::invalid_argument("weight must be nonnegative");
}

long long min_rdeg(const IVec& P, const MixedPolynomial& f) {
    check_weight(P, f);
    long long d = rdeg(P, f.terms[0]);
    for (const auto& t : f.terms) d = std::min(d, rdeg(P, t));
    return d;
}

Face face(const IVec& P, const MixedPolynomial& f) {
    long long d = min_rdeg(P, f);
    Face F;
    F.weight = P;
    F.d_value = d;
    for (const auto& sp : support_points(f)) {
        if (dot(P, sp.point) != d) continue;
        F.points.push_back(sp);
        for (size_t i : sp.term_indices) F.mixed_face.emplace_back(f.terms[i].nu, f.terms[i].mu);
    }
    IMat diffs;
    for (size_t i = 1; i < F.points.size(); ++i) {
        IVec v(f.n);
        for (int j = 0; j < f.n; ++j) v[j] = F.points[i].point[j] - F.points[0].point[j];
        diffs.push_back(v);
    }
    F.dim = rank(diffs);
    if (f.n <= 2 && F.points.size() > 1) {
        // support_points is lexicographic, so the extremes of a segment are first and last
        F.vertices = {F.points.front(), F.points.back()};
        if (F.vertices[0].point[0] < F.vertices[1].point[0]) std::swap(F.vertices[0], F.vertices[1]);
    } else {
        F.vertices = F.points;
    }
    return F;
}

MixedPolynomial face_function(const IVec& P, const MixedPolynomial& f) {
    long long d = min_rdeg(P, f);
    std::vector<Monomial> ts;
    for (const auto& t : f.terms)
        if (rdeg(P, t) == d) ts.push_back(t);
    return MixedPolynomial(f.n, std::move(ts));
}

NewtonBoundary2D boundary2d(const MixedPolynomial& f) {
    if (f.n != 2) throw std::invalid_argument("full boundary enumeration requires n=2");
    if (f.is_zero()) throw std::invalid_argument("empty Newton boundary (zero polynomial)");
    std::vector<SupportPoint> pts = support_points(f);
    auto lower = [](const SupportPoint& a, const SupportPoint& b) {
        return a.point[1] != b.point[1] ? a.point[1] < b.point[1] : a.point[0] < b.point[0];
    };
    SupportPoint cur = *std::min_element(pts.begin(), pts.end(), lower);
    NewtonBoundary2D B;
    B.vertices.push_back(cur);
    while (true) {
        // next vertex: smallest rise per unit step to the left; ties go farthest
        const SupportPoint* best = nullptr;
        for (const auto& q : pts) {
            if (q.point[0] >= cur.point[0]) continue;
            if (!best) {
                best = &q;
                continue;
            }
            long long dxq = cur.point[0] - q.point[0], dyq = q.point[1] - cur.point[1];
            long long dxb = cur.point[0] - best->point[0], dyb = best->point[1] - cur.point[1];
            long long cmp = dyq * dxb - dyb * dxq;
            if (cmp < 0 || (cmp == 0 && q.point[0] < best->point[0])) best = &q;
        }
        if (!best) break;
        SupportPoint nxt = *best;
        IVec P = primitive({nxt.point[1] - cur.point[1], cur.point[0] - nxt.point[0]});
        Face F = face(P, f);
        B.edges.push_back(F);
        B.vertices.push_back(nxt);
        cur = nxt;
    }
    B.convenient = B.vertices.front().point[1] == 0 && B.vertices.back().point[0] == 0;
    return B;
}

std::vector<std::vector<int>> nv_sets(const MixedPolynomial& f) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << f.n); ++mask) {
        std::vector<int> I;
        for (int j = 0; j < f.n; ++j)
            if (mask & (1u << j)) I.push_back(j);
        if (!restrict_to(f, I).is_zero()) out.push_back(I);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool is_k_convenient(const MixedPolynomial& f, int k) {
    int size = f.n - k;
    if (size < 0) return false;
    for (unsigned mask = 0; mask < (1u << f.n); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        std::vector<int> I;
        for (int j = 0; j < f.n; ++j)
            if (mask & (1u << j)) I.push_back(j);
        if (restrict_to(f, I).is_zero()) return false;
    }
    return true;
}

bool is_convenient(const MixedPolynomial& f) { return is_k_convenient(f, f.n - 1); }

bool is_simple_vertex(const MixedPolynomial& f, const IVec& vertex) {
    if (f.n == 1) {
        auto pts = support_points(f);
        if (pts.empty() || pts.front().point != vertex) throw std::invalid_argument("not a vertex of the Newton boundary");
        return pts.front().term_indices.size() == 1;
    }
    if (f.n != 2) throw std::invalid_argument("vertex test implemented for n <= 2");
    for (const auto& v : boundary2d(f).vertices)
        if (v.point == vertex) return v.term_indices.size() == 1;
    throw std::invalid_argument("not a vertex of the Newton boundary");
}

PolarSections polar_sections(const MixedPolynomial& f) {
    NewtonBoundary2D B = boundary2d(f);
    PolarSections s;
    auto read = [&](const SupportPoint& v, int axis) -> long long {
        if (v.term_indices.size() != 1)
            throw std::invalid_argument("axis vertex (" + std::to_string(v.point[0]) + "," +
                                        std::to_string(v.point[1]) + ") is not simple");
        const Monomial& m = f.terms[v.term_indices[0]];
        return m.nu[axis] - m.mu[axis];
    };
    if (B.vertices.front().point[1] == 0) s.a1 = read(B.vertices.front(), 0);
    if (B.vertices.back().point[0] == 0) s.a2 = read(B.vertices.back(), 1);
    return s;
}

DualDiagram2D dual_diagram(const MixedPolynomial& f) {
    DualDiagram2D d;
    for (const auto& e : boundary2d(f).edges) d.rays.push_back(e.weight);
    return d;
}

long long boundary_lattice_points(const NewtonBoundary2D& b) {
    long long count = 1;
    for (size_t i = 0; i + 1 < b.vertices.size(); ++i) {
        const IVec &p = b.vertices[i].point, &q = b.vertices[i + 1].point;
        count += gcd_abs(p[0] - q[0], p[1] - q[1]);
    }
    return count;
}

}  // namespace mixsing
