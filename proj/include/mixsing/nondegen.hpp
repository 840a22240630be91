#pragma once

#include "mixsing/mixed_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixsing {

struct ProbeConfig {
    int starts = 64;
    int iters = 500;
    std::uint64_t seed = 0;
    double cert_threshold = 1e-8;
    double report_threshold = 1e-4;
    void validate() const;
};

enum class VerdictKind {
    DegenerateWitness,
    NoCriticalPointFound,
    ZeroSetEmptyEvidence,
    ZeroSetWitness,  // a point of the zero fiber inside the torus
    Borderline,
};
const char* to_string(VerdictKind k);

struct CriticalPointCertificate {
    CVec point;
    cplx alpha{1, 0};
    double residual = 0;
    cplx f_value{0, 0};
    std::vector<int> free_vars;  // coordinates the residual is taken over
};

struct ProbeStats {
    int starts = 0;
    int polished = 0;
    double best_objective = 0;  // sqrt of the normalized objective
};

struct ProbeVerdict {
    VerdictKind kind = VerdictKind::NoCriticalPointFound;
    std::optional<CriticalPointCertificate> cert;
    CVec zero_point;  // ZeroSetWitness only
    ProbeStats stats;
    std::string detail;
    std::optional<bool> surjective_sample;  // advisory: values hit all four quadrants
    ProbeConfig config_echo;
};

// Residual of conj(df) = alpha * dbarf at z, alpha chosen optimally.
std::pair<double, cplx> critical_residual(const MixedPolynomial& f, const CVec& z);
std::pair<double, cplx> critical_residual(const MixedPolynomial& f, const CVec& z,
                                          const std::vector<int>& free_vars);
// Independent re-check: residual < 1e-10 and free coordinates away from 0.
bool verify_certificate(const MixedPolynomial& g, const CriticalPointCertificate& c);

ProbeVerdict probe_face_nondegenerate(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg);
ProbeVerdict probe_face_strong(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg);
ProbeVerdict probe_face_zero_set(const MixedPolynomial& f, const IVec& P, const ProbeConfig& cfg);

struct FaceProbe {
    std::vector<int> I;  // restriction f^I the face belongs to
    IVec weight;
    int dim = 0;
    std::string face_function;
    std::string check;  // "nondeg", "strong", "ne", "ssnd"
    ProbeVerdict verdict;
};

std::vector<FaceProbe> probe_true(const MixedPolynomial& f, const ProbeConfig& cfg);

enum class CheckMode { nondeg, strong, true_nd };
const char* to_string(CheckMode m);

struct CheckReport {
    CheckMode mode = CheckMode::nondeg;
    std::vector<FaceProbe> faces;
    VerdictKind worst = VerdictKind::NoCriticalPointFound;
    bool clean = true;
    bool complete = true;  // false when faces were sampled from a weight box
};

// Faces of f^I for I in NV(f): (I, weight) pairs, deduplicated by face.
std::vector<std::pair<std::vector<int>, IVec>> enumerate_faces(const MixedPolynomial& f, bool& complete);

CheckReport check_all(const MixedPolynomial& f, CheckMode mode, const ProbeConfig& cfg);

struct AxisCheck {
    bool empty = true;
    bool borderline = false;
    std::vector<cplx> roots;
    std::vector<cplx> circle_roots;
};
AxisCheck axis_root_check(const MixedPolynomial& f_vertex);

struct SSNDReport {
    bool holds = true;
    CheckReport strong;
    std::vector<FaceProbe> boundary_weights;  // non-strictly-positive P
};
SSNDReport ssnd_check(const MixedPolynomial& f, const ProbeConfig& cfg);

}  // namespace mixsing
