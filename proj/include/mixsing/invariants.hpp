#pragma once

#include "mixsing/classify.hpp"
#include "mixsing/mixed_poly.hpp"
#include "mixsing/zeta.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixsing {

// Numeric continuation failed to give a trustworthy answer.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Route { gcd_formula, lattice_count, det_formula, tracker, face_formula, milnor_formula, end_correction, closed_form };
const char* to_string(Route r);

long long lkn_star_binomial(long long a, long long a_pr, long long b, long long b_pr);
long long lkn_star_good(const GoodPolarFactorization& fac);

struct TrackerResult {
    std::vector<cplx> solutions_at_zero;
    std::vector<int> permutation;
    int cycles = 0;
    int steps_used = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Roots z1 of f(z1, e^{ia}) = 0 continued over a in [0, 2 pi].
TrackerResult lkn_numeric(const MixedPolynomial& f, int steps = 2048, std::uint64_t seed = 0);

struct ChiZeta {
    long long chi_F_star = 0;
    long long chi_F = 0;
    ZetaFunction zeta;
};
// Whole polar weighted f with end-monomial corrections.
ChiZeta chi_zeta_polar(const MixedPolynomial& f, long long r_star);

struct FaceRecord {
    int face_id = 0;
    IVec weight;
    std::string face_function;
    long long m = 0;
    long long r_star = 0;
    long long chi_F_star = 0;
    Route route = Route::gcd_formula;
};

struct CurveInvariants {
    std::vector<FaceRecord> per_face;
    std::optional<long long> a1_abs, a2_abs;
    long long lkn = 0;
    long long chi_F = 0;
    long long mu = 0;
    ZetaFunction zeta;
    std::map<std::string, Route> route;
    std::vector<std::string> warnings;
};

struct InvariantOptions {
    int steps = 2048;
    std::uint64_t seed = 0;
    bool allow_tracker = true;
};

// Per-face r*, m and chi(F*) with provenance. Throws std::invalid_argument on refusal.
std::vector<FaceRecord> face_records(const MixedPolynomial& f, const InvariantOptions& opt = {});
long long lkn_total(const MixedPolynomial& f, const InvariantOptions& opt = {});

ChiZeta zeta_from_faces(const MixedPolynomial& f, const std::vector<FaceRecord>& faces);
long long milnor_from_faces(const MixedPolynomial& f, const std::vector<FaceRecord>& faces);
CurveInvariants curve_invariants(const MixedPolynomial& f, const InvariantOptions& opt = {});

struct ClosedFormResult {
    IVec P;
    long long d_p = 0;
    long long lkn = 0;
    long long mu = 0;
    ZetaFunction zeta;
};
ClosedFormResult good_polar_closed_form(const GoodPolarFactorization& fac);

ZetaFunction zeta_simplicial(const SimplicialData& sd, int n, long long d_p);
long long circle_components(long long a, long long b);

}  // namespace mixsing
