// certify.hpp -- contact/confoliation classification, loci, conductivity,
// characteristic foliations, dividing sets, blending
#pragma once

#include "lutzlab/forms.hpp"
#include "lutzlab/region.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lutzlab {

enum class CertKind { SymbolicIdentity, GridPositive, GridNonNegative, GridZeroSet, PathTrace };

struct Certificate {
    CertKind kind = CertKind::SymbolicIdentity;
    std::string name;
    bool pass = false;
    double tolerance = 0.0;
    size_t samples = 0;
    double min = 0.0, max = 0.0;
    std::vector<double> witness;       // argmin / counterexample
    std::vector<LocusPoint> zeros;     // GridZeroSet
    std::string detail;                // free-form summary
};

enum class ContactClass { Contact, Confoliation, Neither };

struct Classification {
    ContactClass cls = ContactClass::Neither;
    int orientation = +1;  // sign of the volume coefficient where nonzero
    ScalarExpr ratio;      // coefficient against the declared volume
    Certificate cert;
};

// OP classify: coefficient of alpha ^ (d alpha)^n against `vol` (defaults to
// the standard radial-weighted volume); Contact when the grid min of the
// oriented coefficient exceeds 1e-9, Confoliation when nonnegative with
// refined zeros present, Neither when signs mix.
Classification classify(const DifferentialForm& alpha, const Region& region,
                        std::optional<DifferentialForm> vol = std::nullopt);

// OP non_contact_locus: refined grid zeros of the classification coefficient,
// with matching against candidate strata {r_i, r_j at sqrt((1/2+l)pi)}.
struct Stratum {
    int i = 0, j = 0;          // radial coordinate indices (chart indices)
    double ri = 0.0, rj = 0.0; // stratum radii
};
struct LocusReport {
    Classification cls;
    std::vector<LocusPoint> zeros;
    std::vector<Stratum> strata;
    bool zeros_covered = false;   // every zero within one cell of a stratum
    bool strata_covered = false;  // every stratum sample near some zero
    Certificate cert;
};
LocusReport non_contact_locus(const DifferentialForm& alpha, const Region& region,
                              std::optional<DifferentialForm> vol = std::nullopt);

// OP tau: *(alpha ^ (d alpha)^{n-1}) for a diagonal metric.
DifferentialForm tau(const DifferentialForm& alpha, const DiagonalMetric& g);

// OP conductivity_check: RK4 flow of X from each locus point until the
// classification coefficient exceeds the hot-zone threshold; verifies along
// the way that X is metric-orthogonal to Null(tau).
struct PathRecord {
    std::vector<double> start;
    std::vector<double> arrival;
    size_t steps = 0;
    bool reached = false;
    size_t null_checks = 0;     // samples where X-perp-Null verified
    size_t null_skipped = 0;    // samples with tau numerically zero
    double max_pairing = 0.0;   // worst |g(X, null basis)| seen
};
struct ConductivityReport {
    std::vector<PathRecord> paths;
    Certificate cert;
};
ConductivityReport conductivity_check(const DifferentialForm& alpha, const Region& region,
                                      const VectorField& x, const DiagonalMetric& g,
                                      const std::vector<LocusPoint>& locus);

// OP char_foliation: on the level set {coord = value}, solve
// V . Omega = restrict(alpha ^ (d alpha)^{n-1}) for the sub-chart volume Omega
// (single monomial component).  The first overload takes the defining
// (dim-1)-form directly; the second restricts the ambient contact form over
// the level set (pullback and d commute, so either route is equivalent).
VectorField char_foliation(const DifferentialForm& defining_form,
                           const DifferentialForm& omega_volume);
VectorField char_foliation(const DifferentialForm& alpha_ambient, const Restriction& level,
                           const DifferentialForm& omega_on_sub);

// OP dividing_set: zeros of the ambient pairing alpha(X) restricted to the
// level set, plus the sign-region summary.  `region` lives on the sub-chart
// of the restriction.  Tangency of X at individual samples is flagged;
// NotTransverse is thrown only when X is tangent at every sample.
struct DividingSetReport {
    ScalarExpr pairing_expr;  // on the sub-chart
    std::vector<LocusPoint> zeros;
    size_t positive_samples = 0;
    size_t negative_samples = 0;
    size_t tangent_samples = 0;
    bool degenerate = false;  // pairing numerically zero everywhere
    Certificate cert;
};
DividingSetReport dividing_set(const DifferentialForm& alpha, const VectorField& x,
                               const Restriction& rest, const Region& region);

// OP blend: tilde = (1-f) alpha + f omega; validates f range, returns the
// blended form and its classification (outcome recorded, not guaranteed).
struct BlendResult {
    DifferentialForm blended;
    Classification classification;
    Certificate range_cert;
};
BlendResult blend(const DifferentialForm& alpha, const DifferentialForm& omega,
                  const ScalarExpr& f, const Region& region);

// Numeric kernel of a 2-form at a point: basis of {v : tau(v, .) = 0}.
std::vector<std::vector<double>> null_space_at(const DifferentialForm& two_form,
                                               const std::vector<double>& pt, double tol = 1e-6);

}  // namespace lutzlab
