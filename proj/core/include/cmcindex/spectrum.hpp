#pragma once

#include "cmcindex/forms.hpp"
#include "cmcindex/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmcindex {

// ---------------------------------------------------------------------------
// Exact spectra of the stability operator J(f) = -Delta f - |A|^2 f - n f
// on the two isoparametric families.
// ---------------------------------------------------------------------------

struct SpectrumEntry {
  double lambda = 0.0;
  long multiplicity = 0;
  int k = 0;   // mode degree on the first factor (or the only one)
  int m = -1;  // second-factor degree; -1 for single-sphere families
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;  // sorted by (lambda, k, m), complete below `window`
  double window = 0.0;
  int cutoff_k = 0;
  int cutoff_m = 0;
  std::string family;  // "clifford" | "umbilical"
  int n = 0;
  double H = 0.0;
  double A2 = 0.0;
  bool constant_A2 = true;
  bool is_equator = false;

  double lambda_min() const;
  long multiplicity_below(double threshold) const;
};

/// Separated spectrum lambda_{k,m} = k(k+p-1)/r^2 + m(m+q-1)/s^2 - |A|^2 - n
/// with sphere-harmonic multiplicities; enumeration is complete below
/// `window` because lambda is strictly increasing in k and in m.
SpectrumReport clifford_spectrum_exact(const CliffordSpec& spec, double window);

/// lambda_k = (k(k+n-1) - n)/rho^2 (the algebraically reduced form: k = 1 is
/// an exact zero for every rho).
SpectrumReport umbilical_spectrum_exact(const UmbilicalSpec& spec, double window);

/// Sphere-harmonic multiplicity on S^d: C(d+k, k) - C(d+k-2, k-2).
long sphere_harmonic_multiplicity(int d, int k);

// ---------------------------------------------------------------------------
// Index counting
// ---------------------------------------------------------------------------

/// Certified interval for the volume-preserving (weak) and unconstrained
/// (strong) Morse index. For the exact path the interval is tight; the
/// discrete path widens [lo, hi] by the modes that fall within tau of zero,
/// and the lower endpoint is the certified count.
struct IndexReport {
  long weak_lo = 0, weak_hi = 0;
  long strong_lo = 0, strong_hi = 0;
  double tau = 0.0;
  std::string method;    // "exact" | "discrete"
  std::string counting;  // "closed-form" | "ldlt" | "eigen-fallback"
  long marginal_modes = 0;  // discrete modes inside (-tau, tau)
};

/// Index counts from a closed-form spectrum. Requires a constant-|A|^2 family
/// (only there is the constant function an eigenfunction, making
/// "negatives minus one" the weak count). Entries with |lambda| <= tau are
/// classified as zero modes.
IndexReport weak_index_exact(const SpectrumReport& report, double tau = 1e-9);

/// Jacobi quadratic-form matrices on a sampled surface.
///
/// K_lumped = stiffness - diag(w_i (A2_i + n)) realizes f' K f ~ integral f J(f)
/// with the nodal quadrature; it backs the certificate evidence. The
/// variational pair (K_variational, M_variational) uses the exactly
/// integrated potential and mass so that generalized eigenvalues approximate
/// the true ones from above; index counting uses that pair.
struct JacobiForms {
  SpMat K_lumped;
  SpMat K_variational;
  SpMat M_variational;
  VecX mass;  // lumped weights (constraint vector ingredients, normalizations)
  double area = 0.0;
  int n = 2;
};

JacobiForms assemble_jacobi(const SurfaceGeometry& geom, const DiscreteForms& forms);

/// Negative-inertia counts of the Jacobi pair restricted to the discrete
/// mean-zero subspace {f : integral f = 0}, realized by the Householder
/// complement of the weight vector. weak_lo counts eigenvalues < -tau
/// (negative for certain), weak_hi counts eigenvalues < +tau.
IndexReport weak_index_discrete(const JacobiForms& jacobi, double tau = 1e-2);

/// Same counts without the mean-zero constraint.
IndexReport strong_index_discrete(const JacobiForms& jacobi, double tau = 1e-2);

struct SimonsVerdict {
  bool holds = false;
  double lambda_min = 0.0;
  double bound = 0.0;  // -2n
  std::string note;    // set for the totally geodesic equator
};

/// First-eigenvalue bound lambda_min <= -2n for minimal inputs; throws if the
/// family is not minimal. The equator fails the bound (lambda_min = -n) and is
/// flagged as outside its scope rather than counted as a violation.
SimonsVerdict simons_check(const SpectrumReport& report, double h_tol = 1e-12,
                           double tau = 1e-9);

}  // namespace cmcindex
