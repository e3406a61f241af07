#pragma once

#include "cmcindex/forms.hpp"
#include "cmcindex/geometry.hpp"
#include "cmcindex/spectrum.hpp"

#include <array>
#include <string>
#include <vector>

namespace cmcindex {

/// (sqrt(1+H^2) - 1)/H evaluated in the cancellation-free form
/// H/(sqrt(1+H^2) + 1); odd in H, |c| < 1, c(0) = 0 (the minimal limit).
double coefficient_c(double H);

/// Position and Gauss-map components l_a = <phi, e_a>, f_a = <nu, e_a> for the
/// four ambient basis directions, plus the mean H and the mixing coefficient c.
struct SupportFunctions {
  int n = 2;
  double H = 0.0;  // area-weighted mean of nodal H
  double c = 0.0;  // coefficient_c(H)
  std::array<VecX, 4> l;
  std::array<VecX, 4> f;
  bool cmc_warning = false;
  double H_deviation = 0.0;

  VecX l_of(const Vec4& u) const;
  VecX f_of(const Vec4& u) const;
  /// h_u = f_u + c l_u (linear in u)
  VecX h_of(const Vec4& u) const;
};

SupportFunctions build_support_functions(const SurfaceGeometry& geom);

/// | integral |A|^2 f_u l_u - ( n integral f_u l_u - n H integral f_u^2
///   + n H integral l_u^2 ) | with the mean H; quadrature-exact on the
/// constant-metric families, O(1) on non-CMC input.
double lemma1_residual(const SurfaceGeometry& geom, const SupportFunctions& support,
                       const Vec4& u);

/// Max-norm difference between J(h_u) applied through the discrete Laplacian
/// and its closed form -|A|^2 c l_u - n f_u - n H l_u - n H c f_u.
double jacobi_expansion_residual(const SurfaceGeometry& geom, const DiscreteForms& forms,
                                 const SupportFunctions& support, const Vec4& u);

/// f' K_lumped f, the discrete quadratic form integral f J(f).
double quadratic_form(const JacobiForms& jacobi, const VecX& f);

/// Orthonormal basis of the kernel of u -> integral h_u (a single linear
/// functional on R^4): all of R^4 when the moment vector vanishes within
/// tolerance, its orthogonal complement otherwise.
struct AdmissibleBasis {
  std::vector<Vec4> directions;
  Vec4 moment = Vec4::Zero();  // b with integral h_u = b . u
  double tolerance = 0.0;
};

AdmissibleBasis admissible_basis(const SurfaceGeometry& geom, const SupportFunctions& support,
                                 double tau_adm_scale = 1e-8);

struct CertificateTolerances {
  double tau_strict_scale = 1e-6;  // strict negativity margin, scaled by area
  double tau_adm_scale = 1e-8;     // admissibility, scaled by sqrt(area)
  double umbilical_tol = 1e-8;     // max(A2 - n H^2) at or below this refuses
  double slack_tol_scale = 1e-4;   // Q <= rhs cross-check margin, scaled by area
};

class UmbilicalInputError : public std::runtime_error {
 public:
  explicit UmbilicalInputError(const std::string& what) : std::runtime_error(what) {}
};

struct DirectionEvidence {
  Vec4 u = Vec4::Zero();
  double moment = 0.0;  // integral h_u
  double Q = 0.0;       // integral h_u J(h_u)
  double rhs = 0.0;     // -n integral (f_u + H l_u)^2
  double slack = 0.0;   // Q - rhs  (<= tolerance by the certified inequality)
};

/// Evidence that the quadratic form is negative definite on the admissible
/// test-function family, yielding the certified lower bound on the weak index.
struct TheoremCertificate {
  std::vector<DirectionEvidence> directions;
  int certified_dimension = 0;
  bool certified = false;
  double worst_Q = 0.0;                  // largest per-direction Q
  double q_matrix_max_eigenvalue = 0.0;  // restricted form, must be < -tau_strict
  double independence_margin = 0.0;      // min eigenvalue of the normalized h-Gram
  double support_gram_margin = 0.0;      // min singular value of the {l_a, f_a} Gram
  double tau_strict = 0.0;
  double slack_tol = 0.0;
  bool slack_ok = false;
  bool cmc_warning = false;
  double H_deviation = 0.0;
  bool discretization_suspect = false;  // some Q >= -tau_strict on non-umbilical input
  std::string verdict;
};

/// Refuses umbilical input (the bound is 0 there); otherwise certifies
/// "weak index >= dim(admissible basis)" when the restricted quadratic form
/// is strictly negative definite, and cross-checks Q <= -n integral
/// (f_u + H l_u)^2 per direction.
TheoremCertificate theorem_certificate(const SurfaceGeometry& geom, const DiscreteForms& forms,
                                       const JacobiForms& jacobi, const SupportFunctions& support,
                                       const CertificateTolerances& tol = {});

}  // namespace cmcindex
