#pragma once

#include "cmcindex/geometry.hpp"

#include <Eigen/Sparse>

namespace cmcindex {

using SpMat = Eigen::SparseMatrix<double>;

/// Quadrature and Dirichlet-form data on a sampled surface.
///
/// `mass` holds the diagonal node weights w_i; `stiffness` is the bilinear
/// finite-element Dirichlet form (2x2 Gauss points per cell, metric
/// interpolated from the corners), symmetric positive semidefinite with the
/// constants in its kernel. `mass_consistent` is the exactly integrated FEM
/// mass matrix; together with `stiffness` it makes discrete eigenvalues
/// one-sided (Rayleigh-Ritz from above) wherever the quadrature is exact,
/// which is what the certified counting below relies on.
struct DiscreteForms {
  int N = 0;
  VecX mass;             // lumped weights, strictly positive
  SpMat stiffness;       // f' * stiffness * f ~ integral |grad f|^2
  SpMat mass_consistent; // f' * mass_consistent * g ~ integral f g
  double area = 0.0;
};

DiscreteForms assemble_forms(const SurfaceGeometry& geom);

/// Exactly integrated form f' M g ~ integral coeff * f * g, the nodal
/// coefficient interpolated bilinearly; backs the Jacobi potential.
SpMat assemble_weighted_mass(const SurfaceGeometry& geom, const VecX& nodal_coeff);

/// Weighted nodal sum; exact for trigonometric polynomials below the grid
/// Nyquist degree on constant-metric families.
double integrate(const SurfaceGeometry& geom, const VecX& f);
double integrate(const DiscreteForms& forms, const VecX& f);

/// -mass^{-1} * stiffness * f: the Laplace-Beltrami operator with the sign
/// convention Delta cos(k u) = -(k^2/g_uu) cos(k u).
VecX apply_laplacian(const DiscreteForms& forms, const VecX& f);

struct IdentityResiduals {
  double r1 = 0.0;  // max | Delta l_v + n l_v - n H f_v |
  double r2 = 0.0;  // max | Delta f_v + A2 f_v - n H l_v |
  bool cmc_warning = false;
  double H_deviation = 0.0;
};

/// Residuals of the two coupled support-function identities for direction v,
/// using the area-weighted mean H. On a CMC surface both are O(h^2); when the
/// surface is not CMC they measure the H deviation instead (warned, not
/// failed).
IdentityResiduals identity_residuals(const SurfaceGeometry& geom, const DiscreteForms& forms,
                                     const Vec4& v);

}  // namespace cmcindex
