#pragma once

#include <Eigen/Dense>

namespace cmcindex {

struct Inertia {
  long negative = 0;
  long zero = 0;
  long positive = 0;
  bool used_eigen_fallback = false;
};

/// Inertia of a symmetric matrix via a Bunch-Kaufman LDL' factorization
/// (congruence preserves inertia, so no eigendecomposition is needed).
/// Falls back to a dense symmetric eigensolver if the factorization breaks
/// down. The matrix argument is destroyed.
Inertia symmetric_inertia(Eigen::MatrixXd A, double zero_tol = 0.0);

/// Reference count straight from the eigenvalues; used as the fallback path
/// and as the cross-check oracle in the tests.
Inertia inertia_by_eigenvalues(const Eigen::MatrixXd& A, double zero_tol = 0.0);

}  // namespace cmcindex
