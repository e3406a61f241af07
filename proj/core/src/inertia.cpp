#include "cmcindex/inertia.hpp"

#include <lapacke.h>

#include <cmath>
#include <vector>

namespace cmcindex {

Inertia inertia_by_eigenvalues(const Eigen::MatrixXd& A, double zero_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  Inertia out;
  out.used_eigen_fallback = true;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()[i];
    if (ev < -zero_tol)
      ++out.negative;
    else if (ev > zero_tol)
      ++out.positive;
    else
      ++out.zero;
  }
  return out;
}

Inertia symmetric_inertia(Eigen::MatrixXd A, double zero_tol) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  if (n == 0) return {};
  if (A.rows() != A.cols()) throw std::invalid_argument("symmetric_inertia: matrix not square");

  std::vector<lapack_int> ipiv(n);
  // Bunch-Kaufman LDL' (lower), on a scratch copy so the eigensolver fallback
  // still sees the original. Eigen matrices are column-major, matching
  // LAPACK's layout expectations directly.
  Eigen::MatrixXd fac = A;
  const lapack_int info =
      LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, fac.data(), n, ipiv.data());
  if (info < 0) throw std::invalid_argument("symmetric_inertia: bad argument to dsytrf");
  if (info > 0) {
    // Exactly singular D block: congruence counting is ambiguous there, use
    // the eigensolver instead.
    fac.resize(0, 0);
    return inertia_by_eigenvalues(A, zero_tol);
  }

  Inertia out;
  auto classify = [&](double ev) {
    if (ev < -zero_tol)
      ++out.negative;
    else if (ev > zero_tol)
      ++out.positive;
    else
      ++out.zero;
  };
  for (lapack_int k = 0; k < n;) {
    if (ipiv[k] > 0) {
      classify(A(k, k));
      ++k;
    } else {
      // 2x2 block [a b; b c]; inertia from its two eigenvalues.
      const double a = A(k, k);
      const double b = A(k + 1, k);
      const double c = A(k + 1, k + 1);
      const double tr = a + c;
      const double disc = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4.0 * b * b));
      classify(0.5 * (tr + disc));
      classify(0.5 * (tr - disc));
      k += 2;
    }
  }
  return out;
}

}  // namespace cmcindex
