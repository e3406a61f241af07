#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmcindex {

using Vec4 = Eigen::Vector4d;
using VecX = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;

/// Product of two round spheres S^p(r) x S^q(s), r^2 + s^2 = 1, inside S^{p+q+1}.
/// Carries closed-form curvature data for every (p, q); the sampled pipeline
/// below only accepts the torus case p = q = 1.
struct CliffordSpec {
  int p = 1;
  int q = 1;
  double r2 = 0.5;

  CliffordSpec(int p_, int q_, double r2_) : p(p_), q(q_), r2(r2_) {
    if (p < 1 || q < 1) throw std::invalid_argument("CliffordSpec: p, q must be >= 1");
    if (!(r2 > 0.0 && r2 < 1.0)) throw std::invalid_argument("CliffordSpec: r2 must lie in (0,1)");
  }

  int n() const { return p + q; }
  double s2() const { return 1.0 - r2; }
  double r() const { return std::sqrt(r2); }
  double s() const { return std::sqrt(s2()); }
};

struct CliffordScalars {
  double H;
  double A2;
  // (principal curvature, multiplicity) for the two factors
  std::array<std::pair<double, int>, 2> principal_curvatures;
};

CliffordScalars clifford_scalars(const CliffordSpec& spec);

/// Geodesic sphere of Euclidean radius rho in S^{n+1} (totally umbilical family).
/// rho = 1 is the equator.
struct UmbilicalSpec {
  int n = 2;
  double rho = 1.0;

  UmbilicalSpec(int n_, double rho_) : n(n_), rho(rho_) {
    if (n < 2) throw std::invalid_argument("UmbilicalSpec: n must be >= 2");
    if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("UmbilicalSpec: rho must lie in (0,1]");
  }

  double height() const { return std::sqrt(1.0 - rho * rho); }
};

struct UmbilicalScalars {
  double H;
  double A2;
};

UmbilicalScalars umbilical_scalars(const UmbilicalSpec& spec);

/// Doubly periodic sampled immersion of a torus into S^3.
/// Node (i, j) sits at parameters (i*Lu/Nu, j*Lv/Nv); arrays are row-major in
/// i then j. Derivative arrays hold analytic data for the built-in families
/// and either supplied or central-difference data for surfaces read from file.
struct ImmersionGrid {
  int Nu = 0;
  int Nv = 0;
  double Lu = 0.0;
  double Lv = 0.0;
  bool derivatives_supplied = true;  // false once central differences filled them in

  std::vector<Vec4> phi, phi_u, phi_v, phi_uu, phi_uv, phi_vv;

  int size() const { return Nu * Nv; }
  double hu() const { return Lu / Nu; }
  double hv() const { return Lv / Nv; }

  int index(int i, int j) const {
    i %= Nu; if (i < 0) i += Nu;
    j %= Nv; if (j < 0) j += Nv;
    return i * Nv + j;
  }
};

/// Analytic torus S^1(r) x S^1(s); requires p = q = 1.
ImmersionGrid clifford_immersion(const CliffordSpec& spec, int Nu, int Nv);

/// Negative control: the p = q = 1 torus with its first radius modulated as
/// r(u) = r0*(1 + 0.1 cos u) and the result renormalized onto S^3. Not CMC.
ImmersionGrid control_noncmc_immersion(double r2_base, int Nu, int Nv);

/// Fills missing derivative arrays with second-order periodic central
/// differences of the positions. Marks the grid accordingly.
void fill_derivatives_fd(ImmersionGrid& grid);

struct ImmersionResiduals {
  double unit_norm = 0.0;     // max | |phi|^2 - 1 | over nodes
  double tangency_u = 0.0;    // max |phi . phi_u|
  double tangency_v = 0.0;    // max |phi . phi_v|
  double fd_first = 0.0;      // max |central difference - supplied|, first derivatives
  double fd_second = 0.0;     // same for second derivatives
};

/// Reporting only; never throws.
ImmersionResiduals validate_immersion(const ImmersionGrid& grid);

enum class Orientation { CrossPositive, Flipped };

struct GeometryOptions {
  Orientation orientation = Orientation::CrossPositive;
  double degeneracy_eps = 1e-12;  // det g at or below this is an error
  double cmc_tol = 1e-8;          // max |H - mean H| for the CMC flag
};

class DegenerateImmersionError : public std::runtime_error {
 public:
  DegenerateImmersionError(int i, int j, double det)
      : std::runtime_error("degenerate metric at node (" + std::to_string(i) + ", " +
                           std::to_string(j) + "), det g = " + std::to_string(det)),
        node_i(i), node_j(j), det_g(det) {}
  int node_i;
  int node_j;
  double det_g;
};

/// Pointwise first/second fundamental data of a sampled torus in S^3.
struct SurfaceGeometry {
  int Nu = 0, Nv = 0;
  double Lu = 0.0, Lv = 0.0;
  int n = 2;

  std::vector<Vec4> phi;      // positions (copied from the grid)
  std::vector<Vec4> normal;   // unit normal in S^3
  std::vector<Mat2> metric;
  std::vector<Mat2> metric_inv;
  std::vector<double> sqrt_det_g;
  std::vector<Mat2> second_form;
  std::vector<double> H;
  std::vector<double> A2;
  std::vector<double> weight;  // sqrt_det_g * (Lu/Nu) * (Lv/Nv)

  double area = 0.0;
  double H_mean = 0.0;          // area-weighted
  double H_max_deviation = 0.0;
  bool H_constant = false;
  double cmc_tol = 0.0;
  bool derivatives_supplied = true;

  int size() const { return Nu * Nv; }
  double hu() const { return Lu / Nu; }
  double hv() const { return Lv / Nv; }
  int index(int i, int j) const {
    i %= Nu; if (i < 0) i += Nu;
    j %= Nv; if (j < 0) j += Nv;
    return i * Nv + j;
  }
  /// min over nodes of A2 - n H^2 (>= 0 up to roundoff; 0 exactly when umbilical)
  double min_umbilical_gap() const;
};

/// First and second fundamental forms, Gauss map, H, |A|^2 and quadrature
/// weights. The normal sign makes (phi, phi_u, phi_v, nu) positively oriented
/// (Orientation::Flipped negates it); H carries whatever sign results.
SurfaceGeometry compute_surface_geometry(const ImmersionGrid& grid,
                                         const GeometryOptions& options = {});

/// Generalized cross product: the vector c with c . x = det[a; b; c'... x] for
/// all x, i.e. the unique direction orthogonal to a, b, c with positive
/// orientation determinant.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

}  // namespace cmcindex
