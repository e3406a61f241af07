#include "cmcindex/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cmcindex {

CliffordScalars clifford_scalars(const CliffordSpec& spec) {
  const double r = spec.r();
  const double s = spec.s();
  const double p = spec.p;
  const double q = spec.q;
  CliffordScalars out;
  out.H = (p * s / r - q * r / s) / spec.n();
  out.A2 = p * (s * s) / (r * r) + q * (r * r) / (s * s);
  out.principal_curvatures = {{{s / r, spec.p}, {-r / s, spec.q}}};
  return out;
}

UmbilicalScalars umbilical_scalars(const UmbilicalSpec& spec) {
  UmbilicalScalars out;
  out.H = spec.height() / spec.rho;
  out.A2 = spec.n * out.H * out.H;
  return out;
}

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  // c4 . x = det [a; b; c; x] for every x (expansion along the last row).
  Vec4 out;
  auto minor3 = [&](int col) {
    Eigen::Matrix3d m;
    int cc = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == col) continue;
      m(0, cc) = a[j];
      m(1, cc) = b[j];
      m(2, cc) = c[j];
      ++cc;
    }
    return m.determinant();
  };
  out[0] = -minor3(0);
  out[1] = minor3(1);
  out[2] = -minor3(2);
  out[3] = minor3(3);
  return out;
}

// ---------------------------------------------------------------------------
// Second-order jets in (u, v): value plus all derivatives through order two.
// The built-in families are evaluated on jets so every derivative handed to
// the pipeline is analytic, never finite-differenced.
// ---------------------------------------------------------------------------
namespace {

struct Jet2 {
  double v = 0, du = 0, dv = 0, duu = 0, duv = 0, dvv = 0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet2 var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
  static Jet2 var_v(double v) { return {v, 0, 1, 0, 0, 0}; }
};

Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}
Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}
Jet2 operator*(double c, const Jet2& a) {
  return {c * a.v, c * a.du, c * a.dv, c * a.duu, c * a.duv, c * a.dvv};
}
Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  r.du = a.du * b.v + a.v * b.du;
  r.dv = a.dv * b.v + a.v * b.dv;
  r.duu = a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu;
  r.duv = a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv;
  r.dvv = a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv;
  return r;
}

// Chain rule for a scalar map with derivatives f1 = g'(a), f2 = g''(a).
Jet2 compose(const Jet2& a, double g0, double g1, double g2) {
  Jet2 r;
  r.v = g0;
  r.du = g1 * a.du;
  r.dv = g1 * a.dv;
  r.duu = g2 * a.du * a.du + g1 * a.duu;
  r.duv = g2 * a.du * a.dv + g1 * a.duv;
  r.dvv = g2 * a.dv * a.dv + g1 * a.dvv;
  return r;
}

Jet2 sin(const Jet2& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
Jet2 cos(const Jet2& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
Jet2 reciprocal(const Jet2& a) {
  const double iv = 1.0 / a.v;
  return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}

using JetPoint = std::array<Jet2, 4>;

void store_jet_point(ImmersionGrid& grid, int idx, const JetPoint& pt) {
  for (int c = 0; c < 4; ++c) {
    grid.phi[idx][c] = pt[c].v;
    grid.phi_u[idx][c] = pt[c].du;
    grid.phi_v[idx][c] = pt[c].dv;
    grid.phi_uu[idx][c] = pt[c].duu;
    grid.phi_uv[idx][c] = pt[c].duv;
    grid.phi_vv[idx][c] = pt[c].dvv;
  }
}

ImmersionGrid allocate_grid(int Nu, int Nv, double Lu, double Lv) {
  if (Nu < 4 || Nv < 4) throw std::invalid_argument("immersion grid needs Nu, Nv >= 4");
  ImmersionGrid g;
  g.Nu = Nu;
  g.Nv = Nv;
  g.Lu = Lu;
  g.Lv = Lv;
  const int N = Nu * Nv;
  g.phi.resize(N);
  g.phi_u.resize(N);
  g.phi_v.resize(N);
  g.phi_uu.resize(N);
  g.phi_uv.resize(N);
  g.phi_vv.resize(N);
  return g;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

ImmersionGrid clifford_immersion(const CliffordSpec& spec, int Nu, int Nv) {
  if (spec.p != 1 || spec.q != 1)
    throw std::invalid_argument("clifford_immersion: the sampled pipeline handles p = q = 1 only");
  const double r = spec.r();
  const double s = spec.s();
  ImmersionGrid grid = allocate_grid(Nu, Nv, kTwoPi, kTwoPi);
  for (int i = 0; i < Nu; ++i) {
    const double u = grid.hu() * i;
    const double cu = std::cos(u), su = std::sin(u);
    for (int j = 0; j < Nv; ++j) {
      const double v = grid.hv() * j;
      const double cv = std::cos(v), sv = std::sin(v);
      const int idx = i * Nv + j;
      grid.phi[idx] = Vec4(r * cu, r * su, s * cv, s * sv);
      grid.phi_u[idx] = Vec4(-r * su, r * cu, 0, 0);
      grid.phi_v[idx] = Vec4(0, 0, -s * sv, s * cv);
      grid.phi_uu[idx] = Vec4(-r * cu, -r * su, 0, 0);
      grid.phi_uv[idx] = Vec4(0, 0, 0, 0);
      grid.phi_vv[idx] = Vec4(0, 0, -s * cv, -s * sv);
    }
  }
  return grid;
}

ImmersionGrid control_noncmc_immersion(double r2_base, int Nu, int Nv) {
  if (!(r2_base > 0.0 && r2_base < 1.0))
    throw std::invalid_argument("control_noncmc_immersion: r2 must lie in (0,1)");
  const double r0 = std::sqrt(r2_base);
  const double s0 = std::sqrt(1.0 - r2_base);
  ImmersionGrid grid = allocate_grid(Nu, Nv, kTwoPi, kTwoPi);
  for (int i = 0; i < Nu; ++i) {
    const double u0 = grid.hu() * i;
    for (int j = 0; j < Nv; ++j) {
      const double v0 = grid.hv() * j;
      const Jet2 u = Jet2::var_u(u0);
      const Jet2 v = Jet2::var_v(v0);
      const Jet2 rho = r0 * (Jet2::constant(1.0) + 0.1 * cos(u));
      JetPoint w = {rho * cos(u), rho * sin(u), s0 * cos(v), s0 * sin(v)};
      Jet2 norm2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
      Jet2 inv_norm = reciprocal(sqrt(norm2));
      JetPoint pt = {w[0] * inv_norm, w[1] * inv_norm, w[2] * inv_norm, w[3] * inv_norm};
      store_jet_point(grid, i * Nv + j, pt);
    }
  }
  return grid;
}

void fill_derivatives_fd(ImmersionGrid& grid) {
  const double hu = grid.hu(), hv = grid.hv();
  const int Nu = grid.Nu, Nv = grid.Nv;
  for (int i = 0; i < Nu; ++i) {
    for (int j = 0; j < Nv; ++j) {
      const int c = grid.index(i, j);
      const Vec4& pc = grid.phi[c];
      const Vec4& pe = grid.phi[grid.index(i + 1, j)];
      const Vec4& pw = grid.phi[grid.index(i - 1, j)];
      const Vec4& pn = grid.phi[grid.index(i, j + 1)];
      const Vec4& ps = grid.phi[grid.index(i, j - 1)];
      grid.phi_u[c] = (pe - pw) / (2.0 * hu);
      grid.phi_v[c] = (pn - ps) / (2.0 * hv);
      grid.phi_uu[c] = (pe - 2.0 * pc + pw) / (hu * hu);
      grid.phi_vv[c] = (pn - 2.0 * pc + ps) / (hv * hv);
      grid.phi_uv[c] = (grid.phi[grid.index(i + 1, j + 1)] - grid.phi[grid.index(i + 1, j - 1)] -
                        grid.phi[grid.index(i - 1, j + 1)] + grid.phi[grid.index(i - 1, j - 1)]) /
                       (4.0 * hu * hv);
    }
  }
  grid.derivatives_supplied = false;
}

ImmersionResiduals validate_immersion(const ImmersionGrid& grid) {
  ImmersionResiduals res;
  const double hu = grid.hu(), hv = grid.hv();
  for (int i = 0; i < grid.Nu; ++i) {
    for (int j = 0; j < grid.Nv; ++j) {
      const int c = grid.index(i, j);
      res.unit_norm = std::max(res.unit_norm, std::abs(grid.phi[c].norm() - 1.0));
      res.tangency_u = std::max(res.tangency_u, std::abs(grid.phi[c].dot(grid.phi_u[c])));
      res.tangency_v = std::max(res.tangency_v, std::abs(grid.phi[c].dot(grid.phi_v[c])));

      const Vec4& pe = grid.phi[grid.index(i + 1, j)];
      const Vec4& pw = grid.phi[grid.index(i - 1, j)];
      const Vec4& pn = grid.phi[grid.index(i, j + 1)];
      const Vec4& ps = grid.phi[grid.index(i, j - 1)];
      const Vec4 du = (pe - pw) / (2.0 * hu);
      const Vec4 dv = (pn - ps) / (2.0 * hv);
      res.fd_first = std::max(res.fd_first, (du - grid.phi_u[c]).lpNorm<Eigen::Infinity>());
      res.fd_first = std::max(res.fd_first, (dv - grid.phi_v[c]).lpNorm<Eigen::Infinity>());

      const Vec4 duu = (pe - 2.0 * grid.phi[c] + pw) / (hu * hu);
      const Vec4 dvv = (pn - 2.0 * grid.phi[c] + ps) / (hv * hv);
      const Vec4 duv = (grid.phi[grid.index(i + 1, j + 1)] - grid.phi[grid.index(i + 1, j - 1)] -
                        grid.phi[grid.index(i - 1, j + 1)] + grid.phi[grid.index(i - 1, j - 1)]) /
                       (4.0 * hu * hv);
      res.fd_second = std::max(res.fd_second, (duu - grid.phi_uu[c]).lpNorm<Eigen::Infinity>());
      res.fd_second = std::max(res.fd_second, (duv - grid.phi_uv[c]).lpNorm<Eigen::Infinity>());
      res.fd_second = std::max(res.fd_second, (dvv - grid.phi_vv[c]).lpNorm<Eigen::Infinity>());
    }
  }
  return res;
}

double SurfaceGeometry::min_umbilical_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) gap = std::min(gap, A2[i] - n * H[i] * H[i]);
  return gap;
}

SurfaceGeometry compute_surface_geometry(const ImmersionGrid& grid,
                                         const GeometryOptions& options) {
  SurfaceGeometry geom;
  geom.Nu = grid.Nu;
  geom.Nv = grid.Nv;
  geom.Lu = grid.Lu;
  geom.Lv = grid.Lv;
  geom.cmc_tol = options.cmc_tol;
  geom.derivatives_supplied = grid.derivatives_supplied;
  const int N = grid.size();
  geom.phi = grid.phi;
  geom.normal.resize(N);
  geom.metric.resize(N);
  geom.metric_inv.resize(N);
  geom.sqrt_det_g.resize(N);
  geom.second_form.resize(N);
  geom.H.resize(N);
  geom.A2.resize(N);
  geom.weight.resize(N);

  const double cell = grid.hu() * grid.hv();
  const double flip = options.orientation == Orientation::Flipped ? -1.0 : 1.0;

  for (int i = 0; i < grid.Nu; ++i) {
    for (int j = 0; j < grid.Nv; ++j) {
      const int c = grid.index(i, j);
      Mat2 g;
      g(0, 0) = grid.phi_u[c].dot(grid.phi_u[c]);
      g(0, 1) = g(1, 0) = grid.phi_u[c].dot(grid.phi_v[c]);
      g(1, 1) = grid.phi_v[c].dot(grid.phi_v[c]);
      const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
      if (!(det > options.degeneracy_eps)) throw DegenerateImmersionError(i, j, det);

      Mat2 ginv;
      ginv(0, 0) = g(1, 1) / det;
      ginv(1, 1) = g(0, 0) / det;
      ginv(0, 1) = ginv(1, 0) = -g(0, 1) / det;

      Vec4 nu = cross4(grid.phi[c], grid.phi_u[c], grid.phi_v[c]);
      const double nn = nu.norm();
      if (!(nn * nn > options.degeneracy_eps)) throw DegenerateImmersionError(i, j, det);
      nu *= flip / nn;

      Mat2 h;
      h(0, 0) = grid.phi_uu[c].dot(nu);
      h(0, 1) = h(1, 0) = grid.phi_uv[c].dot(nu);
      h(1, 1) = grid.phi_vv[c].dot(nu);

      const Mat2 shape = ginv * h;
      geom.metric[c] = g;
      geom.metric_inv[c] = ginv;
      geom.sqrt_det_g[c] = std::sqrt(det);
      geom.normal[c] = nu;
      geom.second_form[c] = h;
      geom.H[c] = 0.5 * shape.trace();
      geom.A2[c] = (shape * shape).trace();
      geom.weight[c] = geom.sqrt_det_g[c] * cell;
    }
  }

  geom.area = 0.0;
  double hw = 0.0;
  for (int c = 0; c < N; ++c) {
    geom.area += geom.weight[c];
    hw += geom.weight[c] * geom.H[c];
  }
  geom.H_mean = hw / geom.area;
  geom.H_max_deviation = 0.0;
  for (int c = 0; c < N; ++c)
    geom.H_max_deviation = std::max(geom.H_max_deviation, std::abs(geom.H[c] - geom.H_mean));
  geom.H_constant = geom.H_max_deviation <= geom.cmc_tol;
  return geom;
}

}  // namespace cmcindex
