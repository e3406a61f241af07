#include "cmcindex/forms.hpp"

#include <array>
#include <cmath>

namespace cmcindex {

namespace {

// 2x2 Gauss rule on the reference square, exact through bicubic terms; with
// corner-interpolated coefficients this integrates the constant-metric
// families exactly, which keeps the generalized eigenvalues one-sided.
constexpr double kGaussOffset = 0.28867513459481288225457439025098;  // 1/(2 sqrt 3)
constexpr std::array<double, 2> kGaussPts = {0.5 - kGaussOffset, 0.5 + kGaussOffset};

struct CellAssembler {
  const SurfaceGeometry& geom;
  std::vector<Eigen::Triplet<double>> k_trip, m_trip;
  const VecX* coeff = nullptr;  // optional nodal coefficient for the weighted mass

  explicit CellAssembler(const SurfaceGeometry& g) : geom(g) {}

  template <typename EmitK, typename EmitM>
  void run(EmitK&& emit_k, EmitM&& emit_m) {
    const double hu = geom.hu(), hv = geom.hv();
    for (int i = 0; i < geom.Nu; ++i) {
      for (int j = 0; j < geom.Nv; ++j) {
        const std::array<int, 4> nodes = {geom.index(i, j), geom.index(i + 1, j),
                                          geom.index(i, j + 1), geom.index(i + 1, j + 1)};
        std::array<double, 4> g11, g12, g22, cf;
        for (int a = 0; a < 4; ++a) {
          const Mat2& g = geom.metric[nodes[a]];
          g11[a] = g(0, 0);
          g12[a] = g(0, 1);
          g22[a] = g(1, 1);
          cf[a] = coeff ? (*coeff)[nodes[a]] : 1.0;
        }
        for (double x : kGaussPts) {
          for (double y : kGaussPts) {
            const std::array<double, 4> shape = {(1 - x) * (1 - y), x * (1 - y), (1 - x) * y,
                                                 x * y};
            const std::array<double, 4> dx = {-(1 - y) / hu, (1 - y) / hu, -y / hu, y / hu};
            const std::array<double, 4> dy = {-(1 - x) / hv, -x / hv, (1 - x) / hv, x / hv};
            double G11 = 0, G12 = 0, G22 = 0, C = 0;
            for (int a = 0; a < 4; ++a) {
              G11 += shape[a] * g11[a];
              G12 += shape[a] * g12[a];
              G22 += shape[a] * g22[a];
              C += shape[a] * cf[a];
            }
            const double det = G11 * G22 - G12 * G12;
            const double sq = std::sqrt(det);
            // inverse metric entries
            const double iu = G22 / det, iuv = -G12 / det, iv = G11 / det;
            const double wq = 0.25 * hu * hv * sq;
            for (int a = 0; a < 4; ++a) {
              for (int b = 0; b < 4; ++b) {
                const double grad = iu * dx[a] * dx[b] + iuv * (dx[a] * dy[b] + dy[a] * dx[b]) +
                                    iv * dy[a] * dy[b];
                emit_k(nodes[a], nodes[b], wq * grad);
                emit_m(nodes[a], nodes[b], wq * C * shape[a] * shape[b]);
              }
            }
          }
        }
      }
    }
  }
};

SpMat from_triplets(int N, std::vector<Eigen::Triplet<double>>& trip) {
  SpMat m(N, N);
  m.setFromTriplets(trip.begin(), trip.end());
  m.makeCompressed();
  return m;
}

}  // namespace

DiscreteForms assemble_forms(const SurfaceGeometry& geom) {
  DiscreteForms forms;
  const int N = geom.size();
  forms.N = N;
  forms.mass = VecX(N);
  for (int c = 0; c < N; ++c) forms.mass[c] = geom.weight[c];
  forms.area = forms.mass.sum();

  CellAssembler assembler(geom);
  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(static_cast<size_t>(N) * 64);
  mt.reserve(static_cast<size_t>(N) * 64);
  assembler.run([&](int a, int b, double v) { kt.emplace_back(a, b, v); },
                [&](int a, int b, double v) { mt.emplace_back(a, b, v); });
  forms.stiffness = from_triplets(N, kt);
  forms.mass_consistent = from_triplets(N, mt);
  return forms;
}

SpMat assemble_weighted_mass(const SurfaceGeometry& geom, const VecX& nodal_coeff) {
  CellAssembler assembler(geom);
  assembler.coeff = &nodal_coeff;
  std::vector<Eigen::Triplet<double>> mt;
  mt.reserve(static_cast<size_t>(geom.size()) * 64);
  assembler.run([](int, int, double) {}, [&](int a, int b, double v) { mt.emplace_back(a, b, v); });
  return from_triplets(geom.size(), mt);
}

double integrate(const SurfaceGeometry& geom, const VecX& f) {
  double acc = 0.0;
  for (int c = 0; c < geom.size(); ++c) acc += geom.weight[c] * f[c];
  return acc;
}

double integrate(const DiscreteForms& forms, const VecX& f) { return forms.mass.dot(f); }

VecX apply_laplacian(const DiscreteForms& forms, const VecX& f) {
  return (-(forms.stiffness * f).array() / forms.mass.array()).matrix();
}

IdentityResiduals identity_residuals(const SurfaceGeometry& geom, const DiscreteForms& forms,
                                     const Vec4& v) {
  const int N = geom.size();
  VecX l(N), f(N);
  for (int c = 0; c < N; ++c) {
    l[c] = geom.phi[c].dot(v);
    f[c] = geom.normal[c].dot(v);
  }
  const double n = geom.n;
  const double H = geom.H_mean;
  const VecX lap_l = apply_laplacian(forms, l);
  const VecX lap_f = apply_laplacian(forms, f);

  IdentityResiduals res;
  res.cmc_warning = !geom.H_constant;
  res.H_deviation = geom.H_max_deviation;
  for (int c = 0; c < N; ++c) {
    res.r1 = std::max(res.r1, std::abs(lap_l[c] + n * l[c] - n * H * f[c]));
    res.r2 = std::max(res.r2, std::abs(lap_f[c] + geom.A2[c] * f[c] - n * H * l[c]));
  }
  return res;
}

}  // namespace cmcindex
