#include "cmcindex/immersion_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cmcindex {

namespace {

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

ImmersionGrid read_immersion_stream(std::istream& in, const std::string& name) {
  int Nu = 0, Nv = 0, has_derivatives = 0;
  double Lu = 0.0, Lv = 0.0;
  if (!(in >> Nu >> Nv >> Lu >> Lv >> has_derivatives))
    throw ImmersionFileError(name + ": malformed header (want: Nu Nv Lu Lv has_derivatives)");
  if (Nu < 4 || Nv < 4 || !(Lu > 0.0) || !(Lv > 0.0))
    throw ImmersionFileError(name + ": invalid header values");

  ImmersionGrid grid;
  grid.Nu = Nu;
  grid.Nv = Nv;
  grid.Lu = Lu;
  grid.Lv = Lv;
  const int N = Nu * Nv;
  grid.phi.assign(N, Vec4::Zero());
  grid.phi_u.assign(N, Vec4::Zero());
  grid.phi_v.assign(N, Vec4::Zero());
  grid.phi_uu.assign(N, Vec4::Zero());
  grid.phi_uv.assign(N, Vec4::Zero());
  grid.phi_vv.assign(N, Vec4::Zero());

  std::vector<bool> seen(N, false);
  for (int row = 0; row < N; ++row) {
    int i = 0, j = 0;
    if (!(in >> i >> j))
      throw ImmersionFileError(name + ": truncated at row " + std::to_string(row));
    if (i < 0 || i >= Nu || j < 0 || j >= Nv)
      throw ImmersionFileError(name + ": node index (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") out of range");
    const int c = i * Nv + j;
    if (seen[c])
      throw ImmersionFileError(name + ": duplicate node (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");
    seen[c] = true;
    auto read_vec = [&](Vec4& target) {
      for (int k = 0; k < 4; ++k)
        if (!(in >> target[k]))
          throw ImmersionFileError(name + ": truncated values at node (" + std::to_string(i) +
                                   ", " + std::to_string(j) + ")");
    };
    read_vec(grid.phi[c]);
    if (has_derivatives) {
      read_vec(grid.phi_u[c]);
      read_vec(grid.phi_v[c]);
      read_vec(grid.phi_uu[c]);
      read_vec(grid.phi_uv[c]);
      read_vec(grid.phi_vv[c]);
    }
  }
  if (!has_derivatives) fill_derivatives_fd(grid);
  return grid;
}

ImmersionGrid read_immersion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ImmersionFileError(path + ": cannot open for reading");
  return read_immersion_stream(in, path);
}

void write_immersion_stream(std::ostream& out, const ImmersionGrid& grid,
                            bool include_derivatives) {
  out << grid.Nu << ' ' << grid.Nv << ' ' << fmt17(grid.Lu) << ' ' << fmt17(grid.Lv) << ' '
      << (include_derivatives ? 1 : 0) << '\n';
  auto put_vec = [&](const Vec4& x) {
    for (int k = 0; k < 4; ++k) out << ' ' << fmt17(x[k]);
  };
  for (int i = 0; i < grid.Nu; ++i) {
    for (int j = 0; j < grid.Nv; ++j) {
      const int c = i * grid.Nv + j;
      out << i << ' ' << j;
      put_vec(grid.phi[c]);
      if (include_derivatives) {
        put_vec(grid.phi_u[c]);
        put_vec(grid.phi_v[c]);
        put_vec(grid.phi_uu[c]);
        put_vec(grid.phi_uv[c]);
        put_vec(grid.phi_vv[c]);
      }
      out << '\n';
    }
  }
}

void write_immersion_file(const std::string& path, const ImmersionGrid& grid,
                          bool include_derivatives) {
  std::ofstream out(path);
  if (!out) throw ImmersionFileError(path + ": cannot open for writing");
  write_immersion_stream(out, grid, include_derivatives);
  if (!out) throw ImmersionFileError(path + ": write failed");
}

}  // namespace cmcindex
