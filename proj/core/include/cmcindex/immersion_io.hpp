#pragma once

#include "cmcindex/geometry.hpp"

#include <iosfwd>
#include <string>

namespace cmcindex {

class ImmersionFileError : public std::runtime_error {
 public:
  explicit ImmersionFileError(const std::string& what) : std::runtime_error(what) {}
};

/// Text format, one node per row:
///   header: Nu Nv Lu Lv has_derivatives(0|1)
///   rows:   i j x0 x1 x2 x3 [du0..du3 dv0..dv3 duu0..duu3 duv0..duv3 dvv0..dvv3]
/// row-major in i then j, doubles printed with 17 significant digits.
ImmersionGrid read_immersion_file(const std::string& path);
ImmersionGrid read_immersion_stream(std::istream& in, const std::string& name);

void write_immersion_file(const std::string& path, const ImmersionGrid& grid,
                          bool include_derivatives = true);
void write_immersion_stream(std::ostream& out, const ImmersionGrid& grid,
                            bool include_derivatives = true);

}  // namespace cmcindex
