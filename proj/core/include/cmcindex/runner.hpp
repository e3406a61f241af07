#pragma once

#include "cmcindex/geometry.hpp"
#include "cmcindex/spectrum.hpp"
#include "cmcindex/support.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmcindex {

// Exit codes shared by the command runners and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitHypothesisNotMet = 4;
inline constexpr int kExitIo = 5;

struct FamilySelection {
  enum class Kind { Clifford, Umbilical, ControlNonCmc, File };
  Kind kind = Kind::Clifford;
  std::optional<CliffordSpec> clifford;
  std::optional<UmbilicalSpec> umbilical;
  double control_r2 = 0.5;
  std::string file_path;

  static FamilySelection make_clifford(int p, int q, double r2);
  static FamilySelection make_umbilical(int n, double rho);
  static FamilySelection make_control(double r2);
  static FamilySelection make_file(std::string path);
};

struct RunSettings {
  int grid = 48;
  double tau = 1e-2;            // discrete zero tolerance
  double tau_exact = 1e-9;      // exact-path zero classification
  double tau_adm_scale = 1e-8;  // admissibility scale
  double window = 1.0;          // spectrum enumeration window
  double validate_tol = 1e-6;
  bool flip_orientation = false;
  bool measure_timing = true;   // false pins timing_ms to 0 for byte-stable output
};

/// A finished command: canonical JSON (fixed field order, 17 significant
/// digits), a human-readable text rendering, CSV where the command produces
/// one, and the exit code under the CLI contract.
struct RunReport {
  std::string command;
  std::string json;
  std::string text;
  std::string csv;
  int exit_code = kExitOk;
};

RunReport run_index(const FamilySelection& family, bool exact_method, const RunSettings& settings);
RunReport run_spectrum(const FamilySelection& family, const RunSettings& settings);

/// target: "identities" | "lemma" | "theorem"
RunReport run_verify(const std::string& target, const FamilySelection& family,
                     const RunSettings& settings);

struct SweepRequest {
  int p = 1, q = 1;
  std::vector<double> r2_values;  // explicit values; or use the range below
  double r2_min = 0.0, r2_max = 0.0;
  int steps = 0;

  std::vector<double> values() const;
};

RunReport run_sweep(const SweepRequest& request, const RunSettings& settings);
RunReport run_validate(const std::string& path, const RunSettings& settings);

}  // namespace cmcindex
