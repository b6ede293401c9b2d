#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ncpb/bundles.hpp"
#include "ncpb/serialization.hpp"

namespace ncpb::tools {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

Json checks_json(const std::vector<Check>& checks);

/// A named example: a factor system (with the crossed product and its dual
/// action) or a dynamical system, plus the checks run on it.
struct CatalogEntry {
  std::string name;
  std::optional<FactorSystem> factor_system;
  std::optional<DynamicalSystem> system;
  std::optional<TrivialityCertificate> certificate;
  std::vector<Check> checks;
  bool expected_fail = false;  // the non-split example fails certification by design

  bool ok() const;
  Json to_json() const;
};

/// Factor systems only: C[C_n] for n <= 6, M_m[C_n] for m = 2, 3 and n <= 3, the
/// twisted group algebras on C_n x C_n for n <= 4, and the non-split C_2 example.
std::vector<CatalogEntry> catalog_factor_systems();
/// Runs every check on the factor systems and adds the clock-shift systems n <= 5.
std::vector<CatalogEntry> build_catalog();

/// Writes one file per entry; returns the file names written.
std::vector<std::string> export_catalog(const std::filesystem::path& dir);

/// zeta_n^{g_2 g'_1} on C_n x C_n.
Cochain clock_shift_cocycle(long long n);

}  // namespace ncpb::tools
