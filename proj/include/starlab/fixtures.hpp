#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "starlab/finite_ring.hpp"

namespace starlab {

/// Worked examples bundled as spec + expected verdicts.
///
///   swap-boolean      Z2xZ2 with swap: clean but not *-clean
///   z4-identity       Z4 with id: strongly pi-*-regular, 2 not strongly *-regular
///   m2z2-transpose    M2(Z2) with tr(id): isr1 without psr1
///   m2z3-transpose    M2(Z3) with tr(id): psr1 without strong *-cleanness
///   matrix-criterion  real matrices under transpose
struct FixtureCheck {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct FixtureResult {
  std::string name;
  std::string ring;
  std::string involution;
  std::vector<FixtureCheck> checks;

  bool ok() const;
};

const std::vector<std::string>& fixture_names();
/// Throws ValidationError for an unknown name.
FixtureResult run_fixture(std::string_view name, const RingOptions& options = {});

}  // namespace starlab
