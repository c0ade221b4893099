#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "starlab/involution.hpp"

namespace starlab {

enum class CleanMode { Clean, StronglyClean, StarClean, StronglyStarClean };

const char* to_string(CleanMode mode) noexcept;

/// a = e + u with e idempotent and u a unit.
struct CleanCertificate {
  Elem subject = 0;
  Elem part = 0;
  Elem unit = 0;
  bool projection = false;  ///< e* = e
  bool commuting = false;   ///< eu = ue

  friend bool operator==(const CleanCertificate&, const CleanCertificate&) = default;
};

/// Decompositions of `a` allowed by `mode`, ordered by (e, u). `limit` = 0 means all.
std::vector<CleanCertificate> clean_certificates(const StarRing& s, Elem a, CleanMode mode, std::size_t limit = 0);
std::optional<CleanCertificate> first_clean_certificate(const StarRing& s, Elem a, CleanMode mode);
/// Re-checks the certificate's invariants from scratch.
bool certificate_valid(const StarRing& s, const CleanCertificate& cert);

/// a^n = a^(n+1) x = y a^(n+1).
struct StronglyPiRegularWitness {
  std::size_t n = 0;
  Elem x = 0;
  Elem y = 0;
};
std::optional<StronglyPiRegularWitness> strongly_pi_regular_witness(const FiniteRing& r, Elem a);

/// a = pu = up, p a projection, u a unit.
struct StarRegularWitness {
  Elem projection = 0;
  Elem unit = 0;
};
std::optional<StarRegularWitness> strongly_star_regular_witness(const StarRing& s, Elem a);

/// Certificate for one of the four equivalent strongly pi-*-regular conditions.
///  C1: a^m = e u, e projection, u unit, {a, e, u} pairwise commuting.
///  C2: a = f + v, f projection, v unit, fv = vf, af nilpotent.
///  C3: p projection commuting with a, ap invertible in pRp, a(1-p) nilpotent.
///  C4: b in comm(a), (ab)* = ab, b = bab, a - a^2 b nilpotent.
struct PiStarCertificate {
  int condition = 1;  ///< 1..4
  Elem subject = 0;
  std::size_t exponent = 0;  ///< C1
  Elem projection = 0;       ///< e (C1), f (C2), p (C3)
  Elem unit = 0;             ///< u (C1), v (C2), corner inverse w (C3)
  Elem inner = 0;            ///< b (C4)
};

std::optional<PiStarCertificate> spsr_condition1(const StarRing& s, Elem a);
std::optional<PiStarCertificate> spsr_condition2(const StarRing& s, Elem a);
std::optional<PiStarCertificate> spsr_condition3(const StarRing& s, Elem a);
std::optional<PiStarCertificate> spsr_condition4(const StarRing& s, Elem a);

struct SpsrConditions {
  std::array<std::optional<PiStarCertificate>, 4> certificates;

  bool holds(int condition) const { return certificates.at(condition - 1).has_value(); }
  bool agree() const { return holds(1) == holds(2) && holds(2) == holds(3) && holds(3) == holds(4); }
};

/// Evaluates C1..C4 independently.
SpsrConditions spsr_conditions(const StarRing& s, Elem a);
bool certificate_valid(const StarRing& s, const PiStarCertificate& cert);

/// a = t + u with t^2 = 1, t* = t and u a unit.
struct SasrDecomposition {
  Elem root = 0;
  Elem unit = 0;
};
std::optional<SasrDecomposition> unit_sasr_decomposition(const StarRing& s, Elem a);

}  // namespace starlab
