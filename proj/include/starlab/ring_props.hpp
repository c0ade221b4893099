#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlab/involution.hpp"

namespace starlab {

enum class Property {
  Clean,
  StronglyClean,
  StarClean,
  StronglyStarClean,
  Exchange,
  PiRegular,
  StronglyPiRegular,
  StronglyPiStarRegular,
  Regular,
  StronglyRegular,
  UnitRegular,
  StarRegular,
  StronglyStarRegular,
  Boolean,
  Abelian,
  StarAbelian,
  Local,
  IdempotentsAreProjections,
  JacobsonNil,
  DirectlyFinite,
  StableRangeOne,
  IdempotentStableRangeOne,
  ProjectionStableRangeOne,
};

const std::vector<Property>& all_properties();
std::string_view name(Property p) noexcept;
/// Accepts the kebab-case names (`strongly-star-clean`, `psr1`, ...); throws UnknownProperty.
Property property_from_name(std::string_view name);

/// Counterexample to a universally quantified property.
///   single-element properties: {a}
///   abelian / star-abelian: {e, x} with ex != xe
///   directly-finite: {a, b} with ab = 1 != ba
///   sr1 / isr1 / psr1: {a, b} comaximal with no admissible y
struct Verdict {
  bool holds = true;
  std::vector<Elem> counterexample;
};

Verdict ring_property(const StarRing& s, Property p);

/// Re-checks a false verdict's counterexample from the definitions, without caches.
bool counterexample_valid(const StarRing& s, Property p, const std::vector<Elem>& witness);

/// aR + bR = R via precomputed right ideals.
class Comaximality {
 public:
  explicit Comaximality(const FiniteRing& r);
  bool operator()(Elem a, Elem b) const;
  const ElementSet& right_ideal(Elem a) const { return right_[a]; }

 private:
  FiniteRing ring_;
  std::vector<ElementSet> right_;
};

struct StableRangeReport {
  Verdict sr1;
  Verdict isr1;
  Verdict psr1;
};
StableRangeReport stable_range_checks(const StarRing& s);

enum class Invertibility { TwoSided, Right, Left };

/// psr(R) = 1 with the unit condition replaced by right/left invertibility.
Verdict psr_variant(const StarRing& s, Invertibility mode);

struct LiftingReport {
  Verdict idempotents_lift_to_central_projections;  ///< counterexample: a lift of the bad coset
  Verdict projections_lift;
  Verdict projections_central;  ///< counterexample: {p, x}
};
LiftingReport lifting_checks(const StarRing& s);

struct PropertyReport {
  std::string ring;
  std::string involution;
  std::vector<std::pair<Property, Verdict>> verdicts;
  std::vector<double> elapsed_ms;
};
PropertyReport property_report(const StarRing& s, const std::vector<Property>& props);

}  // namespace starlab
