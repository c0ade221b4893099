#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starlab/element_set.hpp"
#include "starlab/ring_spec.hpp"

namespace starlab {

struct RingOptions {
  std::size_t size_cap = 4096;   ///< larger rings are rejected with SpecTooLarge
  std::size_t table_cap = 4096;  ///< rings up to this size get memoized add/mul tables
  bool validate_axioms = true;

  /// Defaults, with `size_cap` overridden by STARLAB_SIZE_CAP when set.
  static RingOptions from_environment();
};

/// Powers a, a^2, ... up to the point where the sequence starts repeating.
/// `powers[i]` is a^(i+1); a^(tail + period + 1) == a^(tail + 1).
struct PowerSequence {
  std::vector<Elem> powers;
  std::size_t tail = 0;
  std::size_t period = 0;
};

class Ideal;

namespace detail {
struct RingImpl;
struct RingAccess;
}

/// Immutable handle to a finite unital ring. Copies share structure and caches.
class FiniteRing {
 public:
  FiniteRing() = default;

  std::size_t size() const noexcept;
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept;
  const RingSpec& spec() const noexcept;
  RingSpec::Kind kind() const noexcept { return spec().kind; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem pow(Elem a, std::size_t n) const noexcept;
  /// n·1 for a nonnegative integer n.
  Elem from_integer(long long n) const noexcept;
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }

  std::string render(Elem a) const;
  Elem parse_element(std::string_view literal) const;

  // Structure of the construction tree.
  /// Component rings: factors (Product), the base ring (Matrix, GroupRing, TruncPoly)
  /// or the parent ring (Quotient, Corner).
  const std::vector<FiniteRing>& children() const noexcept;
  /// Components of `a` in construction order (tuple entries, row-major matrix entries,
  /// group-ring coefficients, polynomial coefficients). Empty for Zmod/Quotient/Corner.
  std::vector<Elem> decompose(Elem a) const;
  Elem compose(const std::vector<Elem>& digits) const;
  /// Quotient: smallest parent representative of a coset. Corner: element in the parent.
  Elem lift(Elem a) const;
  /// Quotient: coset of a parent element. Corner: index of a parent element of eRe.
  std::optional<Elem> project(Elem parent_element) const;

  // Classical subsets, computed once and then shared.
  const ElementSet& units() const;
  Elem inverse(Elem u) const;  ///< precondition: u is a unit
  const ElementSet& idempotents() const;
  const ElementSet& nilpotents() const;
  const ElementSet& center() const;
  Ideal jacobson_radical() const;
  bool is_commutative() const;
  bool is_unit(Elem a) const { return units().contains(a); }
  bool is_idempotent(Elem a) const noexcept { return mul(a, a) == a; }
  bool is_nilpotent(Elem a) const { return nilpotents().contains(a); }

  PowerSequence powers(Elem a) const;
  ElementSet right_multiples(Elem a) const;  ///< aR
  ElementSet left_multiples(Elem a) const;   ///< Ra
  ElementSet commutant(Elem a) const;

  bool same_ring(const FiniteRing& other) const noexcept { return impl_ == other.impl_; }
  explicit operator bool() const noexcept { return impl_ != nullptr; }

 private:
  friend struct detail::RingAccess;
  explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::RingImpl> impl_;
};

/// Two-sided ideal of a FiniteRing.
class Ideal {
 public:
  Ideal() = default;

  /// Throws NotAnIdeal unless `elements` is closed under + and two-sided multiplication.
  static Ideal from_elements(const FiniteRing& owner, ElementSet elements);
  static Ideal generated_by(const FiniteRing& owner, const std::vector<Elem>& generators);
  static Ideal zero(const FiniteRing& owner);

  const FiniteRing& owner() const noexcept { return owner_; }
  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept { return elements_.contains(x); }
  /// Small generating set, chosen greedily in canonical order.
  std::vector<Elem> generators() const;

 private:
  Ideal(FiniteRing owner, ElementSet elements) : owner_(std::move(owner)), elements_(std::move(elements)) {}
  FiniteRing owner_;
  ElementSet elements_;
};

struct QuotientResult {
  FiniteRing ring;
  std::vector<Elem> surjection;  ///< parent element -> coset
};

/// Build and validate a ring. Throws Error{SpecTooLarge | MalformedSpec | NotIdempotent | ...}.
FiniteRing build_ring(const RingSpec& spec, const RingOptions& options = {});

/// R/I. The ideal must belong to `ring` (NotAnIdeal otherwise).
QuotientResult quotient(const FiniteRing& ring, const Ideal& ideal, const RingOptions& options = {});

/// eRe with unity e. Throws NotIdempotent. The zero ring is allowed here.
FiniteRing corner(const FiniteRing& ring, Elem e, const RingOptions& options = {});

/// Every a satisfies a in U(R) or 1-a in U(R).
bool is_local(const FiniteRing& ring);

/// Every ideal of the ring, sorted by (size, elements).
std::vector<Ideal> all_ideals(const FiniteRing& ring);

struct AxiomFailure {
  std::string axiom;
  std::vector<Elem> witness;
};

/// Exhaustive for size <= 512, otherwise `samples` random triples from a fixed seed.
std::optional<AxiomFailure> check_ring_axioms(const FiniteRing& ring, std::size_t samples = 200000);

}  // namespace starlab
