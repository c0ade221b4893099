#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starlab/finite_ring.hpp"

namespace starlab {

/// Involution recipe, mirroring the ring construction tree.
///
///   id        identity (commutative rings only)
///   swap      (a,b) -> (b,a) on S x S
///   tr(i)     A -> transpose of (a_ij^*) on M_k(R)
///   grp(i)    sum a_g g -> sum a_g^* g^-1 on RG
///   prod(i,j,...)  componentwise on a product
///   poly(i)   coefficientwise on R[x]/(x^k)
///   quot(i)   induced on R/I from i on R
///   res(i)    restricted to pRp from i on R
///   table:F   explicit star map read from file F
struct InvolutionSpec {
  enum class Kind { Identity, Swap, Transpose, GroupRing, Product, Poly, Quotient, Restrict, Table };

  Kind kind = Kind::Identity;
  std::vector<InvolutionSpec> children;
  std::string table_file;
  /// Filled in for Table specs once the file is read (star image of each index).
  std::vector<Elem> table;

  friend bool operator==(const InvolutionSpec& a, const InvolutionSpec& b) {
    return a.kind == b.kind && a.children == b.children && a.table_file == b.table_file;
  }
};

std::string to_string(const InvolutionSpec& spec);

/// A finite ring together with a validated involution.
class StarRing {
 public:
  StarRing() = default;

  const FiniteRing& ring() const noexcept { return ring_; }
  const InvolutionSpec& spec() const noexcept { return spec_; }
  Elem star(Elem a) const noexcept { return star_[a]; }
  const std::vector<Elem>& star_map() const noexcept { return star_; }

  /// {p : p^2 = p = p*}
  const ElementSet& projections() const noexcept { return projections_; }
  const ElementSet& self_adjoint() const noexcept { return self_adjoint_; }
  bool is_projection(Elem p) const noexcept { return projections_.contains(p); }
  bool is_identity_involution() const noexcept;

  /// Validates the three involution axioms exhaustively (AxiomViolation on failure).
  static StarRing from_map(FiniteRing ring, std::vector<Elem> star, InvolutionSpec spec);

 private:
  StarRing(FiniteRing ring, std::vector<Elem> star, InvolutionSpec spec);

  FiniteRing ring_;
  std::vector<Elem> star_;
  InvolutionSpec spec_;
  ElementSet projections_;
  ElementSet self_adjoint_;
};

/// Build the involution described by `spec` on `ring`.
/// Errors: AxiomViolation, IdentityOnNoncommutative, SwapShapeMismatch, ValidationError,
/// NotStarInvariant (quot), NotAProjection (res).
StarRing build_involution(const FiniteRing& ring, const InvolutionSpec& spec);

/// Read a star table: whitespace-separated element literals, one image per element in
/// canonical order; `#` starts a comment only at the beginning of a line.
std::vector<Elem> read_star_table(const FiniteRing& ring, const std::string& path);

struct InducedQuotient {
  StarRing star_ring;
  std::vector<Elem> surjection;
};

/// (x + I)* = x* + I. Throws NotStarInvariant naming x in I with x* outside I.
InducedQuotient induce_quotient_involution(const StarRing& s, const Ideal& ideal, const RingOptions& options = {});

/// Restriction of * to pRp; p must be a projection.
StarRing restrict_to_corner(const StarRing& s, Elem p, const RingOptions& options = {});

/// First x != 0 with x* x = 0, if any (proper iff none).
std::optional<Elem> improper_witness(const StarRing& s);
inline bool is_proper(const StarRing& s) { return !improper_witness(s).has_value(); }

struct NonCentralProjection {
  Elem projection;
  Elem other;
};
/// First projection p and element x with px != xp, if any.
std::optional<NonCentralProjection> star_abelian_counterexample(const StarRing& s);
inline bool is_star_abelian(const StarRing& s) { return !star_abelian_counterexample(s).has_value(); }

}  // namespace starlab
