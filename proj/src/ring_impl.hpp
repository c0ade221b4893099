#pragma once

// Internal representation shared by the finite-ring translation units.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cursor.hpp"
#include "starlab/finite_ring.hpp"

namespace starlab::detail {

/// Structural arithmetic of one construction-tree node.
class Node {
 public:
  virtual ~Node() = default;
  virtual std::size_t size() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual std::string render(Elem a) const = 0;
  virtual Elem parse(Cursor& cursor) const = 0;
  virtual std::vector<Elem> decompose(Elem) const { return {}; }
  virtual std::optional<Elem> compose(const std::vector<Elem>&) const { return std::nullopt; }
  virtual Elem lift(Elem a) const { return a; }
  virtual std::optional<Elem> project(Elem) const { return std::nullopt; }
};

struct RingImpl {
  RingSpec spec;
  std::size_t n = 0;
  Elem one = 0;
  std::vector<FiniteRing> children;
  std::unique_ptr<const Node> node;

  bool tabled = false;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<Elem> neg_table;

  mutable std::once_flag units_once;
  mutable ElementSet units;
  mutable std::vector<Elem> inverses;
  mutable std::once_flag idempotents_once;
  mutable ElementSet idempotents;
  mutable std::once_flag nilpotents_once;
  mutable ElementSet nilpotents;
  mutable std::once_flag center_once;
  mutable ElementSet center;
  mutable std::once_flag jacobson_once;
  mutable ElementSet jacobson;
};

struct RingAccess {
  static const RingImpl& impl(const FiniteRing& ring) { return *ring.impl_; }
  static FiniteRing wrap(std::shared_ptr<const RingImpl> impl) { return FiniteRing(std::move(impl)); }
};

/// Parse one element literal of `ring` at the cursor (`#k` selects index k directly).
Elem parse_element_at(const FiniteRing& ring, Cursor& cursor);

}  // namespace starlab::detail
