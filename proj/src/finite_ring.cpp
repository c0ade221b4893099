#include "starlab/finite_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>

#include "ring_impl.hpp"
#include "starlab/error.hpp"

namespace starlab {
namespace detail {
namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

class ZmodNode final : public Node {
 public:
  explicit ZmodNode(unsigned n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Elem one() const override { return 1 % n_; }
  Elem add(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % n_); }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} * b) % n_); }
  Elem neg(Elem a) const override { return a == 0 ? 0 : n_ - a; }
  std::string render(Elem a) const override { return std::to_string(a); }
  Elem parse(Cursor& c) const override {
    const long long v = c.integer();
    const long long m = static_cast<long long>(n_);
    return static_cast<Elem>(((v % m) + m) % m);
  }

 private:
  unsigned n_;
};

/// Elements are digit tuples in mixed radix, digit 0 most significant.
class DigitNode : public Node {
 public:
  explicit DigitNode(std::vector<FiniteRing> digit_rings) : rings_(std::move(digit_rings)) {
    weights_.assign(rings_.size(), 1);
    for (std::size_t i = rings_.size(); i-- > 1;) weights_[i - 1] = weights_[i] * rings_[i].size();
    size_ = rings_.empty() ? 1 : weights_[0] * rings_[0].size();
  }
  std::size_t size() const override { return size_; }
  std::vector<Elem> decompose(Elem a) const override {
    std::vector<Elem> d(rings_.size());
    std::uint64_t rest = a;
    for (std::size_t i = 0; i < rings_.size(); ++i) {
      d[i] = static_cast<Elem>(rest / weights_[i]);
      rest %= weights_[i];
    }
    return d;
  }
  std::optional<Elem> compose(const std::vector<Elem>& d) const override {
    if (d.size() != rings_.size()) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] >= rings_[i].size()) return std::nullopt;
      v += weights_[i] * d[i];
    }
    return static_cast<Elem>(v);
  }
  Elem encode(const std::vector<Elem>& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) v += weights_[i] * d[i];
    return static_cast<Elem>(v);
  }
  Elem add(Elem a, Elem b) const override {
    auto x = decompose(a);
    const auto y = decompose(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rings_[i].add(x[i], y[i]);
    return encode(x);
  }
  Elem neg(Elem a) const override {
    auto x = decompose(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rings_[i].neg(x[i]);
    return encode(x);
  }

 protected:
  std::string render_list(Elem a, char open, char close) const {
    const auto d = decompose(a);
    std::string out(1, open);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != 0) out += ',';
      out += rings_[i].render(d[i]);
    }
    out += close;
    return out;
  }
  Elem parse_list(Cursor& c, char open, char close) const {
    c.expect(open);
    std::vector<Elem> d(rings_.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != 0) c.expect(',');
      d[i] = parse_element_at(rings_[i], c);
    }
    c.expect(close);
    return encode(d);
  }

  std::vector<FiniteRing> rings_;
  std::vector<std::uint64_t> weights_;
  std::size_t size_ = 1;
};

class ProductNode final : public DigitNode {
 public:
  using DigitNode::DigitNode;
  Elem one() const override {
    std::vector<Elem> d;
    for (const auto& r : rings_) d.push_back(r.one());
    return encode(d);
  }
  Elem mul(Elem a, Elem b) const override {
    auto x = decompose(a);
    const auto y = decompose(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rings_[i].mul(x[i], y[i]);
    return encode(x);
  }
  std::string render(Elem a) const override { return render_list(a, '(', ')'); }
  Elem parse(Cursor& c) const override { return parse_list(c, '(', ')'); }
};

class MatrixNode final : public DigitNode {
 public:
  MatrixNode(unsigned k, const FiniteRing& base)
      : DigitNode(std::vector<FiniteRing>(std::size_t{k} * k, base)), k_(k), base_(base) {}
  Elem one() const override {
    std::vector<Elem> d(std::size_t{k_} * k_, 0);
    for (unsigned i = 0; i < k_; ++i) d[i * k_ + i] = base_.one();
    return encode(d);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = decompose(a);
    const auto y = decompose(b);
    std::vector<Elem> z(x.size(), 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) {
        Elem s = 0;
        for (unsigned l = 0; l < k_; ++l) s = base_.add(s, base_.mul(x[i * k_ + l], y[l * k_ + j]));
        z[i * k_ + j] = s;
      }
    return encode(z);
  }
  std::string render(Elem a) const override {
    const auto d = decompose(a);
    std::string out = "[";
    for (unsigned i = 0; i < k_; ++i) {
      if (i != 0) out += ',';
      out += '[';
      for (unsigned j = 0; j < k_; ++j) {
        if (j != 0) out += ',';
        out += base_.render(d[i * k_ + j]);
      }
      out += ']';
    }
    return out + "]";
  }
  Elem parse(Cursor& c) const override {
    std::vector<Elem> d(std::size_t{k_} * k_);
    c.expect('[');
    for (unsigned i = 0; i < k_; ++i) {
      if (i != 0) c.expect(',');
      c.expect('[');
      for (unsigned j = 0; j < k_; ++j) {
        if (j != 0) c.expect(',');
        d[i * k_ + j] = parse_element_at(base_, c);
      }
      c.expect(']');
    }
    c.expect(']');
    return encode(d);
  }

 private:
  unsigned k_;
  FiniteRing base_;
};

/// Group ring over a finite abelian group; coefficient i belongs to group element i.
class GroupRingNode final : public DigitNode {
 public:
  GroupRingNode(const FiniteRing& base, const GroupSpec& group)
      : DigitNode(std::vector<FiniteRing>(group.order(), base)), base_(base) {
    const std::size_t g = group.order();
    const auto& orders = group.cyclic_orders;
    auto digits = [&](std::size_t x) {
      std::vector<unsigned> d(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        d[i] = static_cast<unsigned>(x % orders[i]);
        x /= orders[i];
      }
      return d;
    };
    auto index = [&](const std::vector<unsigned>& d) {
      std::size_t x = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + d[i];
      return x;
    };
    op_.assign(g * g, 0);
    inverse_.assign(g, 0);
    for (std::size_t x = 0; x < g; ++x) {
      const auto dx = digits(x);
      auto inv = dx;
      for (std::size_t i = 0; i < orders.size(); ++i) inv[i] = (orders[i] - dx[i]) % orders[i];
      inverse_[x] = index(inv);
      for (std::size_t y = 0; y < g; ++y) {
        const auto dy = digits(y);
        auto s = dx;
        for (std::size_t i = 0; i < orders.size(); ++i) s[i] = (dx[i] + dy[i]) % orders[i];
        op_[x * g + y] = index(s);
      }
    }
    order_ = g;
  }
  Elem one() const override {
    std::vector<Elem> d(order_, 0);
    d[0] = base_.one();
    return encode(d);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = decompose(a);
    const auto y = decompose(b);
    std::vector<Elem> z(order_, 0);
    for (std::size_t g = 0; g < order_; ++g) {
      if (x[g] == 0) continue;
      for (std::size_t h = 0; h < order_; ++h) {
        if (y[h] == 0) continue;
        const auto gh = op_[g * order_ + h];
        z[gh] = base_.add(z[gh], base_.mul(x[g], y[h]));
      }
    }
    return encode(z);
  }
  std::string render(Elem a) const override { return render_list(a, '<', '>'); }
  Elem parse(Cursor& c) const override { return parse_list(c, '<', '>'); }

  std::size_t group_inverse(std::size_t g) const { return inverse_[g]; }

 private:
  FiniteRing base_;
  std::size_t order_ = 1;
  std::vector<std::size_t> op_;
  std::vector<std::size_t> inverse_;
};

/// R[x]/(x^k); coefficient i belongs to x^i.
class TruncPolyNode final : public DigitNode {
 public:
  TruncPolyNode(const FiniteRing& base, unsigned k) : DigitNode(std::vector<FiniteRing>(k, base)), base_(base), k_(k) {}
  Elem one() const override {
    std::vector<Elem> d(k_, 0);
    d[0] = base_.one();
    return encode(d);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto x = decompose(a);
    const auto y = decompose(b);
    std::vector<Elem> z(k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; i + j < k_; ++j) z[i + j] = base_.add(z[i + j], base_.mul(x[i], y[j]));
    return encode(z);
  }
  std::string render(Elem a) const override { return render_list(a, '<', '>'); }
  Elem parse(Cursor& c) const override { return parse_list(c, '<', '>'); }

 private:
  FiniteRing base_;
  unsigned k_;
};

class QuotientNode final : public Node {
 public:
  QuotientNode(const FiniteRing& parent, std::vector<Elem> coset_of, std::vector<Elem> reps)
      : parent_(parent), coset_of_(std::move(coset_of)), reps_(std::move(reps)) {}
  std::size_t size() const override { return reps_.size(); }
  Elem one() const override { return coset_of_[parent_.one()]; }
  Elem add(Elem a, Elem b) const override { return coset_of_[parent_.add(reps_[a], reps_[b])]; }
  Elem mul(Elem a, Elem b) const override { return coset_of_[parent_.mul(reps_[a], reps_[b])]; }
  Elem neg(Elem a) const override { return coset_of_[parent_.neg(reps_[a])]; }
  std::string render(Elem a) const override { return parent_.render(reps_[a]); }
  Elem parse(Cursor& c) const override { return coset_of_[parse_element_at(parent_, c)]; }
  Elem lift(Elem a) const override { return reps_[a]; }
  std::optional<Elem> project(Elem x) const override {
    if (x >= coset_of_.size()) return std::nullopt;
    return coset_of_[x];
  }

 private:
  FiniteRing parent_;
  std::vector<Elem> coset_of_;
  std::vector<Elem> reps_;
};

class CornerNode final : public Node {
 public:
  CornerNode(const FiniteRing& parent, Elem e, std::vector<Elem> members)
      : parent_(parent), e_(e), members_(std::move(members)), index_of_(parent.size(), kNone) {
    for (std::size_t i = 0; i < members_.size(); ++i) index_of_[members_[i]] = static_cast<Elem>(i);
  }
  std::size_t size() const override { return members_.size(); }
  Elem one() const override { return index_of_[e_]; }
  Elem add(Elem a, Elem b) const override { return index_of_[parent_.add(members_[a], members_[b])]; }
  Elem mul(Elem a, Elem b) const override { return index_of_[parent_.mul(members_[a], members_[b])]; }
  Elem neg(Elem a) const override { return index_of_[parent_.neg(members_[a])]; }
  std::string render(Elem a) const override { return parent_.render(members_[a]); }
  Elem parse(Cursor& c) const override {
    const auto pos = c.position();
    const Elem x = parse_element_at(parent_, c);
    if (index_of_[x] == kNone)
      throw ParseError("element " + parent_.render(x) + " is not in the corner ring", pos);
    return index_of_[x];
  }
  Elem lift(Elem a) const override { return members_[a]; }
  std::optional<Elem> project(Elem x) const override {
    if (x >= index_of_.size() || index_of_[x] == kNone) return std::nullopt;
    return index_of_[x];
  }

 private:
  FiniteRing parent_;
  Elem e_;
  std::vector<Elem> members_;
  std::vector<Elem> index_of_;
};

std::size_t saturating_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

FiniteRing finish(RingSpec spec, std::vector<FiniteRing> children, std::unique_ptr<const Node> node,
                  const RingOptions& options) {
  auto impl = std::make_shared<RingImpl>();
  impl->spec = std::move(spec);
  impl->children = std::move(children);
  impl->n = node->size();
  impl->one = node->one();
  const std::size_t n = impl->n;
  if (n <= options.table_cap && n <= 65536) {
    impl->add_table.resize(n * n);
    impl->mul_table.resize(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        impl->add_table[std::size_t{a} * n + b] = static_cast<std::uint16_t>(node->add(a, b));
        impl->mul_table[std::size_t{a} * n + b] = static_cast<std::uint16_t>(node->mul(a, b));
      }
    impl->tabled = true;
  }
  impl->neg_table.resize(n);
  for (Elem a = 0; a < n; ++a) impl->neg_table[a] = node->neg(a);
  impl->node = std::move(node);
  auto ring = RingAccess::wrap(impl);
  if (options.validate_axioms) {
    if (auto failure = check_ring_axioms(ring)) {
      std::string w;
      for (auto x : failure->witness) w += " " + ring.render(x);
      throw Error(ErrorKind::MalformedSpec, "ring axiom '" + failure->axiom + "' fails at" + w);
    }
  }
  return ring;
}

}  // namespace

Elem parse_element_at(const FiniteRing& ring, Cursor& cursor) {
  if (cursor.accept('#')) {
    const auto pos = cursor.position();
    const auto v = cursor.integer();
    if (v < 0 || static_cast<std::size_t>(v) >= ring.size())
      throw ParseError("element index out of range", pos);
    return static_cast<Elem>(v);
  }
  return RingAccess::impl(ring).node->parse(cursor);
}

}  // namespace detail

using detail::RingAccess;

RingOptions RingOptions::from_environment() {
  RingOptions options;
  if (const char* cap = std::getenv("STARLAB_SIZE_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(cap, &end, 10);
    if (end != cap && *end == '\0' && v > 0) options.size_cap = static_cast<std::size_t>(v);
  }
  return options;
}

// ---------------------------------------------------------------------------
// FiniteRing accessors

std::size_t FiniteRing::size() const noexcept { return impl_->n; }
Elem FiniteRing::one() const noexcept { return impl_->one; }
const RingSpec& FiniteRing::spec() const noexcept { return impl_->spec; }

Elem FiniteRing::add(Elem a, Elem b) const noexcept {
  const auto& m = *impl_;
  return m.tabled ? m.add_table[std::size_t{a} * m.n + b] : m.node->add(a, b);
}
Elem FiniteRing::mul(Elem a, Elem b) const noexcept {
  const auto& m = *impl_;
  return m.tabled ? m.mul_table[std::size_t{a} * m.n + b] : m.node->mul(a, b);
}
Elem FiniteRing::neg(Elem a) const noexcept { return impl_->neg_table[a]; }

Elem FiniteRing::pow(Elem a, std::size_t n) const noexcept {
  Elem result = one();
  Elem base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

Elem FiniteRing::from_integer(long long n) const noexcept {
  Elem acc = zero();
  Elem step = one();
  const bool negative = n < 0;
  auto k = static_cast<unsigned long long>(negative ? -n : n);
  while (k > 0) {
    if (k & 1U) acc = add(acc, step);
    step = add(step, step);
    k >>= 1U;
  }
  return negative ? neg(acc) : acc;
}

std::string FiniteRing::render(Elem a) const { return impl_->node->render(a); }

Elem FiniteRing::parse_element(std::string_view literal) const {
  detail::Cursor cursor(literal);
  const Elem x = detail::parse_element_at(*this, cursor);
  if (!cursor.at_end()) cursor.fail("trailing characters in element literal");
  return x;
}

const std::vector<FiniteRing>& FiniteRing::children() const noexcept { return impl_->children; }
std::vector<Elem> FiniteRing::decompose(Elem a) const { return impl_->node->decompose(a); }
Elem FiniteRing::compose(const std::vector<Elem>& digits) const {
  auto v = impl_->node->compose(digits);
  if (!v) throw Error(ErrorKind::ValidationError, "digits do not form an element of " + to_string(spec()));
  return *v;
}
Elem FiniteRing::lift(Elem a) const { return impl_->node->lift(a); }
std::optional<Elem> FiniteRing::project(Elem parent_element) const { return impl_->node->project(parent_element); }

const ElementSet& FiniteRing::units() const {
  const auto& m = *impl_;
  std::call_once(m.units_once, [&] {
    m.units = ElementSet(m.n);
    m.inverses.assign(m.n, detail::kNone);
    for (Elem a = 0; a < m.n; ++a) {
      if (m.inverses[a] != detail::kNone) continue;
      for (Elem b = 0; b < m.n; ++b) {
        // One-sided inverses are two-sided in a finite ring.
        if (mul(a, b) == one()) {
          m.units.insert(a);
          m.units.insert(b);
          m.inverses[a] = b;
          m.inverses[b] = a;
          break;
        }
      }
    }
  });
  return m.units;
}

Elem FiniteRing::inverse(Elem u) const {
  units();
  return impl_->inverses[u];
}

const ElementSet& FiniteRing::idempotents() const {
  const auto& m = *impl_;
  std::call_once(m.idempotents_once, [&] {
    m.idempotents = ElementSet(m.n);
    for (Elem a = 0; a < m.n; ++a)
      if (is_idempotent(a)) m.idempotents.insert(a);
  });
  return m.idempotents;
}

const ElementSet& FiniteRing::nilpotents() const {
  const auto& m = *impl_;
  std::call_once(m.nilpotents_once, [&] {
    m.nilpotents = ElementSet(m.n);
    // Stamp-based cycle detection on a, a^2, ...: nilpotent iff 0 shows up before a repeat.
    std::vector<Elem> stamp(m.n, detail::kNone);
    for (Elem a = 0; a < m.n; ++a) {
      Elem x = a;
      while (x != 0 && stamp[x] != a) {
        stamp[x] = a;
        x = mul(x, a);
      }
      if (x == 0) m.nilpotents.insert(a);
    }
  });
  return m.nilpotents;
}

const ElementSet& FiniteRing::center() const {
  const auto& m = *impl_;
  std::call_once(m.center_once, [&] {
    m.center = ElementSet(m.n);
    for (Elem a = 0; a < m.n; ++a) {
      bool central = true;
      for (Elem x = 0; x < m.n && central; ++x) central = commute(a, x);
      if (central) m.center.insert(a);
    }
  });
  return m.center;
}

bool FiniteRing::is_commutative() const { return center().size() == size(); }

Ideal FiniteRing::jacobson_radical() const {
  const auto& m = *impl_;
  std::call_once(m.jacobson_once, [&] {
    const auto& u = units();
    m.jacobson = ElementSet(m.n);
    for (Elem a = 0; a < m.n; ++a) {
      bool quasi_regular = true;
      for (Elem r = 0; r < m.n && quasi_regular; ++r) quasi_regular = u.contains(sub(one(), mul(r, a)));
      if (quasi_regular) m.jacobson.insert(a);
    }
  });
  return Ideal::from_elements(*this, m.jacobson);
}

PowerSequence FiniteRing::powers(Elem a) const {
  PowerSequence seq;
  std::vector<std::size_t> seen(size(), std::numeric_limits<std::size_t>::max());
  Elem x = a;
  while (seen[x] == std::numeric_limits<std::size_t>::max()) {
    seen[x] = seq.powers.size();
    seq.powers.push_back(x);
    x = mul(x, a);
  }
  seq.tail = seen[x];
  seq.period = seq.powers.size() - seen[x];
  return seq;
}

ElementSet FiniteRing::right_multiples(Elem a) const {
  ElementSet s(size());
  for (Elem r = 0; r < size(); ++r) s.insert(mul(a, r));
  return s;
}

ElementSet FiniteRing::left_multiples(Elem a) const {
  ElementSet s(size());
  for (Elem r = 0; r < size(); ++r) s.insert(mul(r, a));
  return s;
}

ElementSet FiniteRing::commutant(Elem a) const {
  ElementSet s(size());
  for (Elem x = 0; x < size(); ++x)
    if (commute(a, x)) s.insert(x);
  return s;
}

// ---------------------------------------------------------------------------
// Ideals

Ideal Ideal::from_elements(const FiniteRing& owner, ElementSet elements) {
  const auto n = owner.size();
  if (elements.universe() != n || !elements.contains(0))
    throw Error(ErrorKind::NotAnIdeal, "subset does not contain 0");
  const auto members = elements.elements();
  for (auto x : members) {
    for (auto y : members)
      if (!elements.contains(owner.add(x, y)))
        throw Error(ErrorKind::NotAnIdeal, "not closed under +: " + owner.render(x) + ", " + owner.render(y));
    for (Elem r = 0; r < n; ++r)
      if (!elements.contains(owner.mul(r, x)) || !elements.contains(owner.mul(x, r)))
        throw Error(ErrorKind::NotAnIdeal,
                    "not closed under multiplication: " + owner.render(r) + ", " + owner.render(x));
  }
  return Ideal(owner, std::move(elements));
}

Ideal Ideal::generated_by(const FiniteRing& owner, const std::vector<Elem>& generators) {
  const auto n = owner.size();
  ElementSet products(n);
  for (auto g : generators) {
    for (auto left : owner.left_multiples(g).elements())
      for (Elem s = 0; s < n; ++s) products.insert(owner.mul(left, s));
  }
  const auto steps = products.elements();
  ElementSet closure(n);
  closure.insert(0);
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (auto t : steps) {
      const Elem y = owner.add(x, t);
      if (!closure.contains(y)) {
        closure.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return Ideal(owner, std::move(closure));
}

Ideal Ideal::zero(const FiniteRing& owner) {
  ElementSet s(owner.size());
  s.insert(0);
  return Ideal(owner, std::move(s));
}

std::vector<Elem> Ideal::generators() const {
  std::vector<Elem> gens;
  ElementSet span(owner_.size());
  span.insert(0);
  elements_.for_each([&](Elem x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    span = generated_by(owner_, gens).elements();
  });
  return gens;
}

std::vector<Ideal> all_ideals(const FiniteRing& ring) {
  std::set<std::vector<Elem>> seen;
  std::vector<ElementSet> found;
  auto record = [&](const ElementSet& s) {
    if (seen.insert(s.elements()).second) {
      found.push_back(s);
      return true;
    }
    return false;
  };
  for (Elem a = 0; a < ring.size(); ++a) record(Ideal::generated_by(ring, {a}).elements());
  // Every ideal of a finite ring is a finite sum of principal ideals.
  for (bool grew = true; grew;) {
    grew = false;
    const auto current = found;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].is_subset_of(current[j]) || current[j].is_subset_of(current[i])) continue;
        ElementSet sum(ring.size());
        current[i].for_each([&](Elem x) { current[j].for_each([&](Elem y) { sum.insert(ring.add(x, y)); }); });
        grew = record(sum) || grew;
      }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  std::vector<Ideal> ideals;
  for (auto& s : found) ideals.push_back(Ideal::from_elements(ring, std::move(s)));
  return ideals;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void require_nonzero_ring(const FiniteRing& ring) {
  if (ring.size() == 1)
    throw Error(ErrorKind::MalformedSpec, "zero ring is not allowed in a spec: " + to_string(ring.spec()));
}

std::size_t predicted_size(const RingSpec& spec, const std::vector<FiniteRing>& children, std::size_t cap) {
  switch (spec.kind) {
    case RingSpec::Kind::Zmod: return spec.param;
    case RingSpec::Kind::Matrix:
      return detail::saturating_pow(children[0].size(), std::size_t{spec.param} * spec.param, cap);
    case RingSpec::Kind::Product: {
      std::size_t v = 1;
      for (const auto& c : children) {
        if (v > cap / c.size()) return cap + 1;
        v *= c.size();
      }
      return v;
    }
    case RingSpec::Kind::GroupRing: return detail::saturating_pow(children[0].size(), spec.group.order(), cap);
    case RingSpec::Kind::TruncPoly: return detail::saturating_pow(children[0].size(), spec.param, cap);
    default: return children[0].size();
  }
}

QuotientResult quotient_with_spec(const FiniteRing&, const Ideal&, std::optional<RingSpec>, const RingOptions&);
FiniteRing corner_with_spec(const FiniteRing&, Elem, std::optional<RingSpec>, const RingOptions&);

}  // namespace

FiniteRing build_ring(const RingSpec& spec, const RingOptions& options) {
  using Kind = RingSpec::Kind;
  auto malformed = [&](const std::string& why) { return Error(ErrorKind::MalformedSpec, why); };
  const std::size_t expected_children = spec.kind == Kind::Zmod ? 0 : (spec.kind == Kind::Product ? 2 : 1);
  if (spec.kind == Kind::Product ? spec.children.size() < 2 : spec.children.size() != expected_children)
    throw malformed("wrong number of components in " + to_string(spec));

  std::vector<FiniteRing> children;
  for (const auto& c : spec.children) {
    children.push_back(build_ring(c, options));
    require_nonzero_ring(children.back());
  }

  switch (spec.kind) {
    case Kind::Zmod:
      if (spec.param < 2) throw malformed("Zmod needs n >= 2");
      break;
    case Kind::Matrix:
      if (spec.param < 1) throw malformed("MatrixRing needs k >= 1");
      break;
    case Kind::GroupRing:
      if (spec.group.cyclic_orders.empty()) throw malformed("group needs at least one cyclic factor");
      for (auto k : spec.group.cyclic_orders)
        if (k < 1) throw malformed("cyclic group order must be >= 1");
      break;
    case Kind::TruncPoly:
      if (spec.param < 1) throw malformed("TruncatedPoly needs degree bound >= 1");
      break;
    case Kind::Quotient: {
      std::vector<Elem> gens;
      for (const auto& lit : spec.literals) gens.push_back(children[0].parse_element(lit));
      auto q = quotient_with_spec(children[0], Ideal::generated_by(children[0], gens), spec, options).ring;
      require_nonzero_ring(q);
      return q;
    }
    case Kind::Corner: {
      auto ring = corner_with_spec(children[0], children[0].parse_element(spec.literals.at(0)), spec, options);
      require_nonzero_ring(ring);
      return ring;
    }
    case Kind::Product: break;
  }

  const auto size = predicted_size(spec, children, options.size_cap);
  if (size > options.size_cap)
    throw Error(ErrorKind::SpecTooLarge, to_string(spec) + " exceeds the size cap of " + std::to_string(options.size_cap));

  std::unique_ptr<const detail::Node> node;
  switch (spec.kind) {
    case Kind::Zmod: node = std::make_unique<detail::ZmodNode>(spec.param); break;
    case Kind::Matrix: node = std::make_unique<detail::MatrixNode>(spec.param, children[0]); break;
    case Kind::Product: node = std::make_unique<detail::ProductNode>(children); break;
    case Kind::GroupRing: node = std::make_unique<detail::GroupRingNode>(children[0], spec.group); break;
    case Kind::TruncPoly: node = std::make_unique<detail::TruncPolyNode>(children[0], spec.param); break;
    default: break;
  }
  return detail::finish(spec, std::move(children), std::move(node), options);
}

namespace {

QuotientResult quotient_with_spec(const FiniteRing& ring, const Ideal& ideal, std::optional<RingSpec> spec,
                                  const RingOptions& options) {
  if (!ideal.owner().same_ring(ring)) throw Error(ErrorKind::NotAnIdeal, "ideal belongs to a different ring");
  const auto n = ring.size();
  std::vector<Elem> coset_of(n, detail::kNone);
  std::vector<Elem> reps;
  const auto members = ideal.elements().elements();
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != detail::kNone) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto i : members) coset_of[ring.add(x, i)] = id;
  }
  if (!spec) {
    std::vector<std::string> gens;
    for (auto g : ideal.generators()) gens.push_back(ring.render(g));
    spec = RingSpec::quotient(ring.spec(), std::move(gens));
  }
  auto node = std::make_unique<detail::QuotientNode>(ring, coset_of, std::move(reps));
  return QuotientResult{detail::finish(std::move(*spec), {ring}, std::move(node), options), std::move(coset_of)};
}

FiniteRing corner_with_spec(const FiniteRing& ring, Elem e, std::optional<RingSpec> spec, const RingOptions& options) {
  if (!ring.is_idempotent(e))
    throw Error(ErrorKind::NotIdempotent, ring.render(e) + " is not idempotent");
  ElementSet members(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) members.insert(ring.mul(ring.mul(e, x), e));
  if (!spec) spec = RingSpec::corner(ring.spec(), ring.render(e));
  auto node = std::make_unique<detail::CornerNode>(ring, e, members.elements());
  return detail::finish(std::move(*spec), {ring}, std::move(node), options);
}

}  // namespace

QuotientResult quotient(const FiniteRing& ring, const Ideal& ideal, const RingOptions& options) {
  return quotient_with_spec(ring, ideal, std::nullopt, options);
}

FiniteRing corner(const FiniteRing& ring, Elem e, const RingOptions& options) {
  return corner_with_spec(ring, e, std::nullopt, options);
}

bool is_local(const FiniteRing& ring) {
  const auto& u = ring.units();
  for (Elem a = 0; a < ring.size(); ++a)
    if (!u.contains(a) && !u.contains(ring.sub(ring.one(), a))) return false;
  return true;
}

std::optional<AxiomFailure> check_ring_axioms(const FiniteRing& ring, std::size_t samples) {
  const auto n = static_cast<Elem>(ring.size());
  const Elem one = ring.one();
  for (Elem a = 0; a < n; ++a) {
    if (ring.add(a, 0) != a || ring.add(0, a) != a) return AxiomFailure{"additive identity", {a}};
    if (ring.add(a, ring.neg(a)) != 0) return AxiomFailure{"additive inverse", {a}};
    if (ring.mul(a, one) != a || ring.mul(one, a) != a) return AxiomFailure{"multiplicative identity", {a}};
  }
  auto triple = [&](Elem a, Elem b, Elem c) -> std::optional<AxiomFailure> {
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return AxiomFailure{"additive associativity", {a, b, c}};
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
      return AxiomFailure{"multiplicative associativity", {a, b, c}};
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
      return AxiomFailure{"left distributivity", {a, b, c}};
    if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
      return AxiomFailure{"right distributivity", {a, b, c}};
    return std::nullopt;
  };
  auto pair = [&](Elem a, Elem b) -> std::optional<AxiomFailure> {
    if (ring.add(a, b) != ring.add(b, a)) return AxiomFailure{"additive commutativity", {a, b}};
    return std::nullopt;
  };
  if (n <= 512) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (auto f = pair(a, b)) return f;
        for (Elem c = 0; c < n; ++c)
          if (auto f = triple(a, b, c)) return f;
      }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (auto f = pair(a, b)) return f;
    if (auto f = triple(a, b, c)) return f;
  }
  return std::nullopt;
}

}  // namespace starlab
