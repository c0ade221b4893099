#include "starlab/involution.hpp"

#include <fstream>
#include <sstream>

#include "cursor.hpp"
#include "ring_impl.hpp"
#include "starlab/error.hpp"

namespace starlab {

std::string to_string(const InvolutionSpec& spec) {
  using Kind = InvolutionSpec::Kind;
  auto wrap = [&](const char* name) { return std::string(name) + "(" + to_string(spec.children.at(0)) + ")"; };
  switch (spec.kind) {
    case Kind::Identity: return "id";
    case Kind::Swap: return "swap";
    case Kind::Transpose: return wrap("tr");
    case Kind::GroupRing: return wrap("grp");
    case Kind::Poly: return wrap("poly");
    case Kind::Quotient: return wrap("quot");
    case Kind::Restrict: return wrap("res");
    case Kind::Product: {
      std::string out = "prod(";
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (i != 0) out += ',';
        out += to_string(spec.children[i]);
      }
      return out + ")";
    }
    case Kind::Table: return "table:" + spec.table_file;
  }
  return {};
}

StarRing::StarRing(FiniteRing ring, std::vector<Elem> star, InvolutionSpec spec)
    : ring_(std::move(ring)), star_(std::move(star)), spec_(std::move(spec)) {
  projections_ = ElementSet(ring_.size());
  self_adjoint_ = ElementSet(ring_.size());
  for (Elem a = 0; a < ring_.size(); ++a) {
    if (star_[a] != a) continue;
    self_adjoint_.insert(a);
    if (ring_.is_idempotent(a)) projections_.insert(a);
  }
}

bool StarRing::is_identity_involution() const noexcept { return self_adjoint_.size() == ring_.size(); }

StarRing StarRing::from_map(FiniteRing ring, std::vector<Elem> star, InvolutionSpec spec) {
  const auto n = static_cast<Elem>(ring.size());
  auto violation = [&](const std::string& axiom, std::initializer_list<Elem> witness) {
    std::string w;
    for (auto x : witness) w += " " + ring.render(x);
    return Error(ErrorKind::AxiomViolation, "involution '" + to_string(spec) + "' violates " + axiom + " at" + w);
  };
  if (star.size() != n) throw Error(ErrorKind::ValidationError, "star table has the wrong number of entries");
  for (Elem x = 0; x < n; ++x)
    if (star[x] >= n) throw Error(ErrorKind::ValidationError, "star table entry out of range");
  for (Elem x = 0; x < n; ++x)
    if (star[star[x]] != x) throw violation("(x*)* = x", {x});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (star[ring.add(x, y)] != ring.add(star[x], star[y])) throw violation("(x+y)* = x*+y*", {x, y});
      if (star[ring.mul(x, y)] != ring.mul(star[y], star[x])) throw violation("(xy)* = y*x*", {x, y});
    }
  return StarRing(std::move(ring), std::move(star), std::move(spec));
}

namespace {

using Kind = InvolutionSpec::Kind;

[[noreturn]] void shape_error(const FiniteRing& ring, const InvolutionSpec& spec, const char* expected) {
  throw Error(ErrorKind::ValidationError,
              "involution '" + to_string(spec) + "' needs " + expected + ", got " + to_string(ring.spec()));
}

/// Star map without axiom checks; callers validate the final map once.
std::vector<Elem> star_map(const FiniteRing& ring, const InvolutionSpec& spec) {
  const auto n = static_cast<Elem>(ring.size());
  std::vector<Elem> star(n);
  const auto kind = ring.kind();
  auto need_children = [&](std::size_t k) {
    if (spec.children.size() != k) throw Error(ErrorKind::ValidationError, "malformed involution spec");
  };

  switch (spec.kind) {
    case Kind::Identity: {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
          if (!ring.commute(a, b))
            throw Error(ErrorKind::IdentityOnNoncommutative,
                        "identity involution on noncommutative ring: " + ring.render(a) + " and " + ring.render(b) +
                            " do not commute");
      for (Elem a = 0; a < n; ++a) star[a] = a;
      return star;
    }
    case Kind::Swap: {
      if (kind != RingSpec::Kind::Product || ring.children().size() != 2 ||
          !(ring.children()[0].spec() == ring.children()[1].spec()))
        throw Error(ErrorKind::SwapShapeMismatch, "swap needs a ring of the form SxS, got " + to_string(ring.spec()));
      for (Elem a = 0; a < n; ++a) {
        auto d = ring.decompose(a);
        std::swap(d[0], d[1]);
        star[a] = ring.compose(d);
      }
      return star;
    }
    case Kind::Transpose: {
      need_children(1);
      if (kind != RingSpec::Kind::Matrix) shape_error(ring, spec, "a matrix ring");
      const auto base = star_map(ring.children()[0], spec.children[0]);
      const unsigned k = ring.spec().param;
      for (Elem a = 0; a < n; ++a) {
        const auto d = ring.decompose(a);
        std::vector<Elem> t(d.size());
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; j < k; ++j) t[i * k + j] = base[d[j * k + i]];
        star[a] = ring.compose(t);
      }
      return star;
    }
    case Kind::GroupRing: {
      need_children(1);
      if (kind != RingSpec::Kind::GroupRing) shape_error(ring, spec, "a group ring");
      const auto base = star_map(ring.children()[0], spec.children[0]);
      const auto& orders = ring.spec().group.cyclic_orders;
      const std::size_t g = ring.spec().group.order();
      std::vector<std::size_t> inverse(g);
      for (std::size_t x = 0; x < g; ++x) {
        std::size_t rest = x, inv = 0, weight = 1;
        for (std::size_t i = orders.size(); i-- > 0;) {
          const std::size_t digit = rest % orders[i];
          rest /= orders[i];
          inv += weight * ((orders[i] - digit) % orders[i]);
          weight *= orders[i];
        }
        inverse[x] = inv;
      }
      for (Elem a = 0; a < n; ++a) {
        const auto d = ring.decompose(a);
        std::vector<Elem> t(g);
        for (std::size_t x = 0; x < g; ++x) t[inverse[x]] = base[d[x]];
        star[a] = ring.compose(t);
      }
      return star;
    }
    case Kind::Product: {
      if (kind != RingSpec::Kind::Product) shape_error(ring, spec, "a product ring");
      if (spec.children.size() != ring.children().size())
        throw Error(ErrorKind::ValidationError, "prod(...) needs one involution per factor of " + to_string(ring.spec()));
      std::vector<std::vector<Elem>> parts;
      for (std::size_t i = 0; i < spec.children.size(); ++i) parts.push_back(star_map(ring.children()[i], spec.children[i]));
      for (Elem a = 0; a < n; ++a) {
        auto d = ring.decompose(a);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = parts[i][d[i]];
        star[a] = ring.compose(d);
      }
      return star;
    }
    case Kind::Poly: {
      need_children(1);
      if (kind != RingSpec::Kind::TruncPoly) shape_error(ring, spec, "a truncated polynomial ring");
      const auto base = star_map(ring.children()[0], spec.children[0]);
      for (Elem a = 0; a < n; ++a) {
        auto d = ring.decompose(a);
        for (auto& c : d) c = base[c];
        star[a] = ring.compose(d);
      }
      return star;
    }
    case Kind::Quotient: {
      need_children(1);
      if (kind != RingSpec::Kind::Quotient) shape_error(ring, spec, "a quotient ring");
      const auto& parent = ring.children()[0];
      const auto up = star_map(parent, spec.children[0]);
      for (Elem x = 0; x < parent.size(); ++x)
        if (*ring.project(x) == 0 && *ring.project(up[x]) != 0)
          throw Error(ErrorKind::NotStarInvariant,
                      "ideal is not *-invariant: " + parent.render(x) + " lies in it but its image " +
                          parent.render(up[x]) + " does not");
      for (Elem a = 0; a < n; ++a) star[a] = *ring.project(up[ring.lift(a)]);
      return star;
    }
    case Kind::Restrict: {
      need_children(1);
      if (kind != RingSpec::Kind::Corner) shape_error(ring, spec, "a corner ring");
      const auto& parent = ring.children()[0];
      const auto up = star_map(parent, spec.children[0]);
      const Elem e = ring.lift(ring.one());
      if (up[e] != e)
        throw Error(ErrorKind::NotAProjection,
                    "corner idempotent " + parent.render(e) + " is not a projection, so * does not restrict");
      for (Elem a = 0; a < n; ++a) star[a] = *ring.project(up[ring.lift(a)]);
      return star;
    }
    case Kind::Table: {
      if (!spec.table.empty()) return spec.table;
      return read_star_table(ring, spec.table_file);
    }
  }
  return star;
}

}  // namespace

StarRing build_involution(const FiniteRing& ring, const InvolutionSpec& spec) {
  auto star = star_map(ring, spec);
  return StarRing::from_map(ring, std::move(star), spec);
}

std::vector<Elem> read_star_table(const FiniteRing& ring, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open star table " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    text += line + '\n';
  }
  detail::Cursor cursor(text);
  std::vector<Elem> star;
  while (!cursor.at_end()) star.push_back(detail::parse_element_at(ring, cursor));
  if (star.size() != ring.size())
    throw Error(ErrorKind::ValidationError, "star table " + path + " has " + std::to_string(star.size()) +
                                                " entries, ring has " + std::to_string(ring.size()));
  return star;
}

InducedQuotient induce_quotient_involution(const StarRing& s, const Ideal& ideal, const RingOptions& options) {
  const auto& r = s.ring();
  ideal.elements().for_each([&](Elem x) {
    if (!ideal.contains(s.star(x)))
      throw Error(ErrorKind::NotStarInvariant, "ideal is not *-invariant: " + r.render(x) + " lies in it but " +
                                                   r.render(s.star(x)) + " does not");
  });
  auto q = quotient(r, ideal, options);
  std::vector<Elem> star(q.ring.size());
  for (Elem c = 0; c < q.ring.size(); ++c) star[c] = q.surjection[s.star(q.ring.lift(c))];
  InvolutionSpec spec{Kind::Quotient, {s.spec()}, {}, {}};
  return {StarRing::from_map(q.ring, std::move(star), std::move(spec)), std::move(q.surjection)};
}

StarRing restrict_to_corner(const StarRing& s, Elem p, const RingOptions& options) {
  if (!s.ring().is_idempotent(p))
    throw Error(ErrorKind::NotIdempotent, s.ring().render(p) + " is not idempotent");
  if (!s.is_projection(p))
    throw Error(ErrorKind::NotAProjection, s.ring().render(p) + " is not a projection, so * does not restrict");
  auto c = corner(s.ring(), p, options);
  std::vector<Elem> star(c.size());
  for (Elem a = 0; a < c.size(); ++a) star[a] = *c.project(s.star(c.lift(a)));
  InvolutionSpec spec{Kind::Restrict, {s.spec()}, {}, {}};
  return StarRing::from_map(std::move(c), std::move(star), std::move(spec));
}

std::optional<Elem> improper_witness(const StarRing& s) {
  const auto& r = s.ring();
  for (Elem x = 1; x < r.size(); ++x)
    if (r.mul(s.star(x), x) == 0) return x;
  return std::nullopt;
}

std::optional<NonCentralProjection> star_abelian_counterexample(const StarRing& s) {
  const auto& r = s.ring();
  std::optional<NonCentralProjection> out;
  s.projections().find_first([&](Elem p) {
    for (Elem x = 0; x < r.size(); ++x)
      if (!r.commute(p, x)) {
        out = NonCentralProjection{p, x};
        return true;
      }
    return false;
  });
  return out;
}

}  // namespace starlab
