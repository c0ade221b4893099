#include "starlab/parse.hpp"

#include "cursor.hpp"
#include "starlab/error.hpp"

namespace starlab {
namespace {

using detail::Cursor;

RingSpec parse_ring(Cursor& c);

GroupSpec parse_group(Cursor& c) {
  GroupSpec g;
  do {
    c.expect('C');
    g.cyclic_orders.push_back(c.positive("cyclic group order"));
  } while (c.accept('*'));
  return g;
}

RingSpec parse_factor(Cursor& c) {
  if (c.accept("corner(")) {
    auto parent = parse_ring(c);
    c.expect(',');
    auto literal = c.balanced_until(")");
    if (literal.empty()) c.fail("expected element literal");
    c.expect(')');
    return RingSpec::corner(std::move(parent), std::move(literal));
  }
  if (c.accept("GR(")) {
    auto base = parse_ring(c);
    c.expect(',');
    auto group = parse_group(c);
    c.expect(')');
    return RingSpec::group_ring(std::move(base), std::move(group));
  }
  if (c.accept("TP(")) {
    auto base = parse_ring(c);
    c.expect(',');
    const auto k = c.positive("degree bound");
    c.expect(')');
    return RingSpec::trunc_poly(std::move(base), k);
  }
  if (c.accept("Q(")) {
    auto parent = parse_ring(c);
    c.expect(',');
    c.expect('[');
    std::vector<std::string> gens;
    if (!c.accept(']')) {
      do {
        auto literal = c.balanced_until(",]");
        if (literal.empty()) c.fail("expected element literal");
        gens.push_back(std::move(literal));
      } while (c.accept(','));
      c.expect(']');
    }
    c.expect(')');
    return RingSpec::quotient(std::move(parent), std::move(gens));
  }
  if (c.accept('Z')) return RingSpec::zmod(c.positive("modulus"));
  if (c.accept('M')) {
    const auto k = c.positive("matrix dimension");
    c.expect('(');
    auto base = parse_ring(c);
    c.expect(')');
    return RingSpec::matrix(k, std::move(base));
  }
  c.fail("expected ring (Z, M, GR, TP, Q or corner)");
}

RingSpec parse_ring(Cursor& c) {
  std::vector<RingSpec> factors;
  factors.push_back(parse_factor(c));
  while (c.accept('x')) factors.push_back(parse_factor(c));
  if (factors.size() == 1) return std::move(factors.front());
  return RingSpec::product(std::move(factors));
}

InvolutionSpec parse_involution(Cursor& c) {
  using Kind = InvolutionSpec::Kind;
  auto wrapped = [&](Kind kind) {
    InvolutionSpec s{kind, {parse_involution(c)}, {}, {}};
    c.expect(')');
    return s;
  };
  if (c.accept("table:")) {
    auto name = c.balanced_until(",)");
    if (name.empty()) c.fail("expected table file name");
    return InvolutionSpec{Kind::Table, {}, std::move(name), {}};
  }
  if (c.accept("tr(")) return wrapped(Kind::Transpose);
  if (c.accept("grp(")) return wrapped(Kind::GroupRing);
  if (c.accept("poly(")) return wrapped(Kind::Poly);
  if (c.accept("quot(")) return wrapped(Kind::Quotient);
  if (c.accept("res(")) return wrapped(Kind::Restrict);
  if (c.accept("prod(")) {
    InvolutionSpec s{Kind::Product, {}, {}, {}};
    do {
      s.children.push_back(parse_involution(c));
    } while (c.accept(','));
    if (s.children.size() < 2) c.fail("prod(...) needs at least two involutions");
    c.expect(')');
    return s;
  }
  if (c.accept("swap")) return InvolutionSpec{Kind::Swap, {}, {}, {}};
  if (c.accept("id")) return InvolutionSpec{Kind::Identity, {}, {}, {}};
  c.fail("expected involution (id, swap, tr, grp, prod, poly, quot, res or table:)");
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  Cursor c(text);
  auto spec = parse_ring(c);
  if (!c.at_end()) c.fail("trailing characters after ring spec");
  return spec;
}

InvolutionSpec parse_involution_spec(std::string_view text) {
  Cursor c(text);
  auto spec = parse_involution(c);
  if (!c.at_end()) c.fail("trailing characters after involution spec");
  return spec;
}

}  // namespace starlab
