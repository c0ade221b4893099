#include "starlab/ring_props.hpp"

#include <algorithm>
#include <chrono>

#include "starlab/element_classify.hpp"
#include "starlab/error.hpp"

namespace starlab {
namespace {

struct PropertyName {
  Property property;
  std::string_view name;
};

constexpr PropertyName kNames[] = {
    {Property::Clean, "clean"},
    {Property::StronglyClean, "strongly-clean"},
    {Property::StarClean, "star-clean"},
    {Property::StronglyStarClean, "strongly-star-clean"},
    {Property::Exchange, "exchange"},
    {Property::PiRegular, "pi-regular"},
    {Property::StronglyPiRegular, "strongly-pi-regular"},
    {Property::StronglyPiStarRegular, "strongly-pi-star-regular"},
    {Property::Regular, "regular"},
    {Property::StronglyRegular, "strongly-regular"},
    {Property::UnitRegular, "unit-regular"},
    {Property::StarRegular, "star-regular"},
    {Property::StronglyStarRegular, "strongly-star-regular"},
    {Property::Boolean, "boolean"},
    {Property::Abelian, "abelian"},
    {Property::StarAbelian, "star-abelian"},
    {Property::Local, "local"},
    {Property::IdempotentsAreProjections, "idempotents-are-projections"},
    {Property::JacobsonNil, "J-nil"},
    {Property::DirectlyFinite, "directly-finite"},
    {Property::StableRangeOne, "sr1"},
    {Property::IdempotentStableRangeOne, "isr1"},
    {Property::ProjectionStableRangeOne, "psr1"},
};

Verdict holds() { return {}; }
Verdict fails(std::vector<Elem> witness) { return {false, std::move(witness)}; }

/// First a in canonical order violating `pred`.
template <class Pred>
Verdict for_all_elements(const FiniteRing& r, Pred&& pred) {
  for (Elem a = 0; a < r.size(); ++a)
    if (!pred(a)) return fails({a});
  return holds();
}

bool exchange_at(const FiniteRing& r, Elem a) {
  const auto aR = r.right_multiples(a);
  const auto oneMinusAR = r.right_multiples(r.sub(r.one(), a));
  return r.idempotents().any_of([&](Elem e) { return aR.contains(e) && oneMinusAR.contains(r.sub(r.one(), e)); });
}

bool pi_regular_at(const FiniteRing& r, Elem a) {
  for (const Elem an : r.powers(a).powers)
    for (Elem b = 0; b < r.size(); ++b)
      if (r.mul(r.mul(an, b), an) == an) return true;
  return false;
}

template <class Pred>
Verdict for_all_pairs_in(const FiniteRing& r, const ElementSet& firsts, Pred&& pred) {
  Verdict v;
  firsts.find_first([&](Elem e) {
    for (Elem x = 0; x < r.size(); ++x)
      if (!pred(e, x)) {
        v = fails({e, x});
        return true;
      }
    return false;
  });
  return v;
}

// Definition-level helpers used to re-check witnesses without any cached subset.
bool raw_unit(const FiniteRing& r, Elem u) {
  for (Elem w = 0; w < r.size(); ++w)
    if (r.mul(u, w) == r.one() && r.mul(w, u) == r.one()) return true;
  return false;
}
bool raw_nilpotent(const FiniteRing& r, Elem x) { return r.pow(x, r.size()) == 0; }
bool raw_projection(const StarRing& s, Elem p) { return s.ring().mul(p, p) == p && s.star(p) == p; }
bool raw_in_right_ideal(const FiniteRing& r, Elem a, Elem x) {
  for (Elem t = 0; t < r.size(); ++t)
    if (r.mul(a, t) == x) return true;
  return false;
}

}  // namespace

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> v;
    for (const auto& n : kNames) v.push_back(n.property);
    return v;
  }();
  return props;
}

std::string_view name(Property p) noexcept {
  for (const auto& n : kNames)
    if (n.property == p) return n.name;
  return "?";
}

Property property_from_name(std::string_view text) {
  for (const auto& n : kNames)
    if (n.name == text) return n.property;
  throw Error(ErrorKind::UnknownProperty, std::string(text));
}

Comaximality::Comaximality(const FiniteRing& r) : ring_(r) {
  right_.reserve(r.size());
  for (Elem a = 0; a < r.size(); ++a) right_.push_back(r.right_multiples(a));
}

bool Comaximality::operator()(Elem a, Elem b) const {
  const Elem one = ring_.one();
  const auto& bR = right_[b];
  return right_[a].any_of([&](Elem x) { return bR.contains(ring_.sub(one, x)); });
}

namespace {

/// First comaximal pair (a, b) for which a + b y is never in `target` for y in `choices`.
Verdict stable_range(const StarRing& s, const Comaximality& comax, const ElementSet& choices, const ElementSet& target) {
  const auto& r = s.ring();
  const auto ys = choices.elements();
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      bool found = false;
      for (auto y : ys)
        if (target.contains(r.add(a, r.mul(b, y)))) {
          found = true;
          break;
        }
      if (!found && comax(a, b)) return fails({a, b});
    }
  return holds();
}

ElementSet everything(const FiniteRing& r) {
  ElementSet all(r.size());
  for (Elem a = 0; a < r.size(); ++a) all.insert(a);
  return all;
}

}  // namespace

StableRangeReport stable_range_checks(const StarRing& s) {
  const auto& r = s.ring();
  const Comaximality comax(r);
  return {stable_range(s, comax, everything(r), r.units()), stable_range(s, comax, r.idempotents(), r.units()),
          stable_range(s, comax, s.projections(), r.units())};
}

Verdict psr_variant(const StarRing& s, Invertibility mode) {
  const auto& r = s.ring();
  ElementSet target(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    bool ok = false;
    for (Elem w = 0; w < r.size() && !ok; ++w) {
      switch (mode) {
        case Invertibility::TwoSided: ok = r.mul(x, w) == r.one() && r.mul(w, x) == r.one(); break;
        case Invertibility::Right: ok = r.mul(x, w) == r.one(); break;
        case Invertibility::Left: ok = r.mul(w, x) == r.one(); break;
      }
    }
    if (ok) target.insert(x);
  }
  return stable_range(s, Comaximality(r), s.projections(), target);
}

Verdict ring_property(const StarRing& s, Property p) {
  const auto& r = s.ring();
  auto clean_in = [&](CleanMode mode) {
    return for_all_elements(r, [&](Elem a) { return first_clean_certificate(s, a, mode).has_value(); });
  };
  switch (p) {
    case Property::Clean: return clean_in(CleanMode::Clean);
    case Property::StronglyClean: return clean_in(CleanMode::StronglyClean);
    case Property::StarClean: return clean_in(CleanMode::StarClean);
    case Property::StronglyStarClean: return clean_in(CleanMode::StronglyStarClean);
    case Property::Exchange: return for_all_elements(r, [&](Elem a) { return exchange_at(r, a); });
    case Property::PiRegular: return for_all_elements(r, [&](Elem a) { return pi_regular_at(r, a); });
    case Property::StronglyPiRegular:
      return for_all_elements(r, [&](Elem a) { return strongly_pi_regular_witness(r, a).has_value(); });
    case Property::StronglyPiStarRegular:
      return for_all_elements(r, [&](Elem a) { return spsr_condition1(s, a).has_value(); });
    case Property::Regular:
      return for_all_elements(r, [&](Elem a) {
        for (Elem b = 0; b < r.size(); ++b)
          if (r.mul(r.mul(a, b), a) == a) return true;
        return false;
      });
    case Property::StronglyRegular:
      return for_all_elements(r, [&](Elem a) {
        const Elem a2 = r.mul(a, a);
        for (Elem b = 0; b < r.size(); ++b)
          if (r.mul(a2, b) == a) return true;
        return false;
      });
    case Property::UnitRegular:
      return for_all_elements(r, [&](Elem a) { return r.units().any_of([&](Elem u) { return r.mul(r.mul(a, u), a) == a; }); });
    case Property::StarRegular: {
      std::vector<ElementSet> projection_ideals;
      s.projections().for_each([&](Elem q) { projection_ideals.push_back(r.right_multiples(q)); });
      return for_all_elements(r, [&](Elem a) {
        const auto aR = r.right_multiples(a);
        return std::any_of(projection_ideals.begin(), projection_ideals.end(), [&](const ElementSet& qR) { return qR == aR; });
      });
    }
    case Property::StronglyStarRegular:
      return for_all_elements(r, [&](Elem a) { return strongly_star_regular_witness(s, a).has_value(); });
    case Property::Boolean: return for_all_elements(r, [&](Elem a) { return r.is_idempotent(a); });
    case Property::Abelian:
      return for_all_pairs_in(r, r.idempotents(), [&](Elem e, Elem x) { return r.commute(e, x); });
    case Property::StarAbelian:
      return for_all_pairs_in(r, s.projections(), [&](Elem q, Elem x) { return r.commute(q, x); });
    case Property::Local:
      return for_all_elements(r, [&](Elem a) { return r.is_unit(a) || r.is_unit(r.sub(r.one(), a)); });
    case Property::IdempotentsAreProjections:
      return for_all_elements(r, [&](Elem a) { return !r.is_idempotent(a) || s.star(a) == a; });
    case Property::JacobsonNil: {
      const auto j = r.jacobson_radical();
      return for_all_elements(r, [&](Elem a) { return !j.contains(a) || r.is_nilpotent(a); });
    }
    case Property::DirectlyFinite:
      for (Elem a = 0; a < r.size(); ++a)
        for (Elem b = 0; b < r.size(); ++b)
          if (r.mul(a, b) == r.one() && r.mul(b, a) != r.one()) return fails({a, b});
      return holds();
    case Property::StableRangeOne: {
      return stable_range(s, Comaximality(r), everything(r), r.units());
    }
    case Property::IdempotentStableRangeOne: return stable_range(s, Comaximality(r), r.idempotents(), r.units());
    case Property::ProjectionStableRangeOne: return stable_range(s, Comaximality(r), s.projections(), r.units());
  }
  throw Error(ErrorKind::UnknownProperty, "unhandled property");
}

bool counterexample_valid(const StarRing& s, Property p, const std::vector<Elem>& w) {
  const auto& r = s.ring();
  const auto n = static_cast<Elem>(r.size());
  const Elem one = r.one();
  auto need = [&](std::size_t k) { return w.size() == k && std::all_of(w.begin(), w.end(), [&](Elem x) { return x < n; }); };
  auto no_part = [&](Elem a, bool projection, bool commuting) {
    for (Elem e = 0; e < n; ++e) {
      if (r.mul(e, e) != e || (projection && s.star(e) != e)) continue;
      const Elem u = r.sub(a, e);
      if (raw_unit(r, u) && (!commuting || r.commute(e, u))) return false;
    }
    return true;
  };
  auto comaximal = [&](Elem a, Elem b) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (r.add(r.mul(a, x), r.mul(b, y)) == one) return true;
    return false;
  };
  auto no_stable_choice = [&](Elem a, Elem b, auto admissible) {
    if (!comaximal(a, b)) return false;
    for (Elem y = 0; y < n; ++y)
      if (admissible(y) && raw_unit(r, r.add(a, r.mul(b, y)))) return false;
    return true;
  };

  switch (p) {
    case Property::Abelian:
      return need(2) && r.mul(w[0], w[0]) == w[0] && !r.commute(w[0], w[1]);
    case Property::StarAbelian:
      return need(2) && raw_projection(s, w[0]) && !r.commute(w[0], w[1]);
    case Property::DirectlyFinite:
      return need(2) && r.mul(w[0], w[1]) == one && r.mul(w[1], w[0]) != one;
    case Property::StableRangeOne:
      return need(2) && no_stable_choice(w[0], w[1], [](Elem) { return true; });
    case Property::IdempotentStableRangeOne:
      return need(2) && no_stable_choice(w[0], w[1], [&](Elem y) { return r.mul(y, y) == y; });
    case Property::ProjectionStableRangeOne:
      return need(2) && no_stable_choice(w[0], w[1], [&](Elem y) { return raw_projection(s, y); });
    default: break;
  }
  if (!need(1)) return false;
  const Elem a = w[0];
  switch (p) {
    case Property::Clean: return no_part(a, false, false);
    case Property::StronglyClean: return no_part(a, false, true);
    case Property::StarClean: return no_part(a, true, false);
    case Property::StronglyStarClean: return no_part(a, true, true);
    case Property::Exchange:
      for (Elem e = 0; e < n; ++e)
        if (r.mul(e, e) == e && raw_in_right_ideal(r, a, e) && raw_in_right_ideal(r, r.sub(one, a), r.sub(one, e)))
          return false;
      return true;
    case Property::PiRegular:
      for (std::size_t k = 1; k <= n; ++k) {
        const Elem ak = r.pow(a, k);
        for (Elem b = 0; b < n; ++b)
          if (r.mul(r.mul(ak, b), ak) == ak) return false;
      }
      return true;
    case Property::StronglyPiRegular:
      for (std::size_t k = 1; k <= n; ++k) {
        const Elem ak = r.pow(a, k), ak1 = r.pow(a, k + 1);
        bool right = false, left = false;
        for (Elem t = 0; t < n; ++t) {
          right = right || r.mul(ak1, t) == ak;
          left = left || r.mul(t, ak1) == ak;
        }
        if (right && left) return false;
      }
      return true;
    case Property::StronglyPiStarRegular: {
      std::vector<Elem> projections, units;
      for (Elem x = 0; x < n; ++x) {
        if (raw_projection(s, x) && r.commute(a, x)) projections.push_back(x);
        if (r.commute(a, x) && raw_unit(r, x)) units.push_back(x);
      }
      for (std::size_t m = 1; m <= n; ++m) {
        const Elem am = r.pow(a, m);
        for (auto e : projections)
          for (auto u : units)
            if (r.commute(e, u) && r.mul(e, u) == am) return false;
      }
      return true;
    }
    case Property::Regular:
      for (Elem b = 0; b < n; ++b)
        if (r.mul(r.mul(a, b), a) == a) return false;
      return true;
    case Property::StronglyRegular:
      for (Elem b = 0; b < n; ++b)
        if (r.mul(r.mul(a, a), b) == a) return false;
      return true;
    case Property::UnitRegular:
      for (Elem u = 0; u < n; ++u)
        if (r.mul(r.mul(a, u), a) == a && raw_unit(r, u)) return false;
      return true;
    case Property::StarRegular:
      for (Elem q = 0; q < n; ++q) {
        if (!raw_projection(s, q)) continue;
        bool equal = true;
        for (Elem t = 0; t < n && equal; ++t)
          equal = raw_in_right_ideal(r, q, r.mul(a, t)) && raw_in_right_ideal(r, a, r.mul(q, t));
        if (equal) return false;
      }
      return true;
    case Property::StronglyStarRegular:
      for (Elem q = 0; q < n; ++q) {
        if (!raw_projection(s, q)) continue;
        for (Elem u = 0; u < n; ++u)
          if (r.mul(q, u) == a && r.mul(u, q) == a && raw_unit(r, u)) return false;
      }
      return true;
    case Property::Boolean: return r.mul(a, a) != a;
    case Property::Local: return !raw_unit(r, a) && !raw_unit(r, r.sub(one, a));
    case Property::IdempotentsAreProjections: return r.mul(a, a) == a && s.star(a) != a;
    case Property::JacobsonNil: {
      for (Elem t = 0; t < n; ++t)
        if (!raw_unit(r, r.sub(one, r.mul(t, a)))) return false;
      return !raw_nilpotent(r, a);
    }
    default: return false;
  }
}

LiftingReport lifting_checks(const StarRing& s) {
  const auto& r = s.ring();
  const auto induced = induce_quotient_involution(s, r.jacobson_radical());
  const auto& q = induced.star_ring;
  const auto& to_coset = induced.surjection;
  const auto& center = r.center();

  auto lift_each = [&](const ElementSet& cosets, bool central) {
    Verdict v;
    cosets.find_first([&](Elem c) {
      for (Elem x = 0; x < r.size(); ++x)
        if (to_coset[x] == c && s.is_projection(x) && (!central || center.contains(x))) return false;
      v = fails({q.ring().lift(c)});
      return true;
    });
    return v;
  };

  LiftingReport out;
  out.idempotents_lift_to_central_projections = lift_each(q.ring().idempotents(), true);
  out.projections_lift = lift_each(q.projections(), false);
  if (auto bad = star_abelian_counterexample(s)) out.projections_central = fails({bad->projection, bad->other});
  return out;
}

PropertyReport property_report(const StarRing& s, const std::vector<Property>& props) {
  PropertyReport report{to_string(s.ring().spec()), to_string(s.spec()), {}, {}};
  for (auto p : props) {
    const auto start = std::chrono::steady_clock::now();
    auto verdict = ring_property(s, p);
    const auto stop = std::chrono::steady_clock::now();
    report.verdicts.emplace_back(p, std::move(verdict));
    report.elapsed_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return report;
}

}  // namespace starlab
