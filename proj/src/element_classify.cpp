#include "starlab/element_classify.hpp"

namespace starlab {

const char* to_string(CleanMode mode) noexcept {
  switch (mode) {
    case CleanMode::Clean: return "clean";
    case CleanMode::StronglyClean: return "strongly-clean";
    case CleanMode::StarClean: return "star-clean";
    case CleanMode::StronglyStarClean: return "strongly-star-clean";
  }
  return "?";
}

namespace {

bool needs_projection(CleanMode m) { return m == CleanMode::StarClean || m == CleanMode::StronglyStarClean; }
bool needs_commuting(CleanMode m) { return m == CleanMode::StronglyClean || m == CleanMode::StronglyStarClean; }

/// Nilpotency straight from the definition: the index never exceeds |R|.
bool nilpotent_by_power(const FiniteRing& r, Elem x) { return r.pow(x, r.size()) == 0; }

}  // namespace

std::vector<CleanCertificate> clean_certificates(const StarRing& s, Elem a, CleanMode mode, std::size_t limit) {
  const auto& r = s.ring();
  const auto& parts = needs_projection(mode) ? s.projections() : r.idempotents();
  std::vector<CleanCertificate> out;
  parts.find_first([&](Elem e) {
    const Elem u = r.sub(a, e);
    if (!r.is_unit(u)) return false;
    const bool commuting = r.commute(e, u);
    if (needs_commuting(mode) && !commuting) return false;
    out.push_back({a, e, u, s.is_projection(e), commuting});
    return limit != 0 && out.size() >= limit;
  });
  return out;
}

std::optional<CleanCertificate> first_clean_certificate(const StarRing& s, Elem a, CleanMode mode) {
  auto certs = clean_certificates(s, a, mode, 1);
  if (certs.empty()) return std::nullopt;
  return certs.front();
}

bool certificate_valid(const StarRing& s, const CleanCertificate& c) {
  const auto& r = s.ring();
  if (r.add(c.part, c.unit) != c.subject || !r.is_idempotent(c.part)) return false;
  bool invertible = false;
  for (Elem w = 0; w < r.size() && !invertible; ++w)
    invertible = r.mul(c.unit, w) == r.one() && r.mul(w, c.unit) == r.one();
  if (!invertible) return false;
  if (c.projection != (s.star(c.part) == c.part)) return false;
  return c.commuting == r.commute(c.part, c.unit);
}

std::optional<StronglyPiRegularWitness> strongly_pi_regular_witness(const FiniteRing& r, Elem a) {
  const auto seq = r.powers(a);
  const auto n_elems = static_cast<Elem>(r.size());
  for (std::size_t n = 1; n <= seq.powers.size(); ++n) {
    const Elem an = r.pow(a, n);
    const Elem an1 = r.mul(an, a);
    std::optional<Elem> x, y;
    for (Elem t = 0; t < n_elems && !(x && y); ++t) {
      if (!x && r.mul(an1, t) == an) x = t;
      if (!y && r.mul(t, an1) == an) y = t;
    }
    if (x && y) return StronglyPiRegularWitness{n, *x, *y};
  }
  return std::nullopt;
}

std::optional<StarRegularWitness> strongly_star_regular_witness(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  std::optional<StarRegularWitness> out;
  s.projections().find_first([&](Elem p) {
    const Elem u = r.units().find_first([&](Elem u) { return r.mul(p, u) == a && r.mul(u, p) == a; });
    if (u == r.size()) return false;
    out = StarRegularWitness{p, u};
    return true;
  });
  return out;
}

std::optional<PiStarCertificate> spsr_condition1(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  const auto seq = r.powers(a);
  // Past the cycle the pairs (a^m, comm data) repeat, so the pre-cycle range is exhaustive.
  for (std::size_t m = 1; m <= seq.powers.size(); ++m) {
    const Elem target = seq.powers[m - 1];
    std::optional<PiStarCertificate> out;
    s.projections().find_first([&](Elem e) {
      if (!r.commute(a, e)) return false;
      const Elem u = r.units().find_first(
          [&](Elem u) { return r.commute(a, u) && r.commute(e, u) && r.mul(e, u) == target; });
      if (u == r.size()) return false;
      out = PiStarCertificate{1, a, m, e, u, 0};
      return true;
    });
    if (out) return out;
  }
  return std::nullopt;
}

std::optional<PiStarCertificate> spsr_condition2(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  std::optional<PiStarCertificate> out;
  s.projections().find_first([&](Elem f) {
    const Elem v = r.sub(a, f);
    if (!r.is_unit(v) || !r.commute(f, v) || !r.is_nilpotent(r.mul(a, f))) return false;
    out = PiStarCertificate{2, a, 0, f, v, 0};
    return true;
  });
  return out;
}

std::optional<PiStarCertificate> spsr_condition3(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  std::optional<PiStarCertificate> out;
  s.projections().find_first([&](Elem p) {
    if (!r.commute(a, p)) return false;
    if (!r.is_nilpotent(r.mul(a, r.sub(r.one(), p)))) return false;
    // Invertibility inside the corner pRp, whose unity is p.
    ElementSet corner(r.size());
    for (Elem x = 0; x < r.size(); ++x) corner.insert(r.mul(r.mul(p, x), p));
    const Elem ap = r.mul(a, p);
    const Elem w = corner.find_first([&](Elem w) { return r.mul(ap, w) == p && r.mul(w, ap) == p; });
    if (w == r.size()) return false;
    out = PiStarCertificate{3, a, 0, p, w, 0};
    return true;
  });
  return out;
}

std::optional<PiStarCertificate> spsr_condition4(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  const auto comm = r.commutant(a);
  const Elem a2 = r.mul(a, a);
  const Elem b = comm.find_first([&](Elem b) {
    const Elem ab = r.mul(a, b);
    return s.star(ab) == ab && r.mul(b, ab) == b && r.is_nilpotent(r.sub(a, r.mul(a2, b)));
  });
  if (b == r.size()) return std::nullopt;
  return PiStarCertificate{4, a, 0, 0, 0, b};
}

SpsrConditions spsr_conditions(const StarRing& s, Elem a) {
  return SpsrConditions{{spsr_condition1(s, a), spsr_condition2(s, a), spsr_condition3(s, a), spsr_condition4(s, a)}};
}

bool certificate_valid(const StarRing& s, const PiStarCertificate& c) {
  const auto& r = s.ring();
  const Elem a = c.subject;
  auto is_projection = [&](Elem p) { return r.mul(p, p) == p && s.star(p) == p; };
  auto is_unit = [&](Elem u) {
    for (Elem w = 0; w < r.size(); ++w)
      if (r.mul(u, w) == r.one() && r.mul(w, u) == r.one()) return true;
    return false;
  };
  switch (c.condition) {
    case 1:
      return c.exponent >= 1 && is_projection(c.projection) && is_unit(c.unit) &&
             r.pow(a, c.exponent) == r.mul(c.projection, c.unit) && r.commute(a, c.projection) &&
             r.commute(a, c.unit) && r.commute(c.projection, c.unit);
    case 2:
      return is_projection(c.projection) && is_unit(c.unit) && r.add(c.projection, c.unit) == a &&
             r.commute(c.projection, c.unit) && nilpotent_by_power(r, r.mul(a, c.projection));
    case 3: {
      const Elem p = c.projection, w = c.unit, ap = r.mul(a, p);
      return is_projection(p) && r.commute(a, p) && r.mul(r.mul(p, w), p) == w && r.mul(ap, w) == p &&
             r.mul(w, ap) == p && nilpotent_by_power(r, r.mul(a, r.sub(r.one(), p)));
    }
    case 4: {
      const Elem b = c.inner, ab = r.mul(a, b);
      return r.commute(a, b) && s.star(ab) == ab && r.mul(r.mul(b, a), b) == b &&
             nilpotent_by_power(r, r.sub(a, r.mul(r.mul(a, a), b)));
    }
    default: return false;
  }
}

std::optional<SasrDecomposition> unit_sasr_decomposition(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  std::optional<SasrDecomposition> out;
  s.self_adjoint().find_first([&](Elem t) {
    if (r.mul(t, t) != r.one()) return false;
    const Elem u = r.sub(a, t);
    if (!r.is_unit(u)) return false;
    out = SasrDecomposition{t, u};
    return true;
  });
  return out;
}

}  // namespace starlab
