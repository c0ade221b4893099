#include "starlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <map>
#include <thread>

#include "json.hpp"

#include "starlab/element_classify.hpp"
#include "starlab/error.hpp"
#include "starlab/parse.hpp"
#include "starlab/ring_props.hpp"

namespace starlab {

std::vector<CorpusEntry> default_corpus() {
  return {
      {"Z2", "Z2", "id"},
      {"Z3", "Z3", "id"},
      {"Z4", "Z4", "id"},
      {"Z5", "Z5", "id"},
      {"Z6", "Z6", "id"},
      {"Z8", "Z8", "id"},
      {"Z9", "Z9", "id"},
      {"Z16", "Z16", "id"},
      {"Z2xZ2-swap", "Z2xZ2", "swap"},
      {"Z2xZ2-id", "Z2xZ2", "id"},
      {"M2(Z2)", "M2(Z2)", "tr(id)"},
      {"M2(Z3)", "M2(Z3)", "tr(id)"},
      {"Z4[C2]", "GR(Z4,C2)", "grp(id)"},
      {"Z2[C2]", "GR(Z2,C2)", "grp(id)"},
      {"Z4[C4]", "GR(Z4,C4)", "grp(id)"},
      {"Z2[x]/(x^3)", "TP(Z2,3)", "poly(id)"},
      {"E11.M2(Z2).E11", "corner(M2(Z2),[[1,0],[0,0]])", "res(tr(id))"},
      {"p.M2(Z3).p", "corner(M2(Z3),[[2,1],[1,2]])", "res(tr(id))"},
      {"3.Z6.3", "corner(Z6,3)", "res(id)"},
      {"e.(Z2xZ2).e", "corner(Z2xZ2,(1,0))", "res(id)"},
  };
}

CorpusFile parse_corpus_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ValidationError, std::string("corpus file is not valid JSON: ") + e.what());
  }
  CorpusFile out;
  const nlohmann::json* members = &doc;
  if (doc.is_object()) {
    if (!doc.contains("members")) throw Error(ErrorKind::ValidationError, "corpus file has no \"members\" array");
    members = &doc["members"];
    if (doc.contains("suites")) {
      if (!doc["suites"].is_array()) throw Error(ErrorKind::ValidationError, "\"suites\" must be an array of tags");
      for (const auto& t : doc["suites"]) {
        if (!t.is_string()) throw Error(ErrorKind::ValidationError, "suite tags must be strings");
        out.suites.push_back(t.get<std::string>());
      }
    }
  }
  if (!members->is_array()) throw Error(ErrorKind::ValidationError, "corpus members must be an array");
  for (std::size_t i = 0; i < members->size(); ++i) {
    const auto& m = (*members)[i];
    auto field = [&](const char* key) -> std::string {
      if (!m.is_object() || !m.contains(key) || !m[key].is_string())
        throw Error(ErrorKind::ValidationError, "corpus entry " + std::to_string(i) + " needs a string \"" + key + "\"");
      return m[key].get<std::string>();
    };
    const auto ring = field("ring");
    const auto involution = field("involution");
    const auto label = m.contains("label") ? field("label") : ring + " " + involution;
    out.entries.push_back({label, ring, involution});
  }
  if (out.entries.empty()) throw Error(ErrorKind::ValidationError, "corpus is empty");
  return out;
}

CorpusFile read_corpus_file(const std::string& path) {
  if (path == "default") return {default_corpus(), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open corpus file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_json(buf.str());
}

std::vector<CorpusMember> load_corpus(const std::vector<CorpusEntry>& entries, const RingOptions& options) {
  std::vector<CorpusMember> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    try {
      auto ring = build_ring(parse_ring_spec(e.ring), options);
      out.push_back({e, build_involution(ring, parse_involution_spec(e.involution))});
    } catch (const Error& err) {
      throw Error(err.kind(), "corpus entry " + std::to_string(i) + " (" + e.label + "): " + err.what());
    }
  }
  return out;
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Consistent: return "consistent";
    case Status::Violation: return "VIOLATION";
    case Status::NotApplicable: return "n/a";
  }
  return "?";
}

bool SuiteResult::passed() const { return count(Status::Violation) == 0; }

std::size_t SuiteResult::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(), [&](const MemberOutcome& m) { return m.status == s; }));
}

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Per-member memo of ring-level verdicts, shared by all suites run on that member.
class Evaluator {
 public:
  explicit Evaluator(const StarRing& s) : s_(s), r_(s.ring()) {}

  const StarRing& star() const { return s_; }
  const FiniteRing& ring() const { return r_; }

  const Verdict& verdict(Property p) {
    auto it = verdicts_.find(p);
    if (it == verdicts_.end()) it = verdicts_.emplace(p, ring_property(s_, p)).first;
    return it->second;
  }
  bool holds(Property p) { return verdict(p).holds; }

  bool two_is_unit() const { return r_.is_unit(r_.from_integer(2)); }

  std::string render(const std::vector<Elem>& xs) const {
    std::string out;
    for (auto x : xs) {
      if (!out.empty()) out += ", ";
      out += r_.render(x);
    }
    return out;
  }

 private:
  const StarRing& s_;
  FiniteRing r_;
  std::map<Property, Verdict> verdicts_;
};

struct Side {
  std::string name;
  bool value;
};

MemberOutcome from_sides(const std::vector<Side>& sides) {
  MemberOutcome out;
  for (const auto& s : sides) out.facts.push_back({s.name, yes_no(s.value)});
  return out;
}

/// All sides must agree.
MemberOutcome equivalence(const std::vector<Side>& sides) {
  auto out = from_sides(sides);
  const auto odd = std::find_if(sides.begin(), sides.end(), [&](const Side& s) { return s.value != sides.front().value; });
  if (odd != sides.end()) {
    out.status = Status::Violation;
    out.witness = sides.front().name + "=" + yes_no(sides.front().value) + " but " + odd->name + "=" + yes_no(odd->value);
  }
  return out;
}

/// Each side implies the next.
MemberOutcome chain(const std::vector<Side>& sides) {
  auto out = from_sides(sides);
  for (std::size_t i = 0; i + 1 < sides.size(); ++i)
    if (sides[i].value && !sides[i + 1].value) {
      out.status = Status::Violation;
      out.witness = sides[i].name + " holds but " + sides[i + 1].name + " fails";
      break;
    }
  return out;
}

MemberOutcome not_applicable(std::string note) {
  MemberOutcome out;
  out.status = Status::NotApplicable;
  out.note = std::move(note);
  return out;
}

void violation(MemberOutcome& out, std::string witness) {
  out.status = Status::Violation;
  if (out.witness.empty()) out.witness = std::move(witness);
}

// ---- ELEM-EQUIV ---------------------------------------------------------------------------

MemberOutcome elem_equiv(Evaluator& ev) {
  const auto& s = ev.star();
  const auto& r = ev.ring();
  std::size_t counts[4] = {0, 0, 0, 0};
  MemberOutcome out;
  for (Elem a = 0; a < r.size(); ++a) {
    const auto c = spsr_conditions(s, a);
    for (int i = 1; i <= 4; ++i) {
      if (!c.holds(i)) continue;
      ++counts[i - 1];
      if (!certificate_valid(s, *c.certificates[i - 1]))
        violation(out, "invalid C" + std::to_string(i) + " certificate at " + r.render(a));
    }
    if (!c.agree()) {
      std::string pattern;
      for (int i = 1; i <= 4; ++i) pattern += std::string(i > 1 ? " " : "") + "C" + std::to_string(i) + "=" + yes_no(c.holds(i));
      violation(out, r.render(a) + ": " + pattern);
    }
  }
  for (int i = 0; i < 4; ++i)
    out.facts.push_back({"C" + std::to_string(i + 1), std::to_string(counts[i]) + "/" + std::to_string(r.size())});
  return out;
}

// ---- RING-EQUIV ---------------------------------------------------------------------------

bool some_power_generates_projection_ideal(const StarRing& s) {
  const auto& r = s.ring();
  std::vector<ElementSet> projection_ideals;
  s.projections().for_each([&](Elem p) { projection_ideals.push_back(r.right_multiples(p)); });
  for (Elem a = 0; a < r.size(); ++a) {
    bool found = false;
    for (const Elem an : r.powers(a).powers) {
      const auto anR = r.right_multiples(an);
      if (std::any_of(projection_ideals.begin(), projection_ideals.end(), [&](const ElementSet& pR) { return pR == anR; })) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool some_power_strongly_star_regular(const StarRing& s) {
  const auto& r = s.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    const auto seq = r.powers(a).powers;
    if (std::none_of(seq.begin(), seq.end(), [&](Elem an) { return strongly_star_regular_witness(s, an).has_value(); }))
      return false;
  }
  return true;
}

bool projection_plus_unit_with_nil_product(const StarRing& s) {
  const auto& r = s.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    const bool ok = s.projections().any_of([&](Elem p) { return r.is_unit(r.sub(a, p)) && r.is_nilpotent(r.mul(a, p)); });
    if (!ok) return false;
  }
  return true;
}

bool unit_conjugates_of_projections_are_projections(const StarRing& s) {
  const auto& r = s.ring();
  return !r.units().any_of([&](Elem v) {
    const Elem vi = r.inverse(v);
    return s.projections().any_of([&](Elem q) { return !s.is_projection(r.mul(r.mul(vi, q), v)); });
  });
}

MemberOutcome ring_equiv(Evaluator& ev) {
  const auto& s = ev.star();
  return equivalence({
                             {"(1) strongly pi-*-regular", ev.holds(Property::StronglyPiStarRegular)},
                             {"(2) pi-regular and Id=P", ev.holds(Property::PiRegular) &&
                                                             ev.holds(Property::IdempotentsAreProjections)},
                             {"(3) a^nR=pR and abelian", some_power_generates_projection_ideal(s) && ev.holds(Property::Abelian)},
                             {"(4) some a^n strongly *-regular", some_power_strongly_star_regular(s)},
                             {"(5) a=p+u, ap nil; v^-1 q v in P", projection_plus_unit_with_nil_product(s) &&
                                                                      unit_conjugates_of_projections_are_projections(s)},
                         });
}

// ---- JAC-EQUIV ----------------------------------------------------------------------------

MemberOutcome jac_equiv(Evaluator& ev) {
  const auto& s = ev.star();
  const auto induced = induce_quotient_involution(s, ev.ring().jacobson_radical());
  const auto& bar = induced.star_ring;
  const auto lifts = lifting_checks(s);
  const bool j_nil = ev.holds(Property::JacobsonNil);
  auto out = equivalence(
      {
              {"(1) strongly pi-*-regular", ev.holds(Property::StronglyPiStarRegular)},
              {"(2) R/J spsr, J nil, *-abelian, P(R/J) lifts",
               ring_property(bar, Property::StronglyPiStarRegular).holds && j_nil && lifts.projections_central.holds &&
                   lifts.projections_lift.holds},
              {"(3) R/J strongly *-regular, J nil, Id(R/J) lifts centrally",
               ring_property(bar, Property::StronglyStarRegular).holds && j_nil &&
                   lifts.idempotents_lift_to_central_projections.holds},
          });
  out.note = "|J| = " + std::to_string(ev.ring().jacobson_radical().size());
  return out;
}

// ---- SPR-SPLIT ----------------------------------------------------------------------------

MemberOutcome spr_split(Evaluator& ev) {
  return equivalence({
                             {"strongly *-clean and pi-regular",
                              ev.holds(Property::StronglyStarClean) && ev.holds(Property::PiRegular)},
                             {"strongly pi-*-regular", ev.holds(Property::StronglyPiStarRegular)},
                         });
}

// ---- MATRIX-NEG ---------------------------------------------------------------------------

MemberOutcome matrix_neg(Evaluator& ev) {
  const auto& spec = ev.ring().spec();
  if (spec.kind != RingSpec::Kind::Matrix || spec.param < 2) return not_applicable("not a matrix ring of size >= 2");
  const auto& v = ev.verdict(Property::StronglyPiStarRegular);
  MemberOutcome out;
  out.facts.push_back({"strongly pi-*-regular", yes_no(v.holds)});
  if (v.holds) violation(out, "matrix ring is strongly pi-*-regular");
  else out.note = "first failing element " + ev.render(v.counterexample);
  return out;
}

// ---- CORNER -------------------------------------------------------------------------------

MemberOutcome corner_suite(Evaluator& ev) {
  if (!ev.holds(Property::StronglyPiStarRegular)) return not_applicable("not strongly pi-*-regular");
  const auto& s = ev.star();
  const auto& r = ev.ring();
  MemberOutcome out;
  std::size_t checked = 0;
  r.idempotents().for_each([&](Elem e) {
    if (out.status == Status::Violation) return;
    if (!s.is_projection(e)) {
      violation(out, "idempotent " + r.render(e) + " is not a projection");
      return;
    }
    const auto corner_ring = restrict_to_corner(s, e);
    ++checked;
    if (!ring_property(corner_ring, Property::StronglyPiStarRegular).holds)
      violation(out, "eRe not strongly pi-*-regular for e = " + r.render(e));
  });
  out.facts.push_back({"corners checked", std::to_string(checked)});
  return out;
}

// ---- GROUPRING ----------------------------------------------------------------------------

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

MemberOutcome group_ring_suite(Evaluator& ev) {
  const auto& s = ev.star();
  const auto& r = ev.ring();
  const auto& spec = r.spec();
  if (spec.kind != RingSpec::Kind::GroupRing) return not_applicable("not a group ring");
  if (!is_power_of_two(spec.group.order())) return not_applicable("group is not a 2-group");
  if (s.spec().kind != InvolutionSpec::Kind::GroupRing) return not_applicable("involution is not grp(...)");
  const auto& base = r.children().front();
  if (!base.jacobson_radical().contains(base.from_integer(2))) return not_applicable("2 is not in J(R)");
  const auto base_star = build_involution(base, s.spec().children.front());
  auto out = equivalence({
                                 {"R strongly pi-*-regular", ring_property(base_star, Property::StronglyPiStarRegular).holds},
                                 {"RG strongly pi-*-regular", ev.holds(Property::StronglyPiStarRegular)},
                             });
  out.note = "artinian prime factors: holds for every finite ring";
  return out;
}

// ---- SRC-EQUIV ----------------------------------------------------------------------------

bool commuting_projection_stable_range(const StarRing& s) {
  const auto& r = s.ring();
  const Comaximality comax(r);
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      const bool found = s.projections().any_of([&](Elem p) { return r.commute(a, p) && r.is_unit(r.add(a, r.mul(b, p))); });
      if (!found && comax(a, b)) return false;
    }
  return true;
}

bool projection_exchange(const StarRing& s) {
  const auto& r = s.ring();
  for (Elem a = 0; a < r.size(); ++a) {
    const auto aR = r.right_multiples(a);
    const auto rest = r.right_multiples(r.sub(r.one(), a));
    if (!s.projections().any_of([&](Elem p) { return aR.contains(p) && rest.contains(r.sub(r.one(), p)); })) return false;
  }
  return true;
}

MemberOutcome src_equiv(Evaluator& ev) {
  const auto& s = ev.star();
  const bool id_p = ev.holds(Property::IdempotentsAreProjections);
  const bool star_abelian = ev.holds(Property::StarAbelian);
  return equivalence({
                             {"(1) psr1 and *-abelian", ev.holds(Property::ProjectionStableRangeOne) && star_abelian},
                             {"(2) commuting projection stable range", commuting_projection_stable_range(s)},
                             {"(3) isr1 and Id=P", ev.holds(Property::IdempotentStableRangeOne) && id_p},
                             {"(4a) clean and Id=P", ev.holds(Property::Clean) && id_p},
                             {"(4b) exchange and Id=P", ev.holds(Property::Exchange) && id_p},
                             {"(5) *-clean and *-abelian", ev.holds(Property::StarClean) && star_abelian},
                             {"(6) strongly *-clean", ev.holds(Property::StronglyStarClean)},
                             {"(7) projection exchange", projection_exchange(s)},
                         });
}

// ---- SSC-PSR, PSR-SC, PSR-ONESIDED, SR-CHAIN --------------------------------------------------

MemberOutcome ssc_psr(Evaluator& ev) {
  return chain({{"strongly *-clean", ev.holds(Property::StronglyStarClean)},
                {"psr1", ev.holds(Property::ProjectionStableRangeOne)}});
}

MemberOutcome psr_sc(Evaluator& ev) {
  return chain({{"psr1", ev.holds(Property::ProjectionStableRangeOne)}, {"*-clean", ev.holds(Property::StarClean)}});
}

MemberOutcome psr_onesided(Evaluator& ev) {
  const auto& s = ev.star();
  return equivalence({
                             {"a+bp unit", psr_variant(s, Invertibility::TwoSided).holds},
                             {"a+bp right invertible", psr_variant(s, Invertibility::Right).holds},
                             {"a+bp left invertible", psr_variant(s, Invertibility::Left).holds},
                         });
}

MemberOutcome sr_chain(Evaluator& ev) {
  return chain({{"psr1", ev.holds(Property::ProjectionStableRangeOne)},
                {"isr1", ev.holds(Property::IdempotentStableRangeOne)},
                {"sr1", ev.holds(Property::StableRangeOne)}});
}

// ---- LOCAL-EQUIV --------------------------------------------------------------------------

MemberOutcome local_equiv(Evaluator& ev) {
  const auto& s = ev.star();
  const auto& r = ev.ring();
  const bool trivial_p = s.projections().size() == 2 || r.size() == 1;
  const bool trivial_id = r.idempotents().size() == 2 || r.size() == 1;
  return equivalence({
                             {"(1) *-clean, P={0,1}", ev.holds(Property::StarClean) && trivial_p},
                             {"(2) clean, Id={0,1}", ev.holds(Property::Clean) && trivial_id},
                             {"(3) local", is_local(r)},
                         });
}

// ---- TWO-UNIT -----------------------------------------------------------------------------

MemberOutcome two_unit(Evaluator& ev) {
  const auto& s = ev.star();
  const auto& r = ev.ring();
  bool every_sasr = true;
  for (Elem a = 0; a < r.size() && every_sasr; ++a) every_sasr = unit_sasr_decomposition(s, a).has_value();
  const bool two = ev.two_is_unit();
  auto out = equivalence({{"theorem (1) *-clean and 2 unit", ev.holds(Property::StarClean) && two},
                              {"theorem (2) unit + self-adjoint root of 1", every_sasr}});

  bool roots_self_adjoint = true;
  for (Elem u = 0; u < r.size(); ++u)
    if (r.mul(u, u) == r.one() && s.star(u) != u) roots_self_adjoint = false;
  const bool id_p = ev.holds(Property::IdempotentsAreProjections);
  bool units_self_adjoint = !r.units().any_of([&](Elem u) { return s.star(u) != u; });
  bool identity = true;
  for (Elem a = 0; a < r.size(); ++a) identity = identity && s.star(a) == a;

  out.facts.push_back({"2 unit", yes_no(two)});
  out.facts.push_back({"lemma: roots of 1 self-adjoint", yes_no(roots_self_adjoint)});
  out.facts.push_back({"lemma: Id=P", yes_no(id_p)});
  const bool cor1 = ev.holds(Property::Clean) && units_self_adjoint;
  const bool cor2 = ev.holds(Property::StarClean) && identity;
  out.facts.push_back({"corollary (1) clean, units self-adjoint", yes_no(cor1)});
  out.facts.push_back({"corollary (2) *-clean, *=1", yes_no(cor2)});
  if (two) {
    if (roots_self_adjoint != id_p) violation(out, "lemma sides disagree");
    if (cor1 != cor2) violation(out, "corollary sides disagree");
  } else if (roots_self_adjoint != id_p) {
    out.note = "lemma sides differ without 2 in U(R), as expected when the hypothesis is dropped";
  } else {
    out.note = "lemma and corollary need 2 in U(R); reported only";
  }
  return out;
}

// ---- BOOL ---------------------------------------------------------------------------------

MemberOutcome bool_suite(Evaluator& ev) {
  if (!ev.holds(Property::Boolean)) return not_applicable("not boolean");
  const auto& s = ev.star();
  bool identity = true;
  for (Elem a = 0; a < ev.ring().size(); ++a) identity = identity && s.star(a) == a;
  return equivalence({{"*-clean", ev.holds(Property::StarClean)}, {"* is the identity", identity}});
}

// ---- QUOT ---------------------------------------------------------------------------------

MemberOutcome quot_suite(Evaluator& ev) {
  if (!ev.holds(Property::StarClean)) return not_applicable("not *-clean");
  const auto& s = ev.star();
  std::size_t invariant = 0, total = 0;
  MemberOutcome out;
  for (const auto& ideal : all_ideals(ev.ring())) {
    ++total;
    if (ideal.elements().any_of([&](Elem x) { return !ideal.contains(s.star(x)); })) continue;
    ++invariant;
    const auto induced = induce_quotient_involution(s, ideal);
    if (!ring_property(induced.star_ring, Property::StarClean).holds)
      violation(out, "R/I not *-clean for I generated by " + ev.render(ideal.generators()));
  }
  out.facts.push_back({"ideals", std::to_string(total)});
  out.facts.push_back({"*-invariant ideals checked", std::to_string(invariant)});
  return out;
}

// ---- PROPER-NIL ---------------------------------------------------------------------------

MemberOutcome proper_nil(Evaluator& ev) {
  const auto& s = ev.star();
  const auto& r = ev.ring();
  bool all_c4 = true;
  for (Elem a = 0; a < r.size() && all_c4; ++a) all_c4 = spsr_condition4(s, a).has_value();
  if (!all_c4) return not_applicable("some element fails C4");
  MemberOutcome out;
  std::size_t isotropic = 0;
  for (Elem x = 0; x < r.size(); ++x) {
    if (r.mul(s.star(x), x) != 0) continue;
    ++isotropic;
    if (!r.is_nilpotent(x)) violation(out, "x*x = 0 but x not nilpotent: " + r.render(x));
  }
  out.facts.push_back({"x with x*x=0", std::to_string(isotropic)});
  out.facts.push_back({"proper", yes_no(is_proper(s))});
  return out;
}

// ---- IDPROJ-ABELIAN, CLEAN-EXCHANGE ---------------------------------------------------------

MemberOutcome idproj_abelian(Evaluator& ev) {
  return chain({{"Id=P", ev.holds(Property::IdempotentsAreProjections)}, {"abelian", ev.holds(Property::Abelian)}});
}

MemberOutcome clean_exchange(Evaluator& ev) {
  if (!ev.holds(Property::Abelian)) return not_applicable("not abelian");
  return equivalence({{"clean", ev.holds(Property::Clean)}, {"exchange", ev.holds(Property::Exchange)}});
}

// ---- FINAL-EQUIV --------------------------------------------------------------------------

MemberOutcome final_equiv(Evaluator& ev) {
  if (!ev.holds(Property::IdempotentsAreProjections)) return not_applicable("Id != P");
  return equivalence({
                             {"clean", ev.holds(Property::Clean)},
                             {"strongly clean", ev.holds(Property::StronglyClean)},
                             {"exchange", ev.holds(Property::Exchange)},
                             {"*-clean", ev.holds(Property::StarClean)},
                             {"strongly *-clean", ev.holds(Property::StronglyStarClean)},
                             {"isr1", ev.holds(Property::IdempotentStableRangeOne)},
                             {"psr1", ev.holds(Property::ProjectionStableRangeOne)},
                         });
}

struct SuiteDef {
  std::string_view tag;
  std::string_view statement;
  MemberOutcome (*run)(Evaluator&);
};

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {
      {"ELEM-EQUIV", "C1, C2, C3 and C4 agree on every element", elem_equiv},
      {"RING-EQUIV", "the five ring-level characterizations of strong pi-*-regularity agree", ring_equiv},
      {"JAC-EQUIV", "strong pi-*-regularity via R/J(R), J nil and lifting", jac_equiv},
      {"SPR-SPLIT", "strongly *-clean and pi-regular iff strongly pi-*-regular", spr_split},
      {"MATRIX-NEG", "M_n(R) is not strongly pi-*-regular for n >= 2", matrix_neg},
      {"CORNER", "eRe is strongly pi-*-regular for e in Id(R)", corner_suite},
      {"GROUPRING", "R strongly pi-*-regular iff RG is, for 2 in J(R) and G a 2-group", group_ring_suite},
      {"SRC-EQUIV", "the seven characterizations of strong *-cleanness agree", src_equiv},
      {"SSC-PSR", "strongly *-clean implies psr1", ssc_psr},
      {"PSR-SC", "psr1 implies *-clean", psr_sc},
      {"LOCAL-EQUIV", "*-clean with trivial projections, clean with trivial idempotents, local", local_equiv},
      {"TWO-UNIT", "unit plus self-adjoint root of 1; with 2 a unit, roots and projections", two_unit},
      {"BOOL", "a boolean *-ring is *-clean iff * is the identity", bool_suite},
      {"QUOT", "R/I is *-clean for every *-invariant ideal of a *-clean R", quot_suite},
      {"PROPER-NIL", "if every element satisfies C4 then x*x = 0 forces x nilpotent", proper_nil},
      {"IDPROJ-ABELIAN", "Id = P implies abelian", idproj_abelian},
      {"FINAL-EQUIV", "with Id = P: clean, exchange, *-clean, isr1 and psr1 agree", final_equiv},
      {"PSR-ONESIDED", "psr1 with units, right inverses or left inverses agree", psr_onesided},
      {"SR-CHAIN", "psr1 implies isr1 implies sr1", sr_chain},
      {"CLEAN-EXCHANGE", "clean iff exchange for abelian rings", clean_exchange},
  };
  return defs;
}

const SuiteDef& find_suite(std::string_view tag) {
  for (const auto& d : suite_defs())
    if (d.tag == tag) return d;
  throw Error(ErrorKind::ValidationError, "unknown suite tag '" + std::string(tag) + "'");
}

}  // namespace

const std::vector<std::string>& suite_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> v;
    for (const auto& d : suite_defs()) v.emplace_back(d.tag);
    return v;
  }();
  return tags;
}

std::string_view suite_statement(std::string_view tag) { return find_suite(tag).statement; }

std::vector<SuiteResult> run_suites(const std::vector<CorpusMember>& corpus, const std::vector<std::string>& tags,
                                    unsigned jobs) {
  std::vector<const SuiteDef*> defs;
  for (const auto& t : tags) defs.push_back(&find_suite(t));

  std::vector<std::vector<MemberOutcome>> grid(corpus.size(), std::vector<MemberOutcome>(defs.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(corpus.size());
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        Evaluator ev(corpus[i].star);
        for (std::size_t k = 0; k < defs.size(); ++k) {
          grid[i][k] = defs[k]->run(ev);
          grid[i][k].label = corpus[i].entry.label;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SuiteResult> out;
  for (std::size_t k = 0; k < defs.size(); ++k) {
    SuiteResult res{std::string(defs[k]->tag), {}};
    for (std::size_t i = 0; i < corpus.size(); ++i) res.members.push_back(std::move(grid[i][k]));
    out.push_back(std::move(res));
  }
  return out;
}

SuiteResult run_suite(const std::vector<CorpusMember>& corpus, std::string_view tag, unsigned jobs) {
  return std::move(run_suites(corpus, {std::string(tag)}, jobs).front());
}

}  // namespace starlab
