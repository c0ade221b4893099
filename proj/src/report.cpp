#include "starlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "starlab/element_classify.hpp"

namespace starlab::report {

Json elements(const FiniteRing& r, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(r.render(x));
  return out;
}

namespace {

std::string joined(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ", ") + r.render(x);
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

/// CSV field quoting per RFC 4180.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json clean_json(const FiniteRing& r, const CleanCertificate& c) {
  return Json{{"e", r.render(c.part)}, {"u", r.render(c.unit)}, {"projection", c.projection}, {"commuting", c.commuting}};
}

Json pi_star_json(const FiniteRing& r, const std::optional<PiStarCertificate>& c) {
  if (!c) return nullptr;
  switch (c->condition) {
    case 1: return Json{{"m", c->exponent}, {"e", r.render(c->projection)}, {"u", r.render(c->unit)}};
    case 2: return Json{{"f", r.render(c->projection)}, {"v", r.render(c->unit)}};
    case 3: return Json{{"p", r.render(c->projection)}, {"corner-inverse", r.render(c->unit)}};
    default: return Json{{"b", r.render(c->inner)}};
  }
}

}  // namespace

Json property_json(const StarRing& s, const PropertyReport& report, bool include_timing) {
  const auto& r = s.ring();
  Json props = Json::array();
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const auto& [p, v] = report.verdicts[i];
    Json entry{{"property", name(p)}, {"verdict", v.holds}};
    entry["witness"] = v.holds ? Json(nullptr) : elements(r, v.counterexample);
    if (include_timing) entry["elapsed-ms"] = report.elapsed_ms[i];
    props.push_back(std::move(entry));
  }
  return Json{{"spec", {{"ring", report.ring}, {"involution", report.involution}, {"size", r.size()}}},
              {"properties", std::move(props)}};
}

std::string property_text(const StarRing& s, const PropertyReport& report) {
  std::ostringstream out;
  out << report.ring << " with " << report.involution << " (" << s.ring().size() << " elements)\n";
  for (const auto& [p, v] : report.verdicts) {
    out << "  " << pad(std::string(name(p)), 30) << (v.holds ? "true " : "false");
    if (!v.holds) out << "  counterexample: " << joined(s.ring(), v.counterexample);
    out << '\n';
  }
  return out.str();
}

Json element_json(const StarRing& s, Elem a) {
  const auto& r = s.ring();
  Json out{{"spec", {{"ring", to_string(r.spec())}, {"involution", to_string(s.spec())}}},
           {"element", r.render(a)},
           {"index", a},
           {"unit", r.is_unit(a)},
           {"idempotent", r.is_idempotent(a)},
           {"projection", s.is_projection(a)},
           {"nilpotent", r.is_nilpotent(a)}};
  for (auto mode : {CleanMode::Clean, CleanMode::StronglyClean, CleanMode::StarClean, CleanMode::StronglyStarClean}) {
    Json certs = Json::array();
    for (const auto& c : clean_certificates(s, a, mode)) certs.push_back(clean_json(r, c));
    out[to_string(mode)] = std::move(certs);
  }
  if (auto w = strongly_pi_regular_witness(r, a))
    out["strongly-pi-regular"] = Json{{"n", w->n}, {"x", r.render(w->x)}, {"y", r.render(w->y)}};
  else
    out["strongly-pi-regular"] = nullptr;
  if (auto w = strongly_star_regular_witness(s, a))
    out["strongly-star-regular"] = Json{{"p", r.render(w->projection)}, {"u", r.render(w->unit)}};
  else
    out["strongly-star-regular"] = nullptr;
  const auto c = spsr_conditions(s, a);
  Json spsr;
  for (int i = 1; i <= 4; ++i) spsr["C" + std::to_string(i)] = pi_star_json(r, c.certificates[i - 1]);
  out["strongly-pi-star-regular"] = std::move(spsr);
  if (auto d = unit_sasr_decomposition(s, a))
    out["unit-plus-self-adjoint-root"] = Json{{"t", r.render(d->root)}, {"u", r.render(d->unit)}};
  else
    out["unit-plus-self-adjoint-root"] = nullptr;
  return out;
}

std::string element_text(const StarRing& s, Elem a) {
  const auto j = element_json(s, a);
  std::ostringstream out;
  out << "element " << j["element"].get<std::string>() << " of " << j["spec"]["ring"].get<std::string>() << " with "
      << j["spec"]["involution"].get<std::string>() << '\n';
  for (const char* key : {"unit", "idempotent", "projection", "nilpotent"})
    out << "  " << pad(key, 28) << (j[key].get<bool>() ? "true" : "false") << '\n';
  for (const char* key : {"clean", "strongly-clean", "star-clean", "strongly-star-clean"}) {
    out << "  " << pad(key, 28) << (j[key].empty() ? "false" : "true") << "  (" << j[key].size() << " certificates";
    if (!j[key].empty()) out << ", first e = " << j[key][0]["e"].get<std::string>() << ", u = " << j[key][0]["u"].get<std::string>();
    out << ")\n";
  }
  for (const char* key : {"strongly-pi-regular", "strongly-star-regular", "unit-plus-self-adjoint-root"})
    out << "  " << pad(key, 28) << (j[key].is_null() ? "false" : "true  " + j[key].dump()) << '\n';
  for (const auto& [cond, cert] : j["strongly-pi-star-regular"].items())
    out << "  " << pad("spsr " + cond, 28) << (cert.is_null() ? "false" : "true  " + cert.dump()) << '\n';
  return out.str();
}

Json suites_json(const std::vector<CorpusMember>& corpus, const std::vector<SuiteResult>& results) {
  Json members = Json::array();
  for (const auto& m : corpus)
    members.push_back(Json{{"label", m.entry.label},
                           {"ring", m.entry.ring},
                           {"involution", m.entry.involution},
                           {"size", m.star.ring().size()}});
  Json suites = Json::array();
  bool all = true;
  for (const auto& res : results) {
    Json rows = Json::array();
    for (const auto& m : res.members) {
      Json facts = Json::object();
      for (const auto& f : m.facts) facts[f.name] = f.value;
      Json row{{"label", m.label}, {"status", to_string(m.status)}, {"facts", std::move(facts)}};
      if (!m.witness.empty()) row["witness"] = m.witness;
      if (!m.note.empty()) row["note"] = m.note;
      rows.push_back(std::move(row));
    }
    all = all && res.passed();
    suites.push_back(Json{{"suite", res.suite},
                          {"statement", suite_statement(res.suite)},
                          {"result", res.passed() ? "PASS" : "FAIL"},
                          {"consistent", res.count(Status::Consistent)},
                          {"violations", res.count(Status::Violation)},
                          {"not-applicable", res.count(Status::NotApplicable)},
                          {"members", std::move(rows)}});
  }
  return Json{{"corpus", std::move(members)}, {"suites", std::move(suites)}, {"result", all ? "PASS" : "FAIL"}};
}

std::string suites_text(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  for (const auto& res : results) {
    out << res.suite << "  " << (res.passed() ? "PASS" : "FAIL") << "  (" << res.count(Status::Consistent)
        << " consistent, " << res.count(Status::Violation) << " violations, " << res.count(Status::NotApplicable)
        << " n/a)  " << suite_statement(res.suite) << '\n';
    for (const auto& m : res.members) {
      out << "  " << pad(m.label, 18) << pad(to_string(m.status), 12);
      std::string detail;
      for (const auto& f : m.facts) detail += (detail.empty() ? "" : "; ") + f.name + "=" + f.value;
      if (!m.witness.empty()) detail += (detail.empty() ? "" : "; ") + std::string("witness: ") + m.witness;
      if (!m.note.empty()) detail += (detail.empty() ? "" : "; ") + m.note;
      out << detail << '\n';
    }
  }
  return out.str();
}

std::string suites_csv(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  out << "suite,label,status,witness,note\n";
  for (const auto& res : results)
    for (const auto& m : res.members)
      out << res.suite << ',' << csv_field(m.label) << ',' << to_string(m.status) << ',' << csv_field(m.witness) << ','
          << csv_field(m.note) << '\n';
  return out.str();
}

CorpusMatrix corpus_matrix(const std::vector<CorpusMember>& corpus, const std::vector<Property>& props, unsigned jobs) {
  CorpusMatrix m{{}, props, std::vector<std::vector<bool>>(corpus.size(), std::vector<bool>(props.size()))};
  for (const auto& c : corpus) m.labels.push_back(c.entry.label);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();)
      for (std::size_t k = 0; k < props.size(); ++k) m.verdicts[i][k] = ring_property(corpus[i].star, props[k]).holds;
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return m;
}

Json corpus_matrix_json(const CorpusMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    Json verdicts = Json::object();
    for (std::size_t k = 0; k < m.properties.size(); ++k) verdicts[std::string(name(m.properties[k]))] = bool(m.verdicts[i][k]);
    rows.push_back(Json{{"label", m.labels[i]}, {"verdicts", std::move(verdicts)}});
  }
  return Json{{"members", std::move(rows)}};
}

std::string corpus_matrix_csv(const CorpusMatrix& m) {
  std::ostringstream out;
  out << "label";
  for (auto p : m.properties) out << ',' << name(p);
  out << '\n';
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    out << csv_field(m.labels[i]);
    for (std::size_t k = 0; k < m.properties.size(); ++k) out << ',' << (m.verdicts[i][k] ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

std::string corpus_matrix_text(const CorpusMatrix& m) {
  std::ostringstream out;
  for (std::size_t k = 0; k < m.properties.size(); ++k) out << std::setw(3) << k << "  " << name(m.properties[k]) << '\n';
  out << '\n' << pad("member", 18);
  for (std::size_t k = 0; k < m.properties.size(); ++k) out << std::setw(3) << k;
  out << '\n';
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    out << pad(m.labels[i], 18);
    for (std::size_t k = 0; k < m.properties.size(); ++k) out << std::setw(3) << (m.verdicts[i][k] ? "T" : ".");
    out << '\n';
  }
  return out.str();
}

Json numeric_json(const numeric::SpsrDiagnostics& d, numeric::Involution mode, double tol) {
  Json out{{"verdict", numeric::to_string(d.verdict)}, {"involution", numeric::to_string(mode)}, {"tol", tol}};
  if (d.drazin.inverse.size()) {
    out["index"] = d.drazin.index;
    out["rank"] = d.drazin.rank;
    out["residuals"] = Json{{"commute", d.drazin.commute_residual},
                            {"reflexive", d.drazin.reflexive_residual},
                            {"nilpotent", d.drazin.nilpotent_residual},
                            {"self-adjoint", d.self_adjoint_residual},
                            {"cross-gram", d.cross_gram}};
    out["tests"] = Json{{"self-adjoint", d.self_adjoint_test}, {"cross-gram", d.cross_gram_test}};
  }
  if (!d.note.empty()) out["note"] = d.note;
  return out;
}

std::string numeric_text(const numeric::SpsrDiagnostics& d) {
  std::ostringstream out;
  out << "verdict " << numeric::to_string(d.verdict) << '\n';
  if (d.drazin.inverse.size()) {
    out << "index " << d.drazin.index << ", rank " << d.drazin.rank << '\n'
        << std::scientific << std::setprecision(3) << "residuals: commute " << d.drazin.commute_residual << ", reflexive "
        << d.drazin.reflexive_residual << ", nilpotent " << d.drazin.nilpotent_residual << ", self-adjoint "
        << d.self_adjoint_residual << ", cross-gram " << d.cross_gram << '\n';
  }
  if (!d.note.empty()) out << d.note << '\n';
  return out.str();
}

}  // namespace starlab::report
