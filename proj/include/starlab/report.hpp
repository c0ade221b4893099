#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "starlab/numeric.hpp"
#include "starlab/ring_props.hpp"
#include "starlab/suites.hpp"

namespace starlab::report {

using Json = nlohmann::ordered_json;

/// Elements are always rendered structurally (tuples, matrices, coefficient lists).
Json elements(const FiniteRing& r, const std::vector<Elem>& xs);

/// `include_timing` adds elapsed-ms per property; leave it off for byte-stable output.
Json property_json(const StarRing& s, const PropertyReport& report, bool include_timing);
std::string property_text(const StarRing& s, const PropertyReport& report);

/// Every certificate of every element-level notion for `a`.
Json element_json(const StarRing& s, Elem a);
std::string element_text(const StarRing& s, Elem a);

Json suites_json(const std::vector<CorpusMember>& corpus, const std::vector<SuiteResult>& results);
std::string suites_text(const std::vector<SuiteResult>& results);
std::string suites_csv(const std::vector<SuiteResult>& results);

/// Members x properties verdict grid.
struct CorpusMatrix {
  std::vector<std::string> labels;
  std::vector<Property> properties;
  std::vector<std::vector<bool>> verdicts;  ///< [member][property]
};
CorpusMatrix corpus_matrix(const std::vector<CorpusMember>& corpus, const std::vector<Property>& props, unsigned jobs);
Json corpus_matrix_json(const CorpusMatrix& m);
std::string corpus_matrix_text(const CorpusMatrix& m);
std::string corpus_matrix_csv(const CorpusMatrix& m);

Json numeric_json(const numeric::SpsrDiagnostics& d, numeric::Involution mode, double tol);
std::string numeric_text(const numeric::SpsrDiagnostics& d);

}  // namespace starlab::report
