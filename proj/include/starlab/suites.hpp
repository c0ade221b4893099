#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "starlab/involution.hpp"

namespace starlab {

struct CorpusEntry {
  std::string label;
  std::string ring;
  std::string involution;
};

/// The built-in corpus: small Zmod rings, Z2xZ2 under two involutions, M2(Z2), M2(Z3),
/// three group rings, a truncated polynomial ring and four corners.
std::vector<CorpusEntry> default_corpus();

/// Corpus file: {"members": [{"label", "ring", "involution"}, ...], "suites": [...]}.
/// A bare array of members is accepted too. `suites` is optional.
struct CorpusFile {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> suites;
};
CorpusFile parse_corpus_json(std::string_view text);
/// "default" selects default_corpus().
CorpusFile read_corpus_file(const std::string& path);

struct CorpusMember {
  CorpusEntry entry;
  StarRing star;
};

/// Parses and validates every entry before returning. Errors keep their kind and name the
/// failing entry index.
std::vector<CorpusMember> load_corpus(const std::vector<CorpusEntry>& entries, const RingOptions& options);

/// Every suite tag in report order.
const std::vector<std::string>& suite_tags();
/// One-line statement of what a suite checks.
std::string_view suite_statement(std::string_view tag);

enum class Status { Consistent, Violation, NotApplicable };
const char* to_string(Status s) noexcept;

struct Fact {
  std::string name;
  std::string value;
};

struct MemberOutcome {
  std::string label;
  Status status = Status::Consistent;
  std::vector<Fact> facts;  ///< evaluated sides, in a fixed order
  std::string witness;      ///< rendered structurally; empty unless a violation
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<MemberOutcome> members;

  bool passed() const;
  std::size_t count(Status s) const;
};

/// Runs the given suites over the corpus. Members are processed on up to `jobs` threads;
/// the result order is fixed by (tags, corpus order). Throws ValidationError on an unknown tag.
std::vector<SuiteResult> run_suites(const std::vector<CorpusMember>& corpus, const std::vector<std::string>& tags,
                                    unsigned jobs = 1);
SuiteResult run_suite(const std::vector<CorpusMember>& corpus, std::string_view tag, unsigned jobs = 1);

}  // namespace starlab
