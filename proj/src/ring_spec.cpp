#include "starlab/ring_spec.hpp"

#include "starlab/error.hpp"

namespace starlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SpecTooLarge: return "SpecTooLarge";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAProjection: return "NotAProjection";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::IdentityOnNoncommutative: return "IdentityOnNoncommutative";
    case ErrorKind::SwapShapeMismatch: return "SwapShapeMismatch";
    case ErrorKind::NotStarInvariant: return "NotStarInvariant";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::MalformedMatrix: return "MalformedMatrix";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

std::string to_string(const GroupSpec& group) {
  std::string out;
  for (std::size_t i = 0; i < group.cyclic_orders.size(); ++i) {
    if (i != 0) out += '*';
    out += 'C' + std::to_string(group.cyclic_orders[i]);
  }
  return out;
}

std::string to_string(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zmod:
      return "Z" + std::to_string(spec.param);
    case RingSpec::Kind::Matrix:
      return "M" + std::to_string(spec.param) + "(" + to_string(spec.children.at(0)) + ")";
    case RingSpec::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (i != 0) out += 'x';
        out += to_string(spec.children[i]);
      }
      return out;
    }
    case RingSpec::Kind::GroupRing:
      return "GR(" + to_string(spec.children.at(0)) + "," + to_string(spec.group) + ")";
    case RingSpec::Kind::TruncPoly:
      return "TP(" + to_string(spec.children.at(0)) + "," + std::to_string(spec.param) + ")";
    case RingSpec::Kind::Quotient: {
      std::string out = "Q(" + to_string(spec.children.at(0)) + ",[";
      for (std::size_t i = 0; i < spec.literals.size(); ++i) {
        if (i != 0) out += ',';
        out += spec.literals[i];
      }
      return out + "])";
    }
    case RingSpec::Kind::Corner:
      return "corner(" + to_string(spec.children.at(0)) + "," + spec.literals.at(0) + ")";
  }
  return {};
}

}  // namespace starlab
