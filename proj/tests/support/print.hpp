#pragma once

#include <ostream>

#include "starlab/suites.hpp"

namespace starlab {

inline void PrintTo(const CorpusEntry& e, std::ostream* os) { *os << e.label; }

}  // namespace starlab
