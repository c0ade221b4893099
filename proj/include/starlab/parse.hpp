#pragma once

#include <string_view>

#include "starlab/involution.hpp"
#include "starlab/ring_spec.hpp"

namespace starlab {

/// Ring DSL (whitespace ignored, `x` products left-associative and flattened):
///
///   ring   := factor ("x" factor)*
///   factor := "Z" int | "M" int "(" ring ")" | "GR(" ring "," group ")"
///           | "TP(" ring "," int ")" | "Q(" ring ",[" elem-list "])"
///           | "corner(" ring "," elem ")"
///   group  := "C" int ("*" "C" int)*
///
/// Element literals: integers for Z_n, "(a,b)" tuples, "[[a,b],[c,d]]" matrices,
/// "<c0,c1,...>" group-ring / polynomial coefficients, or "#k" for index k.
RingSpec parse_ring_spec(std::string_view text);

/// involution := "id" | "swap" | "tr(" inv ")" | "grp(" inv ")" | "prod(" inv ("," inv)+ ")"
///             | "poly(" inv ")" | "quot(" inv ")" | "res(" inv ")" | "table:" filename
InvolutionSpec parse_involution_spec(std::string_view text);

}  // namespace starlab
