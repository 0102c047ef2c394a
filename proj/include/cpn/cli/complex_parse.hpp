#pragma once

#include <string>
#include <string_view>

#include "cpn/state.hpp"

namespace cpn::cli {

// Complex literals on the command line:
//
//   number  := real | imag | real sign imag-body
//   imag    := [sign] [unsigned-real] ('i' | 'j')
//   list    := number (',' number)*
//
// Reals use the usual decimal/exponent syntax ("1", "-2.5e-3").  Whitespace
// around tokens is ignored.  Examples: "1", "-i", "0.5+2i", "1e-3-4.5e2j".

Complex parse_complex(std::string_view token);
Amplitudes parse_amplitudes(std::string_view list);

/// Shortest round-trippable "a+bi" form.
std::string format_complex(Complex z);
std::string format_amplitudes(const Amplitudes& z);

}  // namespace cpn::cli
