#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace arcwidom {

using cplx = std::complex<double>;

/// Formats a complex number as "a+bi" / "a-bi" with 17 significant digits,
/// enough for an exact round trip through parse_complex.
std::string format_complex(cplx value);

/// Formats a real with 17 significant digits.
std::string format_real(double value);

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (exponents allowed in either part).
/// Throws DomainError on malformed input.
cplx parse_complex(std::string_view text);

}  // namespace arcwidom
