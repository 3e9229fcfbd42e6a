#include "arcwidom/complex_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "arcwidom/errors.hpp"

namespace arcwidom {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw DomainError("malformed complex literal: '" + std::string(whole) + "'");
  }
  // Decimal only: strtod would also take "inf", "nan" and hex floats.
  if (text.find_first_not_of("0123456789.eE+-") != std::string_view::npos) {
    throw DomainError("malformed complex literal: '" + std::string(whole) + "'");
  }
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) {
    throw DomainError("malformed complex literal: '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_complex(cplx value) {
  char buf[80];
  const double im = value.imag();
  if (std::signbit(im)) {
    std::snprintf(buf, sizeof buf, "%.17g-%.17gi", value.real(), -im);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g+%.17gi", value.real(), im);
  }
  return buf;
}

cplx parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw DomainError("empty complex literal");

  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  auto imag_part = [&](std::string_view part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, text);
  };

  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split), text), imag_part(body.substr(split))};
}

}  // namespace arcwidom
