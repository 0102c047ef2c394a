#include "cpn/cli/complex_parse.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace cpn::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_token(std::string_view token) {
  throw Error(ErrorCode::InvalidArgument, "cannot parse complex number '" + std::string(token) + "'");
}

double parse_real(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) bad_token(token);
  return value;
}

// Coefficient of an imaginary part: "", "+", "-" stand for ±1.
double parse_imag(std::string_view s, std::string_view token) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, token);
}

// Position of the sign separating real and imaginary parts, if any.
std::size_t split_position(std::string_view body) {
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') return k;
  }
  return std::string_view::npos;
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

Complex parse_complex(std::string_view token) {
  const std::string_view s = trim(token);
  if (s.empty()) bad_token(token);
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, token), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  const std::size_t split = split_position(body);
  if (split == std::string_view::npos) return {0.0, parse_imag(body, token)};
  return {parse_real(body.substr(0, split), token), parse_imag(body.substr(split), token)};
}

Amplitudes parse_amplitudes(std::string_view list) {
  std::vector<Complex> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    values.push_back(parse_complex(list.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Amplitudes z(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) z[static_cast<Eigen::Index>(k)] = values[k];
  return z;
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  const std::string sign = std::signbit(im) ? "-" : "+";
  return format_real(z.real()) + sign + format_real(std::abs(im)) + "i";
}

std::string format_amplitudes(const Amplitudes& z) {
  std::string out;
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (k) out += ',';
    out += format_complex(z[k]);
  }
  return out;
}

}  // namespace cpn::cli
