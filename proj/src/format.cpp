#include "powmat/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace powmat {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  const std::string s = strip(text);
  const auto caret = s.find('^');
  FieldSpec spec;
  const auto limit = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t p = parse_uint(std::string_view(s).substr(0, caret), "field characteristic");
  if (p > limit) throw ParseError("field characteristic too large");
  spec.p = static_cast<std::uint32_t>(p);
  if (caret != std::string::npos) {
    const std::uint64_t n = parse_uint(std::string_view(s).substr(caret + 1), "extension degree");
    if (n == 0 || n > 64) throw ParseError("extension degree must be in [1, 64]");
    spec.n = static_cast<std::uint32_t>(n);
  }
  return spec;
}

std::vector<std::uint32_t> parse_modulus(std::string_view text) {
  const std::string s = strip(text);
  std::vector<std::uint32_t> out;
  for (auto part : split(s, ',')) {
    const std::uint64_t v = parse_uint(part, "modulus coefficient");
    if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError("modulus coefficient too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

Elem parse_element(const Field& field, std::string_view text) {
  const std::uint64_t v = parse_uint(strip(text), "field element");
  if (v >= field->q()) {
    throw ParseError(std::to_string(v) + " is not an element of F_" + std::to_string(field->q()));
  }
  return Elem{static_cast<std::uint32_t>(v)};
}

ParsedPoly parse_poly(const Field& field, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  const FieldCtx& F = *field;

  if (s.find('x') == std::string::npos) {
    std::vector<Elem> raw;
    for (auto part : split(s, ',')) raw.push_back(parse_element(field, part));
    return ParsedPoly{reduce(field, raw), PolyFormat::Coefficients};
  }

  std::vector<Elem> raw;
  for (auto term : split(s, '+')) {
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    const auto x = term.find('x');
    Elem coeff = F.one();
    std::uint64_t exponent = 0;
    if (x == std::string_view::npos) {
      coeff = parse_element(field, term);
    } else {
      if (x > 0) coeff = parse_element(field, term.substr(0, x));
      const auto rest = term.substr(x + 1);
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^') {
        exponent = parse_uint(rest.substr(1), "exponent");
      } else {
        throw ParseError("unexpected '" + std::string(rest) + "' after x");
      }
    }
    if (exponent > (std::uint64_t{1} << 24)) throw ParseError("exponent too large");
    // Fold right away so huge exponents do not allocate.
    const std::uint64_t q = F.q();
    const std::size_t idx = exponent < q ? exponent : 1 + (exponent - 1) % (q - 1);
    if (raw.size() <= idx) raw.resize(idx + 1, F.zero());
    raw[idx] = F.add(raw[idx], coeff);
  }
  return ParsedPoly{reduce(field, raw), PolyFormat::Monomial};
}

std::string format_poly(const ReducedPoly& f, PolyFormat format) {
  const auto degree = f.degree();
  if (!degree) return "0";
  std::string out;
  if (format == PolyFormat::Coefficients) {
    for (std::size_t i = 0; i <= *degree; ++i) {
      if (i > 0) out += ',';
      out += std::to_string(f[i].value);
    }
    return out;
  }
  for (std::size_t i = 0; i <= *degree; ++i) {
    if (f[i].value == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(f[i].value);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string format_element(const FieldCtx& field, Elem e, bool pretty) {
  if (!pretty || field.n() == 1) return std::to_string(e.value);
  const auto d = field.digits(e);
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_matrix(const Matrix& a, bool pretty) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_element(*a.field(), a(i, j), pretty);
    }
    out += '\n';
  }
  return out;
}

}  // namespace powmat
