#include "carlitz/element_io.hpp"

#include <cctype>
#include <charconv>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

std::string term_text(const QExp& e, FqElem c) {
  const std::string coeff = std::to_string(static_cast<unsigned>(c.v));
  if (e.is_zero()) return coeff;
  std::string s = c.v == 1 ? "" : coeff + "*";
  return s + "x^(" + e.to_string() + ")";
}

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool at_digit() {
    skip_ws();
    return i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-');
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc()) fail("expected integer");
    i = static_cast<std::size_t>(p - s.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("parse_element: " + what + " at offset " + std::to_string(i) + " in '" +
                          std::string(s) + "'");
  }
};

// Returns (exponent numerator, denominator) of "x^(n/Q)", "x^n" or "x".
std::pair<std::int64_t, std::int64_t> parse_power(Cursor& c) {
  if (!c.eat('x')) c.fail("expected 'x'");
  if (!c.eat('^')) return {1, 1};
  const bool paren = c.eat('(');
  const std::int64_t n = c.integer();
  std::int64_t d = 1;
  if (c.eat('/')) d = c.integer();
  if (paren && !c.eat(')')) c.fail("expected ')'");
  return {n, d};
}

PerfectPoly parse_poly(const Field& f, Cursor& c) {
  std::vector<std::tuple<std::int64_t, std::int64_t, FqElem>> terms;
  do {
    FqElem coeff = f.one();
    std::int64_t n = 0, d = 1;
    if (c.at_digit()) {
      const std::int64_t v = c.integer();
      if (v < 0 || v >= static_cast<std::int64_t>(f.q())) c.fail("coefficient code out of range");
      coeff = FqElem{static_cast<std::uint8_t>(v)};
      if (c.eat('*')) std::tie(n, d) = parse_power(c);
    } else if (c.peek('x')) {
      std::tie(n, d) = parse_power(c);
    } else {
      c.fail("expected term");
    }
    if (n < 0 || d <= 0) c.fail("bad exponent");
    terms.emplace_back(n, d, coeff);
  } while (c.eat('+'));

  PerfectPoly out(f);
  for (const auto& [n, d, coeff] : terms) {
    std::uint32_t level = 0;
    std::int64_t dd = d;
    while (dd > 1) {
      if (dd % f.q() != 0) throw InvalidArgument("parse_element: exponent denominator is not a power of q");
      dd /= f.q();
      ++level;
    }
    out = out + PerfectPoly::monomial(f, QExp(n, level, f.q()), coeff);
  }
  return out;
}

FqPoly poly_from_json(const Field& f, const nlohmann::json& arr) {
  if (!arr.is_array()) throw InvalidArgument("element json: expected term array");
  std::vector<std::pair<std::size_t, FqElem>> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 2) throw InvalidArgument("element json: term must be [n, c]");
    const auto n = t[0].get<std::int64_t>();
    const auto c = t[1].get<std::int64_t>();
    if (n < 0) throw InvalidArgument("element json: negative exponent");
    if (c < 0 || c >= static_cast<std::int64_t>(f.q())) throw InvalidArgument("element json: coefficient out of range");
    terms.emplace_back(static_cast<std::size_t>(n), FqElem{static_cast<std::uint8_t>(c)});
  }
  return FqPoly::from_terms(f, terms);
}

nlohmann::json poly_to_json(const FqPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) arr.push_back({i, static_cast<unsigned>(c[i])});
  return arr;
}

}  // namespace

std::string to_text(const PerfectPoly& p) {
  if (p.is_zero()) return "0";
  const auto terms = p.terms();
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_text(it->first, it->second);
  }
  return out;
}

std::string to_text(const PerfectRational& r) {
  if (r.is_zero()) return "0";
  if (r.is_polynomial()) return to_text(r.num());
  return "(" + to_text(r.num()) + ")/(" + to_text(r.den()) + ")";
}

PerfectRational parse_element(const Field& f, std::string_view text) {
  Cursor c{text};
  PerfectPoly num(f), den = PerfectPoly::constant(f, f.one());
  if (c.eat('(')) {
    num = parse_poly(f, c);
    if (!c.eat(')')) c.fail("expected ')'");
    if (c.eat('/')) {
      if (!c.eat('(')) c.fail("expected '('");
      den = parse_poly(f, c);
      if (!c.eat(')')) c.fail("expected ')'");
    }
  } else {
    num = parse_poly(f, c);
  }
  c.skip_ws();
  if (c.i != text.size()) c.fail("trailing input");
  return PerfectRational(num, den);
}

nlohmann::json to_json(const PerfectRational& r) {
  if (r.is_zero()) return {{"level", 0}, {"num", nlohmann::json::array()}, {"den", {{0, 1}}}};
  const std::uint32_t e = r.level();
  return {{"level", e}, {"num", poly_to_json(r.num().lifted(e))}, {"den", poly_to_json(r.den().lifted(e))}};
}

PerfectRational element_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("num") || !j.contains("den"))
    throw InvalidArgument("element json: expected {level, num, den}");
  const auto level = j.at("level").get<std::uint32_t>();
  return PerfectRational(PerfectPoly(poly_from_json(f, j.at("num")), level),
                         PerfectPoly(poly_from_json(f, j.at("den")), level));
}

}  // namespace carlitz
