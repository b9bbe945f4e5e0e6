#include "mvlift/sysio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mvlift/error.hpp"

namespace mvlift {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t base_offset, std::size_t line, const std::vector<std::string>& vars)
      : text_(text), base_(base_offset), line_(line), vars_(vars) {}

  LaurentPolynomial parse_line() {
    skip_space();
    if (at_end()) fail("expected an expression");
    LaurentPolynomial p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(base_ + pos, line_, pos + 1, message);
  }

 private:
  bool at_end() const { return pos_ >= text_.size() || text_[pos_] == '#'; }
  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }
  LaurentPolynomial constant(const GaussianRational& c) const { return LaurentPolynomial::constant(vars_.size(), c); }

  LaurentPolynomial expression() {
    LaurentPolynomial acc(vars_.size());
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      LaurentPolynomial t = term();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }

  LaurentPolynomial term() {
    LaurentPolynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        LaurentPolynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail_at(at, "divisor must be a nonzero constant");
        acc = acc * d.coefficient(Exponent(vars_.size(), 0)).inverse();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  LaurentPolynomial factor() {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      LaurentPolynomial f = factor();
      return c == '-' ? -f : f;
    }
    std::size_t at = pos_;
    LaurentPolynomial b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > 6) fail_at(start, "exponent too large");
    auto e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (!negative) return b.pow(e);
    if (!b.is_monomial()) fail_at(at, "negative power of a non-monomial");
    const auto& [exp, coef] = *b.terms().begin();
    return LaurentPolynomial::monomial(vars_.size(), scaled(exp, -1), coef.inverse()).pow(e);
  }

  LaurentPolynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPolynomial e = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("floating-point literals are not allowed");
      return constant(GaussianRational(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return constant(GaussianRational::i());
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == name) return LaurentPolynomial::variable(vars_.size(), k);
      fail_at(start, "unknown variable '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t line_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  Parser parser(text, 0, 1, variables);
  LaurentPolynomial p = parser.parse_line();
  if (p.is_zero()) throw ParseError(0, 1, 1, "polynomial is zero after collecting terms");
  return p;
}

PolySystem parse_system(std::string_view text) {
  std::vector<std::string> vars;
  std::vector<LaurentPolynomial> polys;
  bool have_header = false;
  std::size_t offset = 0, line_no = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    ++line_no;
    std::string_view content = strip_comment(line);
    if (!is_blank(content)) {
      if (!have_header) {
        std::size_t lead = 0;
        while (lead < content.size() && std::isspace(static_cast<unsigned char>(content[lead]))) ++lead;
        if (content.substr(lead, 5) != "vars:") throw ParseError(offset + lead, line_no, lead + 1, "expected 'vars:' header");
        std::size_t pos = lead + 5;
        while (pos < content.size()) {
          while (pos < content.size() && std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
          if (pos >= content.size()) break;
          std::size_t start = pos;
          while (pos < content.size() && !std::isspace(static_cast<unsigned char>(content[pos]))) ++pos;
          std::string name(content.substr(start, pos - start));
          if (!is_identifier(name)) throw ParseError(offset + start, line_no, start + 1, "invalid variable name '" + name + "'");
          if (name == "i") throw ParseError(offset + start, line_no, start + 1, "'i' is reserved for the imaginary unit");
          for (const auto& v : vars)
            if (v == name) throw ParseError(offset + start, line_no, start + 1, "duplicate variable '" + name + "'");
          vars.push_back(name);
        }
        if (vars.empty()) throw ParseError(offset + lead + 5, line_no, lead + 6, "expected at least one variable");
        have_header = true;
      } else {
        Parser parser(line, offset, line_no, vars);
        LaurentPolynomial p = parser.parse_line();
        if (p.is_zero()) throw ParseError(offset, line_no, 1, "polynomial is zero after collecting terms");
        polys.push_back(std::move(p));
      }
    }
    if (end == text.size()) break;
    offset = end + 1;
  }
  if (!have_header) throw ParseError(text.size(), line_no == 0 ? 1 : line_no, 1, "missing 'vars:' header");
  return PolySystem(std::move(vars), std::move(polys));
}

namespace {

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

std::string term_text(const Exponent& e, const GaussianRational& c, const std::vector<std::string>& vars) {
  std::string mono = monomial_text(e, vars);
  if (mono.empty()) return c.to_string();
  if (c == GaussianRational(1)) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

std::string format_polynomial(const LaurentPolynomial& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string t = term_text(e, c, variables);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string serialize_system(const PolySystem& sys, const std::vector<std::string>& comments) {
  std::string out = "vars:";
  for (const auto& v : sys.variables()) out += " " + v;
  out += "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& p : sys.polynomials()) out += format_polynomial(p, sys.variables()) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace mvlift
