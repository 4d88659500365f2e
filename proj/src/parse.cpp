#include "rrtrop/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rrtrop/error.hpp"

namespace rrtrop {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::size_t ds = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        num += "/" + std::string(text_.substr(ds, pos_ - ds));
      }
      Rational q(num);
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (trim(text).empty()) throw ParseError("empty polynomial");
  return Parser(text, ring).parse();
}

Rational parse_rational(std::string_view text) {
  std::string s(trim(text));
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digits = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k])))
      digits = true;
    else if (s[k] == '/' && !slash && digits)
      slash = true;
    else
      throw ParseError("malformed rational '" + s + "'");
  }
  if (!digits || s.back() == '/') throw ParseError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

WeightVector parse_weight(std::string_view text) {
  std::vector<Rational> v;
  for (auto part : split_commas(strip_parens(text))) v.push_back(parse_rational(part));
  return WeightVector(std::move(v));
}

SignVector parse_signs(std::string_view text) {
  std::vector<int> v;
  for (auto part : split_commas(strip_parens(text))) {
    Rational q = parse_rational(part);
    if (q != 1 && q != -1) throw ParseError("orthant entries must be +1 or -1");
    v.push_back(q > 0 ? 1 : -1);
  }
  return SignVector(std::move(v));
}

PolynomialFile parse_polynomial_file(std::string_view text) {
  PolynomialFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    if (!file.ring) {
      if (l.substr(0, 5) != "vars:") throw ParseError("input must start with a 'vars:' header");
      std::vector<std::string> names;
      for (auto part : split_commas(l.substr(5))) {
        if (part.empty()) continue;
        if (!std::isalpha(static_cast<unsigned char>(part.front())))
          throw ParseError("bad variable name '" + std::string(part) + "'");
        for (char c : part)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw ParseError("bad variable name '" + std::string(part) + "'");
        names.emplace_back(part);
      }
      if (names.empty()) throw ParseError("'vars:' header declares no variables");
      file.ring = make_ring(std::move(names));
      continue;
    }
    file.polynomials.push_back(parse_polynomial(l, file.ring));
  }
  if (!file.ring) throw ParseError("input must start with a 'vars:' header");
  return file;
}

PolynomialFile read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polynomial_file(buf.str());
}

std::string format_polynomial_file(const PolynomialFile& file) {
  std::string s = "vars: ";
  for (std::size_t i = 0; i < file.ring->size(); ++i) s += (i ? ", " : "") + file.ring->name(i);
  s += "\n";
  for (const auto& p : file.polynomials) s += to_string(p) + "\n";
  return s;
}

}  // namespace rrtrop
