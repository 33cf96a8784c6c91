#include "bentcode/constructions/poly.hpp"

#include <cctype>
#include <limits>

namespace bentcode {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  PolyExpr run() {
    PolyExpr out{n_, {}};
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      auto t = term();
      t.coeff = Trit(sign * t.coeff).value();
      out.terms.push_back(std::move(t));
      skip();
      if (pos_ == text_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long long integer() {
    skip();
    const auto start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > std::numeric_limits<int>::max() / 10) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  bool starts_factor() {
    skip();
    const char c = peek();
    return c == 'x' || std::isdigit(static_cast<unsigned char>(c));
  }

  Monomial term() {
    Monomial m{1, std::vector<int>(n_, 0)};
    if (!starts_factor()) throw ParseError("expected term", pos_);
    while (true) {
      factor(m);
      skip();
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) throw ParseError("expected factor after '*'", pos_);
        continue;
      }
      if (!starts_factor()) break;
    }
    return m;
  }

  void factor(Monomial& m) {
    skip();
    if (peek() != 'x') {
      m.coeff = Trit(m.coeff * static_cast<int>(integer() % 3)).value();
      return;
    }
    const auto at = pos_;
    ++pos_;
    if (peek() == '_') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("malformed variable", at);
    const auto k = integer();
    if (k < 1 || k > n_) throw ParseError("unknown variable x" + std::to_string(k), at);
    long long e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("malformed exponent", pos_);
      e = integer();
    }
    m.exps[k - 1] += static_cast<int>(e);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

int trit_pow(int base, int e) {
  if (e == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  return e % 2 == 0 ? 1 : 2;
}

}  // namespace

PolyExpr parse_poly(std::string_view text, int n) {
  require_dimension(n, kHardMaxDimension);
  return Parser(text, n).run();
}

TernaryFunction eval_poly(const PolyExpr& e) {
  std::vector<std::uint8_t> digits(e.n);
  return TernaryFunction::tabulate(e.n, [&](std::uint32_t x) {
    decode_index(x, e.n, digits);
    int acc = 0;
    for (const auto& t : e.terms) {
      int v = t.coeff;
      for (int i = 0; i < e.n && v != 0; ++i) v = v * trit_pow(digits[i], t.exps[i]) % 3;
      acc += v;
    }
    return acc;
  });
}

}  // namespace bentcode
