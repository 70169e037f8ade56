#include "wps/cli/parse.hpp"

#include "wps/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace wps {

namespace {

constexpr std::uint32_t kMaxExponent = 100'000;
constexpr std::size_t kMaxTerms = 200'000;

RawPolynomial add(RawPolynomial a, const RawPolynomial& b, bool subtract) {
  for (const auto& [m, c] : b) {
    auto it = a.find(m);
    Rational v = subtract ? -c : c;
    if (it == a.end()) {
      a.emplace(m, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t count) : text_(text), count_(count), families_(variable_families(count)) {}

  RawPolynomial run() {
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    RawPolynomial r = expr();
    skip();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(Errc::ParseError, msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawPolynomial constant(const Rational& c) const {
    RawPolynomial r;
    if (!c.is_zero()) r.emplace(Monomial(count_, 0), c);
    return r;
  }

  RawPolynomial multiply(const RawPolynomial& a, const RawPolynomial& b) const {
    RawPolynomial out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (static_cast<std::uint64_t>(m[i]) + mb[i] > kMaxExponent) {
            throw ParseError(Errc::TooLarge, "exponent too large", pos_);
          }
          m[i] += mb[i];
        }
        auto it = out.find(m);
        if (it == out.end()) {
          out.emplace(m, ca * cb);
          if (out.size() > kMaxTerms) throw ParseError(Errc::TooLarge, "expression expands to too many terms", pos_);
        } else {
          it->second += ca * cb;
        }
      }
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
  }

  RawPolynomial expr() {
    RawPolynomial r = term();
    while (true) {
      if (accept('+')) {
        r = add(std::move(r), term(), false);
      } else if (accept('-')) {
        r = add(std::move(r), term(), true);
      } else {
        return r;
      }
    }
  }

  RawPolynomial term() {
    RawPolynomial r = unary();
    while (accept('*')) r = multiply(r, unary());
    return r;
  }

  RawPolynomial unary() {
    if (accept('-')) return add({}, unary(), true);
    if (accept('+')) return unary();
    return power();
  }

  RawPolynomial power() {
    RawPolynomial base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t at = pos_;
    BigInt e = integer();
    if (e > kMaxExponent) throw ParseError(Errc::TooLarge, "exponent too large", at);
    auto k = e.convert_to<std::uint32_t>();
    RawPolynomial result = constant(Rational(1));
    RawPolynomial b = base;
    while (k != 0) {
      if (k & 1U) result = multiply(result, b);
      k >>= 1U;
      if (k != 0) b = multiply(b, b);
    }
    return result;
  }

  BigInt integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 200) throw ParseError(Errc::TooLarge, "integer literal too long", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  RawPolynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RawPolynomial r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          std::size_t at = pos_;
          BigInt den = integer();
          if (den == 0) throw ParseError(Errc::DivisionByZero, "zero denominator", at);
          return constant(Rational(num, den));
        }
        pos_ = save;
        fail("division is only allowed inside a num/den literal");
      }
      return constant(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  RawPolynomial variable() {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::optional<std::size_t> index;
    if (name.size() > 1 && name[0] == 'x') {
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
      if (ec == std::errc() && ptr == name.data() + name.size() && k < count_) index = k;
    } else {
      for (std::size_t f = 0; f < families_.size() && !index; ++f) {
        for (std::size_t i = 0; i < families_[f].size(); ++i) {
          if (families_[f][i] != name) continue;
          if (family_ && *family_ != f) {
            throw ParseError(Errc::UnknownVariable, "variable '" + name + "' mixes naming families", start);
          }
          index = i;
          family_ = f;
          break;
        }
      }
    }
    if (!index) throw ParseError(Errc::UnknownVariable, "unknown variable '" + name + "'", start);
    Monomial m(count_, 0);
    m[*index] = 1;
    RawPolynomial r;
    r.emplace(m, Rational(1));
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t count_;
  std::vector<std::vector<std::string>> families_;
  std::optional<std::size_t> family_;
};

}  // namespace

std::vector<std::vector<std::string>> variable_families(std::size_t count) {
  switch (count) {
    case 1: return {{"t"}, {"x"}};
    case 2: return {{"x", "y"}, {"s", "t"}, {"u", "v"}};
    case 3: return {{"x", "y", "z"}, {"r", "s", "t"}, {"u", "v", "w"}};
    case 4: return {{"w", "x", "y", "z"}};
    default: return {};
  }
}

RawPolynomial parse_raw(std::string_view text, std::size_t variable_count) {
  return Parser(text, variable_count).run();
}

WPolynomial parse_polynomial(std::string_view text, const Weight& weight, const Field& field) {
  RawPolynomial raw = parse_raw(text, weight.size());
  WPolynomial f(weight, field);
  for (const auto& [m, c] : raw) f.add_term(m, Scalar::from_rational(field, c));
  return f;
}

std::vector<BigInt> parse_integer_univariate(std::string_view text) {
  RawPolynomial raw = parse_raw(text, 1);
  std::vector<BigInt> out;
  for (const auto& [m, c] : raw) {
    if (!c.is_integer()) throw Error(Errc::InvalidArgument, "numerator coefficients must be integers");
    if (out.size() <= m[0]) out.resize(m[0] + 1, 0);
    out[m[0]] = c.numerator();
  }
  return out;
}

std::vector<std::int64_t> parse_positive_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == text.npos ? text.npos : comma - start);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || v < 1) {
      throw Error(Errc::InvalidWeight, "malformed positive integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace wps
