#include "gkmin/text_format.hpp"

#include <cctype>
#include <string>

#include "gkmin/error.hpp"

namespace gkmin {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token[0] == '+') token.erase(0, 1);
    return mpz_class(token, 10);
  }

  Rational rational() {
    skip_space();
    const mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      skip_space();
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) {
        pos_ = at;
        fail("zero denominator");
      }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void finish() {
    if (!done()) fail("unexpected trailing input");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  Rational r = cur.rational();
  cur.finish();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  Cursor cur(text);
  std::vector<Rational> out;
  do {
    out.push_back(cur.rational());
  } while (cur.accept(','));
  cur.finish();
  return out;
}

Permutation parse_permutation(std::string_view text) {
  Cursor cur(text);
  std::vector<int> images;
  do {
    const std::size_t at = (cur.skip_space(), cur.pos());
    const mpz_class v = cur.integer();
    if (!v.fits_sint_p() || v < 1 || v > Permutation::kMaxDegree) {
      throw ParseError("permutation entry out of range", at);
    }
    images.push_back(static_cast<int>(v.get_si()));
  } while (cur.accept(','));
  cur.finish();
  return Permutation(std::move(images));
}

WeightVector parse_weight(std::string_view text) {
  auto values = parse_rational_list(text);
  if (values.size() % 2 != 0) {
    throw ParseError("weight needs an even number 2n of coordinates, got " + std::to_string(values.size()),
                     text.size());
  }
  const auto n = static_cast<std::ptrdiff_t>(values.size() / 2);
  return WeightVector(std::vector<Rational>(values.begin(), values.begin() + n),
                      std::vector<Rational>(values.begin() + n, values.end()));
}

LanglandsParameter parse_parameter(std::string_view text) {
  Cursor cur(text);
  std::vector<Character> chars;
  do {
    cur.skip_space();
    const std::size_t at = cur.pos();
    Rational a = cur.rational();
    cur.expect(':');
    Rational b = cur.rational();
    try {
      chars.emplace_back(std::move(a), std::move(b));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
  } while (cur.accept(';'));
  cur.finish();
  return LanglandsParameter(std::move(chars));
}

} // namespace gkmin
