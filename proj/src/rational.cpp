#include "pph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pph {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> try_parse_rational(const std::string& token) {
  std::string s = token;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rat q(mpz_class(num), d);
    q.canonicalize();
    return negative ? Rat(-q) : q;
  }

  auto dot = s.find('.');
  std::string int_part = (dot == std::string::npos) ? s : s.substr(0, dot);
  std::string frac_part = (dot == std::string::npos) ? "" : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  mpz_class numerator(int_part.empty() ? std::string("0") : int_part);
  mpz_class denominator(1);
  for (char c : frac_part) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  Rat q(numerator, denominator);
  q.canonicalize();
  return negative ? Rat(-q) : q;
}

Rat parse_rational(const std::string& token) {
  auto q = try_parse_rational(token);
  if (!q) throw std::invalid_argument("unparsable rational token '" + token + "'");
  return *q;
}

std::string rational_to_string(const Rat& value) {
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();

  // Strip the factors of 2 and 5; only those admit a finite decimal.
  mpz_class rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  unsigned k = std::max(twos, fives);
  if (k == 0) return num.get_str();

  mpz_class pow10(1);
  for (unsigned i = 0; i < k; ++i) pow10 *= 10;
  mpz_class scaled = num * (pow10 / den);

  bool negative = scaled < 0;
  mpz_class mag = negative ? mpz_class(-scaled) : scaled;
  std::string digits = mag.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');

  std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return negative ? "-" + out : out;
}

Rat rational_u32_over_2pow32(std::uint64_t numerator) {
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(numerator), 0, 0, &numerator);
  mpz_class den(1);
  den <<= 32;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace pph
