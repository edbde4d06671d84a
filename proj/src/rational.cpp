#include "ricci_orbit/rational.hpp"

#include <cctype>

#include "ricci_orbit/errors.hpp"

namespace ricci_orbit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInteger parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidInput("not an integer: '" + std::string(s) + "'");
  BigInteger out(std::string(s), 10);
  return negative ? BigInteger(-out) : out;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') throw InvalidInput("negative denominator");
    BigInteger den = parse_integer(den_text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    BigRational out(num, den);
    out.canonicalize();
    return out;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || !all_digits(frac_part)) {
      throw InvalidInput("not a decimal: '" + std::string(text) + "'");
    }
    BigInteger scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    BigInteger digits(std::string(int_part) + std::string(frac_part), 10);
    BigRational out(negative ? BigInteger(-digits) : digits, scale);
    out.canonicalize();
    return out;
  }

  return BigRational(parse_integer(text));
}

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ricci_orbit
