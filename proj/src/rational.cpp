#include "treepack/rational.hpp"

#include <cctype>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw CheckError("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_), Rational::Canonical{});
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto fail = [&]() -> Rational {
    throw InputError("invalid rational literal '" + std::string(text) + "'");
  };

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) return fail();
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart = s.substr(dot + 1);
    if (!all_digits(ipart) || !all_digits(fpart)) return fail();
    mpz_class num(std::string(ipart) + std::string(fpart), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fpart.size());
    value = mpq_class(num, den);
  } else {
    if (!all_digits(s)) return fail();
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value, Canonical{});
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace treepack
