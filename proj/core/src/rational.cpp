#include "circlet/rational.hpp"

#include <cctype>

#include "circlet/errors.hpp"

namespace circlet {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw DomainError("not a machine integer: " + r.get_str());
  return r.get_num().get_si();
}

}  // namespace circlet
