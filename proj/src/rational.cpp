#include <cctype>

#include "hurwitz/errors.hpp"
#include "hurwitz/scalar.hpp"

namespace hurwitz {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw ArgumentError("malformed rational \"" + std::string(text) + "\"");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  Rational out{mpz_class{std::string(num)}, mpz_class{std::string(den)}};
  if (out.get_den() == 0) throw ArgumentError("zero denominator in \"" + std::string(text) + "\"");
  out.canonicalize();
  return out;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hurwitz
