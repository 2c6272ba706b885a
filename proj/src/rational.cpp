#include "propclust/rational.hpp"

#include <charconv>
#include <cstdint>

#include "propclust/error.hpp"

namespace propclust {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error("invalid number", "cannot parse '" + std::string(whole) + "' as a rational");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error("invalid number", "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (fp.size() > 15) throw Error("invalid number", "too many decimals in '" + std::string(text) + "'");
    bool negative = !ip.empty() && ip.front() == '-';
    if (negative) ip.remove_prefix(1);
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip, text);
    std::int64_t frac = fp.empty() ? 0 : parse_int(fp, text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    Rational r = Rational(whole) + Rational(frac, den);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace propclust
