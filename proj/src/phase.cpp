#include "gbbraid/phase.hpp"

#include <charconv>
#include <numeric>

#include "gbbraid/errors.hpp"

namespace gbbraid {

namespace {

// Denominators stay small in practice (lcm of the input denominators); the
// guard catches pathological tables before int64 arithmetic can overflow.
constexpr std::int64_t kMaxDen = 2'000'000'000;

Phase reduced(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ValidationError("phase denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  return Phase{num / g, den / g};
}

}  // namespace

Phase Phase::of(std::int64_t num, std::int64_t den) { return reduced(num, den); }

Phase Phase::operator+(const Phase& o) const {
  std::int64_t g = std::gcd(den, o.den);
  std::int64_t lcm = den / g * o.den;
  if (lcm > kMaxDen) throw ValidationError("phase denominator overflow");
  return reduced(num * (lcm / den) + o.num * (lcm / o.den), lcm);
}

Phase Phase::operator-() const { return reduced(-num, den); }

Phase Phase::times(std::int64_t k) const {
  std::int64_t r = ((k % den) + den) % den;
  return reduced(num * r, den);
}

std::string Phase::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Phase Phase::parse(const std::string& s) {
  auto parse_int = [&](const char* b, const char* e) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e)
      throw ValidationError("bad phase literal \"" + s + "\"");
    return v;
  };
  const char* b = s.data();
  const char* e = b + s.size();
  auto slash = s.find('/');
  if (slash == std::string::npos) return reduced(parse_int(b, e), 1);
  std::int64_t num = parse_int(b, b + slash);
  std::int64_t den = parse_int(b + slash + 1, e);
  if (den <= 0 || den > kMaxDen)
    throw ValidationError("bad phase denominator in \"" + s + "\"");
  return reduced(num, den);
}

}  // namespace gbbraid
