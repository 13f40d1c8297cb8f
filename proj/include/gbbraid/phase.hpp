#ifndef GBBRAID_PHASE_HPP
#define GBBRAID_PHASE_HPP

#include <cstdint>
#include <string>

namespace gbbraid {

// A root of unity e^{2 pi i q}, stored exactly as the reduced rational
// q = num/den in [0,1).  Multiplying phases adds the exponents mod 1, so the
// arithmetic below is written additively.  All computation in the library is
// exact; nothing is ever converted to floating point.
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Phase zero() { return {}; }
  // e^{2 pi i * num/den}; any integers accepted, reduced mod 1.
  static Phase of(std::int64_t num, std::int64_t den);
  static Phase half() { return {1, 2}; }

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }
  // k-fold sum of this phase (exponent times k).
  Phase times(std::int64_t k) const;

  bool is_zero() const { return num == 0; }
  bool operator==(const Phase&) const = default;

  // Reduced "num/den" form, e.g. "0/1", "1/2", "3/4".
  std::string str() const;
  // Accepts "num/den" or a bare integer; reduces mod 1.
  static Phase parse(const std::string& s);
};

}  // namespace gbbraid

#endif
