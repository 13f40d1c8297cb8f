#ifndef GBBRAID_ERRORS_HPP
#define GBBRAID_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gbbraid {

// Error categories map onto CLI exit codes:
//   ValidationError -> 1, SizeLimitError -> 2, InternalError -> 3.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An InternalError means a proven invariant failed at runtime; it is a bug,
// not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

struct NonAssociative : ValidationError {
  int a, b, c;
  NonAssociative(int a_, int b_, int c_)
      : ValidationError("multiplication table is not associative at triple (" +
                        std::to_string(a_) + "," + std::to_string(b_) + "," +
                        std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct NoIdentity : ValidationError {
  NoIdentity() : ValidationError("multiplication table has no two-sided identity") {}
};

struct NoInverse : ValidationError {
  int element;
  explicit NoInverse(int e)
      : ValidationError("element " + std::to_string(e) + " has no two-sided inverse"),
        element(e) {}
};

struct UnknownFamily : ValidationError {
  std::string family;
  explicit UnknownFamily(const std::string& f)
      : ValidationError("unknown group family \"" + f + "\""), family(f) {}
};

struct ElementNotInSubgroup : ValidationError {
  int element;
  explicit ElementNotInSubgroup(int e)
      : ValidationError("element " + std::to_string(e) + " is not in the subgroup"),
        element(e) {}
};

struct CocycleViolation : ValidationError {
  int a, b, c, d;
  CocycleViolation(int a_, int b_, int c_, int d_)
      : ValidationError("3-cocycle identity fails at quadruple (" + std::to_string(a_) +
                        "," + std::to_string(b_) + "," + std::to_string(c_) + "," +
                        std::to_string(d_) + ")"),
        a(a_), b(b_), c(c_), d(d_) {}
};

struct NotNormalized : ValidationError {
  explicit NotNormalized(const std::string& msg) : ValidationError(msg) {}
};

struct CoboundaryViolation : ValidationError {
  int a, b, c;
  CoboundaryViolation(int a_, int b_, int c_, const std::string& detail)
      : ValidationError("coboundary condition delta(gamma) = omega|_H fails at (" +
                        std::to_string(a_) + "," + std::to_string(b_) + "," +
                        std::to_string(c_) + "): " + detail),
        a(a_), b(b_), c(c_) {}
};

struct SubgroupNotNormal : ValidationError {
  SubgroupNotNormal() : ValidationError("subgroup is not normal in the parent group") {}
};

struct NontrivialOmega : ValidationError {
  NontrivialOmega() : ValidationError("operation requires the trivial 3-cocycle") {}
};

struct SizeLimitExceeded : SizeLimitError {
  std::uint64_t requested, cap;
  SizeLimitExceeded(std::uint64_t req, std::uint64_t cap_)
      : SizeLimitError("size limit exceeded: " + std::to_string(req) +
                       " > cap " + std::to_string(cap_)),
        requested(req), cap(cap_) {}
};

struct IndexOutOfRange : ValidationError {
  explicit IndexOutOfRange(const std::string& msg) : ValidationError(msg) {}
};

struct TargetNotRegular : InternalError {
  explicit TargetNotRegular(const std::string& msg) : InternalError(msg) {}
};

struct MixedAmbientData : ValidationError {
  explicit MixedAmbientData(const std::string& msg) : ValidationError(msg) {}
};

// Outcome of a verification pass; `detail` names the first witness on failure.
struct CheckReport {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
  static CheckReport pass() { return {true, ""}; }
  static CheckReport fail(std::string d) { return {false, std::move(d)}; }
};

}  // namespace gbbraid

#endif
