#ifndef CMW_BASICS_HPP
#define CMW_BASICS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cmw {

// Error taxonomy; the CLI maps these onto exit codes.
enum class ErrorKind {
  parse,      // lexical / syntactic / binding / semantic input errors (exit 2)
  kernel,     // domain errors: ring mismatch, zero module, beyond-bound (exit 3)
  internal,   // broken invariant inside the kernel — always a bug (exit 3)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorKind::parse, msg); }
[[noreturn]] inline void fail_kernel(const std::string& msg) { throw Error(ErrorKind::kernel, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(ErrorKind::internal, "internal error: " + msg);
}

#define CMW_CHECK(cond, msg) \
  do {                       \
    if (!(cond)) ::cmw::fail_internal(msg); \
  } while (0)

// FNV-1a, used for content fingerprints (cache keys, determinism tests).
class Fnv1a {
 public:
  void feed(std::string_view s) {
    for (unsigned char ch : s) {
      h_ ^= ch;
      h_ *= 1099511628211ull;
    }
  }
  void feed_int(int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= static_cast<unsigned char>(v >> (8 * i));
      h_ *= 1099511628211ull;
    }
  }
  uint64_t value() const { return h_; }

 private:
  uint64_t h_ = 1469598103934665603ull;
};

std::string hex64(uint64_t v);

}  // namespace cmw

#endif
