#ifndef CMW_VERSION_HPP
#define CMW_VERSION_HPP

namespace cmw {
inline constexpr const char* kToolName = "cmw";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kJsonSchema = 1;
}  // namespace cmw

#endif
