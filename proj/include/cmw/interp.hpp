#ifndef CMW_INTERP_HPP
#define CMW_INTERP_HPP

#include "cmw/script.hpp"

namespace cmw {

struct ExecOptions {
  bool json = false;
  std::string cache_dir;  // resolved from flag / CMW_CACHE_DIR / default
  bool no_cache = false;
  int bound = -1;
  bool fail_fast = false;
  std::optional<uint64_t> seed;  // overrides campaign seeds when set
  bool timings = false;
  int threads = 0;
  bool parallel = true;
};

struct CommandOutcome {
  int index = 0;
  std::string kind;
  std::string target;
  bool ok = true;
  std::string error;
  int error_kind = 0;  // ErrorKind as int when !ok
  bool inconsistent = false;
  std::string payload_json;  // serialized ordered JSON object
  std::string payload_text;  // aligned text block
  double ms = 0;
};

struct Report {
  std::string tool_version;
  std::string input_fingerprint;
  std::vector<CommandOutcome> commands;
};

Report execute(const Script& script, const ExecOptions& opt);
int report_exit_code(const Report& r);
std::string report_to_json(const Report& r, const ExecOptions& opt);
std::string report_to_text(const Report& r, const ExecOptions& opt);

// Exit codes: parse/semantic errors are raised before execution.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitKernel = 3;
inline constexpr int kExitInconsistent = 4;

}  // namespace cmw

#endif
