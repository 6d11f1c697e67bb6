#ifndef CMW_THEOREMS_HPP
#define CMW_THEOREMS_HPP

#include <optional>

#include "cmw/invariants.hpp"

namespace cmw {

// Closed registry of executable statements. Each packages hypothesis checks
// and a conclusion check over concrete module instances; bounded
// certifications surface as "not established", never as silent passes.
enum class StmtId {
  t1,
  t2,
  t3,
  prop12a,
  prop12b,
  prop14a,
  prop14b,
  cor15,
  cor16,
  thm18,
  lem110a,
  lem110b,
  lem110c,
  thm111,
  thm21,
  cor22,
  thm23,
  thm24,
  def11equiv,
};

const char* stmt_name(StmtId id);
std::optional<StmtId> stmt_from_name(const std::string& name);
const std::vector<StmtId>& all_statements();
bool stmt_needs_second_module(StmtId id);
bool stmt_needs_param_n(StmtId id);

enum class HypStatus { holds, fails, not_established };
const char* hyp_status_name(HypStatus s);

struct Hypothesis {
  std::string name;
  HypStatus status = HypStatus::holds;
  std::string witness;
};

struct Verdict {
  StmtId id{};
  std::vector<Hypothesis> hyps;
  bool applicable = false;
  enum class Conclusion { holds, fails, skipped } conclusion = Conclusion::skipped;
  bool consistent = true;  // applicable implies conclusion holds
  std::string detail;
};

struct CheckOptions {
  int bound = -1;
  std::optional<int> n;
};

Verdict check_statement(StmtId id, const ModulePtr& M, const ModulePtr& N,
                        const CheckOptions& opt = {});

}  // namespace cmw

#endif
