#include "cmw/campaign.hpp"

#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmw {

namespace {

struct InstanceTally {
  int checks = 0, applicable = 0, consistent = 0, inapplicable = 0;
  std::vector<CampaignFailure> failures;
};

std::string serialize_failure(const InstancePair& inst, const Verdict& v, int n) {
  std::ostringstream os;
  os << "statement " << stmt_name(v.id);
  if (n >= 0) os << " (n = " << n << ")";
  os << "\nring: " << inst.ring->describe() << "\nM: " << inst.M->str()
     << "\nN: " << inst.N->str() << "\nhypotheses:";
  for (const auto& h : v.hyps)
    os << "\n  - " << h.name << ": " << hyp_status_name(h.status)
       << (h.witness.empty() ? "" : " (" + h.witness + ")");
  os << "\nconclusion: "
     << (v.conclusion == Verdict::Conclusion::holds
             ? "holds"
             : (v.conclusion == Verdict::Conclusion::fails ? "fails" : "skipped"))
     << "\ndetail: " << v.detail;
  return os.str();
}

void tally_verdict(InstanceTally& t, const InstancePair& inst, const Verdict& v, uint64_t j,
                   int n) {
  t.checks += 1;
  if (v.applicable) {
    t.applicable += 1;
    if (v.consistent) {
      t.consistent += 1;
    } else {
      t.failures.push_back({v.id, j, n, serialize_failure(inst, v, n)});
    }
  } else {
    t.inapplicable += 1;
  }
}

}  // namespace

CampaignSummary run_campaign(const std::vector<StmtId>& ids, const CampaignOptions& opt) {
  if (opt.count < 1) fail_kernel("campaign: count must be at least 1");
  auto t0 = std::chrono::steady_clock::now();

  std::vector<InstanceTally> slots(opt.count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel && opt.count > 1)
#endif
  for (long j = 0; j < static_cast<long>(opt.count); ++j) {
    InstancePair inst = random_pair(opt.gen, static_cast<uint64_t>(j));
    InstanceTally& t = slots[j];
    for (StmtId id : ids) {
      CheckOptions copt;
      copt.bound = opt.bound;
      if (stmt_needs_param_n(id)) {
        int top = std::min(3, opt.gen.vars);
        for (int n = 0; n <= top; ++n) {
          copt.n = n;
          Verdict v = check_statement(id, inst.M, stmt_needs_second_module(id) ? inst.N : nullptr,
                                      copt);
          tally_verdict(t, inst, v, static_cast<uint64_t>(j), n);
        }
      } else {
        Verdict v =
            check_statement(id, inst.M, stmt_needs_second_module(id) ? inst.N : nullptr, copt);
        tally_verdict(t, inst, v, static_cast<uint64_t>(j), -1);
      }
    }
  }

  CampaignSummary sum;
  for (const auto& t : slots) {
    sum.checks += t.checks;
    sum.applicable += t.applicable;
    sum.consistent += t.consistent;
    sum.inapplicable += t.inapplicable;
    sum.failures.insert(sum.failures.end(), t.failures.begin(), t.failures.end());
  }
  sum.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
  return sum;
}

}  // namespace cmw
