#ifndef CMW_CAMPAIGN_HPP
#define CMW_CAMPAIGN_HPP

#include "cmw/generator.hpp"
#include "cmw/theorems.hpp"

namespace cmw {

struct CampaignOptions {
  GenParams gen;
  int count = 1;
  int bound = -1;
  bool parallel = true;
};

struct CampaignFailure {
  StmtId id{};
  uint64_t instance = 0;
  int n = -1;
  std::string serialized;  // full reproduction record
};

struct CampaignSummary {
  int checks = 0;
  int applicable = 0;
  int consistent = 0;
  int inapplicable = 0;
  std::vector<CampaignFailure> failures;
  double wall_ms = 0;
};

// Runs every listed statement over `count` seeded instance pairs; statements
// taking a parameter n are swept over 0..min(3, vars). Instances are
// independent, so the loop fans out across threads; the reduction is
// order-independent. Any inconsistent verdict lands in `failures`.
CampaignSummary run_campaign(const std::vector<StmtId>& ids, const CampaignOptions& opt);

}  // namespace cmw

#endif
