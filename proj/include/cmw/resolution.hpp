#ifndef CMW_RESOLUTION_HPP
#define CMW_RESOLUTION_HPP

#include <functional>
#include <map>

#include "cmw/module.hpp"

namespace cmw {

// Chain of free modules F_L -> ... -> F_1 -> F_0 resolving a module.
// diff[k] is the matrix of F_{k+1} -> F_k; shifts[k] the degrees of F_k.
// terminated means the next syzygy module is zero, so pd = length().
struct Resolution {
  QRingPtr over;
  std::vector<std::vector<int>> shifts;
  std::vector<PolyMatrix> diff;
  bool minimal = true;
  bool terminated = false;

  int length() const { return static_cast<int>(diff.size()); }
  int rank(int level) const { return static_cast<int>(shifts.at(level).size()); }

  std::string serialize() const;
  static std::optional<Resolution> deserialize(QRingPtr over, const std::string& blob);
};
using ResolutionPtr = std::shared_ptr<const Resolution>;

struct PdResult {
  bool exact = false;
  int value = 0;  // pd when exact, otherwise the certified lower bound

  std::string str() const;
};

struct BettiTable {
  std::map<std::pair<int, int>, int> ranks;  // (homological index, degree) -> rank

  std::vector<int> total() const;  // total rank per homological index
  bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
  std::string str() const;
};

// Minimal free resolution through homological degree `bound` (or to the end,
// whichever comes first); results are cached per (module, ring tag).
ResolutionPtr resolve(const ModulePtr& M, bool over_ambient, int bound);

// Non-minimal resolution: every step keeps the full reduced syzygy basis.
Resolution resolve_raw(const ModulePtr& M, bool over_ambient, int bound);

// Unit cancellation with basis-change propagation; homology is unchanged.
Resolution minimalize(Resolution res);

PdResult projective_dimension(const ModulePtr& M, bool over_ambient, int bound);
BettiTable betti_of(const Resolution& res);
BettiTable betti(const ModulePtr& M, bool over_ambient, int bound);

bool verify_complex(const Resolution& res);                          // d(k) . d(k+1) = 0
bool verify_exactness(const Resolution& res);                        // im = ker stepwise
int default_bound(const QRingPtr& R);                                // 2 dim S + 4

class ResolutionCache {
 public:
  static ResolutionCache& instance();
  ResolutionPtr get(const ModulePtr& M, bool over_ambient, int bound);
  void clear();

  // Optional persistent backing (wired up by the CLI layer).
  std::function<std::optional<std::string>(const std::string& key)> load_hook;
  std::function<void(const std::string& key, const std::string& payload)> store_hook;

 private:
  std::mutex mu_;
  std::map<std::pair<uint64_t, bool>, ResolutionPtr> map_;
};

}  // namespace cmw

#endif
