// Benchmark comparing the serial reference engines against the OpenMP lanes:
// Groebner bases (reference Buchberger vs degree-batched parallel reduction)
// and theorem campaigns (single-threaded vs parallel fan-out). Outputs agree
// exactly; only the wall time differs.

#include <chrono>
#include <iostream>

#include "cmw/campaign.hpp"
#include "cmw/idealops.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cmw;
using clock_t_ = std::chrono::steady_clock;

namespace {

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

std::vector<Poly> katsura_like(const RingPtr& S, int size) {
  // dense homogeneous generators stressing the pair queue
  std::vector<Poly> gens;
  const int n = S->nvars();
  for (int k = 0; k < size; ++k) {
    Poly f(S);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if ((i + j + k) % 3 == 0) continue;
        Expo m = PolyRing::product(S->var_expo(i), S->var_expo(j));
        f = f + Poly::monomial(S, Coeff((i + 1) * (k + 2) + j), m);
      }
    if (!f.is_zero()) gens.push_back(f);
  }
  return gens;
}

void bench_gb() {
  auto S = PolyRing::make(Field::rationals(), {"x", "y", "z", "w"}, TermOrder::grevlex);
  std::vector<Poly> gens = katsura_like(S, 4);

  GBOptions ref;
  ref.engine = GBOptions::Engine::reference;
  GBOptions fast_serial;
  fast_serial.parallel = false;
  GBOptions fast_par;

  auto t0 = clock_t_::now();
  IdealGB a = ideal_gb(S, gens, ref);
  double t_ref = ms_since(t0);

  t0 = clock_t_::now();
  IdealGB b = ideal_gb(S, gens, fast_serial);
  double t_fast = ms_since(t0);

  t0 = clock_t_::now();
  IdealGB c = ideal_gb(S, gens, fast_par);
  double t_par = ms_since(t0);

  bool agree = same_ideal(a, b) && same_ideal(b, c);
  std::cout << "groebner  reference " << t_ref << " ms | pruned serial " << t_fast
            << " ms | pruned parallel " << t_par << " ms | basis " << a.g.size()
            << " elements | outputs " << (agree ? "identical" : "DIFFER") << "\n";
}

void bench_campaign(int count) {
  std::vector<StmtId> ids = {StmtId::prop12a, StmtId::prop14a, StmtId::t3};
  CampaignOptions opt;
  opt.gen.seed = 20240601;
  opt.gen.vars = 3;
  opt.gen.max_degree = 3;
  opt.count = count;

  opt.parallel = false;
  auto t0 = clock_t_::now();
  CampaignSummary serial = run_campaign(ids, opt);
  double t_serial = ms_since(t0);

  opt.parallel = true;
  t0 = clock_t_::now();
  CampaignSummary par = run_campaign(ids, opt);
  double t_par = ms_since(t0);

  bool agree = serial.checks == par.checks && serial.applicable == par.applicable &&
               serial.consistent == par.consistent && serial.failures.size() == par.failures.size();
  std::cout << "campaign  serial " << t_serial << " ms | parallel " << t_par << " ms | "
            << serial.checks << " checks | tallies " << (agree ? "identical" : "DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 40;
#ifdef _OPENMP
  std::cout << "threads " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP\n";
#endif
  bench_gb();
  bench_campaign(count);
  return 0;
}
