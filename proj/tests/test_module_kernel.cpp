#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmw/generator.hpp"
#include "cmw/resolution.hpp"
#include "test_util.hpp"

using namespace cmw;
using namespace cmwtest;

TEST_CASE("minimal presentations prune units") {
  auto R = S_xy();
  Poly x = pvar(R, 0), y = pvar(R, 1);

  SUBCASE("coker[1] is the zero module") {
    ModulePtr M = cyclic_module(R, {Poly::constant(R->poly_ring(), Coeff(1))});
    CHECK(M->is_zero());
    CHECK(M->minimal()->ngens() == 0);
  }
  SUBCASE("coker[x] is already minimal") {
    ModulePtr M = cyclic_module(R, {x});
    ModulePtr m = M->minimal();
    CHECK(m->ngens() == 1);
    CHECK(m->nrels() == 1);
    CHECK(m->rel().at(0, 0) == x);
  }
  SUBCASE("a unit entry collapses [[x,1],[0,y]] to a rank-1 presentation") {
    // graded consistency forces generator degrees (1, 0)
    PolyMatrix a = PolyMatrix::zero(2, 2);
    a.at(0, 0) = x;
    a.at(0, 1) = Poly::constant(R->poly_ring(), Coeff(1));
    a.at(1, 1) = y;
    ModulePtr M = Module::make(R, {1, 0}, a);
    ModulePtr m = M->minimal();
    CHECK(m->ngens() == 1);
    // isomorphic to coker[xy]: equal Hilbert functions in low degrees
    ModulePtr xy = cyclic_module(R, {x * y});
    for (int d = 0; d <= 5; ++d) CHECK(M->hilbert(d) == xy->hilbert(d));
    CHECK(gb_str(m->annihilator_ideal()) == "[x*y]");
  }
}

TEST_CASE("annihilators") {
  auto R = S_xy();
  Poly x = pvar(R, 0), y = pvar(R, 1);

  CHECK(ring_as_module(R)->annihilator_ideal().g.empty());  // ann R = 0
  CHECK(gb_str(cyclic_module(R, {x})->annihilator_ideal()) == "[x]");
  ModulePtr sum = direct_sum(cyclic_module(R, {x}), cyclic_module(R, {y}));
  CHECK(gb_str(sum->annihilator_ideal()) == "[x*y]");
  CHECK_THROWS_AS(cyclic_module(R, {Poly::constant(R->poly_ring(), Coeff(1))})->annihilator_ideal(),
                  Error);

  SUBCASE("presentation invariance") {
    GenParams p;
    p.vars = 2;
    p.max_degree = 3;
    for (uint64_t seed : {5u, 6u, 7u, 8u}) {
      p.seed = seed;
      ModulePtr M = random_module(p);
      // pad the presentation with redundant relation columns
      PolyMatrix padded = PolyMatrix::zero(M->ngens(), 2 * M->nrels());
      for (int i = 0; i < M->ngens(); ++i)
        for (int j = 0; j < M->nrels(); ++j) {
          padded.at(i, j) = M->rel().at(i, j);
          padded.at(i, M->nrels() + j) = M->rel().at(i, j) * pvar(M->ring(), 0);
        }
      ModulePtr Mp = Module::make(M->ring(), M->row_degs(), padded);
      CHECK(same_ideal(M->annihilator_ideal(), Mp->annihilator_ideal()));
      CHECK(same_ideal(M->annihilator_ideal(), M->minimal()->annihilator_ideal()));
    }
  }
}

TEST_CASE("support comparisons") {
  auto R = S_xy();
  Poly x = pvar(R, 0), y = pvar(R, 1);
  ModulePtr Rm = ring_as_module(R);
  ModulePtr Mx = cyclic_module(R, {x});

  CHECK(support_contains(Mx, Mx));      // reflexive
  CHECK(support_contains(Mx, Rm));      // everything sits inside Spec R
  CHECK(!support_contains(Rm, Mx));     // x is not nilpotent
  CHECK_THROWS_AS(support_contains(Mx, cyclic_module(R, {Poly::constant(R->poly_ring(), Coeff(1))})),
                  Error);

  SUBCASE("transitivity on generated triples") {
    GenParams p;
    p.vars = 2;
    for (uint64_t seed = 1; seed <= 6; ++seed) {
      p.seed = seed;
      InstancePair ab = random_pair(p, 0), cd = random_pair(p, 1);
      (void)cd;
      ModulePtr A = ab.M, B = ab.N, C = tensor(ab.M, ab.N);
      if (support_contains(A, B) && support_contains(B, C)) CHECK(support_contains(A, C));
      if (support_contains(B, A) && support_contains(A, C)) CHECK(support_contains(B, C));
    }
  }
  SUBCASE("disjoint-up-to-irrelevant flag") {
    SupportRelation r = support_relation(Mx, cyclic_module(R, {y}));
    CHECK(!r.contained);
    CHECK(r.disjoint_up_to_irrelevant);  // V(x) meets V(y) only at the origin
    SupportRelation r2 = support_relation(Mx, Rm);
    CHECK(r2.contained);
    CHECK(!r2.disjoint_up_to_irrelevant);
  }
}

TEST_CASE("tensor products") {
  auto R = S_xy();
  Poly x = pvar(R, 0), y = pvar(R, 1);
  ModulePtr Rm = ring_as_module(R);
  ModulePtr Mx = cyclic_module(R, {x});
  ModulePtr My = cyclic_module(R, {y});

  SUBCASE("R is the unit") {
    GenParams p;
    p.vars = 2;
    for (uint64_t seed : {3u, 9u}) {
      p.seed = seed;
      ModulePtr N = random_module_over(R, p, seed, 3);
      ModulePtr T = tensor(Rm, N);
      CHECK(betti(T, true, -1) == betti(N, true, -1));
    }
  }
  SUBCASE("R/(x) (x) R/(y) is the residue field") {
    ModulePtr T = tensor(Mx, My);
    ModulePtr k = residue_field(R);
    CHECK(same_ideal(T->annihilator_ideal(), k->annihilator_ideal()));
    for (int d = 0; d <= 6; ++d) CHECK(T->hilbert(d) == k->hilbert(d));
  }
  SUBCASE("R/(x) (x) R/(x) stays R/(x)") {
    ModulePtr T = tensor(Mx, Mx);
    CHECK(same_ideal(T->annihilator_ideal(), Mx->annihilator_ideal()));
    for (int d = 0; d <= 6; ++d) CHECK(T->hilbert(d) == Mx->hilbert(d));
  }
  SUBCASE("commutative up to isomorphism (Hilbert window)") {
    GenParams p;
    p.vars = 2;
    p.max_degree = 2;
    for (uint64_t seed = 21; seed <= 24; ++seed) {
      p.seed = seed;
      InstancePair inst = random_pair(p, seed);
      CHECK(hilbert_agree(tensor(inst.M, inst.N), tensor(inst.N, inst.M), 10));
    }
  }
}

TEST_CASE("direct sums and shifts") {
  auto R = S_xy();
  Poly x = pvar(R, 0), y = pvar(R, 1);
  ModulePtr Mx = cyclic_module(R, {x});
  ModulePtr zero = cyclic_module(R, {Poly::constant(R->poly_ring(), Coeff(1))});

  ModulePtr s = direct_sum(Mx, zero);
  CHECK(betti(s, true, -1) == betti(Mx, true, -1));
  CHECK(hilbert_agree(s, Mx, 8));

  ModulePtr sh = shift_module(Mx, 0);
  CHECK(sh->row_degs() == Mx->row_degs());
  ModulePtr sh2 = shift_module(Mx, 2);
  CHECK(sh2->hilbert(3) == Mx->hilbert(1));

  ModulePtr blk = direct_sum(Mx, cyclic_module(R, {y}));
  CHECK(blk->ngens() == 2);
  CHECK(blk->rel().at(0, 0) == x);
  CHECK(blk->rel().at(1, 1) == y);
}

TEST_CASE("every nonzero graded module sees the irrelevant ideal in its support") {
  GenParams p;
  p.vars = 3;
  p.max_degree = 2;
  for (uint64_t seed = 41; seed <= 48; ++seed) {
    p.seed = seed;
    ModulePtr M = random_module(p);
    CHECK(!M->annihilator_ideal().is_unit());
  }
}
