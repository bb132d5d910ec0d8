#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toric/oracle.hpp"

using namespace toric;

namespace {

bool generates_same_ideal(const std::vector<IntVec>& a, const std::vector<IntVec>& b, const TermOrder& o) {
  GroebnerBasis Ga = buchberger(a, o), Gb = buchberger(b, o);
  return Ga == Gb;
}

}  // namespace

TEST(ToricGenerators, OneByTwo) {
  ConfigMatrix A(IntMatrix{{1, 1}});
  EXPECT_EQ(toric_generators(A), (std::vector<IntVec>{{1, -1}}));
}

TEST(ToricGenerators, TwistedCubic) {
  ConfigMatrix A(fixtures::twisted_cubic());
  auto g = toric_generators(A);
  EXPECT_EQ(g, canonical_set({{1, -2, 1, 0}, {0, 1, -2, 1}, {1, -1, -1, 1}}));
  // the degree-2 kernel vectors generate the same ideal
  auto low = oracle::kernel_vectors_up_to(A, 2);
  EXPECT_TRUE(generates_same_ideal(g, low, TermOrder::degrevlex(4)));
}

TEST(ToricGenerators, GenerateTheWholeKernelOnRandomConfigs) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    auto g = toric_generators(A);
    GroebnerBasis G = groebner_basis(A, TermOrder::degrevlex(A.n()));
    for (const auto& v : g) ASSERT_TRUE(A.in_kernel(v));
    Int bound = 0;
    for (Int x : *A.grading()) bound = std::max(bound, x);
    for (const auto& v : oracle::kernel_vectors_up_to(A, 3 * bound, 50000))
      ASSERT_EQ(normal_form(positive_part(v), G), normal_form(negative_part(v), G)) << to_string(v);
  }
}

TEST(ToricGenerators, SegreThreeByThreeByThree) {
  ConfigMatrix A(gen::segre({3, 3, 3}));
  auto g = toric_generators(A);
  ASSERT_EQ(g.size(), 162u);
  for (const auto& v : g) EXPECT_EQ(A.degree(v), 2);
  // the quadrics of two flattenings already generate; the basis itself is a different set
  EXPECT_TRUE(generates_same_ideal(g, fixtures::segre333_flattening_minors(), TermOrder::degrevlex(27)));
}

TEST(Saturation, FixpointOnSaturatedGenerators) {
  ConfigMatrix A(fixtures::twisted_cubic());
  auto g = toric_generators(A);
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_TRUE(generates_same_ideal(saturate_variable(A, g, i), g, TermOrder::degrevlex(4)));
}

TEST(Saturation, RecoversMissingGenerator) {
  ConfigMatrix A(fixtures::twisted_cubic());
  std::vector<IntVec> basis{{1, -2, 1, 0}, {0, 1, -2, 1}};
  auto o = TermOrder::degrevlex(4);
  GroebnerBasis J = buchberger(basis, o);
  // x1x4 - x2x3 is not in the lattice basis ideal but x2 (x1x4 - x2x3) is
  IntVec missing{1, -1, -1, 1};
  EXPECT_NE(normal_form(positive_part(missing), J), normal_form(negative_part(missing), J));
  // the extra component lives on x2 = x3 = 0, so x1 does not remove it
  GroebnerBasis S1 = buchberger(saturate_variable(A, basis, 0), o);
  EXPECT_NE(normal_form(positive_part(missing), S1), normal_form(negative_part(missing), S1));
  auto s = saturate_variable(A, basis, 1);
  GroebnerBasis S = buchberger(s, o);
  EXPECT_EQ(normal_form(positive_part(missing), S), normal_form(negative_part(missing), S));
  for (const auto& v : basis) EXPECT_EQ(normal_form(positive_part(v), S), normal_form(negative_part(v), S));
}

TEST(Saturation, SequentialSaturationReachesToricIdealInAnyOrder) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    auto want = toric_generators(A);
    std::vector<std::size_t> vars(A.n());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    std::shuffle(vars.begin(), vars.end(), rng);
    auto gens = kernel_lattice_basis(A.matrix());
    for (std::size_t i : vars) gens = saturate_variable(A, gens, i);
    ASSERT_TRUE(generates_same_ideal(gens, want, TermOrder::degrevlex(A.n())));
  }
}

TEST(Graver, SmallCases) {
  EXPECT_EQ(graver(ConfigMatrix(IntMatrix{{1, 1}})), (std::vector<IntVec>{{1, -1}}));
  EXPECT_EQ(graver(ConfigMatrix(IntMatrix{{1, 2}})), (std::vector<IntVec>{{2, -1}}));
  EXPECT_EQ(graver(ConfigMatrix(fixtures::twisted_cubic())).size(), 5u);
}

TEST(Graver, LawrenceLiftingShape) {
  IntMatrix L = lawrence_lifting(IntMatrix{{1, 2}});
  EXPECT_EQ(L, (IntMatrix{{1, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST(Graver, LiftedCounterexample) {
  ConfigMatrix A(lawrence_lifting(fixtures::counterexample_base()));
  auto g = graver(A);
  EXPECT_EQ(g, fixtures::lifted(fixtures::counterexample_graver_halves()));
  Int top = 0;
  for (const auto& v : g) top = std::max(top, A.degree(v));
  EXPECT_EQ(top, 16);
}

TEST(Graver, ContainsEveryReducedBasis) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    auto G = graver(A);
    for (int k = 0; k < 3; ++k) {
      auto gb = groebner_basis(A, A.order(fixtures::random_weight(rng, A.n())));
      ASSERT_TRUE(fixtures::subset_of(gb.vectors(), G));
    }
    // conformal minimality within the set
    for (const auto& u : G)
      for (const auto& v : G)
        if (u != v) {
          ASSERT_FALSE(oracle::conformal_le(u, v) || oracle::conformal_le(negate(u), v));
        }
  }
}

TEST(Circuits, ThreeEqualColumns) {
  ConfigMatrix A(IntMatrix{{1, 1, 1}});
  auto c = circuits(A);
  ASSERT_EQ(c.size(), 3u);
  std::vector<IntVec> v;
  for (const auto& x : c) {
    v.push_back(x.vector);
    EXPECT_EQ(true_degree(x, A), 1);
  }
  EXPECT_EQ(v, canonical_set({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}));
}

TEST(Circuits, ProductOfTwoPlanes) {
  ConfigMatrix A(fixtures::p2xp2());
  auto c = circuits(A);
  ASSERT_EQ(c.size(), 15u);
  int quadrics = 0, cubics = 0;
  for (const auto& x : c) {
    Int d = A.degree(x.vector);
    quadrics += d == 2;
    cubics += d == 3;
    EXPECT_EQ(true_degree(x, A), d);
  }
  EXPECT_EQ(quadrics, 9);
  EXPECT_EQ(cubics, 6);
}

TEST(Circuits, LiftedCounterexample) {
  ConfigMatrix A(lawrence_lifting(fixtures::counterexample_base()));
  auto halves = fixtures::counterexample_graver_halves();
  auto c = circuits(A);
  std::vector<IntVec> v;
  for (const auto& x : c) v.push_back(x.vector);
  EXPECT_EQ(v, fixtures::lifted({halves.begin(), halves.begin() + 6}));

  IntVec marked = sign_normalized(fixtures::lift(halves[5]));
  auto it = std::find_if(c.begin(), c.end(), [&](const Circuit& x) { return x.vector == marked; });
  ASSERT_NE(it, c.end());
  EXPECT_EQ(A.degree(marked), 15);
  EXPECT_EQ(it->index, 2);
  EXPECT_EQ(true_degree(*it, A), 30);
  Int cdeg = 0;
  for (const auto& x : c) cdeg = std::max(cdeg, A.degree(x.vector));
  EXPECT_EQ(cdeg, 15);
}

TEST(Circuits, AreMinimalSupportKernelVectors) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 3, 6);
    auto c = circuits(A);
    std::set<std::uint64_t> supports;
    for (const auto& x : c) {
      ASSERT_TRUE(is_circuit(A, x.vector));
      ASSERT_EQ(circuit_index(A, x.vector), x.index);
      supports.insert(support_mask(x.vector));
    }
    // supports form an antichain
    for (auto s : supports)
      for (auto r : supports) ASSERT_TRUE(s == r || (s & r) != s);
    ASSERT_TRUE(fixtures::subset_of([&] {
      std::vector<IntVec> v;
      for (const auto& x : c) v.push_back(x.vector);
      return v;
    }(), graver(A)));
  }
}

TEST(Circuits, NotACircuitIsRejected) {
  ConfigMatrix A(fixtures::twisted_cubic());
  try {
    circuit_index(A, IntVec{1, -1, -1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACircuit);
  }
}

TEST(DegreeBound, Formula) {
  EXPECT_EQ(degree_bound(ConfigMatrix(IntMatrix{{1, 1}})), 2);
  EXPECT_EQ(degree_bound(ConfigMatrix(fixtures::five_facet_curve())), 2070);
}

TEST(DegreeBound, HoldsOnRandomTwoByFive) {
  std::mt19937_64 rng(59);
  int checked = 0;
  while (checked < 40) {
    IntMatrix M(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) M(i, j) = static_cast<long>(rng() % 6);
    if (rank(M) != 2) continue;
    ConfigMatrix A(M);
    if (!A.pointed()) continue;
    ++checked;
    Integer bound = degree_bound(A);
    auto G = groebner_basis(A, A.order(fixtures::random_weight(rng, 5)));
    for (const auto& v : G.vectors()) ASSERT_LE(fixtures::standard_degree(v), bound);
  }
}

TEST(Unimodular, Cases) {
  EXPECT_TRUE(is_unimodular(ConfigMatrix(fixtures::p2xp2())));
  EXPECT_FALSE(is_unimodular(ConfigMatrix(IntMatrix{{1, 2}})));
  // K_{2,2} incidence
  EXPECT_TRUE(is_unimodular(ConfigMatrix(gen::transport(2, 2))));
}

TEST(Universal, OneByTwo) {
  auto u = universal_gb(ConfigMatrix(IntMatrix{{1, 1}}));
  EXPECT_EQ(u.ugb, (std::vector<IntVec>{{1, -1}}));
  ASSERT_EQ(u.initial_ideals.size(), 2u);
  EXPECT_EQ(u.initial_ideals[0].to_string(), "<x2>");
  EXPECT_EQ(u.initial_ideals[1].to_string(), "<x1>");
}

TEST(Universal, WitnessesLieInTheirCones) {
  ConfigMatrix A(fixtures::twisted_cubic());
  auto u = universal_gb(A);
  ASSERT_EQ(u.bases.size(), u.witnesses.size());
  for (std::size_t k = 0; k < u.bases.size(); ++k) {
    for (Int x : u.witnesses[k]) EXPECT_GE(x, 1);
    EXPECT_TRUE(detail::strictly_inside(u.bases[k], u.witnesses[k]));
    EXPECT_EQ(groebner_basis(A, TermOrder::weighted(u.witnesses[k])), u.bases[k]);
  }
}

TEST(Universal, ProductOfTwoPlanes) {
  ConfigMatrix A(fixtures::p2xp2());
  auto u = universal_gb(A);
  std::vector<IntVec> c;
  for (const auto& x : circuits(A)) c.push_back(x.vector);
  EXPECT_EQ(u.ugb, c);
  EXPECT_EQ(u.initial_ideals.size(), 108u);
}

TEST(Universal, ThreadCountDoesNotChangeResult) {
  ConfigMatrix A(fixtures::twisted_cubic());
  UniversalOptions one, four;
  four.threads = 4;
  auto a = universal_gb(A, one), b = universal_gb(A, four);
  EXPECT_EQ(a.ugb, b.ugb);
  EXPECT_EQ(a.initial_ideals, b.initial_ideals);
  EXPECT_EQ(a.witnesses, universal_gb(A, one).witnesses);
}

TEST(Universal, GraverGuard) {
  UniversalOptions small;
  small.max_graver = 3;
  try {
    universal_gb(ConfigMatrix(fixtures::twisted_cubic()), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

TEST(Universal, NeedsGrading) {
  try {
    universal_gb(ConfigMatrix(IntMatrix{{1, -1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPointed);
  }
}

TEST(Universal, InclusionChainOnRandomConfigs) {
  std::mt19937_64 rng(61);
  int done = 0;
  for (int t = 0; t < 40; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    std::vector<IntVec> c;
    for (const auto& x : circuits(A)) c.push_back(x.vector);
    auto G = graver(A);
    if (G.size() > 14) continue;
    auto u = universal_gb(A);
    ASSERT_TRUE(fixtures::subset_of(c, u.ugb));
    ASSERT_TRUE(fixtures::subset_of(u.ugb, G));
    ++done;
  }
  EXPECT_GT(done, 10);
}
