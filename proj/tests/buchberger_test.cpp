#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "toric/oracle.hpp"

using namespace toric;

namespace {

// One elementary step at a time, first divisor in list order.
Exponents naive_reduce(Exponents u, const std::vector<Binomial>& G) {
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& b : G)
      if (divides(b.head, u)) {
        u = add(sub(u, b.head), b.tail);
        moved = true;
        break;
      }
  }
  return u;
}

bool is_reduced(const GroebnerBasis& G) {
  const auto& E = G.elements();
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (divides(E[j].head, E[i].tail)) return false;
      if (i != j && divides(E[j].head, E[i].head)) return false;
    }
  return true;
}

// Every S-binomial reduces to zero: the defining property, checked directly.
bool s_pairs_reduce(const GroebnerBasis& G) {
  const auto& E = G.elements();
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      Exponents m = monomial_lcm(E[i].head, E[j].head);
      Exponents a = add(sub(m, E[i].head), E[i].tail);
      Exponents b = add(sub(m, E[j].head), E[j].tail);
      if (naive_reduce(a, E) != naive_reduce(b, E)) return false;
    }
  return true;
}

}  // namespace

TEST(NormalForm, ChainIsTakenAtOnce) {
  auto o = TermOrder::weighted(IntVec{1, 0});
  GroebnerBasis G = buchberger(std::vector<LatticeVector>{{1, -1}}, o);
  EXPECT_EQ(normal_form({3, 0}, G), (IntVec{0, 3}));

  GroebnerBasis H = buchberger(std::vector<LatticeVector>{{2, -1}}, o);
  ASSERT_EQ(H.elements()[0].head, (IntVec{2, 0}));
  EXPECT_EQ(normal_form({5, 0}, H), (IntVec{1, 2}));
}

TEST(NormalForm, MatchesSingleStepReducerOnTwistedCubic) {
  ConfigMatrix A(fixtures::twisted_cubic());
  GroebnerBasis G = groebner_basis(A, TermOrder::degrevlex(4));
  std::vector<std::pair<Exponents, Exponents>> pairs;
  for (const auto& b : G.elements()) pairs.emplace_back(b.head, b.tail);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> e(0, 6);
  for (int t = 0; t < 500; ++t) {
    Exponents u(4);
    for (auto& x : u) x = e(rng);
    Exponents nf = normal_form(u, G);
    ASSERT_EQ(nf, oracle::single_step_normal_form(u, pairs));
    ASSERT_EQ(nf, naive_reduce(u, G.elements()));
    ASSERT_EQ(A.image(nf), A.image(u));
  }
}

TEST(NormalForm, RejectsNegativeExponent) {
  GroebnerBasis G = buchberger(std::vector<LatticeVector>{{1, -1}}, TermOrder::degrevlex(2));
  try {
    normal_form({-1, 0}, G);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(SVector, Cases) {
  auto o = TermOrder::lex(3);
  Binomial f = orient(IntVec{1, -1, 0}, o), g = orient(IntVec{1, 0, -1}, o);
  EXPECT_TRUE(is_zero(s_vector(f, f)));
  IntVec s = s_vector(f, g);
  EXPECT_EQ(sign_normalized(s), (IntVec{0, 1, -1}));
}

TEST(SVector, CoprimeLeadingTermsReduceToZero) {
  auto o = TermOrder::lex(4);
  Binomial f = orient(IntVec{1, -1, 0, 0}, o), g = orient(IntVec{0, 0, 1, -1}, o);
  ASSERT_TRUE(disjoint_support(f.head, g.head));
  Exponents m = monomial_lcm(f.head, g.head);
  Exponents a = add(sub(m, f.head), f.tail), b = add(sub(m, g.head), g.tail);
  EXPECT_EQ(naive_reduce(a, {f, g}), naive_reduce(b, {f, g}));
}

TEST(Buchberger, PrincipalIdeal) {
  for (auto o : {TermOrder::lex(2), TermOrder::degrevlex(2), TermOrder::weighted(IntVec{0, 1})}) {
    GroebnerBasis G = buchberger(std::vector<LatticeVector>{{1, -1}}, o);
    ASSERT_EQ(G.size(), 1u);
    EXPECT_EQ(sign_normalized(G.vectors()[0]), (IntVec{1, -1}));
  }
}

TEST(Buchberger, TwistedCubicNeedsSaturation) {
  // the lattice basis alone generates a smaller ideal
  auto o = TermOrder::degrevlex(4);
  GroebnerBasis L = buchberger(std::vector<LatticeVector>{{1, -2, 1, 0}, {0, 1, -2, 1}}, o);
  GroebnerBasis T = groebner_basis(ConfigMatrix(fixtures::twisted_cubic()), o);
  EXPECT_NE(canonical_set(L.vectors()), canonical_set(T.vectors()));
  EXPECT_EQ(canonical_set(T.vectors()), (std::vector<IntVec>{{0, 1, -2, 1}, {1, -2, 1, 0}, {1, -1, -1, 1}}));
  // membership: every kernel vector up to degree 4 reduces to zero
  ConfigMatrix A(fixtures::twisted_cubic());
  for (const auto& v : oracle::kernel_vectors_up_to(A, 4))
    ASSERT_EQ(normal_form(positive_part(v), T), normal_form(negative_part(v), T)) << to_string(v);
}

TEST(Buchberger, ResultIsReducedAndClosed) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    TermOrder o = A.order(fixtures::random_weight(rng, A.n()), t % 2 ? Tiebreak::Lex : Tiebreak::DegRevLex);
    GroebnerBasis G = groebner_basis(A, o);
    ASSERT_TRUE(G.reduced());
    ASSERT_TRUE(is_reduced(G));
    ASSERT_TRUE(s_pairs_reduce(G));
    for (const auto& b : G.elements()) {
      ASSERT_EQ(o.compare(b.head, b.tail), Ordering::Greater);
      ASSERT_TRUE(A.in_kernel(b.vector()));
    }
  }
}

TEST(Buchberger, ChainCriterionGivesSameBasis) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    TermOrder o = A.order(fixtures::random_weight(rng, A.n()));
    auto gens = toric_generators(A);
    BuchbergerOptions with;
    with.chain_criterion = true;
    ASSERT_EQ(buchberger(gens, o, with), buchberger(gens, o));
  }
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  ConfigMatrix A(fixtures::p2xp2());
  auto gens = toric_generators(A);
  auto o = TermOrder::degrevlex(9);
  auto rev = gens;
  std::reverse(rev.begin(), rev.end());
  EXPECT_EQ(buchberger(gens, o), buchberger(rev, o));
}

TEST(Buchberger, LimitsAreEnforced) {
  ConfigMatrix A(fixtures::five_facet_curve());
  Limits tight;
  tight.max_elements = 3;
  try {
    groebner_basis(A, TermOrder::degrevlex(4), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
  Limits low;
  low.max_degree = 2;
  try {
    groebner_basis(A, TermOrder::degrevlex(4), low);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

TEST(Autoreduce, DropsMultiples) {
  auto o = TermOrder::degrevlex(2);
  auto r = autoreduce({orient(IntVec{1, -1}, o), orient(IntVec{2, -2}, o)}, o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(sign_normalized(r[0].vector()), (IntVec{1, -1}));
}

TEST(Autoreduce, ReducedBasisIsFixpoint) {
  ConfigMatrix A(fixtures::twisted_cubic());
  GroebnerBasis G = groebner_basis(A, TermOrder::degrevlex(4));
  auto r = autoreduce(G.elements(), G.order());
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, G.elements());
}

TEST(Autoreduce, RandomRedundantSetsAgreeWithBuchberger) {
  // autoreducing a Groebner basis padded with redundant elements gives the reduced basis
  std::mt19937_64 rng(37);
  for (int t = 0; t < 30; ++t) {
    ConfigMatrix A = fixtures::random_config(rng, 2, 5);
    TermOrder o = A.order(fixtures::random_weight(rng, A.n()));
    GroebnerBasis G = groebner_basis(A, o);
    std::vector<Binomial> padded = G.elements();
    auto V = G.vectors();
    for (std::size_t i = 0; i < V.size(); ++i)
      for (std::size_t j = i + 1; j < V.size(); ++j)
        for (const auto& v : {add(V[i], V[j]), sub(V[i], V[j])})
          if (!is_zero(v)) padded.push_back(orient(v, o));
    auto r = autoreduce(padded, o);
    std::sort(r.begin(), r.end());
    ASSERT_EQ(r, G.elements());
  }
}
