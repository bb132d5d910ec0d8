#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace toric;

namespace {

ErrorKind parse_kind(const std::string& text, std::string* msg = nullptr) {
  std::istringstream in(text);
  try {
    io::read_matrix(in, "m.txt");
  } catch (const Error& e) {
    if (msg) *msg = e.what();
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(MatrixFile, ReadsWithCommentsAndBlankLines) {
  std::istringstream in("# twisted cubic\n2 4\n\n1 1 1 1\n0 1 2 3\n");
  EXPECT_EQ(io::read_matrix(in), fixtures::twisted_cubic());
}

TEST(MatrixFile, RoundTrip) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M(i, j) = static_cast<long>(rng() % 41) - 20;
    std::ostringstream out;
    io::write_matrix(out, M);
    std::istringstream in(out.str());
    ASSERT_EQ(io::read_matrix(in), M);
  }
}

TEST(MatrixFile, RaggedRowHasLineNumber) {
  std::string msg;
  EXPECT_EQ(parse_kind("2 3\n1 2 3\n4 5\n", &msg), ErrorKind::Parse);
  EXPECT_NE(msg.find("m.txt:3"), std::string::npos) << msg;
}

TEST(MatrixFile, Rejections) {
  EXPECT_EQ(parse_kind(""), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("2\n1 2\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("1 2\n1 x\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("2 2\n1 2\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("1 2\n1 2\n3 4\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("1 2\n1 1/2\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("-1 2\n"), ErrorKind::Parse);
  EXPECT_EQ(parse_kind("0 0\n"), ErrorKind::Parse);
}

TEST(VectorListFile, RoundTrip) {
  io::VectorList v{3, {{1, -2, 1}, {0, 4, -3}}};
  std::ostringstream out;
  io::write_vector_list(out, v);
  EXPECT_EQ(out.str(), "2 3\n1 -2 1\n0 4 -3\n");
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_vector_list(in), v);

  std::ostringstream empty;
  io::write_vector_list(empty, 4, {});
  std::istringstream back(empty.str());
  EXPECT_EQ(io::read_vector_list(back), (io::VectorList{4, {}}));
}

TEST(WeightFile, RationalsRoundTrip) {
  Rational unreduced(-2, 4);
  RationalVector w{Rational(1), Rational(0), Rational(3, 2), unreduced};
  std::ostringstream out;
  io::write_weight(out, w);
  EXPECT_EQ(out.str(), "1 4\n1 0 3/2 -1/2\n");
  std::istringstream in(out.str());
  w[3].canonicalize();
  EXPECT_EQ(io::read_weight(in), w);
}

TEST(WeightFile, Rejections) {
  std::istringstream zero("1 2\n1 1/0\n");
  EXPECT_THROW(io::read_weight(zero), Error);
  std::istringstream two("2 1\n1\n2\n");
  EXPECT_THROW(io::read_weight(two), Error);
}

TEST(Lists, Parse) {
  EXPECT_EQ(io::parse_rational_list("1,0,3/2"), (RationalVector{Rational(1), Rational(0), Rational(3, 2)}));
  EXPECT_EQ(io::parse_integer_list("2, 3 -4"), (IntVec{2, 3, -4}));
  EXPECT_THROW(io::parse_integer_list("1/2"), Error);
  EXPECT_THROW(io::parse_integer_list(""), Error);
}

TEST(Generators, Segre) {
  IntMatrix S = gen::segre({3, 3});
  EXPECT_EQ(S.rows(), 6u);
  EXPECT_EQ(S.cols(), 9u);
  for (std::size_t j = 0; j < 9; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < 6; ++i) s += S(i, j);
    EXPECT_EQ(s, 2);
  }
  // last index fastest: column 9i + 3j + k of the triple product
  IntMatrix T = gen::segre({3, 3, 3});
  EXPECT_EQ(T(0, 5), 1);
  EXPECT_EQ(T(3 + 1, 5), 1);
  EXPECT_EQ(T(6 + 2, 5), 1);
}

TEST(Generators, Hypersimplex) {
  IntMatrix H = gen::hypersimplex2(4);
  EXPECT_EQ(H.rows(), 4u);
  EXPECT_EQ(H.cols(), 6u);
  for (std::size_t j = 0; j < 6; ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < 4; ++i) ones += H(i, j) == 1;
    EXPECT_EQ(ones, 2);
  }
}

TEST(Generators, TtGraph) {
  IntMatrix G = gen::tt_graph(3, 3);
  EXPECT_EQ(G.rows(), 9u);
  EXPECT_EQ(G.cols(), 12u);
  int four = 0, two = 0;
  for (std::size_t i = 0; i < 9; ++i) {
    Integer deg = 0;
    for (std::size_t j = 0; j < 12; ++j) deg += G(i, j);
    four += deg == 4;
    two += deg == 2;
  }
  EXPECT_EQ(four, 3);
  EXPECT_EQ(two, 6);
  EXPECT_THROW(gen::tt_graph(2, 3), Error);
  EXPECT_THROW(gen::tt_graph(3, 4), Error);
}

TEST(Generators, MonomialCurveAndLawrence) {
  EXPECT_EQ(gen::monomial_curve({3, 4, 5}), (IntMatrix{{3, 4, 5}}));
  IntMatrix L = gen::lawrence(IntMatrix{{1, 2}});
  EXPECT_EQ(L.rows(), 3u);
  EXPECT_EQ(L.cols(), 4u);
  EXPECT_EQ(gen::transport(2, 3), gen::segre({2, 3}));
}
