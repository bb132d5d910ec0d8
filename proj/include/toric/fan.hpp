#pragma once

// Groebner cones, initial ideals, regular triangulations and the monomial
// side: Stanley-Reisner ideals, radicals, associated primes.

#include <algorithm>
#include <optional>
#include <vector>

#include "toric/buchberger.hpp"
#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/monomial.hpp"
#include "toric/toric.hpp"
#include "toric/vector.hpp"

namespace toric {

/// { omega : g.omega >= 0 for every g in inequalities }.
struct Cone {
  std::vector<LatticeVector> inequalities;
  std::size_t lineality_dim = 0;
  bool irredundant = false;

  std::size_t facet_count() const { return inequalities.size(); }

  bool contains_strictly(std::span<const Int> omega) const {
    return std::all_of(inequalities.begin(), inequalities.end(),
                       [&](const LatticeVector& g) { return dot(g, omega) > 0; });
  }
};

/// Closed Groebner cone of a reduced basis with its facet normals. The basis
/// vectors lie in ker A, which is orthogonal to the lineality space (the row
/// space of A), so they need no projection before the redundancy test.
inline Cone groebner_cone(const GroebnerBasis& G) {
  require(G.reduced(), ErrorKind::InvalidArgument, "Groebner cone needs a reduced basis");
  std::vector<LatticeVector> ineqs;
  for (const auto& v : G.vectors()) ineqs.push_back(primitive(v));
  std::sort(ineqs.begin(), ineqs.end());
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  Cone c;
  const std::size_t n = G.order().size();
  c.lineality_dim = ineqs.empty() ? n : n - rank(IntMatrix::from_rows(ineqs));
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    if (is_irredundant(ineqs, i)) c.inequalities.push_back(ineqs[i]);
  c.irredundant = true;
  return c;
}

/// in(I_A) for the order (omega, tiebreak).
inline MonomialIdeal initial_ideal(const GroebnerBasis& G) {
  return MonomialIdeal(G.order().size(), G.leading_terms());
}

struct InitialIdeal {
  MonomialIdeal ideal;
  IntVec witness;
};

inline std::vector<InitialIdeal> enumerate_initial_ideals(const ConfigMatrix& A, const UniversalOptions& opts = {}) {
  UniversalResult u = universal_gb(A, opts);
  std::vector<InitialIdeal> out;
  for (std::size_t k = 0; k < u.initial_ideals.size(); ++k) out.push_back({u.initial_ideals[k], u.witnesses[k]});
  return out;
}

namespace detail {

inline Rational column_dot(const ConfigMatrix& A, std::size_t j, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < A.d(); ++i) s += Rational(A.matrix()(i, j)) * y[i];
  return s;
}

/// lambda >= 0 with A_sigma lambda = a_j.
inline bool in_simplicial_cone(const ConfigMatrix& A, const Face& sigma, std::size_t j) {
  std::vector<RationalVector> M(A.d(), RationalVector(A.d()));
  RationalVector rhs(A.d());
  for (std::size_t i = 0; i < A.d(); ++i) {
    for (std::size_t k = 0; k < sigma.size(); ++k) M[i][k] = Rational(A.matrix()(i, sigma[k]));
    rhs[i] = Rational(A.matrix()(i, j));
  }
  auto lam = solve_square(M, rhs);
  return lam && std::all_of(lam->begin(), lam->end(), [](const Rational& q) { return q >= 0; });
}

}  // namespace detail

/// Regular triangulation of cone(A) induced by the heights omega: a
/// d-subset sigma of independent columns is a facet when the y solving
/// a_i.y = omega_i (i in sigma) has a_j.y < omega_j for every other j.
inline SimplicialComplex regular_triangulation(const ConfigMatrix& A, const RationalVector& omega) {
  require(omega.size() == A.n(), ErrorKind::DimensionMismatch, "height vector length differs from column count");
  A.require_pointed();
  const std::size_t d = A.d(), n = A.n();
  std::vector<Face> facets;
  for_each_combination(n, d, [&](const std::vector<std::size_t>& sigma) {
    std::vector<RationalVector> M(d, RationalVector(d));
    RationalVector rhs(d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) M[k][i] = Rational(A.matrix()(i, sigma[k]));
      rhs[k] = omega[sigma[k]];
    }
    auto y = solve_square(M, rhs);
    if (!y) return true;
    bool tight = false;
    for (std::size_t j = 0, s = 0; j < n; ++j) {
      if (s < d && sigma[s] == j) {
        ++s;
        continue;
      }
      Rational v = detail::column_dot(A, j, *y);
      if (v > omega[j]) return true;
      if (v == omega[j]) tight = true;
    }
    if (tight) fail(ErrorKind::NonGenericOmega, "heights are not generic: the subdivision is not a triangulation");
    facets.push_back(sigma);
    return true;
  });
  for (std::size_t j = 0; j < n; ++j) {
    bool covered = std::any_of(facets.begin(), facets.end(),
                               [&](const Face& f) { return detail::in_simplicial_cone(A, f, j); });
    if (!covered) fail(ErrorKind::Internal, "triangulation does not cover column " + std::to_string(j + 1));
  }
  return SimplicialComplex(n, std::move(facets));
}

inline SimplicialComplex regular_triangulation(const ConfigMatrix& A, const IntVec& omega) {
  return regular_triangulation(A, to_rational(omega));
}

/// Every facet has |det| equal to the index of ZA in Z^d.
inline bool is_unimodular_triangulation(const ConfigMatrix& A, const SimplicialComplex& delta) {
  Integer g = gcd_of_maximal_minors(A.matrix());
  return std::all_of(delta.facets().begin(), delta.facets().end(), [&](const Face& f) {
    return abs(det_bareiss(A.matrix().select_columns(f))) == g;
  });
}

/// Squarefree monomials of the minimal non-faces.
inline MonomialIdeal stanley_reisner_nonfaces(const SimplicialComplex& delta) {
  const std::size_t n = delta.vertices();
  require(n <= 20, ErrorKind::LimitExceeded, "non-face enumeration limited to 20 vertices");
  std::vector<Exponents> gens;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    Face f;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) f.push_back(i);
    if (delta.is_face(f)) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < f.size() && minimal; ++k) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
      minimal = delta.is_face(g);
    }
    if (!minimal) continue;
    Exponents m(n, 0);
    for (std::size_t i : f) m[i] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Intersection over facets sigma of <x_i : i not in sigma>. For up to 16
/// vertices the minimal non-face description is computed as well and the two
/// must agree.
inline MonomialIdeal stanley_reisner(const SimplicialComplex& delta) {
  const std::size_t n = delta.vertices();
  MonomialIdeal I = MonomialIdeal::unit(n);
  for (const auto& f : delta.facets()) {
    std::vector<std::size_t> outside;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (k < f.size() && f[k] == i) {
        ++k;
        continue;
      }
      outside.push_back(i);
    }
    I = I.intersect(MonomialIdeal::prime(n, outside));
  }
  if (n <= 16 && stanley_reisner_nonfaces(delta) != I)
    fail(ErrorKind::Internal, "Stanley-Reisner constructions disagree");
  return I;
}

/// rad(in_omega(I_A)) == I_(Delta_omega).
inline bool check_radical_triangulation(const ConfigMatrix& A, const RationalVector& omega,
                                        Tiebreak tb = Tiebreak::DegRevLex) {
  SimplicialComplex delta = regular_triangulation(A, omega);
  MonomialIdeal in = initial_ideal(groebner_basis(A, A.order(omega, tb)));
  return radical_monomial(in) == stanley_reisner(delta);
}

inline bool check_radical_triangulation(const ConfigMatrix& A, const IntVec& omega,
                                        Tiebreak tb = Tiebreak::DegRevLex) {
  return check_radical_triangulation(A, to_rational(omega), tb);
}

constexpr std::size_t kDefaultWitnessLimit = 2000000;

/// Associated primes of a monomial ideal, as sorted variable sets. A prime
/// <x_i : i in sigma> is associated iff it equals (I : m) for a monomial m;
/// such m can be taken with m_i at most the largest exponent of x_i among the
/// generators, since beyond that the colon no longer changes.
inline std::vector<Face> assoc_primes_monomial(const MonomialIdeal& I, std::size_t limit = kDefaultWitnessLimit) {
  const std::size_t n = I.variables();
  require(n <= 12, ErrorKind::LimitExceeded, "associated primes limited to 12 variables");
  IntVec bound(n);
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = I.max_exponent(i);
    count *= static_cast<double>(bound[i] + 1);
  }
  require(count <= static_cast<double>(limit), ErrorKind::LimitExceeded, "too many witness monomials");
  std::vector<Face> out;
  Exponents m(n, 0);
  for (;;) {
    if (!I.contains(m)) {
      MonomialIdeal q = I.colon(m);
      bool prime = std::all_of(q.generators().begin(), q.generators().end(),
                               [](const Exponents& g) { return total_degree(g) == 1; });
      if (prime) {
        Face f;
        for (const auto& g : q.generators())
          for (std::size_t i = 0; i < n; ++i)
            if (g[i]) f.push_back(i);
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
      }
    }
    std::size_t i = 0;
    while (i < n && m[i] == bound[i]) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Every embedded associated prime P contains an associated prime Q with
/// one variable fewer.
inline bool check_chain_property(const MonomialIdeal& I, std::size_t limit = kDefaultWitnessLimit) {
  std::vector<Face> ass = assoc_primes_monomial(I, limit);
  auto subset = [](const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  for (const auto& P : ass) {
    bool embedded = std::any_of(ass.begin(), ass.end(), [&](const Face& Q) { return Q != P && subset(Q, P); });
    if (!embedded) continue;
    bool step = std::any_of(ass.begin(), ass.end(),
                            [&](const Face& Q) { return Q.size() + 1 == P.size() && subset(Q, P); });
    if (!step) return false;
  }
  return true;
}

}  // namespace toric
