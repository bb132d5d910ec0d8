#pragma once

// Monomial ideals by minimal generators, and simplicial complexes by facets.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"
#include "toric/vector.hpp"

namespace toric {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes the given generators. An empty list is the zero ideal.
  MonomialIdeal(std::size_t n, std::vector<Exponents> gens) : n_(n) {
    for (const auto& g : gens) {
      require(g.size() == n, ErrorKind::DimensionMismatch, "generator length differs from variable count");
      require(is_nonnegative(g), ErrorKind::InvalidArgument, "monomial exponent is negative");
    }
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Exponents(n, 0)}); }

  /// Prime ideal generated by the variables in sigma.
  static MonomialIdeal prime(std::size_t n, std::span<const std::size_t> sigma) {
    std::vector<Exponents> gens;
    for (std::size_t i : sigma) {
      require(i < n, ErrorKind::InvalidArgument, "variable index out of range");
      Exponents e(n, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
  }

  std::size_t variables() const { return n_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && toric::is_zero(gens_[0]); }

  bool contains(std::span<const Int> m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponents& g) { return divides(g, m); });
  }

  bool contains(const MonomialIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Exponents& g) { return contains(g); });
  }

  /// (I : x^m)
  MonomialIdeal colon(std::span<const Int> m) const {
    std::vector<Exponents> out;
    for (const auto& g : gens_) {
      Exponents q(n_);
      for (std::size_t i = 0; i < n_; ++i) q[i] = std::max<Int>(g[i] - m[i], 0);
      out.push_back(std::move(q));
    }
    return MonomialIdeal(n_, std::move(out));
  }

  MonomialIdeal sum(const MonomialIdeal& other) const {
    std::vector<Exponents> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return MonomialIdeal(n_, std::move(g));
  }

  /// Generated by pairwise lcms.
  MonomialIdeal intersect(const MonomialIdeal& other) const {
    std::vector<Exponents> g;
    for (const auto& a : gens_)
      for (const auto& b : other.gens_) g.push_back(monomial_lcm(a, b));
    return MonomialIdeal(n_, std::move(g));
  }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Exponents& g) {
      return std::all_of(g.begin(), g.end(), [](Int e) { return e <= 1; });
    });
  }

  Int max_exponent(std::size_t i) const {
    Int e = 0;
    for (const auto& g : gens_) e = std::max(e, g[i]);
    return e;
  }

  /// Variables i such that some minimal generator is a pure power of x_i.
  std::vector<std::size_t> pure_power_variables() const {
    std::vector<std::size_t> out;
    for (const auto& g : gens_) {
      std::size_t nz = 0, idx = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (g[i] != 0) ++nz, idx = i;
      if (nz == 1) out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const {
    if (gens_.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (k) s += ", ";
      s += monomial_string(gens_[k]);
    }
    return s + ">";
  }

  static std::string monomial_string(std::span<const Int> m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  static std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < gens.size() && minimal; ++j)
        if (j != i && divides(gens[j], gens[i])) minimal = false;
      if (minimal) out.push_back(gens[i]);
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Exponents> gens_;
};

/// Radical of a monomial ideal: each generator replaced by its support.
inline MonomialIdeal radical_monomial(const MonomialIdeal& I) {
  std::vector<Exponents> g;
  for (const auto& m : I.generators()) {
    Exponents s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) s[i] = m[i] > 0 ? 1 : 0;
    g.push_back(std::move(s));
  }
  return MonomialIdeal(I.variables(), std::move(g));
}

inline bool is_squarefree(const MonomialIdeal& I) { return I.is_squarefree(); }

using Face = std::vector<std::size_t>;

/// Simplicial complex on vertices 0..n-1 stored by its facets (sorted, no
/// facet inside another).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t n, std::vector<Face> faces) : n_(n) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (std::size_t v : f) require(v < n, ErrorKind::InvalidArgument, "face vertex out of range");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < faces.size() && maximal; ++j)
        if (i != j && std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
          maximal = false;
      if (maximal) facets_.push_back(faces[i]);
    }
  }

  std::size_t vertices() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_face(const Face& sorted) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
      return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
    });
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < facets_.size(); ++k) {
      if (k) s += ",";
      s += "{";
      for (std::size_t i = 0; i < facets_[k].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(facets_[k][i] + 1);
      }
      s += "}";
    }
    return s + "}";
  }

 private:
  std::size_t n_ = 0;
  std::vector<Face> facets_;
};

}  // namespace toric
