#pragma once

// Instance generators for standard configurations.

#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/toric.hpp"

namespace toric::gen {

/// Columns e_(i1) + e_(i2) + ... + e_(ik) over all index tuples in
/// lexicographic order (last index fastest); one block of rows per factor.
inline IntMatrix segre(const std::vector<std::size_t>& dims) {
  require(!dims.empty(), ErrorKind::InvalidArgument, "segre needs at least one factor");
  std::size_t rows = 0, cols = 1;
  for (std::size_t d : dims) {
    require(d >= 1, ErrorKind::InvalidArgument, "segre factor dimensions must be positive");
    rows += d;
    cols *= d;
  }
  IntMatrix M(rows, cols);
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t offset = 0;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      M(offset + idx[f], c) = 1;
      offset += dims[f];
    }
    for (std::size_t f = dims.size(); f-- > 0;) {
      if (++idx[f] < dims[f]) break;
      idx[f] = 0;
    }
  }
  return M;
}

/// Columns e_i + e_j, i < j.
inline IntMatrix hypersimplex2(std::size_t d) {
  require(d >= 2, ErrorKind::InvalidArgument, "hypersimplex2 needs d >= 2");
  IntMatrix M(d, d * (d - 1) / 2);
  std::size_t c = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j, ++c) {
      M(i, c) = 1;
      M(j, c) = 1;
    }
  return M;
}

inline IntMatrix monomial_curve(const std::vector<Int>& exponents) {
  require(!exponents.empty(), ErrorKind::InvalidArgument, "monomial curve needs exponents");
  IntMatrix M(1, exponents.size());
  for (std::size_t j = 0; j < exponents.size(); ++j) M(0, j) = static_cast<long>(exponents[j]);
  return M;
}

/// Vertex-edge incidence of a graph given by its edge list.
inline IntMatrix incidence(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix M(vertices, edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    M(edges[e].first, e) += 1;
    M(edges[e].second, e) += 1;
  }
  return M;
}

/// A cycle of length s with an odd cycle of length l glued at each of its
/// vertices. Vertices 0..s-1 form the main cycle.
inline std::vector<std::pair<std::size_t, std::size_t>> tt_graph_edges(std::size_t s, std::size_t l,
                                                                       std::size_t* vertices = nullptr) {
  require(s >= 3, ErrorKind::InvalidArgument, "tt-graph needs a main cycle of length s >= 3");
  require(l >= 3 && l % 2 == 1, ErrorKind::InvalidArgument, "tt-graph needs odd cycles of length l >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < s; ++i) edges.emplace_back(i, (i + 1) % s);
  std::size_t next = s;
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t prev = i;
    for (std::size_t k = 0; k + 1 < l; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, i);
  }
  if (vertices) *vertices = next;
  return edges;
}

inline IntMatrix tt_graph(std::size_t s, std::size_t l) {
  std::size_t v = 0;
  auto edges = tt_graph_edges(s, l, &v);
  return incidence(v, edges);
}

/// Margins of r x c tables: row sums then column sums.
inline IntMatrix transport(std::size_t r, std::size_t c) { return segre({r, c}); }

inline IntMatrix lawrence(const IntMatrix& A) { return lawrence_lifting(A); }

}  // namespace toric::gen
