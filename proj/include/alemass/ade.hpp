#pragma once

// Negated Cartan matrices of the simply-laced (ADE) root systems.
// These are exactly the intersection forms of the exceptional curve
// configurations of minimal resolutions of the rational double points,
// so they are the canonical test inputs for the sign certificates:
// each is negative definite, has -2 on the diagonal, +1 for adjacent
// vertices of the Dynkin diagram, and an entrywise nonpositive inverse.

#include "alemass/rational_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alemass {

enum class AdeType { A, D, E };

inline std::string ade_name(AdeType t, int rank) {
  const char* letter = t == AdeType::A ? "A" : t == AdeType::D ? "D" : "E";
  return letter + std::to_string(rank);
}

// Dynkin-diagram edges for the given type/rank (vertices 0..rank-1).
inline std::vector<std::pair<int, int>> dynkin_edges(AdeType type, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case AdeType::A:
      if (rank < 1) throw std::invalid_argument("A_r requires r >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      return edges;
    case AdeType::D:
      if (rank < 4) throw std::invalid_argument("D_r requires r >= 4");
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);  // fork
      return edges;
    case AdeType::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_r requires r in {6,7,8}");
      // Chain 0-1-2-3-4(-5)(-6), branch node attached to vertex 2.
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, rank - 1);
      return edges;
  }
  throw std::invalid_argument("unknown ADE type");
}

// Minus the Cartan matrix: Q_ii = -2, Q_ij = +1 iff i~j in the diagram.
inline RationalMatrix negated_cartan(AdeType type, int rank) {
  RationalMatrix q(rank, rank);
  for (int i = 0; i < rank; ++i) q(i, i) = -2;
  for (const auto& [i, j] : dynkin_edges(type, rank)) {
    q(i, j) = 1;
    q(j, i) = 1;
  }
  return q;
}

// Same matrix in the integer row layout used by IntersectionData.
inline std::vector<std::vector<std::int64_t>> negated_cartan_rows(AdeType type, int rank) {
  std::vector<std::vector<std::int64_t>> q(
      static_cast<std::size_t>(rank), std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -2;
  for (const auto& [i, j] : dynkin_edges(type, rank)) {
    q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
  }
  return q;
}

}  // namespace alemass
