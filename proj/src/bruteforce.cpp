#include "ripsedge/bruteforce.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace ripsedge::bruteforce {

namespace {

// Rank of a GF(2) matrix given as bit-packed rows.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    const std::size_t word = static_cast<std::size_t>(c) / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][word] & mask) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !(rows[r][word] & mask)) continue;
      for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BettiNumbers betti_at(const Filtration& F, double r) {
  const auto present = complex_at(F, r);

  std::map<int, int> vertex_index;
  std::map<std::pair<int, int>, int> edge_index;
  int triangle_count = 0;
  for (const auto& s : present) {
    if (s.dim == 0) vertex_index.emplace(s.v[0], static_cast<int>(vertex_index.size()));
    else if (s.dim == 1)
      edge_index.emplace(std::pair{s.v[0], s.v[1]}, static_cast<int>(edge_index.size()));
    else
      ++triangle_count;
  }
  const int V = static_cast<int>(vertex_index.size());
  const int E = static_cast<int>(edge_index.size());

  // boundary of edges: rows = edges, columns = vertices
  const std::size_t vwords = static_cast<std::size_t>(V + 63) / 64;
  std::vector<std::vector<std::uint64_t>> d1;
  d1.reserve(E);
  for (const auto& s : present) {
    if (s.dim != 1) continue;
    std::vector<std::uint64_t> row(vwords, 0);
    for (int endpoint : {s.v[0], s.v[1]}) {
      const int col = vertex_index.at(endpoint);
      row[static_cast<std::size_t>(col) / 64] ^= std::uint64_t{1} << (col % 64);
    }
    d1.push_back(std::move(row));
  }
  const int rank_d1 = gf2_rank(std::move(d1), V);

  // boundary of triangles: rows = triangles, columns = edges
  const std::size_t ewords = static_cast<std::size_t>(E + 63) / 64;
  std::vector<std::vector<std::uint64_t>> d2;
  d2.reserve(triangle_count);
  for (const auto& s : present) {
    if (s.dim != 2) continue;
    std::vector<std::uint64_t> row(ewords, 0);
    const std::pair<int, int> faces[3] = {
        {s.v[0], s.v[1]}, {s.v[0], s.v[2]}, {s.v[1], s.v[2]}};
    for (const auto& f : faces) {
      const int col = edge_index.at(f);
      row[static_cast<std::size_t>(col) / 64] ^= std::uint64_t{1} << (col % 64);
    }
    d2.push_back(std::move(row));
  }
  const int rank_d2 = gf2_rank(std::move(d2), E);

  return {V - rank_d1, (E - rank_d1) - rank_d2};
}

bool selective_triangle_member(const FiniteMetricSpace& X, int a, int b, int c, double r1,
                               double r2) {
  const int verts[3] = {a, b, c};
  double diam = 0.0;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q) diam = std::max(diam, X.dist(verts[p], verts[q]));
  if (!(diam < r1)) return false;

  // try every assignment of the three vertices to two groups
  for (int mask = 0; mask < 8; ++mask) {
    double diam0 = 0.0, diam1 = 0.0;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q) {
        const bool gp = (mask >> p) & 1, gq = (mask >> q) & 1;
        if (gp != gq) continue;
        const double d = X.dist(verts[p], verts[q]);
        (gp ? diam1 : diam0) = std::max(gp ? diam1 : diam0, d);
      }
    if (diam0 < r2 && diam1 < r2) return true;
  }
  return false;
}

}  // namespace ripsedge::bruteforce
