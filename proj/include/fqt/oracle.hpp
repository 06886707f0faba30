#pragma once

#include <map>
#include <vector>

#include "fqt/domain.hpp"
#include "fqt/tree.hpp"

namespace fqt {

// Exhaustive window into Gamma: all PGL-distinct matrices with polynomial
// entries of degree <= D and unit determinant.  Used as independent evidence
// against the reduction algorithm; sizes are guarded, never truncated.
struct GammaBall {
  int D;
  std::vector<GammaElem> elems;
};

// Throws BallTooLarge when q^(4(D+1)) exceeds the enumeration guard.
GammaBall enumerate_gamma_ball(const FieldSpec& F, int D);

// Materialized tree ball with adjacency lists, built by BFS over
// tree::neighbors.
struct TreeBall {
  Vertex center;
  int radius;
  std::map<Vertex, std::vector<Vertex>> adj;

  bool contains(const Vertex& v) const { return adj.count(v) > 0; }
  std::vector<Vertex> vertices() const;
};

TreeBall bfs_ball(const Vertex& center, int radius);

// BFS distance inside the ball; throws OutOfBall if an endpoint is missing.
int bfs_distance(const TreeBall& ball, const Vertex& v, const Vertex& w);

// Every gamma in the ball mapping T into S, with images.  An empty result
// means the window was too small, not that the orbit misses S.
std::vector<std::pair<GammaElem, Triple>> reduce_bruteforce(const Triple& T,
                                                            const GammaBall& ball);

}  // namespace fqt
