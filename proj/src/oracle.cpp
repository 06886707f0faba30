#include "fqt/oracle.hpp"

#include <deque>
#include <set>

namespace fqt {

namespace {

// All polynomials of degree <= D (including 0), in a stable order.
std::vector<Poly> polys_up_to(const FieldSpec& F, int D) {
  std::vector<Poly> out{Poly::zero(F)};
  std::vector<uint32_t> c(size_t(D) + 1, 0);
  // Counting in base q over D+1 coefficient slots enumerates every tuple.
  while (true) {
    size_t i = 0;
    while (i < c.size() && c[i] == F.q() - 1) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
    out.push_back(Poly(F, c));
  }
  return out;
}

}  // namespace

GammaBall enumerate_gamma_ball(const FieldSpec& F, int D) {
  if (D < 0) throw BallTooLarge("negative degree bound");
  double tuples = 1;
  for (int i = 0; i < 4 * (D + 1); ++i) tuples *= F.q();
  if (tuples > 2.0e6)
    throw BallTooLarge("gamma ball q=" + std::to_string(F.q()) + " D=" +
                       std::to_string(D) + " exceeds the enumeration guard");
  std::vector<Poly> polys = polys_up_to(F, D);
  std::set<GammaElem> seen;
  GammaBall ball{D, {}};
  for (const Poly& a : polys)
    for (const Poly& b : polys)
      for (const Poly& c : polys)
        for (const Poly& d : polys) {
          Poly det = a * d - b * c;
          if (!det.is_constant() || det.is_zero()) continue;
          GammaElem g = make_matrix(a, b, c, d);
          if (seen.insert(g).second) ball.elems.push_back(g);
        }
  return ball;
}

std::vector<Vertex> TreeBall::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj.size());
  for (const auto& [v, _] : adj) out.push_back(v);
  return out;
}

TreeBall bfs_ball(const Vertex& center, int radius) {
  TreeBall ball{center, radius, {}};
  std::map<Vertex, int> dist{{center, 0}};
  std::deque<Vertex> frontier{center};
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop_front();
    int dv = dist[v];
    auto& entry = ball.adj[v];
    for (const Vertex& w : neighbors(v)) {
      if (dv < radius) {
        entry.push_back(w);
        if (!dist.count(w)) {
          dist[w] = dv + 1;
          frontier.push_back(w);
        }
      } else if (dist.count(w) && dist[w] <= radius) {
        // Boundary vertices keep only their in-ball edges.
        entry.push_back(w);
      }
    }
  }
  return ball;
}

int bfs_distance(const TreeBall& ball, const Vertex& v, const Vertex& w) {
  if (!ball.contains(v)) throw OutOfBall("start vertex " + v.to_string() + " not in ball");
  if (!ball.contains(w)) throw OutOfBall("target vertex " + w.to_string() + " not in ball");
  std::map<Vertex, int> dist{{v, 0}};
  std::deque<Vertex> frontier{v};
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop_front();
    if (x == w) return dist[x];
    for (const Vertex& y : ball.adj.at(x)) {
      if (!ball.contains(y) || dist.count(y)) continue;
      dist[y] = dist[x] + 1;
      frontier.push_back(y);
    }
  }
  throw OutOfBall("no in-ball path between " + v.to_string() + " and " + w.to_string());
}

std::vector<std::pair<GammaElem, Triple>> reduce_bruteforce(const Triple& T,
                                                            const GammaBall& ball) {
  std::vector<std::pair<GammaElem, Triple>> hits;
  for (const GammaElem& g : ball.elems) {
    Triple img = act_triple(g, T);
    if (membership(img).in_S()) hits.emplace_back(g, img);
  }
  return hits;
}

}  // namespace fqt
