#ifndef DSTAR_CONSTRUCT_HPP
#define DSTAR_CONSTRUCT_HPP

#include <vector>

#include "dstar/partition.hpp"
#include "dstar/stars.hpp"

namespace dstar {

// The double-star graph Pi(Sigma, Theta): one vertex per star of
// St(Theta), an edge {S,T} per orbit member (S,T), carrying the inherited
// X-action and the partition of vertices by star center.
struct DoubleStarGraph {
  GraphAction pi;                  // Pi with X acting on its vertices
  std::vector<Star> vertex_stars;  // Pi vertex -> star of the base graph
  Partition center_blocks;         // S_sigma = stars centered at sigma
};

// Requires Theta X-symmetric (self-paired, (X,1)-arc-transitive); throws
// NotSelfPaired / NotArcTransitiveOrbit otherwise.
DoubleStarGraph double_star_graph(const ThetaOrbit& theta);

// Theta(i): componentwise truncation of every member pair.
ThetaOrbit truncate(const ThetaOrbit& theta, int i);

// One step of the star-growing machinery around a member star.
struct GrowthResult {
  Star star;
  std::vector<Star> successors;        // Theta+(S)
  std::vector<Star> predecessors;      // Theta-(S)
  std::vector<Arc> extended_plus;      // Theta+[S]
  std::vector<Arc> extended_minus;     // Theta-[S]
  bool plus_is_star = false;           // Theta+[S] obeys the (l+1,r) law
  bool minus_is_star = false;
  bool criterion = false;  // some T in Theta+-(S): X_S cap X_tau = X_T cap X_sigma
};

// Throws RTooSmall when r = 1 (the extension set would be empty).
GrowthResult grow(const ThetaOrbit& theta, const Star& s);

// For self-paired Theta whose growth criterion holds: the orbit
// Theta^2 = {(Theta[L], Theta[R]) | (L,R) in Theta} one level up.
ThetaOrbit grow_orbit(const ThetaOrbit& theta);

// Stabilizer chain X_{S(0)} >= ... >= X_{S(l)} of the representative star,
// as subgroup orders, plus the settling index h: the least h with
// X_{S(h)} = X_{S(l)}. Requires valency >= 3 and r >= 2.
struct StabilizerChain {
  std::vector<std::size_t> orders;  // length l+1
  int h = 1;
};

StabilizerChain stabilizer_chain(const ThetaOrbit& theta);

// Sabidussi coset graph Cos(X, G, GzG): vertices are right cosets of G,
// Gx ~ Gy iff x y^{-1} in GzG. Requires G < X proper, z outside G, and a
// symmetric double coset GzG = Gz^{-1}G.
struct CosetGraph {
  GraphAction action;                      // graph plus right-multiplication action
  std::vector<Permutation> coset_reps;     // least element of each coset
};

CosetGraph coset_graph(const PermGroup& x, const PermGroup& g,
                       const Permutation& z);

}  // namespace dstar

#endif
