#ifndef DSTAR_PARTITION_HPP
#define DSTAR_PARTITION_HPP

#include <string>
#include <vector>

#include "dstar/action.hpp"
#include "dstar/stars.hpp"

namespace dstar {

// A partition of the vertex set into disjoint covering blocks. Blocks are
// sorted internally and ordered by first element, so equal partitions
// compare equal.
class Partition {
 public:
  Partition() = default;
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
  static Partition from_block_of(const std::vector<int>& block_of);
  static Partition singletons(int n);

  int ground_size() const { return static_cast<int>(block_of_.size()); }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }
  int block_of(int v) const { return block_of_[v]; }

  // All blocks are singletons.
  bool is_trivial() const { return size() == block_of_.size(); }
  // Every block of this partition lies inside a block of coarse.
  bool refines(const Partition& coarse) const;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// B^x is a block for every generator (hence every element).
bool is_invariant(const GraphAction& act, const Partition& p);

// Quotient graph: one vertex per block, adjacent when any cross edge
// exists. Quotient vertex i corresponds to p.block(i).
Graph quotient_graph(const Graph& g, const Partition& p);

// The induced action of act.group() on the quotient vertices.
GraphAction quotient_action(const GraphAction& act, const Partition& p,
                            const Graph& quotient);

// coarse/fine: the blocks of coarse, read as sets of fine-quotient
// vertices.
Partition quotient_partition(const Partition& coarse, const Partition& fine);

// Kernel of the action on blocks (elements fixing every block setwise).
PermGroup block_kernel(const GraphAction& act, const Partition& p);

// The quintuple (v,k,r,b,d) plus the component count c of the cross-block
// bipartite graph. Every entry is verified to be independent of the choice
// of vertex / quotient arc; disagreement raises NotInvariant.
struct ParamVector {
  int v = 0;  // block size
  int k = 0;  // |Gamma(B) cap C|
  int r = 0;  // quotient-neighbor count of a vertex
  int b = 0;  // quotient valency
  int d = 0;  // valency of Gamma[B,C]
  int c = 0;  // c(Gamma[B,C])

  bool multicover() const { return v == k && v >= 2; }
  bool cover() const { return multicover() && d == 1; }
};

ParamVector params(const GraphAction& act, const Partition& p);

// Reducible triple: nontrivial invariant partition, nonempty quotient,
// not a multicover -- the inputs the refinement step accepts.
bool is_reducible(const GraphAction& act, const Partition& p,
                 std::string* reason = nullptr);

// The bipartite subgraph Gamma[B,C] induced between Gamma(B) cap C and
// B cap Gamma(C), for a quotient arc (bq, cq).
Graph cross_block_graph(const Graph& g, const Partition& p, int bq, int cq);

// Gamma_B[sigma]: the r-star of the quotient at block(sigma) whose arcs
// point to the blocks sigma has neighbors in.
Star vertex_quotient_star(const Graph& g, const Partition& p,
                          const Graph& quotient, int sigma);

// The pulled-back center of a 1-star of the quotient:
// intersection over (B,C) in S of block(B) cap Gamma(block(C)).
std::vector<int> center_intersection(const Graph& g, const Partition& p,
                                     const Graph& quotient, const Star& s);

}  // namespace dstar

#endif
