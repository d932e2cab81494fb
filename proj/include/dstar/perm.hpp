#ifndef DSTAR_PERM_HPP
#define DSTAR_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dstar/errors.hpp"

namespace dstar {

// A permutation of {0,...,n-1}, stored as its image vector.
// Composition is left-to-right: (a * b) moves p to b[a[p]], matching the
// exponent convention p^(xy) = (p^x)^y used for group actions throughout.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int degree);
  // Validates that images is a bijection.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int p) const { return img_[p]; }
  bool is_identity() const;

  Permutation operator*(const Permutation& right) const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }

  const std::vector<int>& images() const { return img_; }

  // Cycle notation, 1-indexed: "(1 5)(2 4)"; the identity prints as "(1)".
  std::string cycles() const;

 private:
  std::vector<int> img_;
};

// 1-indexed cycle-notation parser. Points inside parentheses are separated
// by whitespace or commas; for degree <= 9 an unseparated digit run such as
// "(345)" is read digit by digit, which covers the compact style of
// hand-written element lists.
Permutation parse_cycles(const std::string& text, int degree);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

// A permutation group materialized as its full element list. Elements are
// generated by breadth-first closure over the generators, so elements()[0]
// is always the identity and every element records how it was first reached
// (parent element index, generator index); induced actions on other vertex
// sets are rebuilt from generator images along those derivations.
class PermGroup {
 public:
  PermGroup() = default;

  static constexpr std::size_t kDefaultClosureCap = 1000000;

  // Closure of the generators; throws ClosureCapExceeded past the cap and
  // DegreeMismatch if the generators disagree on degree.
  static PermGroup closure(const std::vector<Permutation>& generators,
                           std::size_t cap = kDefaultClosureCap);

  // Wraps an explicit element list (e.g. a stabilizer obtained by
  // filtering). The list must form a subgroup; this is asserted cheaply
  // (identity present) here and exhaustively in tests.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& element(int i) const { return elements_[i]; }
  const Permutation& identity() const { return elements_[0]; }

  bool contains(const Permutation& p) const;
  // Index of p in elements(); -1 when absent.
  int index_of(const Permutation& p) const;

  // Derivation of element i as (parent index, generator index); the identity
  // has (-1, -1). Empty for groups built via from_elements.
  const std::vector<std::pair<int, int>>& derivations() const { return deriv_; }
  bool has_derivations() const { return !deriv_.empty(); }

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_elements_as(const PermGroup& g) const;

  // Elementwise intersection of two element lists of equal degree.
  static PermGroup intersection(const PermGroup& a, const PermGroup& b);

 private:
  void rebuild_index();

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
  std::vector<std::pair<int, int>> deriv_;
  std::unordered_map<Permutation, int, PermHash> index_;
};

// Generator catalogs for the groups the worked instances use.
std::vector<Permutation> alternating_generators(int n);
std::vector<Permutation> symmetric_generators(int n);
std::vector<Permutation> cyclic_generators(int n);
std::vector<Permutation> dihedral_generators(int n);
// Sym([n]) wr Sym(2) acting imprimitively on 2n points: both coordinate
// copies of Sym(n) plus the block swap i <-> n+i.
std::vector<Permutation> wreath_sym2_generators(int n);

}  // namespace dstar

#endif
