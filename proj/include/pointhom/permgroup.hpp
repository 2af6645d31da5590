#pragma once

#include <set>
#include <string>
#include <vector>

#include "pointhom/scalar.hpp"

namespace pointhom {

/// A permutation of {0,...,k-1} stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  /// (f.then_apply(g))(p) = g(f(p)) is *not* this; compose(f, g)(p) = f(g(p)).
  static Perm compose(const Perm& f, const Perm& g);
  Perm inverse() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// Permutation group represented by a deterministic base and strong generating
/// set (non-randomized Schreier-Sims). Immutable after construction.
class PermGroup {
 public:
  PermGroup() = default;

  /// base_prefix, when given, is forced to be the leading part of the base,
  /// enabling pointwise tuple stabilizers straight off the chain.
  static PermGroup from_generators(const std::vector<Perm>& gens, int degree,
                                   const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return input_gens_; }
  const std::vector<int>& base() const { return base_; }
  const BigInt& order() const { return order_; }

  bool contains(const Perm& g) const;
  std::vector<int> orbit(int p) const;
  bool is_transitive() const;

  /// Breadth-first closure of t under the generators, acting coordinatewise.
  std::set<std::vector<int>> orbit_of_tuple(const std::vector<int>& t) const;
  BigInt orbit_of_tuple_size(const std::vector<int>& t) const;
  bool tuples_equivalent(const std::vector<int>& a, const std::vector<int>& b) const;

  /// Pointwise stabilizer of all entries of t.
  PermGroup tuple_stabilizer(const std::vector<int>& t) const;

  std::string order_string() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;              // strong generators fixing the earlier base points
    std::vector<int> orbit;              // BFS order from base_point
    std::vector<Perm> transversal;       // indexed by point; transversal[p](base_point) = p
    std::vector<char> in_orbit;          // indexed by point
  };

  void build(std::vector<Perm> gens, const std::vector<int>& base_prefix);
  void append_base_point(int p);
  void recompute_level(int i);
  std::vector<Perm> level_gens(int i) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Perm, int> strip(const Perm& g, int from_level) const;

  int degree_ = 0;
  std::vector<Perm> input_gens_;
  std::vector<Perm> strong_gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace pointhom
