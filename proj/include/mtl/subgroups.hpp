#pragma once

// Finitely generated subgroups of a free group as folded core graphs
// (Stallings graphs), with membership, pullbacks, conjugacy and exact
// malnormality tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mtl/words.hpp"

namespace mtl {

/// Result of a membership query.  `expression` is a word in the defining
/// generators of the graph (letter i stands for generators()[i-1]).
struct Membership {
  bool member = false;
  Word expression;
};

/// A based, folded, core graph over an alphabet of `alphabet()` generators.
/// Vertices are numbered by breadth-first search from the basepoint (vertex
/// 0), visiting edge slots in letter order a, A, b, B, ...; so two graphs
/// represent the same subgroup iff they compare equal.
///
/// Every edge also carries an expression in the defining generators such
/// that the product of expressions along a closed path at the basepoint
/// evaluates to the word read along it.  This is what lets member() return
/// witnesses in the original generators.
class SubgroupGraph {
 public:
  /// The trivial subgroup over a zero-letter alphabet.
  SubgroupGraph() : SubgroupGraph(trivial(0)) {}

  /// Stallings folding of the subgroup generated by `generators` inside the
  /// free group on `alphabet` letters.
  static SubgroupGraph fold(std::size_t alphabet,
                            std::span<const Word> generators);
  static SubgroupGraph fold(std::size_t alphabet,
                            std::initializer_list<Word> generators) {
    return fold(alphabet,
                std::span<const Word>(generators.begin(), generators.size()));
  }
  static SubgroupGraph trivial(std::size_t alphabet);
  /// The subgroup generated by the listed basis letters.
  static SubgroupGraph free_factor(std::size_t alphabet,
                                   std::span<const Letter> letters);

  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept {
    return alphabet_ == 0 ? 1 : targets_.size() / (2 * alphabet_);
  }
  std::size_t edge_count() const noexcept { return edges_; }
  /// Rank of the subgroup: E - V + 1.
  std::size_t rank() const noexcept { return edges_ + 1 - vertex_count(); }
  bool is_trivial() const noexcept { return edges_ == 0; }
  bool is_whole_group() const noexcept;

  /// Target of the edge leaving `v` labelled `x`, or -1.
  std::int32_t target(std::size_t v, Letter x) const {
    return targets_[v * 2 * alphabet_ + letter_rank(x)];
  }
  std::size_t degree(std::size_t v) const;

  const std::vector<Word>& generators() const noexcept { return generators_; }
  /// Free basis read off the breadth-first spanning tree.
  const std::vector<Word>& basis() const noexcept { return basis_; }
  /// The spanning-tree word from the basepoint to `v`.
  const Word& path_word(std::size_t v) const { return tree_words_[v]; }

  bool contains(const Word& w) const;
  Membership member(const Word& w) const;
  /// Evaluates an expression over generators() to a word.
  Word evaluate(const Word& expression) const;

  /// g^-1 A g.
  SubgroupGraph conjugate(const Word& g) const;
  /// Vertex reached from `start` by reading `w`, or nullopt.
  std::optional<std::size_t> read(std::size_t start, const Word& w) const;

  /// Graphviz rendering: vertices numbered from 0 (basepoint 0), one edge
  /// per positive letter with label="x".
  std::string to_dot(const FreeBasis& basis) const;

  friend bool operator==(const SubgroupGraph& a, const SubgroupGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.targets_ == b.targets_;
  }

 private:
  friend class GraphFolder;

  SubgroupGraph(std::size_t alphabet, std::vector<std::int32_t> targets,
                std::vector<Word> labels, std::vector<Word> generators);

  std::size_t alphabet_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::int32_t> targets_;  // vertex * 2n + letter_rank
  std::vector<Word> labels_;           // generator expression per slot
  std::vector<Word> generators_;
  std::vector<Word> basis_;
  std::vector<Word> tree_words_;
};

struct PullbackComponent {
  /// A intersected with g B g^-1 for g = representative.
  SubgroupGraph intersection;
  Word representative;
  std::size_t rank = 0;
  bool based = false;
};

/// Components of the fiber product of A and B: the based component first,
/// then every component with nontrivial fundamental group.
std::vector<PullbackComponent> pullback(const SubgroupGraph& a,
                                        const SubgroupGraph& b);

/// A intersected with B.
SubgroupGraph intersect(const SubgroupGraph& a, const SubgroupGraph& b);

/// Some g with g^-1 A g == B, verified by membership.
std::optional<Word> subgroups_conjugate(const SubgroupGraph& a,
                                        const SubgroupGraph& b);

/// Some y with y w y^-1 in Q, if w is conjugate into Q.
std::optional<Word> conjugate_into(const SubgroupGraph& q, const Word& w);

struct MalnormalityWitness {
  std::size_t first = 0;   // index of H_i
  std::size_t second = 0;  // index of H_j
  Word conjugator;         // g
  Word common;             // nontrivial, in H_i and in g H_j g^-1
};

struct MalnormalityReport {
  bool malnormal = true;
  std::optional<MalnormalityWitness> witness;
};

/// Exact malnormality of a family via pullback components.  Trivial members
/// never cause a violation.
MalnormalityReport is_malnormal_family(std::span<const SubgroupGraph> family);

}  // namespace mtl
