#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "matcat/numeric.hpp"

namespace matcat {

/// The pairing bijection on the index space: Cantor pairing with the minor
/// argument second, pair(x, y) = (x+y)(x+y+1)/2 + y.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

enum class SetKind { empty, singleton, finite, all, pair_image, diag_image };

/// Decidable descriptor of a subset of the naturals, closed under the two
/// constructions the ambient category performs: images of products and of
/// diagonals under the pairing bijection. Membership is decided by structural
/// recursion; enumeration yields members ascending without repetition.
class IndexSet {
 public:
  static IndexSet empty();
  static IndexSet singleton(const Nat& i);
  static IndexSet finite(std::vector<Nat> elems);
  static IndexSet all_naturals();
  /// gamma(A x B).
  static IndexSet pair_image(IndexSet a, IndexSet b);
  /// gamma({(x, x) : x in A}).
  static IndexSet diag_image(IndexSet a);

  SetKind kind() const;

  bool member(const Nat& i) const;
  bool is_empty() const;    // semantic (a pair image of an empty set is empty)
  bool is_finite() const;

  /// The n smallest members, ascending; fewer when the set is smaller.
  std::vector<Nat> enumerate_upto(std::size_t n) const;
  /// All members of a finite set, ascending. Throws Error when infinite.
  std::vector<Nat> enumerate_all() const;

  /// Structural equality of descriptors.
  bool operator==(const IndexSet& o) const;

 private:
  struct Node;
  explicit IndexSet(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

/// Extensional equality where decidable: structural match, or equal
/// enumerations when both sides are finite.
bool same_index_set(const IndexSet& a, const IndexSet& b);

/// Parenthesized shape of a tensor word, for decoding product indices.
/// Leaves carry the index set of the corresponding factor so membership of
/// the decoded components can be enforced.
class WordShape {
 public:
  static WordShape leaf(IndexSet s);
  static WordShape node(WordShape left, WordShape right);

  bool is_leaf() const;
  const IndexSet& leaf_set() const;
  WordShape left() const;
  WordShape right() const;

 private:
  struct Node;
  explicit WordShape(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

/// Nested unpairing of z along the shape's tree, components in frontier
/// order. Throws MembershipError when a decoded component falls outside the
/// leaf's index set.
std::vector<Nat> decode_word_index(const Nat& z, const WordShape& shape);

}  // namespace matcat
