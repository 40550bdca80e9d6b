#pragma once

#include <memory>
#include <span>
#include <vector>

#include "matcat/mat_morphism.hpp"

namespace matcat {

/// Parenthesized tensor word over matrix-category objects, with explicit
/// unit leaves. Realization evaluates the word to its object.
class TensorWord {
 public:
  static TensorWord unit();
  static TensorWord leaf(MatObject obj);
  static TensorWord node(TensorWord left, TensorWord right);

  bool is_unit() const;
  bool is_leaf() const;
  bool is_node() const;
  const MatObject& leaf_object() const;
  TensorWord left() const;
  TensorWord right() const;

  MatObject realize() const;
  /// Non-unit leaves, left to right.
  std::vector<MatObject> frontier() const;
  std::size_t leaf_count() const;
  WordShape shape() const;

  bool operator==(const TensorWord& o) const;

 private:
  struct Node;
  explicit TensorWord(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

/// Morphism carrying the parenthesization of its endpoints, so that the
/// coherence relation between morphisms is decidable.
struct TypedMor {
  TensorWord dom_word;
  TensorWord cod_word;
  MatMorphism mor;

  TypedMor(TensorWord dom, TensorWord cod, MatMorphism m);
};

TypedMor typed_id(const TensorWord& w);
TypedMor typed_compose(const TypedMor& g, const TypedMor& f);
TypedMor typed_tensor(const TypedMor& f, const TypedMor& g);

/// The canonical isomorphism realize(src) -> realize(dst) generated by
/// associators, units and identities: strip unit leaves innermost-first,
/// reassociate to the left comb, then undo the destination normalization.
/// Throws NoCoherenceError when the non-unit frontiers differ.
TypedMor coherence_iso(const TensorWord& src, const TensorWord& dst);

/// F doteq G: G equals X o F o Y for coherence isomorphisms X, Y determined
/// by the four endpoint words; decided exactly on the probe rows (probes
/// index the realization of G's domain word).
bool doteq(const TypedMor& F, const TypedMor& G, std::span<const Nat> probes);
/// Witness description of the first failing probe row, empty on success.
std::string doteq_diff(const TypedMor& F, const TypedMor& G,
                       std::span<const Nat> probes);

}  // namespace matcat
