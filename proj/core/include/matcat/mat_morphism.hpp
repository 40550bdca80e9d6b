#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "matcat/mat_object.hpp"

namespace matcat {

/// One row of a matrix morphism: the finite set of nonzero entries, keyed by
/// codomain index. Entries are never zero; an absent key means the zero
/// morphism, so finiteness of the support is structural.
using MatRow = std::map<Nat, GradedMorphism>;

/// Morphism of the ambient matrix category. Rows are computed lazily but
/// always materialize a finite support.
class MatMorphism {
 public:
  MatMorphism(MatObject dom, MatObject cod,
              std::function<MatRow(const Nat&)> rows);

  const MatObject& dom() const { return dom_; }
  const MatObject& cod() const { return cod_; }

  /// The full finite row at a domain index. Throws MembershipError when the
  /// index is outside the domain's index set.
  MatRow row(const Nat& x) const;

 private:
  MatObject dom_, cod_;
  std::function<MatRow(const Nat&)> rows_;
};

enum class Dir { forward, inverse };
enum class UnitSide { left, right };

MatMorphism mat_id(const MatObject& f);
MatMorphism mat_zero(const MatObject& f, const MatObject& g);
MatMorphism mat_add(const MatMorphism& F, const MatMorphism& G);
MatMorphism mat_negate(const MatMorphism& F);
MatMorphism mat_scale(const Rat& s, const MatMorphism& F);
/// (G o F)(x, y) = sum over F's row support at x of G(z, y) o F(x, z).
MatMorphism mat_compose(const MatMorphism& G, const MatMorphism& F);
MatMorphism mat_tensor(const MatMorphism& F, const MatMorphism& G);

/// Associativity constraint A_{f,g,h}: (f(x)g)(x)h -> f(x)(g(x)h); entries
/// are base identities on matched index triples.
MatMorphism mat_assoc(const MatObject& f, const MatObject& g,
                      const MatObject& h, Dir dir);
/// Unit constraints R_f: f(x)I -> f and L_f: I(x)f -> f and their inverses.
MatMorphism mat_unit(const MatObject& f, UnitSide side, Dir dir);
/// Braiding C_{f,g}: f(x)g -> g(x)f with base braidings as entries.
MatMorphism mat_braid(const BaseCategory& base, const MatObject& f,
                      const MatObject& g, Dir dir);
/// Twist: diagonal with base twists as entries.
MatMorphism mat_twist(const BaseCategory& base, const MatObject& f);

struct Coproduct {
  MatObject object;
  std::vector<MatMorphism> injections;
};
/// Coproduct of finitely many finite-domain objects with pairwise disjoint
/// index sets. Throws DisjointnessError on overlap.
Coproduct coproduct(const std::vector<MatObject>& summands);
/// The unique morphism out of the coproduct of the targets' domains
/// restricting to each target.
MatMorphism copair(const std::vector<MatMorphism>& targets);

/// Inclusion of the base category at a chosen point: a singleton object.
MatObject embed_object(const GradedObject& v, const Nat& at);
MatMorphism embed_morphism(const GradedMorphism& alpha, const Nat& from,
                           const Nat& to);

/// Evaluation D_f: f*(x)f -> I (defined for every object).
MatMorphism eval_sharp(const MatObject& f);
/// Coevaluation B_f: I -> f(x)f*. Throws DualityObstructionError when the
/// index set of f is infinite: the row at the unit point would have
/// infinite support.
MatMorphism coev_sharp(const MatObject& f);

/// Exact row-by-row comparison at the given probe indices.
bool equal_on_rows(const MatMorphism& F, const MatMorphism& G,
                   std::span<const Nat> probes);
/// Exhaustive comparison; requires a finite domain.
bool equal_on_rows(const MatMorphism& F, const MatMorphism& G);
/// Human-readable description of the first difference at a probe row, empty
/// when the rows agree. Used for failure witnesses.
std::string diff_on_rows(const MatMorphism& F, const MatMorphism& G,
                         std::span<const Nat> probes);

}  // namespace matcat
