#pragma once

#include "matcat/coherence.hpp"
#include "matcat/encoding.hpp"

namespace matcat {

/// The canonical isomorphism y* (x) x* -> (x (x) y)* built from evaluation
/// and coevaluation of the strict base.
GradedMorphism gamma_dual(const GradedObject& x, const GradedObject& y);

/// The two-stage isomorphism y* (x) y (x) x* (x) x -> (x(x)y)* (x) (x(x)y)
/// driving the multiplication: braid y past x*, then gamma_dual paired with
/// the braiding of the non-dual halves.
GradedMorphism big_gamma(const BaseCategory& base, const GradedObject& x,
                         const GradedObject& y);

/// Identity blocks between objects with equal per-degree dimensions.
/// Used only to sabotage the construction in mutation tests.
GradedMorphism degreewise_identity(const GradedObject& src,
                                   const GradedObject& dst);

/// Deliberate defects for mutation sensitivity checks: a well-typed but
/// wrong multiplication entry, and a product on the square that skips the
/// middle braiding.
struct BialgebraOptions {
  bool gamma_as_identity = false;
  bool mu_hat_without_braiding = false;
};

/// The bialgebra object over the fixed encoding, with its structure maps
/// carried as word-typed morphisms so the coherence relation applies.
struct Bialgebra {
  BaseCategory base;
  BialgebraOptions opts;
  MatObject object;      // fiber gamma(x,x) |-> decode(x)* (x) decode(x)
  TensorWord word;       // the bare leaf
  TypedMor mu;           // object (x) object -> object
  TypedMor eta;          // I -> object
  TypedMor delta;        // object -> object (x) object
  TypedMor epsilon;      // object -> I
  TypedMor mu_hat;       // (H(x)H)(x)(H(x)H) -> H(x)H

  /// The entry morphism the multiplication places in its rows; respects the
  /// sabotage options, so axiom checks exercise the structure actually built.
  GradedMorphism gamma(const GradedObject& x, const GradedObject& y) const;

  MatObject module_object(const GradedObject& v) const;
  /// The action object (x) j_V -> j_V.
  TypedMor action(const GradedObject& v) const;
};

Bialgebra make_bialgebra(const BaseCategory& base,
                         const BialgebraOptions& opts = {});

/// Exact base-level identities underpinning the bialgebra axioms.
bool gamma_pentagon_holds(const BaseCategory& base, const GradedObject& x,
                          const GradedObject& y, const GradedObject& z);
bool eval_gamma_holds(const BaseCategory& base, const GradedObject& x,
                      const GradedObject& y);
bool coev_shuffle_holds(const GradedObject& x);

}  // namespace matcat
