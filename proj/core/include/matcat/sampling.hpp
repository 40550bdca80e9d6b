#pragma once

#include "matcat/coherence.hpp"
#include "matcat/rng.hpp"

namespace matcat {

/// Bounds for randomly generated probe data. Degrees range over
/// [-max_degree, max_degree], per-degree dimensions are at most max_dim, and
/// objects carry at most max_support distinct basis slots.
struct SampleBounds {
  long max_degree = 2;
  long max_dim = 2;
  int max_support = 2;
};

/// Random base object within bounds (never the zero object).
GradedObject sample_object(Rng& rng, const SampleBounds& b);

/// Random base object with at most max_total_dim basis slots, degrees within
/// bounds. Keeps iterated tensor powers desk-sized.
GradedObject sample_small_object(Rng& rng, const SampleBounds& b,
                                 int max_total_dim);

/// Random morphism src -> dst with small rational entries.
GradedMorphism sample_morphism(Rng& rng, const GradedObject& src,
                               const GradedObject& dst);

/// Random endomorphism-friendly pair: object plus a morphism out of it.
GradedMorphism sample_morphism_from(Rng& rng, const GradedObject& src,
                                    const SampleBounds& b);

/// Random finite-domain object: up to `size` indices drawn below
/// `index_ceiling`, fibers within bounds.
MatObject sample_finite_object(Rng& rng, const SampleBounds& b,
                               std::size_t size = 2,
                               unsigned long index_ceiling = 16);

/// Random row-finite morphism between finite-domain objects.
MatMorphism sample_mat_morphism(Rng& rng, const MatObject& f,
                                const MatObject& g);

/// Random tensor word with the given leaves in order, random bracketing,
/// and optional unit-leaf insertions.
TensorWord sample_word(Rng& rng, const std::vector<MatObject>& leaves,
                       double unit_prob);

/// Random indices of the encoding's domain: encodings of small objects
/// within bounds. Always includes the unit index first.
std::vector<Nat> sample_encoding_probes(Rng& rng, const SampleBounds& b,
                                        std::size_t count);

}  // namespace matcat
