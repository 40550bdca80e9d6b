#include "matcat/checks.hpp"
#include "matcat/errors.hpp"
#include "matcat/sampling.hpp"

#include "check_util.hpp"

namespace matcat {

namespace {

using detail::run_check;

std::vector<MatObject> sample_leaves(Rng& rng, const SampleBounds& bounds,
                                     std::size_t max_leaves) {
  // Lean fibers keep exhaustive probing of five-leaf words cheap.
  const SampleBounds lean{bounds.max_degree, bounds.max_dim, 1};
  const std::size_t n = 1 + rng.uniform(max_leaves);
  std::vector<MatObject> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    leaves.push_back(sample_finite_object(rng, lean, 2, 8));
  }
  return leaves;
}

// A random morphism of the ambient category typed with random words over
// the given endpoint frontiers.
TypedMor sample_typed(Rng& rng, const SampleBounds& bounds,
                      const std::vector<MatObject>& dom_leaves,
                      const std::vector<MatObject>& cod_leaves,
                      double unit_prob) {
  const TensorWord dw = sample_word(rng, dom_leaves, unit_prob);
  const TensorWord cw = sample_word(rng, cod_leaves, unit_prob);
  const MatObject dom = dw.realize();
  const MatObject cod = cw.realize();
  return TypedMor(dw, cw, sample_mat_morphism(rng, dom, cod));
}

// Wraps F between different words of the same frontiers; the wrapped
// morphism is related to F by construction.
TypedMor coherent_variant(Rng& rng, const TypedMor& F, double unit_prob) {
  const TensorWord dw = sample_word(rng, F.dom_word.frontier(), unit_prob);
  const TensorWord cw = sample_word(rng, F.cod_word.frontier(), unit_prob);
  return typed_compose(
      coherence_iso(F.cod_word, cw),
      typed_compose(F, coherence_iso(dw, F.dom_word)));
}

std::vector<Nat> word_probes(const TensorWord& w) {
  return w.realize().index_set().enumerate_all();
}

}  // namespace

std::vector<CheckReport> coherence_suite(const RunConfig& config) {
  config.validate();
  const SampleBounds bounds{config.max_degree, config.max_dim, 2};
  const std::size_t trials =
      std::max<std::size_t>(10, static_cast<std::size_t>(config.probe_rows));
  std::vector<CheckReport> out;

  out.push_back(run_check("coherence.normal_form_identity",
                          "coherence-identity", [&] {
    Rng rng(config.seed + 61);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto leaves = sample_leaves(rng, bounds, 4);
      const TensorWord w = sample_word(rng, leaves, 0.3);
      const TypedMor iso = coherence_iso(w, w);
      const std::vector<Nat> probes = word_probes(w);
      const std::string d =
          diff_on_rows(iso.mor, mat_id(w.realize()), probes);
      if (!d.empty()) {
        return "trial " + std::to_string(t) + ": " + d;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("coherence.confluence", "coherence-confluence", [&] {
    Rng rng(config.seed + 62);
    const std::size_t rounds = std::max<std::size_t>(100, trials);
    for (std::size_t t = 0; t < rounds; ++t) {
      const auto leaves = sample_leaves(rng, bounds, 5);
      const TensorWord w1 = sample_word(rng, leaves, 0.25);
      const TensorWord w2 = sample_word(rng, leaves, 0.25);
      const TensorWord w3 = sample_word(rng, leaves, 0.25);
      const TypedMor a = coherence_iso(w1, w2);
      const TypedMor b = coherence_iso(w2, w3);
      const TypedMor direct = coherence_iso(w1, w3);
      const std::string d = diff_on_rows(mat_compose(b.mor, a.mor), direct.mor,
                                         word_probes(w1));
      if (!d.empty()) {
        return "triple " + std::to_string(t) + ": " + d;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("coherence.doteq_equivalence",
                          "coherence-relation", [&] {
    Rng rng(config.seed + 63);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto dl = sample_leaves(rng, bounds, 2);
      const auto cl = sample_leaves(rng, bounds, 2);
      const TypedMor F = sample_typed(rng, bounds, dl, cl, 0.3);
      const TypedMor G = coherent_variant(rng, F, 0.3);
      const TypedMor H = coherent_variant(rng, G, 0.3);
      const std::vector<Nat> pf = word_probes(F.dom_word);
      const std::vector<Nat> pg = word_probes(G.dom_word);
      const std::vector<Nat> ph = word_probes(H.dom_word);
      if (!doteq(F, F, pf)) {
        return "reflexivity failed at trial " + std::to_string(t);
      }
      if (!doteq(F, G, pg) || !doteq(G, F, pf)) {
        return "symmetry failed at trial " + std::to_string(t);
      }
      if (!doteq(G, H, ph) || !doteq(F, H, ph)) {
        return "transitivity failed at trial " + std::to_string(t);
      }
      const TypedMor twice(F.dom_word, F.cod_word, mat_scale(Rat(2), F.mor));
      bool zero = true;
      for (const Nat& x : pf) {
        if (!F.mor.row(x).empty()) {
          zero = false;
          break;
        }
      }
      if (!zero && doteq(F, twice, pf)) {
        return "scaled morphism wrongly related at trial " + std::to_string(t);
      }
    }
    return std::string();
  }));

  out.push_back(run_check("coherence.doteq_compatibility",
                          "coherence-relation", [&] {
    Rng rng(config.seed + 64);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto dl = sample_leaves(rng, bounds, 2);
      const auto ml = sample_leaves(rng, bounds, 2);
      const auto cl = sample_leaves(rng, bounds, 2);
      const TypedMor F = sample_typed(rng, bounds, dl, ml, 0.3);
      const TensorWord mid = F.cod_word;
      const TensorWord cw = sample_word(rng, cl, 0.3);
      const TypedMor Fp(mid, cw,
                        sample_mat_morphism(rng, mid.realize(), cw.realize()));
      const TypedMor G = coherent_variant(rng, F, 0.3);
      const TypedMor Gp = coherent_variant(rng, Fp, 0.3);
      // Composable chain: align Gp's domain with G's codomain.
      const TypedMor Gp_aligned =
          typed_compose(Gp, coherence_iso(G.cod_word, Gp.dom_word));
      if (!doteq(typed_compose(Fp, F), typed_compose(Gp_aligned, G),
                 word_probes(G.dom_word))) {
        return "composition compatibility failed at trial " +
               std::to_string(t);
      }
      if (!doteq(typed_tensor(F, Fp), typed_tensor(G, Gp),
                 word_probes(TensorWord::node(G.dom_word, Gp.dom_word)))) {
        return "tensor compatibility failed at trial " + std::to_string(t);
      }
    }
    return std::string();
  }));

  out.push_back(run_check("coherence.frontier_mismatch",
                          "coherence-relation", [&] {
    const MatObject a = MatObject::singleton(Nat(1), GradedObject::line(0, 1));
    const MatObject b = MatObject::singleton(Nat(2), GradedObject::line(1, 1));
    const TensorWord wa = TensorWord::leaf(a);
    const TensorWord wb = TensorWord::leaf(b);
    try {
      coherence_iso(wa, TensorWord::node(wa, wb));
      return std::string("mismatched frontiers did not raise");
    } catch (const NoCoherenceError&) {
    }
    try {
      coherence_iso(TensorWord::node(wa, wb), TensorWord::node(wb, wa));
      return std::string("swapped frontiers did not raise");
    } catch (const NoCoherenceError&) {
    }
    return std::string();
  }));

  return out;
}

}  // namespace matcat
