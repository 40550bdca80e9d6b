#include <array>

#include "matcat/checks.hpp"
#include "matcat/sampling.hpp"

#include "check_util.hpp"

namespace matcat {

namespace {

using detail::graded_diff;
using detail::run_check;

Nat diag(const Nat& x) { return cantor_pair(x, x); }

struct BialgebraProbes {
  std::vector<Nat> sh;                  // indices of the encoding's domain
  std::vector<std::pair<Nat, Nat>> pairs;
  std::vector<std::array<Nat, 3>> triples;
};

void add_probe(std::vector<Nat>& sh, const GradedObject& obj) {
  const Nat idx = encode_object(obj);
  if (std::find(sh.begin(), sh.end(), idx) == sh.end()) {
    sh.push_back(idx);
  }
}

BialgebraProbes make_probes(Rng& rng, const SampleBounds& bounds,
                            std::size_t rows) {
  BialgebraProbes p;
  p.sh.push_back(encoding_unit_index());
  // Guarantee degree-mixed and multiplicity-two probes; several identities
  // only separate from their degenerate variants on such objects.
  if (bounds.max_degree >= 1) {
    add_probe(p.sh, GradedObject::from_slots(
                        {-bounds.max_degree, -bounds.max_degree + 1}));
    if (bounds.max_dim >= 2) {
      add_probe(p.sh, GradedObject::line(-bounds.max_degree, 2));
    }
  }
  for (const Nat& idx : sample_encoding_probes(
           rng, bounds, std::max<std::size_t>(rows / 3, 4))) {
    if (std::find(p.sh.begin(), p.sh.end(), idx) == p.sh.end()) {
      p.sh.push_back(idx);
    }
  }
  // A deterministic sweep over a small prefix, then random picks for spread.
  const std::size_t k = std::min<std::size_t>(p.sh.size(), 4);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      p.pairs.emplace_back(p.sh[a], p.sh[b]);
      for (std::size_t c = 0; c < k; ++c) {
        p.triples.push_back({p.sh[a], p.sh[b], p.sh[c]});
      }
    }
  }
  while (p.pairs.size() < std::max<std::size_t>(rows, 25)) {
    p.pairs.emplace_back(rng.pick(p.sh), rng.pick(p.sh));
  }
  while (p.triples.size() < std::max<std::size_t>(rows, 50)) {
    p.triples.push_back({rng.pick(p.sh), rng.pick(p.sh), rng.pick(p.sh)});
  }
  return p;
}

std::vector<Nat> pair_rows(const std::vector<std::pair<Nat, Nat>>& ps) {
  std::vector<Nat> rows;
  rows.reserve(ps.size());
  for (const auto& [a, b] : ps) {
    rows.push_back(cantor_pair(diag(a), diag(b)));
  }
  return rows;
}

}  // namespace

std::vector<CheckReport> verify_suite(const RunConfig& config,
                                      const BialgebraOptions& opts) {
  config.validate();
  const BaseCategory base = config.base();
  const SampleBounds bounds{config.max_degree, config.max_dim, 2};
  const Bialgebra bi = make_bialgebra(base, opts);
  const TensorWord L = bi.word;
  const TensorWord U = TensorWord::unit();
  const TensorWord W2 = TensorWord::node(L, L);
  Rng rng(config.seed + 101);
  const BialgebraProbes probes =
      make_probes(rng, bounds, static_cast<std::size_t>(config.probe_rows));
  std::vector<CheckReport> out;

  out.push_back(run_check("bialgebra.gamma_pentagon", "gamma-pentagon", [&] {
    for (const auto& t : probes.triples) {
      const GradedObject x = decode_object(t[0]);
      const GradedObject y = decode_object(t[1]);
      const GradedObject z = decode_object(t[2]);
      const GradedMorphism lhs = compose(
          bi.gamma(x, tensor(y, z)),
          tensor(bi.gamma(y, z),
                 GradedMorphism::identity(tensor(dual(x), x))));
      const GradedMorphism rhs = compose(
          bi.gamma(tensor(x, y), z),
          tensor(GradedMorphism::identity(tensor(dual(z), z)),
                 bi.gamma(x, y)));
      if (!(lhs == rhs)) {
        return "triple (" + x.to_string() + ", " + y.to_string() + ", " +
               z.to_string() + ")";
      }
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.associativity", "algebra-axioms", [&] {
    const TypedMor lhs = typed_compose(
        bi.mu, typed_tensor(bi.mu, typed_id(L)));  // ((LL)L) -> L
    const TypedMor rhs = typed_compose(
        bi.mu, typed_tensor(typed_id(L), bi.mu));  // (L(LL)) -> L
    std::vector<Nat> rows;
    for (const auto& t : probes.triples) {
      rows.push_back(
          cantor_pair(diag(t[0]), cantor_pair(diag(t[1]), diag(t[2]))));
    }
    return doteq_diff(lhs, rhs, rows);
  }));

  out.push_back(run_check("bialgebra.unit_laws", "algebra-axioms", [&] {
    const TypedMor left =
        typed_compose(bi.mu, typed_tensor(bi.eta, typed_id(L)));
    const TypedMor right =
        typed_compose(bi.mu, typed_tensor(typed_id(L), bi.eta));
    std::vector<Nat> rows;
    for (const Nat& x : probes.sh) {
      rows.push_back(diag(x));
    }
    std::string w = doteq_diff(left, typed_id(L), rows);
    if (w.empty()) {
      w = doteq_diff(right, typed_id(L), rows);
    }
    return w;
  }));

  out.push_back(run_check("bialgebra.coassociativity", "coalgebra-axioms", [&] {
    const TypedMor lhs =
        typed_compose(typed_tensor(bi.delta, typed_id(L)), bi.delta);
    const TypedMor rhs =
        typed_compose(typed_tensor(typed_id(L), bi.delta), bi.delta);
    std::vector<Nat> rows;
    for (const Nat& x : probes.sh) {
      rows.push_back(diag(x));
    }
    return doteq_diff(lhs, rhs, rows);
  }));

  out.push_back(run_check("bialgebra.counit_laws", "coalgebra-axioms", [&] {
    std::vector<Nat> rows;
    for (const Nat& x : probes.sh) {
      rows.push_back(diag(x));
    }
    const MatObject H = bi.object;
    const MatMorphism left = mat_compose(
        mat_unit(H, UnitSide::left, Dir::forward),
        mat_compose(mat_tensor(bi.epsilon.mor, mat_id(H)), bi.delta.mor));
    std::string w = diff_on_rows(left, mat_id(H), rows);
    if (w.empty()) {
      const MatMorphism right = mat_compose(
          mat_unit(H, UnitSide::right, Dir::forward),
          mat_compose(mat_tensor(mat_id(H), bi.epsilon.mor), bi.delta.mor));
      w = diff_on_rows(right, mat_id(H), rows);
    }
    return w;
  }));

  out.push_back(run_check("bialgebra.product_compat", "bialgebra-axioms", [&] {
    const TypedMor lhs =
        typed_compose(bi.mu_hat, typed_tensor(bi.delta, bi.delta));
    const TypedMor rhs = typed_compose(bi.delta, bi.mu);
    return doteq_diff(lhs, rhs, pair_rows(probes.pairs));
  }));

  out.push_back(run_check("bialgebra.counit_multiplicative",
                          "bialgebra-axioms", [&] {
    const TypedMor lhs = typed_compose(bi.epsilon, bi.mu);  // W2 -> U
    const TypedMor rhs = typed_tensor(bi.epsilon, bi.epsilon);  // W2 -> (U,U)
    return doteq_diff(lhs, rhs, pair_rows(probes.pairs));
  }));

  out.push_back(run_check("bialgebra.module_axioms", "module-axioms", [&] {
    Rng vrng(config.seed + 103);
    for (std::size_t i = 0; i < 5; ++i) {
      const GradedObject V = sample_object(vrng, bounds);
      const TypedMor T = bi.action(V);
      const TensorWord jw = T.cod_word;
      const Nat x0 = encoding_unit_index();
      const TypedMor unit_law =
          typed_compose(T, typed_tensor(bi.eta, typed_id(jw)));
      const std::vector<Nat> jrows{x0};
      std::string w = doteq_diff(unit_law, typed_id(jw), jrows);
      if (!w.empty()) {
        return "fiber " + V.to_string() + ", unit law: " + w;
      }
      const TypedMor lhs = typed_compose(T, typed_tensor(bi.mu, typed_id(jw)));
      const TypedMor rhs = typed_compose(T, typed_tensor(typed_id(L), T));
      std::vector<Nat> rows;
      for (const auto& [a, b] : probes.pairs) {
        rows.push_back(cantor_pair(diag(a), cantor_pair(diag(b), x0)));
      }
      w = doteq_diff(lhs, rhs, rows);
      if (!w.empty()) {
        return "fiber " + V.to_string() + ", action associativity: " + w;
      }
    }
    return std::string();
  }));

  return out;
}

std::vector<CheckReport> bialgebra_suite(const RunConfig& config,
                                         const BialgebraOptions& opts) {
  config.validate();
  const BaseCategory base = config.base();
  const SampleBounds bounds{config.max_degree, config.max_dim, 2};
  const Bialgebra bi = make_bialgebra(base, opts);
  Rng rng(config.seed + 101);
  const BialgebraProbes probes =
      make_probes(rng, bounds, static_cast<std::size_t>(config.probe_rows));

  std::vector<CheckReport> out = verify_suite(config, opts);

  out.push_back(run_check("bialgebra.eval_gamma", "eval-gamma", [&] {
    // every ordered pair of probe objects
    for (const Nat& xi : probes.sh) {
      for (const Nat& yi : probes.sh) {
        const GradedObject x = decode_object(xi);
        const GradedObject y = decode_object(yi);
        const GradedMorphism lhs =
            compose(eval_morphism(tensor(x, y)), bi.gamma(x, y));
        const GradedMorphism rhs =
            tensor(eval_morphism(y), eval_morphism(x));
        if (!(lhs == rhs)) {
          return "pair (" + x.to_string() + ", " + y.to_string() + ")";
        }
      }
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.coev_shuffle", "coassoc-shuffle", [&] {
    for (const Nat& xi : probes.sh) {
      const GradedObject x = decode_object(xi);
      if (!coev_shuffle_holds(x)) {
        return "object " + x.to_string();
      }
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.gamma_unit", "gamma-unit", [&] {
    for (const Nat& xi : probes.sh) {
      const GradedObject a = decode_object(xi);
      const GradedMorphism g = big_gamma(base, a, GradedObject::unit());
      const std::string w = graded_diff(
          g, GradedMorphism::identity(tensor(dual(a), a)), a.to_string());
      if (!w.empty()) {
        return w;
      }
      const GradedMorphism g2 = big_gamma(base, GradedObject::unit(), a);
      const std::string w2 = graded_diff(
          g2, GradedMorphism::identity(tensor(dual(a), a)),
          "unit-first " + a.to_string());
      if (!w2.empty()) {
        return w2;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.chi_laws", "index-multiplication", [&] {
    const Nat x0 = encoding_unit_index();
    for (const Nat& x : probes.sh) {
      if (chi(x, x0) != x || chi(x0, x) != x) {
        return "unit law at " + x.str();
      }
    }
    for (const auto& t : probes.triples) {
      if (chi(chi(t[0], t[1]), t[2]) != chi(t[0], chi(t[1], t[2]))) {
        return "associativity at (" + t[0].str() + ", " + t[1].str() + ", " +
               t[2].str() + ")";
      }
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.singleton_supports", "structure-rows", [&] {
    for (const auto& [a, b] : probes.pairs) {
      const Nat v = cantor_pair(diag(a), diag(b));
      if (bi.mu.mor.row(v).size() != 1) {
        return "product row at " + v.str();
      }
      if (bi.mu_hat.mor.row(cantor_pair(v, v)).size() > 1) {
        return "square-product row at " + cantor_pair(v, v).str();
      }
    }
    for (const Nat& x : probes.sh) {
      if (bi.delta.mor.row(diag(x)).size() != 1) {
        return "coproduct row at " + diag(x).str();
      }
      if (bi.epsilon.mor.row(diag(x)).size() != 1) {
        return "counit row at " + diag(x).str();
      }
    }
    if (bi.eta.mor.row(Nat(0)).size() != 1) {
      return std::string("unit row at the base point");
    }
    return std::string();
  }));

  out.push_back(run_check("bialgebra.counit_unit", "structure-rows", [&] {
    const MatMorphism eh = mat_compose(bi.epsilon.mor, bi.eta.mor);
    const std::vector<Nat> rows{Nat(0)};
    return diff_on_rows(eh, mat_id(MatObject::unit()), rows);
  }));

  return out;
}

}  // namespace matcat
