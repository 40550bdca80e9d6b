#include "matcat/checks.hpp"
#include "matcat/errors.hpp"
#include "matcat/sampling.hpp"

#include "check_util.hpp"

namespace matcat {

namespace {

using detail::run_check;

std::string row_diff_all(const MatMorphism& lhs, const MatMorphism& rhs) {
  const std::vector<Nat> probes = lhs.dom().index_set().enumerate_all();
  return diff_on_rows(lhs, rhs, probes);
}

}  // namespace

std::vector<CheckReport> matcat_suite(const RunConfig& config) {
  config.validate();
  const BaseCategory base = config.base();
  const SampleBounds bounds{config.max_degree, config.max_dim, 2};
  // Each trial compares full rows of freshly sampled morphisms, so the row
  // count examined per identity is a small multiple of this.
  const std::size_t trials =
      std::max<std::size_t>(10, static_cast<std::size_t>(config.probe_rows) / 2);
  std::vector<CheckReport> out;

  out.push_back(run_check("matcat.identity_laws", "matrix-composition", [&] {
    Rng rng(config.seed + 31);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatMorphism G = sample_mat_morphism(rng, f, g);
      std::string w = row_diff_all(mat_compose(G, mat_id(f)), G);
      if (w.empty()) {
        w = row_diff_all(mat_compose(mat_id(g), G), G);
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check(
      "matcat.compose_associativity", "matrix-composition", [&] {
        Rng rng(config.seed + 32);
        for (std::size_t t = 0; t < trials; ++t) {
          const MatObject f = sample_finite_object(rng, bounds);
          const MatObject g = sample_finite_object(rng, bounds);
          const MatObject h = sample_finite_object(rng, bounds);
          const MatObject i = sample_finite_object(rng, bounds);
          const MatMorphism F = sample_mat_morphism(rng, f, g);
          const MatMorphism G = sample_mat_morphism(rng, g, h);
          const MatMorphism H = sample_mat_morphism(rng, h, i);
          const std::string w =
              row_diff_all(mat_compose(mat_compose(H, G), F),
                           mat_compose(H, mat_compose(G, F)));
          if (!w.empty()) {
            return "trial " + std::to_string(t) + ": " + w;
          }
        }
        return std::string();
      }));

  out.push_back(run_check("matcat.hom_group_laws", "additive-homs", [&] {
    Rng rng(config.seed + 33);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, g);
      const MatMorphism G = sample_mat_morphism(rng, f, g);
      std::string w = row_diff_all(mat_add(F, mat_negate(F)), mat_zero(f, g));
      if (w.empty()) {
        w = row_diff_all(mat_add(F, G), mat_add(G, F));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.tensor_functorial", "tensor-functoriality", [&] {
    Rng rng(config.seed + 34);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject f1 = sample_finite_object(rng, bounds);
      const MatObject f2 = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatObject g1 = sample_finite_object(rng, bounds);
      const MatObject g2 = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, f1);
      const MatMorphism Fp = sample_mat_morphism(rng, f1, f2);
      const MatMorphism G = sample_mat_morphism(rng, g, g1);
      const MatMorphism Gp = sample_mat_morphism(rng, g1, g2);
      const std::string w =
          row_diff_all(mat_compose(mat_tensor(Fp, Gp), mat_tensor(F, G)),
                       mat_tensor(mat_compose(Fp, F), mat_compose(Gp, G)));
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.tensor_identities", "tensor-functoriality", [&] {
    Rng rng(config.seed + 35);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const std::string w =
          row_diff_all(mat_tensor(mat_id(f), mat_id(g)),
                       mat_id(MatObject::tensor(f, g)));
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.associator", "pentagon-axiom", [&] {
    Rng rng(config.seed + 36);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatObject h = sample_finite_object(rng, bounds);
      const MatMorphism A = mat_assoc(f, g, h, Dir::forward);
      const MatMorphism Ai = mat_assoc(f, g, h, Dir::inverse);
      std::string w = row_diff_all(
          mat_compose(Ai, A),
          mat_id(MatObject::tensor(MatObject::tensor(f, g), h)));
      if (w.empty()) {
        w = row_diff_all(
            mat_compose(A, Ai),
            mat_id(MatObject::tensor(f, MatObject::tensor(g, h))));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.pentagon", "pentagon-axiom", [&] {
    Rng rng(config.seed + 37);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds, 2, 8);
      const MatObject g = sample_finite_object(rng, bounds, 2, 8);
      const MatObject h = sample_finite_object(rng, bounds, 2, 8);
      const MatObject i = sample_finite_object(rng, bounds, 2, 8);
      const MatObject gh = MatObject::tensor(g, h);
      const MatObject hi = MatObject::tensor(h, i);
      const MatObject fg = MatObject::tensor(f, g);
      const MatMorphism lhs = mat_compose(
          mat_tensor(mat_id(f), mat_assoc(g, h, i, Dir::forward)),
          mat_compose(mat_assoc(f, gh, i, Dir::forward),
                      mat_tensor(mat_assoc(f, g, h, Dir::forward), mat_id(i))));
      const MatMorphism rhs = mat_compose(mat_assoc(f, g, hi, Dir::forward),
                                          mat_assoc(fg, h, i, Dir::forward));
      const std::string w = row_diff_all(lhs, rhs);
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.associator_naturality", "associator-naturality", [&] {
    Rng rng(config.seed + 38);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatObject h = sample_finite_object(rng, bounds);
      const MatObject f1 = sample_finite_object(rng, bounds);
      const MatObject g1 = sample_finite_object(rng, bounds);
      const MatObject h1 = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, f1);
      const MatMorphism G = sample_mat_morphism(rng, g, g1);
      const MatMorphism H = sample_mat_morphism(rng, h, h1);
      const MatMorphism lhs =
          mat_compose(mat_tensor(F, mat_tensor(G, H)),
                      mat_assoc(f, g, h, Dir::forward));
      const MatMorphism rhs =
          mat_compose(mat_assoc(f1, g1, h1, Dir::forward),
                      mat_tensor(mat_tensor(F, G), H));
      const std::string w = row_diff_all(lhs, rhs);
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.units", "unit-constraints", [&] {
    Rng rng(config.seed + 39);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatMorphism R = mat_unit(f, UnitSide::right, Dir::forward);
      const MatMorphism Ri = mat_unit(f, UnitSide::right, Dir::inverse);
      const MatMorphism L = mat_unit(f, UnitSide::left, Dir::forward);
      const MatMorphism Li = mat_unit(f, UnitSide::left, Dir::inverse);
      std::string w = row_diff_all(mat_compose(R, Ri), mat_id(f));
      if (w.empty()) {
        w = row_diff_all(
            mat_compose(Ri, R),
            mat_id(MatObject::tensor(f, MatObject::unit())));
      }
      if (w.empty()) {
        w = row_diff_all(mat_compose(L, Li), mat_id(f));
      }
      if (w.empty()) {
        w = row_diff_all(
            mat_compose(Li, L),
            mat_id(MatObject::tensor(MatObject::unit(), f)));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.triangle", "unit-triangle", [&] {
    Rng rng(config.seed + 40);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatMorphism lhs = mat_compose(
          mat_tensor(mat_id(f), mat_unit(g, UnitSide::left, Dir::forward)),
          mat_assoc(f, MatObject::unit(), g, Dir::forward));
      const MatMorphism rhs =
          mat_tensor(mat_unit(f, UnitSide::right, Dir::forward), mat_id(g));
      const std::string w = row_diff_all(lhs, rhs);
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.unit_naturality", "unit-constraints", [&] {
    Rng rng(config.seed + 41);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject f1 = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, f1);
      const MatMorphism idI = mat_id(MatObject::unit());
      std::string w = row_diff_all(
          mat_compose(F, mat_unit(f, UnitSide::right, Dir::forward)),
          mat_compose(mat_unit(f1, UnitSide::right, Dir::forward),
                      mat_tensor(F, idI)));
      if (w.empty()) {
        w = row_diff_all(
            mat_compose(F, mat_unit(f, UnitSide::left, Dir::forward)),
            mat_compose(mat_unit(f1, UnitSide::left, Dir::forward),
                        mat_tensor(idI, F)));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.braiding", "braiding-extension", [&] {
    Rng rng(config.seed + 42);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatMorphism C = mat_braid(base, f, g, Dir::forward);
      const MatMorphism Ci = mat_braid(base, f, g, Dir::inverse);
      std::string w = row_diff_all(mat_compose(Ci, C),
                                   mat_id(MatObject::tensor(f, g)));
      if (w.empty()) {
        w = row_diff_all(mat_compose(C, Ci),
                         mat_id(MatObject::tensor(g, f)));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.braiding_hexagons", "hexagon-axiom", [&] {
    Rng rng(config.seed + 43);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds, 2, 8);
      const MatObject g = sample_finite_object(rng, bounds, 2, 8);
      const MatObject h = sample_finite_object(rng, bounds, 2, 8);
      const MatObject gh = MatObject::tensor(g, h);
      const MatObject fg = MatObject::tensor(f, g);
      const MatMorphism lhs1 = mat_compose(
          mat_assoc(g, h, f, Dir::forward),
          mat_compose(mat_braid(base, f, gh, Dir::forward),
                      mat_assoc(f, g, h, Dir::forward)));
      const MatMorphism rhs1 = mat_compose(
          mat_tensor(mat_id(g), mat_braid(base, f, h, Dir::forward)),
          mat_compose(mat_assoc(g, f, h, Dir::forward),
                      mat_tensor(mat_braid(base, f, g, Dir::forward),
                                 mat_id(h))));
      std::string w = row_diff_all(lhs1, rhs1);
      if (w.empty()) {
        const MatMorphism lhs2 = mat_compose(
            mat_assoc(h, f, g, Dir::inverse),
            mat_compose(mat_braid(base, fg, h, Dir::forward),
                        mat_assoc(f, g, h, Dir::inverse)));
        const MatMorphism rhs2 = mat_compose(
            mat_tensor(mat_braid(base, f, h, Dir::forward), mat_id(g)),
            mat_compose(mat_assoc(f, h, g, Dir::inverse),
                        mat_tensor(mat_id(f),
                                   mat_braid(base, g, h, Dir::forward))));
        w = row_diff_all(lhs2, rhs2);
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.braiding_naturality", "braiding-naturality", [&] {
    Rng rng(config.seed + 44);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatObject f1 = sample_finite_object(rng, bounds);
      const MatObject g1 = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, f1);
      const MatMorphism G = sample_mat_morphism(rng, g, g1);
      const std::string w = row_diff_all(
          mat_compose(mat_tensor(G, F), mat_braid(base, f, g, Dir::forward)),
          mat_compose(mat_braid(base, f1, g1, Dir::forward),
                      mat_tensor(F, G)));
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.twist", "twist-extension", [&] {
    Rng rng(config.seed + 45);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatObject f1 = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, f1);
      std::string w = row_diff_all(mat_compose(mat_twist(base, f1), F),
                                   mat_compose(F, mat_twist(base, f)));
      if (w.empty()) {
        const MatObject fg = MatObject::tensor(f, g);
        const MatMorphism lhs = mat_twist(base, fg);
        const MatMorphism rhs = mat_compose(
            mat_braid(base, g, f, Dir::forward),
            mat_compose(mat_braid(base, f, g, Dir::forward),
                        mat_tensor(mat_twist(base, f), mat_twist(base, g))));
        w = row_diff_all(lhs, rhs);
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.coproduct", "coproduct-universal", [&] {
    Rng rng(config.seed + 46);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t parts = 2 + rng.uniform(5);  // up to 6 summands
      std::vector<MatObject> summands;
      std::vector<MatMorphism> targets;
      const MatObject g = sample_finite_object(rng, bounds, 2, 200);
      for (std::size_t k = 0; k < parts; ++k) {
        // Carve disjoint index windows so the precondition holds.
        std::vector<std::pair<Nat, GradedObject>> fibers;
        const std::size_t sz = 1 + rng.uniform(2);
        for (std::size_t j = 0; j < sz; ++j) {
          fibers.emplace_back(Nat(1000 + 10 * k + j),
                              sample_object(rng, bounds));
        }
        summands.push_back(MatObject::family(std::move(fibers)));
      }
      const Coproduct cp = coproduct(summands);
      for (const auto& s : summands) {
        targets.push_back(sample_mat_morphism(rng, s, g));
      }
      const MatMorphism T = copair(targets);
      for (std::size_t k = 0; k < parts; ++k) {
        const std::string w = row_diff_all(
            mat_compose(T, cp.injections[k]), targets[k]);
        if (!w.empty()) {
          return "trial " + std::to_string(t) + ", summand " +
                 std::to_string(k) + ": " + w;
        }
      }
      const MatMorphism copair_inj = copair(cp.injections);
      const std::string w = row_diff_all(copair_inj, mat_id(cp.object));
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.direct_sum_decomposition", "direct-sum", [&] {
    Rng rng(config.seed + 47);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds, 3, 12);
      const std::vector<Nat> idx = f.index_set().enumerate_all();
      std::vector<MatObject> restrictions;
      std::vector<MatMorphism> inclusions;
      for (const Nat& x : idx) {
        MatObject r = MatObject::singleton(x, f.fiber(x));
        inclusions.emplace_back(r, f, [r](const Nat& y) {
          MatRow row;
          row.emplace(y, GradedMorphism::identity(r.fiber(y)));
          return row;
        });
        restrictions.push_back(std::move(r));
      }
      const Coproduct cp = coproduct(restrictions);
      const MatMorphism iso = copair(inclusions);  // cp.object -> f
      MatMorphism inv(f, cp.object, [f](const Nat& x) {
        MatRow row;
        row.emplace(x, GradedMorphism::identity(f.fiber(x)));
        return row;
      });
      std::string w = row_diff_all(mat_compose(iso, inv), mat_id(f));
      if (w.empty()) {
        w = row_diff_all(mat_compose(inv, iso), mat_id(cp.object));
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.embedding", "base-embedding", [&] {
    Rng rng(config.seed + 48);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedMorphism alpha = sample_morphism_from(rng, a, bounds);
      const GradedMorphism beta = sample_morphism_from(rng, alpha.dst(), bounds);
      const Nat p0(3), p1(5), p2(7);
      const MatMorphism e_alpha = embed_morphism(alpha, p0, p1);
      const MatMorphism e_beta = embed_morphism(beta, p1, p2);
      std::string w = row_diff_all(mat_compose(e_beta, e_alpha),
                                   embed_morphism(compose(beta, alpha), p0, p2));
      if (w.empty()) {
        w = row_diff_all(embed_morphism(GradedMorphism::identity(a), p0, p0),
                         mat_id(embed_object(a, p0)));
      }
      if (w.empty() &&
          !(embed_object(GradedObject::unit(), Nat(0)) == MatObject::unit())) {
        w = "embedding of the base unit at the base point is not the unit";
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.duality_obstruction", "duality-obstruction", [&] {
    const MatObject infinite = MatObject::constant(
        IndexSet::all_naturals(), GradedObject::line(1, 1));
    try {
      coev_sharp(infinite);
      return std::string(
          "coevaluation on an infinite-domain object did not raise the "
          "obstruction");
    } catch (const DualityObstructionError&) {
    }
    try {
      eval_sharp(infinite);  // evaluation exists even on infinite domains
    } catch (const Error& e) {
      return "evaluation on an infinite-domain object failed: " +
             std::string(e.what());
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.zigzag_sharp", "zigzag-duality", [&] {
    Rng rng(config.seed + 49);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds, 2, 8);
      const MatObject df = MatObject::dual(f);
      const TensorWord wf = TensorWord::leaf(f);
      const TensorWord wdf = TensorWord::leaf(df);
      const TensorWord U = TensorWord::unit();
      const TypedMor D(TensorWord::node(wdf, wf), U, eval_sharp(f));
      const TypedMor B(U, TensorWord::node(wf, wdf), coev_sharp(f));
      const TypedMor idf = typed_id(wf);
      const TypedMor iddf = typed_id(wdf);
      // f* (x) I -> f* via (D (x) id) o assoc o (id (x) B)
      const TypedMor left = typed_compose(
          typed_tensor(D, iddf),
          typed_compose(coherence_iso(TensorWord::node(wdf, TensorWord::node(wf, wdf)),
                                      TensorWord::node(TensorWord::node(wdf, wf), wdf)),
                        typed_tensor(iddf, B)));
      const std::vector<Nat> pdf = df.index_set().enumerate_all();
      std::string w = doteq_diff(left, iddf, pdf);
      if (w.empty()) {
        const TypedMor right = typed_compose(
            typed_tensor(idf, D),
            typed_compose(coherence_iso(TensorWord::node(TensorWord::node(wf, wdf), wf),
                                        TensorWord::node(wf, TensorWord::node(wdf, wf))),
                          typed_tensor(B, idf)));
        const std::vector<Nat> pf = f.index_set().enumerate_all();
        w = doteq_diff(right, idf, pf);
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("matcat.row_finiteness", "row-finiteness", [&] {
    Rng rng(config.seed + 50);
    for (std::size_t t = 0; t < trials; ++t) {
      const MatObject f = sample_finite_object(rng, bounds);
      const MatObject g = sample_finite_object(rng, bounds);
      const MatMorphism F = sample_mat_morphism(rng, f, g);
      const MatMorphism FF = mat_tensor(F, F);
      for (const Nat& x : FF.dom().index_set().enumerate_all()) {
        for (const auto& [y, entry] : FF.row(x)) {
          if (entry.is_zero()) {
            return "zero entry stored at row " + x.str();
          }
          if (!FF.cod().index_set().member(y)) {
            return "entry outside the codomain at row " + x.str();
          }
        }
      }
    }
    return std::string();
  }));

  return out;
}

}  // namespace matcat
