#include <array>

#include "matcat/checks.hpp"
#include "matcat/sampling.hpp"

#include "check_util.hpp"

namespace matcat {

namespace {

using detail::graded_diff;
using detail::run_check;
using detail::skip_check;

struct BaseProbe {
  GradedObject a, b, c;
  GradedMorphism f, g, h;  // f: a->b, g: b->c, h: c->?
};

}  // namespace

std::vector<CheckReport> base_suite(const RunConfig& config) {
  config.validate();
  const BaseCategory base = config.base();
  const SampleBounds bounds{config.max_degree, config.max_dim, 2};
  const std::size_t trials =
      std::max<std::size_t>(20, static_cast<std::size_t>(config.probe_rows));
  std::vector<CheckReport> out;

  out.push_back(run_check(
      "base.compose_associativity", "matrix-composition", [&] {
        Rng rng(config.seed + 11);
        for (std::size_t t = 0; t < trials; ++t) {
          const GradedObject a = sample_object(rng, bounds);
          const GradedObject b = sample_object(rng, bounds);
          const GradedObject c = sample_object(rng, bounds);
          const GradedObject d = sample_object(rng, bounds);
          const GradedMorphism f = sample_morphism(rng, a, b);
          const GradedMorphism g = sample_morphism(rng, b, c);
          const GradedMorphism h = sample_morphism(rng, c, d);
          const std::string w =
              graded_diff(compose(compose(h, g), f), compose(h, compose(g, f)),
                          "trial " + std::to_string(t));
          if (!w.empty()) {
            return w;
          }
          const std::string wi =
              graded_diff(compose(f, GradedMorphism::identity(a)), f,
                          "identity, trial " + std::to_string(t));
          if (!wi.empty()) {
            return wi;
          }
        }
        return std::string();
      }));

  out.push_back(run_check("base.hom_group_laws", "additive-homs", [&] {
    Rng rng(config.seed + 12);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedMorphism f = sample_morphism(rng, a, b);
      const GradedMorphism g = sample_morphism(rng, a, b);
      const GradedMorphism h = sample_morphism(rng, a, b);
      const GradedMorphism zero = GradedMorphism::zero(a, b);
      std::string w = graded_diff(add(f, zero), f, "right unit");
      if (w.empty()) {
        w = graded_diff(add(f, negate(f)), zero, "inverses");
      }
      if (w.empty()) {
        w = graded_diff(add(add(f, g), h), add(f, add(g, h)), "associativity");
      }
      if (w.empty()) {
        w = graded_diff(add(f, g), add(g, f), "commutativity");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.bilinearity", "bilinear-structure", [&] {
    Rng rng(config.seed + 13);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedObject c = sample_object(rng, bounds);
      const GradedMorphism f = sample_morphism(rng, a, b);
      const GradedMorphism g = sample_morphism(rng, a, b);
      const GradedMorphism h = sample_morphism(rng, b, c);
      const GradedMorphism k = sample_morphism(rng, c, c);
      std::string w = graded_diff(compose(h, add(f, g)),
                                  add(compose(h, f), compose(h, g)),
                                  "composition over sums");
      if (w.empty()) {
        w = graded_diff(tensor(add(f, g), k), add(tensor(f, k), tensor(g, k)),
                        "tensor over sums, left");
      }
      if (w.empty()) {
        w = graded_diff(tensor(k, add(f, g)), add(tensor(k, f), tensor(k, g)),
                        "tensor over sums, right");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.strict_tensor_objects", "strict-monoid", [&] {
    Rng rng(config.seed + 14);
    const GradedObject I = GradedObject::unit();
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedObject c = sample_object(rng, bounds);
      if (!(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)))) {
        return "objects associate, trial " + std::to_string(t);
      }
      if (!(tensor(a, I) == a) || !(tensor(I, a) == a)) {
        return "strict unit on objects, trial " + std::to_string(t);
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.strict_tensor_morphisms", "strict-monoid", [&] {
    Rng rng(config.seed + 15);
    const GradedMorphism idI = GradedMorphism::identity(GradedObject::unit());
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedMorphism f = sample_morphism_from(rng, a, bounds);
      const GradedMorphism g = sample_morphism_from(rng, b, bounds);
      const GradedMorphism h = sample_morphism_from(rng, sample_object(rng, bounds), bounds);
      std::string w = graded_diff(tensor(tensor(f, g), h),
                                  tensor(f, tensor(g, h)), "associativity");
      if (w.empty()) {
        w = graded_diff(tensor(f, idI), f, "right unit");
      }
      if (w.empty()) {
        w = graded_diff(tensor(idI, f), f, "left unit");
      }
      if (w.empty()) {
        const GradedMorphism f2 = sample_morphism_from(rng, f.dst(), bounds);
        const GradedMorphism g2 = sample_morphism_from(rng, g.dst(), bounds);
        w = graded_diff(compose(tensor(f2, g2), tensor(f, g)),
                        tensor(compose(f2, f), compose(g2, g)),
                        "functoriality");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.hexagons", "hexagon-axiom", [&] {
    Rng rng(config.seed + 16);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedObject c = sample_object(rng, bounds);
      const GradedMorphism lhs1 = base.braid(a, tensor(b, c));
      const GradedMorphism rhs1 =
          compose(tensor(GradedMorphism::identity(b), base.braid(a, c)),
                  tensor(base.braid(a, b), GradedMorphism::identity(c)));
      std::string w = graded_diff(lhs1, rhs1, "first hexagon");
      if (w.empty()) {
        const GradedMorphism lhs2 = base.braid(tensor(a, b), c);
        const GradedMorphism rhs2 =
            compose(tensor(base.braid(a, c), GradedMorphism::identity(b)),
                    tensor(GradedMorphism::identity(a), base.braid(b, c)));
        w = graded_diff(lhs2, rhs2, "second hexagon");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.braid_naturality", "braiding-naturality", [&] {
    Rng rng(config.seed + 17);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedMorphism f = sample_morphism_from(rng, a, bounds);
      const GradedMorphism g = sample_morphism_from(rng, b, bounds);
      const GradedMorphism lhs =
          compose(base.braid(f.dst(), g.dst()), tensor(f, g));
      const GradedMorphism rhs = compose(tensor(g, f), base.braid(a, b));
      const std::string w = graded_diff(lhs, rhs, "naturality square");
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.braid_invertible", "braiding-inverse", [&] {
    Rng rng(config.seed + 18);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedMorphism ab = base.braid(a, b);
      const GradedMorphism ba = base.braid_inverse(a, b);
      std::string w =
          graded_diff(compose(ba, ab), GradedMorphism::identity(tensor(a, b)),
                      "inverse after braid");
      if (w.empty()) {
        w = graded_diff(compose(ab, ba),
                        GradedMorphism::identity(tensor(b, a)),
                        "braid after inverse");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.twist_naturality", "twist-naturality", [&] {
    Rng rng(config.seed + 19);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedMorphism f = sample_morphism_from(rng, a, bounds);
      const std::string w =
          graded_diff(compose(base.twist(f.dst()), f),
                      compose(f, base.twist(a)), "naturality square");
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.twist_balance", "twist-balance", [&] {
    Rng rng(config.seed + 20);
    const std::string wu =
        graded_diff(base.twist(GradedObject::unit()),
                    GradedMorphism::identity(GradedObject::unit()),
                    "twist at the unit");
    if (!wu.empty()) {
      return wu;
    }
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedMorphism lhs = base.twist(tensor(a, b));
      const GradedMorphism rhs =
          compose(base.braid(b, a),
                  compose(base.braid(a, b),
                          tensor(base.twist(a), base.twist(b))));
      const std::string w = graded_diff(lhs, rhs, "balance");
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.zigzag", "zigzag-duality", [&] {
    Rng rng(config.seed + 21);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject da = dual(a);
      const GradedMorphism d = eval_morphism(a);
      const GradedMorphism bb = coev_morphism(a);
      const GradedMorphism left =
          compose(tensor(d, GradedMorphism::identity(da)),
                  tensor(GradedMorphism::identity(da), bb));
      std::string w =
          graded_diff(left, GradedMorphism::identity(da), "left zigzag");
      if (w.empty()) {
        const GradedMorphism right =
            compose(tensor(GradedMorphism::identity(a), d),
                    tensor(bb, GradedMorphism::identity(a)));
        w = graded_diff(right, GradedMorphism::identity(a), "right zigzag");
      }
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  out.push_back(run_check("base.twist_dual", "twist-dual-compatibility", [&] {
    Rng rng(config.seed + 22);
    for (std::size_t t = 0; t < trials; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const std::string w =
          graded_diff(base.twist(dual(a)), dual_transpose(base.twist(a)),
                      "dualized twist");
      if (!w.empty()) {
        return "trial " + std::to_string(t) + ": " + w;
      }
    }
    return std::string();
  }));

  if (base.instance == Instance::symmetric || base.q == 1) {
    out.push_back(run_check(
        "base.symmetric_involution", "symmetric-control", [&] {
          Rng rng(config.seed + 23);
          for (std::size_t t = 0; t < trials; ++t) {
            const GradedObject a = sample_object(rng, bounds);
            const GradedObject b = sample_object(rng, bounds);
            const GradedMorphism sq =
                compose(base.braid(b, a), base.braid(a, b));
            const std::string w = graded_diff(
                sq, GradedMorphism::identity(tensor(a, b)), "braid squared");
            if (!w.empty()) {
              return "trial " + std::to_string(t) + ": " + w;
            }
          }
          return std::string();
        }));
  } else {
    out.push_back(skip_check("base.symmetric_involution", "symmetric-control",
                             "only meaningful for the symmetric instance"));
  }

  return out;
}

}  // namespace matcat
