#include "matcat/bialgebra.hpp"

#include <array>

#include "matcat/errors.hpp"

namespace matcat {

GradedMorphism gamma_dual(const GradedObject& x, const GradedObject& y) {
  const GradedObject dx = dual(x), dy = dual(y);
  const GradedObject xy = tensor(x, y);
  const GradedObject dxy = dual(xy);
  const GradedMorphism s1 =
      tensor(GradedMorphism::identity(tensor(dy, dx)), coev_morphism(xy));
  const std::array<GradedMorphism, 3> mid = {
      GradedMorphism::identity(dy), eval_morphism(x),
      GradedMorphism::identity(tensor(y, dxy))};
  const GradedMorphism s2 = tensor_many(mid);
  const GradedMorphism s3 =
      tensor(eval_morphism(y), GradedMorphism::identity(dxy));
  return compose(s3, compose(s2, s1));
}

GradedMorphism big_gamma(const BaseCategory& base, const GradedObject& x,
                         const GradedObject& y) {
  const GradedObject dx = dual(x), dy = dual(y);
  const std::array<GradedMorphism, 3> first = {GradedMorphism::identity(dy),
                                               base.braid(y, dx),
                                               GradedMorphism::identity(x)};
  const GradedMorphism s1 = tensor_many(first);
  const GradedMorphism s2 = tensor(gamma_dual(x, y), base.braid(y, x));
  return compose(s2, s1);
}

GradedMorphism degreewise_identity(const GradedObject& src,
                                   const GradedObject& dst) {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : src.grades()) {
    if (dst.dim(d) != n) {
      throw ShapeMismatchError(
          "degreewise_identity: per-degree dimensions differ");
    }
    blocks.emplace(d, Matrix::identity(static_cast<std::size_t>(n)));
  }
  if (dst.total_dim() != src.total_dim()) {
    throw ShapeMismatchError(
        "degreewise_identity: per-degree dimensions differ");
  }
  return GradedMorphism(src, dst, std::move(blocks));
}

namespace {

GradedMorphism gamma_entry(const BaseCategory& base,
                           const BialgebraOptions& opts, const GradedObject& x,
                           const GradedObject& y) {
  if (opts.gamma_as_identity) {
    const GradedObject src = tensor(tensor(dual(y), y), tensor(dual(x), x));
    const GradedObject xy = tensor(x, y);
    return degreewise_identity(src, tensor(dual(xy), xy));
  }
  return big_gamma(base, x, y);
}

}  // namespace

GradedMorphism Bialgebra::gamma(const GradedObject& x,
                                const GradedObject& y) const {
  return gamma_entry(base, opts, x, y);
}

MatObject Bialgebra::module_object(const GradedObject& v) const {
  return MatObject::singleton(encoding_unit_index(), v);
}

TypedMor Bialgebra::action(const GradedObject& v) const {
  const MatObject jv = module_object(v);
  const MatObject dom = MatObject::tensor(object, jv);
  const Nat x0 = encoding_unit_index();
  MatMorphism t(dom, jv, [v, x0](const Nat& u) {
    const Nat diag = cantor_unpair(u).first;
    const Nat x = cantor_unpair(diag).first;
    MatRow row;
    GradedMorphism entry =
        tensor(eval_morphism(decode_object(x)), GradedMorphism::identity(v));
    if (!entry.is_zero()) {
      row.emplace(x0, std::move(entry));
    }
    return row;
  });
  return TypedMor(TensorWord::node(word, TensorWord::leaf(jv)),
                  TensorWord::leaf(jv), std::move(t));
}

Bialgebra make_bialgebra(const BaseCategory& base,
                         const BialgebraOptions& opts) {
  base.validate();
  const MatObject H = MatObject::hbar();
  const MatObject HH = MatObject::tensor(H, H);
  const TensorWord L = TensorWord::leaf(H);
  const TensorWord U = TensorWord::unit();
  const TensorWord W2 = TensorWord::node(L, L);
  const Nat x0 = encoding_unit_index();

  MatMorphism mu_m(HH, H, [base, opts](const Nat& v) {
    auto [a, b] = cantor_unpair(v);
    const Nat x = cantor_unpair(a).first;
    const Nat y = cantor_unpair(b).first;
    const Nat z = chi(y, x);
    MatRow row;
    // The second tensor factor supplies the first argument, as in the row
    // formula delta_{z, chi(y, x)} Gamma_{h(y), h(x)}.
    GradedMorphism entry =
        gamma_entry(base, opts, decode_object(y), decode_object(x));
    if (!entry.is_zero()) {
      row.emplace(cantor_pair(z, z), std::move(entry));
    }
    return row;
  });

  MatMorphism eta_m(MatObject::unit(), H, [x0](const Nat&) {
    MatRow row;
    row.emplace(cantor_pair(x0, x0),
                GradedMorphism::identity(GradedObject::unit()));
    return row;
  });

  MatMorphism delta_m(H, HH, [](const Nat& d) {
    const Nat x = cantor_unpair(d).first;
    const GradedObject hx = decode_object(x);
    const std::array<GradedMorphism, 3> parts = {
        GradedMorphism::identity(dual(hx)), coev_morphism(hx),
        GradedMorphism::identity(hx)};
    MatRow row;
    GradedMorphism entry = tensor_many(parts);
    if (!entry.is_zero()) {
      row.emplace(cantor_pair(d, d), std::move(entry));
    }
    return row;
  });

  MatMorphism epsilon_m(H, MatObject::unit(), [](const Nat& d) {
    const Nat x = cantor_unpair(d).first;
    MatRow row;
    GradedMorphism entry = eval_morphism(decode_object(x));
    if (!entry.is_zero()) {
      row.emplace(Nat(0), std::move(entry));
    }
    return row;
  });

  TypedMor mu_t(W2, L, mu_m);

  // Product on the square: regroup to expose the middle pair, braid it,
  // regroup back, multiply componentwise.
  const MatMorphism middle =
      opts.mu_hat_without_braiding
          ? mat_id(HH)
          : mat_braid(base, H, H, Dir::forward);
  const MatMorphism s1 = mat_assoc(HH, H, H, Dir::inverse);
  const MatMorphism s2 = mat_tensor(mat_assoc(H, H, H, Dir::forward), mat_id(H));
  const MatMorphism s3 = mat_tensor(mat_tensor(mat_id(H), middle), mat_id(H));
  const MatMorphism s4 =
      mat_tensor(mat_assoc(H, H, H, Dir::inverse), mat_id(H));
  const MatMorphism s5 = mat_assoc(HH, H, H, Dir::forward);
  const MatMorphism s6 = mat_tensor(mu_m, mu_m);
  const MatMorphism mu_hat_m = mat_compose(
      s6, mat_compose(s5, mat_compose(s4, mat_compose(s3, mat_compose(s2, s1)))));

  return Bialgebra{base,
                   opts,
                   H,
                   L,
                   std::move(mu_t),
                   TypedMor(U, L, std::move(eta_m)),
                   TypedMor(L, W2, std::move(delta_m)),
                   TypedMor(L, U, std::move(epsilon_m)),
                   TypedMor(TensorWord::node(W2, W2), W2, mu_hat_m)};
}

bool gamma_pentagon_holds(const BaseCategory& base, const GradedObject& x,
                          const GradedObject& y, const GradedObject& z) {
  const GradedObject yz = tensor(y, z);
  const GradedObject xy = tensor(x, y);
  const GradedMorphism lhs = compose(
      big_gamma(base, x, yz),
      tensor(big_gamma(base, y, z),
             GradedMorphism::identity(tensor(dual(x), x))));
  const GradedMorphism rhs = compose(
      big_gamma(base, xy, z),
      tensor(GradedMorphism::identity(tensor(dual(z), z)),
             big_gamma(base, x, y)));
  return lhs == rhs;
}

bool eval_gamma_holds(const BaseCategory& base, const GradedObject& x,
                      const GradedObject& y) {
  const GradedMorphism lhs =
      compose(eval_morphism(tensor(x, y)), big_gamma(base, x, y));
  const GradedMorphism rhs = tensor(eval_morphism(y), eval_morphism(x));
  return lhs == rhs;
}

bool coev_shuffle_holds(const GradedObject& x) {
  const GradedObject dx = dual(x);
  const GradedObject pair = tensor(dx, x);
  const std::array<GradedMorphism, 3> core = {GradedMorphism::identity(dx),
                                              coev_morphism(x),
                                              GradedMorphism::identity(x)};
  const GradedMorphism inner = tensor_many(core);
  const GradedMorphism lhs =
      compose(tensor(inner, GradedMorphism::identity(pair)), inner);
  const GradedMorphism rhs =
      compose(tensor(GradedMorphism::identity(pair), inner), inner);
  return lhs == rhs;
}

}  // namespace matcat
