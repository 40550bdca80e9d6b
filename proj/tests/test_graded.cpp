#include <doctest.h>

#include "matcat/errors.hpp"
#include "matcat/graded.hpp"
#include "matcat/rng.hpp"
#include "matcat/sampling.hpp"

using namespace matcat;

namespace {

GradedObject line1(Degree d) { return GradedObject::line(d, 1); }

GradedMorphism scalar_morphism(const GradedObject& a, const Rat& s) {
  std::map<Degree, Matrix> blocks;
  for (const auto& [d, n] : a.grades()) {
    blocks.emplace(d, s * Matrix::identity(static_cast<std::size_t>(n)));
  }
  return GradedMorphism(a, a, std::move(blocks));
}

}  // namespace

TEST_CASE("tensor of objects is degree convolution") {
  CHECK(tensor(line1(1), line1(-1)) == GradedObject::unit());
  const GradedObject a = GradedObject::from_grades({{0, 2}});
  CHECK(tensor(a, a) == GradedObject::line(0, 4));
  const GradedObject b = GradedObject::from_grades({{-1, 1}, {2, 2}});
  CHECK(tensor(b, GradedObject::unit()) == b);
  CHECK(tensor(GradedObject::unit(), b) == b);
}

TEST_CASE("tensor is strictly associative on objects and morphisms") {
  Rng rng(5);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 30; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject b = sample_object(rng, bounds);
    const GradedObject c = sample_object(rng, bounds);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    const GradedMorphism f = sample_morphism_from(rng, a, bounds);
    const GradedMorphism g = sample_morphism_from(rng, b, bounds);
    const GradedMorphism h = sample_morphism_from(rng, c, bounds);
    CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
    const GradedMorphism idI = GradedMorphism::identity(GradedObject::unit());
    CHECK(tensor(f, idI) == f);
    CHECK(tensor(idI, f) == f);
  }
}

TEST_CASE("tensor of morphisms: identities, scalars, zero") {
  const GradedObject a = line1(0);
  const GradedObject b = GradedObject::from_grades({{-1, 1}, {1, 2}});
  CHECK(tensor(GradedMorphism::identity(a), GradedMorphism::identity(b)) ==
        GradedMorphism::identity(tensor(a, b)));
  CHECK(tensor(scalar_morphism(a, 2), scalar_morphism(a, 3)) ==
        scalar_morphism(tensor(a, a), 6));
  CHECK(tensor(scalar_morphism(a, 2), GradedMorphism::zero(b, b)) ==
        GradedMorphism::zero(tensor(a, b), tensor(a, b)));
}

TEST_CASE("composition: identities, zero, scalars") {
  const GradedObject a = line1(0);
  const GradedMorphism two = scalar_morphism(a, 2);
  const GradedMorphism three = scalar_morphism(a, 3);
  CHECK(compose(three, two) == scalar_morphism(a, 6));
  CHECK(compose(two, GradedMorphism::identity(a)) == two);
  CHECK(compose(GradedMorphism::zero(a, a), two) ==
        GradedMorphism::zero(a, a));
  CHECK_THROWS_AS(
      compose(scalar_morphism(line1(1), 1), scalar_morphism(line1(0), 1)),
      DomainMismatchError);
}

TEST_CASE("hom-sets are abelian groups with bilinear structure") {
  Rng rng(7);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 20; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject b = sample_object(rng, bounds);
    const GradedMorphism f = sample_morphism(rng, a, b);
    const GradedMorphism g = sample_morphism(rng, a, b);
    CHECK(add(f, GradedMorphism::zero(a, b)) == f);
    CHECK(add(f, negate(f)) == GradedMorphism::zero(a, b));
    CHECK(add(f, g) == add(g, f));
    const GradedMorphism h = sample_morphism_from(rng, b, bounds);
    CHECK(compose(h, add(f, g)) == add(compose(h, f), compose(h, g)));
  }
  CHECK_THROWS_AS(add(scalar_morphism(line1(0), 1),
                      scalar_morphism(line1(1), 1)),
                  DomainMismatchError);
}

TEST_CASE("bicharacter braiding on lines") {
  const BaseCategory base{2, Instance::graded};
  const GradedObject a = line1(1);
  const GradedMorphism c = base.braid(a, a);
  REQUIRE(c.blocks().count(2) == 1);
  CHECK(c.block(2).at(0, 0) == 2);  // q^{1*1}

  CHECK(base.braid(a, GradedObject::unit()) ==
        GradedMorphism::identity(a));
  CHECK(compose(base.braid_inverse(a, a), base.braid(a, a)) ==
        GradedMorphism::identity(tensor(a, a)));
}

TEST_CASE("braiding satisfies both hexagons exactly") {
  Rng rng(11);
  const SampleBounds bounds{2, 2, 2};
  for (const Rat& q : {Rat(1), Rat(2), Rat(3), Rat(1, 2)}) {
    const BaseCategory base{q, Instance::graded};
    for (int t = 0; t < 10; ++t) {
      const GradedObject a = sample_object(rng, bounds);
      const GradedObject b = sample_object(rng, bounds);
      const GradedObject c = sample_object(rng, bounds);
      CHECK(base.braid(a, tensor(b, c)) ==
            compose(tensor(GradedMorphism::identity(b), base.braid(a, c)),
                    tensor(base.braid(a, b), GradedMorphism::identity(c))));
      CHECK(base.braid(tensor(a, b), c) ==
            compose(tensor(base.braid(a, c), GradedMorphism::identity(b)),
                    tensor(GradedMorphism::identity(a), base.braid(b, c))));
    }
  }
}

TEST_CASE("twist scalars and balance") {
  const BaseCategory base{2, Instance::graded};
  CHECK(base.twist(GradedObject::unit()) ==
        GradedMorphism::identity(GradedObject::unit()));
  CHECK(base.twist(line1(1)).block(1).at(0, 0) == 2);    // q^{1}
  CHECK(base.twist(line1(2)).block(2).at(0, 0) == 16);   // q^{4}
  CHECK(base.twist(line1(-2)).block(-2).at(0, 0) == 16); // q^{(-2)^2}

  Rng rng(13);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 15; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject b = sample_object(rng, bounds);
    CHECK(base.twist(tensor(a, b)) ==
          compose(base.braid(b, a),
                  compose(base.braid(a, b),
                          tensor(base.twist(a), base.twist(b)))));
    CHECK(compose(base.twist_inverse(a), base.twist(a)) ==
          GradedMorphism::identity(a));
    CHECK(base.twist(dual(a)) == dual_transpose(base.twist(a)));
  }
}

TEST_CASE("duality: reflection, pairing, zig-zags") {
  CHECK(dual(line1(1)) == line1(-1));
  const GradedMorphism ev = eval_morphism(line1(1));
  REQUIRE(ev.blocks().count(0) == 1);
  CHECK(ev.block(0).at(0, 0) == 1);

  const GradedObject a2 = GradedObject::from_grades({{0, 2}});
  const GradedObject da2 = dual(a2);
  const GradedMorphism left =
      compose(tensor(eval_morphism(a2), GradedMorphism::identity(da2)),
              tensor(GradedMorphism::identity(da2), coev_morphism(a2)));
  CHECK(left == GradedMorphism::identity(da2));

  Rng rng(17);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 15; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject da = dual(a);
    CHECK(compose(tensor(eval_morphism(a), GradedMorphism::identity(da)),
                  tensor(GradedMorphism::identity(da), coev_morphism(a))) ==
          GradedMorphism::identity(da));
    CHECK(compose(tensor(GradedMorphism::identity(a), eval_morphism(a)),
                  tensor(coev_morphism(a), GradedMorphism::identity(a))) ==
          GradedMorphism::identity(a));
  }
}

TEST_CASE("dual transpose is contravariant and compatible with evaluation") {
  Rng rng(27);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 15; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedMorphism f = sample_morphism_from(rng, a, bounds);
    const GradedMorphism g = sample_morphism_from(rng, f.dst(), bounds);
    CHECK(dual_transpose(compose(g, f)) ==
          compose(dual_transpose(f), dual_transpose(g)));
    CHECK(dual_transpose(GradedMorphism::identity(a)) ==
          GradedMorphism::identity(dual(a)));
    // <f*(w), v> = <w, f(v)>: both pairings b* (x) a -> I agree
    const GradedObject b = f.dst();
    CHECK(compose(eval_morphism(a),
                  tensor(dual_transpose(f), GradedMorphism::identity(a))) ==
          compose(eval_morphism(b),
                  tensor(GradedMorphism::identity(dual(b)), f)));
  }
}

TEST_CASE("naturality of braiding and twist against random morphisms") {
  Rng rng(19);
  const SampleBounds bounds{2, 2, 2};
  const BaseCategory base{3, Instance::graded};
  for (int t = 0; t < 20; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject b = sample_object(rng, bounds);
    const GradedMorphism f = sample_morphism_from(rng, a, bounds);
    const GradedMorphism g = sample_morphism_from(rng, b, bounds);
    CHECK(compose(base.braid(f.dst(), g.dst()), tensor(f, g)) ==
          compose(tensor(g, f), base.braid(a, b)));
    CHECK(compose(base.twist(f.dst()), f) == compose(f, base.twist(a)));
  }
}

TEST_CASE("symmetric instance squares to the identity") {
  const BaseCategory sym{2, Instance::symmetric};
  Rng rng(23);
  const SampleBounds bounds{2, 2, 2};
  for (int t = 0; t < 10; ++t) {
    const GradedObject a = sample_object(rng, bounds);
    const GradedObject b = sample_object(rng, bounds);
    CHECK(compose(sym.braid(b, a), sym.braid(a, b)) ==
          GradedMorphism::identity(tensor(a, b)));
    CHECK(sym.twist(a) == GradedMorphism::identity(a));
  }
  // q = 1 recovers the same behavior in the graded instance
  const BaseCategory q1{1, Instance::graded};
  const GradedObject a = GradedObject::from_grades({{-1, 1}, {1, 2}});
  CHECK(compose(q1.braid(a, a), q1.braid(a, a)) ==
        GradedMorphism::identity(tensor(a, a)));
}

TEST_CASE("invariants of the object representation") {
  CHECK_THROWS_AS(GradedObject::from_grades({{0, 0}}), Error);
  CHECK(GradedObject().is_zero());
  const GradedObject z;
  CHECK(tensor(z, line1(3)).is_zero());  // zero object absorbs
  CHECK(GradedMorphism::identity(z).is_zero());
  const GradedObject a = GradedObject::from_grades({{-1, 2}, {3, 1}});
  CHECK(a.dim(-1) == 2);
  CHECK(a.dim(0) == 0);
  CHECK(a.total_dim() == 3);
}

TEST_CASE("base category rejects q = 0") {
  const BaseCategory bad{0, Instance::graded};
  CHECK_THROWS_AS(bad.validate(), UsageError);
}
