#include <doctest.h>

#include <set>

#include "matcat/errors.hpp"
#include "matcat/index_space.hpp"

using namespace matcat;

TEST_CASE("pairing values") {
  CHECK(cantor_pair(Nat(0), Nat(0)) == 0);
  CHECK(cantor_pair(Nat(1), Nat(1)) == 4);  // (2*3)/2 + 1
  CHECK(cantor_pair(Nat(1), Nat(0)) == 1);
  CHECK(cantor_pair(Nat(0), Nat(1)) == 2);
  const auto [x, y] = cantor_unpair(Nat(8));
  CHECK(x == 1);
  CHECK(y == 2);
}

TEST_CASE("unpair inverts pair by brute-force agreement") {
  // independent oracle: search the grid for the preimage
  for (unsigned long z = 0; z < 60; ++z) {
    bool found = false;
    for (unsigned long a = 0; a <= z && !found; ++a) {
      for (unsigned long b = 0; b <= z && !found; ++b) {
        if (cantor_pair(Nat(a), Nat(b)) == z) {
          const auto [x, y] = cantor_unpair(Nat(z));
          CHECK(x == a);
          CHECK(y == b);
          found = true;
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("pairing is a bijection on the probe grid") {
  std::set<Nat> seen;
  for (unsigned long a = 0; a <= 200; ++a) {
    for (unsigned long b = 0; b <= 200; ++b) {
      const Nat z = cantor_pair(Nat(a), Nat(b));
      CHECK(seen.insert(z).second);  // injective
      const auto [x, y] = cantor_unpair(z);
      CHECK(x == a);
      CHECK(y == b);
    }
  }
}

TEST_CASE("membership per descriptor") {
  const IndexSet all = IndexSet::all_naturals();
  const IndexSet diag = IndexSet::diag_image(all);
  CHECK(diag.member(cantor_pair(Nat(3), Nat(3))));
  CHECK_FALSE(diag.member(cantor_pair(Nat(3), Nat(4))));

  const IndexSet p =
      IndexSet::pair_image(IndexSet::singleton(Nat(1)),
                           IndexSet::singleton(Nat(2)));
  CHECK(p.member(cantor_pair(Nat(1), Nat(2))));
  CHECK_FALSE(p.member(cantor_pair(Nat(1), Nat(3))));

  CHECK_FALSE(IndexSet::empty().member(Nat(0)));
  CHECK(IndexSet::finite({Nat(4), Nat(2)}).member(Nat(2)));
}

TEST_CASE("enumeration is ascending without repetition") {
  const IndexSet p = IndexSet::pair_image(
      IndexSet::finite({Nat(0), Nat(1)}), IndexSet::singleton(Nat(0)));
  const auto xs = p.enumerate_upto(5);
  REQUIRE(xs.size() == 2);
  CHECK(xs[0] == cantor_pair(Nat(0), Nat(0)));
  CHECK(xs[1] == cantor_pair(Nat(1), Nat(0)));

  const IndexSet dd = IndexSet::diag_image(IndexSet::all_naturals());
  const auto ds = dd.enumerate_upto(6);
  REQUIRE(ds.size() == 6);
  for (std::size_t i = 1; i < ds.size(); ++i) {
    CHECK(ds[i - 1] < ds[i]);
  }

  // both sides infinite: anti-diagonal scan stays ascending
  const IndexSet pp =
      IndexSet::pair_image(dd, IndexSet::all_naturals());
  const auto ps = pp.enumerate_upto(20);
  REQUIRE(ps.size() == 20);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    CHECK(ps[i - 1] < ps[i]);
    CHECK(pp.member(ps[i]));
  }
}

TEST_CASE("finiteness and emptiness are decided structurally") {
  const IndexSet all = IndexSet::all_naturals();
  CHECK_FALSE(all.is_finite());
  CHECK(IndexSet::pair_image(all, IndexSet::empty()).is_finite());
  CHECK(IndexSet::pair_image(all, IndexSet::empty()).is_empty());
  CHECK(IndexSet::diag_image(IndexSet::finite({Nat(1)})).is_finite());
  CHECK_THROWS_AS(all.enumerate_all(), Error);
}

TEST_CASE("images of disjoint sets stay disjoint") {
  const IndexSet a = IndexSet::finite({Nat(0), Nat(2)});
  const IndexSet b = IndexSet::finite({Nat(1), Nat(3)});
  const IndexSet c = IndexSet::finite({Nat(5), Nat(7)});
  const auto xs = IndexSet::pair_image(a, c).enumerate_all();
  const auto ys = IndexSet::pair_image(b, c).enumerate_all();
  for (const Nat& x : xs) {
    for (const Nat& y : ys) {
      CHECK(x != y);
    }
  }
}

TEST_CASE("diagonal image sits inside the square") {
  const IndexSet a = IndexSet::finite({Nat(0), Nat(3), Nat(6)});
  const IndexSet d = IndexSet::diag_image(a);
  const IndexSet sq = IndexSet::pair_image(a, a);
  for (const Nat& x : d.enumerate_all()) {
    CHECK(sq.member(x));
    const auto [u, v] = cantor_unpair(x);
    CHECK(u == v);
  }
}

TEST_CASE("word-shape decoding follows the tree") {
  const IndexSet all = IndexSet::all_naturals();
  const WordShape leaf = WordShape::leaf(all);
  const Nat a(3), b(5), c(7);

  const WordShape two = WordShape::node(leaf, leaf);
  const auto xy = decode_word_index(cantor_pair(a, b), two);
  REQUIRE(xy.size() == 2);
  CHECK(xy[0] == a);
  CHECK(xy[1] == b);

  const WordShape left = WordShape::node(WordShape::node(leaf, leaf), leaf);
  const auto lv =
      decode_word_index(cantor_pair(cantor_pair(a, b), c), left);
  REQUIRE(lv.size() == 3);
  CHECK(lv[0] == a);
  CHECK(lv[1] == b);
  CHECK(lv[2] == c);

  const WordShape right = WordShape::node(leaf, WordShape::node(leaf, leaf));
  const auto rv =
      decode_word_index(cantor_pair(a, cantor_pair(b, c)), right);
  REQUIRE(rv.size() == 3);
  CHECK(rv[0] == a);
  CHECK(rv[1] == b);
  CHECK(rv[2] == c);

  const WordShape strict =
      WordShape::node(WordShape::leaf(IndexSet::singleton(Nat(1))), leaf);
  CHECK_THROWS_AS(decode_word_index(cantor_pair(Nat(2), b), strict),
                  MembershipError);
}

TEST_CASE("extensional index-set equality where decidable") {
  const IndexSet a = IndexSet::finite({Nat(1), Nat(2)});
  const IndexSet b = IndexSet::finite({Nat(2), Nat(1)});
  CHECK(same_index_set(a, b));
  const IndexSet p = IndexSet::pair_image(IndexSet::singleton(Nat(1)),
                                          IndexSet::singleton(Nat(2)));
  const IndexSet q = IndexSet::finite({cantor_pair(Nat(1), Nat(2))});
  CHECK(same_index_set(p, q));
  CHECK_FALSE(same_index_set(a, IndexSet::all_naturals()));
}
