#include <random>

#include "catch_amalgamated.hpp"

#include "naive_oracle.hpp"
#include "ordsemi/enumerate.hpp"
#include "ordsemi/transform.hpp"

using namespace ordsemi;

namespace {

Transformation t(std::initializer_list<int> images) { return Transformation(images); }

std::vector<Transformation> decreasing_maps(int n) {
  FamilySelector sel;
  sel.n = n;
  sel.family = Family::decreasing;
  std::vector<Transformation> out;
  for (const auto& a : enumerate_family(sel)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("composition is right action") {
  REQUIRE(compose(t({1, 1, 3, 4, 1}), t({1, 1, 3, 2, 1})) == t({1, 1, 3, 2, 1}));

  const auto id = Transformation::identity(5);
  const auto a = t({1, 1, 3, 2, 1});
  REQUIRE(compose(a, id) == a);
  REQUIRE(compose(id, a) == a);

  // the zero map absorbs every decreasing map: pi . b = b . pi = pi
  const auto pi = Transformation::zero(4);
  for (const auto& b : decreasing_maps(4)) {
    REQUIRE(compose(pi, b) == pi);
    REQUIRE(compose(b, pi) == pi);
  }

  REQUIRE_THROWS_AS(compose(t({1, 2}), t({1, 2, 3})), std::domain_error);
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937_64 rng(0);
  auto random_map = [&](int n) {
    std::vector<Transformation::value_type> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      img[static_cast<std::size_t>(i)] = static_cast<Transformation::value_type>(
          std::uniform_int_distribution<int>(1, n)(rng));
    }
    return Transformation(img);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const auto a = random_map(n), b = random_map(n), c = random_map(n);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("image, fix set, kernel") {
  const auto a = t({1, 1, 3, 2, 1});
  REQUIRE(image(a) == std::vector<int>{1, 2, 3});
  REQUIRE(fix_set(a) == std::vector<int>{1, 3});

  const auto ker = kernel(a);
  REQUIRE(ker.classes().size() == 3);
  // classes in decreasing image-value order
  REQUIRE(ker.classes()[0].value == 3);
  REQUIRE(ker.classes()[0].members == std::vector<int>{3});
  REQUIRE(ker.classes()[0].transversal_min == 3);
  REQUIRE(ker.classes()[1].value == 2);
  REQUIRE(ker.classes()[1].members == std::vector<int>{4});
  REQUIRE(ker.classes()[2].value == 1);
  REQUIRE(ker.classes()[2].members == std::vector<int>{1, 2, 5});
  REQUIRE(ker.classes()[2].transversal_min == 1);

  REQUIRE(fix_set(Transformation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  const auto pi = Transformation::zero(5);
  REQUIRE(image(pi) == std::vector<int>{1});
  REQUIRE(kernel(pi).classes().size() == 1);
  REQUIRE(kernel(pi).classes()[0].members.size() == 5);
}

TEST_CASE("kernel classes partition the chain") {
  for (const auto& a : decreasing_maps(5)) {
    const auto ker = kernel(a);
    std::vector<bool> seen(6, false);
    for (const auto& cls : ker.classes()) {
      REQUIRE_FALSE(cls.members.empty());
      REQUIRE(cls.transversal_min == cls.members.front());
      for (int x : cls.members) {
        REQUIRE_FALSE(seen[static_cast<std::size_t>(x)]);
        seen[static_cast<std::size_t>(x)] = true;
        REQUIRE(a(x) == cls.value);
      }
    }
    for (int x = 1; x <= 5; ++x) REQUIRE(seen[static_cast<std::size_t>(x)]);
  }
}

TEST_CASE("order predicates") {
  REQUIRE(is_order_preserving(t({1, 2, 3, 3})));
  REQUIRE(is_order_decreasing(t({1, 2, 3, 3})));

  const auto a = t({1, 1, 3, 2, 1});
  REQUIRE_FALSE(is_order_preserving(a));
  REQUIRE_FALSE(is_order_reversing(a));
  REQUIRE(is_order_decreasing(a));

  REQUIRE(is_order_reversing(t({4, 3, 2, 1})));
  REQUIRE_FALSE(is_order_decreasing(t({4, 3, 2, 1})));

  naive::all_maps(4, [](const Transformation& m) {
    REQUIRE(is_order_preserving(m) == naive::order_preserving_pairs(m));
    REQUIRE(is_order_reversing(m) == naive::order_reversing_pairs(m));
    REQUIRE(is_order_decreasing(m) == naive::decreasing_pointwise(m));
  });
}

TEST_CASE("orientation predicates") {
  const auto a = t({1, 1, 3, 2, 1});
  REQUIRE(is_orientation_reversing(a));
  REQUIRE_FALSE(is_orientation_preserving(a));

  REQUIRE(is_orientation_preserving(Transformation::zero(6)));
  REQUIRE(is_orientation_reversing(Transformation::zero(6)));

  // binary image but two descents and two ascents: not oriented at all
  REQUIRE_FALSE(is_oriented(t({1, 2, 1, 2})));

  naive::all_maps(4, [](const Transformation& m) {
    REQUIRE(is_orientation_preserving(m) == naive::cyclic_by_rotation(m));
    REQUIRE(is_orientation_reversing(m) == naive::anticyclic_by_rotation(m));
  });

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Transformation::value_type> img(7);
    for (auto& v : img) {
      v = static_cast<Transformation::value_type>(std::uniform_int_distribution<int>(1, 7)(rng));
    }
    const Transformation m(img);
    REQUIRE(is_orientation_preserving(m) == naive::cyclic_by_rotation(m));
    REQUIRE(is_orientation_reversing(m) == naive::anticyclic_by_rotation(m));
  }
}

TEST_CASE("oriented maps of rank at most two have both orientations") {
  for (int n = 3; n <= 5; ++n) {
    naive::all_maps(n, [](const Transformation& m) {
      if (is_oriented(m)) {
        const bool both = is_orientation_preserving(m) && is_orientation_reversing(m);
        REQUIRE(both == (rank(m) <= 2));
      }
    });
  }
}

TEST_CASE("non-constant maps: monotone iff endpoints compare, within each orientation class") {
  for (int n = 3; n <= 5; ++n) {
    naive::all_maps(n, [n](const Transformation& m) {
      if (rank(m) == 1) return;
      if (is_orientation_preserving(m)) {
        REQUIRE(is_order_preserving(m) == (m(1) < m(n)));
      }
      if (is_orientation_reversing(m)) {
        REQUIRE(is_order_reversing(m) == (m(n) < m(1)));
      }
    });
  }
  // scoping matters: anti-cyclic with rising endpoints need not be monotone
  const Transformation counterexample({2, 1, 3});
  REQUIRE(is_orientation_reversing(counterexample));
  REQUIRE(counterexample(1) < counterexample(3));
  REQUIRE_FALSE(is_order_preserving(counterexample));
}

TEST_CASE("idempotents and nilpotents") {
  REQUIRE(is_idempotent(t({1, 1, 3, 3, 3})));
  REQUIRE(is_idempotent(Transformation::identity(4)));
  REQUIRE_FALSE(is_nilpotent_decreasing(Transformation::identity(4)));
  REQUIRE(is_nilpotent_decreasing(t({1, 1, 1, 3, 2})));
  REQUIRE_THROWS_AS(is_nilpotent_decreasing(t({4, 3, 2, 1})), std::domain_error);

  naive::all_maps(4, [](const Transformation& m) {
    REQUIRE(is_idempotent(m) == (fix_set(m) == image(m)));
  });

  // decreasing maps: idempotent iff every kernel class starts at its value
  for (const auto& m : decreasing_maps(5)) {
    bool all_min = true;
    for (const auto& cls : kernel(m).classes()) {
      if (cls.transversal_min != cls.value) all_min = false;
    }
    REQUIRE(is_idempotent(m) == all_min);
  }
}

TEST_CASE("fix set of a product of decreasing maps is the intersection") {
  const auto maps = decreasing_maps(4);
  for (const auto& a : maps) {
    for (const auto& b : maps) {
      std::vector<int> expected;
      const auto fa = fix_set(a);
      const auto fb = fix_set(b);
      std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                            std::back_inserter(expected));
      REQUIRE(fix_set(compose(a, b)) == expected);
    }
  }
}

TEST_CASE("order-preserving degree") {
  REQUIRE(order_preserving_degree(t({1, 2, 1, 1})) == 2);
  REQUIRE(order_preserving_degree(t({1, 2, 3, 1, 1})) == 3);
  REQUIRE(order_preserving_degree(t({1, 1, 3, 3, 3})) == 5);
  REQUIRE(order_preserving_degree(Transformation::identity(6)) == 6);
  REQUIRE_THROWS_AS(order_preserving_degree(t({1, 1, 3, 2, 1})), std::domain_error);
  REQUIRE_THROWS_AS(order_preserving_degree(t({2, 2, 2})), std::domain_error);

  // degree equals n exactly for the order-preserving maps
  FamilySelector sel;
  sel.n = 5;
  sel.family = Family::orientation_preserving;
  for (const auto& m : enumerate_family(sel)) {
    REQUIRE((order_preserving_degree(m) == 5) == is_order_preserving(m));
  }
}

TEST_CASE("order-reversing degree") {
  REQUIRE(order_reversing_degree(t({1, 1, 3, 2, 1})) == 3);
  REQUIRE(order_reversing_degree(t({1, 1, 1, 4, 3})) == 4);
  REQUIRE(order_reversing_degree(t({1, 1, 3, 2})) == 3);
  REQUIRE_THROWS_AS(order_reversing_degree(t({1, 2, 3, 3})), std::domain_error);
  REQUIRE_THROWS_AS(order_reversing_degree(Transformation::zero(5)), std::domain_error);

  FamilySelector sel;
  sel.n = 6;
  sel.family = Family::reversing;
  for (const auto& m : enumerate_family(sel)) {
    const int deg = order_reversing_degree(m);
    REQUIRE(deg >= 3);
    REQUIRE(deg <= 5);
    for (int x = 1; x < deg; ++x) REQUIRE(m(x) == 1);
    REQUIRE(m(deg) != 1);
  }
}

TEST_CASE("parse and format") {
  const auto a = parse_transformation("1 1 3 2 1");
  REQUIRE(a == t({1, 1, 3, 2, 1}));
  REQUIRE(parse_transformation("1 2 3") == Transformation::identity(3));
  REQUIRE(format_transformation(a) == "1 1 3 2 1");
  REQUIRE(parse_transformation("  1\t2  1 ") == t({1, 2, 1}));

  try {
    parse_transformation("1 0 2");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.position() == 2);
  }
  try {
    parse_transformation("1 4 2");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.position() == 2);
  }
  REQUIRE_THROWS_AS(parse_transformation("1 x 2"), parse_error);
  REQUIRE_THROWS_AS(parse_transformation(""), parse_error);
  REQUIRE_THROWS_AS(parse_transformation("   "), parse_error);

  for (const auto& m : decreasing_maps(5)) {
    REQUIRE(parse_transformation(format_transformation(m)) == m);
  }
}

TEST_CASE("transformation validation") {
  REQUIRE_THROWS_AS(Transformation(std::vector<Transformation::value_type>{}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(t({1, 5, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(t({0, 1}), std::invalid_argument);
  REQUIRE(Transformation::zero(1) == Transformation::identity(1));
}
