#include <doctest.h>

#include "postlie/grading.hpp"
#include "postlie/rng.hpp"

using namespace postlie;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("grading compatibility on heis3") {
  LieAlgebra h = LieAlgebra::heisenberg(Q, 1);
  Grading ok = make_grading(h, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(grading_check(ok).ok);
  CHECK(support(ok) == Support({{1, 0}, {0, 1}, {1, 1}}));

  Grading bad = make_grading(h, {{1, 0}, {0, 1}, {2, 0}});
  Verdict v = grading_check(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.witnesses.front().where == std::vector<int>{0, 1});

  Grading any = make_grading(LieAlgebra::abelian(Q, 3), {{5}, {-2}, {0}});
  CHECK(grading_check(any).ok);

  // Zero-dimensional algebra: empty support, vacuously free.
  Grading empty = make_grading(LieAlgebra::abelian(Q, 0), {});
  CHECK(grading_check(empty).ok);
  CHECK(support(empty).empty());
  CHECK(is_arithmetically_free(support(empty)));
}

TEST_CASE("heis5 standard grading") {
  LieAlgebra h5 = LieAlgebra::heisenberg(Q, 2);
  Grading gr = make_grading(h5, {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(grading_check(gr).ok);
  CHECK(support(gr).size() == 3);
}

TEST_CASE("arithmetic freeness reduces to zero-avoidance over Z^n") {
  CHECK(is_arithmetically_free({{1, 0}, {0, 1}, {1, 1}}));
  CHECK_FALSE(is_arithmetically_free({{0, 0}, {1, 0}}));
  CHECK(is_arithmetically_free({}));

  Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    Support x;
    int size = static_cast<int>(rng.int_in(0, 6));
    int dim = static_cast<int>(rng.int_in(1, 3));
    for (int i = 0; i < size; ++i) {
      Degree d;
      for (int c = 0; c < dim; ++c) d.push_back(rng.int_in(-3, 3));
      x.insert(d);
    }
    bool zero_in = x.count(Degree(static_cast<std::size_t>(dim), 0)) > 0;
    CHECK(is_arithmetically_free_literal(x) == !zero_in);
    CHECK(is_arithmetically_free(x) == !zero_in);
  }
}

TEST_CASE("class bound values") {
  Support one = {{1}};
  Support two = {{1}, {2}};
  Support three = {{1, 0}, {0, 1}, {1, 1}};
  CHECK(nilpotency_class_bound(one) == 1);
  CHECK(nilpotency_class_bound(two) == 16);
  CHECK(nilpotency_class_bound(three) == 6561);
  CHECK_THROWS_AS(nilpotency_class_bound(Support{{0}}), constraint_error);
}

TEST_CASE("graded algebras with free support respect the class bound") {
  std::vector<Grading> gradings;
  gradings.push_back(make_grading(LieAlgebra::heisenberg(Q, 1),
                                  {{1, 0}, {0, 1}, {1, 1}}));
  gradings.push_back(make_grading(LieAlgebra::heisenberg(Q, 2),
                                  {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}}));
  // Filiform dim 4: [e1,e2] = e3, [e1,e3] = e4, graded by degrees 1,2,3,4.
  StructureTensor c(Q, 4);
  c.set_bracket(0, 1, unit_vec(Q, 4, 2));
  c.set_bracket(0, 2, unit_vec(Q, 4, 3));
  gradings.push_back(make_grading(LieAlgebra::create(c), {{1}, {2}, {3}, {4}}));
  // Abelian line graded by a single nonzero degree.
  gradings.push_back(make_grading(LieAlgebra::abelian(Q, 2), {{3}, {3}}));

  for (const Grading& gr : gradings) {
    REQUIRE(grading_check(gr).ok);
    Support x = support(gr);
    REQUIRE(is_arithmetically_free(x));
    auto cls = gr.algebra.nilpotency_class();
    REQUIRE(cls.has_value());
    CHECK(mpz_class(*cls) <= nilpotency_class_bound(x));
  }
}
