#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "markov/asrel.hpp"
#include "markov/error.hpp"
#include "markov/idempotents.hpp"
#include "markov/random.hpp"
#include "markov/supports.hpp"
#include "support/examples.hpp"
#include "support/oracles.hpp"

using namespace markov;
using examples::q;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

void check_against_oracle(const Kernel& e) {
  const auto o = oracle::flags(oracle::to_mat(e), e.kind() == Kind::Multi);
  const IdempotentReport r = classify(e);
  CHECK(r.idempotent == o.idempotent);
  CHECK(r.is_static == o.is_static);
  CHECK(r.strong == o.strong);
  CHECK(r.balanced == o.balanced);
}

}  // namespace

TEST_CASE("two-step kernel") {
  const Kernel half = examples::strong_e();
  const Kernel l = two_step(half);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t x = 0; x < 2; ++x) CHECK(l(i, x) == q(1, 4));
  const FinObject x{"a", "b", "c"};
  CHECK(kernel_equal(two_step(identity(Kind::Stoch, x)), copy(Kind::Stoch, x)));

  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const Kind kind = static_cast<Kind>(i % 3);
    const FinObject obj = random_object(rng, 1, 4, "x");
    const Kernel e = random_kernel(kind, obj, obj, rng);
    const Kernel ts = two_step(e);
    CHECK(oracle::same(ts, oracle::two_step(oracle::to_mat(e))));
    CHECK(kernel_equal(marginalize(ts, obj.size(), Side::Left), compose(e, e)));
    if (kind != Kind::Multi) {
      // Σ_z e(z|y) = 1 for every y.
      CHECK(kernel_equal(marginalize(ts, obj.size(), Side::Right), e));
    }
  }
  CHECK(code_of([] { two_step(Kernel(Kind::Stoch, FinObject{"a"}, FinObject{"x", "y"}, {1, 0})); }) ==
        ErrorCode::NotEndo);
}

TEST_CASE("classification of the worked examples") {
  const IdempotentReport strong = classify(examples::strong_e());
  CHECK(strong.idempotent);
  CHECK(strong.strong);
  CHECK_FALSE(strong.is_static);
  CHECK(strong.balanced);

  const IdempotentReport st = classify(examples::static_e());
  CHECK(st.is_static);
  CHECK_FALSE(st.strong);
  CHECK(st.balanced);

  const IdempotentReport b4 = classify(examples::balanced4_e());
  CHECK_FALSE(b4.is_static);
  CHECK_FALSE(b4.strong);
  CHECK(b4.balanced);

  for (const Kernel& e : {examples::strong_e(), examples::static_e(), examples::balanced4_e(),
                          examples::multi_e(), examples::multi_chain3(), examples::signed_e(),
                          examples::signed4_e()}) {
    check_against_oracle(e);
  }

  const Kernel not_idem = examples::stoch(examples::numbered(2), examples::numbered(2),
                                          {{0, 1}, {1, 0}});
  const IdempotentReport r = classify(not_idem);
  CHECK_FALSE(r.idempotent);
  CHECK_FALSE(r.balanced);
  CHECK_FALSE(r.is_static);
  CHECK(r.idempotent_witness);
}

TEST_CASE("unbalanced idempotents and their witnesses") {
  // Witnesses are reported as (input, intermediate, final).
  const IdempotentReport m = classify(examples::multi_e());
  REQUIRE(m.idempotent);
  CHECK_FALSE(m.balanced);
  REQUIRE(m.balanced_witness);
  CHECK(*m.balanced_witness == Witness{0, 1, 0});

  const IdempotentReport s = classify(examples::signed_e());
  REQUIRE(s.idempotent);
  CHECK_FALSE(s.balanced);
  REQUIRE(s.balanced_witness);
  CHECK(*s.balanced_witness == Witness{0, 1, 0});

  const IdempotentReport c = classify(examples::multi_chain3());
  CHECK(c.idempotent);
  CHECK_FALSE(c.balanced);

  const IdempotentReport s4 = classify(examples::signed4_e());
  CHECK(s4.idempotent);
  CHECK_FALSE(s4.balanced);
}

TEST_CASE("balance characterizations agree") {
  for (const Kernel& e : {examples::strong_e(), examples::static_e(), examples::balanced4_e()}) {
    const BalancedCrossCheck c = balanced_cross_check(e);
    CHECK(c.balanced_equation);
    CHECK(c.detailed_balance);
    CHECK(c.strong_almost_surely);
    CHECK(c.self_adjoint_on_invariants);
  }
  for (const Kernel& e : {examples::multi_e(), examples::signed_e(), examples::multi_chain3()}) {
    const BalancedCrossCheck c = balanced_cross_check(e);
    CHECK_FALSE(c.balanced_equation);
    CHECK_FALSE(c.detailed_balance);
    CHECK_FALSE(c.strong_almost_surely);
    CHECK_FALSE(c.self_adjoint_on_invariants);
  }
  CHECK(code_of([] {
          balanced_cross_check(
              examples::stoch(examples::numbered(2), examples::numbered(2), {{0, 1}, {1, 0}}));
        }) == ErrorCode::NotIdempotent);
}

TEST_CASE("all multi idempotents up to three elements") {
  std::size_t idempotents = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const FinObject x = FinObject::range(n, "x");
    oracle::for_each_multi(n, n, [&](const std::vector<unsigned>& masks) {
      const Kernel e = oracle::multi_from_masks(x, x, masks);
      check_against_oracle(e);
      const IdempotentReport r = classify(e);
      if (!r.idempotent) return;
      ++idempotents;
      CHECK((!r.is_static || r.balanced));
      CHECK((!r.strong || r.balanced));
      CHECK((!(r.is_static && r.strong) || r.deterministic));
      CHECK(balanced_cross_check(e).all_agree());
      CHECK(r.is_static == ase(e, e, identity(Kind::Multi, x)));
      const ImplicationReport cs = cauchy_schwarz(e, e, e);
      CHECK(cs.antecedent);
      CHECK(cs.consequent == r.balanced);
    });
  }
  CHECK(idempotents > 0);
}

TEST_CASE("generated stochastic idempotents") {
  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const FinObject x = random_object(rng, 1, 8, "x");
    const GeneratedIdempotent g = random_idempotent(x, rng);
    const IdempotentReport r = classify(g.e);
    REQUIRE(r.idempotent);
    CHECK(r.balanced);
    CHECK((!(r.is_static && r.strong) || r.deterministic));
    CHECK(balanced_cross_check(g.e).all_agree());
    CHECK(r.is_static == ase(g.e, g.e, identity(Kind::Stoch, x)));

    const SplitData s = blackwell_split(g.e);
    CHECK(kernel_equal(compose(s.iota, s.pi), g.e));
    CHECK(kernel_equal(compose(s.pi, s.iota), identity(Kind::Stoch, s.t)));
    std::set<std::set<std::string>> recovered;
    for (const auto& cls : s.classes) recovered.emplace(cls.begin(), cls.end());
    std::set<std::set<std::string>> generated;
    for (const auto& cls : g.classes) {
      std::set<std::string> labels;
      for (std::size_t v : cls) labels.insert(x.label(v));
      generated.insert(labels);
    }
    CHECK(recovered == generated);
    for (const auto& n : s.transient) {
      const std::size_t row = x.require_index(n);
      for (std::size_t col = 0; col < x.size(); ++col) CHECK(g.e(row, col).is_zero());
    }
    const SplitVerification v = verify_split(g.e, s.iota, s.pi);
    CHECK(v.theorem_ok);
    const SplitVerification vg = verify_split(g.e, g.iota, g.pi);
    CHECK(vg.theorem_ok);
  }
}

TEST_CASE("blackwell splitting of the worked examples") {
  const SplitData strong = blackwell_split(examples::strong_e());
  CHECK(strong.t.size() == 1);
  CHECK(strong.iota.column(0) == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(strong.pi(0, 0) == 1);
  CHECK(strong.pi(0, 1) == 1);

  const SplitData st = blackwell_split(examples::static_e());
  CHECK(st.t.size() == 2);
  CHECK(same_matrix(st.iota, examples::stoch(FinObject{"t1", "t2"}, examples::numbered(3),
                                             {{1, 0}, {0, 1}, {0, 0}})));
  CHECK(same_matrix(st.pi, examples::stoch(examples::numbered(3), FinObject{"t1", "t2"},
                                           {{1, 0, q(1, 2)}, {0, 1, q(1, 2)}})));

  const SplitData b4 = blackwell_split(examples::balanced4_e());
  CHECK(b4.t == FinObject{"C_1", "C_3"});
  CHECK(b4.classes == std::vector<std::vector<std::string>>{{"1", "2"}, {"3"}});
  CHECK(b4.transient == std::vector<std::string>{"4"});
  CHECK(same_matrix(b4.iota, examples::balanced4_iota()));
  CHECK(same_matrix(b4.pi, examples::balanced4_pi()));

  CHECK(code_of([] { blackwell_split(examples::multi_e()); }) == ErrorCode::UnsupportedKind);
  CHECK(code_of([] {
          blackwell_split(
              examples::stoch(examples::numbered(2), examples::numbered(2), {{0, 1}, {1, 0}}));
        }) == ErrorCode::NotIdempotent);
}

TEST_CASE("splitting search") {
  CHECK_FALSE(search_split(examples::multi_e(), 2));

  const FinObject x{"0", "1"};
  const auto id = search_split(identity(Kind::Multi, x), 2);
  REQUIRE(id);
  CHECK(id->t.size() == 2);
  CHECK(kernel_equal(compose(id->iota, id->pi), identity(Kind::Multi, x)));

  const Kernel full = Kernel::from_images(x, x, {{"0", "1"}, {"0", "1"}});
  const auto f = search_split(full, 2);
  REQUIRE(f);
  CHECK(f->t.size() == 1);

  const auto strong = search_split(examples::strong_e(), 1);
  REQUIRE(strong);
  CHECK(kernel_equal(compose(strong->iota, strong->pi), examples::strong_e()));

  SearchOptions tiny;
  tiny.max_candidates = 10;
  CHECK(code_of([&] { search_split(examples::multi_chain3(), 3, tiny); }) ==
        ErrorCode::SizeLimitExceeded);
  CHECK(code_of([] { search_split(examples::signed_e(), 2); }) == ErrorCode::UnsupportedKind);
}

TEST_CASE("verifying splittings") {
  const SplitVerification v =
      verify_split(examples::balanced4_e(), examples::balanced4_iota(), examples::balanced4_pi());
  CHECK(v.theorem_ok);
  CHECK_FALSE(v.iota_deterministic);
  CHECK_FALSE(v.pi_deterministic);
  CHECK(v.pi_as_deterministic);
  CHECK(code_of([] {
          verify_split(examples::balanced4_e(), examples::balanced4_pi(), examples::balanced4_iota());
        }) == ErrorCode::NotASplitting);
}

TEST_CASE("Cauchy-Schwarz implication") {
  const ImplicationReport m = cauchy_schwarz(examples::multi_e(), examples::multi_e(),
                                             examples::multi_e());
  CHECK(m.antecedent);
  CHECK_FALSE(m.consequent);
  CHECK_FALSE(m.implication_ok);

  Rng rng(79);
  for (int i = 0; i < 300; ++i) {
    const Kind kind = i % 2 ? Kind::Stoch : Kind::Multi;
    const FinObject a = random_object(rng, 1, 3, "a");
    const FinObject b = random_object(rng, 1, 3, "b");
    const FinObject x = random_object(rng, 1, 3, "x");
    const FinObject y = random_object(rng, 1, 3, "y");
    RandomOptions sparse;
    sparse.zero_probability = 0.6;
    const Kernel f = random_kernel(kind, a, b, rng, sparse);
    const Kernel g = random_kernel(kind, b, x, rng, sparse);
    const Kernel h = random_kernel(kind, x, y, rng, sparse);
    const ImplicationReport r = cauchy_schwarz(f, g, h);
    const auto o = oracle::cauchy_schwarz(oracle::to_mat(f), oracle::to_mat(g), oracle::to_mat(h),
                                          kind == Kind::Multi);
    CHECK(r.antecedent == o.antecedent);
    CHECK(r.consequent == o.consequent);
    if (kind == Kind::Stoch) CHECK(r.implication_ok);
  }
  CHECK(code_of([] {
          cauchy_schwarz(examples::static_e(), examples::strong_e(), examples::strong_e());
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("static idempotents, supports and invariant states") {
  Rng rng(83);
  RandomOptions sparse;
  sparse.zero_probability = 0.5;
  for (int i = 0; i < 150; ++i) {
    const FinObject x = random_object(rng, 1, 5, "x");
    const Kernel p = random_kernel(Kind::Stoch, FinObject::unit(), x, rng, sparse);
    const SupportData sd = split_support(p);
    const Kernel e = compose(sd.inclusion, *sd.projection);
    const IdempotentReport r = classify(e);
    REQUIRE(r.idempotent);
    CHECK(r.is_static);
    CHECK(kernel_equal(compose(e, p), p));

    // Random q ≪ e is fixed by e.
    const Kernel q1 = compose(e, random_kernel(Kind::Stoch, FinObject::unit(), x, rng));
    CHECK(kernel_equal(compose(e, q1), q1));

    // The recurrent-class splitting of a static idempotent is its split support.
    const SplitData s = blackwell_split(e);
    const SupportData se = support(e);
    CHECK(same_matrix(s.iota, se.inclusion));
    CHECK(same_matrix(compose(s.pi, se.inclusion), identity(Kind::Stoch, se.supp_object)));

    // Almost-sure transfer along e.
    const FinObject y = random_object(rng, 1, 3, "y");
    const Kernel f = random_kernel(Kind::Stoch, x, y, rng);
    const Kernel g = perturb_off_support(f, p, rng());
    CHECK(kernel_equal(compose(f, compose(e, p)), compose(g, compose(e, p))));
  }
}
