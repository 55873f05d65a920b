#include "doctest.h"
#include "helpers.hpp"

#include "cgdl/error.hpp"
#include "cgdl/model.hpp"

#include <random>

using namespace cgdl;
using testing::lattice;
using testing::v;

namespace {

// Goedel 3-chain, W = {w0, w1}, a = {(w0, {w0: 1, w1: 1/2})},
// q = (1, 1/2), p = (1/2, 1).
CgdlModel example() {
  const auto l = lattice("godel:3");
  CgdlModel m(l, {"w0", "w1"});
  FuzzyMultirelation a(l, 2);
  a.insert(0, FuzzySet{{0, l->top()}, {1, v(*l, "1/2")}});
  m.set_program("a", a);
  m.set_value("q", 0, l->top());
  m.set_value("q", 1, v(*l, "1/2"));
  m.set_value("p", 0, v(*l, "1/2"));
  m.set_value("p", 1, l->top());
  return m;
}

CgdlModel random_model(const LatticePtr& l, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> level(0, l->size() - 1);
  std::uniform_int_distribution<int> pairs(0, 2);
  CgdlModel m(l, n);
  for (const char* prog : {"a", "b"}) {
    FuzzyMultirelation r(l, n);
    for (std::size_t w = 0; w < n; ++w)
      for (int k = pairs(rng); k > 0; --k) {
        FuzzySet phi;
        for (std::size_t u = 0; u < n; ++u)
          phi.set(static_cast<StateId>(u), Value{static_cast<std::uint8_t>(level(rng))});
        r.insert(static_cast<StateId>(w), phi);
      }
    m.set_program(prog, r);
  }
  for (const char* prop : {"p", "q"})
    for (std::size_t w = 0; w < n; ++w)
      m.set_value(prop, static_cast<StateId>(w), Value{static_cast<std::uint8_t>(level(rng))});
  return m;
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("graded diamond and box on the example") {
  const CgdlModel m = example();
  const auto& l = *m.lattice();
  const Modes def{SeqMode::support_guarded, DiamondMode::definition};
  const Modes proof{SeqMode::support_guarded, DiamondMode::proof_form};
  CHECK(sat(m, 0, parse_formula("<a>q"), def).value == v(l, "1/2"));
  CHECK(sat(m, 0, parse_formula("[a]q"), def).value == l.top());
  CHECK(sat(m, 0, parse_formula("<a>q"), proof).value == l.top());
  CHECK(sat(m, 0, parse_formula("[a]p"), def).value == v(l, "1/2"));
  // w1 has no a-pair: the diamond is 0 and the box is top.
  CHECK(sat(m, 1, parse_formula("<a>q"), def).value == l.zero());
  CHECK(sat(m, 1, parse_formula("[a]false"), def).value == l.top());
  CHECK(sat(m, 0, parse_formula("p -> q"), def).value == l.top());
  CHECK(sat(m, 1, parse_formula("p -> q"), def).value == v(l, "1/2"));
  CHECK(sat(m, 0, parse_formula("p <-> q"), def).value == v(l, "1/2"));
}

TEST_CASE("validity") {
  const CgdlModel m = example();
  const Modes modes;
  CHECK(validity(m, parse_formula("true"), modes).valid);
  CHECK(validity(m, parse_formula("p | true"), modes).valid);
  CHECK_FALSE(validity(m, parse_formula("p"), modes).valid);
  CHECK(validity(m, parse_formula("<a>false <-> false"), modes).valid);
  const Validity r = validity(m, parse_formula("[a]q"), modes);
  CHECK(r.values.size() == 2);
  CHECK(r.converged);
}

TEST_CASE("2.4 holds on random models in every mode") {
  std::mt19937_64 rng(3);
  const auto f = parse_formula("<a ; b + a* & b>false <-> false");
  for (const char* name : {"boolean", "godel:3", "lukasiewicz:5"})
    for (int rep = 0; rep < 100; ++rep) {
      const CgdlModel m = random_model(lattice(name), 3, rng);
      for (auto seq : {SeqMode::support_guarded, SeqMode::literal})
        for (auto dia : {DiamondMode::definition, DiamondMode::proof_form})
          CHECK(validity(m, f, Modes{seq, dia}).valid);
    }
}

TEST_CASE("undeclared symbols") {
  const CgdlModel m = example();
  CHECK_THROWS_AS(check_signature(m, *parse_formula("<b>p")), SemanticError);
  CHECK_THROWS_AS(check_signature(m, *parse_formula("<a>r")), SemanticError);
  CHECK_NOTHROW(check_signature(m, *parse_formula("<a*>p & [a ; a]q")));
  CHECK_THROWS_AS(sat(m, 0, parse_formula("<b>p"), Modes{}), SemanticError);
  CHECK_THROWS_AS(m.prop_values("r"), SemanticError);
  CHECK(m.program("b") == nullptr);
  CHECK_THROWS_AS(CgdlModel(lattice("boolean"), {"w", "w"}), SemanticError);
  CgdlModel copy = example();
  CHECK_THROWS_AS(copy.set_value("p", 2, copy.lattice()->top()), DimensionError);
  CHECK_THROWS_AS(copy.set_program("c", FuzzyMultirelation(copy.lattice(), 3)), DimensionError);
}

TEST_CASE("trace lists children first") {
  const CgdlModel m = example();
  const SatResult r = sat(m, 0, parse_formula("<a>q & p"), Modes{}, true);
  REQUIRE(r.trace.size() == 4);
  CHECK(render(r.trace.back().first) == "<a>q & p");
  CHECK(r.trace.back().second[0] == r.value);
  for (std::size_t i = 0; i < r.trace.size(); ++i)
    for (const auto& child : {r.trace[i].first->left, r.trace[i].first->right})
      if (child) {
        bool earlier = false;
        for (std::size_t j = 0; j < i; ++j)
          earlier = earlier || same(r.trace[j].first, child);
        CHECK(earlier);
      }
}

TEST_CASE("star non-convergence is reported") {
  const auto l = lattice("godel:3");
  CgdlModel m(l, 2);
  FuzzyMultirelation swap(l, 2);
  swap.insert(0, FuzzySet{{1, l->top()}});
  swap.insert(1, FuzzySet{{0, l->top()}});
  m.set_program("a", swap);
  m.declare_prop("p");
  Evaluator cut(m, Modes{}, 1);
  cut.values(parse_formula("<a*>p"));
  CHECK_FALSE(cut.converged());
  Evaluator full(m, Modes{});
  full.values(parse_formula("<a*>p"));
  CHECK(full.converged());
}

TEST_CASE("evaluator caches and invalidation") {
  CgdlModel m = example();
  auto interner = std::make_shared<Interner>();
  Evaluator ev(m, Modes{}, 0, interner);
  const auto f = parse_formula("<a>q");
  const auto first = ev.values(f);
  CHECK(first[0] == v(*m.lattice(), "1/2"));
  m.set_value("q", 0, m.lattice()->zero());
  ev.invalidate_formulas();
  CHECK(ev.values(f)[0] == m.lattice()->zero());
  CHECK(&ev.interpret(parse_program("a")) == &ev.interpret(parse_program("a")));
}

TEST_CASE("diamonds and boxes are monotone") {
  std::mt19937_64 rng(4);
  for (const char* name : {"godel:3", "lukasiewicz:5"}) {
    const auto l = lattice(name);
    for (int rep = 0; rep < 200; ++rep) {
      const CgdlModel m = random_model(l, 3, rng);
      for (auto dia : {DiamondMode::definition, DiamondMode::proof_form}) {
        Evaluator ev(m, Modes{SeqMode::support_guarded, dia});
        for (const char* prog : {"a", "a ; b", "a + b", "b*"}) {
          const std::string pr(prog);
          const auto lo_d = ev.values(parse_formula("<" + pr + ">(p & q)"));
          const auto hi_d = ev.values(parse_formula("<" + pr + ">p"));
          const auto lo_b = ev.values(parse_formula("[" + pr + "](p & q)"));
          const auto hi_b = ev.values(parse_formula("[" + pr + "]p"));
          for (std::size_t w = 0; w < 3; ++w) {
            CHECK(l->leq(lo_d[w], hi_d[w]));
            CHECK(l->leq(lo_b[w], hi_b[w]));
          }
        }
      }
    }
  }
}

TEST_CASE("mode names") {
  CHECK(parse_seq_mode("literal") == SeqMode::literal);
  CHECK(to_string(DiamondMode::proof_form) == "proof-form");
  CHECK(parse_diamond_mode(to_string(DiamondMode::definition)) == DiamondMode::definition);
  CHECK_THROWS_AS(parse_seq_mode("sideways"), ParseError);
}

}
