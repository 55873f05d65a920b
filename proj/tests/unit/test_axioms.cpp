#include "doctest.h"
#include "helpers.hpp"

#include "cgdl/axioms.hpp"
#include "cgdl/error.hpp"

using namespace cgdl;
using testing::lattice;
using testing::v;

namespace {

SearchConfig small_config(const char* lattice_name) {
  SearchConfig c;
  c.lattice = lattice(lattice_name);
  c.min_states = 1;
  c.max_states = 2;
  c.max_pairs_per_state = 1;
  return c;
}

const CellSummary* cell(const SearchReport& r, std::string_view axiom, Modes modes) {
  for (const auto& c : r.cells)
    if (c.axiom == axiom && c.modes == modes)
      return &c;
  return nullptr;
}

} // namespace

TEST_SUITE("axioms") {

TEST_CASE("catalogue order and lookup") {
  const auto& cat = axiom_catalogue();
  std::vector<std::string> ids;
  for (const auto& s : cat)
    ids.push_back(s.id);
  CHECK(ids == std::vector<std::string>{"2.1", "2.1/all", "2.2", "2.3", "2.4", "2.5", "2.6", "2.7",
                                        "L1.1", "L1.2", "L3.1", "L3.2", "L3.3"});
  CHECK(find_scheme("2.5").programs == 2);
  CHECK(find_scheme("2.1").atomic_only);
  CHECK_FALSE(find_scheme("2.1/all").claimed);
  CHECK(find_scheme("2.2").polarity == Polarity::implication);
  CHECK(find_scheme("L3.1").kind == SchemeKind::lattice);
  CHECK_THROWS_AS(find_scheme("9.9"), ParseError);
  Binding b{{parse_program("a"), parse_program("b")}, {parse_formula("p")}};
  CHECK(render(find_scheme("2.6").instance(b)) == "[a + b]p <-> [a]p & [b]p");
}

TEST_CASE("2.4 and 2.6 hold exhaustively on small models") {
  for (const char* name : {"boolean", "godel:3"}) {
    SearchConfig c = small_config(name);
    c.axioms = {"2.4", "2.6"};
    c.programs = 1;
    c.exhaustive = true;
    const SearchReport r = search_counterexamples(c);
    CHECK(r.coverage == "exhaustive");
    CHECK(r.models == enumeration_size(c));
    CHECK(r.counterexamples() == 0);
    for (const auto& cs : r.cells)
      CHECK(cs.checked > 0);
  }
}

TEST_CASE("2.2 is an inequality on goedel chains") {
  SearchConfig c = small_config("godel:3");
  c.axioms = {"2.2"};
  c.programs = 1;
  c.exhaustive = true;
  const SearchReport r = search_counterexamples(c);
  CHECK(r.counterexamples() == 0);
}

TEST_CASE("no programs leaves the program schemes vacuous") {
  SearchConfig c = small_config("godel:3");
  c.programs = 0;
  c.exhaustive = true;
  const SearchReport r = search_counterexamples(c);
  for (const auto& cs : r.cells) {
    if (cs.axiom.starts_with("2."))
      CHECK(cs.checked == 0);
    CHECK(cs.failures == 0);
  }
  CHECK(cell(r, "L1.1", Modes{})->checked > 0);
}

TEST_CASE("witnesses replay") {
  SearchConfig c = small_config("godel:3");
  c.axioms = {"2.5"};
  c.samples = 300;
  c.seed = 7;
  c.max_witnesses = 4;
  const SearchReport r = search_counterexamples(c);
  CHECK(r.coverage == "sampled");
  std::size_t replayed = 0;
  for (const auto& cs : r.cells)
    for (const Verdict& w : cs.witnesses) {
      CHECK_FALSE(w.passed);
      REQUIRE(w.witness.has_value());
      const Verdict again = check_axiom(w.model, w.axiom, w.binding, w.modes);
      CHECK_FALSE(again.passed);
      CHECK(again.witness == w.witness);
      CHECK(again.values == w.values);
      CHECK(*sample_model(c, w.model_index)->program("a") == *w.model->program("a"));
      ++replayed;
    }
  CHECK(replayed > 0);
}

TEST_CASE("search results do not depend on jobs") {
  SearchConfig c = small_config("godel:3");
  c.samples = 500;
  c.seed = 3;
  const SearchReport one = search_counterexamples(c);
  c.jobs = 4;
  const SearchReport four = search_counterexamples(c);
  REQUIRE(one.cells.size() == four.cells.size());
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(one.cells[i].checked == four.cells[i].checked);
    CHECK(one.cells[i].failures == four.cells[i].failures);
    REQUIRE(one.cells[i].witnesses.size() == four.cells[i].witnesses.size());
    for (std::size_t k = 0; k < one.cells[i].witnesses.size(); ++k)
      CHECK(one.cells[i].witnesses[k].model_index == four.cells[i].witnesses[k].model_index);
  }
}

TEST_CASE("binding errors") {
  const auto model = enumerate_model(small_config("godel:3"), 5);
  const Modes m;
  CHECK_THROWS_AS(check_axiom(model, "2.5", Binding{{parse_program("a")}, {parse_formula("p")}}, m),
                  SemanticError);
  CHECK_THROWS_AS(check_axiom(model, "2.1",
                              Binding{{parse_program("a ; b")},
                                      {parse_formula("p"), parse_formula("q")}},
                              m),
                  SemanticError);
  CHECK_THROWS_AS(check_axiom(model, "2.4", Binding{{parse_program("z")}, {}}, m), SemanticError);
  // Lattice schemes ignore the model's programs.
  CHECK(check_axiom(model, "L3.1", Binding{}, m).passed);
  CHECK_THROWS_AS(check_lattice_scheme(*model->lattice(), find_scheme("2.4")), SemanticError);
  CHECK_NOTHROW(check_axiom(model, "2.4", Binding{{parse_program("a*")}, {}}, m));
}

TEST_CASE("enumeration is indexable and bounded") {
  SearchConfig c = small_config("boolean");
  c.max_states = 1;
  // One state, programs a and b each empty or {(w0, {w0})}, p and q in {0, 1}.
  CHECK(enumeration_size(c) == 16);
  std::vector<std::shared_ptr<const CgdlModel>> all;
  for (std::uint64_t i = 0; i < 16; ++i)
    all.push_back(enumerate_model(c, i));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK_FALSE((all[i]->programs() == all[j]->programs() &&
                   all[i]->valuation() == all[j]->valuation()));
  CHECK_THROWS_AS(enumerate_model(c, 16), Error);
  c.max_models = 10;
  c.exhaustive = true;
  CHECK_THROWS_AS(search_counterexamples(c), Error);
}

TEST_CASE("lattice schemes on a lawful instance") {
  const auto l = lattice("lukasiewicz:5");
  for (const char* id : {"L3.1", "L3.2", "L3.3"})
    CHECK(check_lattice_scheme(*l, find_scheme(id)).passed);
}

}
