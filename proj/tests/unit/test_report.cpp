#include "doctest.h"
#include "helpers.hpp"

#include "cgdl/report.hpp"

#include <algorithm>
#include <string>

using namespace cgdl;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("eval report: text shows every value in the JSON") {
  const ModelFile f = load_model_file(std::string(CGDL_SOURCE_DIR) + "/models/concurrent.json");
  const Modes modes;
  Evaluator ev(*f.model, modes);
  std::vector<EvalEntry> entries;
  for (const auto& q : f.queries) {
    EvalEntry e;
    e.formula = parse_formula(q);
    const auto values = ev.values(e.formula);
    e.values.assign(values.begin(), values.end());
    e.valid = std::all_of(e.values.begin(), e.values.end(),
                          [&](Value x) { return x == f.model->lattice()->top(); });
    entries.push_back(e);
  }
  const json j = eval_report(*f.model, modes, entries, ev.converged());
  const std::string text = render_text(j);
  CHECK(j["results"].size() == f.queries.size());
  CHECK(contains(text, "godel-chain(3)"));
  CHECK(contains(text, "support-guarded"));
  for (const auto& r : j["results"]) {
    CHECK(contains(text, r["formula"].get<std::string>()));
    for (const auto& v : r["values"])
      CHECK(contains(text, v["state"].get<std::string>() + "  " + v["value"].get<std::string>()));
  }
  CHECK_FALSE(contains(text, "did not converge"));
  CHECK(contains(render_text(eval_report(*f.model, modes, entries, false)), "did not converge"));
}

TEST_CASE("search report: cells and witnesses in both forms") {
  SearchConfig c;
  c.lattice = testing::lattice("godel:3");
  c.max_states = 2;
  c.max_pairs_per_state = 1;
  c.axioms = {"2.5", "2.4", "L3.1"};
  c.samples = 200;
  c.seed = 7;
  c.max_witnesses = 1;
  const SearchReport r = search_counterexamples(c);
  const json j = search_report(r, "search");
  const std::string text = render_text(j);
  CHECK(j["coverage"] == "sampled");
  CHECK(j["counterexamples"] == r.counterexamples());
  CHECK(contains(text, "counterexamples: " + std::to_string(r.counterexamples())));
  CHECK(j["cells"].size() == r.cells.size());
  for (const auto& cell : j["cells"]) {
    CHECK(contains(text, cell["axiom"].get<std::string>()));
    for (const auto& w : cell["witnesses"]) {
      CHECK(contains(text, "model #" + std::to_string(w["model_index"].get<std::uint64_t>())));
      CHECK(contains(text, w["instance"].get<std::string>()));
      CHECK(w["model"].is_object());
    }
  }
}

TEST_CASE("audit and compare reports") {
  const auto l = testing::lattice("godel:5");
  const json a = audit_report(audit_axioms(*l));
  const std::string at = render_text(a);
  CHECK(a["all_passed"] == true);
  for (const auto& e : a["entries"])
    CHECK(contains(at, e["law"].get<std::string>()));
  CHECK(contains(at, "all laws hold"));

  const json c = compare_report(compare_seq(3, 200, 5));
  const std::string ct = render_text(c);
  for (const auto& row : c["agreement"])
    for (const auto& cellv : row)
      CHECK(contains(ct, cellv.get<std::string>()));
  for (const auto& w : c["witnesses"])
    CHECK(contains(ct, w["r"].dump()));
}

}
