#include "cgdl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cgdl {

namespace {

json state_values(const std::vector<std::string>& states, const ActionLattice& l,
                  const std::vector<Value>& values) {
  json out = json::array();
  for (std::size_t w = 0; w < values.size(); ++w)
    out.push_back({{"state", states[w]}, {"value", l.format(values[w])}});
  return out;
}

json entries_json(const std::vector<std::string>& states, const ActionLattice& l,
                  const std::vector<EvalEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    json j{{"formula", render(*e.formula)},
           {"values", state_values(states, l, e.values)},
           {"valid", e.valid}};
    if (!e.trace.empty()) {
      json t = json::array();
      for (const auto& [f, v] : e.trace)
        t.push_back({{"formula", render(*f)}, {"values", state_values(states, l, v)}});
      j["trace"] = t;
    }
    out.push_back(j);
  }
  return out;
}

json modes_json(Modes m) {
  return {{"seq", std::string(to_string(m.seq))}, {"diamond", std::string(to_string(m.diamond))}};
}

std::string percent(std::size_t part, std::size_t whole) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", whole ? 100.0 * static_cast<double>(part) /
                                                     static_cast<double>(whole)
                                               : 100.0);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width)
    s.append(width - s.size(), ' ');
  return s;
}

std::string str(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_values(std::ostringstream& out, const json& values, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& v : values)
    width = std::max(width, v["state"].get<std::string>().size());
  for (const auto& v : values)
    out << indent << pad(v["state"].get<std::string>(), width) << "  " << str(v["value"]) << "\n";
}

void render_eval(std::ostringstream& out, const json& r) {
  out << "lattice: " << str(r["lattice"]);
  if (r.contains("modes"))
    out << "   seq: " << str(r["modes"]["seq"]) << "   diamond: " << str(r["modes"]["diamond"]);
  else
    out << "   semantics: matrix";
  out << "\n";
  if (r.contains("converged") && !r["converged"].get<bool>())
    out << "warning: a star did not converge within its iteration bound\n";
  for (const auto& e : r["results"]) {
    out << "\n" << str(e["formula"]) << "\n";
    render_values(out, e["values"], "  ");
    out << "  valid: " << (e["valid"].get<bool>() ? "yes" : "no") << "\n";
    if (e.contains("trace")) {
      out << "  trace:\n";
      for (const auto& t : e["trace"]) {
        out << "    " << str(t["formula"]) << "\n";
        render_values(out, t["values"], "      ");
      }
    }
  }
}

void render_search(std::ostringstream& out, const json& r) {
  out << "lattice: " << str(r["lattice"]) << "   coverage: " << str(r["coverage"])
      << "   models: " << r["models"].get<std::uint64_t>()
      << "   seed: " << r["seed"].get<std::uint64_t>() << "\n";
  const json& c = r["config"];
  out << "states: " << c["min_states"].get<std::size_t>() << ".." << c["max_states"].get<std::size_t>()
      << "   programs: " << c["programs"].get<std::size_t>()
      << "   propositions: " << c["propositions"].dump()
      << "   pairs per state: " << str(c["max_pairs_per_state"])
      << "   support: " << str(c["max_support"]) << "\n";
  out << "program pool: " << c["program_pool"].dump() << "\n";
  out << "formula pool: " << c["formula_pool"].dump() << "\n\n";

  const std::size_t w1 = 9, w2 = 17, w3 = 12, w4 = 11, w5 = 10, w6 = 8;
  out << pad("axiom", w1) << pad("seq", w2) << pad("diamond", w3) << pad("checked", w4)
      << pad("failures", w5) << pad("n/a", w6) << "status\n";
  for (const auto& cell : r["cells"]) {
    out << pad(str(cell["axiom"]), w1) << pad(str(cell["seq"]), w2) << pad(str(cell["diamond"]), w3)
        << pad(std::to_string(cell["checked"].get<std::uint64_t>()), w4)
        << pad(std::to_string(cell["failures"].get<std::uint64_t>()), w5)
        << pad(std::to_string(cell["not_applicable"].get<std::uint64_t>()), w6)
        << str(cell["status"]) << (cell["claimed"].get<bool>() ? "" : " (unclaimed)") << "\n";
  }
  out << "\ncounterexamples: " << r["counterexamples"].get<std::uint64_t>() << "\n";

  bool header = false;
  for (const auto& cell : r["cells"]) {
    for (const auto& w : cell["witnesses"]) {
      if (!header) {
        out << "\nwitnesses:\n";
        header = true;
      }
      out << "  " << str(w["axiom"]) << " [" << str(w["modes"]["seq"]) << ", "
          << str(w["modes"]["diamond"]) << "]";
      if (w.contains("lattice_witness")) {
        out << " lattice tuple " << w["lattice_witness"].dump() << "\n";
        continue;
      }
      out << " model #" << w["model_index"].get<std::uint64_t>() << " state "
          << str(w["state"]) << "\n";
      out << "    " << str(w["binding"]) << "\n";
      out << "    " << str(w["instance"]) << "\n";
      out << "    lhs " << w["lhs"].dump() << "  rhs " << w["rhs"].dump() << "  value "
          << w["values"].dump() << "\n";
      out << "    model " << w["model"].dump() << "\n";
    }
  }
}

void render_audit(std::ostringstream& out, const json& r) {
  out << "lattice: " << str(r["lattice"]) << "   sample size: " << r["sample_size"].get<std::size_t>()
      << "\n\n";
  std::size_t width = 4;
  for (const auto& e : r["entries"])
    width = std::max(width, e["law"].get<std::string>().size());
  for (const auto& e : r["entries"]) {
    out << pad(str(e["law"]), width + 2) << (e["passed"].get<bool>() ? "pass" : "FAIL") << "  "
        << e["checked"].get<std::uint64_t>() << " checked";
    if (e.contains("witness"))
      out << "  witness " << e["witness"].dump();
    out << "\n";
  }
  out << "\n" << (r["all_passed"].get<bool>() ? "all laws hold" : "some laws fail") << "\n";
}

void render_compare(std::ostringstream& out, const json& r) {
  out << "states: " << r["states"].get<std::size_t>() << "   samples: " << r["samples"].get<std::size_t>()
      << "   seed: " << r["seed"].get<std::uint64_t>() << "\n\nagreement (%)\n";
  const json& names = r["compositions"];
  out << pad("", 17);
  for (const auto& n : names)
    out << pad(str(n), 17);
  out << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << pad(str(names[i]), 17);
    for (std::size_t j = 0; j < names.size(); ++j)
      out << pad(str(r["agreement"][i][j]), 17);
    out << "\n";
  }
  if (!r["witnesses"].empty())
    out << "\nwitnesses:\n";
  for (const auto& w : r["witnesses"]) {
    out << "  " << str(w["first"]) << " vs " << str(w["second"]) << " (sample "
        << w["sample"].get<std::size_t>() << ")\n";
    out << "    R = " << w["r"].dump() << "\n";
    out << "    S = " << w["s"].dump() << "\n";
    out << "    " << str(w["first"]) << ": " << w["first_result"].dump() << "\n";
    out << "    " << str(w["second"]) << ": " << w["second_result"].dump() << "\n";
  }
}

} // namespace

json eval_report(const CgdlModel& model, Modes modes, const std::vector<EvalEntry>& entries,
                 bool converged) {
  return {{"command", "eval"},
          {"lattice", model.lattice()->name()},
          {"modes", modes_json(modes)},
          {"converged", converged},
          {"results", entries_json(model.states(), *model.lattice(), entries)}};
}

json gdl_report(const GdlModel& model, const std::vector<EvalEntry>& entries) {
  return {{"command", "gdl"},
          {"lattice", model.lattice()->name()},
          {"results", entries_json(model.states(), *model.lattice(), entries)}};
}

json verdict_to_json(const Verdict& v) {
  json j{{"axiom", v.axiom}, {"modes", modes_json(v.modes)}, {"passed", v.passed}};
  if (!v.model) {
    json tuple = json::array();
    for (Value x : v.lattice_witness)
      tuple.push_back(x.index());
    j["lattice_witness"] = tuple;
    return j;
  }
  const ActionLattice& l = *v.model->lattice();
  const auto& states = v.model->states();
  const AxiomScheme& s = find_scheme(v.axiom);
  auto row = [&](const std::vector<Value>& values) {
    json out = json::object();
    for (std::size_t w = 0; w < values.size(); ++w)
      out[states[w]] = l.format(values[w]);
    return out;
  };
  j["model_index"] = v.model_index;
  j["binding"] = v.binding.describe();
  json programs = json::array();
  for (const auto& p : v.binding.programs)
    programs.push_back(render(*p));
  json formulas = json::array();
  for (const auto& f : v.binding.formulas)
    formulas.push_back(render(*f));
  j["programs"] = programs;
  j["formulas"] = formulas;
  j["instance"] = render(*s.instance(v.binding));
  j["state"] = v.witness ? json(states[*v.witness]) : json(nullptr);
  j["values"] = row(v.values);
  j["lhs"] = row(v.lhs);
  j["rhs"] = row(v.rhs);
  j["model"] = model_to_json(*v.model);
  return j;
}

json search_report(const SearchReport& r, const std::string& command) {
  const SearchConfig& c = r.config;
  json seq_modes = json::array();
  for (SeqMode m : c.seq_modes)
    seq_modes.push_back(std::string(to_string(m)));
  json diamond_modes = json::array();
  for (DiamondMode m : c.diamond_modes)
    diamond_modes.push_back(std::string(to_string(m)));
  json grid = json::array();
  for (Value v : c.value_grid)
    grid.push_back(c.lattice->format(v));
  json config{{"min_states", c.min_states},
              {"max_states", c.max_states},
              {"programs", c.programs},
              {"propositions", c.props},
              {"max_support", c.max_support ? json(c.max_support) : json("unbounded")},
              {"max_pairs_per_state",
               c.max_pairs_per_state ? json(c.max_pairs_per_state) : json("unbounded")},
              {"value_grid", grid},
              {"seq_modes", seq_modes},
              {"diamond_modes", diamond_modes},
              {"axioms", c.axioms},
              {"program_pool", c.program_pool},
              {"formula_pool", c.formula_pool},
              {"exhaustive", c.exhaustive},
              {"samples", c.samples},
              {"max_witnesses", c.max_witnesses}};
  json cells = json::array();
  for (const auto& cell : r.cells) {
    const bool lattice_scheme = find_scheme(cell.axiom).kind == SchemeKind::lattice;
    json witnesses = json::array();
    for (const auto& v : cell.witnesses)
      witnesses.push_back(verdict_to_json(v));
    const char* status = cell.failures ? "fail" : cell.checked ? "pass" : "vacuous";
    cells.push_back({{"axiom", cell.axiom},
                     {"seq", lattice_scheme ? "-" : std::string(to_string(cell.modes.seq))},
                     {"diamond", lattice_scheme ? "-" : std::string(to_string(cell.modes.diamond))},
                     {"checked", cell.checked},
                     {"failures", cell.failures},
                     {"not_applicable", cell.not_applicable},
                     {"claimed", cell.claimed},
                     {"status", status},
                     {"witnesses", witnesses}});
  }
  return {{"command", command},
          {"lattice", c.lattice->name()},
          {"coverage", r.coverage},
          {"models", r.models},
          {"seed", c.seed},
          {"config", config},
          {"cells", cells},
          {"counterexamples", r.counterexamples()}};
}

json audit_report(const AuditReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j{{"law", e.law}, {"passed", e.passed}, {"checked", e.checked}};
    if (!e.passed) {
      json w = json::array();
      for (Value v : e.witness)
        w.push_back(v.index());
      j["witness"] = w;
    }
    entries.push_back(j);
  }
  return {{"command", "audit"},
          {"lattice", r.lattice},
          {"sample_size", r.sample_size},
          {"entries", entries},
          {"all_passed", r.all_passed()}};
}

json binary_to_json(const BinaryMultirelation& b) {
  json out = json::array();
  for (const auto& p : b.pairs) {
    json to = json::array();
    for (std::size_t s = 0; s < b.states; ++s)
      if (p.targets >> s & 1u)
        to.push_back("w" + std::to_string(s));
    out.push_back({{"from", "w" + std::to_string(p.source)}, {"to", to}});
  }
  return out;
}

json compare_report(const ComparisonReport& r) {
  json names = json::array();
  for (Composition c : kCompositions)
    names.push_back(std::string(to_string(c)));
  json agreement = json::array();
  json counts = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    json crow = json::array();
    for (std::size_t j = 0; j < 4; ++j) {
      row.push_back(percent(r.agree[i][j], r.samples));
      crow.push_back(r.agree[i][j]);
    }
    agreement.push_back(row);
    counts.push_back(crow);
  }
  json witnesses = json::array();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (const auto& w = r.witness[i][j])
        witnesses.push_back({{"first", std::string(to_string(kCompositions[i]))},
                             {"second", std::string(to_string(kCompositions[j]))},
                             {"sample", w->sample},
                             {"r", binary_to_json(w->r)},
                             {"s", binary_to_json(w->s)},
                             {"first_result", binary_to_json(w->first)},
                             {"second_result", binary_to_json(w->second)}});
  return {{"command", "compare"},   {"states", r.states},     {"samples", r.samples},
          {"seed", r.seed},         {"compositions", names}, {"agreement", agreement},
          {"agree_counts", counts}, {"witnesses", witnesses}};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  if (command == "eval" || command == "gdl")
    render_eval(out, report);
  else if (command == "axioms" || command == "search")
    render_search(out, report);
  else if (command == "audit")
    render_audit(out, report);
  else if (command == "compare")
    render_compare(out, report);
  else
    out << report.dump(2) << "\n";
  return out.str();
}

} // namespace cgdl
