// cgdl: command-line front end.
//
// Exit codes: 0 success, 1 counterexample found, 2 malformed input or bad
// flags, 3 semantic error, 4 a star did not converge.

#include "cgdl/audit.hpp"
#include "cgdl/axioms.hpp"
#include "cgdl/compare.hpp"
#include "cgdl/error.hpp"
#include "cgdl/gdl.hpp"
#include "cgdl/model_io.hpp"
#include "cgdl/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace cgdl;

namespace {

enum Exit { ok = 0, counterexample = 1, bad_input = 2, semantic = 3, diverged = 4 };

struct Output {
  std::string format = "text";

  void add(CLI::App* app) {
    app->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  }

  void print(const json& report) const {
    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << render_text(report);
  }
};

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0)
    return value;
  if (const char* env = std::getenv("CGDL_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t seed = std::stoull(env, &used);
      if (used == std::string_view(env).size())
        return seed;
    } catch (const std::exception&) {
    }
    throw ParseError("CGDL_SEED is not an unsigned integer: '" + std::string(env) + "'", 0);
  }
  return 0;
}

Modes parse_modes(const std::string& seq, const std::string& diamond) {
  return {parse_seq_mode(seq), parse_diamond_mode(diamond)};
}

// eval / gdl

struct EvalArgs {
  std::string model;
  std::vector<std::string> formulas;
  std::string seq = "support-guarded";
  std::string diamond = "definition";
  bool trace = false;
  std::size_t star_iterations = 0;
  Output out;
};

std::vector<FormulaPtr> queries(const EvalArgs& a, const ModelFile& file) {
  std::vector<FormulaPtr> out;
  const auto& texts = a.formulas.empty() ? file.queries : a.formulas;
  if (texts.empty())
    throw FormatError("no formula given and the model file has no queries");
  for (const auto& t : texts)
    out.push_back(parse_formula(t));
  return out;
}

int run_eval(const EvalArgs& a) {
  const Modes modes = parse_modes(a.seq, a.diamond);
  const ModelFile file = load_model_file(a.model);
  const auto formulas = queries(a, file);
  for (const auto& f : formulas)
    check_signature(*file.model, *f);
  Evaluator ev(*file.model, modes, a.star_iterations);
  std::vector<EvalEntry> entries;
  const Value top = file.model->lattice()->top();
  for (const auto& f : formulas) {
    const auto values = ev.values(f);
    EvalEntry e{f, {values.begin(), values.end()}, false, {}};
    e.valid = std::all_of(e.values.begin(), e.values.end(), [&](Value v) { return v == top; });
    if (a.trace)
      e.trace = ev.trace(f);
    entries.push_back(std::move(e));
  }
  a.out.print(eval_report(*file.model, modes, entries, ev.converged()));
  if (!ev.converged()) {
    std::cerr << "cgdl: a star did not converge within its iteration bound\n";
    return diverged;
  }
  return ok;
}

int run_gdl(const EvalArgs& a) {
  const ModelFile file = load_model_file(a.model);
  const GdlModel model = gdl_model_of(file);
  const auto formulas = queries(a, file);
  std::vector<EvalEntry> entries;
  const Value top = model.lattice()->top();
  for (const auto& f : formulas) {
    std::vector<std::string> names;
    collect_atomics(*f, names);
    for (const auto& n : names)
      if (!model.matrix(n))
        throw SemanticError("undeclared program '" + n + "'");
    names.clear();
    collect_props(*f, names);
    for (const auto& n : names)
      model.prop_values(n);
    EvalEntry e{f, gdl_values(model, f), false, {}};
    e.valid = std::all_of(e.values.begin(), e.values.end(), [&](Value v) { return v == top; });
    entries.push_back(std::move(e));
  }
  a.out.print(gdl_report(model, entries));
  return ok;
}

// axioms / search

struct SearchArgs {
  std::string config_file;
  std::string lattice = "boolean";
  std::size_t min_states = 1;
  std::size_t max_states = 2;
  std::size_t programs = 2;
  std::vector<std::string> props{"p", "q"};
  std::size_t max_support = 0;
  std::size_t max_pairs = 0;
  std::vector<std::string> grid;
  std::vector<std::string> seq_modes;
  std::vector<std::string> diamond_modes;
  std::vector<std::string> axioms;
  std::vector<std::string> program_pool;
  std::vector<std::string> formula_pool;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t max_witnesses = 3;
  std::uint64_t max_models = 50'000'000;
  Output out;

  std::map<std::string, CLI::Option*> flags;
  CLI::Option* seed_flag = nullptr;
};

void add_search_flags(CLI::App* app, SearchArgs& a) {
  auto& f = a.flags;
  f["config"] = app->add_option("--config", a.config_file, "JSON search configuration")
                    ->check(CLI::ExistingFile);
  f["lattice"] = app->add_option("--lattice", a.lattice, "boolean, godel:N or lukasiewicz:N")
                     ->capture_default_str();
  f["min_states"] = app->add_option("--min-states", a.min_states)->capture_default_str();
  f["max_states"] = app->add_option("--max-states", a.max_states)->capture_default_str();
  f["programs"] = app->add_option("--programs", a.programs, "Atomic programs a, b, ...")
                      ->capture_default_str();
  f["propositions"] = app->add_option("--props", a.props, "Proposition names")
                          ->delimiter(',')
                          ->capture_default_str();
  f["max_support"] =
      app->add_option("--max-support", a.max_support, "Largest target support (0: |W|)")
          ->capture_default_str();
  f["max_pairs_per_state"] =
      app->add_option("--max-pairs", a.max_pairs, "Pairs per source state (0: unbounded)")
          ->capture_default_str();
  f["value_grid"] = app->add_option("--grid", a.grid, "Lattice values used in models")
                        ->delimiter(',');
  f["seq_modes"] = app->add_option("--seq-mode", a.seq_modes,
                                   "literal or support-guarded (repeatable; default both)");
  f["diamond_modes"] = app->add_option("--diamond-mode", a.diamond_modes,
                                       "definition or proof-form (repeatable; default both)");
  f["axioms"] = app->add_option("--axiom", a.axioms, "Scheme id (repeatable; default all)");
  f["program_pool"] = app->add_option("--program", a.program_pool, "Program instantiation");
  f["formula_pool"] = app->add_option("--formula", a.formula_pool, "Formula instantiation");
  f["exhaustive"] = app->add_flag("--exhaustive", a.exhaustive, "Enumerate every model");
  f["samples"] = app->add_option("--samples", a.samples, "Random models when not exhaustive")
                     ->capture_default_str();
  a.seed_flag = app->add_option("--seed", a.seed, "Sampling seed (default: $CGDL_SEED or 0)");
  f["jobs"] = app->add_option("--jobs", a.jobs, "Worker threads")->capture_default_str();
  f["max_witnesses"] = app->add_option("--max-witnesses", a.max_witnesses,
                                       "Failing verdicts kept per table cell")
                           ->capture_default_str();
  f["max_models"] = app->add_option("--max-models", a.max_models,
                                    "Refuse exhaustive runs above this size")
                        ->capture_default_str();
  a.out.add(app);
}

bool given(const SearchArgs& a, const std::string& key) {
  auto it = a.flags.find(key);
  return it != a.flags.end() && it->second->count() > 0;
}

template <class T>
void take(const json& cfg, const SearchArgs& a, const char* key, T& target) {
  if (cfg.contains(key) && !given(a, key)) {
    try {
      target = cfg.at(key).get<T>();
    } catch (const json::exception& e) {
      throw FormatError(std::string("config key \"") + key + "\": " + e.what());
    }
  }
}

SearchConfig build_config(SearchArgs a) {
  std::optional<json> lattice_json;
  if (!a.config_file.empty()) {
    const json cfg = parse_json_text(read_text_file(a.config_file));
    if (!cfg.is_object())
      throw FormatError("search config must be a JSON object");
    static const char* known[] = {
        "lattice", "min_states", "max_states", "programs", "propositions", "max_support",
        "max_pairs_per_state", "value_grid", "seq_modes", "diamond_modes", "axioms",
        "program_pool", "formula_pool", "exhaustive", "samples", "seed", "jobs",
        "max_witnesses", "max_models"};
    for (auto it = cfg.begin(); it != cfg.end(); ++it)
      if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
        throw FormatError("search config: unknown key \"" + it.key() + "\"");
    if (cfg.contains("lattice") && !given(a, "lattice")) {
      if (cfg["lattice"].is_string())
        a.lattice = cfg["lattice"].get<std::string>();
      else
        lattice_json = cfg["lattice"];
    }
    take(cfg, a, "min_states", a.min_states);
    take(cfg, a, "max_states", a.max_states);
    take(cfg, a, "programs", a.programs);
    take(cfg, a, "propositions", a.props);
    take(cfg, a, "max_support", a.max_support);
    take(cfg, a, "max_pairs_per_state", a.max_pairs);
    if (cfg.contains("value_grid") && !given(a, "value_grid")) {
      a.grid.clear();
      for (const auto& v : cfg["value_grid"])
        a.grid.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    take(cfg, a, "seq_modes", a.seq_modes);
    take(cfg, a, "diamond_modes", a.diamond_modes);
    take(cfg, a, "axioms", a.axioms);
    take(cfg, a, "program_pool", a.program_pool);
    take(cfg, a, "formula_pool", a.formula_pool);
    take(cfg, a, "exhaustive", a.exhaustive);
    take(cfg, a, "samples", a.samples);
    take(cfg, a, "jobs", a.jobs);
    take(cfg, a, "max_witnesses", a.max_witnesses);
    take(cfg, a, "max_models", a.max_models);
    if (cfg.contains("seed") && a.seed_flag->count() == 0) {
      a.seed = cfg["seed"].get<std::uint64_t>();
      a.seed_flag = nullptr;
    }
  }

  SearchConfig c;
  c.lattice = lattice_json ? lattice_from_json(*lattice_json) : parse_lattice_flag(a.lattice);
  c.min_states = a.min_states;
  c.max_states = a.max_states;
  c.programs = a.programs;
  c.props = a.props;
  for (const auto& p : c.props)
    if (!is_identifier(p))
      throw ParseError("bad proposition name '" + p + "'", 0);
  c.max_support = a.max_support;
  c.max_pairs_per_state = a.max_pairs;
  for (const auto& v : a.grid)
    c.value_grid.push_back(c.lattice->parse(v));
  if (!a.seq_modes.empty()) {
    c.seq_modes.clear();
    for (const auto& m : a.seq_modes)
      c.seq_modes.push_back(parse_seq_mode(m));
  }
  if (!a.diamond_modes.empty()) {
    c.diamond_modes.clear();
    for (const auto& m : a.diamond_modes)
      c.diamond_modes.push_back(parse_diamond_mode(m));
  }
  for (const auto& id : a.axioms)
    find_scheme(id);
  c.axioms = a.axioms;
  c.program_pool = a.program_pool;
  c.formula_pool = a.formula_pool;
  c.exhaustive = a.exhaustive;
  c.samples = a.samples;
  if (!c.exhaustive && c.samples == 0)
    throw ParseError("--samples must be positive", 0);
  c.seed = a.seed_flag ? resolve_seed(a.seed_flag, a.seed) : a.seed;
  c.jobs = std::max(1u, a.jobs);
  c.max_witnesses = a.max_witnesses;
  c.max_models = a.max_models;
  return c;
}

int run_search(const SearchArgs& a, const std::string& command) {
  const SearchConfig config = build_config(a);
  const SearchReport report = search_counterexamples(config);
  a.out.print(search_report(report, command));
  return report.counterexamples() ? counterexample : ok;
}

// audit / compare

struct AuditArgs {
  std::string lattice = "boolean";
  std::size_t sample = 0;
  std::size_t max_list_len = 3;
  std::uint64_t seed = 0;
  CLI::Option* seed_flag = nullptr;
  Output out;
};

int run_audit(const AuditArgs& a) {
  const LatticePtr l = parse_lattice_flag(a.lattice);
  const std::vector<Value> sample = a.sample ? sample_values(*l, a.sample, resolve_seed(a.seed_flag, a.seed))
                                             : l->carrier();
  const AuditReport report = audit_axioms(*l, sample, a.max_list_len);
  a.out.print(audit_report(report));
  return report.all_passed() ? ok : counterexample;
}

struct CompareArgs {
  std::size_t states = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  CLI::Option* seed_flag = nullptr;
  Output out;
};

int run_compare(const CompareArgs& a) {
  if (a.samples == 0)
    throw ParseError("--samples must be positive", 0);
  const auto report = compare_seq(a.states, a.samples, resolve_seed(a.seed_flag, a.seed),
                                  std::max(1u, a.jobs));
  a.out.print(compare_report(report));
  return ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker and axiom search for multi-valued concurrent dynamic logic"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Graded satisfaction of formulas on a model file");
  eval->add_option("model", eval_args.model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  eval->add_option("formula", eval_args.formulas, "Formulas (default: the file's queries)");
  eval->add_option("--seq-mode", eval_args.seq, "literal or support-guarded")->capture_default_str();
  eval->add_option("--diamond-mode", eval_args.diamond, "definition or proof-form")
      ->capture_default_str();
  eval->add_flag("--trace", eval_args.trace, "Print every sub-formula's values");
  eval->add_option("--star-iterations", eval_args.star_iterations,
                   "Star iteration bound (0: |W|^2 + 2)")
      ->capture_default_str();
  eval_args.out.add(eval);

  EvalArgs gdl_args;
  auto* gdl = app.add_subcommand("gdl", "Matrix semantics of formulas without parallel composition");
  gdl->add_option("model", gdl_args.model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  gdl->add_option("formula", gdl_args.formulas, "Formulas (default: the file's queries)");
  gdl_args.out.add(gdl);

  SearchArgs axioms_args;
  auto* axioms = app.add_subcommand("axioms", "Check the axiom schemes on enumerated or sampled models");
  add_search_flags(axioms, axioms_args);

  SearchArgs search_args;
  search_args.max_witnesses = 10;
  auto* search = app.add_subcommand("search", "Counterexample search with full witnesses");
  add_search_flags(search, search_args);

  AuditArgs audit_args;
  auto* audit = app.add_subcommand("audit", "Check the lattice laws");
  audit->add_option("--lattice", audit_args.lattice, "boolean, godel:N or lukasiewicz:N")
      ->capture_default_str();
  audit->add_option("--sample", audit_args.sample, "Random sample size (0: whole carrier)")
      ->capture_default_str();
  audit->add_option("--max-list-len", audit_args.max_list_len, "Longest list for iterated sums")
      ->capture_default_str();
  audit_args.seed_flag = audit->add_option("--seed", audit_args.seed, "Sampling seed");
  audit_args.out.add(audit);

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "Compare sequential compositions on random multirelations");
  compare->add_option("--states", compare_args.states)->capture_default_str()->check(CLI::Range(1, 16));
  compare->add_option("--samples", compare_args.samples)->capture_default_str();
  compare_args.seed_flag = compare->add_option("--seed", compare_args.seed, "Sampling seed");
  compare->add_option("--jobs", compare_args.jobs)->capture_default_str();
  compare_args.out.add(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (eval->parsed())
      return run_eval(eval_args);
    if (gdl->parsed())
      return run_gdl(gdl_args);
    if (axioms->parsed())
      return run_search(axioms_args, "axioms");
    if (search->parsed())
      return run_search(search_args, "search");
    if (audit->parsed())
      return run_audit(audit_args);
    if (compare->parsed())
      return run_compare(compare_args);
  } catch (const ParseError& e) {
    std::cerr << "cgdl: parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const FormatError& e) {
    std::cerr << "cgdl: " << e.what() << "\n";
    return bad_input;
  } catch (const LatticeError& e) {
    std::cerr << "cgdl: " << e.what() << "\n";
    return bad_input;
  } catch (const SemanticError& e) {
    std::cerr << "cgdl: " << e.what() << "\n";
    return semantic;
  } catch (const DimensionError& e) {
    std::cerr << "cgdl: " << e.what() << "\n";
    return semantic;
  } catch (const std::exception& e) {
    std::cerr << "cgdl: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}
