#include "cgdl/model_io.hpp"

#include "cgdl/error.hpp"

#include <fstream>
#include <sstream>

namespace cgdl {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<std::uint8_t> table_row_major(const json& j, std::size_t n, const std::string& name) {
  if (!j.is_array() || j.size() != n)
    throw FormatError("lattice table \"" + name + "\" must have " + std::to_string(n) + " rows");
  std::vector<std::uint8_t> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw FormatError("lattice table \"" + name + "\" must be " + std::to_string(n) + "x" +
                        std::to_string(n));
    for (const auto& v : row) {
      if (!v.is_number_unsigned())
        throw FormatError("lattice table \"" + name + "\" entries must be indices");
      out.push_back(static_cast<std::uint8_t>(v.get<unsigned>()));
    }
  }
  return out;
}

std::size_t levels_of(const json& j) {
  const json& n = field(j, "levels", "lattice");
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() < 1 || n.get<std::uint64_t>() > 256)
    throw FormatError("lattice: \"levels\" must be an integer in 1..256");
  return n.get<std::size_t>();
}

StateId state_ref(const CgdlModel& m, const json& j, const std::string& where) {
  if (!j.is_string())
    throw FormatError(where + ": state names are strings");
  auto id = m.state_index(j.get<std::string>());
  if (!id)
    throw SemanticError(where + ": undeclared state '" + j.get<std::string>() + "'");
  return *id;
}

FuzzySet target_from_json(const CgdlModel& m, const json& j, const std::string& where) {
  const ActionLattice& l = *m.lattice();
  std::vector<FuzzySet::Entry> entries;
  if (j.is_array()) {
    for (const auto& s : j)
      entries.push_back({state_ref(m, s, where), l.top()});
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto id = m.state_index(it.key());
      if (!id)
        throw SemanticError(where + ": undeclared state '" + it.key() + "'");
      entries.push_back({*id, value_from_json(l, it.value())});
    }
  } else {
    throw FormatError(where + ": \"to\" must be an object or a list of states");
  }
  return FuzzySet(std::move(entries));
}

} // namespace

LatticePtr lattice_from_json(const json& j) {
  const json& kind_json = field(j, "kind", "lattice");
  if (!kind_json.is_string())
    throw FormatError("lattice: \"kind\" must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "boolean")
    return std::make_shared<const ActionLattice>(ActionLattice::boolean());
  if (kind == "godel-chain")
    return std::make_shared<const ActionLattice>(ActionLattice::godel_chain(levels_of(j)));
  if (kind == "lukasiewicz-chain")
    return std::make_shared<const ActionLattice>(ActionLattice::lukasiewicz_chain(levels_of(j)));
  if (kind == "table") {
    const json& size = field(j, "size", "lattice");
    if (!size.is_number_unsigned() || size.get<std::uint64_t>() < 1 ||
        size.get<std::uint64_t>() > 256)
      throw FormatError("lattice: \"size\" must be an integer in 1..256");
    LatticeTables t;
    t.size = size.get<std::size_t>();
    t.join = table_row_major(field(j, "join", "lattice"), t.size, "join");
    t.seq = table_row_major(field(j, "seq", "lattice"), t.size, "seq");
    t.meet = table_row_major(field(j, "meet", "lattice"), t.size, "meet");
    t.residuum = table_row_major(field(j, "residuum", "lattice"), t.size, "residuum");
    const json& star = field(j, "star", "lattice");
    if (!star.is_array())
      throw FormatError("lattice: \"star\" must be a list");
    for (const auto& v : star) {
      if (!v.is_number_unsigned())
        throw FormatError("lattice: \"star\" entries must be indices");
      t.star.push_back(static_cast<std::uint8_t>(v.get<unsigned>()));
    }
    const json& one = field(j, "one", "lattice");
    if (!one.is_number_unsigned())
      throw FormatError("lattice: \"one\" must be an index");
    t.one = static_cast<std::uint8_t>(one.get<unsigned>());
    if (j.contains("labels"))
      t.labels = j.at("labels").get<std::vector<std::string>>();
    std::string name = j.value("name", std::string("table"));
    return std::make_shared<const ActionLattice>(ActionLattice::from_tables(std::move(t), name));
  }
  throw FormatError("lattice: unknown kind '" + kind + "'");
}

json lattice_to_json(const ActionLattice& l) {
  switch (l.kind()) {
  case LatticeKind::boolean: return {{"kind", "boolean"}};
  case LatticeKind::godel_chain: return {{"kind", "godel-chain"}, {"levels", l.size()}};
  case LatticeKind::lukasiewicz_chain:
    return {{"kind", "lukasiewicz-chain"}, {"levels", l.size()}};
  case LatticeKind::table: break;
  }
  const auto& t = l.tables();
  auto rows = [&](const std::vector<std::uint8_t>& v) {
    json out = json::array();
    for (std::size_t a = 0; a < t.size; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < t.size; ++b)
        row.push_back(v[a * t.size + b]);
      out.push_back(row);
    }
    return out;
  };
  json j{{"kind", "table"},      {"name", l.name()},          {"size", t.size},
         {"join", rows(t.join)}, {"seq", rows(t.seq)},         {"meet", rows(t.meet)},
         {"residuum", rows(t.residuum)}, {"star", t.star}, {"one", t.one}};
  if (!t.labels.empty())
    j["labels"] = t.labels;
  return j;
}

Value value_from_json(const ActionLattice& l, const json& j) {
  if (j.is_string())
    return l.parse(j.get<std::string>());
  if (j.is_number_integer())
    return l.from_index(j.get<long long>());
  if (j.is_boolean())
    return j.get<bool>() ? l.top() : l.bottom();
  throw FormatError("lattice values are strings, integers or booleans, got " +
                    std::string(j.type_name()));
}

json value_to_json(const ActionLattice& l, Value v) { return l.format(v); }

ModelFile model_from_json(const json& j) {
  if (!j.is_object())
    throw FormatError("model: the document must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"lattice", "states", "propositions", "valuation",
                                  "programs", "matrices", "queries", "description"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
      throw FormatError("model: unknown key \"" + it.key() + "\"");
  }
  LatticePtr lattice = lattice_from_json(field(j, "lattice", "model"));
  const json& states = field(j, "states", "model");
  if (!states.is_array())
    throw FormatError("model: \"states\" must be a list of names");
  std::vector<std::string> names;
  for (const auto& s : states) {
    if (!s.is_string())
      throw FormatError("model: state names are strings");
    names.push_back(s.get<std::string>());
  }
  ModelFile file;
  file.model = std::make_shared<CgdlModel>(lattice, names);
  CgdlModel& m = *file.model;

  if (j.contains("propositions")) {
    for (const auto& p : j.at("propositions")) {
      if (!p.is_string() || !is_identifier(p.get<std::string>()))
        throw FormatError("model: proposition names are identifiers");
      m.declare_prop(p.get<std::string>());
    }
  }
  if (j.contains("valuation")) {
    const json& val = j.at("valuation");
    if (!val.is_object())
      throw FormatError("model: \"valuation\" must be an object");
    for (auto it = val.begin(); it != val.end(); ++it) {
      if (!is_identifier(it.key()))
        throw FormatError("model: bad proposition name '" + it.key() + "'");
      if (!it.value().is_object())
        throw FormatError("valuation of " + it.key() + " must map states to values");
      m.declare_prop(it.key());
      for (auto s = it.value().begin(); s != it.value().end(); ++s) {
        auto id = m.state_index(s.key());
        if (!id)
          throw SemanticError("valuation of " + it.key() + ": undeclared state '" + s.key() + "'");
        m.set_value(it.key(), *id, value_from_json(*lattice, s.value()));
      }
    }
  }
  if (j.contains("programs")) {
    const json& progs = j.at("programs");
    if (!progs.is_object())
      throw FormatError("model: \"programs\" must be an object");
    for (auto it = progs.begin(); it != progs.end(); ++it) {
      if (!is_identifier(it.key()))
        throw FormatError("model: bad program name '" + it.key() + "'");
      if (!it.value().is_array())
        throw FormatError("program " + it.key() + " must be a list of pairs");
      FuzzyMultirelation rel(lattice, m.state_count());
      const std::string where = "program " + it.key();
      for (const auto& pair : it.value()) {
        const StateId from = state_ref(m, field(pair, "from", where), where);
        rel.insert(from, target_from_json(m, field(pair, "to", where), where));
      }
      m.set_program(it.key(), std::move(rel));
    }
  }
  if (j.contains("matrices")) {
    const json& mats = j.at("matrices");
    if (!mats.is_object())
      throw FormatError("model: \"matrices\" must be an object");
    GdlModel g(lattice, names);
    for (const auto& [prop, values] : m.valuation()) {
      g.declare_prop(prop);
      for (std::size_t w = 0; w < values.size(); ++w)
        g.set_value(prop, static_cast<StateId>(w), values[w]);
    }
    for (auto it = mats.begin(); it != mats.end(); ++it) {
      if (!is_identifier(it.key()))
        throw FormatError("model: bad program name '" + it.key() + "'");
      const json& rows = it.value();
      if (!rows.is_array() || rows.size() != names.size())
        throw FormatError("matrix " + it.key() + " must have " + std::to_string(names.size()) +
                          " rows");
      std::vector<std::vector<Value>> values;
      for (const auto& row : rows) {
        if (!row.is_array())
          throw FormatError("matrix " + it.key() + " rows are lists");
        auto& r = values.emplace_back();
        for (const auto& v : row)
          r.push_back(value_from_json(*lattice, v));
      }
      try {
        g.set_matrix(it.key(), LatticeMatrix::from_rows(lattice, values));
      } catch (const DimensionError& e) {
        throw FormatError("matrix " + it.key() + ": " + e.what());
      }
    }
    file.gdl = std::move(g);
  }
  if (j.contains("queries")) {
    for (const auto& q : j.at("queries")) {
      if (!q.is_string())
        throw FormatError("model: queries are formula strings");
      file.queries.push_back(q.get<std::string>());
    }
  }
  return file;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelFile load_model_file(const std::filesystem::path& path) {
  try {
    return model_from_json(parse_json_text(read_text_file(path)));
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

json model_to_json(const CgdlModel& model) {
  const ActionLattice& l = *model.lattice();
  json j;
  j["lattice"] = lattice_to_json(l);
  j["states"] = model.states();
  json props = json::array();
  json val = json::object();
  for (const auto& [prop, values] : model.valuation()) {
    props.push_back(prop);
    json row = json::object();
    for (std::size_t w = 0; w < values.size(); ++w)
      if (values[w] != l.zero())
        row[model.states()[w]] = value_to_json(l, values[w]);
    val[prop] = row;
  }
  j["propositions"] = props;
  j["valuation"] = val;
  json progs = json::object();
  for (const auto& [name, rel] : model.programs()) {
    json pairs = json::array();
    for (const auto& p : rel.pairs()) {
      json to = json::object();
      for (const auto& e : p.target)
        to[model.states()[e.state]] = value_to_json(l, e.value);
      pairs.push_back({{"from", model.states()[p.source]}, {"to", to}});
    }
    progs[name] = pairs;
  }
  j["programs"] = progs;
  return j;
}

GdlModel gdl_model_of(const ModelFile& file) {
  if (file.gdl)
    return *file.gdl;
  return flatten(*file.model);
}

} // namespace cgdl
