#pragma once

#include "cgdl/gdl.hpp"
#include "cgdl/model.hpp"

#include "json.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cgdl {

using nlohmann::json;

/// {"kind": "boolean"}, {"kind": "godel-chain", "levels": n},
/// {"kind": "lukasiewicz-chain", "levels": n}, or {"kind": "table", "size": n,
/// "join": [[...]], "seq": ..., "meet": ..., "residuum": ..., "star": [...],
/// "one": i, "labels": [...]}.
LatticePtr lattice_from_json(const json& j);
json lattice_to_json(const ActionLattice& l);

/// Strings are literals ("0", "1/2", "1", or a table label); integers are
/// chain levels / table indices; booleans are bottom and top.
Value value_from_json(const ActionLattice& l, const json& j);
/// Always the string form.
json value_to_json(const ActionLattice& l, Value v);

struct ModelFile {
  std::shared_ptr<CgdlModel> model;
  /// Present when the file has a "matrices" section.
  std::optional<GdlModel> gdl;
  std::vector<std::string> queries;
};

/// Throws FormatError for structural problems and SemanticError for
/// references to undeclared states.
ModelFile model_from_json(const json& j);
/// Throws ParseError with the byte offset for malformed JSON.
json parse_json_text(const std::string& text);
ModelFile load_model_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Round-trips through model_from_json.
json model_to_json(const CgdlModel& model);

/// Matrix semantics of a model file: the "matrices" section if present,
/// otherwise the flattened multirelations.
GdlModel gdl_model_of(const ModelFile& file);

} // namespace cgdl
