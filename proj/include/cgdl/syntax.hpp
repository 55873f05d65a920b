#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgdl {

struct Program;
struct Formula;
using ProgramPtr = std::shared_ptr<const Program>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Program {
  enum class Kind { atomic, seq, par, choice, star };
  Kind kind;
  std::string name; // atomic only
  ProgramPtr left;  // star: the operand
  ProgramPtr right;

  friend bool operator==(const Program& a, const Program& b);
};

struct Formula {
  enum class Kind { top, bot, prop, disj, conj, implies, iff, diamond, box };
  Kind kind;
  std::string name; // prop only
  FormulaPtr left;  // modalities: the operand
  FormulaPtr right;
  ProgramPtr program; // modalities only

  friend bool operator==(const Formula& a, const Formula& b);
};

namespace ast {
ProgramPtr atomic(std::string name);
ProgramPtr seq(ProgramPtr a, ProgramPtr b);
ProgramPtr par(ProgramPtr a, ProgramPtr b);
ProgramPtr choice(ProgramPtr a, ProgramPtr b);
ProgramPtr star(ProgramPtr a);

FormulaPtr top();
FormulaPtr bot();
FormulaPtr prop(std::string name);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr diamond(ProgramPtr p, FormulaPtr a);
FormulaPtr box(ProgramPtr p, FormulaPtr a);
} // namespace ast

/// Deep structural equality on possibly null pointers.
bool same(const ProgramPtr& a, const ProgramPtr& b);
bool same(const FormulaPtr& a, const FormulaPtr& b);

/// Programs:  choice > par > seq > postfix star, all binary operators left
/// associative; `;` seq, `&` parallel, `+` choice.
/// Formulas:  `<->` (lowest, left) > `->` (right) > `|` > `&` > modalities
/// `<p>f`, `[p]f` > atoms `true`, `false`, identifiers, parentheses.
/// The Unicode forms ⊤ ⊥ ∧ ∨ → ↔ ∩ ∪ ⟨ ⟩ are read as their ASCII tokens.
ProgramPtr parse_program(std::string_view text);
FormulaPtr parse_formula(std::string_view text);

/// Minimal parentheses, ASCII only; parse(render(x)) is structurally x.
std::string render(const Program& p);
std::string render(const Formula& f);
inline std::string render(const ProgramPtr& p) { return render(*p); }
inline std::string render(const FormulaPtr& f) { return render(*f); }

bool is_identifier(std::string_view name);

void collect_atomics(const Program& p, std::vector<std::string>& out);
void collect_atomics(const Formula& f, std::vector<std::string>& out);
void collect_props(const Formula& f, std::vector<std::string>& out);
bool contains_par(const Program& p);
bool contains_par(const Formula& f);

/// Hash-consing: structurally equal trees map to one shared node, so caches
/// keyed by node address are shared between formulas.
class Interner {
public:
  ProgramPtr intern(const ProgramPtr& p);
  FormulaPtr intern(const FormulaPtr& f);

  /// Dense id of a node returned by intern(); ids start at 0.
  std::uint32_t id(const void* canonical) const { return canonical_.at(canonical); }
  std::size_t size() const { return canonical_.size(); }

private:
  struct Key {
    int kind;
    std::string name;
    const void* left;
    const void* right;
    const void* program;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  std::unordered_map<Key, ProgramPtr, KeyHash> programs_;
  std::unordered_map<Key, FormulaPtr, KeyHash> formulas_;
  // Nodes already returned by intern(), with their ids; re-interning one of
  // them is a single lookup.
  std::unordered_map<const void*, std::uint32_t> canonical_;
};

} // namespace cgdl
