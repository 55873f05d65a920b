#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cgdl {

/// An element of a finite lattice carrier, identified by its index.
///
/// Index 0 is always the zero (and bottom) of the lattice. For chains the
/// index is the level, so index order coincides with the lattice order.
class Value {
public:
  constexpr Value() = default;
  constexpr explicit Value(std::uint8_t index) : index_(index) {}

  constexpr std::uint8_t index() const { return index_; }

  friend constexpr auto operator<=>(Value, Value) = default;

private:
  std::uint8_t index_ = 0;
};

enum class LatticeKind { boolean, godel_chain, lukasiewicz_chain, table };

enum class Op { join, seq, meet, residuum, star };

std::string_view to_string(Op op);

/// Operation tables for a finite action lattice. Binary tables are row-major
/// `size * size`, indexed `[a * size + b]`.
struct LatticeTables {
  std::size_t size = 0;
  std::vector<std::uint8_t> join;
  std::vector<std::uint8_t> seq;
  std::vector<std::uint8_t> meet;
  std::vector<std::uint8_t> residuum;
  std::vector<std::uint8_t> star;
  std::uint8_t one = 0;
  std::vector<std::string> labels;
};

/// A finite action lattice (A, +, ;, 0, 1, *, ->, .) with the order induced by +.
///
/// Instances are immutable; every operation is a table lookup, so values
/// produced by the operations are carrier elements by construction.
class ActionLattice {
public:
  static ActionLattice boolean();
  /// Goedel chain {0, 1/(n-1), ..., 1}: join = max, seq = meet = min.
  static ActionLattice godel_chain(std::size_t levels);
  /// Lukasiewicz chain on the same grid: seq(a, b) = max(0, a + b - 1).
  static ActionLattice lukasiewicz_chain(std::size_t levels);
  /// Explicit finite tables. Entry 0 must be the join identity (zero); the
  /// tables are checked for closure and for the existence of a top element.
  /// Lattice axioms are not checked here; see `audit_axioms`.
  static ActionLattice from_tables(LatticeTables tables, std::string name = "table");

  LatticeKind kind() const { return kind_; }
  std::size_t size() const { return tables_.size; }
  const std::string& name() const { return name_; }
  const LatticeTables& tables() const { return tables_; }

  /// True for the Boolean, Goedel and Lukasiewicz instances.
  bool is_chain() const { return kind_ != LatticeKind::table; }

  Value zero() const { return Value{0}; }
  Value bottom() const { return Value{0}; }
  Value one() const { return Value{tables_.one}; }
  Value top() const { return top_; }

  Value join(Value a, Value b) const { return Value{tables_.join[at(a, b)]}; }
  Value seq(Value a, Value b) const { return Value{tables_.seq[at(a, b)]}; }
  Value meet(Value a, Value b) const { return Value{tables_.meet[at(a, b)]}; }
  Value residuum(Value a, Value b) const { return Value{tables_.residuum[at(a, b)]}; }
  Value star(Value a) const { return Value{tables_.star[a.index()]}; }

  bool leq(Value a, Value b) const { return join(a, b) == b; }
  bool contains(Value a) const { return a.index() < tables_.size; }

  std::vector<Value> carrier() const;

  /// Chains print as reduced fractions ("0", "1/2", "1"); tables print labels.
  std::string format(Value a) const;
  /// Inverse of `format`. Chains accept any fraction equal to a grid point.
  Value parse(std::string_view literal) const;
  /// Chain level / table index, range-checked.
  Value from_index(long long index) const;

private:
  ActionLattice(LatticeKind kind, std::string name, LatticeTables tables);

  std::size_t at(Value a, Value b) const {
    return static_cast<std::size_t>(a.index()) * tables_.size + b.index();
  }

  LatticeKind kind_;
  std::string name_;
  LatticeTables tables_;
  Value top_;
};

using LatticePtr = std::shared_ptr<const ActionLattice>;

/// Structural identity: same kind and identical operation tables.
bool same_lattice(const ActionLattice& a, const ActionLattice& b);

/// Parses the CLI lattice notation: `boolean`, `godel:N`, `lukasiewicz:N`.
LatticePtr parse_lattice_flag(std::string_view text);

/// Applies `op` to `args`; star is unary, the others binary.
Value eval_op(const ActionLattice& lattice, Op op, std::span<const Value> args);

bool leq(const ActionLattice& lattice, Value a, Value b);

/// Left fold of join (unit 0) or seq (unit 1); the units are returned for
/// an empty list.
Value fold(const ActionLattice& lattice, Op op, std::span<const Value> values);

} // namespace cgdl
