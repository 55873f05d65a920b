#include "cgdl/lattice.hpp"

#include "cgdl/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace cgdl {

namespace {

using Level = std::uint8_t;

template <class F>
std::vector<Level> binary_table(std::size_t n, F f) {
  std::vector<Level> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Level>(f(a, b));
  return table;
}

LatticeTables chain_tables(std::size_t levels, bool lukasiewicz) {
  if (levels == 0 || levels > 256)
    throw LatticeError("chain length must be between 1 and 256, got " + std::to_string(levels));
  const std::size_t top = levels - 1;
  LatticeTables t;
  t.size = levels;
  t.join = binary_table(levels, [](std::size_t a, std::size_t b) { return std::max(a, b); });
  t.meet = binary_table(levels, [](std::size_t a, std::size_t b) { return std::min(a, b); });
  if (lukasiewicz) {
    t.seq = binary_table(levels, [top](std::size_t a, std::size_t b) {
      return a + b > top ? a + b - top : 0;
    });
    t.residuum = binary_table(levels, [top](std::size_t a, std::size_t b) {
      return std::min(top, top - a + b);
    });
  } else {
    t.seq = t.meet;
    t.residuum = binary_table(levels, [top](std::size_t a, std::size_t b) {
      return a <= b ? top : b;
    });
  }
  t.star.assign(levels, static_cast<Level>(top));
  t.one = static_cast<Level>(top);
  return t;
}

bool parse_integer(std::string_view text, long long& out) {
  if (text.empty())
    return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace

std::string_view to_string(Op op) {
  switch (op) {
  case Op::join: return "join";
  case Op::seq: return "seq";
  case Op::meet: return "meet";
  case Op::residuum: return "residuum";
  case Op::star: return "star";
  }
  return "?";
}

ActionLattice::ActionLattice(LatticeKind kind, std::string name, LatticeTables tables)
    : kind_(kind), name_(std::move(name)), tables_(std::move(tables)) {
  const std::size_t n = tables_.size;
  for (std::size_t x = 0; x < n; ++x) {
    bool greatest = true;
    for (std::size_t a = 0; a < n && greatest; ++a)
      greatest = tables_.join[x * n + a] == x;
    if (greatest) {
      top_ = Value{static_cast<Level>(x)};
      return;
    }
  }
  throw LatticeError("lattice '" + name_ + "' has no greatest element");
}

ActionLattice ActionLattice::boolean() {
  return ActionLattice(LatticeKind::boolean, "boolean", chain_tables(2, false));
}

ActionLattice ActionLattice::godel_chain(std::size_t levels) {
  return ActionLattice(LatticeKind::godel_chain, "godel-chain(" + std::to_string(levels) + ")",
                       chain_tables(levels, false));
}

ActionLattice ActionLattice::lukasiewicz_chain(std::size_t levels) {
  return ActionLattice(LatticeKind::lukasiewicz_chain,
                       "lukasiewicz-chain(" + std::to_string(levels) + ")",
                       chain_tables(levels, true));
}

ActionLattice ActionLattice::from_tables(LatticeTables t, std::string name) {
  const std::size_t n = t.size;
  if (n == 0 || n > 256)
    throw LatticeError("table lattice size must be between 1 and 256");
  auto check = [n](const std::vector<Level>& table, std::size_t expected, std::string_view what) {
    if (table.size() != expected)
      throw LatticeError(std::string(what) + " table has " + std::to_string(table.size()) +
                         " entries, expected " + std::to_string(expected));
    for (Level v : table)
      if (v >= n)
        throw LatticeError(std::string(what) + " table leaves the carrier (entry " +
                           std::to_string(v) + ")");
  };
  check(t.join, n * n, "join");
  check(t.seq, n * n, "seq");
  check(t.meet, n * n, "meet");
  check(t.residuum, n * n, "residuum");
  check(t.star, n, "star");
  if (t.one >= n)
    throw LatticeError("one is outside the carrier");
  for (std::size_t a = 0; a < n; ++a)
    if (t.join[a] != a || t.join[a * n] != a)
      throw LatticeError("entry 0 must be the zero of the lattice (join identity)");
  if (!t.labels.empty() && t.labels.size() != n)
    throw LatticeError("label count does not match the table size");
  return ActionLattice(LatticeKind::table, std::move(name), std::move(t));
}

std::vector<Value> ActionLattice::carrier() const {
  std::vector<Value> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i)
    out.emplace_back(static_cast<Level>(i));
  return out;
}

std::string ActionLattice::format(Value a) const {
  if (!contains(a))
    throw LatticeError("value index " + std::to_string(a.index()) + " outside " + name_);
  if (kind_ == LatticeKind::table)
    return tables_.labels.empty() ? std::to_string(a.index()) : tables_.labels[a.index()];
  const long long den = static_cast<long long>(size()) - 1;
  const long long num = a.index();
  if (num == 0 || den == 0)
    return "0";
  const long long g = std::gcd(num, den);
  if (num == den)
    return "1";
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

Value ActionLattice::parse(std::string_view literal) const {
  if (kind_ == LatticeKind::table) {
    for (std::size_t i = 0; i < tables_.labels.size(); ++i)
      if (tables_.labels[i] == literal)
        return Value{static_cast<Level>(i)};
    long long index = 0;
    if (parse_integer(literal, index))
      return from_index(index);
    throw LatticeError("unknown value '" + std::string(literal) + "' for " + name_);
  }
  long long num = 0;
  long long den = 1;
  const auto slash = literal.find('/');
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(literal, num)
                      : parse_integer(literal.substr(0, slash), num) &&
                            parse_integer(literal.substr(slash + 1), den);
  if (!ok || den <= 0 || num < 0 || num > den)
    throw LatticeError("'" + std::string(literal) + "' is not a value in [0,1] for " + name_);
  const long long steps = static_cast<long long>(size()) - 1;
  if ((num * steps) % den != 0)
    throw LatticeError("'" + std::string(literal) + "' is not on the grid of " + name_);
  return Value{static_cast<Level>(num * steps / den)};
}

Value ActionLattice::from_index(long long index) const {
  if (index < 0 || index >= static_cast<long long>(size()))
    throw LatticeError("level " + std::to_string(index) + " outside " + name_);
  return Value{static_cast<Level>(index)};
}

LatticePtr parse_lattice_flag(std::string_view text) {
  if (text == "boolean" || text == "2")
    return std::make_shared<const ActionLattice>(ActionLattice::boolean());
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto family = text.substr(0, colon);
    long long levels = 0;
    if (!parse_integer(text.substr(colon + 1), levels) || levels < 1 || levels > 256)
      throw ParseError("bad chain length in lattice '" + std::string(text) + "'", colon + 1);
    if (family == "godel" || family == "godel-chain")
      return std::make_shared<const ActionLattice>(ActionLattice::godel_chain(levels));
    if (family == "lukasiewicz" || family == "lukasiewicz-chain")
      return std::make_shared<const ActionLattice>(ActionLattice::lukasiewicz_chain(levels));
  }
  throw ParseError("unknown lattice '" + std::string(text) +
                       "' (expected boolean, godel:N or lukasiewicz:N)",
                   0);
}

Value eval_op(const ActionLattice& lattice, Op op, std::span<const Value> args) {
  const std::size_t arity = op == Op::star ? 1 : 2;
  if (args.size() != arity)
    throw LatticeError(std::string(to_string(op)) + " expects " + std::to_string(arity) +
                       " argument(s), got " + std::to_string(args.size()));
  for (Value v : args)
    if (!lattice.contains(v))
      throw LatticeError("value index " + std::to_string(v.index()) + " outside " +
                         lattice.name());
  switch (op) {
  case Op::join: return lattice.join(args[0], args[1]);
  case Op::seq: return lattice.seq(args[0], args[1]);
  case Op::meet: return lattice.meet(args[0], args[1]);
  case Op::residuum: return lattice.residuum(args[0], args[1]);
  case Op::star: return lattice.star(args[0]);
  }
  throw LatticeError("unknown operation");
}

bool same_lattice(const ActionLattice& a, const ActionLattice& b) {
  if (&a == &b)
    return true;
  const auto& x = a.tables();
  const auto& y = b.tables();
  return a.kind() == b.kind() && x.size == y.size && x.one == y.one && x.join == y.join &&
         x.seq == y.seq && x.meet == y.meet && x.residuum == y.residuum && x.star == y.star;
}

bool leq(const ActionLattice& lattice, Value a, Value b) { return lattice.leq(a, b); }

Value fold(const ActionLattice& lattice, Op op, std::span<const Value> values) {
  if (op == Op::join) {
    Value acc = lattice.zero();
    for (Value v : values)
      acc = lattice.join(acc, v);
    return acc;
  }
  if (op == Op::seq) {
    Value acc = lattice.one();
    for (Value v : values)
      acc = lattice.seq(acc, v);
    return acc;
  }
  throw LatticeError("fold is defined for join and seq only, got " + std::string(to_string(op)));
}

} // namespace cgdl
