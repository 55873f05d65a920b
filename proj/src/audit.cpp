#include "cgdl/audit.hpp"

#include "cgdl/rng.hpp"

#include <algorithm>
#include <functional>

namespace cgdl {

namespace {

/// Visits every tuple of `arity` elements from `sample` in lexicographic order
/// until `law` rejects one.
class TupleChecker {
public:
  TupleChecker(const std::vector<Value>& sample, AuditReport& report)
      : sample_(sample), report_(report) {}

  void check(std::string law, std::size_t arity,
             const std::function<bool(const std::vector<Value>&)>& holds) {
    AuditEntry entry;
    entry.law = std::move(law);
    std::vector<std::size_t> odometer(arity, 0);
    std::vector<Value> tuple(arity);
    while (true) {
      for (std::size_t i = 0; i < arity; ++i)
        tuple[i] = sample_[odometer[i]];
      ++entry.checked;
      if (!holds(tuple)) {
        entry.passed = false;
        entry.witness = tuple;
        break;
      }
      std::size_t pos = arity;
      while (pos > 0 && ++odometer[pos - 1] == sample_.size())
        odometer[--pos] = 0;
      if (pos == 0)
        break;
    }
    report_.entries.push_back(std::move(entry));
  }

private:
  const std::vector<Value>& sample_;
  AuditReport& report_;
};

void order_properties(const ActionLattice& l, TupleChecker& checker, std::size_t max_list_len) {
  checker.check("join-monotone", 4, [&](const auto& t) {
    return !(l.leq(t[0], t[1]) && l.leq(t[2], t[3])) ||
           l.leq(l.join(t[0], t[2]), l.join(t[1], t[3]));
  });
  checker.check("seq-subdistributes-meet", 3, [&](const auto& t) {
    return l.leq(l.seq(t[0], l.meet(t[1], t[2])), l.meet(l.seq(t[0], t[1]), l.seq(t[0], t[2])));
  });
  for (std::size_t len = 1; len <= max_list_len; ++len) {
    checker.check("sum-of-meets-" + std::to_string(len), 2 * len, [&, len](const auto& t) {
      Value lhs = l.zero();
      Value sum_a = l.zero();
      Value sum_b = l.zero();
      for (std::size_t i = 0; i < len; ++i) {
        lhs = l.join(lhs, l.meet(t[i], t[len + i]));
        sum_a = l.join(sum_a, t[i]);
        sum_b = l.join(sum_b, t[len + i]);
      }
      return l.leq(lhs, l.meet(sum_a, sum_b));
    });
  }
}

} // namespace

bool AuditReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
}

const AuditEntry* AuditReport::find(std::string_view law) const {
  for (const auto& e : entries)
    if (e.law == law)
      return &e;
  return nullptr;
}

AuditReport audit_axioms(const ActionLattice& l, const std::vector<Value>& sample,
                         std::size_t max_list_len) {
  AuditReport report{l.name(), sample.size(), {}};
  if (sample.empty())
    return report;
  TupleChecker checker(sample, report);
  const Value zero = l.zero();
  const Value one = l.one();

  checker.check("join-associative", 3, [&](const auto& t) {
    return l.join(t[0], l.join(t[1], t[2])) == l.join(l.join(t[0], t[1]), t[2]);
  });
  checker.check("join-commutative", 2,
                [&](const auto& t) { return l.join(t[0], t[1]) == l.join(t[1], t[0]); });
  checker.check("join-unit", 1, [&](const auto& t) {
    return l.join(t[0], zero) == t[0] && l.join(zero, t[0]) == t[0];
  });
  checker.check("join-idempotent", 1, [&](const auto& t) { return l.join(t[0], t[0]) == t[0]; });
  checker.check("seq-associative", 3, [&](const auto& t) {
    return l.seq(t[0], l.seq(t[1], t[2])) == l.seq(l.seq(t[0], t[1]), t[2]);
  });
  checker.check("seq-unit", 1,
                [&](const auto& t) { return l.seq(t[0], one) == t[0] && l.seq(one, t[0]) == t[0]; });
  checker.check("seq-distributes-join", 3, [&](const auto& t) {
    return l.seq(t[0], l.join(t[1], t[2])) == l.join(l.seq(t[0], t[1]), l.seq(t[0], t[2])) &&
           l.seq(l.join(t[1], t[2]), t[0]) == l.join(l.seq(t[1], t[0]), l.seq(t[2], t[0]));
  });
  checker.check("seq-annihilates", 1, [&](const auto& t) {
    return l.seq(t[0], zero) == zero && l.seq(zero, t[0]) == zero;
  });
  checker.check("meet-is-glb", 3, [&](const auto& t) {
    const Value m = l.meet(t[0], t[1]);
    return l.leq(m, t[0]) && l.leq(m, t[1]) &&
           (!(l.leq(t[2], t[0]) && l.leq(t[2], t[1])) || l.leq(t[2], m));
  });
  checker.check("residuation", 3, [&](const auto& t) {
    return l.leq(l.seq(t[0], t[1]), t[2]) == l.leq(t[1], l.residuum(t[0], t[2]));
  });
  checker.check("star-unfold", 1, [&](const auto& t) {
    const Value s = l.star(t[0]);
    return l.leq(l.join(l.join(one, t[0]), l.seq(s, s)), s);
  });
  checker.check("star-of-residuum", 1, [&](const auto& t) {
    const Value r = l.residuum(t[0], t[0]);
    return l.star(r) == r;
  });
  // Model-free constant law; checked once, counted as a single case.
  AuditEntry ident{"one-is-top", one == l.top(), 1, {}};
  if (!ident.passed)
    ident.witness = {one, l.top()};
  report.entries.push_back(ident);

  order_properties(l, checker, max_list_len);
  return report;
}

AuditReport audit_axioms(const ActionLattice& lattice) {
  return audit_axioms(lattice, lattice.carrier());
}

AuditReport lattice_property_check(const ActionLattice& lattice, const std::vector<Value>& sample,
                                   std::size_t max_list_len) {
  AuditReport report{lattice.name(), sample.size(), {}};
  if (sample.empty())
    return report;
  TupleChecker checker(sample, report);
  order_properties(lattice, checker, max_list_len);
  return report;
}

std::vector<Value> sample_values(const ActionLattice& lattice, std::size_t count,
                                 std::uint64_t seed) {
  auto rng = substream(seed, 0);
  std::vector<Value> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.emplace_back(static_cast<std::uint8_t>(uniform_below(rng, lattice.size())));
  return out;
}

} // namespace cgdl
