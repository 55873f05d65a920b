#include "cgdl/syntax.hpp"

#include <algorithm>
#include <functional>

namespace cgdl {

namespace ast {

namespace {
ProgramPtr make(Program::Kind kind, std::string name, ProgramPtr l, ProgramPtr r) {
  return std::make_shared<const Program>(Program{kind, std::move(name), std::move(l), std::move(r)});
}
FormulaPtr make(Formula::Kind kind, std::string name, FormulaPtr l, FormulaPtr r,
                ProgramPtr p = nullptr) {
  return std::make_shared<const Formula>(
      Formula{kind, std::move(name), std::move(l), std::move(r), std::move(p)});
}
} // namespace

ProgramPtr atomic(std::string name) { return make(Program::Kind::atomic, std::move(name), {}, {}); }
ProgramPtr seq(ProgramPtr a, ProgramPtr b) { return make(Program::Kind::seq, {}, a, b); }
ProgramPtr par(ProgramPtr a, ProgramPtr b) { return make(Program::Kind::par, {}, a, b); }
ProgramPtr choice(ProgramPtr a, ProgramPtr b) { return make(Program::Kind::choice, {}, a, b); }
ProgramPtr star(ProgramPtr a) { return make(Program::Kind::star, {}, a, {}); }

FormulaPtr top() { return make(Formula::Kind::top, {}, {}, {}); }
FormulaPtr bot() { return make(Formula::Kind::bot, {}, {}, {}); }
FormulaPtr prop(std::string name) { return make(Formula::Kind::prop, std::move(name), {}, {}); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::disj, {}, a, b); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::conj, {}, a, b); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::implies, {}, a, b); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return make(Formula::Kind::iff, {}, a, b); }
FormulaPtr diamond(ProgramPtr p, FormulaPtr a) {
  return make(Formula::Kind::diamond, {}, a, {}, p);
}
FormulaPtr box(ProgramPtr p, FormulaPtr a) { return make(Formula::Kind::box, {}, a, {}, p); }

} // namespace ast

bool operator==(const Program& a, const Program& b) {
  return a.kind == b.kind && a.name == b.name && same(a.left, b.left) && same(a.right, b.right);
}

bool operator==(const Formula& a, const Formula& b) {
  return a.kind == b.kind && a.name == b.name && same(a.left, b.left) &&
         same(a.right, b.right) && same(a.program, b.program);
}

bool same(const ProgramPtr& a, const ProgramPtr& b) {
  if (a == b)
    return true;
  return a && b && *a == *b;
}

bool same(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b)
    return true;
  return a && b && *a == *b;
}

bool is_identifier(std::string_view name) {
  auto head = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '\''; };
  if (name.empty() || !head(name[0]) || name == "true" || name == "false")
    return false;
  return std::all_of(name.begin() + 1, name.end(), tail);
}

namespace {
void add_unique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end())
    out.push_back(name);
}
} // namespace

void collect_atomics(const Program& p, std::vector<std::string>& out) {
  if (p.kind == Program::Kind::atomic) {
    add_unique(out, p.name);
    return;
  }
  collect_atomics(*p.left, out);
  if (p.right)
    collect_atomics(*p.right, out);
}

void collect_atomics(const Formula& f, std::vector<std::string>& out) {
  if (f.program)
    collect_atomics(*f.program, out);
  if (f.left)
    collect_atomics(*f.left, out);
  if (f.right)
    collect_atomics(*f.right, out);
}

void collect_props(const Formula& f, std::vector<std::string>& out) {
  if (f.kind == Formula::Kind::prop)
    add_unique(out, f.name);
  if (f.left)
    collect_props(*f.left, out);
  if (f.right)
    collect_props(*f.right, out);
}

bool contains_par(const Program& p) {
  if (p.kind == Program::Kind::par)
    return true;
  return (p.left && contains_par(*p.left)) || (p.right && contains_par(*p.right));
}

bool contains_par(const Formula& f) {
  return (f.program && contains_par(*f.program)) || (f.left && contains_par(*f.left)) ||
         (f.right && contains_par(*f.right));
}

std::size_t Interner::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::string>{}(k.name);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(static_cast<std::size_t>(k.kind));
  mix(std::hash<const void*>{}(k.left));
  mix(std::hash<const void*>{}(k.right));
  mix(std::hash<const void*>{}(k.program));
  return h;
}

ProgramPtr Interner::intern(const ProgramPtr& p) {
  if (!p || canonical_.contains(p.get()))
    return p;
  ProgramPtr l = intern(p->left);
  ProgramPtr r = intern(p->right);
  Key key{static_cast<int>(p->kind), p->name, l.get(), r.get(), nullptr};
  auto it = programs_.find(key);
  if (it != programs_.end())
    return it->second;
  ProgramPtr node = l == p->left && r == p->right
                        ? p
                        : std::make_shared<const Program>(Program{p->kind, p->name, l, r});
  programs_.emplace(std::move(key), node);
  canonical_.emplace(node.get(), static_cast<std::uint32_t>(canonical_.size()));
  return node;
}

FormulaPtr Interner::intern(const FormulaPtr& f) {
  if (!f || canonical_.contains(f.get()))
    return f;
  FormulaPtr l = intern(f->left);
  FormulaPtr r = intern(f->right);
  ProgramPtr p = intern(f->program);
  Key key{static_cast<int>(f->kind), f->name, l.get(), r.get(), p.get()};
  auto it = formulas_.find(key);
  if (it != formulas_.end())
    return it->second;
  FormulaPtr node = l == f->left && r == f->right && p == f->program
                        ? f
                        : std::make_shared<const Formula>(Formula{f->kind, f->name, l, r, p});
  formulas_.emplace(std::move(key), node);
  canonical_.emplace(node.get(), static_cast<std::uint32_t>(canonical_.size()));
  return node;
}

} // namespace cgdl
