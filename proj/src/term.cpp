#include "lpv/term.hpp"

#include <algorithm>
#include <sstream>

namespace lpv {

std::size_t term_symbols(const Term& t) {
  if (t.var) return 1;
  std::size_t n = 1;
  for (const auto& a : t.args) n += term_symbols(a);
  return n;
}

std::size_t term_weight(const Term& t) { return term_symbols(t) - 1; }

bool term_is_ground(const Term& t) {
  if (t.var) return false;
  for (const auto& a : t.args)
    if (!term_is_ground(a)) return false;
  return true;
}

bool atom_is_ground(const Atom& a) {
  for (const auto& t : a.args)
    if (!term_is_ground(t)) return false;
  return true;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.var) {
    if (std::find(out.begin(), out.end(), t.functor) == out.end())
      out.push_back(t.functor);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
  for (const auto& t : a.args) collect_vars(t, out);
}

std::vector<std::string> clause_vars(const Clause& c) {
  std::vector<std::string> vars;
  collect_vars(c.head, vars);
  for (const auto& l : c.body) collect_vars(l.atom, vars);
  return vars;
}

int compare_term(const Term& a, const Term& b) {
  if (a.var != b.var) return a.var ? -1 : 1;
  if (a.var) return a.functor.compare(b.functor);
  std::size_t wa = term_weight(a), wb = term_weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  if (int c = a.functor.compare(b.functor)) return c;
  if (a.args.size() != b.args.size())
    return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare_term(a.args[i], b.args[i])) return c;
  return 0;
}

bool term_less(const Term& a, const Term& b) { return compare_term(a, b) < 0; }

int compare_atom(const Atom& a, const Atom& b) {
  if (int c = a.pred.compare(b.pred)) return c;
  if (a.args.size() != b.args.size())
    return a.args.size() < b.args.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare_term(a.args[i], b.args[i])) return c;
  return 0;
}

bool atom_less(const Atom& a, const Atom& b) { return compare_atom(a, b) < 0; }

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = t.var ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  for (char c : t.functor) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
  for (const auto& a : t.args) h = (h ^ (*this)(a)) * 0x100000001b3ull;
  return h;
}

namespace {

bool is_cons(const Term& t) {
  return !t.var && t.functor == "." && t.args.size() == 2;
}

bool is_nil(const Term& t) {
  return !t.var && t.functor == "[]" && t.args.empty();
}

void print_term(std::ostream& os, const Term& t);

void print_list(std::ostream& os, const Term& cons) {
  os << '[';
  const Term* cur = &cons;
  bool first = true;
  while (true) {
    if (!first) os << ',';
    print_term(os, cur->args[0]);
    first = false;
    const Term& tail = cur->args[1];
    if (is_nil(tail)) break;
    if (is_cons(tail)) {
      cur = &tail;
      continue;
    }
    os << '|';
    print_term(os, tail);
    break;
  }
  os << ']';
}

void print_term(std::ostream& os, const Term& t) {
  if (t.var) {
    os << t.functor;
    return;
  }
  if (is_nil(t)) {
    os << "[]";
    return;
  }
  if (is_cons(t)) {
    print_list(os, t);
    return;
  }
  os << t.functor;
  if (!t.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) os << ',';
      print_term(os, t.args[i]);
    }
    os << ')';
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  os << a.pred;
  if (!a.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) os << ',';
      print_term(os, a.args[i]);
    }
    os << ')';
  }
  return os.str();
}

std::string to_string(const Literal& l) {
  return l.positive ? to_string(l.atom) : "\\+ " + to_string(l.atom);
}

std::string to_string(const Clause& c) {
  std::string s = to_string(c.head);
  if (!c.body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (i) s += ", ";
      s += to_string(c.body[i]);
    }
  }
  return s;
}

std::string to_string(const Program& p) {
  std::string s;
  for (const auto& c : p.clauses) {
    s += to_string(c);
    s += ".\n";
  }
  return s;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

namespace {

bool occurs(const std::string& var, const Term& t) {
  if (t.var) return t.functor == var;
  for (const auto& a : t.args)
    if (occurs(var, a)) return true;
  return false;
}

Term replace_var(const Term& t, const std::string& var, const Term& val) {
  if (t.var) return t.functor == var ? val : t;
  Term out = Term::compound(t.functor);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(replace_var(a, var, val));
  return out;
}

}  // namespace

bool Substitution::bind(const std::string& var, const Term& t) {
  Term resolved = apply(t);
  if (resolved.var && resolved.functor == var) return true;  // X -> X is a no-op
  if (occurs(var, resolved)) return false;
  for (auto& [v, range] : map_) range = replace_var(range, var, resolved);
  map_[var] = std::move(resolved);
  return true;
}

Term Substitution::apply(const Term& t) const {
  if (t.var) {
    const Term* bound = lookup(t.functor);
    return bound ? *bound : t;
  }
  Term out = Term::compound(t.functor);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(apply(a));
  return out;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out{a.pred, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const {
  return Literal{l.positive, apply(l.atom)};
}

Clause Substitution::apply(const Clause& c) const {
  Clause out{apply(c.head), {}};
  out.body.reserve(c.body.size());
  for (const auto& l : c.body) out.body.push_back(apply(l));
  return out;
}

Substitution Substitution::restricted_to(
    const std::vector<std::string>& vars) const {
  Substitution out;
  for (const auto& v : vars) {
    auto it = map_.find(v);
    if (it != map_.end()) out.map_.emplace(v, it->second);
  }
  return out;
}

std::string to_string(const Substitution& s) {
  if (s.empty()) return "yes";
  std::string out;
  for (const auto& [v, t] : s.bindings()) {
    if (!out.empty()) out += ' ';
    out += v + "=" + to_string(t);
  }
  return out;
}

namespace {

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Term x = s.apply(a);
  Term y = s.apply(b);
  if (x.var) return s.bind(x.functor, y);
  if (y.var) return s.bind(y.functor, x);
  if (x.functor != y.functor || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!unify_into(x.args[i], y.args[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify_atoms(const Atom& a, const Atom& b) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return std::nullopt;
  Substitution s;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!unify_into(a.args[i], b.args[i], s)) return std::nullopt;
  return s;
}

}  // namespace lpv
