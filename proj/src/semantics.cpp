#include "lpv/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpv/errors.hpp"

namespace lpv {

Clause GroundProgram::instance_clause(std::uint32_t idx) const {
  const GroundClause& gc = clauses[idx];
  Clause c;
  c.head = slice->atom_at(gc.head);
  for (const auto& l : gc.body)
    c.body.push_back(Literal{l.positive, slice->atom_at(l.atom)});
  return c;
}

namespace {

// Compile-time view of one clause argument for weight-bound pruning:
// symbols(arg under sigma) = own_syms + sum over vars of occ * symbols(term).
struct ArgSlot {
  const Term* pattern;
  std::size_t own_syms = 0;
  std::vector<std::pair<std::size_t, std::size_t>> var_occ;  // (var idx, count)
};

void scan_pattern(const Term& t, const std::vector<std::string>& vars,
                  ArgSlot& slot) {
  if (t.var) {
    std::size_t idx =
        std::find(vars.begin(), vars.end(), t.functor) - vars.begin();
    for (auto& [v, c] : slot.var_occ)
      if (v == idx) {
        ++c;
        return;
      }
    slot.var_occ.emplace_back(idx, 1);
    return;
  }
  ++slot.own_syms;
  for (const auto& a : t.args) scan_pattern(a, vars, slot);
}

Term substitute(const Term& t, const std::vector<std::string>& vars,
                const std::vector<std::uint32_t>& assign,
                const HerbrandSlice& slice) {
  if (t.var) {
    std::size_t idx =
        std::find(vars.begin(), vars.end(), t.functor) - vars.begin();
    return slice.term_at(assign[idx]);
  }
  Term out = Term::compound(t.functor);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args)
    out.args.push_back(substitute(a, vars, assign, slice));
  return out;
}

}  // namespace

GroundProgram ground_program(const Program& p, const HerbrandSlice& slice,
                             std::uint64_t cap) {
  GroundProgram gp;
  gp.slice = &slice;
  gp.source = &p;

  const std::uint64_t u = slice.universe().size();
  const std::size_t max_syms = slice.depth() + 1;
  std::vector<std::size_t> usym(u);
  for (std::uint64_t i = 0; i < u; ++i)
    usym[i] = term_symbols(slice.term_at(i));

  unsigned __int128 frontier = 0;

  for (std::uint32_t ci = 0; ci < p.clauses.size(); ++ci) {
    const Clause& clause = p.clauses[ci];
    if (!clause.is_definite()) gp.definite = false;

    std::vector<std::string> vars = clause_vars(clause);
    std::vector<const Atom*> atoms;
    std::vector<bool> polarity;
    atoms.push_back(&clause.head);
    polarity.push_back(true);
    for (const auto& l : clause.body) {
      atoms.push_back(&l.atom);
      polarity.push_back(l.positive);
    }
    for (const Atom* a : atoms)
      if (!slice.pred_index(a->pred, a->arity()))
        throw std::logic_error("predicate " + a->pred + "/" +
                               std::to_string(a->arity()) +
                               " missing from the slice signature");

    // one slot per atom argument, with initial bounds counting each
    // unassigned variable occurrence as one symbol
    std::vector<ArgSlot> slots;
    std::vector<std::size_t> atom_first_slot;
    for (const Atom* a : atoms) {
      atom_first_slot.push_back(slots.size());
      for (const auto& arg : a->args) {
        ArgSlot slot;
        slot.pattern = &arg;
        scan_pattern(arg, vars, slot);
        slots.push_back(std::move(slot));
      }
    }
    std::vector<std::size_t> bound(slots.size());
    bool impossible = false;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      std::size_t b = slots[i].own_syms;
      for (const auto& [v, occ] : slots[i].var_occ) b += occ;
      bound[i] = b;
      if (b > max_syms) impossible = true;
    }

    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) total *= u;

    if (impossible || (u == 0 && !vars.empty())) {
      frontier += total;
      continue;
    }

    // per-variable list of affected slots
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> var_slots(
        vars.size());
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (const auto& [v, occ] : slots[i].var_occ)
        var_slots[v].emplace_back(i, occ);

    std::uint64_t kept_before = gp.clauses.size();
    std::vector<std::uint32_t> assign(vars.size(), 0);

    auto emit = [&]() {
      GroundClause gc;
      gc.clause_index = ci;
      for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
        const Atom* a = atoms[ai];
        auto pred = slice.pred_index(a->pred, a->arity());
        std::uint64_t rank = 0;
        for (std::size_t k = 0; k < a->args.size(); ++k) {
          Term arg = substitute(a->args[k], vars, assign, slice);
          auto tid = slice.term_id(arg);
          if (!tid) throw std::logic_error("pruned enumeration emitted an out-of-universe term");
          rank = rank * u + *tid;
        }
        std::uint64_t id = slice.preds()[*pred].offset + rank;
        if (ai == 0)
          gc.head = id;
        else
          gc.body.push_back(GroundLit{polarity[ai], id});
      }
      gp.clauses.push_back(std::move(gc));
      if (gp.clauses.size() > cap)
        throw ResourceExceeded("ground program exceeds cap " +
                               std::to_string(cap));
    };

    auto rec = [&](auto&& self, std::size_t v) -> void {
      if (v == vars.size()) {
        emit();
        return;
      }
      for (std::uint64_t id = 0; id < u; ++id) {
        std::size_t delta = usym[id] - 1;
        bool fits = true;
        if (delta) {
          for (const auto& [si, occ] : var_slots[v]) {
            bound[si] += occ * delta;
            if (bound[si] > max_syms) fits = false;
          }
          if (!fits) {
            for (const auto& [si, occ] : var_slots[v]) bound[si] -= occ * delta;
            break;  // universe ids are sorted by weight; larger ids only grow
          }
        }
        assign[v] = static_cast<std::uint32_t>(id);
        self(self, v + 1);
        if (delta)
          for (const auto& [si, occ] : var_slots[v]) bound[si] -= occ * delta;
      }
    };
    rec(rec, 0);

    frontier += total - (gp.clauses.size() - kept_before);
  }

  if (frontier > UINT64_MAX)
    throw ResourceExceeded("frontier instance count overflows");
  gp.frontier = static_cast<std::uint64_t>(frontier);

  gp.by_head.resize(slice.base_size());
  for (std::uint32_t i = 0; i < gp.clauses.size(); ++i)
    gp.by_head[gp.clauses[i].head].push_back(i);
  return gp;
}

TwoValuedInterp tp_step(const GroundProgram& gp, const TwoValuedInterp& in) {
  if (!gp.definite)
    throw NotDefiniteError("tp_step requires a definite program");
  TwoValuedInterp out;
  out.t.assign(gp.slice->base_size(), false);
  for (const auto& gc : gp.clauses) {
    bool fires = true;
    for (const auto& l : gc.body)
      if (!in.t[l.atom]) {
        fires = false;
        break;
      }
    if (fires) out.t[gc.head] = true;
  }
  return out;
}

TpResult tp_lfp(const GroundProgram& gp) {
  TwoValuedInterp cur;
  cur.t.assign(gp.slice->base_size(), false);
  unsigned iters = 0;
  while (true) {
    TwoValuedInterp next = tp_step(gp, cur);
    ++iters;
    if (next == cur) break;
    cur = std::move(next);
    if (iters > gp.slice->base_size() + 1)
      throw std::logic_error("tp iteration exceeded its bound");
  }
  return TpResult{std::move(cur), iters};
}

ThreeValuedInterp phi_step(const GroundProgram& gp,
                           const ThreeValuedInterp& in) {
  std::uint64_t n = gp.slice->base_size();
  ThreeValuedInterp out;
  out.t.assign(n, false);
  out.f.assign(n, true);  // refuted by every instance until shown otherwise
  for (const auto& gc : gp.clauses) {
    bool all_true = true;
    bool some_false = false;
    for (const auto& l : gc.body) {
      bool lit_true = l.positive ? in.t[l.atom] : in.f[l.atom];
      bool lit_false = l.positive ? in.f[l.atom] : in.t[l.atom];
      if (!lit_true) all_true = false;
      if (lit_false) {
        some_false = true;
        break;  // enough to keep the head a false-candidate
      }
    }
    if (all_true) out.t[gc.head] = true;
    if (!some_false) out.f[gc.head] = false;
  }
  return out;
}

PhiResult phi_fixpoint(const GroundProgram& gp) {
  std::uint64_t n = gp.slice->base_size();
  ThreeValuedInterp cur;
  cur.t.assign(n, false);
  cur.f.assign(n, false);
  unsigned iters = 0;
  while (true) {
    ThreeValuedInterp next = phi_step(gp, cur);
    ++iters;
    if (!next.consistent())
      throw std::logic_error("phi iterate is inconsistent");
    if (next == cur) break;
    cur = std::move(next);
    if (iters > 2 * n + 2)
      throw std::logic_error("phi iteration exceeded its bound");
  }
  return PhiResult{std::move(cur), iters};
}

namespace {

void oracle_scan(VcReport& r, const HerbrandSlice& slice,
                 const std::vector<bool>& subject,
                 const std::vector<bool>& required, bool required_value,
                 const char* note) {
  for (std::uint64_t id = 0; id < slice.base_size(); ++id)
    if (subject[id] && required[id] != required_value)
      r.violations.push_back(Violation{ViolationKind::ORACLE, std::nullopt,
                                       to_string(slice.atom_at(id)), note, id,
                                       0});
}

}  // namespace

VcReport oracle_check(const SpecPair& pair, const ThreeValuedInterp& sem,
                      const HerbrandSlice& slice) {
  VcReport r;
  r.check = "oracle";
  r.checked = slice.base_size();
  std::vector<bool> corr = spec_bitset(pair.corr, slice);
  std::vector<bool> compl_bits = spec_bitset(pair.compl_, slice);
  oracle_scan(r, slice, compl_bits, sem.t, true,
              "S_compl atom is not true in the fixpoint");
  oracle_scan(r, slice, sem.t, corr, true,
              "fixpoint-true atom is outside S_corr");
  oracle_scan(r, slice, sem.f, compl_bits, false,
              "fixpoint-false atom is in S_compl");
  std::vector<bool> outside_corr(slice.base_size());
  for (std::uint64_t id = 0; id < slice.base_size(); ++id)
    outside_corr[id] = !corr[id];
  oracle_scan(r, slice, outside_corr, sem.f, true,
              "atom outside S_corr is not false in the fixpoint");
  r.finalize();
  return r;
}

}  // namespace lpv
