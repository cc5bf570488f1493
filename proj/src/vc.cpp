#include "lpv/vc.hpp"

#include <algorithm>

#include "lpv/errors.hpp"
#include "lpv/parallel.hpp"

namespace lpv {

namespace {

std::uint64_t popcount(const std::vector<bool>& bits) {
  std::uint64_t n = 0;
  for (bool b : bits) n += b;
  return n;
}

void require_consistent(const SpecPair& pair, const HerbrandSlice& slice) {
  for (std::uint64_t id = 0; id < slice.base_size(); ++id) {
    Atom a = slice.atom_at(id);
    if (pair.compl_.contains(a) && !pair.corr.contains(a))
      throw PairInconsistentError("specification pair is inconsistent: " +
                                  to_string(a) +
                                  " is in S_compl but not in S_corr");
  }
}

/// Merges per-chunk violation vectors in chunk order into the report.
template <class Scan>
void scan_chunks(VcReport& r, std::size_t n, std::size_t jobs, Scan&& scan) {
  std::size_t nchunks = jobs <= 1 ? 1 : jobs;
  std::vector<std::vector<Violation>> out(nchunks);
  parallel_chunks(n, jobs, [&](std::size_t begin, std::size_t end,
                               std::size_t chunk) {
    scan(begin, end, out[chunk]);
  });
  for (auto& chunk : out)
    r.violations.insert(r.violations.end(),
                        std::make_move_iterator(chunk.begin()),
                        std::make_move_iterator(chunk.end()));
}

/// Instance-wide model condition (the CORR/C1 family). For definite
/// programs the negative-literal premise is vacuous and this is exactly the
/// "S_corr is a model" condition.
void scan_clause_condition(VcReport& r, const GroundProgram& gp,
                           const std::vector<bool>& corr,
                           const std::vector<bool>& compl_bits,
                           ViolationKind kind, std::size_t jobs) {
  scan_chunks(r, gp.clauses.size(), jobs,
              [&](std::size_t begin, std::size_t end,
                  std::vector<Violation>& out) {
                for (std::size_t i = begin; i < end; ++i) {
                  const GroundClause& gc = gp.clauses[i];
                  bool premise = true;
                  for (const auto& l : gc.body) {
                    bool holds =
                        l.positive ? corr[l.atom] : !compl_bits[l.atom];
                    if (!holds) {
                      premise = false;
                      break;
                    }
                  }
                  if (premise && !corr[gc.head])
                    out.push_back(Violation{
                        kind, gc.clause_index,
                        to_string(gp.instance_clause(
                            static_cast<std::uint32_t>(i))),
                        "body holds under the specification but the head is "
                        "outside S_corr",
                        gc.head, i});
                }
              });
  r.checked += gp.clauses.size();
}

/// Coverage of the atoms selected by `subject`: per atom, some instance with
/// that head whose positives satisfy `pos_in` and negatives avoid `neg_out`;
/// with a level mapping the same instance must also strictly decrease.
void scan_coverage(VcReport& r, const GroundProgram& gp,
                   const std::vector<bool>& subject,
                   const std::vector<bool>& pos_in,
                   const std::vector<bool>& neg_out,
                   const std::vector<std::uint64_t>* levels,
                   ViolationKind uncovered_kind, ViolationKind undecreased_kind,
                   std::size_t jobs) {
  const HerbrandSlice& slice = *gp.slice;
  scan_chunks(
      r, slice.base_size(), jobs,
      [&](std::size_t begin, std::size_t end, std::vector<Violation>& out) {
        for (std::uint64_t id = begin; id < end; ++id) {
          if (!subject[id]) continue;
          bool covered = false;
          bool decreased = false;
          for (std::uint32_t ii : gp.by_head[id]) {
            const GroundClause& gc = gp.clauses[ii];
            bool covers = true;
            for (const auto& l : gc.body) {
              bool holds = l.positive ? pos_in[l.atom] : !neg_out[l.atom];
              if (!holds) {
                covers = false;
                break;
              }
            }
            if (!covers) continue;
            covered = true;
            if (!levels) break;
            bool dec = true;
            for (const auto& l : gc.body)
              if (!((*levels)[id] > (*levels)[l.atom])) {
                dec = false;
                break;
              }
            if (dec) {
              decreased = true;
              break;
            }
          }
          if (!covered)
            out.push_back(Violation{uncovered_kind, std::nullopt,
                                    to_string(slice.atom_at(id)),
                                    "no covering instance", id, 0});
          else if (levels && !decreased)
            out.push_back(Violation{undecreased_kind, std::nullopt,
                                    to_string(slice.atom_at(id)),
                                    "covered, but no covering instance "
                                    "strictly decreases the level",
                                    id, 1});
        }
      });
  r.checked += popcount(subject);
}

}  // namespace

VcReport check_correct_definite(const Program& p,
                                const SpecInterpretation& corr,
                                const HerbrandSlice& slice,
                                const CheckOptions& opts) {
  if (!p.is_definite())
    throw NotDefiniteError("check-correct requires a definite program");
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> bits = spec_bitset(corr, slice);
  VcReport r;
  r.check = "check-correct";
  r.frontier = gp.frontier;
  scan_clause_condition(r, gp, bits, bits, ViolationKind::CORR, opts.jobs);
  r.finalize();
  return r;
}

VcReport check_semicomplete_definite(const Program& p,
                                     const SpecInterpretation& compl_,
                                     const HerbrandSlice& slice,
                                     const CheckOptions& opts) {
  if (!p.is_definite())
    throw NotDefiniteError("check-semicomplete requires a definite program");
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> bits = spec_bitset(compl_, slice);
  VcReport r;
  r.check = "check-semicomplete";
  r.frontier = gp.frontier;
  scan_coverage(r, gp, bits, bits, bits, nullptr, ViolationKind::COV,
                ViolationKind::COV, opts.jobs);
  r.finalize();
  return r;
}

VcReport check_complete_definite(const Program& p,
                                 const SpecInterpretation& compl_,
                                 const LevelMapping& lm,
                                 const HerbrandSlice& slice,
                                 const CheckOptions& opts) {
  if (!p.is_definite())
    throw NotDefiniteError("check-complete requires a definite program");
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> bits = spec_bitset(compl_, slice);
  std::vector<std::uint64_t> levels = level_values(lm, slice);
  VcReport r;
  r.check = "check-complete";
  r.frontier = gp.frontier;
  scan_coverage(r, gp, bits, bits, bits, &levels, ViolationKind::COV,
                ViolationKind::LVL, opts.jobs);
  r.finalize();
  return r;
}

VcReport check_correct_normal(const Program& p, const SpecPair& pair,
                              const HerbrandSlice& slice,
                              const CheckOptions& opts) {
  require_consistent(pair, slice);
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> corr = spec_bitset(pair.corr, slice);
  std::vector<bool> compl_bits = spec_bitset(pair.compl_, slice);
  VcReport r;
  r.check = "check-correct-normal";
  r.frontier = gp.frontier;
  scan_clause_condition(r, gp, corr, compl_bits, ViolationKind::C1, opts.jobs);
  scan_coverage(r, gp, compl_bits, compl_bits, corr, nullptr,
                ViolationKind::C2, ViolationKind::C2, opts.jobs);
  r.finalize();
  return r;
}

VcReport check_complete_normal(const Program& p, const SpecPair& pair,
                               const LevelMapping& lm,
                               const HerbrandSlice& slice,
                               const CheckOptions& opts) {
  require_consistent(pair, slice);
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> corr = spec_bitset(pair.corr, slice);
  std::vector<bool> compl_bits = spec_bitset(pair.compl_, slice);
  std::vector<std::uint64_t> levels = level_values(lm, slice);
  VcReport r;
  r.check = "check-complete-normal";
  r.frontier = gp.frontier;

  // K1: decreasing coverage of S_compl
  scan_coverage(r, gp, compl_bits, compl_bits, corr, &levels,
                ViolationKind::K1, ViolationKind::K1, opts.jobs);

  // K2: every instance of an atom outside S_corr has a lower-level killer
  scan_chunks(
      r, slice.base_size(), opts.jobs,
      [&](std::size_t begin, std::size_t end, std::vector<Violation>& out) {
        for (std::uint64_t id = begin; id < end; ++id) {
          if (corr[id]) continue;
          for (std::uint32_t ii : gp.by_head[id]) {
            const GroundClause& gc = gp.clauses[ii];
            bool killed = false;
            for (const auto& l : gc.body) {
              bool killer = l.positive ? !corr[l.atom] : compl_bits[l.atom];
              if (killer && levels[l.atom] < levels[id]) {
                killed = true;
                break;
              }
            }
            if (!killed)
              out.push_back(Violation{
                  ViolationKind::K2, gc.clause_index,
                  to_string(gp.instance_clause(ii)),
                  "instance of an atom outside S_corr has no lower-level "
                  "killer literal",
                  id, ii});
          }
        }
      });
  r.checked += slice.base_size() - popcount(corr);
  r.finalize();
  return r;
}

VcReport check_terminate(const Program& p, const SpecPair& pair,
                         const LevelMapping& lm, const HerbrandSlice& slice,
                         const CheckOptions& opts) {
  require_consistent(pair, slice);
  GroundProgram gp = ground_program(p, slice, opts.cap);
  std::vector<bool> corr = spec_bitset(pair.corr, slice);
  std::vector<bool> compl_bits = spec_bitset(pair.compl_, slice);
  std::vector<std::uint64_t> levels = level_values(lm, slice);
  VcReport r;
  r.check = "check-terminate";
  r.frontier = gp.frontier;

  // Correctness of the pair is the premise that lets prefix gating stand in
  // for "the prefix was actually refuted" in a derivation; without it the
  // decrease below does not bound left derivations.
  scan_clause_condition(r, gp, corr, compl_bits, ViolationKind::C1, opts.jobs);
  if (!gp.definite)
    scan_coverage(r, gp, compl_bits, compl_bits, corr, nullptr,
                  ViolationKind::C2, ViolationKind::C2, opts.jobs);

  std::uint64_t positions = 0;
  for (const auto& gc : gp.clauses) positions += gc.body.size();
  scan_chunks(
      r, gp.clauses.size(), opts.jobs,
      [&](std::size_t begin, std::size_t end, std::vector<Violation>& out) {
        for (std::size_t i = begin; i < end; ++i) {
          const GroundClause& gc = gp.clauses[i];
          bool prefix_holds = true;
          for (std::size_t pos = 0; pos < gc.body.size() && prefix_holds;
               ++pos) {
            const GroundLit& l = gc.body[pos];
            if (!(levels[gc.head] > levels[l.atom]))
              out.push_back(Violation{
                  ViolationKind::TERM, gc.clause_index,
                  to_string(
                      gp.instance_clause(static_cast<std::uint32_t>(i))),
                  "no strict level decrease at body position " +
                      std::to_string(pos + 1),
                  gc.head, (i << 8) | pos});
            prefix_holds = l.positive ? corr[l.atom] : !compl_bits[l.atom];
          }
        }
      });
  r.checked += positions;
  r.finalize();
  return r;
}

VcReport run_check(const std::string& name, const Program& p,
                   const SpecPair& pair, const LevelMapping& lm,
                   const HerbrandSlice& slice, const CheckOptions& opts) {
  if (name == "check-correct")
    return check_correct_definite(p, pair.corr, slice, opts);
  if (name == "check-semicomplete")
    return check_semicomplete_definite(p, pair.compl_, slice, opts);
  if (name == "check-complete")
    return check_complete_definite(p, pair.compl_, lm, slice, opts);
  if (name == "check-correct-normal")
    return check_correct_normal(p, pair, slice, opts);
  if (name == "check-complete-normal")
    return check_complete_normal(p, pair, lm, slice, opts);
  if (name == "check-terminate")
    return check_terminate(p, pair, lm, slice, opts);
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace lpv
