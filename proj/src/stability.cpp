#include "lpv/stability.hpp"

#include "lpv/semantics.hpp"

namespace lpv {

namespace {

char status_of(const ThreeValuedInterp& sem, std::uint64_t id) {
  if (sem.t[id]) return 'T';
  if (sem.f[id]) return 'F';
  return 'U';
}

}  // namespace

VcReport stability_check(const std::string& check, const Program& p,
                         const SpecPair& pair, const LevelMapping& lm,
                         const Signature& sig, unsigned depth,
                         std::uint64_t cap, const CheckOptions& opts) {
  HerbrandSlice narrow = herbrand_slice(sig, depth, cap);
  HerbrandSlice wide = herbrand_slice(sig, depth + 1, cap);

  GroundProgram gp_narrow = ground_program(p, narrow, opts.cap);
  GroundProgram gp_wide = ground_program(p, wide, opts.cap);
  PhiResult phi_narrow = phi_fixpoint(gp_narrow);
  PhiResult phi_wide = phi_fixpoint(gp_wide);

  VcReport r;
  r.check = "stability";
  r.checked = narrow.base_size();
  r.frontier = gp_narrow.frontier;

  for (std::uint64_t id = 0; id < narrow.base_size(); ++id) {
    Atom a = narrow.atom_at(id);
    auto wide_id = wide.atom_id(a);
    if (!wide_id) continue;  // cannot happen: the universe grows with depth
    char before = status_of(phi_narrow.interp, id);
    char after = status_of(phi_wide.interp, *wide_id);
    if (before != after)
      r.violations.push_back(
          Violation{ViolationKind::STAB, std::nullopt, to_string(a),
                    std::string("fixpoint status changed ") + before + "->" +
                        after + " at depth " + std::to_string(depth + 1),
                    id, 0});
  }

  if (check != "semantics" && !check.empty()) {
    VcReport before = run_check(check, p, pair, lm, narrow, opts);
    VcReport after = run_check(check, p, pair, lm, wide, opts);
    ++r.checked;
    if (before.pass != after.pass)
      r.violations.push_back(Violation{
          ViolationKind::STAB, std::nullopt, check,
          std::string("verdict changed ") + (before.pass ? "pass" : "fail") +
              "->" + (after.pass ? "pass" : "fail") + " at depth " +
              std::to_string(depth + 1),
          UINT64_MAX, 0});
  }

  r.finalize();
  r.stability_flag = r.pass;
  return r;
}

}  // namespace lpv
