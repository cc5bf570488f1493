#pragma once

#include <cstdint>
#include <string>

#include "lpv/herbrand.hpp"
#include "lpv/spec.hpp"
#include "lpv/term.hpp"
#include "lpv/vc.hpp"
#include "lpv/vcreport.hpp"

namespace lpv {

/// Audits the depth-bounded approximation: reruns the fixpoint semantics
/// (and, when `check` names one of the proof checks, that check) at `depth`
/// and `depth + 1`, and reports every base(depth) atom whose three-valued
/// status changes, plus any change of the check verdict. Verdicts that
/// survive the depth bump are evidence the bounded slice was wide enough.
VcReport stability_check(const std::string& check, const Program& p,
                         const SpecPair& pair, const LevelMapping& lm,
                         const Signature& sig, unsigned depth,
                         std::uint64_t cap, const CheckOptions& opts = {});

}  // namespace lpv
