#include "lpv/render.hpp"

#include <algorithm>
#include <sstream>

namespace lpv {

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::CORR: return "CORR";
    case ViolationKind::COV: return "COV";
    case ViolationKind::LVL: return "LVL";
    case ViolationKind::C1: return "C1";
    case ViolationKind::C2: return "C2";
    case ViolationKind::K1: return "K1";
    case ViolationKind::K2: return "K2";
    case ViolationKind::TERM: return "TERM";
    case ViolationKind::PAIR: return "PAIR";
    case ViolationKind::ORACLE: return "ORACLE";
    case ViolationKind::AGREE: return "AGREE";
    case ViolationKind::STAB: return "STAB";
  }
  return "?";
}

void VcReport::finalize() {
  std::sort(violations.begin(), violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              if (a.atom_key != b.atom_key) return a.atom_key < b.atom_key;
              std::uint64_t ca = a.clause_index ? *a.clause_index + 1 : 0;
              std::uint64_t cb = b.clause_index ? *b.clause_index + 1 : 0;
              if (ca != cb) return ca < cb;
              if (a.pos_key != b.pos_key) return a.pos_key < b.pos_key;
              if (a.instance != b.instance) return a.instance < b.instance;
              return a.note < b.note;
            });
  pass = violations.empty();
}

std::string render_report(const VcReport& r, Format format,
                          std::size_t limit) {
  std::ostringstream os;
  std::size_t shown = std::min<std::size_t>(limit, r.violations.size());
  if (format == Format::Machine) {
    os << "RESULT " << r.check << ' ' << (r.pass ? "pass" : "fail")
       << " checked=" << r.checked << " violations=" << r.violations.size()
       << " frontier=" << r.frontier;
    if (r.vacuous()) os << " note=\"vacuous\"";
    os << '\n';
    for (std::size_t i = 0; i < shown; ++i) {
      const Violation& v = r.violations[i];
      os << "VIOLATION kind=" << to_string(v.kind) << " clause=";
      if (v.clause_index)
        os << (*v.clause_index + 1);
      else
        os << '-';
      os << " instance=\"" << v.instance << "\" note=\"" << v.note << "\"\n";
    }
    return os.str();
  }

  os << '[' << r.check << "] " << (r.pass ? "PASS" : "FAIL")
     << "  checked=" << r.checked << " violations=" << r.violations.size()
     << " frontier=" << r.frontier << '\n';
  if (r.vacuous()) os << "  note: vacuous (nothing was checked)\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const Violation& v = r.violations[i];
    os << "  " << to_string(v.kind);
    if (v.clause_index) os << " @clause " << (*v.clause_index + 1);
    os << ": " << v.instance;
    if (!v.note.empty()) os << "   (" << v.note << ')';
    os << '\n';
  }
  if (shown < r.violations.size())
    os << "  ... " << (r.violations.size() - shown) << " more violation(s)\n";
  return os.str();
}

}  // namespace lpv
