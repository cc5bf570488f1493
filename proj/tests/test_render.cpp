#include "doctest.h"
#include "lpv/render.hpp"

using namespace lpv;

namespace {

VcReport sample_report() {
  VcReport r;
  r.check = "check-correct";
  r.checked = 9;
  r.frontier = 0;
  r.finalize();
  return r;
}

}  // namespace

TEST_CASE("machine RESULT line for a passing check") {
  CHECK(render_report(sample_report(), Format::Machine) ==
        "RESULT check-correct pass checked=9 violations=0 frontier=0\n");
}

TEST_CASE("machine output for violations") {
  VcReport r;
  r.check = "check-correct";
  r.checked = 1;
  r.violations.push_back(
      Violation{ViolationKind::CORR, 0, "q(a)", "head outside S_corr", 0, 0});
  r.finalize();
  CHECK(render_report(r, Format::Machine) ==
        "RESULT check-correct fail checked=1 violations=1 frontier=0\n"
        "VIOLATION kind=CORR clause=1 instance=\"q(a)\" note=\"head outside "
        "S_corr\"\n");
}

TEST_CASE("vacuous pass is flagged") {
  VcReport r;
  r.check = "check-semicomplete";
  r.checked = 0;
  r.finalize();
  CHECK(render_report(r, Format::Machine) ==
        "RESULT check-semicomplete pass checked=0 violations=0 frontier=0 "
        "note=\"vacuous\"\n");
  CHECK(render_report(r, Format::Human).find("vacuous") != std::string::npos);
}

TEST_CASE("violation lines are truncated at the limit, counts stay exact") {
  VcReport r;
  r.check = "check-terminate";
  r.checked = 100;
  for (int i = 0; i < 50; ++i)
    r.violations.push_back(Violation{ViolationKind::TERM, 0,
                                     "p(" + std::to_string(i) + ")", "",
                                     static_cast<std::uint64_t>(i), 0});
  r.finalize();
  std::string out = render_report(r, Format::Machine, 20);
  CHECK(out.find("violations=50") != std::string::npos);
  std::size_t lines = 0;
  for (char c : out) lines += c == '\n';
  CHECK(lines == 21);  // RESULT plus 20 VIOLATION lines
}

TEST_CASE("violations sort canonically: kind, then subject, then clause") {
  VcReport r;
  r.check = "x";
  r.violations.push_back(Violation{ViolationKind::TERM, 1, "b", "", 5, 0});
  r.violations.push_back(Violation{ViolationKind::C1, 2, "c", "", 9, 0});
  r.violations.push_back(Violation{ViolationKind::TERM, 0, "a", "", 2, 0});
  r.finalize();
  CHECK(r.violations[0].kind == ViolationKind::C1);
  CHECK(r.violations[1].instance == "a");
  CHECK(r.violations[2].instance == "b");
}
