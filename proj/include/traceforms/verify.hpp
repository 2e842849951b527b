#pragma once

#include <string>
#include <vector>

#include "traceforms/rational.hpp"

namespace traceforms {

// One entry of a verification run: a named check with the frozen expected
// value, what was actually computed (or the exception it raised), and how
// long it took.  `pass` is string equality of expected and actual.
struct SuiteResult {
    std::string check;
    bool pass = false;
    std::string expected;
    std::string actual;
    long elapsed_ms = 0;
};

struct SuiteOptions {
    unsigned long seed = 20260814;
    std::vector<Rat> levels;  // empty selects {1, 2, 5/2, 3, 7/3}
    long prec = 60;
    int draws = 20;
};

// Suite names in canonical order (excluding the umbrella "all").
const std::vector<std::string>& suite_names();

// Run one suite, or every suite in order for "all".  The check list per
// suite is fixed; only seed/levels/draws/prec vary the inputs.  Unknown
// names raise ParseError.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace traceforms
