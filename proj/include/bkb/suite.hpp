#pragma once

// The acceptance checks shared by the acceptance test and `bkb verify-suite`.

#include "bkb/catalog.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bkb {

struct CheckResult {
    bool ok = false;
    std::string detail;
};

struct SuiteCheck {
    int id = 0;
    std::string name;
    std::function<CheckResult()> run;
};

std::vector<SuiteCheck> acceptance_checks();

// Individual checks, exposed so that tests can feed perturbed inputs.
CheckResult check_d4(const Counterexample& ex);
// 1 not in L, Pro^period(1) = 1 and no earlier return.
CheckResult check_returns(const Counterexample& ex);
CheckResult check_family_B(const std::vector<int>& ns, const std::vector<std::pair<int, int>>& bb);
CheckResult check_family_D(const std::vector<int>& ns, const std::vector<int>& labels);
CheckResult check_long_word_sorting(unsigned seed);
CheckResult check_coxeter_sorting(unsigned seed);
CheckResult check_typeA_identities(unsigned seed);
CheckResult check_typeA_correspondence();
CheckResult check_small_roots();
CheckResult check_walk_negatives();
CheckResult check_properties(unsigned seed, int cases);

}  // namespace bkb
