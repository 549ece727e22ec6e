#pragma once

#include <string>
#include <vector>

namespace cesaro::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The numbered acceptance checks. Each is self-contained and deterministic.
CheckResult eigen_equation();        // 1
CheckResult inverse_resolvent();     // 2
CheckResult classical_witness();     // 3
CheckResult factorization();         // 4
CheckResult l1_norm_formula();       // 5
CheckResult averaging_norm_window(); // 6
CheckResult bound_sweep();           // 7
CheckResult shift_norms();           // 8
CheckResult combinatorial_duality(); // 9
CheckResult ergodic_limit();         // 10
CheckResult kernel_dimension();      // 11

std::vector<CheckResult> run_all();
CheckResult run_one(int id);

}  // namespace cesaro::verify
