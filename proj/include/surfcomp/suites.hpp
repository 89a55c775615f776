#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "surfcomp/numbers.hpp"

namespace surfcomp {

struct SuiteOptions {
  int jobs = 1;
  long budget = 10'000'000;
  std::uint64_t seed = 0x5eed2024;
};

struct CheckRow {
  std::string suite;
  std::string name;
  size_t instances = 0;
  size_t failures = 0;
  std::string detail;  // first failure, or a summary value
  double seconds = 0;
  bool passed() const { return failures == 0; }
};

// Runs body(i) for i < n on opt.jobs threads and returns the first non-empty
// message in index order together with the count of non-empty ones.
std::pair<size_t, std::string> run_instances(size_t n, int jobs, const std::function<std::string(size_t)>& body);

namespace checks {

CheckRow chain_32_family(const SuiteOptions& opt);
CheckRow closed_form(const SuiteOptions& opt, size_t count);
CheckRow cofactor(const SuiteOptions& opt, size_t count);
CheckRow du_val(const SuiteOptions& opt);
CheckRow mld_oracle(const SuiteOptions& opt, size_t count);
CheckRow concavity_bounds(const SuiteOptions& opt, size_t count);
CheckRow acc_family(const SuiteOptions& opt, size_t families);
CheckRow dd_identity(const SuiteOptions& opt);
CheckRow minimal_complement_family(const SuiteOptions& opt);
// detail carries "N=<value>" for eps = 1/2, p = 2.
CheckRow dim1_desk(const SuiteOptions& opt);
CheckRow dioph_audit(const SuiteOptions& opt, size_t count);
CheckRow span_agreement(const SuiteOptions& opt);
CheckRow polytope_probes(const SuiteOptions& opt);

CheckRow chain_delta(const SuiteOptions& opt);
CheckRow logdisc_denominators(const SuiteOptions& opt, size_t count);
CheckRow pld_equals_mld_long(const SuiteOptions& opt, size_t count);
CheckRow first_blowup(const SuiteOptions& opt, size_t count);
CheckRow nakamura_baseline(const SuiteOptions& opt);
CheckRow sets_projection(const SuiteOptions& opt, size_t count);
CheckRow gamma_plus_stable(const SuiteOptions& opt);
CheckRow monotone_reduction(const SuiteOptions& opt, size_t count);
CheckRow dim1_minimal(const SuiteOptions& opt, size_t count);

}  // namespace checks

// selector: all, graph, germ, sets, dioph, complements, polytope.
std::vector<CheckRow> run_verify_suite(const std::string& selector, const SuiteOptions& opt);
// Timings are left out unless asked for, so reports compare byte for byte.
std::string tsv(const std::vector<CheckRow>& rows, bool timings = false);

}  // namespace surfcomp
