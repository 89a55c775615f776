#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "surfcomp/suites.hpp"

using namespace surfcomp;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 means no stated limit
  std::function<CheckRow()> run;
  std::function<std::string(const CheckRow&)> extra = nullptr;  // additional requirement, empty when met
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;

  SuiteOptions opt;
  const std::vector<Criterion> criteria{
      {1, "pld of the chain (3,2,...,2) with one marked end", 1, [&] { return checks::chain_32_family(opt); }},
      {2, "closed form equals solver", 30, [&] { return checks::closed_form(opt, 500); }},
      {3, "cofactor formula equals linear solve", 30, [&] { return checks::cofactor(opt, 300); }},
      {4, "Du Val graphs have pld 1 and index 1", 1, [&] { return checks::du_val(opt); }},
      {5, "mld equals blow-up enumeration", 120, [&] { return checks::mld_oracle(opt, 200); }},
      {6, "discrepancy concavity bounds on lc graphs", 30, [&] { return checks::concavity_bounds(opt, 1000); }},
      {7, "ACC behavior of composed chains", 0, [&] { return checks::acc_family(opt, 100); }},
      {8, "D(D(Gamma)) = D(Gamma)", 10, [&] { return checks::dd_identity(opt); }},
      {9, "minimal complement index equals m", 5, [&] { return checks::minimal_complement_family(opt); }},
      {10, "dimension-one complements desk scan", 30, [&] { return checks::dim1_desk(opt); },
       [](const CheckRow& r) { return r.detail == "N=2" ? std::string() : "pinned N=2, got " + r.detail; }},
      {11, "direction and weight approximation audit", 120, [&] { return checks::dioph_audit(opt, 100); }},
      {12, "span certificate agrees with brute force", 10, [&] { return checks::span_agreement(opt); }},
      {13, "polytope certificates at probes", 30, [&] { return checks::polytope_probes(opt); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    CheckRow r;
    std::string why;
    try {
      r = c.run();
      if (!r.passed()) why = r.detail;
      if (why.empty() && c.extra) why = c.extra(r);
      if (why.empty() && c.limit_seconds > 0 && r.seconds > c.limit_seconds)
        why = "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    } catch (const std::exception& e) {
      why = std::string("crashed: ") + e.what();
    }
    const bool ok = why.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s [%zu instances, %.2f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, r.instances,
                r.seconds, ok ? (r.detail.empty() ? "" : " ") : " ", ok ? r.detail.c_str() : why.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - static_cast<size_t>(failed), criteria.size());
  return strict && failed ? 1 : 0;
}
