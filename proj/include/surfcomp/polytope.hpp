#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcomp/dual_graph.hpp"
#include "surfcomp/numbers.hpp"
#include "surfcomp/smooth_germ.hpp"

namespace surfcomp {

// An snc-certified dual graph or a smooth-germ cluster.
class Germ {
 public:
  static Germ of(DualGraph g);
  static Germ of(Cluster c);

  const std::optional<DualGraph>& graph() const { return graph_; }
  const std::optional<Cluster>& cluster() const { return cluster_; }
  size_t branches() const;
  std::vector<std::string> names() const;
  // Candidate divisors: every stratum of the snc model.
  const std::vector<Stratum>& strata() const { return strata_; }
  // Throws NotLC when the pair is not lc.
  MldResult mld(const Boundary& b) const;

 private:
  std::optional<DualGraph> graph_;
  std::optional<Cluster> cluster_;
  std::vector<Stratum> strata_;
  size_t exceptional_ = 0;
};

struct LinearityCertificate {
  std::vector<FormalReal> center;
  Rational delta;
  std::vector<std::pair<Rational, Rational>> box;
  std::vector<std::vector<Rational>> vertices;
  std::vector<FormalReal> weights;
  std::vector<Rational> eps;
  Stratum witness;
  std::string witness_label;
  size_t corners_checked = 0;
};

LinearityCertificate mld_box_certify(const Germ& germ, const std::vector<FormalReal>& v, const Rational& delta,
                                     const FormalReal& eps);
// Re-checks the stored invariants; empty string when everything holds.
std::string verify_certificate(const Germ& germ, const LinearityCertificate& cert, const FormalReal& eps);

struct DeltaSearch {
  Rational delta;
  int halvings = 0;
  LinearityCertificate cert;
};

DeltaSearch find_delta(const Germ& germ, const std::vector<FormalReal>& v, const FormalReal& eps,
                       const Rational& delta0, int max_halvings);

struct GermPart {
  FormalReal a;
  std::vector<Rational> coeffs;
  Rational eps;
  Rational pld;
};

struct GermDecomposition {
  std::vector<GermPart> parts;
  Integer index;
  LinearityCertificate cert;
};

GermDecomposition decompose_germ(const DualGraph& g, const std::vector<FormalReal>& v, const FormalReal& eps,
                                 const FormalReal& eps_pld);
// First failing condition (1..7) or 0.
int check_germ_decomposition(const DualGraph& g, const std::vector<FormalReal>& v, const FormalReal& eps,
                             const FormalReal& eps_pld, const GermDecomposition& d);

}  // namespace surfcomp
