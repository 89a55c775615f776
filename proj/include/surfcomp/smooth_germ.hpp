#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcomp/affine.hpp"
#include "surfcomp/dual_graph.hpp"
#include "surfcomp/numbers.hpp"

namespace surfcomp {

// Point p > 0 lies on E_host; with host2 it is the satellite E_host ^ E_host2.
struct ClusterPoint {
  std::optional<size_t> host;
  std::optional<size_t> host2;
  bool operator==(const ClusterPoint& o) const { return host == o.host && host2 == o.host2; }
};

struct ClusterBranch {
  std::string name;
  std::vector<size_t> through;  // starts at the origin, each point lies on the previous one's curve
  std::vector<long> mults;      // same length as through
  bool operator==(const ClusterBranch& o) const {
    return name == o.name && through == o.through && mults == o.mults;
  }
};

class Cluster {
 public:
  std::vector<ClusterPoint> points;
  std::vector<ClusterBranch> branches;

  size_t add_point(std::optional<size_t> host = std::nullopt, std::optional<size_t> host2 = std::nullopt);
  size_t add_branch(const std::string& name, std::vector<size_t> through, std::vector<long> mults = {});
  std::vector<std::string> branch_names() const;
  long mult(size_t branch, size_t point) const;
  // q lies on the strict transform of E_p.
  bool proximate(size_t q, size_t p) const;
  // Intersecting pairs of exceptional curves on the final model.
  std::vector<std::pair<size_t, size_t>> final_nodes() const;
  void validate() const;
  bool operator==(const Cluster& o) const { return points == o.points && branches == o.branches; }
};

using GermBoundary = Boundary;

std::vector<AffineForm> cluster_forms(const Cluster& cl);
std::vector<FormalReal> cluster_log_discrepancies(const Cluster& cl, const GermBoundary& b);
Cluster resolve_to_snc(const Cluster& cl);
// Strata of an already resolved cluster.
std::vector<Stratum> cluster_strata(const Cluster& resolved);
bool germ_is_lc(const Cluster& cl, const GermBoundary& b);

struct GermMld {
  FormalReal value;
  Stratum witness;
  Integer l0;
  std::vector<Integer> l;  // value = l0 - sum l_i b_i
  Cluster resolved;
};

GermMld mld_smooth_germ(const Cluster& cl, const GermBoundary& b);

// Points from the origin to k along first hosts.
std::vector<size_t> host_path(const Cluster& cl, size_t k);

struct NakamuraReport {
  Rational N;
  size_t instances = 0;
  Cluster worst;
  std::vector<Rational> worst_coeffs;
  std::string witness;
  Rational worst_mld;
};

NakamuraReport nakamura_scan(const std::vector<Rational>& gamma, int max_points, int max_branches);
NakamuraReport nakamura_scan_serial(const std::vector<Rational>& gamma, int max_points, int max_branches);

// All cluster shapes (points only) up to max_points, in scan order.
std::vector<Cluster> enumerate_shapes(int max_points);

}  // namespace surfcomp
