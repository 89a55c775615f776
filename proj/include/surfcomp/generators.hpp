#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "surfcomp/diophantine.hpp"
#include "surfcomp/dual_graph.hpp"
#include "surfcomp/numbers.hpp"
#include "surfcomp/smooth_germ.hpp"

// Seeded instance generators shared by the verify suites, the acceptance
// binary and the unit tests.
namespace surfcomp::gen {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<size_t>(uniform(rng, 0, static_cast<long>(xs.size()) - 1))];
}

// A composed chain left - 2^A - right together with the closed-form data.
struct ChainFamily {
  DualGraph left;   // v_1 is the outer end
  DualGraph right;  // v_1 is the outer end
  long A = 1;
  DualGraph graph;
  Boundary b;  // indexed like graph.branches
  ChainMQ mq1, mq2;
  FormalReal alpha1, alpha2;
  std::vector<Rational> gamma;  // distinct coefficients on the marks
};

// Ends with m <= max_m and random marks, A in [1, max_A]. Retries until the
// pair is lc, each nonempty end has weight >= 3 or a positive mark at its
// inner vertex, and A * min(alpha_i / (m_i - q_i)) >= 1.
ChainFamily chain_family(Rng& rng, long max_m, long max_A);
ChainFamily with_A(const ChainFamily& f, long A);
bool closed_form_applies(const ChainFamily& f);

// Negative definite tree with weights in [min_weight, max_weight], optional
// genus and optional marks with rational coefficients in [0,1].
DualGraph negdef_tree(Rng& rng, size_t max_vertices, long min_weight, long max_weight, bool genus, bool marks);
Boundary random_coeffs(Rng& rng, size_t count, const std::vector<Rational>& pool);

struct GraphPair {
  DualGraph g;
  Boundary b;
};

// Genus-0 trees, mostly minimal (weight-1 vertices are rare), lc.
GraphPair lc_graph(Rng& rng, size_t max_vertices);

struct ClusterPair {
  Cluster c;
  std::vector<Rational> b;
};

// Smooth branches running along host paths; proximity-valid.
ClusterPair smooth_cluster(Rng& rng, int max_points, int max_branches, const std::vector<Rational>& pool);

// {sqrt 2}, {sqrt 3} and {sqrt 2, sqrt 3}.
std::vector<BasisPtr> audit_bases();
FormalReal random_irrational(Rng& rng, const BasisPtr& basis, long max_num, long max_den);
DirectionRequest direction_request(Rng& rng, const BasisPtr& basis);

struct WeightInstance {
  WeightSystem ws;
  std::vector<FormalReal> gamma;
  Integer p = 1;
};

WeightInstance weight_instance(Rng& rng, const BasisPtr& basis);

// Non-negative values with integer coordinates in [-3,3]; at most three are
// irrational.
std::vector<FormalReal> span_input(Rng& rng, const BasisPtr& basis);

}  // namespace surfcomp::gen
