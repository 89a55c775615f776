#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcomp/affine.hpp"
#include "surfcomp/numbers.hpp"

namespace surfcomp {

struct Vertex {
  long weight = 2;  // w = -E.E
  long genus = 0;
};

struct Incidence {
  size_t branch = 0;
  long mult = 1;  // local intersection multiplicity with the host curve
};

struct MarkedPoint {
  size_t host = 0;
  std::optional<size_t> host2;
  std::vector<Incidence> incidences;
};

// Coefficients indexed by branch id.
using Boundary = std::vector<FormalReal>;

class DualGraph {
 public:
  std::vector<Vertex> vertices;
  std::vector<std::pair<size_t, size_t>> edges;
  std::vector<MarkedPoint> marks;
  std::vector<std::string> branches;

  size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  size_t add_vertex(long weight, long genus = 0);
  void add_edge(size_t a, size_t b);
  size_t add_branch(const std::string& name);
  // Index of a named branch, adding it if new.
  size_t branch_index(const std::string& name);
  void add_mark(size_t vertex, size_t branch, long mult = 1);

  bool adjacent(size_t a, size_t b) const;
  std::vector<std::vector<size_t>> adjacency() const;
  size_t degree(size_t k) const;
  bool is_connected() const;
  bool is_tree() const;
  // Edges are exactly {i, i+1}.
  bool is_ordered_chain() const;
  std::vector<long> weights() const;
  std::vector<std::vector<Integer>> matrix() const;
  // Subgraph on the kept vertices, relabelled in order, without marks.
  DualGraph induced(const std::vector<bool>& keep) const;
  // Vertices of the unique path from a to b in a tree (inclusive).
  std::vector<size_t> tree_path(size_t a, size_t b) const;
  // B_Y . E_k as a linear form in the branch coefficients.
  AffineForm boundary_dot(size_t k) const;
  void validate() const;
  bool operator==(const DualGraph& o) const;
};

struct DetInfo {
  Integer delta;
  bool negdef = true;
};

DetInfo det_and_negdef(const DualGraph& g);
Integer delta(const DualGraph& g);

// a_k as affine forms in the branch coefficients (exact linear solve).
std::vector<AffineForm> log_discrepancy_forms(const DualGraph& g);
// Same via the path-cofactor formula; trees only.
std::vector<AffineForm> cofactor_forms(const DualGraph& g);
std::vector<FormalReal> log_discrepancies(const DualGraph& g, const Boundary& b);

struct PldResult {
  std::optional<FormalReal> value;  // nullopt means +infinity
  bool lc = true;
};

PldResult pld(const DualGraph& g, const Boundary& b);

struct ChainMQ {
  Integer m = 1;
  Integer q = 0;
  bool operator==(const ChainMQ& o) const { return m == o.m && q == o.q; }
};

// Weights listed w_1..w_n; m/q = w_n - 1/(w_{n-1} - ... 1/w_1).
ChainMQ chain_to_mq(const std::vector<long>& weights);
std::vector<long> mq_to_chain(const ChainMQ& mq);

AffineForm alpha_form(const DualGraph& chain);
FormalReal alpha_invariant(const DualGraph& chain, const Boundary& b);

// The two branch values of the composed-chain formula; pld is their minimum.
std::pair<FormalReal, FormalReal> pld_closed_form_branches(const Integer& m1, const Integer& q1, const FormalReal& alpha1,
                                                           const Integer& m2, const Integer& q2, const FormalReal& alpha2,
                                                           const Integer& A);
FormalReal pld_closed_form(const Integer& m1, const Integer& q1, const FormalReal& alpha1, const Integer& m2,
                           const Integer& q2, const FormalReal& alpha2, const Integer& A);

// left (v_1 outer, v_n inner) - A weight-2 vertices - right reversed, so both
// v_1 ends face outward. Branches are merged by name.
DualGraph compose_family(const DualGraph& left, long A, const DualGraph& right);

std::vector<Stratum> graph_strata(const DualGraph& g);

struct MldResult {
  FormalReal value;
  Stratum witness;
};

// Least value over the strata; ties go to the smallest depth, then to the
// first stratum in listing order.
MldResult minimize_strata(const std::vector<Stratum>& strata, const Boundary& b);
MldResult mld_log_smooth(const DualGraph& g, const Boundary& b);
bool is_snc_certified(const DualGraph& g);

struct CartierIndex {
  Integer index;
  bool descent_verified = true;
};

CartierIndex cartier_index(const DualGraph& g, const Boundary& b);

DualGraph chain_graph(const std::vector<long>& weights);
DualGraph ade_A(int n);
DualGraph ade_D(int n);
DualGraph ade_E(int n);

}  // namespace surfcomp
