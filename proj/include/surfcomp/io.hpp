#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surfcomp/complements.hpp"
#include "surfcomp/diophantine.hpp"
#include "surfcomp/dual_graph.hpp"
#include "surfcomp/numbers.hpp"
#include "surfcomp/smooth_germ.hpp"

namespace surfcomp {

struct GraphInput {
  BasisPtr basis;
  DualGraph graph;
  Boundary coeffs;  // indexed like graph.branches
};

struct ClusterInput {
  BasisPtr basis;
  Cluster cluster;
  Boundary coeffs;
};

struct Dim1Input {
  BasisPtr basis;
  Dim1Germ germ;
};

struct WeightInput {
  BasisPtr basis;
  WeightSystem ws;
  std::vector<FormalReal> gamma;  // defaults to the column sums
  Integer p = 1;
};

struct DecompInput {
  BasisPtr basis;
  std::vector<FormalReal> boundary;
  FormalReal eps;
  std::vector<DecompPart> parts;
  GermContext ctx;
};

using AnyInput = std::variant<GraphInput, ClusterInput, Dim1Input, EllipticBase, WeightInput, DecompInput>;

GraphInput parse_graph(std::string_view text);
ClusterInput parse_cluster(std::string_view text);
Dim1Input parse_dim1(std::string_view text);
EllipticBase parse_elliptic(std::string_view text);
WeightInput parse_weights(std::string_view text);
DecompInput parse_decomposition(std::string_view text);
// Picks the grammar from the keywords present.
AnyInput parse_input(std::string_view text);

std::string print(const GraphInput& x);
std::string print(const ClusterInput& x);
std::string print(const Dim1Input& x);
std::string print(const EllipticBase& x);
std::string print(const WeightInput& x);
std::string print(const DecompInput& x);

bool operator==(const GraphInput& a, const GraphInput& b);
bool operator==(const ClusterInput& a, const ClusterInput& b);
bool operator==(const Dim1Input& a, const Dim1Input& b);
bool operator==(const WeightInput& a, const WeightInput& b);
bool operator==(const DecompInput& a, const DecompInput& b);

std::string read_file(const std::string& path);

}  // namespace surfcomp
