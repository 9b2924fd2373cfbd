#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace compactseg {

// Rectangular pixel/voxel lattice. Linear indices run with the first axis
// fastest: index = x + dims[0] * (y + dims[1] * z).
class GridDomain {
 public:
  // dims must hold 2 or 3 entries, each >= 1.
  explicit GridDomain(std::vector<int> dims);

  int ndim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::int64_t size() const { return size_; }

  std::int64_t index(std::span<const int> coord) const;
  std::vector<int> coord(std::int64_t index) const;

  bool operator==(const GridDomain&) const = default;

 private:
  std::vector<int> dims_;
  std::int64_t size_ = 0;
};

// Per-pixel feature vectors, pixel-major layout: values[i * k_features + k].
struct FeatureImage {
  GridDomain domain;
  int k_features = 1;
  std::vector<double> values;
};

struct WeightConfig {
  int connectivity = 4;       // 4 or 8 in 2D, 6 or 26 in 3D
  std::vector<double> sigma;  // per-feature sensitivities, all >= 0
  bool uniform = true;        // keep all weights at 1
};

// One undirected lattice edge, stored once with i < j.
struct Edge {
  std::int32_t i;
  std::int32_t j;
  double w;
};

// Neighborhood graph over a GridDomain. The edge list defines the graph
// Laplacian L implicitly; edge order is fixed at construction so that every
// reduction over edges is reproducible.
struct WeightedGraph {
  GridDomain domain;
  std::vector<Edge> edges;
};

int default_connectivity(int ndim);

// Lattice edges with unit weights for the given connectivity.
WeightedGraph build_edges(const GridDomain& domain, int connectivity);

// Replaces every weight by exp(-sum_k sigma_k (x_ik - x_jk)^2).
WeightedGraph apply_feature_weights(const WeightedGraph& graph,
                                    const FeatureImage& features,
                                    const WeightConfig& cfg);

// sum over edges of w_ij (v_i - v_j)^2  ==  v' L v.
double quadratic_form(const WeightedGraph& graph, std::span<const double> v);

// (L v)_i = sum_j w_ij (v_i - v_j).
std::vector<double> laplacian_matvec(const WeightedGraph& graph,
                                     std::span<const double> v);

// Weighted degree of each node, deg_i = sum_j w_ij (the diagonal of L).
std::vector<double> node_degrees(const WeightedGraph& graph);

}  // namespace compactseg
