#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "nmc/graph.hpp"

namespace nmc {

enum class Kernel { kCosine, kPearson, kSpearman };
enum class Phi { kArccos, kIdentity, kSqrt };

const char* to_string(Kernel k);
const char* to_string(Phi p);
std::optional<Kernel> kernel_from_string(const std::string& s);
std::optional<Phi> phi_from_string(const std::string& s);

/// Diagonal policy for L_x = D(λ) + A: a fixed non-negative constant, or a
/// per-node value (the node's degree, or the graph's mean degree).
struct LambdaPolicy {
  enum class Mode { kConstant, kDegree, kMeanDegree };
  Mode mode = Mode::kConstant;
  double value = 2.0;  // used in kConstant mode

  static LambdaPolicy constant(double v) { return {Mode::kConstant, v}; }
  static LambdaPolicy degree() { return {Mode::kDegree, 0.0}; }
  static LambdaPolicy mean_degree() { return {Mode::kMeanDegree, 0.0}; }
};

/// The modified adjacency matrix L_x = D(λ) + A, one sparse row per node.
/// Off-diagonal entries equal adjacency entries exactly; the diagonal entry
/// of row v is λ(v). Row norms are cached at construction. The Graph must
/// outlive the RowMatrix.
class RowMatrix {
 public:
  RowMatrix(const Graph& g, LambdaPolicy policy);

  const Graph& graph() const { return *g_; }
  const LambdaPolicy& policy() const { return policy_; }

  double lambda(NodeId v) const { return lambda_[v]; }
  double norm(NodeId v) const { return norm_[v]; }
  bool zero_row(NodeId v) const { return norm_[v] == 0.0; }

  /// deg(v)+1 when λ(v) > 0, deg(v) otherwise.
  std::size_t row_nonzeros(NodeId v) const;

  /// Materialized row of length n. Intended for tests and small graphs.
  std::vector<double> dense_row(NodeId v) const;

 private:
  const Graph* g_;
  LambdaPolicy policy_;
  std::vector<double> lambda_;
  std::vector<double> norm_;
};

RowMatrix build_lx(const Graph& g, LambdaPolicy policy);

struct MetricConfig {
  Kernel kernel = Kernel::kCosine;
  Phi phi = Phi::kArccos;
  LambdaPolicy policy = LambdaPolicy::constant(2.0);

  /// (cosine, arccos) is the configuration whose pseudometric axioms hold by
  /// construction; everything else must pass validate_pseudometric before
  /// clustering will accept it.
  bool certified() const { return kernel == Kernel::kCosine && phi == Phi::kArccos; }
};

/// Kernel similarity of two rows, in [-1, 1]. Exactly 1 for i == j.
/// nullopt = undefined (zero row under cosine, constant row under
/// pearson/spearman).
std::optional<double> row_similarity(const RowMatrix& mtx, NodeId i, NodeId j, Kernel kernel);

/// φ applied to the kernel dissimilarity: arccos(σ), 1-σ, or sqrt(1-σ).
/// Undefined similarity maps to π with a diagnostic flag (see MetricSpace).
double distance(const RowMatrix& mtx, NodeId i, NodeId j, const MetricConfig& cfg);

struct MetricReport {
  bool passed = false;
  double worst_violation = 0.0;           // max of d(i,j) - d(i,k) - d(k,j)
  std::array<NodeId, 3> witness{0, 0, 0}; // (i, j, k) attaining it
  std::uint64_t triples_checked = 0;
  bool axiom_failure = false;             // non-negativity, identity or symmetry broke
  double tolerance = 1e-9;
};

struct TripleSample {
  enum class Mode { kExhaustive, kRandom };
  Mode mode = Mode::kExhaustive;
  std::uint64_t triples = 0;  // kRandom only
  std::uint64_t seed = 0;     // kRandom only

  static TripleSample exhaustive() { return {}; }
  static TripleSample random(std::uint64_t triples, std::uint64_t seed) {
    return {Mode::kRandom, triples, seed};
  }
};

/// Checks non-negativity, d(v,v)=0, symmetry and the triangle inequality over
/// the sampled triples. Failure is a report, not an error.
MetricReport validate_pseudometric(const RowMatrix& mtx, const MetricConfig& cfg,
                                   TripleSample sample = TripleSample::exhaustive());

enum class Certification { kCertified, kValidated, kUnvalidated };

/// Precomputed embedding of the rows for one (kernel, φ) choice. Every node's
/// kernel-normalized row has the form  bg·1 + a·e_v + c·Σ_{u∈N(v)} e_u  with
/// unit Euclidean norm, because all off-diagonal L_x entries equal 1. That
/// makes node-node similarity O(deg_i + deg_j) and node-center products
/// O(deg) for every kernel, without materializing any n×n matrix.
class MetricSpace {
 public:
  MetricSpace(const RowMatrix& mtx, MetricConfig cfg);

  const RowMatrix& matrix() const { return *mtx_; }
  const Graph& graph() const { return mtx_->graph(); }
  const MetricConfig& config() const { return cfg_; }

  /// Exactly 1 for i == j; nullopt when either row's embedding is undefined.
  std::optional<double> similarity(NodeId i, NodeId j) const;

  /// d(i,i) = 0; undefined pairs map to π and bump undefined_events().
  double distance(NodeId i, NodeId j) const;

  bool embedding_defined(NodeId v) const { return defined_[v] != 0; }
  std::uint64_t undefined_events() const { return undefined_events_.load(); }

  Certification certification() const { return certification_; }
  /// Promotes kUnvalidated to kValidated when the report passed.
  void accept_validation(const MetricReport& report);

  // Embedding coefficients, exposed for the clustering inner loops.
  double coeff_background(NodeId v) const { return bg_[v]; }
  double coeff_self(NodeId v) const { return a_[v]; }
  double coeff_neighbor(NodeId v) const { return c_[v]; }

  /// Materialized unit embedding of node v (length n). Tests and centers.
  std::vector<double> unit_row(NodeId v) const;

  double apply_phi(double sim) const;

 private:
  const RowMatrix* mtx_;
  MetricConfig cfg_;
  Certification certification_;
  std::vector<double> bg_, a_, c_;
  std::vector<std::uint8_t> defined_;
  mutable std::atomic<std::uint64_t> undefined_events_{0};
};

}  // namespace nmc
