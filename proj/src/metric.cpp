#include "nmc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nmc/errors.hpp"
#include "nmc/random.hpp"

namespace nmc {

namespace {

constexpr double kPi = std::numbers::pi;

struct Coeffs {
  double bg = 0.0;  // value at coordinates outside the sparse support
  double a = 0.0;   // extra weight at the node's own coordinate
  double c = 0.0;   // extra weight at each neighbor coordinate
};

// Kernel-normalized row of v as bg + a*e_v + c*Σ_{u∈N(v)} e_u, a unit vector.
// All off-diagonal entries of L_x are 1, so cosine, Pearson and Spearman
// normalization each collapse to three per-node scalars. Returns nullopt when
// the kernel is undefined for the row (zero row / zero variance).
std::optional<Coeffs> embed_node(const RowMatrix& mtx, Kernel kernel, NodeId v) {
  const Graph& g = mtx.graph();
  const double n = static_cast<double>(g.num_nodes());
  const double lam = mtx.lambda(v);
  const double deg = static_cast<double>(g.degree(v));

  switch (kernel) {
    case Kernel::kCosine: {
      const double norm = mtx.norm(v);
      if (norm == 0.0) return std::nullopt;
      return Coeffs{0.0, lam / norm, 1.0 / norm};
    }
    case Kernel::kPearson: {
      const double mean = (lam + deg) / n;
      const double var = std::max(0.0, (lam * lam + deg) - n * mean * mean);
      if (var <= 0.0) return std::nullopt;
      const double s = std::sqrt(var);
      return Coeffs{-mean / s, lam / s, 1.0 / s};
    }
    case Kernel::kSpearman: {
      // Row values are 0 (zeros elsewhere), 1 (neighbors) and λ (self);
      // average-rank the merged value groups.
      const double zeros = n - 1.0 - deg;
      struct Group {
        double value;
        double count;
      };
      std::vector<Group> groups;
      auto add = [&](double value, double count) {
        if (count <= 0.0) return;
        for (auto& grp : groups) {
          if (grp.value == value) {
            grp.count += count;
            return;
          }
        }
        groups.push_back({value, count});
      };
      add(0.0, zeros);
      add(1.0, deg);
      add(lam, 1.0);
      std::sort(groups.begin(), groups.end(),
                [](const Group& x, const Group& y) { return x.value < y.value; });
      if (groups.size() < 2) return std::nullopt;

      const double mean_rank = (n + 1.0) / 2.0;
      double start = 0.0;
      double var = 0.0;
      double rank_zero = 0.0, rank_one = 0.0, rank_self = 0.0;
      for (const auto& grp : groups) {
        const double rank = start + (grp.count + 1.0) / 2.0;
        start += grp.count;
        var += grp.count * (rank - mean_rank) * (rank - mean_rank);
        if (grp.value == 0.0) rank_zero = rank;
        if (grp.value == 1.0) rank_one = rank;
        if (grp.value == lam) rank_self = rank;
      }
      if (var <= 0.0) return std::nullopt;
      const double s = std::sqrt(var);
      const double bg = zeros > 0.0 ? (rank_zero - mean_rank) / s : 0.0;
      const double a = (rank_self - mean_rank) / s - bg;
      const double c = deg > 0.0 ? (rank_one - mean_rank) / s - bg : 0.0;
      return Coeffs{bg, a, c};
    }
  }
  return std::nullopt;
}

double pair_dot(const Graph& g, NodeId i, NodeId j, const Coeffs& ci, const Coeffs& cj) {
  const double n = static_cast<double>(g.num_nodes());
  const double sum_i = ci.a + ci.c * static_cast<double>(g.degree(i));
  const double sum_j = cj.a + cj.c * static_cast<double>(g.degree(j));
  double dot = n * ci.bg * cj.bg + ci.bg * sum_j + cj.bg * sum_i;
  if (g.has_edge(i, j)) dot += ci.a * cj.c + cj.a * ci.c;
  dot += ci.c * cj.c * static_cast<double>(g.common_neighbors(i, j));
  return std::clamp(dot, -1.0, 1.0);
}

double apply_phi_impl(Phi phi, double sim) {
  switch (phi) {
    case Phi::kArccos:
      return std::acos(std::clamp(sim, -1.0, 1.0));
    case Phi::kIdentity:
      return 1.0 - sim;
    case Phi::kSqrt:
      return std::sqrt(std::max(0.0, 1.0 - sim));
  }
  return 0.0;
}

}  // namespace

const char* to_string(Kernel k) {
  switch (k) {
    case Kernel::kCosine: return "cosine";
    case Kernel::kPearson: return "pearson";
    case Kernel::kSpearman: return "spearman";
  }
  return "?";
}

const char* to_string(Phi p) {
  switch (p) {
    case Phi::kArccos: return "arccos";
    case Phi::kIdentity: return "identity";
    case Phi::kSqrt: return "sqrt";
  }
  return "?";
}

std::optional<Kernel> kernel_from_string(const std::string& s) {
  if (s == "cosine") return Kernel::kCosine;
  if (s == "pearson") return Kernel::kPearson;
  if (s == "spearman") return Kernel::kSpearman;
  return std::nullopt;
}

std::optional<Phi> phi_from_string(const std::string& s) {
  if (s == "arccos") return Phi::kArccos;
  if (s == "identity") return Phi::kIdentity;
  if (s == "sqrt") return Phi::kSqrt;
  return std::nullopt;
}

RowMatrix::RowMatrix(const Graph& g, LambdaPolicy policy) : g_(&g), policy_(policy) {
  const NodeId n = g.num_nodes();
  lambda_.resize(n);
  norm_.resize(n);
  double mean_degree = 0.0;
  if (policy.mode == LambdaPolicy::Mode::kMeanDegree && n > 0) {
    mean_degree = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
  }
  for (NodeId v = 0; v < n; ++v) {
    double lam = 0.0;
    switch (policy.mode) {
      case LambdaPolicy::Mode::kConstant: lam = policy.value; break;
      case LambdaPolicy::Mode::kDegree: lam = static_cast<double>(g.degree(v)); break;
      case LambdaPolicy::Mode::kMeanDegree: lam = mean_degree; break;
    }
    if (lam < 0.0) throw std::invalid_argument("lambda must be non-negative");
    lambda_[v] = lam;
    norm_[v] = std::sqrt(lam * lam + static_cast<double>(g.degree(v)));
  }
}

std::size_t RowMatrix::row_nonzeros(NodeId v) const {
  return g_->degree(v) + (lambda_[v] > 0.0 ? 1 : 0);
}

std::vector<double> RowMatrix::dense_row(NodeId v) const {
  std::vector<double> row(g_->num_nodes(), 0.0);
  row[v] = lambda_[v];
  for (NodeId u : g_->neighbors(v)) row[u] = 1.0;
  return row;
}

RowMatrix build_lx(const Graph& g, LambdaPolicy policy) { return RowMatrix(g, policy); }

std::optional<double> row_similarity(const RowMatrix& mtx, NodeId i, NodeId j, Kernel kernel) {
  if (i == j) return 1.0;
  auto ci = embed_node(mtx, kernel, i);
  auto cj = embed_node(mtx, kernel, j);
  if (!ci || !cj) return std::nullopt;
  return pair_dot(mtx.graph(), i, j, *ci, *cj);
}

double distance(const RowMatrix& mtx, NodeId i, NodeId j, const MetricConfig& cfg) {
  if (i == j) return 0.0;
  auto sim = row_similarity(mtx, i, j, cfg.kernel);
  if (!sim) return kPi;
  return apply_phi_impl(cfg.phi, *sim);
}

MetricSpace::MetricSpace(const RowMatrix& mtx, MetricConfig cfg)
    : mtx_(&mtx),
      cfg_(cfg),
      certification_(cfg.certified() ? Certification::kCertified : Certification::kUnvalidated) {
  const NodeId n = mtx.graph().num_nodes();
  bg_.resize(n);
  a_.resize(n);
  c_.resize(n);
  defined_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    auto coeffs = embed_node(mtx, cfg.kernel, v);
    if (coeffs) {
      bg_[v] = coeffs->bg;
      a_[v] = coeffs->a;
      c_[v] = coeffs->c;
      defined_[v] = 1;
    }
  }
}

std::optional<double> MetricSpace::similarity(NodeId i, NodeId j) const {
  if (i == j) return 1.0;
  if (!defined_[i] || !defined_[j]) return std::nullopt;
  Coeffs ci{bg_[i], a_[i], c_[i]};
  Coeffs cj{bg_[j], a_[j], c_[j]};
  return pair_dot(mtx_->graph(), i, j, ci, cj);
}

double MetricSpace::distance(NodeId i, NodeId j) const {
  if (i == j) return 0.0;
  auto sim = similarity(i, j);
  if (!sim) {
    undefined_events_.fetch_add(1, std::memory_order_relaxed);
    return kPi;
  }
  return apply_phi_impl(cfg_.phi, *sim);
}

void MetricSpace::accept_validation(const MetricReport& report) {
  if (certification_ == Certification::kUnvalidated && report.passed) {
    certification_ = Certification::kValidated;
  }
}

std::vector<double> MetricSpace::unit_row(NodeId v) const {
  const Graph& g = mtx_->graph();
  std::vector<double> row(g.num_nodes(), bg_[v]);
  row[v] += a_[v];
  for (NodeId u : g.neighbors(v)) row[u] += c_[v];
  return row;
}

double MetricSpace::apply_phi(double sim) const { return apply_phi_impl(cfg_.phi, sim); }

MetricReport validate_pseudometric(const RowMatrix& mtx, const MetricConfig& cfg,
                                   TripleSample sample) {
  MetricSpace space(mtx, cfg);
  const NodeId n = mtx.graph().num_nodes();
  MetricReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();

  // Pair axioms: d(v,v) = 0, symmetry, non-negativity.
  auto check_pair = [&](NodeId i, NodeId j) {
    const double dij = space.distance(i, j);
    const double dji = space.distance(j, i);
    if (dij < -report.tolerance || std::abs(dij - dji) > report.tolerance) {
      report.axiom_failure = true;
    }
  };

  const bool exhaustive = sample.mode == TripleSample::Mode::kExhaustive;
  if (exhaustive) {
    for (NodeId v = 0; v < n; ++v) {
      if (space.distance(v, v) != 0.0) report.axiom_failure = true;
    }
    // Materialize pair distances when feasible; n^3 triple checks dominate.
    std::vector<double> dist;
    const bool cache = n <= 1024;
    if (cache) {
      dist.resize(static_cast<std::size_t>(n) * n);
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
          dist[static_cast<std::size_t>(i) * n + j] = space.distance(i, j);
        }
      }
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
          const double dij = dist[static_cast<std::size_t>(i) * n + j];
          const double dji = dist[static_cast<std::size_t>(j) * n + i];
          if (dij < -report.tolerance || std::abs(dij - dji) > report.tolerance) {
            report.axiom_failure = true;
          }
        }
      }
    } else {
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) check_pair(i, j);
      }
    }
    auto d = [&](NodeId i, NodeId j) {
      return cache ? dist[static_cast<std::size_t>(i) * n + j] : space.distance(i, j);
    };
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dij = d(i, j);
        for (NodeId k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          const double violation = dij - d(i, k) - d(k, j);
          ++report.triples_checked;
          if (violation > report.worst_violation) {
            report.worst_violation = violation;
            report.witness = {i, j, k};
          }
        }
      }
    }
  } else {
    rng::Engine eng(rng::sub_seed(sample.seed, "validate"));
    for (std::uint64_t t = 0; t < sample.triples && n >= 1; ++t) {
      const NodeId i = static_cast<NodeId>(rng::below(eng, n));
      const NodeId j = static_cast<NodeId>(rng::below(eng, n));
      const NodeId k = static_cast<NodeId>(rng::below(eng, n));
      if (space.distance(i, i) != 0.0) report.axiom_failure = true;
      check_pair(i, j);
      const double violation = space.distance(i, j) - space.distance(i, k) - space.distance(k, j);
      ++report.triples_checked;
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        report.witness = {i, j, k};
      }
    }
  }

  if (report.triples_checked == 0) report.worst_violation = 0.0;
  report.passed = !report.axiom_failure && report.worst_violation <= report.tolerance;
  return report;
}

}  // namespace nmc
