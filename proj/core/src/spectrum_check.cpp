#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include <Eigen/Dense>

#include "gjt/binomial.hpp"
#include "gjt/error.hpp"
#include "gjt/graph.hpp"

namespace gjt {

namespace {

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency of G(n, k, L) built from element lists, so any n works (the
// bitmask representation behind materialize stops at 64).
Eigen::MatrixXd adjacency_matrix(const LSystemSpec& spec) {
  const int n = spec.params().n();
  const int k = spec.params().k();
  std::vector<std::vector<int>> sets;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> set;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) set.push_back(i);
    }
    sets.push_back(std::move(set));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  const auto v = static_cast<Eigen::Index>(sets.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  for (Eigen::Index i = 0; i < v; ++i) {
    for (Eigen::Index j = i + 1; j < v; ++j) {
      std::vector<int> common;
      const auto& x = sets[static_cast<std::size_t>(i)];
      const auto& y = sets[static_cast<std::size_t>(j)];
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      if (spec.non_edge(static_cast<int>(common.size()))) continue;
      a(i, j) = 1.0;
      a(j, i) = 1.0;
    }
  }
  return a;
}

}  // namespace

std::vector<double> dense_spectrum(const ExplicitGraph& graph) {
  const auto v = static_cast<Eigen::Index>(graph.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  for (Eigen::Index i = 0; i < v; ++i) {
    graph.adjacency[static_cast<std::size_t>(i)].for_each(
        [&](std::size_t j) { a(i, static_cast<Eigen::Index>(j)) = 1.0; });
  }
  return sorted_eigenvalues(a);
}

bool numeric_spectrum_check(const LSystemSpec& spec) {
  const auto& p = spec.params();
  if (binom(p.n(), p.k()) > static_cast<unsigned long>(kSpectrumCheckCap)) {
    throw CapError("numeric spectrum check limited to C(n,k) <= " + std::to_string(kSpectrumCheckCap));
  }
  const std::vector<double> numeric = sorted_eigenvalues(adjacency_matrix(spec));

  const EigTable exact = eig_of_vector(SchemeVector::adjacency(spec));
  std::vector<double> expected;
  for (std::size_t j = 0; j < exact.values.size(); ++j) {
    const unsigned long m = exact.multiplicities[j].get_ui();
    for (unsigned long c = 0; c < m; ++c) expected.push_back(exact.values[j].to_double());
  }
  std::sort(expected.begin(), expected.end());

  if (expected.size() != numeric.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(expected[i] - numeric[i]) > 1e-6) return false;
  }
  return true;
}

}  // namespace gjt
