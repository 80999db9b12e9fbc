#include "ztwo/presets.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ztwo::presets {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m = IntMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    m.block(at, at, b.rows(), b.rows()) = b;
    at += b.rows();
  }
  return m;
}

// Involution swapping the coordinate ranges [a, a+len) and [b, b+len),
// identity elsewhere.
void swap_ranges(IntMatrix& g, Eigen::Index a, Eigen::Index b, Eigen::Index len) {
  for (Eigen::Index i = 0; i < len; ++i) {
    g(a + i, a + i) = 0;
    g(b + i, b + i) = 0;
    g(a + i, b + i) = 1;
    g(b + i, a + i) = 1;
  }
}

}  // namespace

IntMatrix e8_gram() {
  // Negated Cartan matrix of the E8 diagram, nodes 1..8 with edges
  // 1-3, 3-4, 4-5, 5-6, 6-7, 7-8 and 2-4.
  IntMatrix m = IntMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) m(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [i, j] : edges) {
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return m;
}

IntMatrix hyperbolic_gram() {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  return h;
}

LatticePreset lattice_preset(const std::string& name) {
  const std::string key = upper(name);
  const IntMatrix e8 = e8_gram();
  const IntMatrix h = hyperbolic_gram();
  if (key == "E8") {
    return {lattice::BilinearLattice(e8), lattice::LatticeInvolution::identity(8)};
  }
  if (key == "H") {
    return {lattice::BilinearLattice(h), lattice::LatticeInvolution::identity(2)};
  }
  if (key == "K3") {
    IntMatrix gram = block_diagonal({e8, e8, h, h, h});
    IntMatrix g = IntMatrix::Identity(22, 22);
    swap_ranges(g, 0, 8, 8);
    return {lattice::BilinearLattice(std::move(gram)), lattice::LatticeInvolution(std::move(g))};
  }
  if (key == "K3K3") {
    IntMatrix gram = block_diagonal({e8, e8, e8, e8, h, h, h, h, h, h});
    IntMatrix g = IntMatrix::Identity(44, 44);
    swap_ranges(g, 0, 16, 16);  // the two double-E8 blocks
    swap_ranges(g, 32, 34, 2);  // one hyperbolic pair; the last four planes stay fixed
    return {lattice::BilinearLattice(std::move(gram)), lattice::LatticeInvolution(std::move(g))};
  }
  if (key == "A" || key == "B") {
    realization::FramedLinkMatrix link = link_preset(key);
    return {lattice::BilinearLattice(link.matrix()),
            lattice::LatticeInvolution::identity(link.components())};
  }
  throw std::invalid_argument("unknown lattice preset: " + name);
}

indexthy::ManifoldProfile profile_preset(const std::string& name) {
  const std::string key = lower(name);
  if (key == "k3") return {24, -16, 0, 3, 3, true};
  if (key == "k3k3") return {46, -32, 0, 6, 5, true};
  throw std::invalid_argument("unknown profile preset: " + name);
}

realization::FramedLinkMatrix link_preset(const std::string& name) {
  const std::string key = upper(name);
  if (key == "A")
    return realization::hopf_linking_matrix(8, {0, 0, 0, 0, 2, 2, 2, 2});
  if (key == "B")
    return realization::hopf_linking_matrix(6, {0, 0, 0, 2, 2, 2});
  throw std::invalid_argument("unknown link preset: " + name);
}

}  // namespace ztwo::presets
