#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ztwo/lattice.hpp"
#include "ztwo/presets.hpp"

using namespace ztwo;
using namespace ztwo::lattice;

namespace {

IntMatrix make(int n, std::initializer_list<long> values) {
  IntMatrix m(n, n);
  auto it = values.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Int(*it++);
  return m;
}

const IntMatrix kH = make(2, {0, 1, 1, 0});

BilinearLattice double_h() {
  IntMatrix g = IntMatrix::Zero(4, 4);
  g.block(0, 0, 2, 2) = kH;
  g.block(2, 2, 2, 2) = kH;
  return BilinearLattice(g);
}

LatticeInvolution block_swap_4() {
  IntMatrix g = IntMatrix::Zero(4, 4);
  g(0, 2) = 1;
  g(1, 3) = 1;
  g(2, 0) = 1;
  g(3, 1) = 1;
  return LatticeInvolution(g);
}

}  // namespace

TEST_CASE("construction validates symmetry and rank") {
  CHECK_THROWS_AS(BilinearLattice(make(2, {0, 1, 2, 0})), std::invalid_argument);
  CHECK_THROWS_AS(BilinearLattice(IntMatrix(0, 0)), std::invalid_argument);
  CHECK_NOTHROW(BilinearLattice{kH});
}

TEST_CASE("form properties of reference lattices") {
  FormProperties h = form_properties(BilinearLattice(kH));
  CHECK(h.even);
  CHECK(h.unimodular);
  CHECK(h.signature == 0);
  CHECK(h.indefinite);

  FormProperties a = form_properties(BilinearLattice(presets::link_preset("A").matrix()));
  CHECK(a.even);
  CHECK(a.unimodular);
  CHECK(a.signature == 0);
  CHECK(a.indefinite);

  FormProperties two = form_properties(BilinearLattice(make(1, {2})));
  CHECK(two.even);
  CHECK_FALSE(two.unimodular);
  CHECK(two.signature == 1);
  CHECK_FALSE(two.indefinite);

  FormProperties e8 = form_properties(BilinearLattice(presets::e8_gram()));
  CHECK(e8.even);
  CHECK(e8.unimodular);
  CHECK(e8.signature == -8);
  CHECK_FALSE(e8.indefinite);

  CHECK_FALSE(form_properties(BilinearLattice(make(1, {1}))).even);
  CHECK_THROWS_WITH_AS(form_properties(BilinearLattice(make(2, {1, 1, 1, 1}))), "degenerate form",
                       std::domain_error);
}

TEST_CASE("classification of indefinite even unimodular forms") {
  auto k3 = classify_indefinite_even(presets::lattice_preset("K3").form);
  CHECK(k3.e8_count == 2);
  CHECK(k3.hyperbolic_count == 3);
  CHECK_FALSE(k3.positive_e8);

  auto k3k3 = classify_indefinite_even(presets::lattice_preset("K3K3").form);
  CHECK(k3k3.e8_count == 4);
  CHECK(k3k3.hyperbolic_count == 6);

  auto a = classify_indefinite_even(BilinearLattice(presets::link_preset("A").matrix()));
  CHECK(a.e8_count == 0);
  CHECK(a.hyperbolic_count == 4);

  auto b = classify_indefinite_even(BilinearLattice(presets::link_preset("B").matrix()));
  CHECK(b.e8_count == 0);
  CHECK(b.hyperbolic_count == 3);

  // Reversed orientation: positive E8 factors are flagged.
  IntMatrix reversed = presets::lattice_preset("K3").form.gram() * Int(-1);
  auto rk3 = classify_indefinite_even(BilinearLattice(reversed));
  CHECK(rk3.e8_count == 2);
  CHECK(rk3.hyperbolic_count == 3);
  CHECK(rk3.positive_e8);

  CHECK_THROWS_WITH_AS(classify_indefinite_even(BilinearLattice(make(1, {1}))), "not even",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(classify_indefinite_even(BilinearLattice(make(1, {2}))), "not unimodular",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(classify_indefinite_even(BilinearLattice(presets::e8_gram())),
                       "definite form", std::domain_error);
}

TEST_CASE("involution validation") {
  BilinearLattice h(kH);
  CHECK(check_involution(h, LatticeInvolution::identity(2)));
  CHECK(check_involution(double_h(), block_swap_4()));
  CHECK_FALSE(check_involution(h, LatticeInvolution(make(2, {1, 1, 0, 1}))));
  // Squares to the identity but fails to preserve the form.
  CHECK_FALSE(check_involution(h, LatticeInvolution(make(2, {1, 0, 0, -1}))));
  CHECK_THROWS_AS(check_involution(h, LatticeInvolution::identity(3)), std::invalid_argument);
}

TEST_CASE("eigenlattice ranks against the rational rank oracle") {
  EigenlatticeRanks id_ranks =
      eigenlattice_ranks(BilinearLattice(kH), LatticeInvolution::identity(2));
  CHECK(id_ranks.fixed == 2);
  CHECK(id_ranks.anti == 0);

  EigenlatticeRanks swap_ranks = eigenlattice_ranks(double_h(), block_swap_4());
  CHECK(swap_ranks.fixed == 2);
  CHECK(swap_ranks.anti == 2);

  auto k3 = presets::lattice_preset("K3");
  EigenlatticeRanks k3_ranks = eigenlattice_ranks(k3.form, k3.involution);
  CHECK(k3_ranks.fixed == 14);
  CHECK(k3_ranks.anti == 8);
  const int n = k3.form.rank();
  IntMatrix gm = k3.involution.action() - IntMatrix::Identity(n, n);
  IntMatrix gp = k3.involution.action() + IntMatrix::Identity(n, n);
  CHECK(k3_ranks.fixed == n - oracles::rational_rank(gm));
  CHECK(k3_ranks.anti == n - oracles::rational_rank(gp));
}

TEST_CASE("tate dimensions on the three irreducible module types") {
  TateDims id2 = tate_dims(BilinearLattice(kH), LatticeInvolution::identity(2));
  CHECK(id2.h0 == 2);
  CHECK(id2.h1 == 0);

  TateDims neg = tate_dims(BilinearLattice(make(1, {2})), LatticeInvolution(make(1, {-1})));
  CHECK(neg.h0 == 0);
  CHECK(neg.h1 == 1);

  TateDims swap2 = tate_dims(BilinearLattice(kH), LatticeInvolution(make(2, {0, 1, 1, 0})));
  CHECK(swap2.h0 == 0);
  CHECK(swap2.h1 == 0);
}

TEST_CASE("integral decomposition of the preset involutions") {
  DecompositionReport swap_rep = integral_decomposition(double_h(), block_swap_4());
  CHECK(swap_rep.trivial == 0);
  CHECK(swap_rep.sign == 0);
  CHECK(swap_rep.regular == 2);

  DecompositionReport neg =
      integral_decomposition(BilinearLattice(kH), LatticeInvolution(make(2, {-1, 0, 0, -1})));
  CHECK(neg.trivial == 0);
  CHECK(neg.sign == 2);
  CHECK(neg.regular == 0);

  auto k3k3 = presets::lattice_preset("K3K3");
  DecompositionReport d = integral_decomposition(k3k3.form, k3k3.involution);
  CHECK(d.trivial == 8);
  CHECK(d.sign == 0);
  CHECK(d.regular == 18);
  CHECK(eigenlattice_ranks(k3k3.form, k3k3.involution).fixed == d.trivial + d.regular);

  auto k3 = presets::lattice_preset("K3");
  DecompositionReport dk3 = integral_decomposition(k3.form, k3.involution);
  CHECK(dk3.trivial == 6);
  CHECK(dk3.sign == 0);
  CHECK(dk3.regular == 8);
}

TEST_CASE("decomposition invariants hold under random unimodular conjugation") {
  std::mt19937 rng(424241);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = oracles::random_involution_instance(rng, 6);
    BilinearLattice l(inst.gram);
    LatticeInvolution g(inst.action);
    REQUIRE(check_involution(l, g));
    DecompositionReport d = integral_decomposition(l, g);
    CHECK(d.trivial == inst.trivial);
    CHECK(d.sign == inst.sign);
    CHECK(d.regular == inst.regular);
    CHECK(d.trivial + d.sign + 2 * d.regular == l.rank());
    CHECK(eigenlattice_ranks(l, g).fixed == d.trivial + d.regular);
  }
}

TEST_CASE("g-signature on reference involutions") {
  IntMatrix two_e8 = IntMatrix::Zero(16, 16);
  two_e8.block(0, 0, 8, 8) = presets::e8_gram();
  two_e8.block(8, 8, 8, 8) = presets::e8_gram();
  CHECK(g_signature(BilinearLattice(two_e8), LatticeInvolution::identity(16)) == -16);

  // Both eigenspaces of the block swap carry rank-2 signature-0 forms:
  // (e_i + g e_i) and (e_i - g e_i) each give twice the hyperbolic form.
  CHECK(g_signature(double_h(), block_swap_4()) == 0);

  auto k3k3 = presets::lattice_preset("K3K3");
  CHECK(g_signature(k3k3.form, k3k3.involution) == 0);
  auto k3 = presets::lattice_preset("K3");
  CHECK(g_signature(k3.form, k3.involution) == 0);
}

TEST_CASE("g-signature properties") {
  std::mt19937 rng(90210);
  int nondegenerate = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = oracles::random_involution_instance(rng, 5);
    if (determinant(inst.gram) == 0) continue;
    ++nondegenerate;
    BilinearLattice l(inst.gram);
    LatticeInvolution g(inst.action);
    CHECK(g_signature(l, LatticeInvolution::identity(l.rank())) == form_properties(l).signature);
    BilinearLattice negated(IntMatrix(inst.gram * Int(-1)));
    CHECK(g_signature(negated, g) == -g_signature(l, g));
  }
  CHECK(nondegenerate > 100);
}

TEST_CASE("positive part of the fixed sublattice") {
  CHECK(b_plus_fixed(BilinearLattice(kH), LatticeInvolution::identity(2)) == 1);
  auto k3k3 = presets::lattice_preset("K3K3");
  CHECK(b_plus_fixed(k3k3.form, k3k3.involution) == 5);
  auto k3 = presets::lattice_preset("K3");
  CHECK(b_plus_fixed(k3.form, k3.involution) == 3);
  CHECK(b_plus_fixed(double_h(), block_swap_4()) == 1);
}

TEST_CASE("realization conditions on the preset involutions") {
  auto k3k3 = presets::lattice_preset("K3K3");
  EEReport r = ee_conditions(k3k3.form, k3k3.involution);
  CHECK(r.cond1);
  CHECK(r.cond2);
  CHECK(r.cond3);
  CHECK(r.n_trivial == 8);
  CHECK(r.g_sig == 0);

  auto k3 = presets::lattice_preset("K3");
  EEReport rk3 = ee_conditions(k3.form, k3.involution);
  CHECK(rk3.all());
  CHECK(rk3.n_trivial == 6);

  EEReport neg = ee_conditions(BilinearLattice(kH), LatticeInvolution(make(2, {-1, 0, 0, -1})));
  CHECK_FALSE(neg.cond1);

  EEReport odd_sig = ee_conditions(BilinearLattice(make(1, {2})), LatticeInvolution::identity(1));
  CHECK(odd_sig.cond1);
  CHECK(odd_sig.cond2);
  CHECK_FALSE(odd_sig.cond3);
  CHECK(odd_sig.g_sig == 1);
}

TEST_CASE("even pairing via the diagonal matches brute force") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = oracles::random_involution_instance(rng, 6);
    BilinearLattice l(inst.gram);
    LatticeInvolution g(inst.action);
    EEReport r = ee_conditions(l, g);
    CHECK(r.cond2 == oracles::pairing_even_bruteforce(inst.gram, inst.action));
  }
}

TEST_CASE("signature and classification are basis independent") {
  std::mt19937 rng(5150);
  auto k3 = presets::lattice_preset("K3");
  for (int trial = 0; trial < 25; ++trial) {
    auto u = oracles::random_unimodular(rng, k3.form.rank());
    BilinearLattice conj(IntMatrix(u.u.transpose() * k3.form.gram() * u.u));
    LatticeInvolution gconj(IntMatrix(u.u_inverse * k3.involution.action() * u.u));
    CHECK(form_properties(conj).signature == -16);
    auto cls = classify_indefinite_even(conj);
    CHECK(cls.e8_count == 2);
    CHECK(cls.hyperbolic_count == 3);
    CHECK(check_involution(conj, gconj));
    CHECK(g_signature(conj, gconj) == 0);
    CHECK(b_plus_fixed(conj, gconj) == 3);
  }
}

TEST_CASE("rank-44 analysis survives a coefficient-inflating change of basis") {
  // A cascade of shears col(k+1) += 3 col(k) compounds to entries of size
  // about 3^44, so the conjugated gram and every intermediate kernel and
  // quotient computation leave the machine-word range.
  auto k3k3 = presets::lattice_preset("K3K3");
  IntMatrix u = IntMatrix::Identity(44, 44);
  IntMatrix u_inverse = IntMatrix::Identity(44, 44);
  for (int k = 0; k + 1 < 44; ++k) {
    u.col(k + 1) += u.col(k) * Int(3);
    u_inverse.row(k) -= u_inverse.row(k + 1) * Int(3);
  }
  BilinearLattice conj(IntMatrix(u.transpose() * k3k3.form.gram() * u));
  LatticeInvolution gconj(IntMatrix(u_inverse * k3k3.involution.action() * u));
  Int largest = 0;
  for (int i = 0; i < 44; ++i)
    for (int j = 0; j < 44; ++j) largest = std::max(largest, Int(abs(conj.gram()(i, j))));
  CHECK(largest > Int("2147483647"));

  REQUIRE(check_involution(conj, gconj));
  DecompositionReport d = integral_decomposition(conj, gconj);
  CHECK(d.trivial == 8);
  CHECK(d.sign == 0);
  CHECK(d.regular == 18);
  CHECK(g_signature(conj, gconj) == 0);
  CHECK(b_plus_fixed(conj, gconj) == 5);
  CHECK(form_properties(conj).signature == -32);
}

TEST_CASE("coordinate trivial block extraction") {
  auto k3k3 = presets::lattice_preset("K3K3");
  auto block = coordinate_trivial_block(k3k3.form, k3k3.involution);
  REQUIRE(block.has_value());
  CHECK(block->rank() == 8);
  auto cls = classify_indefinite_even(*block);
  CHECK(cls.e8_count == 0);
  CHECK(cls.hyperbolic_count == 4);

  auto k3 = presets::lattice_preset("K3");
  auto block3 = coordinate_trivial_block(k3.form, k3.involution);
  REQUIRE(block3.has_value());
  CHECK(block3->rank() == 6);
  CHECK(classify_indefinite_even(*block3).hyperbolic_count == 3);

  // Free action: no trivial summand to extract.
  CHECK_FALSE(coordinate_trivial_block(double_h(), block_swap_4()).has_value());
}
