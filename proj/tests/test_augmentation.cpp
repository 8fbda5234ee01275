#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spinup/augmentation.hpp"
#include "spinup/disks.hpp"
#include "spinup/errors.hpp"
#include "spinup/gf2.hpp"
#include "spinup/knot_diagrams.hpp"

using namespace spinup;

namespace {

/// The same DGA with generators listed in the order `perm`.
FreeDGA permuted(const FreeDGA& dga, const std::vector<int>& perm) {
  std::vector<Generator> gens;
  std::vector<int> where(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    gens.push_back(dga.generator(static_cast<std::size_t>(perm[i])));
    where[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  }
  FreeDGA out(gens, dga.grading_modulus());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (auto w : dga.differential(static_cast<std::size_t>(perm[i]))) {
      for (auto& x : w) x = where[static_cast<std::size_t>(x)];
      out.toggle_term(i, w);
    }
  }
  return out;
}

std::multiset<std::string> profile_multiset(const FreeDGA& dga) {
  std::multiset<std::string> out;
  for (const auto& p : seidel_profiles(dga, 1)) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("a lone grading-0 cycle has two augmentations") {
  FreeDGA dga({{"x", 0}});
  CHECK(enumerate_augmentations(dga).size() == 2);
  FreeDGA shifted({{"x", 1}});
  CHECK(enumerate_augmentations(shifted).size() == 1);
  CHECK(enumerate_augmentations(shifted, false).size() == 2);
}

TEST_CASE("augmentation counts of the unknot and trefoil") {
  CHECK(enumerate_augmentations(build_dga(resolve_front(flying_saucer_front()))).size() == 1);
  CHECK(enumerate_augmentations(build_dga(torus_knot_family(1).resolved)).size() == 5);
}

TEST_CASE("the stabilized unknot has no augmentation") {
  CHECK(enumerate_augmentations(build_dga(resolve_front(stabilized_unknot_front())), false).empty());
}

TEST_CASE("the cubic example has three augmentations") {
  const FreeDGA dga = load_dga(std::string(SPINUP_DATA_DIR) + "/cubic_dga.json");
  const auto augs = enumerate_augmentations(dga);
  CHECK(augs.size() == 3);
  for (const auto& eps : augs) CHECK_FALSE(eps.values[0]);
}

TEST_CASE("T_5 profiles") {
  const FreeDGA dga = build_dga(torus_knot_family(2).resolved);
  const auto augs = enumerate_augmentations(dga);
  REQUIRE_FALSE(augs.empty());
  for (const auto& eps : augs) {
    CHECK(seidel_profile(dga, eps, 1) == HomologyProfile{{0, 1}, {1, 4}});
    CHECK(betti_sum(dga, eps) == 5);
  }
}

TEST_CASE("augmentation enumeration respects its budget") {
  const FreeDGA dga = build_dga(torus_knot_family(3).resolved);
  CHECK_THROWS_AS(enumerate_augmentations(dga, true, 3), BudgetExceeded);
}

TEST_CASE("a non-augmentation is refused by the linearization") {
  const FreeDGA dga = build_dga(torus_knot_family(1).resolved);
  Augmentation zero{std::vector<std::uint8_t>(5, 0)};
  CHECK_FALSE(is_augmentation(dga, zero));
  CHECK_THROWS_AS(linearized_complex(dga, zero), InvalidInput);
  CHECK_FALSE(is_augmentation(dga, Augmentation{{1, 1}}));
}

TEST_CASE("homology of small complexes") {
  Z2Complex zero;
  zero.names = {"x", "y", "z"};
  zero.degrees = {0, 1, 1};
  zero.differential = BitMatrix(3, 3);
  CHECK(homology_dims(zero) == HomologyProfile{{0, 1}, {1, 2}});

  Z2Complex iso;
  iso.names = {"x", "y"};
  iso.degrees = {1, 0};
  iso.differential = BitMatrix(2, 2);
  iso.differential.set(1, 0, true);
  CHECK(homology_dims(iso).total() == 0);

  Z2Complex off = iso;
  off.degrees = {1, 1};
  CHECK_THROWS_AS(homology_dims(off), ConsistencyError);
}

TEST_CASE("profiles do not depend on generator order") {
  const FreeDGA dga = build_dga(torus_knot_family(2).resolved);
  std::vector<int> perm(dga.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::mt19937 rng(7);
  const auto base = profile_multiset(dga);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const FreeDGA p = permuted(dga, perm);
    CHECK(enumerate_augmentations(p).size() == enumerate_augmentations(dga).size());
    CHECK(profile_multiset(p) == base);
  }
}

TEST_CASE("ungraded augmentations of the trefoil give the same Betti sum") {
  const FreeDGA dga = build_dga(torus_knot_family(1).resolved);
  const auto all = enumerate_augmentations(dga, false);
  CHECK(all.size() >= enumerate_augmentations(dga, true).size());
  for (const auto& eps : all) CHECK(betti_sum(dga, eps) == 3);
}

TEST_CASE("Seidel profile needs integer gradings") {
  FreeDGA dga({{"x", 0}}, 2);
  const Augmentation eps{{0}};
  CHECK_THROWS_AS(seidel_profile(dga, eps, 1), InvalidInput);
}

TEST_CASE("GF(2) rank matches the size of the row span") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    BitMatrix m(rows, cols);
    std::vector<unsigned> row_bits(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 2) {
          m.set(r, c, true);
          row_bits[r] |= 1U << c;
        }
      }
    }
    std::set<unsigned> span;
    for (unsigned mask = 0; mask < (1U << rows); ++mask) {
      unsigned v = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (mask >> r & 1U) v ^= row_bits[r];
      }
      span.insert(v);
    }
    CHECK(span.size() == (std::size_t{1} << m.rank()));
  }
}

TEST_CASE("GF(2) product") {
  BitMatrix a(2, 2), b(2, 2);
  a.set(0, 1, true);
  b.set(1, 0, true);
  const BitMatrix c = a * b;
  CHECK(c.get(0, 0));
  CHECK_FALSE(c.get(1, 1));
  CHECK((a * a).is_zero());
  CHECK_THROWS_AS(BitMatrix(2, 3) * BitMatrix(2, 3), InvalidInput);
}
