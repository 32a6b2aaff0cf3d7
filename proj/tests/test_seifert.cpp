#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gmanvol/error.hpp"
#include "gmanvol/seifert.hpp"
#include "support/random_graph.hpp"

using namespace gmanvol;
using gmanvol::testing::Rng;
using gmanvol::testing::uniform;

namespace {

SeifertInvariants inv(std::int64_t g, std::vector<ExceptionalFiber> fibers) {
  return {g, std::move(fibers)};
}

// Independent fraction sum with plain 64-bit numerators, for small inputs.
std::pair<std::int64_t, std::int64_t> naive_sum(const std::vector<ExceptionalFiber>& fs) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  for (const auto& f : fs) {
    num = num * f.alpha + f.beta * den;
    den *= f.alpha;
    const auto g = std::gcd(num, den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
  }
  return {num, den};
}

std::vector<ExceptionalFiber> random_fibers(Rng& rng, int max_count, std::int64_t max_alpha) {
  std::vector<ExceptionalFiber> out;
  const auto n = uniform(rng, 0, max_count);
  for (std::int64_t i = 0; i < n; ++i) {
    for (;;) {
      const auto a = uniform(rng, 1, max_alpha);
      const auto b = uniform(rng, -3 * max_alpha, 3 * max_alpha);
      if (std::gcd(a, b) == 1) {
        out.push_back({a, b});
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euler number examples") {
  CHECK(euler_number(inv(2, {})) == 0);
  CHECK(euler_number(inv(0, {{2, 1}, {3, 1}, {5, 1}})) == make_rational(31, 30));
  for (std::int64_t k = -4; k <= 4; ++k) CHECK(euler_number(inv(1, {{1, k}})) == k);
}

TEST_CASE("orbifold euler characteristic examples") {
  CHECK(orbifold_euler_char(inv(2, {})) == -2);
  CHECK(orbifold_euler_char(inv(0, {{2, 1}, {3, 1}, {7, 1}})) == make_rational(-1, 42));
  CHECK(orbifold_euler_char(inv(1, {})) == 0);
}

TEST_CASE("geometry table") {
  CHECK(geometry_type(inv(0, {{2, 1}, {3, 1}, {7, 1}})) == Geometry::SL2tilde);
  CHECK(geometry_type(inv(1, {})) == Geometry::Euclidean);
  CHECK(geometry_type(inv(2, {})) == Geometry::H2xR);
  CHECK(geometry_type(inv(1, {{1, 1}})) == Geometry::Nil);
  CHECK(geometry_type(inv(0, {{1, 1}})) == Geometry::Spherical);
  CHECK(geometry_type(inv(0, {})) == Geometry::S2xR);
}

TEST_CASE("milnor-wood examples") {
  CHECK(milnor_wood_check(2, 2));
  CHECK_FALSE(milnor_wood_check(3, 2));
  CHECK(milnor_wood_check(0, 1));
  CHECK_THROWS_AS(milnor_wood_check(0, 0), Error);
}

TEST_CASE("horizontal foliation criterion examples") {
  CHECK(ehn_horizontal_foliation(inv(1, {{2, 1}, {2, -1}})));
  CHECK_FALSE(ehn_horizontal_foliation(inv(2, {{1, 3}})));
  CHECK(ehn_horizontal_foliation(inv(1, {})));
  try {
    ehn_horizontal_foliation(inv(0, {{2, 1}}));
    FAIL("genus 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenusZeroUnsupported);
  }
}

TEST_CASE("circle bundles: criterion agrees with milnor-wood") {
  for (std::int64_t g = 1; g <= 8; ++g) {
    for (std::int64_t e = -30; e <= 30; ++e) {
      CHECK(ehn_horizontal_foliation(inv(g, {{1, e}})) == milnor_wood_check(e, g));
    }
  }
}

TEST_CASE("min genus examples and brute-force oracle") {
  const std::vector<ExceptionalFiber> three{{1, -1}, {1, -1}, {1, -1}};
  CHECK(min_genus_for_ehn(three) == 3);
  CHECK(min_genus_for_ehn(std::vector<ExceptionalFiber>{}) == 1);
  CHECK(min_genus_for_ehn(std::vector<ExceptionalFiber>{{1, 3}}) == 3);

  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto fs = random_fibers(rng, 5, 6);
    std::int64_t g = 1;
    while (!ehn_horizontal_foliation(inv(g, fs))) ++g;
    CHECK(min_genus_for_ehn(fs) == g);
  }
}

TEST_CASE("invariants are permutation invariant") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto fs = random_fibers(rng, 6, 9);
    const auto g = uniform(rng, 1, 4);
    const auto e = euler_number(inv(g, fs));
    const auto chi = orbifold_euler_char(inv(g, fs));
    const auto ehn = ehn_horizontal_foliation(inv(g, fs));
    const auto [num, den] = naive_sum(fs);
    CHECK(e == make_rational(num, den));
    std::shuffle(fs.begin(), fs.end(), rng);
    CHECK(euler_number(inv(g, fs)) == e);
    CHECK(orbifold_euler_char(inv(g, fs)) == chi);
    CHECK(ehn_horizontal_foliation(inv(g, fs)) == ehn);
  }
}

TEST_CASE("invalid invariants are rejected") {
  CHECK_THROWS_AS(check_invariants(inv(-1, {})), Error);
  CHECK_THROWS_AS(check_invariants(inv(1, {{0, 1}})), Error);
  CHECK_THROWS_AS(check_invariants(inv(1, {{4, 2}})), Error);
  CHECK_NOTHROW(check_invariants(inv(1, {{4, -3}})));
}

TEST_CASE("commutator realizability examples") {
  auto tc = [](std::vector<Rational> v) {
    std::vector<TranslationClass> out;
    for (auto& x : v) out.push_back({x});
    return out;
  };
  CHECK_FALSE(commutator_realizable(tc({1}), 1));
  CHECK(commutator_realizable(tc({make_rational(1, 2), make_rational(1, 4)}), 1));
  CHECK(commutator_realizable(tc({5, -5}), 1));
  CHECK_THROWS_AS(commutator_realizable(tc({}), 1), Error);
}

TEST_CASE("commutator realizability under permutation and negation") {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<TranslationClass> v;
    const auto n = uniform(rng, 1, 5);
    for (std::int64_t i = 0; i < n; ++i) {
      v.push_back({make_rational(uniform(rng, -20, 20), uniform(rng, 1, 6))});
    }
    const auto g = uniform(rng, 1, 4);
    const bool base = commutator_realizable(v, g);
    Rational sum = 0;
    for (const auto& t : v) sum += t.value;
    CHECK(base == (abs(sum) < 2 * g - 1));
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(commutator_realizable(v, g) == base);
    for (auto& t : v) t.value = -t.value;
    CHECK(commutator_realizable(v, g) == base);
  }
}

TEST_CASE("framed filling examples") {
  const std::vector<Slope> zero{Slope::of(1, 0), Slope::of(1, 0)};
  CHECK(fill_framed_piece(2, zero) == inv(2, {{1, 0}, {1, 0}}));
  CHECK(euler_number(fill_framed_piece(2, zero)) == 0);
  const std::vector<Slope> one{Slope::of(1, -1)};
  CHECK(euler_number(fill_framed_piece(2, one)) == -1);
  const std::vector<Slope> two{Slope::of(2, 1), Slope::of(3, -2)};
  CHECK(fill_framed_piece(3, two) == inv(3, {{2, 1}, {3, -2}}));
  CHECK(euler_number(fill_framed_piece(3, two)) == make_rational(-1, 6));
  const std::vector<Slope> fib{Slope::fiber()};
  CHECK_THROWS_AS(fill_framed_piece(2, fib), Error);
}

TEST_CASE("slope canonical form") {
  CHECK(Slope::of(-2, 3) == Slope::of(2, -3));
  CHECK(Slope::of(0, -1) == Slope::fiber());
  CHECK_THROWS_AS(Slope::of(0, 0), Error);
  CHECK_THROWS_AS(Slope::of(2, 4), Error);
  CHECK(GluingMatrix{1, 1, 1, 0}.inverse() == GluingMatrix{0, 1, 1, -1});
}
