#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tlalg/char_classes.hpp"
#include "tlalg/error.hpp"
#include "support/fixtures.hpp"

namespace tlalg {
namespace {

using testing::circle;
using testing::torus;

LocalSystem torus_rep(const Rational& a, const Rational& b) {
  return from_representation(torus(), {{"a", a}, {"b", b}});
}

std::vector<Rational> loop_values(const LogClass& c) {
  std::vector<Rational> out;
  for (const auto& [name, v] : c.loop_values) out.push_back(v);
  return out;
}

std::vector<int> sign_values(const SignClass& s) {
  std::vector<int> out;
  for (const auto& [name, v] : s.loop_values) out.push_back(v.value());
  return out;
}

TEST(SignClass, Examples) {
  EXPECT_EQ(sign_values(sign_class(torus_rep(-2, 3))), (std::vector<int>{1, 0}));
  EXPECT_TRUE(sign_class(torus_rep(2, 3)).is_zero());
  EXPECT_EQ(sign_values(sign_class(torus_rep(-1, -1))), (std::vector<int>{1, 1}));
  EXPECT_FALSE(sign_class(torus_rep(-1, -1)).is_zero());
}

TEST(SignClass, RejectsHigherRank) {
  try {
    sign_class(LocalSystem::trivial(torus(), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedRank);
  }
}

TEST(LogClasses, Examples) {
  auto l23 = log_classes(torus_rep(2, 3));
  ASSERT_EQ(l23.size(), 2u);
  EXPECT_EQ(loop_values(l23.at(2)), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(loop_values(l23.at(3)), (std::vector<Rational>{0, 1}));

  auto l4 = log_classes(torus_rep(4, 1));
  ASSERT_EQ(l4.size(), 1u);
  EXPECT_EQ(loop_values(l4.at(2)), (std::vector<Rational>{2, 0}));

  EXPECT_TRUE(log_classes(LocalSystem::trivial(torus(), 1)).empty());
}

TEST(LogClasses, NegativeExponentsAndGaugeNoise) {
  // A gauge change introduces primes on individual edges whose classes vanish.
  std::mt19937 rng(51);
  auto l = testing::random_gauge(torus_rep(Rational(3, 4), -1), rng);
  auto logs = log_classes(l);
  ASSERT_EQ(logs.size(), 2u);
  EXPECT_EQ(loop_values(logs.at(2)), (std::vector<Rational>{-2, 0}));
  EXPECT_EQ(loop_values(logs.at(3)), (std::vector<Rational>{1, 0}));
}

TEST(LogClasses, LoopValuesAreExponentsOfHolonomy) {
  std::mt19937 rng(52);
  for (int i = 0; i < 20; ++i) {
    auto l = testing::random_flat_system(torus(), 1, rng);
    auto hol = holonomy(l);
    for (const auto& [p, c] : log_classes(l)) {
      for (const auto& [name, v] : c.loop_values) {
        EXPECT_EQ(v, FormalLog::log_abs(hol.loop_images.at(name)(0, 0)).coefficient(p));
      }
    }
    auto s = sign_class(l);
    for (const auto& [name, bit] : s.loop_values) EXPECT_EQ(bit.value() == 1, hol.loop_images.at(name)(0, 0) < 0);
  }
}

TEST(LogClasses, AdditiveUnderTensorProduct) {
  std::mt19937 rng(53);
  for (int i = 0; i < 10; ++i) {
    auto a = testing::random_flat_system(torus(), 1, rng), b = testing::random_flat_system(torus(), 1, rng);
    auto la = log_classes(a), lb = log_classes(b), lab = log_classes(tensor_product(a, b));
    std::set<std::uint64_t> primes;
    for (const auto* m : {&la, &lb, &lab})
      for (const auto& [p, c] : *m) primes.insert(p);
    for (auto p : primes) {
      RationalVector expected(2, Rational(0));
      for (const auto* m : {&la, &lb}) {
        if (auto it = m->find(p); it != m->end())
          for (std::size_t j = 0; j < 2; ++j) expected[j] += it->second.coordinates[j];
      }
      auto it = lab.find(p);
      RationalVector got = it == lab.end() ? RationalVector(2, Rational(0)) : it->second.coordinates;
      EXPECT_EQ(got, expected) << p;
    }
  }
}

TEST(LogClasses, Natural) {
  std::mt19937 rng(54);
  auto f = testing::torus_wrap_a(3, 3, 2);
  auto m = induced_map_untwisted<Rational>(f, 1);
  auto mb = induced_map_untwisted<Bit>(f, 1);
  for (int i = 0; i < 10; ++i) {
    auto l = testing::random_flat_system(f.target_ptr(), 1, rng);
    auto p = pullback_system(f, l);
    auto before = log_classes(l), after = log_classes(p);
    for (const auto& [q, c] : before) {
      auto img = m * c.coordinates;
      auto it = after.find(q);
      if (it == after.end()) {
        EXPECT_TRUE(std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; }));
      } else {
        EXPECT_EQ(it->second.coordinates, img);
      }
    }
    EXPECT_EQ(sign_class(p).coordinates, mb * sign_class(l).coordinates);
  }
}

TEST(BrhoImage, Examples) {
  auto dims = [](const LocalSystem& l) {
    std::map<int, std::size_t> out;
    for (const auto& [d, img] : brho_image(l)) out[d] = img.dimension;
    return out;
  };
  EXPECT_EQ(dims(torus_rep(2, 3)), (std::map<int, std::size_t>{{1, 2}, {2, 1}}));
  EXPECT_EQ(dims(torus_rep(2, 4)), (std::map<int, std::size_t>{{1, 1}, {2, 0}}));
  EXPECT_EQ(dims(LocalSystem::trivial(torus(), 1)), (std::map<int, std::size_t>{{1, 0}, {2, 0}}));
  EXPECT_EQ(brho_image(torus_rep(2, 3)).at(2).labels, (std::vector<std::string>{"l2*l3"}));
}

TEST(Surjectivity, Examples) {
  auto yes = surjectivity_check(torus_rep(2, 3));
  EXPECT_TRUE(yes.surjective);
  ASSERT_EQ(yes.certificate.size(), 3u);
  EXPECT_EQ(yes.certificate[0].target, "a*");
  EXPECT_EQ(yes.certificate[0].terms, (std::vector<std::pair<std::string, Rational>>{{"l2", 1}}));
  EXPECT_EQ(yes.certificate[1].terms, (std::vector<std::pair<std::string, Rational>>{{"l3", 1}}));
  EXPECT_EQ(yes.certificate[2].target, "[T]*");
  EXPECT_TRUE(verify_certificate(torus_rep(2, 3), yes.certificate));

  EXPECT_FALSE(surjectivity_check(torus_rep(2, 2)).surjective);
  EXPECT_FALSE(surjectivity_check(torus_rep(1, 1)).surjective);
}

TEST(Surjectivity, TamperedCertificateFails) {
  auto l = torus_rep(2, 3);
  auto cert = surjectivity_check(l).certificate;
  cert[0].terms[0].second = 2;
  EXPECT_FALSE(verify_certificate(l, cert));
  cert = surjectivity_check(l).certificate;
  cert[2].terms[0].second *= -1;
  EXPECT_FALSE(verify_certificate(l, cert));
}

TEST(Surjectivity, DistinctPrimePairs) {
  const std::vector<int> primes{2, 3, 5, 7, 11, 13};
  for (int p : primes) {
    for (int q : primes) {
      if (p == q) continue;
      auto l = torus_rep(p, q);
      auto r = surjectivity_check(l);
      EXPECT_TRUE(r.surjective) << p << "," << q;
      EXPECT_TRUE(verify_certificate(l, r.certificate)) << p << "," << q;
    }
  }
}

TEST(Surjectivity, MixedExponents) {
  // a -> 12 = 2^2 3, b -> 18 = 2 3^2: exponent vectors (2,1), (1,2) independent.
  auto l = torus_rep(12, 18);
  auto r = surjectivity_check(l);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(verify_certificate(l, r.certificate));
}

TEST(Surjectivity, LargerGridTorus) {
  auto l = from_representation(torus(3, 4), {{"a", Rational(5)}, {"b", Rational(1, 7)}});
  auto r = surjectivity_check(l);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(verify_certificate(l, r.certificate));
}

TEST(Surjectivity, NonTorusBaseRejected) {
  try {
    surjectivity_check(from_representation(circle(), {{"a", Rational(2)}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedBase);
  }
}

TEST(CharClasses, ChernWeilMissesLogClasses) {
  // Every nontrivial rank-1 holonomy on the torus: no invariant linear
  // sections, but nonzero sign or log data.
  std::mt19937 rng(55);
  for (int i = 0; i < 20; ++i) {
    auto l = testing::random_flat_system(torus(), 1, rng);
    if (iso_rank1(l, LocalSystem::trivial(torus(), 1))) continue;
    auto s = share(l);
    auto a = make_algebroid(s, testing::random_cochain(s, 2, rng));
    EXPECT_EQ(chern_weil_image_dimension(a, 1), 0u);
    auto report = characteristic_classes(l, false);
    EXPECT_TRUE(!report.sign.is_zero() || !report.logs.empty());
  }
}

TEST(CharClasses, ReportBundlesEverything) {
  auto r = characteristic_classes(torus_rep(-2, 3), true);
  EXPECT_EQ(r.generators, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(r.sign.is_zero());
  EXPECT_EQ(r.logs.size(), 2u);
  ASSERT_TRUE(r.surjectivity);
  EXPECT_TRUE(r.surjectivity->surjective);
}

}  // namespace
}  // namespace tlalg
