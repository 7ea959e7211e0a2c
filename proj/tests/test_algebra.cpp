#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncsg/algebra.hpp"
#include "ncsg/error.hpp"

using namespace ncsg;

namespace {

std::vector<Platform> sample_platforms() {
  return {Platform::braid(4), Platform::braid(6), Platform::permutation(6),
          Platform::matrix_mod_p(2, 3), Platform::matrix_mod_p(3, 7)};
}

Element random_element(const Platform& plat, Rng& rng) {
  if (plat.kind() == PlatformKind::Braid)
    return make_braid(braid::random_word(plat.size(), rng.between(0, 12), rng));
  return sample(platform_generators(plat).with_range(1, 12), rng);
}

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("platform invariants") {
  CHECK(error_code([] { Platform::braid(1); }) == Errc::InvalidArgument);
  CHECK(error_code([] { Platform::permutation(0); }) == Errc::InvalidArgument);
  CHECK(error_code([] { Platform::matrix_mod_p(2, 4); }) == Errc::InvalidArgument);
  CHECK(error_code([] { Platform::matrix_mod_p(1, 3); }) == Errc::InvalidArgument);
  CHECK(Platform::braid(2).has_inverses());
  CHECK(Platform::permutation(1).has_inverses());
  CHECK_FALSE(Platform::matrix_mod_p(2, 3).has_inverses());
  CHECK_FALSE(Platform::braid(3).is_finite());
  CHECK(Platform::matrix_mod_p(2, 3).order() == 81);
  CHECK(Platform::permutation(6).order() == 720);
}

TEST_CASE("element payload validation") {
  CHECK_THROWS_AS(make_permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(make_braid(3, {3}), Error);
  CHECK_THROWS_AS(Element(Platform::matrix_mod_p(2, 3), {0, 1, 2, 3}), Error);
}

TEST_CASE("multiply: documented examples") {
  for (const auto& plat : sample_platforms()) {
    Rng rng(1);
    const auto e = random_element(plat, rng);
    CHECK(equal(multiply(identity(plat), e), e));
  }
  CHECK(equal(multiply(make_braid(4, {1}), make_braid(4, {-1})), identity(Platform::braid(4))));

  // (1 2) and (3 4) as 0-based image tables, composed by hand.
  const auto t12 = make_permutation_cycles(6, {{1, 2}});
  const auto t34 = make_permutation_cycles(6, {{3, 4}});
  const auto prod = multiply(t12, t34);
  CHECK(prod.same_payload(make_permutation({1, 0, 3, 2, 4, 5})));
  CHECK(equal(prod, multiply(t34, t12)));

  CHECK(error_code([] { multiply(make_braid(3, {1}), make_braid(4, {1})); }) ==
        Errc::PlatformMismatch);
}

TEST_CASE("permutation product applies the left factor first") {
  const auto a = make_permutation_cycles(3, {{1, 2}});
  const auto b = make_permutation_cycles(3, {{2, 3}});
  // strand 1 -> 2 under a, then 2 -> 3 under b.
  CHECK(multiply(a, b).payload()[0] == 2);
}

TEST_CASE("invert: documented examples") {
  for (const auto& plat : sample_platforms()) CHECK(equal(invert(identity(plat)), identity(plat)));
  CHECK(invert(make_braid(3, {1, 2})).same_payload(make_braid(3, {-2, -1})));
  CHECK(error_code([] { invert(make_matrix(2, 3, {1, 1, 0, 0})); }) == Errc::NonInvertible);
  CHECK_FALSE(is_invertible(make_matrix(2, 3, {1, 1, 0, 0})));

  Rng rng(3);
  for (const auto& plat : sample_platforms()) {
    for (int k = 0; k < 50; ++k) {
      const auto e = random_element(plat, rng);
      if (!is_invertible(e)) continue;
      CHECK(is_identity(multiply(e, invert(e))));
      CHECK(is_identity(multiply(invert(e), e)));
    }
  }
}

TEST_CASE("equal: documented examples") {
  Rng rng(4);
  for (const auto& plat : sample_platforms()) {
    const auto e = random_element(plat, rng);
    CHECK(equal(e, e));
  }
  CHECK(equal(make_braid(4, {1, 3}), make_braid(4, {3, 1})));
  CHECK(equal(make_braid(3, {1, 2, 1}), make_braid(3, {2, 1, 2})));
  CHECK_FALSE(equal(make_braid(3, {1, 2}), make_braid(3, {2, 1})));
}

TEST_CASE("canonicalize: documented examples") {
  CHECK(canonicalize(identity(Platform::braid(5))).payload().empty());
  CHECK(serialize(canonicalize(make_braid(3, {1, 2, 1}))) ==
        serialize(canonicalize(make_braid(3, {2, 1, 2}))));
  Rng rng(6);
  for (int k = 0; k < 10000; ++k) {
    const auto e = make_braid(braid::random_word(static_cast<int>(rng.between(2, 8)), rng.between(0, 30), rng));
    const auto once = canonicalize(e);
    CHECK(canonicalize(once).same_payload(once));
    if (k % 10 == 0) CHECK(equal(once, e));
  }
  const auto m = make_matrix(2, 3, {1, 2, 0, 1});
  CHECK(canonicalize(m).same_payload(m));
}

TEST_CASE("sample: documented examples") {
  Rng rng(7);
  const auto g = make_permutation_cycles(6, {{1, 2, 3}});
  CHECK(sample(SubsetSpec({g}, SubsetLabel::Custom, 1, 1), rng).same_payload(g));

  const SubsetSpec braids({make_braid(4, {1}), make_braid(4, {2})}, SubsetLabel::Custom, 3, 3);
  Rng r1(99), r2(99);
  const auto s1 = sample(braids, r1);
  const auto s2 = sample(braids, r2);
  CHECK(s1.same_payload(s2));
  CHECK(s1.payload().size() == 3);

  const SubsetSpec swap({make_permutation_cycles(6, {{1, 2}})}, SubsetLabel::Custom, 2, 2);
  CHECK(is_identity(sample(swap, rng)));

  CHECK_THROWS_AS(SubsetSpec({}), Error);
  CHECK_THROWS_AS(SubsetSpec({g}, SubsetLabel::Custom, 0, 1), Error);
  CHECK_THROWS_AS(SubsetSpec({g, make_braid(3, {1})}), Error);
}

TEST_CASE("sample lengths stay within range and use only generators") {
  Rng rng(8);
  const SubsetSpec s({make_braid(5, {1}), make_braid(5, {-3})}, SubsetLabel::LA, 2, 5);
  for (int k = 0; k < 500; ++k) {
    const auto idx = sample_indices(s, rng);
    CHECK(idx.size() >= 2);
    CHECK(idx.size() <= 5);
    const auto e = product_of(s, idx);
    CHECK(e.payload().size() == idx.size());
  }
}

TEST_CASE("centralizer_enumerate: documented examples") {
  const auto s3 = Platform::permutation(3);
  CHECK(centralizer_enumerate(s3, identity(s3)).generators().size() == 6);

  const auto c = make_permutation_cycles(3, {{1, 2, 3}});
  const auto cent = centralizer_enumerate(s3, c);
  std::set<std::string> got;
  for (const auto& e : cent.generators()) got.insert(to_string(e));
  CHECK(got == std::set<std::string>{"()", "(1 2 3)", "(1 3 2)"});

  // Brute force over all 81 matrices: a*I + b*[[0,1],[0,0]].
  const auto m23 = Platform::matrix_mod_p(2, 3);
  const auto mc = centralizer_enumerate(m23, make_matrix(2, 3, {1, 1, 0, 1}));
  CHECK(mc.generators().size() == 9);
  for (const auto& e : mc.generators()) {
    CHECK(e.payload()[2] == 0);
    CHECK(e.payload()[0] == e.payload()[3]);
  }

  CHECK(error_code([] {
          centralizer_enumerate(Platform::braid(4), make_braid(4, {1}));
        }) == Errc::InfinitePlatform);
}

TEST_CASE("centralizer correctness by full enumeration") {
  Rng rng(9);
  for (const auto& plat : {Platform::permutation(4), Platform::permutation(5), Platform::matrix_mod_p(2, 3)}) {
    const auto all = enumerate_platform(plat);
    for (int k = 0; k < 5; ++k) {
      const auto e = all[rng.below(all.size())];
      const auto cent = centralizer_enumerate(plat, e);
      std::set<std::string> members;
      for (const auto& c : cent.generators()) members.insert(element_key(c));
      for (const auto& g : all) {
        const bool commutes = multiply(g, e).same_payload(multiply(e, g));
        CHECK(commutes == (members.count(element_key(g)) == 1));
      }
    }
  }
}

TEST_CASE("associativity and identity laws") {
  Rng rng(10);
  for (const auto& plat : sample_platforms()) {
    for (int k = 0; k < 1000; ++k) {
      const auto a = random_element(plat, rng);
      const auto b = random_element(plat, rng);
      const auto c = random_element(plat, rng);
      CHECK(equal(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));
      if (k % 10 == 0) {
        CHECK(equal(multiply(identity(plat), a), a));
        CHECK(equal(multiply(a, identity(plat)), a));
      }
    }
  }
}

TEST_CASE("canonical soundness: equal iff identical serialization") {
  Rng rng(12);
  int equal_count = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = static_cast<int>(rng.between(3, 7));
    const auto w1 = braid::random_word(n, rng.between(0, 20), rng);
    const auto w2 = rng.bit() ? braid::scramble(w1, rng.between(1, 5), rng)
                              : braid::random_word(n, rng.between(0, 20), rng);
    const auto e1 = make_braid(w1);
    const auto e2 = make_braid(w2);
    const bool same = serialize(canonicalize(e1)) == serialize(canonicalize(e2));
    CHECK(equal(e1, e2) == same);
    equal_count += same;
  }
  CHECK(equal_count >= 400);
}

TEST_CASE("serialization layout") {
  // Delta of B_3: tag, n, zero factors, infimum 1.
  CHECK(serialize(make_braid(3, {2, 1, 2})) ==
        Bytes{0x01, 0x00, 0x03, 0, 0, 0, 0, 0, 0, 0, 1});
  // sigma_1^-1 in B_3 = Delta^-1 * [image 2,0,1]... written as one factor.
  const auto inv = serialize(make_braid(3, {-1}));
  REQUIRE(inv.size() == 1 + 2 + 4 + 4 + 6);
  CHECK(inv[3] == 0);
  CHECK(inv[6] == 1);
  CHECK(inv[7] == 0xFF);
  CHECK(inv[10] == 0xFF);

  CHECK(serialize(make_permutation_cycles(3, {{1, 2}})) ==
        Bytes{0x02, 0x00, 0x03, 0x00, 0x01, 0x00, 0x00, 0x00, 0x02});
  CHECK(serialize(make_matrix(2, 3, {1, 2, 0, 1})) ==
        Bytes{0x03, 0x00, 0x02, 0x00, 0x03, 0, 1, 0, 2, 0, 0, 0, 1});
}

TEST_CASE("serialization round trip preserves the element") {
  Rng rng(13);
  for (const auto& plat : sample_platforms()) {
    for (int k = 0; k < 200; ++k) {
      const auto e = random_element(plat, rng);
      const auto bytes = serialize(e);
      const auto back = deserialize_element(bytes);
      CHECK(equal(back, e));
      CHECK(serialize(back) == bytes);
    }
  }
  CHECK_THROWS_AS(deserialize_element(Bytes{0x09}), Error);
  CHECK_THROWS_AS(deserialize_element(Bytes{0x02, 0x00, 0x02, 0x00, 0x00, 0x00, 0x00}), Error);
  CHECK_THROWS_AS(deserialize_element(Bytes{0x02, 0x00}), Error);
}

TEST_CASE("platform generators generate the finite platforms") {
  for (const auto& plat : {Platform::permutation(4), Platform::matrix_mod_p(2, 3), Platform::matrix_mod_p(2, 2)}) {
    const auto gens = platform_generators(plat);
    std::set<std::string> seen;
    std::vector<Element> frontier;
    for (const auto& g : gens.generators())
      if (seen.insert(element_key(g)).second) frontier.push_back(g);
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (const auto& f : frontier)
        for (const auto& g : gens.generators()) {
          auto p = multiply(f, g);
          if (seen.insert(element_key(p)).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    CHECK(seen.size() == plat.order());
  }
}

TEST_CASE("requirements report") {
  const auto braid_report = requirements_report(Platform::braid(6));
  REQUIRE(braid_report.size() == 9);
  CHECK(braid_report[0].status == RequirementStatus::Holds);
  CHECK(braid_report[4].status == RequirementStatus::Assumed);
  const auto perm_report = requirements_report(Platform::permutation(6));
  CHECK(perm_report[0].status == RequirementStatus::Fails);
  CHECK(perm_report[5].status == RequirementStatus::Fails);
  CHECK(requirements_report(Platform::braid(2))[0].status == RequirementStatus::Fails);
}
