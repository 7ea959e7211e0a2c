#include "doctest.h"

#include "ncsg/attacks.hpp"
#include "ncsg/error.hpp"

using namespace ncsg;

namespace {

ProtocolParams identity_params(const Element& z) {
  const SubsetSpec id({identity(z.platform())});
  return ProtocolParams::make_unchecked(make_family(z, id, id, id, id), {});
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

SubsetSpec with_inverses(std::initializer_list<Element> gens) {
  std::vector<Element> v;
  for (const auto& g : gens) {
    v.push_back(g);
    v.push_back(invert(g));
  }
  return SubsetSpec(std::move(v));
}

}  // namespace

TEST_CASE("enumerate_products") {
  const auto s3 = SubsetSpec({make_permutation_cycles(3, {{1, 2}}), make_permutation_cycles(3, {{1, 2, 3}})});
  CHECK(enumerate_products(s3, std::nullopt).size() == 6);
  CHECK(enumerate_products(s3, 1).size() == 2);

  const auto b3 = SubsetSpec({make_braid(3, {1}), make_braid(3, {2})});
  CHECK(enumerate_products(b3, 2).size() == 6);
  // Length 3 adds 8 words, two of which (s1 s2 s1, s2 s1 s2) coincide.
  CHECK(enumerate_products(b3, 3).size() == 13);
  CHECK(code_of([&] { enumerate_products(b3, std::nullopt); }) == Errc::InfinitePlatform);
  CHECK(code_of([&] { enumerate_products(b3, 12, 100); }) == Errc::SearchSpaceTooLarge);
}

TEST_CASE("brute_force_dp: documented examples") {
  const auto p = Platform::permutation(6);
  const auto x = make_permutation_cycles(6, {{1, 3, 5}});
  const SubsetSpec id({identity(p)});
  const auto r = brute_force_dp({x, x, id, id, std::nullopt, std::nullopt});
  REQUIRE(r.solution);
  CHECK(is_identity(r.solution->first));
  CHECK(is_identity(r.solution->second));

  const auto params = make_preset("perm6").params;
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto key = keygen(params, rng);
    const auto s = brute_force_dp({params.z(), key.z_prime, params.family().L_A, params.family().R_A, 3, 3});
    REQUIRE(s.solution);
    CHECK(equal(multiply({s.solution->first, params.z(), s.solution->second}), key.z_prime));
    CHECK(s.cost <= s.left_size * s.right_size);
  }

  // Even permutations on both sides cannot turn an even x into an odd y.
  const SubsetSpec even({make_permutation_cycles(6, {{1, 2, 3}}), make_permutation_cycles(6, {{2, 4, 6}})});
  const auto none = brute_force_dp({identity(p), make_permutation_cycles(6, {{1, 2}}), even, even, std::nullopt,
                                    std::nullopt});
  CHECK_FALSE(none.solution);
  CHECK(none.cost == none.left_size * none.right_size);

  CHECK(code_of([&] {
          brute_force_dp({identity(p), x, even, even, std::nullopt, std::nullopt}, 10);
        }) == Errc::SearchSpaceTooLarge);
}

TEST_CASE("double_coset_search: documented examples") {
  const auto w = make_braid(4, {1, 2});
  const SubsetSpec id({identity(w.platform())});
  const auto r = double_coset_search(w, w, id, id, 1, 1);
  REQUIRE(r.solution);
  CHECK(is_identity(r.solution->first));

  const auto params = make_preset("perm6").params;
  Rng rng(2);
  const auto a = ka_publish(params, Role::A, rng);
  const auto b = ka_publish(params, Role::B, rng);
  const auto s = double_coset_search(params.z(), b.published, params.family().L_B, params.family().R_B,
                                     std::nullopt, std::nullopt);
  REQUIRE(s.solution);
  CHECK(equal(multiply({s.solution->first, a.published, s.solution->second}), ka_shared(a, b.published)));

  const auto toy = make_preset("b4-toy").params;
  for (int i = 0; i < 20; ++i) {
    const auto kb = ka_publish(toy, Role::B, rng);
    const auto t = double_coset_search(toy.z(), kb.published, toy.family().L_B, toy.family().R_B, 2, 2);
    REQUIRE(t.solution);
    CHECK(equal(multiply({t.solution->first, toy.z(), t.solution->second}), kb.published));
  }
}

TEST_CASE("lookup search and nested loop agree on the first solution") {
  Rng rng(3);
  const auto gens = platform_generators(Platform::permutation(5)).with_range(1, 3);
  for (int i = 0; i < 100; ++i) {
    const SubsetSpec left({sample(gens, rng), sample(gens, rng)});
    const SubsetSpec right({sample(gens, rng), sample(gens, rng)});
    const auto x = sample(gens, rng);
    const auto l = sample(left, rng);
    const auto r = sample(right, rng);
    const auto y = multiply({l, x, r});
    const auto a = brute_force_dp({x, y, left, right, std::nullopt, std::nullopt});
    const auto b = double_coset_search(x, y, left, right, std::nullopt, std::nullopt);
    REQUIRE(a.solution);
    REQUIRE(b.solution);
    CHECK(a.solution->first.same_payload(b.solution->first));
    CHECK(a.solution->second.same_payload(b.solution->second));
    CHECK(b.cost <= a.cost);
  }
}

TEST_CASE("attack_a_key: documented examples") {
  Rng rng(4);
  const auto z = make_permutation_cycles(4, {{1, 2, 3}});
  const auto trivial = attack_a_key(identity_params(z), z, rng);
  CHECK(trivial.verified);
  CHECK(is_identity(multiply({trivial.equivalent_pair.first, z, trivial.equivalent_pair.second})) ==
        is_identity(z));

  for (const auto* name : {"perm6", "perm6-method2", "perm6-method3", "matrix-2-3"}) {
    CAPTURE(name);
    const auto params = make_preset(name).params;
    for (int i = 0; i < 10; ++i) {
      const auto key = keygen(params, rng);
      const auto res = attack_a_key(params, key.z_prime, rng);
      CHECK(res.verified);
      CHECK(equal(multiply({res.equivalent_pair.first, params.z(), res.equivalent_pair.second}), key.z_prime));
      CHECK(res.search_cost <= res.search_space);
    }
  }

  AttackOptions variant;
  variant.variant_scheme = true;
  const auto m = make_preset("matrix-2-3").params;
  for (int i = 0; i < 10; ++i) {
    const auto key = keygen_variant(m, rng);
    const auto res = attack_a_key(m, key.z_prime, rng, variant);
    CHECK(res.verified);
    CHECK(is_invertible(res.equivalent_pair.first));
    CHECK(is_invertible(res.equivalent_pair.second));
  }

  const auto toy = make_preset("b4-toy").params;
  AttackOptions fam;
  fam.left_family = toy.family().L_A;
  fam.right_family = toy.family().R_A;
  fam.left_bound = 2;
  fam.right_bound = 2;
  const auto key = keygen(toy, rng);
  CHECK(attack_a_key(toy, key.z_prime, rng, fam).verified);
  CHECK(code_of([&] { attack_a_key(toy, key.z_prime, rng); }) == Errc::InfinitePlatform);
}

TEST_CASE("attack_a_key reports NotFound outside the coset") {
  Rng rng(5);
  const auto params = make_preset("perm6").params;
  // An odd target while every candidate pair preserves the parity of z.
  const auto cl = centralizer_of_subset(params.family().L_B).generators();
  const auto cr = centralizer_of_subset(params.family().R_B).generators();
  bool reachable = false;
  const auto target = make_permutation_cycles(6, {{1, 2, 3, 4, 5, 6}});
  for (const auto& l : cl)
    for (const auto& r : cr) reachable = reachable || equal(multiply({l, params.z(), r}), target);
  REQUIRE_FALSE(reachable);
  CHECK(code_of([&] { attack_a_key(params, target, rng); }) == Errc::NotFound);
}

TEST_CASE("attack_b_key: documented examples") {
  Rng rng(6);
  const auto z = make_permutation_cycles(5, {{1, 2}});
  const auto idp = identity_params(z);
  const auto r0 = attack_b_key(idp, z, z, z);
  CHECK(r0.verified);
  CHECK(is_identity(r0.equivalent_pair.first));

  for (const auto* name : {"perm6", "perm6-method2", "perm6-method3", "matrix-2-3", "stickel", "b4-toy"}) {
    CAPTURE(name);
    const auto params = make_preset(name).params;
    for (int i = 0; i < 10; ++i) {
      const auto a = ka_publish(params, Role::A, rng);
      const auto b = ka_publish(params, Role::B, rng);
      const auto res = attack_b_key(params, a.published, b.published, ka_shared(a, b.published));
      CHECK(res.verified);
      CHECK(res.search_cost <= res.search_space);
    }
  }
}

TEST_CASE("attack_challenge impersonates A without its key") {
  Rng rng(7);
  for (const auto* name : {"perm6", "matrix-2-3", "perm6-method2"}) {
    const auto params = make_preset(name).params;
    for (int i = 0; i < 10; ++i) {
      const auto key = keygen(params, rng);
      CHECK(attack_challenge(params, key.z_prime, rng).verified);
    }
  }
}

TEST_CASE("attack_variant_b: documented examples") {
  Rng rng(8);
  const auto z = make_permutation_cycles(5, {{1, 2, 3}});
  const auto r0 = attack_variant_b(identity_params(z), z, z, z);
  CHECK(r0.verified);

  for (const auto* name : {"perm6", "perm6-method2", "matrix-2-3"}) {
    CAPTURE(name);
    const auto params = make_preset(name).params;
    for (int i = 0; i < 10; ++i) {
      const auto a = ka_variant_publish_a(params, rng);
      const auto b = ka_variant_publish_b(params, a.published, rng);
      const auto res = attack_variant_b(params, a.published, b.published, ka_variant_shared_b(params, b));
      CHECK(res.verified);
      CHECK(is_invertible(res.equivalent_pair.first));
    }
  }

  const auto toy = make_preset("b4-toy").params;
  AttackOptions fam;
  fam.left_family = with_inverses({make_braid(4, {1})});
  fam.right_family = with_inverses({make_braid(4, {2, 1, -2})});
  fam.left_bound = 2;
  fam.right_bound = 2;
  for (int i = 0; i < 10; ++i) {
    const auto a = ka_variant_publish_a(toy, rng);
    const auto b = ka_variant_publish_b(toy, a.published, rng);
    CHECK(attack_variant_b(toy, a.published, b.published, ka_variant_shared_b(toy, b), fam).verified);
  }
}

TEST_CASE("oracle finds the honest instance every time") {
  for (const auto* name : {"perm6", "matrix-2-3"}) {
    const auto params = make_preset(name).params;
    const auto& f = params.family();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      const auto key = keygen(params, rng);
      const auto s = brute_force_dp({params.z(), key.z_prime, f.L_A, f.R_A, f.L_A.max_length(), f.R_A.max_length()});
      REQUIRE(s.solution);
      CHECK(equal(multiply({s.solution->first, params.z(), s.solution->second}), key.z_prime));
    }
  }
}

TEST_CASE("attack report") {
  Rng rng(9);
  const auto params = make_preset("perm6").params;
  const auto key = keygen(params, rng);
  const auto rep = attack_a_key(params, key.z_prime, rng).to_report();
  CHECK(rep.find("a-key") != std::string::npos);
  CHECK(rep.find("PASSED") != std::string::npos);
}
