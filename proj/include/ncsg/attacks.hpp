#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsg/algebra.hpp"
#include "ncsg/conditions.hpp"
#include "ncsg/protocols.hpp"
#include "ncsg/rng.hpp"

namespace ncsg {

inline constexpr std::uint64_t kDefaultSearchCap = 4'000'000;

// Distinct elements of positive words over `s` with lengths 1..max_length,
// in order of first appearance (length, then generator index). nullopt asks
// for the closure, which only terminates on finite platforms.
// Throws InfinitePlatform or SearchSpaceTooLarge.
std::vector<Element> enumerate_products(const SubsetSpec& s, std::optional<std::size_t> max_length,
                                        std::uint64_t cap = kDefaultSearchCap);

struct DecompositionInstance {
  Element x;
  Element y;
  SubsetSpec left;
  SubsetSpec right;
  std::optional<std::size_t> left_bound;
  std::optional<std::size_t> right_bound;
};

struct SearchOutcome {
  std::optional<ElementPair> solution;
  // Candidate pairs ruled on (nested loop) or left elements probed (lookup).
  std::uint64_t cost = 0;
  std::uint64_t left_size = 0;
  std::uint64_t right_size = 0;
};

// Nested loop over (f, g); first f x g = y in enumeration order.
// Throws SearchSpaceTooLarge when |left| * |right| exceeds cap.
SearchOutcome brute_force_dp(const DecompositionInstance& inst, std::uint64_t cap = kDefaultSearchCap);

// Same answer as brute_force_dp over explicit candidate lists. On groups
// the right factor is solved for, g = (f w)^-1 w', and looked up.
SearchOutcome double_coset_search(const Element& w, const Element& w_prime, const std::vector<Element>& h1,
                                  const std::vector<Element>& h2, std::uint64_t cap = kDefaultSearchCap);
SearchOutcome double_coset_search(const Element& w, const Element& w_prime, const SubsetSpec& h1,
                                  const SubsetSpec& h2, std::optional<std::size_t> left_bound,
                                  std::optional<std::size_t> right_bound, std::uint64_t cap = kDefaultSearchCap);

enum class AttackTarget : std::uint8_t { AKey, BKey, SharedKey };
enum class Verification : std::uint8_t { ImpersonationAccept, SharedKeyMatch };

struct AttackResult {
  AttackTarget target;
  ElementPair equivalent_pair;
  Verification verified_by;
  bool verified;
  std::uint64_t search_cost;
  std::uint64_t search_space;

  std::string to_report() const;
};

struct AttackOptions {
  // Candidate families for sides whose centralizer cannot be enumerated
  // (braids). Words up to the matching bound are searched; generated sides
  // default to the subset's sampling bound.
  std::optional<SubsetSpec> left_family;
  std::optional<SubsetSpec> right_family;
  std::optional<std::size_t> left_bound;
  std::optional<std::size_t> right_bound;
  std::uint64_t cap = kDefaultSearchCap;
  // Fresh honest challenges the forged key must pass.
  std::size_t impersonation_rounds = 4;
  // Target the variant scheme: only invertible candidates, variant replies.
  bool variant_scheme = false;
};

// Finds (a1', a2') with a1' z a2' = z' in C(L_B) z C(R_B) (methods 1, 2)
// or C(L_B) z <R_A> (method 3), then impersonates A against fresh
// challenges. Throws NotFound, InfinitePlatform.
AttackResult attack_a_key(const ProtocolParams& params, const Element& z_prime, Rng& rng,
                          const AttackOptions& options = {});

// Finds (b1', b2') with b1' z b2' = K_B in <L_B> z <R_B> (methods 1, 2) or
// <L_B> z C(R_A) (method 3); verified by b1' K_A b2' = honest kappa.
AttackResult attack_b_key(const ProtocolParams& params, const Element& k_a, const Element& k_b,
                          const Element& honest_kappa, const AttackOptions& options = {});

// Authentication form of the B-key attack: solves an honest challenge x
// for (b1', b2') and answers with H(b1' z' b2').
AttackResult attack_challenge(const ProtocolParams& params, const Element& z_prime, Rng& rng,
                              const AttackOptions& options = {});

// Variant schemes: finds invertible (a1', a2') with a1'^-1 K_A a2'^-1 = z
// by searching u K_A v = z over C(L_B) x C(R_B); kappa = u K_B v.
AttackResult attack_variant_b(const ProtocolParams& params, const Element& k_a, const Element& k_b,
                              const Element& honest_kappa, const AttackOptions& options = {});

std::string_view target_name(AttackTarget t);

}  // namespace ncsg
