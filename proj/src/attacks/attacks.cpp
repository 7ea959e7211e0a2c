#include "ncsg/attacks.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ncsg/error.hpp"

namespace ncsg {

namespace {

std::uint64_t product_or_cap(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a != 0 && b > cap / a) return cap + 1;
  return a * b;
}

std::vector<Element> invertible_only(std::vector<Element> v) {
  std::erase_if(v, [](const Element& e) { return !is_invertible(e); });
  return v;
}

// Candidates on one side: an explicit family when supplied, otherwise the
// centralizer (finite platforms) or words of `defining` up to its sampling bound.
enum class Side { Centralizer, Generated };

std::vector<Element> candidates(const SubsetSpec& defining, Side side, const std::optional<SubsetSpec>& family,
                                std::optional<std::size_t> bound, std::uint64_t cap) {
  if (family) return enumerate_products(*family, bound ? bound : family->max_length(), cap);
  const auto& p = defining.platform();
  if (side == Side::Centralizer) {
    if (!p.is_finite())
      throw Error(Errc::InfinitePlatform, "centralizers on " + p.name() + " need a supplied search family");
    return centralizer_of_subset(defining).generators();
  }
  return enumerate_products(defining, bound ? bound : defining.max_length(), cap);
}

AttackResult found(AttackTarget t, const SearchOutcome& s, Verification v) {
  if (!s.solution)
    throw Error(Errc::NotFound, "no equivalent pair within the search space (" + std::to_string(s.cost) +
                                    " probes)");
  return AttackResult{t, *s.solution, v, false, s.cost, s.left_size * s.right_size};
}

}  // namespace

std::vector<Element> enumerate_products(const SubsetSpec& s, std::optional<std::size_t> max_length,
                                        std::uint64_t cap) {
  if (!max_length && !s.platform().is_finite())
    throw Error(Errc::InfinitePlatform, "closure of a subset of " + s.platform().name());
  std::vector<Element> out;
  std::unordered_set<std::string> seen;
  std::vector<Element> frontier;
  for (const auto& g : s.generators()) {
    auto c = canonicalize(g);
    if (seen.insert(element_key(c)).second) {
      out.push_back(c);
      frontier.push_back(std::move(c));
    }
  }
  for (std::size_t len = 2; !frontier.empty() && (!max_length || len <= *max_length); ++len) {
    std::vector<Element> next;
    for (const auto& f : frontier)
      for (const auto& g : s.generators()) {
        auto c = canonicalize(multiply(f, g));
        if (!seen.insert(element_key(c)).second) continue;
        if (out.size() >= cap) throw Error(Errc::SearchSpaceTooLarge, "enumeration exceeds cap");
        out.push_back(c);
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return out;
}

SearchOutcome brute_force_dp(const DecompositionInstance& inst, std::uint64_t cap) {
  const auto left = enumerate_products(inst.left, inst.left_bound, cap);
  const auto right = enumerate_products(inst.right, inst.right_bound, cap);
  SearchOutcome out;
  out.left_size = left.size();
  out.right_size = right.size();
  if (product_or_cap(left.size(), right.size(), cap) > cap)
    throw Error(Errc::SearchSpaceTooLarge, "search space " + std::to_string(left.size()) + " x " +
                                               std::to_string(right.size()) + " exceeds cap");
  for (const auto& f : left) {
    const auto fx = multiply(f, inst.x);
    for (const auto& g : right) {
      ++out.cost;
      if (equal(multiply(fx, g), inst.y)) {
        out.solution = ElementPair{f, g};
        return out;
      }
    }
  }
  return out;
}

SearchOutcome double_coset_search(const Element& w, const Element& w_prime, const std::vector<Element>& h1,
                                  const std::vector<Element>& h2, std::uint64_t cap) {
  SearchOutcome out;
  out.left_size = h1.size();
  out.right_size = h2.size();
  if (w.platform().has_inverses()) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < h2.size(); ++k) index.emplace(element_key(h2[k]), k);
    for (const auto& f : h1) {
      ++out.cost;
      const auto g = multiply(invert(multiply(f, w)), w_prime);
      if (const auto it = index.find(element_key(g)); it != index.end()) {
        out.solution = ElementPair{f, h2[it->second]};
        return out;
      }
    }
    return out;
  }
  if (product_or_cap(h1.size(), h2.size(), cap) > cap)
    throw Error(Errc::SearchSpaceTooLarge, "search space exceeds cap");
  const auto target = element_key(w_prime);
  for (const auto& f : h1) {
    const auto fw = multiply(f, w);
    for (const auto& g : h2) {
      ++out.cost;
      if (element_key(multiply(fw, g)) == target) {
        out.solution = ElementPair{f, g};
        return out;
      }
    }
  }
  return out;
}

SearchOutcome double_coset_search(const Element& w, const Element& w_prime, const SubsetSpec& h1,
                                  const SubsetSpec& h2, std::optional<std::size_t> left_bound,
                                  std::optional<std::size_t> right_bound, std::uint64_t cap) {
  return double_coset_search(w, w_prime, enumerate_products(h1, left_bound, cap),
                             enumerate_products(h2, right_bound, cap), cap);
}

std::string_view target_name(AttackTarget t) {
  switch (t) {
    case AttackTarget::AKey: return "a-key";
    case AttackTarget::BKey: return "b-key";
    case AttackTarget::SharedKey: return "shared-key";
  }
  return "?";
}

std::string AttackResult::to_report() const {
  std::ostringstream os;
  os << "target:       " << target_name(target) << '\n'
     << "pair.first:   " << to_string(equivalent_pair.first) << "  [" << to_hex(serialize(equivalent_pair.first))
     << "]\n"
     << "pair.second:  " << to_string(equivalent_pair.second) << "  ["
     << to_hex(serialize(equivalent_pair.second)) << "]\n"
     << "search cost:  " << search_cost << " of " << search_space << '\n'
     << "verification: "
     << (verified_by == Verification::ImpersonationAccept ? "impersonation" : "shared-key match") << ' '
     << (verified ? "PASSED" : "FAILED") << '\n';
  return os.str();
}

AttackResult attack_a_key(const ProtocolParams& params, const Element& z_prime, Rng& rng,
                          const AttackOptions& opt) {
  const auto& f = params.family();
  auto left = candidates(f.L_B, Side::Centralizer, opt.left_family, opt.left_bound, opt.cap);
  auto right = params.settings().method == SelectionMethod::Third
                   ? candidates(f.R_A, Side::Generated, opt.right_family, opt.right_bound, opt.cap)
                   : candidates(f.R_B, Side::Centralizer, opt.right_family, opt.right_bound, opt.cap);
  if (opt.variant_scheme) {
    left = invertible_only(std::move(left));
    right = invertible_only(std::move(right));
  }
  auto res = found(AttackTarget::AKey, double_coset_search(params.z(), z_prime, left, right, opt.cap),
                   Verification::ImpersonationAccept);
  const KeyPair forged{res.equivalent_pair.first, res.equivalent_pair.second, params.z(), z_prime};
  res.verified = true;
  for (std::size_t k = 0; k < opt.impersonation_rounds; ++k) {
    if (opt.variant_scheme) {
      const auto st = challenge_variant(params, z_prime, rng);
      res.verified = res.verified && verify_variant(params, st, respond_variant(params, forged, st.x));
    } else {
      const auto st = challenge(params, rng);
      res.verified = res.verified && verify(params, st, z_prime, respond(params, forged, st.x));
    }
  }
  return res;
}

AttackResult attack_b_key(const ProtocolParams& params, const Element& k_a, const Element& k_b,
                          const Element& honest_kappa, const AttackOptions& opt) {
  const auto& f = params.family();
  const auto left = candidates(f.L_B, Side::Generated, opt.left_family, opt.left_bound, opt.cap);
  const auto right = params.settings().method == SelectionMethod::Third
                         ? candidates(f.R_A, Side::Centralizer, opt.right_family, opt.right_bound, opt.cap)
                         : candidates(f.R_B, Side::Generated, opt.right_family, opt.right_bound, opt.cap);
  auto res = found(AttackTarget::BKey, double_coset_search(params.z(), k_b, left, right, opt.cap),
                   Verification::SharedKeyMatch);
  res.verified = equal(multiply({res.equivalent_pair.first, k_a, res.equivalent_pair.second}), honest_kappa);
  return res;
}

AttackResult attack_challenge(const ProtocolParams& params, const Element& z_prime, Rng& rng,
                              const AttackOptions& opt) {
  const auto& f = params.family();
  const auto left = candidates(f.L_B, Side::Generated, opt.left_family, opt.left_bound, opt.cap);
  const auto right = params.settings().method == SelectionMethod::Third
                         ? candidates(f.R_A, Side::Centralizer, opt.right_family, opt.right_bound, opt.cap)
                         : candidates(f.R_B, Side::Generated, opt.right_family, opt.right_bound, opt.cap);
  const auto st = challenge(params, rng);
  auto res = found(AttackTarget::BKey, double_coset_search(params.z(), st.x, left, right, opt.cap),
                   Verification::ImpersonationAccept);
  const auto w = hash_element(multiply({res.equivalent_pair.first, z_prime, res.equivalent_pair.second}),
                              params.settings().hash);
  res.verified = verify(params, st, z_prime, w);
  return res;
}

AttackResult attack_variant_b(const ProtocolParams& params, const Element& k_a, const Element& k_b,
                              const Element& honest_kappa, const AttackOptions& opt) {
  const auto& f = params.family();
  const auto left = invertible_only(candidates(f.L_B, Side::Centralizer, opt.left_family, opt.left_bound, opt.cap));
  const auto right = invertible_only(
      params.settings().method == SelectionMethod::Third
          ? candidates(f.R_A, Side::Generated, opt.right_family, opt.right_bound, opt.cap)
          : candidates(f.R_B, Side::Centralizer, opt.right_family, opt.right_bound, opt.cap));
  const auto s = double_coset_search(k_a, params.z(), left, right, opt.cap);
  auto res = found(AttackTarget::SharedKey, s, Verification::SharedKeyMatch);
  const auto& [u, v] = res.equivalent_pair;
  res.verified = equal(multiply({u, k_b, v}), honest_kappa);
  // Report the pair in the form the scheme uses: a1' = u^-1, a2' = v^-1.
  res.equivalent_pair = ElementPair{invert(u), invert(v)};
  return res;
}

}  // namespace ncsg
