#include <functional>
#include <map>

#include "ncsg/error.hpp"
#include "ncsg/protocols.hpp"

namespace ncsg {

namespace {

SubsetSpec subset(std::vector<Element> gens, std::size_t lo, std::size_t hi) {
  return SubsetSpec(std::move(gens), SubsetLabel::Custom, lo, hi);
}

Element perm(std::initializer_list<std::vector<int>> cycles) { return make_permutation_cycles(6, cycles); }
Element m23(std::vector<int> entries) { return make_matrix(2, 3, std::move(entries)); }
Element s(int n, std::vector<int> letters) { return make_braid(n, std::move(letters)); }

constexpr std::size_t kPermMax = 3;
constexpr std::size_t kBraidMax = 4;

SubsetFamily perm6_family() {
  return make_family(perm({{1, 4}, {2, 5, 3, 6}}),
                     subset({perm({{1, 2}}), perm({{1, 2, 3}})}, 1, kPermMax),
                     subset({perm({{1, 2}}), perm({{1, 2, 4}})}, 1, kPermMax),
                     subset({perm({{4, 5}}), perm({{4, 5, 6}})}, 1, kPermMax),
                     subset({perm({{5, 6}}), perm({{3, 5, 6}})}, 1, kPermMax));
}

Preset perm6() {
  return {"perm6", "S_6, method 1, condition a; subsets supported on {1,2,3}/{4,5,6} and {1,2,4}/{3,5,6}",
          ProtocolParams(perm6_family(), {})};
}

// First seed whose random anchors satisfy condition a on the effective family.
Preset perm6_selected(SelectionMethod method) {
  const auto z = perm6_family().z;
  for (std::uint64_t seed = 1;; ++seed) {
    Rng rng(seed);
    SelectionOptions opt;
    opt.max_length = kPermMax;
    const auto outcome = method == SelectionMethod::Second ? select_method2(z, rng, opt)
                                                           : select_method3(z, rng, opt);
    try {
      auto params = ProtocolParams::from_selection(outcome, {});
      const bool second = method == SelectionMethod::Second;
      return {second ? "perm6-method2" : "perm6-method3",
              second ? "S_6, method 2: L_B, R_B published inside the centralizers of A's anchors"
                     : "S_6, method 3: L_B inside C(a1) from A, R_A inside C(b2) from B",
              std::move(params)};
    } catch (const Error& e) {
      if (e.code() != Errc::ConditionViolated) throw;
    }
  }
}

Preset matrix23() {
  auto f = make_family(m23({0, 1, 1, 1}),
                       subset({m23({1, 1, 0, 1}), m23({2, 1, 0, 2})}, 1, kPermMax),
                       subset({m23({0, 2, 1, 0}), m23({1, 2, 1, 1})}, 1, kPermMax),
                       subset({m23({0, 1, 0, 0}), m23({1, 2, 0, 1})}, 1, kPermMax),
                       subset({m23({2, 2, 1, 2}), m23({0, 1, 2, 0})}, 1, kPermMax));
  return {"matrix-2-3", "M_2(Z/3) semigroup, condition a; L_B contains a singular matrix",
          ProtocolParams(std::move(f), {})};
}

SubsetFamily lb_ub_family(int n, Element z) {
  auto [lb, ub] = standard_commuting_subgroups(n);
  lb = lb.with_range(1, kBraidMax);
  ub = ub.with_range(1, kBraidMax);
  return make_family(std::move(z), lb, lb, ub, ub);
}

ProtocolSettings inverse_pair() {
  ProtocolSettings st;
  st.shape = SecretShape::InversePair;
  return st;
}

Preset sdg_b6() {
  return {"sdg-b6", "B_6, L_A=R_A=LB_6, L_B=R_B=UB_6, a2=a1^-1, b2=b1^-1 (conjugacy-based authentication)",
          ProtocolParams(lb_ub_family(6, s(6, {3, -2, 4, 3})), inverse_pair())};
}

Preset sdg_b8() {
  return {"sdg-b8", "B_8 version of sdg-b6",
          ProtocolParams(lb_ub_family(8, s(8, {4, -3, 5, 4})), inverse_pair())};
}

Preset cklhc_b6() {
  return {"cklhc-b6", "B_6, L_A=R_A=LB_6, L_B=R_B=UB_6, independent left and right secrets",
          ProtocolParams(lb_ub_family(6, s(6, {3, -2, 4, 3})), {})};
}

Preset klchkp_b6() {
  return {"klchkp-b6", "cklhc-b6 with a2=a1^-1 and b2=b1^-1",
          ProtocolParams(lb_ub_family(6, s(6, {3, -2, 4, 3})), inverse_pair())};
}

Preset shpilrain_b6() {
  auto [lb, ub] = standard_commuting_subgroups(6);
  lb = lb.with_range(1, kBraidMax);
  ub = ub.with_range(1, kBraidMax);
  // L_A = R_B and L_B = R_A. [L_A,R_A] = [LB,UB] = 1, so condition a cannot
  // hold; built unchecked.
  auto f = make_family(s(6, {3, -2, 4, 3}), lb, ub, ub, lb);
  return {"shpilrain-b6", "B_6, L_A=R_B=LB_6, L_B=R_A=UB_6 (unchecked: violates [L_A,R_A]!=1)",
          ProtocolParams::make_unchecked(std::move(f), {})};
}

Preset stickel() {
  const Platform p = Platform::matrix_mod_p(3, 251);
  const auto a = make_matrix(3, 251, {1, 1, 0, 0, 1, 1, 1, 0, 0});
  const auto b = make_matrix(3, 251, {2, 0, 1, 1, 1, 0, 0, 1, 1});
  // Exponents 1..32; both matrices have order far above 32.
  const auto A = subset({a}, 1, 32);
  const auto B = subset({b}, 1, 32);
  ProtocolSettings st;
  st.condition = ConditionVariant::B;
  return {"stickel", "M_3(Z/251), z=e, L_A=L_B=<a>, R_A=R_B=<b>, secrets are powers a^k, b^k",
          ProtocolParams(make_family(identity(p), A, B, A, B), st)};
}

Preset b5_bits() {
  // (s1 s2 s3)^4 is the full twist on strands 1..4: it commutes with s1, s2.
  std::vector<int> twist;
  for (int k = 0; k < 4; ++k) twist.insert(twist.end(), {1, 2, 3});
  const auto left = subset({s(5, {1}), s(5, {2})}, 1, kBraidMax);
  const auto right = subset({s(5, {4}), s(5, twist)}, 1, 2);
  return {"b5-bits", "B_5 key agreement feeding the no-normal-form bit exchange",
          ProtocolParams(make_family(s(5, {3}), left, left, right, right), {})};
}

Preset b4_toy() {
  auto f = make_family(s(4, {2}), subset({s(4, {1})}, 1, 2), subset({s(4, {2, 1, -2})}, 1, 2),
                       subset({s(4, {3})}, 1, 2), subset({s(4, {2, 3, -2})}, 1, 2));
  return {"b4-toy", "B_4 toy instance small enough for bounded attack searches",
          ProtocolParams(std::move(f), {})};
}

const std::map<std::string, std::function<Preset()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Preset()>, std::less<>> r{
      {"perm6", perm6},
      {"perm6-method2", [] { return perm6_selected(SelectionMethod::Second); }},
      {"perm6-method3", [] { return perm6_selected(SelectionMethod::Third); }},
      {"matrix-2-3", matrix23},
      {"sdg-b6", sdg_b6},
      {"sdg-b8", sdg_b8},
      {"cklhc-b6", cklhc_b6},
      {"klchkp-b6", klchkp_b6},
      {"shpilrain-b6", shpilrain_b6},
      {"stickel", stickel},
      {"b5-bits", b5_bits},
      {"b4-toy", b4_toy},
  };
  return r;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

Preset make_preset(std::string_view name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw Error(Errc::InvalidArgument, "unknown preset '" + std::string(name) + "'");
  return it->second();
}

}  // namespace ncsg
