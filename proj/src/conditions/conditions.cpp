#include "ncsg/conditions.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ncsg/error.hpp"

namespace ncsg {

namespace {

void require_platform(const SubsetSpec& s, const Platform& p) {
  if (!(s.platform() == p))
    throw Error(Errc::PlatformMismatch, "subset over " + s.platform().name() + ", expected " + p.name());
}

SubsetSpec singleton(const Element& e, SubsetLabel label) { return SubsetSpec({e}, label); }

ConditionClause evaluate(const SubsetSpec& l, const SubsetSpec& r, Requirement req) {
  const auto res = subsets_commute(l, r);
  ConditionClause c{l.label(), r.label(), req, false, res.witness};
  c.holds = (req == Requirement::Commute) == res.commute;
  return c;
}

ConditionReport finish(ConditionVariant v, std::vector<ConditionClause> clauses) {
  const bool all = std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.holds; });
  return ConditionReport{v, std::move(clauses), all};
}

// Up to `count` members of C(anchor), preferring non-identity elements.
SubsetSpec publish_centralizer(const Element& anchor, SubsetLabel label, Rng& rng,
                               const SelectionOptions& opt) {
  auto members = centralizer_enumerate(anchor.platform(), anchor).generators();
  std::vector<Element> nontrivial;
  for (auto& m : members)
    if (!is_identity(m)) nontrivial.push_back(m);
  auto& pool = nontrivial.empty() ? members : nontrivial;
  // Partial Fisher-Yates: the first `take` entries are a uniform subset.
  const auto take = std::min(opt.generator_count, pool.size());
  for (std::size_t k = 0; k < take; ++k) std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end());
  return SubsetSpec(std::move(pool), label, opt.min_length, opt.max_length);
}

Element pick_anchor(const std::optional<Element>& given, const Platform& p, Rng& rng) {
  if (given) {
    if (!(given->platform() == p)) throw Error(Errc::PlatformMismatch, "anchor platform");
    return *given;
  }
  if (!p.is_finite()) throw Error(Errc::InfinitePlatform, "anchors must be supplied for " + p.name());
  return sample(platform_generators(p).with_range(1, 16), rng);
}

SubsetSpec whole(const Platform& p, SubsetLabel label, const SelectionOptions& opt) {
  return platform_generators(p).with_label(label).with_range(opt.min_length, opt.max_length);
}

void require_anchor_commutes(const SubsetSpec& s, const Element& anchor, const char* what) {
  for (const auto& g : s.generators())
    if (!commute(g, anchor))
      throw Error(Errc::ConditionViolated,
                  std::string(what) + " generator " + to_string(g) + " does not commute with its anchor");
}

}  // namespace

SubsetFamily make_family(Element z, SubsetSpec L_A, SubsetSpec R_A, SubsetSpec L_B, SubsetSpec R_B) {
  const auto p = z.platform();
  for (const auto* s : {&L_A, &R_A, &L_B, &R_B}) require_platform(*s, p);
  SubsetSpec Z({z}, SubsetLabel::Z);
  return SubsetFamily{std::move(z), std::move(Z), L_A.with_label(SubsetLabel::LA),
                      R_A.with_label(SubsetLabel::RA), L_B.with_label(SubsetLabel::LB),
                      R_B.with_label(SubsetLabel::RB)};
}

CommuteResult subsets_commute(const SubsetSpec& s1, const SubsetSpec& s2) {
  require_platform(s2, s1.platform());
  for (const auto& x : s1.generators())
    for (const auto& y : s2.generators())
      if (!commute(x, y)) return {false, ElementPair{x, y}};
  return {true, std::nullopt};
}

std::string ConditionClause::label() const {
  return "[" + std::string(label_name(left)) + "," + std::string(label_name(right)) + "]" +
         (required == Requirement::Commute ? "=1" : "!=1");
}

const ConditionClause* ConditionReport::first_failure() const {
  for (const auto& c : clauses)
    if (!c.holds) return &c;
  return nullptr;
}

std::string ConditionReport::to_table() const {
  std::ostringstream os;
  os << "condition " << (variant == ConditionVariant::A ? "a (z != e)" : "b (z = e)") << '\n';
  os << std::left << std::setw(16) << "clause" << std::setw(12) << "required" << std::setw(7) << "holds"
     << "witness\n";
  for (const auto& c : clauses) {
    os << std::setw(16) << c.label() << std::setw(12)
       << (c.required == Requirement::Commute ? "commute" : "not-commute") << std::setw(7)
       << (c.holds ? "yes" : "NO");
    if (c.witness) os << to_string(c.witness->first) << " ; " << to_string(c.witness->second);
    os << '\n';
  }
  os << "all_hold: " << (all_hold ? "true" : "false") << '\n';
  return os.str();
}

ConditionReport check_condition_a(const SubsetFamily& f) {
  if (is_identity(f.z)) throw Error(Errc::ZIsIdentity, "condition a needs z != e; use condition b");
  using enum Requirement;
  return finish(ConditionVariant::A, {evaluate(f.L_A, f.L_B, Commute), evaluate(f.R_A, f.R_B, Commute),
                                      evaluate(f.L_B, f.Z, NotCommute), evaluate(f.L_A, f.Z, NotCommute),
                                      evaluate(f.R_B, f.Z, NotCommute), evaluate(f.R_A, f.Z, NotCommute),
                                      evaluate(f.L_A, f.R_A, NotCommute), evaluate(f.L_B, f.R_B, NotCommute)});
}

ConditionReport check_condition_b(const SubsetFamily& f) {
  if (!is_identity(f.z)) throw Error(Errc::ZNotIdentity, "condition b needs z = e; use condition a");
  using enum Requirement;
  return finish(ConditionVariant::B, {evaluate(f.L_A, f.L_B, Commute), evaluate(f.R_A, f.R_B, Commute),
                                      evaluate(f.L_A, f.R_A, NotCommute), evaluate(f.L_B, f.R_B, NotCommute),
                                      evaluate(f.L_B, f.R_A, NotCommute), evaluate(f.L_A, f.R_B, NotCommute)});
}

ConditionReport check_condition(const SubsetFamily& family, ConditionVariant variant) {
  return variant == ConditionVariant::A ? check_condition_a(family) : check_condition_b(family);
}

SelectionOutcome select_method2(const Element& z, Rng& rng, const SelectionOptions& opt) {
  const auto& p = z.platform();
  if (!p.is_finite()) throw Error(Errc::InfinitePlatform, "method 2 needs supplied families on " + p.name());
  const auto a1 = pick_anchor(opt.left_anchor, p, rng);
  const auto a2 = pick_anchor(opt.right_anchor, p, rng);
  auto L_B = publish_centralizer(a1, SubsetLabel::LB, rng, opt);
  auto R_B = publish_centralizer(a2, SubsetLabel::RB, rng, opt);
  return SelectionOutcome{SelectionMethod::Second,
                          make_family(z, whole(p, SubsetLabel::LA, opt), whole(p, SubsetLabel::RA, opt),
                                      std::move(L_B), std::move(R_B)),
                          Anchors{a1, a2, std::nullopt}};
}

SelectionOutcome select_method2(const Element& z, const Element& a1, const Element& a2, SubsetSpec L_B,
                                SubsetSpec R_B) {
  require_anchor_commutes(L_B, a1, "L_B");
  require_anchor_commutes(R_B, a2, "R_B");
  const auto& p = z.platform();
  const SelectionOptions opt{};
  return SelectionOutcome{SelectionMethod::Second,
                          make_family(z, whole(p, SubsetLabel::LA, opt), whole(p, SubsetLabel::RA, opt),
                                      std::move(L_B), std::move(R_B)),
                          Anchors{a1, a2, std::nullopt}};
}

SelectionOutcome select_method3(const Element& z, Rng& rng, const SelectionOptions& opt) {
  const auto& p = z.platform();
  if (!p.is_finite()) throw Error(Errc::InfinitePlatform, "method 3 needs supplied families on " + p.name());
  const auto a1 = pick_anchor(opt.left_anchor, p, rng);
  const auto b2 = pick_anchor(opt.right_anchor, p, rng);
  auto L_B = publish_centralizer(a1, SubsetLabel::LB, rng, opt);
  auto R_A = publish_centralizer(b2, SubsetLabel::RA, rng, opt);
  return SelectionOutcome{SelectionMethod::Third,
                          make_family(z, whole(p, SubsetLabel::LA, opt), std::move(R_A), std::move(L_B),
                                      whole(p, SubsetLabel::RB, opt)),
                          Anchors{a1, std::nullopt, b2}};
}

SelectionOutcome select_method3(const Element& z, const Element& a1, const Element& b2, SubsetSpec L_B,
                                SubsetSpec R_A) {
  require_anchor_commutes(L_B, a1, "L_B");
  require_anchor_commutes(R_A, b2, "R_A");
  const auto& p = z.platform();
  const SelectionOptions opt{};
  return SelectionOutcome{SelectionMethod::Third,
                          make_family(z, whole(p, SubsetLabel::LA, opt), std::move(R_A), std::move(L_B),
                                      whole(p, SubsetLabel::RB, opt)),
                          Anchors{a1, std::nullopt, b2}};
}

bool selection_invariants_hold(const SelectionOutcome& o) {
  const auto all_commute = [](const SubsetSpec& s, const std::optional<Element>& anchor) {
    if (!anchor) return false;
    return std::all_of(s.generators().begin(), s.generators().end(),
                       [&](const Element& g) { return commute(g, *anchor); });
  };
  switch (o.method) {
    case SelectionMethod::First: return true;
    case SelectionMethod::Second:
      return all_commute(o.family.L_B, o.anchors.a1) && all_commute(o.family.R_B, o.anchors.a2);
    case SelectionMethod::Third:
      return all_commute(o.family.L_B, o.anchors.a1) && all_commute(o.family.R_A, o.anchors.b2);
  }
  return false;
}

SubsetFamily effective_family(const SelectionOutcome& o) {
  auto f = o.family;
  const auto need = [](const std::optional<Element>& e) -> const Element& {
    if (!e) throw Error(Errc::InvalidArgument, "selection outcome lacks an anchor");
    return *e;
  };
  switch (o.method) {
    case SelectionMethod::First: break;
    case SelectionMethod::Second:
      f.L_A = singleton(need(o.anchors.a1), SubsetLabel::LA);
      f.R_A = singleton(need(o.anchors.a2), SubsetLabel::RA);
      break;
    case SelectionMethod::Third:
      f.L_A = singleton(need(o.anchors.a1), SubsetLabel::LA);
      f.R_B = singleton(need(o.anchors.b2), SubsetLabel::RB);
      break;
  }
  return f;
}

}  // namespace ncsg
