#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsg/algebra.hpp"
#include "ncsg/rng.hpp"

namespace ncsg {

// The public element z and the five subsets agreed in the setup phase.
struct SubsetFamily {
  Element z;
  SubsetSpec Z;
  SubsetSpec L_A;
  SubsetSpec R_A;
  SubsetSpec L_B;
  SubsetSpec R_B;

  const Platform& platform() const { return z.platform(); }
};

// Builds a family with labels applied and Z = {z}. Throws PlatformMismatch.
SubsetFamily make_family(Element z, SubsetSpec L_A, SubsetSpec R_A, SubsetSpec L_B, SubsetSpec R_B);

using ElementPair = std::pair<Element, Element>;

struct CommuteResult {
  bool commute;
  // A generator pair (x, y) with xy != yx, present iff !commute.
  std::optional<ElementPair> witness;
};

// Generator-level check; commutation of generators propagates to products.
CommuteResult subsets_commute(const SubsetSpec& s1, const SubsetSpec& s2);

enum class ConditionVariant : std::uint8_t { A = 0, B = 1 };
enum class Requirement : std::uint8_t { Commute, NotCommute };

struct ConditionClause {
  SubsetLabel left;
  SubsetLabel right;
  Requirement required;
  bool holds;
  std::optional<ElementPair> witness;

  std::string label() const;
};

struct ConditionReport {
  ConditionVariant variant;
  std::vector<ConditionClause> clauses;
  bool all_hold;

  const ConditionClause* first_failure() const;
  std::string to_table() const;
};

// z != e case: eight clauses. Throws ZIsIdentity when z = e.
ConditionReport check_condition_a(const SubsetFamily& family);
// z = e case: six clauses. Throws ZNotIdentity when z != e.
ConditionReport check_condition_b(const SubsetFamily& family);
ConditionReport check_condition(const SubsetFamily& family, ConditionVariant variant);

enum class SelectionMethod : std::uint8_t { First = 1, Second = 2, Third = 3 };

// Secret elements whose centralizers were published. Method 2 uses a1, a2
// (both A's); method 3 uses a1 (A's) and b2 (B's).
struct Anchors {
  std::optional<Element> a1;
  std::optional<Element> a2;
  std::optional<Element> b2;
};

struct SelectionOutcome {
  SelectionMethod method;
  SubsetFamily family;
  Anchors anchors;
};

struct SelectionOptions {
  std::optional<Element> left_anchor;
  std::optional<Element> right_anchor;
  // Published generators per centralizer subset.
  std::size_t generator_count = 4;
  std::size_t min_length = 1;
  std::size_t max_length = 3;
};

// A picks anchors (a1, a2) and publishes L_B within C(a1), R_B within C(a2).
// L_A and R_A are the whole platform. Throws InfinitePlatform for braids.
SelectionOutcome select_method2(const Element& z, Rng& rng, const SelectionOptions& options = {});
// Braid form: the caller supplies generator families known to commute with
// the anchors. Throws ConditionViolated if they do not.
SelectionOutcome select_method2(const Element& z, const Element& a1, const Element& a2,
                                SubsetSpec L_B, SubsetSpec R_B);

// A picks a1 and publishes L_B within C(a1); B picks b2 and publishes R_A
// within C(b2). L_A and R_B are the whole platform.
SelectionOutcome select_method3(const Element& z, Rng& rng, const SelectionOptions& options = {});
SelectionOutcome select_method3(const Element& z, const Element& a1, const Element& b2,
                                SubsetSpec L_B, SubsetSpec R_A);

// Generator-vs-anchor commutation for methods 2 and 3; true for method 1.
bool selection_invariants_hold(const SelectionOutcome& outcome);

// The family the commutativity conditions are evaluated on: sides equal to
// the whole platform are replaced by the singleton anchor they hide.
SubsetFamily effective_family(const SelectionOutcome& outcome);

}  // namespace ncsg
