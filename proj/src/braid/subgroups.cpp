#include "ncsg/algebra.hpp"

namespace ncsg {

std::pair<SubsetSpec, SubsetSpec> standard_commuting_subgroups(int n) {
  const auto ranges = braid::standard_commuting_ranges(n);
  std::vector<Element> lower, upper;
  for (int i : ranges.lower) lower.push_back(make_braid(n, {i}));
  for (int i : ranges.upper) upper.push_back(make_braid(n, {i}));
  return {SubsetSpec(std::move(lower)), SubsetSpec(std::move(upper))};
}

}  // namespace ncsg
