#pragma once

// Search domains: the finite universe behind every bounded check.
//
// Every verdict produced by the oracle, kernel and decomposition checks is
// relative to one of these domains: state quantifiers range over the
// per-variable value sets, value quantifiers (exists v, and the v inside
// assignment postimages) range over value_range, family indices range over
// [0, n_max], and executions are cut off after `fuel` loop iterations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relic/errors.hpp"
#include "relic/imp.hpp"

namespace relic {

struct SearchDomain {
  // Per-variable candidate values, each sorted ascending and deduplicated.
  // Variables not listed are fixed at the default value 0.
  std::map<std::string, std::vector<std::int64_t>> ranges;

  // Loop-iteration budget for every execution performed during a check.
  std::uint64_t fuel = 8;

  // Family indices n range over [0, n_max] inclusive.
  std::int64_t n_max = 4;

  // Values for "exists v." binders and assignment-postimage witnesses.
  // Empty means "use the union of all per-variable ranges".
  std::vector<std::int64_t> value_range;

  // Upper bound on the number of enumerated states.
  std::uint64_t state_cap = 1u << 20;

  void set_range(const std::string& var, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> vs;
    for (std::int64_t v = lo; v <= hi; ++v) vs.push_back(v);
    ranges[var] = std::move(vs);
  }

  std::vector<std::int64_t> quantifier_values() const {
    if (!value_range.empty()) return value_range;
    std::set<std::int64_t> all;
    for (const auto& [_, vs] : ranges) all.insert(vs.begin(), vs.end());
    if (all.empty()) all.insert(0);
    return {all.begin(), all.end()};
  }
};

// Uniform domain: every named variable (and the quantifier range) gets the
// same value set [lo, hi].
inline SearchDomain uniform_domain(const std::set<std::string>& vars, std::int64_t lo,
                                   std::int64_t hi, std::uint64_t fuel = 8,
                                   std::int64_t n_max = 4) {
  SearchDomain dom;
  for (const auto& v : vars) dom.set_range(v, lo, hi);
  for (std::int64_t v = lo; v <= hi; ++v) dom.value_range.push_back(v);
  dom.fuel = fuel;
  dom.n_max = n_max;
  return dom;
}

// All states over the domain's variables: the Cartesian product of the
// per-variable value sets, all other variables at the default 0.
//
// Order is fixed for reproducible witnesses: variables sorted by name, values
// ascending, with the lexicographically first variable varying slowest (an
// odometer whose most significant digit is the first variable).
inline std::vector<State> enumerate_states(const SearchDomain& dom) {
  std::vector<std::string> names;
  std::vector<const std::vector<std::int64_t>*> values;
  std::uint64_t total = 1;
  for (const auto& [name, vs] : dom.ranges) {
    if (vs.empty()) throw DomainCapError("empty value set for variable " + name);
    names.push_back(name);
    values.push_back(&vs);
    if (total > dom.state_cap / vs.size())
      throw DomainCapError("state enumeration would exceed cap of " +
                           std::to_string(dom.state_cap) + " states");
    total *= vs.size();
  }

  std::vector<State> out;
  out.reserve(total);
  std::vector<std::size_t> idx(names.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    State s;
    for (std::size_t i = 0; i < names.size(); ++i) s.set(names[i], (*values[i])[idx[i]]);
    out.push_back(std::move(s));
    for (std::size_t i = names.size(); i-- > 0;) {
      if (++idx[i] < values[i]->size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

// Extends each variable's range with extra values observed in concrete
// states (used when certifying witnesses whose final states step outside the
// search ranges, e.g. a loop counter ending past its initial bound).
inline SearchDomain extend_with_states(SearchDomain dom, const std::vector<State>& states,
                                       const std::set<std::string>& vars) {
  for (const auto& var : vars) {
    std::set<std::int64_t> vs(dom.ranges[var].begin(), dom.ranges[var].end());
    if (vs.empty()) vs.insert(0);
    for (const State& s : states) vs.insert(s.get(var));
    dom.ranges[var].assign(vs.begin(), vs.end());
  }
  return dom;
}

}  // namespace relic
