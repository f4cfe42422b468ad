#include "mcg/genset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace mcg {

namespace {

bool generates_whole(const FiniteGroup& g, const std::vector<int>& elems) {
  return subgroup_closure(g, elems).size() == g.order();
}

}  // namespace

GenSetReport analyze_genset(const GenSet& c) {
  const FiniteGroup& g = *c.group;
  const auto& elems = c.elements;
  {
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw error("genset has duplicate elements");
  }
  for (int e : elems)
    if (e == FiniteGroup::identity) throw error("genset must not contain the identity");

  GenSetReport r;
  r.generates = generates_whole(g, elems);
  if (r.generates) {
    r.minimal = true;
    for (size_t i = 0; i < elems.size() && r.minimal; ++i) {
      std::vector<int> rest;
      for (size_t j = 0; j < elems.size(); ++j)
        if (j != i) rest.push_back(elems[j]);
      if (generates_whole(g, rest)) r.minimal = false;
    }
  }
  // given order: no element inside the closure of its predecessors
  r.semiminimal_in_given_order = true;
  for (size_t i = 0; i < elems.size(); ++i) {
    std::vector<int> prefix(elems.begin(), elems.begin() + i);
    if (subgroup_closure(g, prefix).contains(elems[i])) {
      r.semiminimal_in_given_order = false;
      break;
    }
  }
  if (r.semiminimal_in_given_order) {
    r.semiminimal_some_order = true;
    std::vector<int> order(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) order[i] = static_cast<int>(i);
    r.witness_order = order;
    return r;
  }

  int k = static_cast<int>(elems.size());
  if (k > 10) throw guard_error("semiminimal some-order search guarded to |C| <= 10");
  // DFS over index masks; prefix closure depends on the chosen set only
  std::map<unsigned, SubgroupHandle> closure_of;
  std::vector<char> dead(1u << k, 0);
  std::vector<int> order;
  std::function<bool(unsigned)> dfs = [&](unsigned mask) -> bool {
    if (mask == (1u << k) - 1) return true;
    if (dead[mask]) return false;
    auto it = closure_of.find(mask);
    if (it == closure_of.end()) {
      std::vector<int> chosen;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) chosen.push_back(elems[i]);
      it = closure_of.emplace(mask, subgroup_closure(g, chosen)).first;
    }
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) continue;
      if (it->second.contains(elems[i])) continue;
      order.push_back(i);
      if (dfs(mask | (1u << i))) return true;
      order.pop_back();
    }
    dead[mask] = 1;
    return false;
  };
  if (dfs(0)) {
    r.semiminimal_some_order = true;
    r.witness_order = order;
  }
  return r;
}

std::vector<std::vector<int>> enumerate_minimal_generating_sets(const FiniteGroup& g,
                                                                int max_size) {
  int n = g.order();
  if (n > 64) throw guard_error("minimal genset enumeration guarded to order <= 64");
  if (max_size < 0 || (n > 1 && std::pow(2.0, max_size) > n + 0.5))
    throw error("max_size exceeds the log2|G| cap");
  std::vector<std::vector<int>> out;
  if (n == 1) {
    out.push_back({});  // the empty set generates the trivial group
    return out;
  }
  std::vector<int> cur;
  // ascending DFS: every element added must lie outside the closure so far,
  // which every minimal set satisfies in ascending order
  std::function<void(int, const SubgroupHandle&)> dfs = [&](int start,
                                                            const SubgroupHandle& cl) {
    if (cl.size() == n) {
      for (size_t i = 0; i < cur.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 0; j < cur.size(); ++j)
          if (j != i) rest.push_back(cur[j]);
        if (generates_whole(g, rest)) return;
      }
      out.push_back(cur);
      return;  // supersets of a generating set are never minimal
    }
    if (static_cast<int>(cur.size()) >= max_size) return;
    for (int e = start; e < n; ++e) {
      if (cl.contains(e)) continue;
      cur.push_back(e);
      std::vector<int> seed = cl.elements;
      seed.push_back(e);
      dfs(e + 1, subgroup_closure(g, seed));
      cur.pop_back();
    }
  };
  dfs(1, subgroup_closure(g, {}));
  return out;
}

double binary_lambert_w(double n) {
  if (!(n >= 2.0)) throw error("binary_lambert_w requires n >= 2");
  auto f = [](double w) { return w * std::exp2(w); };
  double lo = 0.0, hi = std::log2(n) + 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < n)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

ChromaticBound chromatic_bound(const GenSet& c) {
  auto r = analyze_genset(c);
  if (!r.generates) throw error("chromatic_bound requires a generating set");
  double n = static_cast<double>(c.group->order());
  if (n < 2.0)  // trivial group: single vertex, one color
    return ChromaticBound{ChromaticBound::Kind::minimal, 1.0};
  if (r.minimal) return ChromaticBound{ChromaticBound::Kind::minimal, 2.0 * binary_lambert_w(n)};
  if (r.semiminimal_some_order)
    return ChromaticBound{ChromaticBound::Kind::semiminimal, 2.0 * std::log2(n)};
  return ChromaticBound{ChromaticBound::Kind::not_semiminimal,
                        std::numeric_limits<double>::infinity()};
}

}  // namespace mcg
