#include "mcg/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace mcg {

namespace {

constexpr int kMaxOrder = 20160;
constexpr int kMaxSymDegree = 8;
constexpr int kSubgroupGuard = 128;

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), names_(std::move(names)) {
  if (n_ <= 0) throw error("group table must be nonempty");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table_[i].size()) != n_)
      throw error("group table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n_; ++j)
      if (table_[i][j] < 0 || table_[i][j] >= n_)
        throw error("group table entry out of range at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  for (int x = 0; x < n_; ++x)
    if (table_[0][x] != x || table_[x][0] != x)
      throw error("element 0 is not an identity");
  // every row and column must be a permutation
  for (int i = 0; i < n_; ++i) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int j = 0; j < n_; ++j) {
      if (row[table_[i][j]]++) throw error("row " + std::to_string(i) + " is not a permutation");
      if (col[table_[j][i]]++) throw error("column " + std::to_string(i) + " is not a permutation");
    }
  }
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (table_[a][b] == identity && table_[b][a] == identity) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw error("element " + std::to_string(a) + " has no inverse");
  }
  if (n_ <= 512) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw error("multiplication is not associative (witness " + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
  }
  if (names_.empty()) {
    names_.reserve(n_);
    for (int i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
  } else if (static_cast<int>(names_.size()) != n_) {
    throw error("element name list has wrong length");
  }
}

int FiniteGroup::pow(int g, long e) const {
  int r = identity;
  if (e < 0) {
    g = inv(g);
    e = -e;
  }
  for (long i = 0; i < e; ++i) r = mul(r, g);
  return r;
}

int FiniteGroup::element_order(int g) const {
  int r = g, k = 1;
  while (r != identity) {
    r = mul(r, g);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw error("cyclic order must be positive");
  if (n > kMaxOrder) throw guard_error("cyclic order exceeds guard");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  FiniteGroup g(std::move(t));
  g.set_meta("cyclic", {}, "cyclic:" + std::to_string(n));
  return g;
}

std::string perm_cycle_name(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? std::string("e") : out;
}

FiniteGroup make_sym(int n) {
  if (n < 1) throw error("sym degree must be positive");
  if (n > kMaxSymDegree) throw guard_error("sym degree exceeds guard (n <= 8)");
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (fact > kMaxOrder) throw guard_error("sym order exceeds total order guard");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> rank;
  for (size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = static_cast<int>(i);
  int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> r(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // i followed by j: r = perms[j] o perms[i]
      for (int x = 0; x < n; ++x) r[x] = perms[j][perms[i][x]];
      t[i][j] = rank[r];
    }
  std::vector<std::string> names;
  names.reserve(m);
  for (auto& q : perms) names.push_back(perm_cycle_name(q));
  FiniteGroup g(std::move(t), std::move(names));
  g.set_meta("sym", {}, "sym:" + std::to_string(n));
  return g;
}

// Dicyclic group of order n (n divisible by 4): a of order n/2, b with
// b^2 = a^{n/4} and b a^i b^{-1} = a^{-i}. Element (i,j) = a^i b^j with
// id = i + (n/2) j.
FiniteGroup make_dicyclic(int n) {
  if (n < 4 || n % 4 != 0) throw error("dicyclic order must be a positive multiple of 4");
  if (n > kMaxOrder) throw guard_error("dicyclic order exceeds guard");
  int m = n / 2, q = n / 4;
  auto id = [m](int i, int j) { return i + m * j; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int a = id(i, j), b = id(i2, j2);
          if (j == 0) {
            t[a][b] = id((i + i2) % m, j2);
          } else if (j2 == 0) {
            t[a][b] = id(((i - i2) % m + m) % m, 1);
          } else {
            t[a][b] = id(((i - i2 + q) % m + m) % m, 0);
          }
        }
  std::vector<std::string> names(n);
  for (int i = 0; i < m; ++i) {
    names[id(i, 0)] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    names[id(i, 1)] = i == 0 ? "b" : (i == 1 ? "a b" : "a^" + std::to_string(i) + " b");
  }
  FiniteGroup g(std::move(t), std::move(names));
  g.set_meta("dicyclic", {m, 2}, "dicyclic:" + std::to_string(n));
  return g;
}

FiniteGroup make_gdih(FiniteGroup base, const std::string& spec) {
  if (!is_abelian(base)) throw error("gdih requires an abelian argument group");
  int m = base.order();
  if (2 * m > kMaxOrder) throw guard_error("gdih order exceeds guard");
  int n = 2 * m;
  auto id = [m](int g, int t) { return g + m * t; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g1 = 0; g1 < m; ++g1)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int g2 = 0; g2 < m; ++g2)
        for (int t2 = 0; t2 < 2; ++t2) {
          int prod = t1 == 0 ? base.mul(g1, g2) : base.mul(g1, base.inv(g2));
          t[id(g1, t1)][id(g2, t2)] = id(prod, t1 ^ t2);
        }
  std::vector<std::string> names(n);
  for (int g = 0; g < m; ++g)
    for (int s = 0; s < 2; ++s)
      names[id(g, s)] = "(" + base.name(g) + "," + std::to_string(s) + ")";
  FiniteGroup out(std::move(t), std::move(names));
  out.set_meta("gdih", {m, 2}, spec);
  return out;
}

FiniteGroup make_sdp(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 0) throw error("sdp parameters must be positive");
  if (static_cast<long>(m) * n > kMaxOrder) throw guard_error("sdp order exceeds guard");
  // k^n must be 1 mod m for the action to be well defined
  long kn = 1;
  for (int i = 0; i < n; ++i) kn = (kn * (k % m)) % m;
  if (kn % m != 1 % m) throw error("sdp requires k^n = 1 (mod m)");
  int ord = m * n;
  auto id = [m](int x, int t) { return x + m * t; };
  std::vector<long> kpow(n);
  kpow[0] = 1 % m;
  for (int i = 1; i < n; ++i) kpow[i] = (kpow[i - 1] * (k % m)) % m;
  std::vector<std::vector<int>> t(ord, std::vector<int>(ord));
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s)
      for (int x2 = 0; x2 < m; ++x2)
        for (int s2 = 0; s2 < n; ++s2)
          t[id(x, s)][id(x2, s2)] =
              id(static_cast<int>((x + kpow[s] * x2) % m), (s + s2) % n);
  std::vector<std::string> names(ord);
  for (int x = 0; x < m; ++x)
    for (int s = 0; s < n; ++s)
      names[id(x, s)] = "(" + std::to_string(x) + "," + std::to_string(s) + ")";
  FiniteGroup g(std::move(t), std::move(names));
  g.set_meta("sdp", {m, n},
             "sdp:" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k));
  return g;
}

FiniteGroup make_prod(FiniteGroup a, FiniteGroup b, const std::string& spec) {
  int na = a.order(), nb = b.order();
  if (static_cast<long>(na) * nb > kMaxOrder) throw guard_error("prod order exceeds guard");
  int n = na * nb;
  auto id = [na](int x, int y) { return x + na * y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[id(x, y)][id(x2, y2)] = id(a.mul(x, x2), b.mul(y, y2));
  std::vector<std::string> names(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names[id(x, y)] = "(" + a.name(x) + "," + b.name(y) + ")";
  FiniteGroup g(std::move(t), std::move(names));
  g.set_meta("prod", {na, nb}, spec);
  return g;
}

FiniteGroup make_from_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open table file: " + path);
  int n;
  if (!(in >> n)) throw error("table file: missing order on line 1");
  if (n < 1) throw error("table file: order must be positive");
  if (n > kMaxOrder) throw guard_error("table order exceeds guard");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> t[i][j]))
        throw error("table file: truncated at row " + std::to_string(i));
  FiniteGroup g(std::move(t));
  g.set_meta("table", {}, "table:" + path);
  return g;
}

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int integer() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    long v = std::stol(s.substr(start, pos - start));
    if (v > kMaxOrder) fail("integer exceeds size guard");
    return static_cast<int>(v);
  }

  std::string word() {
    size_t start = pos;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])))) ++pos;
    if (pos == start) fail("expected constructor name");
    return s.substr(start, pos - start);
  }

  // Text of a balanced parenthesized group, parens stripped.
  std::string paren_group() {
    expect('(');
    size_t start = pos;
    int depth = 1;
    while (pos < s.size() && depth > 0) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) fail("unbalanced parentheses");
    return s.substr(start, pos - 1 - start);
  }

  FiniteGroup parse() {
    FiniteGroup g = parse_spec();
    if (pos != s.size()) fail("trailing input");
    return g;
  }

  FiniteGroup parse_spec() {
    std::string name = word();
    expect(':');
    if (name == "cyclic") return make_cyclic(integer());
    if (name == "sym") return make_sym(integer());
    if (name == "dicyclic") return make_dicyclic(integer());
    if (name == "gdih") {
      size_t spec_start = pos;
      std::string inner = paren_group();
      (void)spec_start;
      return make_gdih(make_group(inner), "gdih:(" + inner + ")");
    }
    if (name == "sdp") {
      int m = integer();
      expect(',');
      int n = integer();
      expect(',');
      int k = integer();
      return make_sdp(m, n, k);
    }
    if (name == "prod") {
      std::string left = paren_group();
      expect('x');
      std::string right = paren_group();
      return make_prod(make_group(left), make_group(right),
                       "prod:(" + left + ")x(" + right + ")");
    }
    if (name == "table") {
      std::string path = s.substr(pos);
      pos = s.size();
      if (path.empty()) fail("expected file path");
      return make_from_table(path);
    }
    pos -= name.size() + 1;
    fail("unknown constructor '" + name + "'");
  }
};

}  // namespace

FiniteGroup make_group(const std::string& spec) {
  SpecParser p(spec);
  return p.parse();
}

// ---------------------------------------------------------------------------
// Subgroup machinery

SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  int n = g.order();
  std::vector<int> gens;
  std::vector<char> gen_seen(n, 0);
  for (int s : seed) {
    if (s < 0 || s >= n) throw error("seed element out of range");
    if (!gen_seen[s]) {
      gen_seen[s] = 1;
      gens.push_back(s);
    }
    int si = g.inv(s);
    if (!gen_seen[si]) {
      gen_seen[si] = 1;
      gens.push_back(si);
    }
  }
  // the subgroup is the set of elements reachable from the identity by
  // right-multiplication with generators and their inverses
  std::vector<char> in(n, 0);
  std::vector<int> elems{FiniteGroup::identity};
  in[FiniteGroup::identity] = 1;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return SubgroupHandle{&g, std::move(elems), std::move(in)};
}

static void require_subgroup(const FiniteGroup& g, const SubgroupHandle& h) {
  if (h.parent != &g) throw error("subgroup belongs to a different group");
  if (h.elements.empty() || !h.contains(FiniteGroup::identity))
    throw error("subgroup must contain the identity");
  for (int a : h.elements) {
    if (!h.contains(g.inv(a))) throw error("set not closed under inverse");
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) throw error("set not closed under multiplication");
  }
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const SubgroupHandle& h) {
  require_subgroup(g, h);
  int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> block;
    for (int e : h.elements) {
      int y = g.mul(x, e);
      seen[y] = 1;
      block.push_back(y);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  // blocks come out ordered by minimal element because x scans upward
  return blocks;
}

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h) {
  require_subgroup(g, h);
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inv(x);
    for (int e : h.elements)
      if (!h.contains(g.mul(g.mul(x, e), xi))) return false;
  }
  return true;
}

Quotient quotient(const FiniteGroup& g, const SubgroupHandle& n) {
  if (!is_normal(g, n)) throw error("quotient requires a normal subgroup");
  auto blocks = left_cosets(g, n);
  int q = static_cast<int>(blocks.size());
  std::vector<int> proj(g.order(), -1);
  for (int i = 0; i < q; ++i)
    for (int x : blocks[i]) proj[x] = i;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = proj[g.mul(blocks[i][0], blocks[j][0])];
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = g.name(blocks[i][0]) + "N";
  FiniteGroup qg(std::move(t), std::move(names));
  qg.set_meta("quotient", {}, "");
  return Quotient{std::move(qg), std::move(proj)};
}

SubgroupHandle commutator_subgroup(const FiniteGroup& g) {
  int n = g.order();
  std::set<int> comms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      comms.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
}

std::vector<SubgroupHandle> all_subgroups(const FiniteGroup& g) {
  if (g.order() > kSubgroupGuard)
    throw guard_error("all_subgroups guarded to order <= 128");
  std::set<std::vector<int>> known;
  std::vector<SubgroupHandle> list;
  auto add = [&](SubgroupHandle h) {
    if (known.insert(h.elements).second) list.push_back(std::move(h));
  };
  add(subgroup_closure(g, {}));
  for (int x = 1; x < g.order(); ++x) add(subgroup_closure(g, {x}));
  // close under pairwise joins until fixpoint
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> seed = list[i].elements;
      seed.insert(seed.end(), list[j].elements.begin(), list[j].elements.end());
      add(subgroup_closure(g, seed));
    }
  return list;
}

SubgroupHandle frattini_subgroup(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  // inclusion-maximal proper subgroups
  std::vector<const SubgroupHandle*> maximal;
  for (auto& h : subs) {
    if (h.size() == g.order()) continue;
    bool is_max = true;
    for (auto& k : subs) {
      if (k.size() == g.order() || k.size() <= h.size() || &k == &h) continue;
      bool contains = true;
      for (int e : h.elements)
        if (!k.contains(e)) {
          contains = false;
          break;
        }
      if (contains) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(&h);
  }
  if (maximal.empty()) return subgroup_closure(g, {});
  std::vector<int> inter;
  for (int x = 0; x < g.order(); ++x) {
    bool in_all = true;
    for (auto* h : maximal)
      if (!h->contains(x)) {
        in_all = false;
        break;
      }
    if (in_all) inter.push_back(x);
  }
  return subgroup_closure(g, inter);
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool has_index_two_subgroup(const FiniteGroup& g) {
  int n = g.order();
  std::set<int> seed;
  for (int x = 0; x < n; ++x) seed.insert(g.mul(x, x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      seed.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  auto h = subgroup_closure(g, std::vector<int>(seed.begin(), seed.end()));
  return h.size() < n;
}

GroupClass classify_group(const FiniteGroup& g) {
  GroupClass c{};
  c.abelian = is_abelian(g);
  c.has_index_two_subgroup = has_index_two_subgroup(g);
  if (c.abelian) {
    c.dedekind = true;
    c.nilpotent = true;
    return c;
  }
  auto subs = all_subgroups(g);
  c.dedekind = true;
  for (auto& h : subs)
    if (!is_normal(g, h)) {
      c.dedekind = false;
      break;
    }
  auto comm = commutator_subgroup(g);
  auto phi = frattini_subgroup(g);
  c.nilpotent = true;
  for (int e : comm.elements)
    if (!phi.contains(e)) {
      c.nilpotent = false;
      break;
    }
  return c;
}

bool nilpotent_by_lower_central_series(const FiniteGroup& g) {
  int n = g.order();
  SubgroupHandle layer = subgroup_closure(g, [&] {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  while (true) {
    std::set<int> comms;
    for (int x = 0; x < n; ++x)
      for (int y : layer.elements)
        comms.insert(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    auto next = subgroup_closure(g, std::vector<int>(comms.begin(), comms.end()));
    if (next.size() == 1) return true;
    if (next.size() == layer.size()) return false;
    layer = std::move(next);
  }
}

int sym_element_id(int n, const std::vector<int>& one_line) {
  if (static_cast<int>(one_line.size()) != n) throw error("permutation has wrong length");
  // lexicographic rank via Lehmer code
  long rank = 0;
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::vector<char> used(n, 0);
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    int smaller = 0;
    for (int v = 0; v < one_line[i]; ++v)
      if (!used[v]) ++smaller;
    rank += smaller * fact;
    if (one_line[i] < 0 || one_line[i] >= n || used[one_line[i]])
      throw error("not a permutation");
    used[one_line[i]] = 1;
  }
  return static_cast<int>(rank);
}

int sym_cycle_id(int n, const std::vector<int>& cycle) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    int from = cycle[i] - 1, to = cycle[(i + 1) % cycle.size()] - 1;
    if (from < 0 || from >= n || to < 0 || to >= n) throw error("cycle entry out of range");
    p[from] = to;
  }
  return sym_element_id(n, p);
}

std::vector<int> parse_generators(const FiniteGroup& g, const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !tokens.empty()) tokens.push_back(cur);
  std::vector<int> out;
  for (auto& tok : tokens) {
    std::string raw = tok;
    size_t a = raw.find_first_not_of(' ');
    size_t b = raw.find_last_not_of(' ');
    if (a == std::string::npos) throw error("empty generator token");
    raw = raw.substr(a, b - a + 1);
    if (raw.front() == '(') {
      if (raw.back() != ')') throw error("unbalanced generator tuple: " + raw);
      std::string body = raw.substr(1, raw.size() - 2);
      if (body.find(',') != std::string::npos) {
        auto comma = body.find(',');
        int x = std::stoi(body.substr(0, comma));
        int y = std::stoi(body.substr(comma + 1));
        const auto& dims = g.coord_dims();
        if (dims.size() != 2)
          throw error("group '" + g.spec() + "' has no pair coordinates");
        if (x < 0 || x >= dims[0] || y < 0 || y >= dims[1])
          throw error("tuple coordinate out of range: " + raw);
        out.push_back(x + dims[0] * y);
      } else {
        // cycle notation for symmetric groups, e.g. (1 2)
        if (g.kind() != "sym") throw error("cycle notation only applies to sym groups");
        std::istringstream in(body);
        std::vector<int> cyc;
        int v;
        while (in >> v) cyc.push_back(v);
        if (cyc.empty()) throw error("empty cycle: " + raw);
        int deg = -1;
        long f = 1;
        for (int d = 1; d <= 9; ++d) {
          f *= d > 1 ? d : 1;
          if (f == g.order()) {
            deg = d;
            break;
          }
        }
        if (deg < 0) throw error("group order is not a factorial");
        out.push_back(sym_cycle_id(deg, cyc));
      }
    } else {
      out.push_back(std::stoi(raw));
    }
  }
  for (int e : out)
    if (e < 0 || e >= g.order()) throw error("generator id out of range");
  return out;
}

}  // namespace mcg
