#include "brauerlab/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace brauerlab {

namespace {

constexpr std::size_t kTableLimit = 1024;

}  // namespace

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm parse_cycles(const std::string& text, int degree) {
  if (degree <= 0) throw std::invalid_argument("not a permutation: degree must be positive");
  Perm p = perm_identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("not a permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (i >= text.size()) throw std::invalid_argument("not a permutation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("not a permutation: bad character in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw std::invalid_argument("not a permutation: point out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw std::invalid_argument("not a permutation: point out of range");
      cycle.push_back(v - 1);
    }
    for (int x : cycle) {
      if (used[x]) throw std::invalid_argument("not a permutation: point repeated in \"" + text + "\"");
      used[x] = 1;
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) p[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) p[cycle.back()] = cycle.front();
    skip();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermutationGroup::PermutationGroup(int degree, const std::vector<Perm>& generators, std::size_t cap,
                                   std::string name)
    : degree_(degree), name_(std::move(name)) {
  if (degree <= 0) throw std::invalid_argument("not a permutation: degree must be positive");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw std::invalid_argument("not a permutation");
  std::set<Perm> seen;
  std::deque<Perm> queue;
  seen.insert(perm_identity(degree));
  queue.push_back(perm_identity(degree));
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Perm y = perm_compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw std::runtime_error("order cap exceeded");
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  for (const auto& g : generators) {
    std::size_t idx = *index_of(g);
    if (std::find(generators_.begin(), generators_.end(), idx) == generators_.end()) generators_.push_back(idx);
  }
  const std::size_t n = elements_.size();
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) inverse_[i] = *index_of(perm_inverse(elements_[i]));
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint16_t>(*index_of(perm_compose(elements_[a], elements_[b])));
  }
}

std::size_t PermutationGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return *index_of(perm_compose(elements_[a], elements_[b]));
}

std::optional<std::size_t> PermutationGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermutationGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  std::size_t x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

GroupPtr generate_group(const std::vector<Perm>& generators, int degree, std::size_t cap,
                        const std::string& name) {
  return std::make_shared<const PermutationGroup>(degree, generators, cap, name);
}

GroupPtr generate_group(const std::vector<std::string>& cycle_generators, int degree, const std::string& name) {
  std::vector<Perm> gens;
  for (const auto& s : cycle_generators) gens.push_back(parse_cycles(s, degree));
  return generate_group(gens, degree, PermutationGroup::kDefaultCap, name);
}

std::vector<char> closure(const PermutationGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> stack{g.identity()};
  in[g.identity()] = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t s : gens) {
      std::size_t y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return in;
}

namespace {

std::vector<std::size_t> members_of(const std::vector<char>& flags) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) m.push_back(i);
  return m;
}

}  // namespace

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<std::size_t>& gens, const std::string& name) {
  Subgroup s;
  s.flags_ = closure(*parent, gens);
  s.members_ = members_of(s.flags_);
  for (std::size_t g : gens)
    if (g != parent->identity() && std::find(s.gens_.begin(), s.gens_.end(), g) == s.gens_.end())
      s.gens_.push_back(g);
  s.parent_ = std::move(parent);
  s.name_ = name;
  return s;
}

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<std::string>& cycle_gens,
                                const std::string& name) {
  std::vector<std::size_t> idx;
  for (const auto& c : cycle_gens) {
    auto i = parent->index_of(parse_cycles(c, parent->degree()));
    if (!i) throw std::invalid_argument("not a subgroup: generator " + c + " not in group");
    idx.push_back(*i);
  }
  return generated_by(std::move(parent), idx, name);
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<std::size_t> members, const std::string& name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> flags(parent->order(), 0);
  for (std::size_t m : members) {
    if (m >= parent->order()) throw std::invalid_argument("not a subgroup: index out of range");
    flags[m] = 1;
  }
  if (members.empty() || !flags[parent->identity()]) throw std::invalid_argument("not a subgroup: identity missing");
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!flags[parent->mul(a, b)]) throw std::invalid_argument("not a subgroup: not closed");
  // greedy generating set
  std::vector<std::size_t> gens;
  std::vector<char> cur(parent->order(), 0);
  cur[parent->identity()] = 1;
  for (std::size_t m : members) {
    if (cur[m]) continue;
    gens.push_back(m);
    cur = closure(*parent, gens);
  }
  Subgroup s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  s.flags_ = std::move(flags);
  s.gens_ = std::move(gens);
  s.name_ = name;
  return s;
}

Subgroup Subgroup::trivial(GroupPtr parent) { return generated_by(std::move(parent), std::vector<std::size_t>{}, "1"); }

Subgroup Subgroup::whole(GroupPtr parent) {
  auto gens = parent->generators();
  std::string name = parent->name();
  return generated_by(std::move(parent), gens, name);
}

CosetSpace::CosetSpace(GroupPtr g, Subgroup h) : group_(std::move(g)), sub_(std::move(h)) {
  if (!sub_.parent() || sub_.parent()->order() != group_->order() ||
      sub_.parent()->elements() != group_->elements())
    throw std::invalid_argument("not a subgroup");
  const std::size_t n = group_->order();
  const std::size_t none = static_cast<std::size_t>(-1);
  coset_of_.assign(n, none);
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of_[x] != none) continue;
    std::size_t c = reps_.size();
    reps_.push_back(x);
    for (std::size_t h : sub_.members()) coset_of_[group_->mul(x, h)] = c;
  }
}

CosetSpace coset_space(GroupPtr g, const Subgroup& h) { return CosetSpace(std::move(g), h); }

std::vector<std::size_t> min_generating_tuple(const Subgroup& h) {
  const auto& g = *h.parent();
  if (h.order() == g.order()) return {};
  // level-by-level enumeration of the distinct subgroups <H, g_1..g_k>
  struct Node {
    std::vector<char> flags;
    std::vector<std::size_t> tuple;
  };
  std::vector<Node> level{{closure(g, h.generators()), {}}};
  std::set<std::vector<char>> seen{level.front().flags};
  while (true) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (node.flags[x]) continue;
        std::vector<std::size_t> gens = h.generators();
        gens.insert(gens.end(), node.tuple.begin(), node.tuple.end());
        gens.push_back(x);
        auto flags = closure(g, gens);
        std::vector<std::size_t> tuple = node.tuple;
        tuple.push_back(x);
        if (std::find(flags.begin(), flags.end(), 0) == flags.end()) return tuple;
        if (seen.insert(flags).second) next.push_back({std::move(flags), std::move(tuple)});
      }
    }
    if (next.empty()) throw std::logic_error("min_generators_rel: search exhausted");
    level = std::move(next);
  }
}

std::size_t min_generators_rel(const Subgroup& h) { return min_generating_tuple(h).size(); }

Subgroup normal_core(const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<std::size_t> core;
  for (std::size_t x : h.members()) {
    bool ok = true;
    for (std::size_t y = 0; y < g.order() && ok; ++y)
      ok = h.contains(g.mul(g.mul(y, x), g.inv(y)));
    if (ok) core.push_back(x);
  }
  return Subgroup::from_members(h.parent(), core, "core(" + h.name() + ")");
}

bool is_normal(const Subgroup& h) { return normal_core(h).order() == h.order(); }

GroupPtr symmetric_group(int n) {
  std::vector<std::string> gens;
  if (n >= 2) gens.push_back("(1 2)");
  if (n >= 3) {
    std::string c = "(";
    for (int i = 1; i <= n; ++i) c += (i > 1 ? " " : "") + std::to_string(i);
    gens.push_back(c + ")");
  }
  return generate_group(gens, n, "S" + std::to_string(n));
}

GroupPtr alternating_group(int n) {
  std::vector<std::string> gens;
  for (int k = 3; k <= n; ++k) gens.push_back("(1 2 " + std::to_string(k) + ")");
  return generate_group(gens, n, "A" + std::to_string(n));
}

GroupPtr cyclic_group(int n) {
  std::string c = "(";
  for (int i = 1; i <= n; ++i) c += (i > 1 ? " " : "") + std::to_string(i);
  c += ")";
  return generate_group(std::vector<std::string>{c}, n, "C" + std::to_string(n));
}

GroupPtr cyclic_times_c2(int m) {
  std::string c = "(";
  for (int i = 1; i <= m; ++i) c += (i > 1 ? " " : "") + std::to_string(i);
  c += ")";
  std::string t = "(" + std::to_string(m + 1) + " " + std::to_string(m + 2) + ")";
  return generate_group(std::vector<std::string>{c, t}, m + 2, "C" + std::to_string(m) + "xC2");
}

Subgroup last_point_stabilizer(GroupPtr g) {
  std::vector<std::size_t> mem;
  const int last = g->degree() - 1;
  for (std::size_t i = 0; i < g->order(); ++i)
    if (g->element(i)[last] == last) mem.push_back(i);
  std::string name = "Stab(" + std::to_string(last + 1) + ")";
  return Subgroup::from_members(std::move(g), mem, name);
}

std::vector<FamilyMember> group_family() {
  std::vector<FamilyMember> fam;
  auto add = [&](const std::string& name, int degree, const std::vector<std::string>& gens,
                 const std::vector<std::pair<std::string, std::vector<std::string>>>& subs) {
    FamilyMember m;
    m.name = name;
    m.group = generate_group(gens, degree, name);
    m.subgroups.push_back(Subgroup::trivial(m.group));
    for (const auto& [sname, sgens] : subs) m.subgroups.push_back(Subgroup::generated_by(m.group, sgens, sname));
    m.subgroups.push_back(Subgroup::whole(m.group));
    fam.push_back(std::move(m));
  };
  add("C2", 2, {"(1 2)"}, {});
  add("C3", 3, {"(1 2 3)"}, {});
  add("C4", 4, {"(1 2 3 4)"}, {{"C2", {"(1 3)(2 4)"}}});
  add("C6", 5, {"(1 2)(3 4 5)"}, {{"C2", {"(1 2)"}}, {"C3", {"(3 4 5)"}}});
  add("C2xC2", 4, {"(1 2)", "(3 4)"}, {{"<(1 2)>", {"(1 2)"}}, {"<(3 4)>", {"(3 4)"}}, {"<(1 2)(3 4)>", {"(1 2)(3 4)"}}});
  add("S3", 3, {"(1 2)", "(1 2 3)"}, {{"S2", {"(1 2)"}}, {"A3", {"(1 2 3)"}}});
  add("D4", 4, {"(1 2 3 4)", "(1 3)"},
      {{"<(1 3)>", {"(1 3)"}},
       {"Z(D4)", {"(1 3)(2 4)"}},
       {"<(1 2)(3 4)>", {"(1 2)(3 4)"}},
       {"C4", {"(1 2 3 4)"}},
       {"<(1 3),(2 4)>", {"(1 3)", "(2 4)"}}});
  add("Q8", 8, {"(1 2 5 6)(3 4 7 8)", "(1 3 5 7)(2 8 6 4)"},
      {{"Z(Q8)", {"(1 5)(2 6)(3 7)(4 8)"}}, {"<i>", {"(1 2 5 6)(3 4 7 8)"}}});
  add("A4", 4, {"(1 2 3)", "(1 2)(3 4)"},
      {{"<(1 2)(3 4)>", {"(1 2)(3 4)"}}, {"C3", {"(1 2 3)"}}, {"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}}});
  add("S4", 4, {"(1 2)", "(1 2 3 4)"},
      {{"<(1 2)>", {"(1 2)"}},
       {"<(1 2)(3 4)>", {"(1 2)(3 4)"}},
       {"C4", {"(1 2 3 4)"}},
       {"V4", {"(1 2)(3 4)", "(1 3)(2 4)"}},
       {"S3", {"(1 2)", "(1 2 3)"}},
       {"D4", {"(1 2 3 4)", "(1 3)"}},
       {"A4", {"(1 2 3)", "(1 2)(3 4)"}}});
  add("C2xC2xC2", 6, {"(1 2)", "(3 4)", "(5 6)"},
      {{"<(1 2)>", {"(1 2)"}}, {"<(1 2)(3 4)>", {"(1 2)(3 4)"}}, {"<(1 2),(3 4)>", {"(1 2)", "(3 4)"}}});
  return fam;
}

}  // namespace brauerlab
