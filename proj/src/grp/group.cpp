#include "springerkit/grp/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "springerkit/error.hpp"
#include "springerkit/ffield/field.hpp"

namespace springerkit {

namespace {

constexpr std::size_t kFullAssociativityCheck = 512;
constexpr std::size_t kAssociativitySamples = 200000;

void check_permutation(const std::vector<std::uint32_t>& perm, std::size_t degree) {
  if (perm.size() != degree)
    throw Error(ErrorKind::NotAGroup, "permutation has " + std::to_string(perm.size()) + " images, expected " +
                                          std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (std::uint32_t x : perm) {
    if (x >= degree || seen[x]) throw Error(ErrorKind::NotAGroup, "generator is not a bijection");
    seen[x] = true;
  }
}

}  // namespace

GroupPtr FiniteGroup::from_permutations(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& generators) {
  for (const auto& g : generators) check_permutation(g, degree);
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0U);

  std::map<std::vector<std::uint32_t>, Elem> index;
  std::vector<std::vector<std::uint32_t>> elems{id};
  index.emplace(id, 0);
  const std::size_t r = generators.size();
  std::vector<Elem> right_mul;  // right_mul[x * r + i] = x * g_i
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> parent_gen{0};
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::uint32_t> y(degree);
      for (std::size_t j = 0; j < degree; ++j) y[j] = elems[x][generators[i][j]];
      auto [it, inserted] = index.emplace(y, static_cast<Elem>(elems.size()));
      if (inserted) {
        if (elems.size() >= kMaxOrder)
          throw Error(ErrorKind::ClosureTooLarge, "group order exceeds " + std::to_string(kMaxOrder));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(x));
        parent_gen.push_back(static_cast<std::uint32_t>(i));
      }
      right_mul.push_back(it->second);
    }
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t n = elems.size();
  group->n_ = n;
  group->table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = group->table_.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right_mul[row[parent[b]] * r + parent_gen[b]];
  }
  std::vector<Elem> gens;
  for (const auto& g : generators) gens.push_back(index.at(g));
  group->perms_ = std::move(elems);
  group->finish(std::move(gens));
  return group;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                 std::optional<std::vector<Elem>> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty multiplication table");
  if (n > kMaxOrder) throw Error(ErrorKind::ClosureTooLarge, "group order exceeds " + std::to_string(kMaxOrder));
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->n_ = n;
  group->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::NotAGroup, "multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t c = table[a][b];
      if (c >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range");
      if (seen[c]) throw Error(ErrorKind::NotAGroup, "table row " + std::to_string(a) + " repeats an entry");
      seen[c] = true;
      group->table_[a * n + b] = c;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (group->mul(0, static_cast<Elem>(a)) != a || group->mul(static_cast<Elem>(a), 0) != a)
      throw Error(ErrorKind::NotAGroup, "element 0 is not the identity");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      const Elem c = group->mul(static_cast<Elem>(a), static_cast<Elem>(b));
      if (seen[c]) throw Error(ErrorKind::NotAGroup, "table column " + std::to_string(b) + " repeats an entry");
      seen[c] = true;
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return group->mul(group->mul(a, b), c) == group->mul(a, group->mul(b, c)); };
  if (n <= kFullAssociativityCheck) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw Error(ErrorKind::NotAGroup, "multiplication table is not associative");
  } else {
    Rng rng(0);
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const auto a = static_cast<Elem>(rng() % n), b = static_cast<Elem>(rng() % n), c = static_cast<Elem>(rng() % n);
      if (!assoc(a, b, c)) throw Error(ErrorKind::NotAGroup, "multiplication table is not associative");
    }
  }
  std::vector<Elem> gens;
  if (generators) {
    for (Elem g : *generators)
      if (g >= n) throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(g) + " out of range");
    gens = *generators;
  } else {
    std::vector<Elem> span{0};
    for (Elem x = 1; x < n; ++x) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      gens.push_back(x);
      span = group->closure(gens);
    }
  }
  group->finish(std::move(gens));
  return group;
}

void FiniteGroup::finish(std::vector<Elem> gens) {
  gens_ = std::move(gens);
  inv_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  parent_.assign(n_, 0);
  parent_gen_.assign(n_, 0);
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  tree_order_ = {0};
  for (std::size_t i = 0; i < tree_order_.size(); ++i) {
    const Elem x = tree_order_[i];
    for (std::uint32_t gi = 0; gi < gens_.size(); ++gi) {
      const Elem y = mul(x, gens_[gi]);
      if (seen[y]) continue;
      seen[y] = true;
      parent_[y] = x;
      parent_gen_[y] = gi;
      tree_order_.push_back(y);
    }
  }
  if (tree_order_.size() != n_) throw Error(ErrorKind::NotAGroup, "generators do not generate the group");
}

Elem FiniteGroup::power(Elem a, std::uint64_t e) const noexcept {
  Elem result = 0;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Elem a) const noexcept {
  std::uint64_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint32_t> FiniteGroup::word(Elem x) const {
  std::vector<std::uint32_t> w;
  while (x != 0) {
    w.push_back(parent_gen_[x]);
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<Elem> FiniteGroup::find_permutation(const std::vector<std::uint32_t>& perm) const {
  for (Elem i = 0; i < perms_.size(); ++i)
    if (perms_[i] == perm) return i;
  return std::nullopt;
}

const std::vector<std::vector<Elem>>& FiniteGroup::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    std::vector<bool> done(n_, false);
    for (Elem x = 0; x < n_; ++x) {
      if (done[x]) continue;
      std::set<Elem> cls;
      for (Elem g = 0; g < n_; ++g) cls.insert(conj(g, x));
      for (Elem y : cls) done[y] = true;
      classes_.emplace_back(cls.begin(), cls.end());
    }
  });
  return classes_;
}

std::vector<Elem> FiniteGroup::class_representatives() const {
  std::vector<Elem> reps;
  for (const auto& c : conjugacy_classes()) reps.push_back(c.front());
  return reps;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Elem a : gens_)
    for (Elem b : gens_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::uint64_t FiniteGroup::exponent() const noexcept {
  std::uint64_t e = 1;
  for (Elem a = 0; a < n_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::optional<std::vector<std::uint64_t>> FiniteGroup::abelian_invariants() const {
  if (!is_abelian()) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : prime_factors(n_)) {
    // s[j] = log_r #{x : x^(r^j) = 1}
    std::vector<std::uint64_t> s{0};
    std::uint64_t rj = 1;
    for (;;) {
      rj *= r;
      std::uint64_t count = 0;
      for (Elem a = 0; a < n_; ++a)
        if (power(a, rj) == 0) ++count;
      std::uint64_t log = 0;
      while (count > 1) {
        count /= r;
        ++log;
      }
      if (log == s.back()) break;
      s.push_back(log);
    }
    // m[j] = number of cyclic factors of order >= r^j
    std::vector<std::uint64_t> m(s.size() + 1, 0);
    for (std::size_t j = 1; j < s.size(); ++j) m[j] = s[j] - s[j - 1];
    std::uint64_t pj = 1;
    for (std::size_t j = 1; j < s.size(); ++j) {
      pj *= r;
      for (std::uint64_t c = 0; c < m[j] - m[j + 1]; ++c) out.push_back(pj);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const noexcept {
  return this == &other || (n_ == other.n_ && gens_ == other.gens_ && table_ == other.table_);
}

std::vector<Elem> FiniteGroup::closure(const std::vector<Elem>& gens) const {
  std::vector<bool> seen(n_, false);
  std::vector<Elem> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      const Elem y = mul(out[i], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<Elem> generators) {
  const std::size_t n = parent->order();
  for (Elem g : generators)
    if (g >= n) throw Error(ErrorKind::IndexOutOfRange, "element index " + std::to_string(g) + " out of range");
  Subgroup s;
  s.parent_ = std::move(parent);
  s.gens_ = std::move(generators);
  const FiniteGroup& g = *s.parent_;
  s.members_ = g.closure(s.gens_);
  s.local_.assign(n, kAbsent);

  if (s.members_.size() == n && s.gens_ == g.gens_) {
    s.group_ = s.parent_;
    s.embedding_.resize(n);
    std::iota(s.embedding_.begin(), s.embedding_.end(), 0U);
  } else {
    // Breadth-first numbering over the given generators.
    std::vector<Elem> order{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Elem x : s.gens_) {
        const Elem y = g.mul(order[i], x);
        if (!seen[y]) {
          seen[y] = true;
          order.push_back(y);
        }
      }
    s.embedding_ = order;
    for (Elem i = 0; i < order.size(); ++i) s.local_[order[i]] = i;
    auto local = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    const std::size_t m = order.size();
    local->n_ = m;
    local->table_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) local->table_[a * m + b] = s.local_[g.mul(order[a], order[b])];
    std::vector<Elem> local_gens;
    for (Elem x : s.gens_) local_gens.push_back(s.local_[x]);
    local->finish(std::move(local_gens));
    s.group_ = std::move(local);
  }
  for (Elem i = 0; i < s.embedding_.size(); ++i) s.local_[s.embedding_[i]] = i;

  s.normal_ = true;
  for (Elem h : g.generators()) {
    for (Elem x : s.gens_)
      if (!s.contains(g.conj(h, x))) {
        s.normal_ = false;
        break;
      }
    if (!s.normal_) break;
  }
  return s;
}

Subgroup Subgroup::from_members(GroupPtr parent, const std::vector<Elem>& members) {
  std::vector<Elem> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() == parent->order()) return whole(std::move(parent));
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem x : sorted) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = parent->closure(gens);
  }
  if (span != sorted) throw Error(ErrorKind::NotAGroup, "member set is not a subgroup");
  return make(std::move(parent), std::move(gens));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> gens = parent->generators();
  return make(std::move(parent), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return make(std::move(parent), {}); }

Elem Subgroup::to_local(Elem parent_elem) const {
  if (parent_elem >= local_.size() || local_[parent_elem] == kAbsent)
    throw Error(ErrorKind::SubgroupMismatch, "element " + std::to_string(parent_elem) + " is not in the subgroup");
  return local_[parent_elem];
}

Subgroup Subgroup::conjugate(Elem g) const {
  std::vector<Elem> gens;
  for (Elem x : gens_) gens.push_back(parent_->conj(g, x));
  return make(parent_, std::move(gens));
}

Subgroup relative_to(const Subgroup& inner, const Subgroup& outer) {
  if (!inner.parent()->same_as(*outer.parent()))
    throw Error(ErrorKind::SubgroupMismatch, "subgroups of different groups");
  std::vector<Elem> gens;
  for (Elem x : inner.generators()) {
    if (!outer.contains(x)) throw Error(ErrorKind::SubgroupMismatch, "inner subgroup is not contained in outer");
    gens.push_back(outer.to_local(x));
  }
  for (Elem x : inner.members())
    if (!outer.contains(x)) throw Error(ErrorKind::SubgroupMismatch, "inner subgroup is not contained in outer");
  return Subgroup::make(outer.group(), std::move(gens));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent()->same_as(*b.parent())) throw Error(ErrorKind::SubgroupMismatch, "subgroups of different groups");
  std::vector<Elem> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return Subgroup::from_members(a.parent(), common);
}

std::vector<Elem> coset_reps(const FiniteGroup& g, const Subgroup& k, const Subgroup* l) {
  if (!k.parent()->same_as(g) || (l && !l->parent()->same_as(g)))
    throw Error(ErrorKind::SubgroupMismatch, "subgroup of a different group");
  const std::size_t n = g.order();
  std::vector<bool> covered(n, false);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    if (l == nullptr) {
      for (Elem y : k.members()) covered[g.mul(x, y)] = true;
    } else {
      for (Elem a : k.members()) {
        const Elem ax = g.mul(a, x);
        for (Elem b : l->members()) covered[g.mul(ax, b)] = true;
      }
    }
  }
  return reps;
}

std::vector<std::uint32_t> coset_index(const FiniteGroup& g, const Subgroup& k) {
  const auto reps = coset_reps(g, k);
  std::vector<std::uint32_t> idx(g.order());
  for (std::uint32_t i = 0; i < reps.size(); ++i)
    for (Elem y : k.members()) idx[g.mul(reps[i], y)] = i;
  return idx;
}

Quotient quotient(const Subgroup& n) {
  if (!n.is_normal()) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  const FiniteGroup& g = *n.parent();
  Quotient q;
  q.reps = coset_reps(g, n);
  const auto idx = coset_index(g, n);
  q.projection.assign(idx.begin(), idx.end());
  const std::size_t m = q.reps.size();
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = q.projection[g.mul(q.reps[a], q.reps[b])];
  std::vector<Elem> gens;
  for (Elem x : g.generators()) {
    const Elem y = q.projection[x];
    if (y != 0 && std::find(gens.begin(), gens.end(), y) == gens.end()) gens.push_back(y);
  }
  q.group = FiniteGroup::from_table(table, gens);
  return q;
}

}  // namespace springerkit
