#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace springerkit {

using Elem = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Explicit finite group given by its multiplication table. Element 0 is the
/// identity. Every element carries a word in the generators (the path that
/// reached it in a breadth-first search from the identity), which is what
/// modules use to evaluate arbitrary elements.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10000;

  /// Closure of permutations of {0..degree-1}; images[i] is the image of i.
  /// Elements are numbered in breadth-first order from the identity, the
  /// product a*b being the composition a(b(.)).
  static GroupPtr from_permutations(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& generators);

  /// Group given by its table; element 0 must be the identity. Without explicit
  /// generators, the least element outside the span so far is added greedily.
  static GroupPtr from_table(const std::vector<std::vector<std::uint32_t>>& table,
                             std::optional<std::vector<Elem>> generators = std::nullopt);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::size_t order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  Elem power(Elem a, std::uint64_t e) const noexcept;
  std::uint64_t element_order(Elem a) const noexcept;

  const std::vector<Elem>& generators() const noexcept { return gens_; }
  /// Breadth-first spanning tree: x = parent(x) * generators()[parent_generator(x)].
  Elem parent(Elem x) const noexcept { return parent_[x]; }
  std::uint32_t parent_generator(Elem x) const noexcept { return parent_gen_[x]; }
  /// Elements in an order where every parent precedes its children.
  const std::vector<Elem>& tree_order() const noexcept { return tree_order_; }
  /// Generator indices i_1..i_m with x = g_{i_1} ... g_{i_m}.
  std::vector<std::uint32_t> word(Elem x) const;

  /// Permutation images when built from permutations.
  const std::vector<std::vector<std::uint32_t>>& permutations() const noexcept { return perms_; }
  std::optional<Elem> find_permutation(const std::vector<std::uint32_t>& perm) const;

  /// Classes as ascending element lists, ordered by least element.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const;
  std::vector<Elem> class_representatives() const;

  bool is_abelian() const noexcept;
  std::uint64_t exponent() const noexcept;
  /// Elementary divisors (prime powers, ascending) when abelian.
  std::optional<std::vector<std::uint64_t>> abelian_invariants() const;

  /// Same table and same generator list.
  bool same_as(const FiniteGroup& other) const noexcept;

  /// Elements of the subgroup generated by `gens`, ascending.
  std::vector<Elem> closure(const std::vector<Elem>& gens) const;

 private:
  FiniteGroup() = default;
  void finish(std::vector<Elem> gens);

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<Elem> tree_order_;
  std::vector<std::vector<std::uint32_t>> perms_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<Elem>> classes_;

  friend class Subgroup;
};

/// Subgroup of a parent group, stored as a sorted member set, together with
/// an abstract copy of itself (group()) whose generators are the generators
/// the subgroup was built from.
class Subgroup {
 public:
  /// The subgroup generated by `generators` (parent element indices).
  static Subgroup make(GroupPtr parent, std::vector<Elem> generators);
  /// The subgroup with exactly these members, generated greedily.
  static Subgroup from_members(GroupPtr parent, const std::vector<Elem>& members);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  bool contains(Elem x) const noexcept { return local_[x] != kAbsent; }
  bool is_normal() const noexcept { return normal_; }

  /// The subgroup as a group in its own right.
  const GroupPtr& group() const noexcept { return group_; }
  Elem to_parent(Elem local) const noexcept { return embedding_[local]; }
  /// Local index of a member.
  Elem to_local(Elem parent_elem) const;

  /// g S g^-1, with conjugated generators.
  Subgroup conjugate(Elem g) const;
  bool same_members(const Subgroup& other) const noexcept { return members_ == other.members_; }

 private:
  static constexpr Elem kAbsent = ~Elem{0};

  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<Elem> gens_;
  std::vector<Elem> local_;
  std::vector<Elem> embedding_;
  GroupPtr group_;
  bool normal_ = false;
};

/// `inner` viewed as a subgroup of outer.group(), keeping inner's generators.
Subgroup relative_to(const Subgroup& inner, const Subgroup& outer);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Left coset representatives of G/K, each the least element of its coset,
/// ascending; with L, representatives of the double cosets K\G/L instead.
std::vector<Elem> coset_reps(const FiniteGroup& g, const Subgroup& k, const Subgroup* l = nullptr);

/// For every element, the position in coset_reps(g, k) of its left coset.
std::vector<std::uint32_t> coset_index(const FiniteGroup& g, const Subgroup& k);

struct Quotient {
  GroupPtr group;
  /// Element of G -> element of G/N (numbered by ascending representative).
  std::vector<Elem> projection;
  std::vector<Elem> reps;
};

/// G/N for normal N; NotNormal otherwise.
Quotient quotient(const Subgroup& n);

}  // namespace springerkit
