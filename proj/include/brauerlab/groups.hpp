#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brauerlab {

/// Permutation of {0..degree-1} stored as its image array.
using Perm = std::vector<int>;

/// Parses cycle notation such as "(1 2)(3 4 5)" with 1-based points; "()" is the identity.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& p);
Perm perm_identity(int degree);
/// (a*b)(x) = a(b(x)): b acts first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool is_permutation(const Perm& p);

class PermutationGroup {
 public:
  static constexpr std::size_t kDefaultCap = 10080;

  /// Closure of the generators; element 0 is the identity and elements are sorted lexicographically.
  PermutationGroup(int degree, const std::vector<Perm>& generators, std::size_t cap = kDefaultCap,
                   std::string name = "");

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::size_t identity() const { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  std::size_t element_order(std::size_t a) const;

 private:
  int degree_;
  std::string name_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint16_t> table_;  // dense table for small groups
};

using GroupPtr = std::shared_ptr<const PermutationGroup>;

GroupPtr generate_group(const std::vector<Perm>& generators, int degree,
                        std::size_t cap = PermutationGroup::kDefaultCap, const std::string& name = "");
GroupPtr generate_group(const std::vector<std::string>& cycle_generators, int degree,
                        const std::string& name = "");

/// Boolean membership vector of the subgroup generated by the given elements.
std::vector<char> closure(const PermutationGroup& g, const std::vector<std::size_t>& gens);

class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup generated_by(GroupPtr parent, const std::vector<std::size_t>& gens,
                               const std::string& name = "");
  static Subgroup generated_by(GroupPtr parent, const std::vector<std::string>& cycle_gens,
                               const std::string& name = "");
  /// Throws "not a subgroup" unless the set is closed and contains the identity.
  static Subgroup from_members(GroupPtr parent, std::vector<std::size_t> members,
                               const std::string& name = "");
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  const std::vector<std::size_t>& generators() const { return gens_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::size_t g) const { return flags_[g] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  std::size_t index() const { return parent_->order() / members_.size(); }
  const std::string& name() const { return name_; }
  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> gens_;
  std::vector<char> flags_;
  std::string name_;
};

/// Left cosets gH with lexicographically minimal representatives; coset 0 is H itself.
class CosetSpace {
 public:
  CosetSpace(GroupPtr g, Subgroup h);

  const GroupPtr& group() const { return group_; }
  const Subgroup& subgroup() const { return sub_; }
  std::size_t index() const { return reps_.size(); }
  const std::vector<std::size_t>& representatives() const { return reps_; }
  std::size_t coset_of(std::size_t g) const { return coset_of_[g]; }
  /// Coset of g * rep(c).
  std::size_t act(std::size_t g, std::size_t c) const { return coset_of_[group_->mul(g, reps_[c])]; }

 private:
  GroupPtr group_;
  Subgroup sub_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
};

CosetSpace coset_space(GroupPtr g, const Subgroup& h);

/// Smallest r such that H together with some r elements generates G.
std::size_t min_generators_rel(const Subgroup& h);
/// A witnessing tuple for min_generators_rel.
std::vector<std::size_t> min_generating_tuple(const Subgroup& h);
Subgroup normal_core(const Subgroup& h);
bool is_normal(const Subgroup& h);

GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr cyclic_group(int n);
/// Z/m x Z/2 on m+2 points: an m-cycle and a disjoint transposition.
GroupPtr cyclic_times_c2(int m);

/// Point stabilizer of the last point in a group acting on {1..n}.
Subgroup last_point_stabilizer(GroupPtr g);

struct FamilyMember {
  std::string name;
  GroupPtr group;
  std::vector<Subgroup> subgroups;
};

/// The small-group test family with the listed subgroups for each member.
std::vector<FamilyMember> group_family();

}  // namespace brauerlab
