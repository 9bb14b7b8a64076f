#pragma once

#include <string>
#include <vector>

#include "symcoh/errors.hpp"

namespace symcoh {

/// A finite group given by its full multiplication table. Element 0 is
/// the identity. Construction checks the group axioms exhaustively, so a
/// Group value is always valid.
class Group {
  public:
    static Group from_table(const std::vector<std::vector<int>>& table);

    static Group trivial();
    static Group cyclic(int m);
    /// Symmetries of the regular m-gon, order 2m. Elements 0..m-1 are the
    /// rotations r^i, elements m..2m-1 the reflections s*r^i.
    static Group dihedral(int m);
    /// All permutations of m points in lexicographic order; m <= 4.
    static Group symmetric(int m);
    static Group klein4();

    int order() const { return order_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1

    static constexpr int identity = 0;

  private:
    Group() = default;
    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

/// Subgroup as a sorted member list; always contains the identity and is
/// closed under products and inverses.
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup& other) const = default;

    static Subgroup whole(const Group& g);
    static Subgroup trivial();
    /// Validates closure; throws NotASubgroup.
    static Subgroup create(const Group& g, std::vector<int> members);
    /// Closure of a generating set.
    static Subgroup generated(const Group& g, const std::vector<int>& gens);
};

/// All subgroups, sorted by order then lexicographically by member list.
std::vector<Subgroup> enumerate_subgroups(const Group& g);

/// Left cosets of H with a chosen representative per coset. The coset of
/// H itself is always represented by the identity.
struct CosetTable {
    std::vector<std::vector<int>> cosets;
    std::vector<int> rep;       // one element per coset
    std::vector<int> coset_of;  // element -> coset id

    int count() const { return static_cast<int>(cosets.size()); }
    /// Representative of the coset x * c, where c is a coset id.
    int rep_of_translate(const Group& g, int x, int c) const { return rep[coset_of[g.mul(x, rep[c])]]; }
};

/// Canonical table: each coset represented by its minimal element, which
/// puts the identity on the coset H itself.
CosetTable left_cosets(const Group& g, const Subgroup& h);

/// Same partition with the maximal element as representative everywhere
/// except the coset H, which keeps the identity.
CosetTable left_cosets_alternate(const Group& g, const Subgroup& h);

/// The subgroup g H g^-1.
Subgroup conjugate_subgroup(const Group& gr, int g, const Subgroup& h);

/// One minimal representative per double coset L h K inside H; L, K <= H.
std::vector<int> double_coset_reps(const Group& g, const Subgroup& l, const Subgroup& h, const Subgroup& k);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

}  // namespace symcoh
