#pragma once

#include <vector>

#include "symcoh/group.hpp"
#include "symcoh/zlinalg.hpp"

namespace symcoh {

/// Finitely generated abelian coefficient module A = ⊕_i Z/d_i with a
/// G-action by integer matrices, one per group element. d_i == 0 marks a
/// free Z summand. Elements are integer vectors reduced coordinatewise
/// into [0, d_i) on the torsion coordinates.
class GModule {
  public:
    /// Validates that every matrix defines an endomorphism of A, that the
    /// identity acts trivially and that g -> M_g is multiplicative.
    static GModule build(const Group& g, std::vector<ZInt> relations, std::vector<IntMatrix> action);

    /// Trivial action with the given relation list.
    static GModule with_trivial_action(const Group& g, std::vector<ZInt> relations);

    int rank() const { return static_cast<int>(relations_.size()); }
    const std::vector<ZInt>& relations() const { return relations_; }
    const IntMatrix& action(int g) const { return action_[g]; }

    /// Canonical form: torsion coordinates reduced mod d_i.
    void reduce(std::vector<ZInt>& coords) const;
    std::vector<ZInt> reduced(std::vector<ZInt> coords) const;

    /// g * a in canonical form.
    std::vector<ZInt> act(int g, const std::vector<ZInt>& a) const;

    /// True iff multiplication by p is injective on A, i.e. the p-torsion
    /// subgroup vanishes.
    bool p_torsion_trivial(const ZInt& p) const;

    /// True iff multiplication by n+1 is injective and multiplication by
    /// n! is bijective on A.
    bool corollary_hypothesis(int n) const;

    /// Restriction of the action to a subgroup, re-indexed by the local
    /// element order given in to_parent.
    GModule restricted(const std::vector<int>& to_parent) const;

  private:
    GModule() = default;
    std::vector<ZInt> relations_;
    std::vector<IntMatrix> action_;
};

}  // namespace symcoh
