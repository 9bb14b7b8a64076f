#pragma once

#include <cstdint>
#include <vector>

#include "symcoh/gmodule.hpp"
#include "symcoh/group.hpp"
#include "symcoh/zlinalg.hpp"

namespace symcoh {

/// The group of n-cochains G^n -> A presented as the free lattice
/// Z^(k*|G|^n) modulo the module relations, one k-block of value
/// coordinates per n-tuple. Tuples are indexed lexicographically with the
/// first entry most significant; degree 0 has the single empty tuple.
class CochainSpace {
  public:
    /// Guard: refuses more than max_coords ambient coordinates.
    CochainSpace(const Group& g, const GModule& a, int degree, std::int64_t max_coords = kDefaultMaxCoords);

    static constexpr std::int64_t kDefaultMaxCoords = 1'000'000;

    const Group& group() const { return *group_; }
    const GModule& module() const { return *module_; }
    int degree() const { return degree_; }
    std::int64_t tuple_count() const { return tuple_count_; }
    std::int64_t ambient_rank() const { return ambient_; }

    std::int64_t tuple_index(const std::vector<int>& tuple) const;
    std::vector<int> tuple_at(std::int64_t index) const;

    /// Per-coordinate relation moduli (d_i repeated per tuple block).
    std::vector<ZInt> relation_moduli() const;
    /// Relation lattice as diagonal generator columns.
    IntMatrix relation_columns() const;

    /// v ≡ 0 modulo the relations.
    bool is_zero_cochain(const std::vector<ZInt>& v) const;

  private:
    const Group* group_;
    const GModule* module_;
    int degree_;
    std::int64_t tuple_count_;
    std::int64_t ambient_;
};

/// A cochain as a canonically reduced coordinate vector over its space.
struct Cochain {
    const CochainSpace* space;
    std::vector<ZInt> values;

    static Cochain zero(const CochainSpace& s);
    static Cochain from_values(const CochainSpace& s, std::vector<ZInt> v);
    /// Value block at a tuple.
    std::vector<ZInt> value_at(const std::vector<int>& tuple) const;
};

/// Integer lift of the coboundary C^n -> C^(n+1),
///   (d σ)(g_1,...,g_{n+1}) = g_1 σ(g_2,...,g_{n+1})
///     + Σ_{i=1..n} (-1)^i σ(g_1,...,g_i g_{i+1},...,g_{n+1})
///     + (-1)^{n+1} σ(g_1,...,g_n).
IntMatrix differential_lift(const CochainSpace& source);

/// Integer lift of the transposition (i,i+1) acting on C^n, 1 <= i <= n:
///   ((1,2) σ)(g_1,...) = -g_1 σ(g_1^{-1}, g_1 g_2, g_3, ...),
///   ((i,i+1) σ)(...)   = -σ(..., g_{i-1} g_i, g_i^{-1}, g_i g_{i+1}, ...),
///   ((n,n+1) σ)(...)   = -σ(g_1, ..., g_{n-1} g_n, g_n^{-1}).
/// Together these generate an action of the symmetric group on n+1
/// letters; degree 0 has no generators.
IntMatrix generator_action_lift(const CochainSpace& space, int i);

/// All transposition lifts T_1..T_n at this degree.
struct SymmetricAction {
    int degree;
    std::vector<IntMatrix> transpositions;
};
SymmetricAction symmetric_action(const CochainSpace& space);

/// Hermite basis of the preimage in Z^N of the invariant subgroup
/// C^n(G,A)^{Σ_{n+1}}; the whole lattice at degree 0.
IntMatrix symmetric_preimage_gens(const CochainSpace& space);

/// True iff the cochain vanishes on every tuple containing the identity.
bool is_normalized(const Cochain& c);

/// True iff the cochain vanishes whenever two adjacent arguments are
/// mutually inverse; vacuous for degree <= 1.
bool satisfies_star(const Cochain& c);

/// Selection rows asserting the normalization conditions: one identity
/// block per tuple containing the identity element.
IntMatrix normalized_condition_rows(const CochainSpace& space);

/// Selection rows asserting the adjacent-inverse-pair conditions.
IntMatrix star_condition_rows(const CochainSpace& space);

/// Selection rows asserting σ(g, g^{-1}, *) = 0 only where the inverse
/// pair sits in positions (pos, pos+1); pos is 1-based.
IntMatrix inverse_pair_rows(const CochainSpace& space, int pos);

}  // namespace symcoh
