#include "symcoh/gmodule.hpp"

#include <string>

namespace symcoh {

namespace {

// entrywise congruence modulo the row relations: row i is compared mod
// d_i, with d_i == 0 demanding exact equality
bool congruent_mod_relations(const IntMatrix& a, const IntMatrix& b, const std::vector<ZInt>& d) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            ZInt diff = a.at(i, j) - b.at(i, j);
            if (d[i] == 0 ? diff != 0 : diff % d[i] != 0) return false;
        }
    return true;
}

}  // namespace

GModule GModule::build(const Group& g, std::vector<ZInt> relations, std::vector<IntMatrix> action) {
    GModule m;
    for (const auto& d : relations)
        if (d < 0) throw IllDefinedAction("relation entries must be >= 0");
    const int k = static_cast<int>(relations.size());
    if (static_cast<int>(action.size()) != g.order()) throw IllDefinedAction("need one action matrix per group element");
    for (const auto& mat : action)
        if (mat.rows() != k || mat.cols() != k) throw IllDefinedAction("action matrix has wrong shape");

    // each M_g must send the relation lattice into itself: d_i | d_j * M[i][j]
    for (int e = 0; e < g.order(); ++e)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                ZInt v = relations[j] * action[e].at(i, j);
                if (relations[i] == 0 ? v != 0 : v % relations[i] != 0)
                    throw IllDefinedAction("matrix of element " + std::to_string(e) +
                                           " does not descend to the quotient module");
            }

    if (!congruent_mod_relations(action[Group::identity], IntMatrix::identity(k), relations))
        throw IdentityActsNontrivially("identity element must act as the identity matrix");

    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (!congruent_mod_relations(action[a].mul(action[b]), action[g.mul(a, b)], relations))
                throw NotHomomorphic("action is not multiplicative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");

    m.relations_ = std::move(relations);
    m.action_ = std::move(action);
    return m;
}

GModule GModule::with_trivial_action(const Group& g, std::vector<ZInt> relations) {
    std::vector<IntMatrix> action(g.order(), IntMatrix::identity(static_cast<int>(relations.size())));
    return build(g, std::move(relations), std::move(action));
}

void GModule::reduce(std::vector<ZInt>& coords) const {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const ZInt& d = relations_[i % relations_.size()];
        if (d == 0) continue;
        coords[i] %= d;
        if (coords[i] < 0) coords[i] += d;
    }
}

std::vector<ZInt> GModule::reduced(std::vector<ZInt> coords) const {
    reduce(coords);
    return coords;
}

std::vector<ZInt> GModule::act(int g, const std::vector<ZInt>& a) const { return reduced(action_[g].apply(a)); }

bool GModule::p_torsion_trivial(const ZInt& p) const {
    for (const auto& d : relations_)
        if (d != 0 && gcd(d, p) != 1) return false;
    return true;
}

bool GModule::corollary_hypothesis(int n) const {
    if (!p_torsion_trivial(n + 1)) return false;
    // n! bijective: every prime <= n must be invertible on the torsion
    // part, and free summands only tolerate n! = 1
    for (const auto& d : relations_) {
        if (d == 0) {
            if (n > 1) return false;
        } else {
            for (int i = 2; i <= n; ++i)
                if (gcd(d, ZInt(i)) != 1) return false;
        }
    }
    return true;
}

GModule GModule::restricted(const std::vector<int>& to_parent) const {
    GModule m;
    m.relations_ = relations_;
    m.action_.reserve(to_parent.size());
    for (int e : to_parent) m.action_.push_back(action_[e]);
    return m;
}

}  // namespace symcoh
