#include "symcoh/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symcoh {

Group Group::from_table(const std::vector<std::vector<int>>& table) {
    const int m = static_cast<int>(table.size());
    if (m == 0) throw ValidationError("empty multiplication table");
    Group g;
    g.order_ = m;
    g.mul_.resize(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(table[i].size()) != m) throw ValidationError("multiplication table is not square");
        for (int j = 0; j < m; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= m) throw ValidationError("table entry out of range");
            g.mul_[static_cast<std::size_t>(i) * m + j] = v;
        }
    }
    for (int i = 0; i < m; ++i)
        if (g.mul(0, i) != i || g.mul(i, 0) != i) throw NoIdentityAtZero("element 0 is not a two-sided identity");
    g.inv_.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (g.mul(i, j) == 0 && g.mul(j, i) == 0) {
                g.inv_[i] = j;
                break;
            }
        if (g.inv_[i] < 0) throw MissingInverse("element " + std::to_string(i) + " has no inverse");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw NotAssociative("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                         "," + std::to_string(c) + ")");
    return g;
}

Group Group::trivial() { return cyclic(1); }

Group Group::cyclic(int m) {
    if (m < 1) throw ValidationError("cyclic order must be positive");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return from_table(t);
}

Group Group::dihedral(int m) {
    if (m < 1) throw ValidationError("dihedral parameter must be positive");
    const int n = 2 * m;
    // s^e r^a with index e*m + a; r^a s = s r^-a
    auto idx = [m](int e, int a) { return e * m + ((a % m) + m) % m; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int e1 = 0; e1 < 2; ++e1)
        for (int a1 = 0; a1 < m; ++a1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int a2 = 0; a2 < m; ++a2) {
                    // (s^e1 r^a1)(s^e2 r^a2) = s^(e1+e2) r^(±a1+a2)
                    int e = (e1 + e2) % 2;
                    int a = (e2 == 0 ? a1 : -a1) + a2;
                    t[idx(e1, a1)][idx(e2, a2)] = idx(e, a);
                }
    return from_table(t);
}

Group Group::symmetric(int m) {
    if (m < 1 || m > 4) throw ValidationError("symmetric group supported for 1 <= m <= 4");
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> q(m);
            for (int x = 0; x < m; ++x) q[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(q);
        }
    return from_table(t);
}

Group Group::klein4() {
    // pairs (a,b) over Z/2 x Z/2, index 2a + b
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = (i ^ j);
    return from_table(t);
}

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

bool Subgroup::contains(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(), other.members.end());
}

Subgroup Subgroup::whole(const Group& g) {
    Subgroup s;
    s.members.resize(g.order());
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

Subgroup Subgroup::trivial() { return Subgroup{{0}}; }

Subgroup Subgroup::create(const Group& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s{std::move(members)};
    if (s.members.empty() || s.members.front() != Group::identity) throw NotASubgroup("missing identity");
    for (int a : s.members) {
        if (a < 0 || a >= g.order()) throw NotASubgroup("member out of range");
        if (!s.contains(g.inv(a))) throw NotASubgroup("not closed under inverses");
        for (int b : s.members)
            if (!s.contains(g.mul(a, b))) throw NotASubgroup("not closed under products");
    }
    return s;
}

Subgroup Subgroup::generated(const Group& g, const std::vector<int>& gens) {
    std::set<int> closure{Group::identity};
    std::vector<int> queue{Group::identity};
    for (int x : gens)
        if (closure.insert(x).second) queue.push_back(x);
    while (!queue.empty()) {
        int a = queue.back();
        queue.pop_back();
        for (int b : std::vector<int>(closure.begin(), closure.end())) {
            for (int p : {g.mul(a, b), g.mul(b, a)})
                if (closure.insert(p).second) queue.push_back(p);
        }
    }
    Subgroup s;
    s.members.assign(closure.begin(), closure.end());
    return s;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier{Subgroup::trivial()};
    seen.insert(frontier.front().members);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier) {
            out.push_back(s);
            for (int x = 0; x < g.order(); ++x) {
                if (s.contains(x)) continue;
                std::vector<int> gens = s.members;
                gens.push_back(x);
                Subgroup t = Subgroup::generated(g, gens);
                if (seen.insert(t.members).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.order() != b.order()) return a.order() < b.order();
                  return a.members < b.members;
              });
    return out;
}

namespace {

CosetTable build_cosets(const Group& g, const Subgroup& h) {
    Subgroup::create(g, h.members);  // throws NotASubgroup on bad input
    CosetTable t;
    t.coset_of.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (t.coset_of[x] >= 0) continue;
        int id = t.count();
        std::vector<int> coset;
        for (int m : h.members) {
            int y = g.mul(x, m);
            t.coset_of[y] = id;
            coset.push_back(y);
        }
        std::sort(coset.begin(), coset.end());
        t.cosets.push_back(std::move(coset));
        t.rep.push_back(x);  // ascending scan, so x is minimal in its coset
    }
    return t;
}

}  // namespace

CosetTable left_cosets(const Group& g, const Subgroup& h) { return build_cosets(g, h); }

CosetTable left_cosets_alternate(const Group& g, const Subgroup& h) {
    CosetTable t = build_cosets(g, h);
    for (int c = 0; c < t.count(); ++c) {
        if (t.coset_of[Group::identity] == c) continue;  // coset H keeps the identity rep
        t.rep[c] = t.cosets[c].back();
    }
    return t;
}

Subgroup conjugate_subgroup(const Group& gr, int g, const Subgroup& h) {
    std::vector<int> m;
    m.reserve(h.members.size());
    for (int x : h.members) m.push_back(gr.conj(g, x));
    std::sort(m.begin(), m.end());
    return Subgroup{std::move(m)};
}

std::vector<int> double_coset_reps(const Group& g, const Subgroup& l, const Subgroup& h, const Subgroup& k) {
    if (!h.contains(l) || !h.contains(k)) throw SubgroupNotContained("double cosets need L, K <= H");
    std::vector<int> orbit_of(g.order(), -1);
    std::vector<int> reps;
    for (int x : h.members) {
        if (orbit_of[x] >= 0) continue;
        reps.push_back(x);  // members ascend, so x is minimal in L x K
        for (int a : l.members)
            for (int b : k.members) orbit_of[g.mul(g.mul(a, x), b)] = x;
    }
    return reps;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup s;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(s.members));
    return s;
}

}  // namespace symcoh
