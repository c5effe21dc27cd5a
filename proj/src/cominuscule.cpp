#include "sevlab/cominuscule.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sevlab/error.hpp"

namespace sevlab {

CominusculePair cominuscule_pair(int a, int n) {
    const std::string where = "a=" + std::to_string(a) + ", n=" + std::to_string(n);
    if (n < 1 || (a == 8 && n != 2)) throw Error(ErrorCode::UnsupportedPair, where);
    char algebra;
    RootSystem rs = [&] {
        switch (a) {
            case 1: algebra = 'R'; return build_root_system("C", n + 1);
            case 2: algebra = 'C'; return build_root_system("A", 2 * n + 1);
            case 4: algebra = 'H'; return build_root_system("D", 2 * n + 2);
            case 8: algebra = 'O'; return build_root_system("E", 7);
            default: throw Error(ErrorCode::UnsupportedPair, where);
        }
    }();
    int node = 0;
    switch (a) {
        case 1: node = n; break;
        case 2: node = n; break;
        case 4: node = 2 * n + 1; break;
        default: node = 6; break;
    }
    std::vector<int> levi;
    for (int i = 0; i < rs.rank(); ++i)
        if (i != node) levi.push_back(i);
    return CominusculePair{algebra, a, n, std::move(rs), node, std::move(levi)};
}

G1Poset build_g1_poset(const CominusculePair& pair) {
    const auto& rs = pair.ambient;
    G1Poset p;
    for (const auto& r : rs.positive_roots())
        if (r[pair.node] == 1) p.roots.push_back(r);
    // positive_roots is height-sorted, so alpha_0 comes first.
    std::map<Root, int> index;
    for (std::size_t i = 0; i < p.roots.size(); ++i) index.emplace(p.roots[i], static_cast<int>(i));
    p.rank = rs.rank();
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) p.cartan.push_back(rs.cartan(i, j));
    for (std::size_t u = 0; u < p.roots.size(); ++u)
        for (int i = 0; i < rs.rank(); ++i) {
            Root up = p.roots[u];
            up[i] += 1;
            auto it = index.find(up);
            if (it == index.end()) continue;
            p.covers.emplace_back(static_cast<int>(u), it->second);
        }
    return p;
}

namespace {

/// For u = s_{w_k}...s_{w_1}, returns i with u(beta) = alpha_i, so that
/// s_i u is the Schubert cell of the ideal grown by beta.
int next_letter(const G1Poset& poset, const std::vector<int>& word, std::size_t element) {
    Root g = poset.roots[element];
    const int r = poset.rank;
    for (int j : word) {
        int pairing = 0;
        for (int l = 0; l < r; ++l) pairing += g[l] * poset.cartan[static_cast<std::size_t>(l * r + j)];
        g[j] -= pairing;
    }
    int index = -1, total = 0;
    for (int l = 0; l < r; ++l) {
        total += g[l];
        if (g[l] != 0) index = l;
    }
    if (total != 1 || g[index] != 1) throw Error(ErrorCode::DimensionMismatch, "cover root is not a simple root image");
    return index;
}

}  // namespace

std::vector<IdealElement> enumerate_ideals(const G1Poset& poset, std::size_t cap) {
    const auto n = poset.size();
    if (n > 64) throw Error(ErrorCode::TooLarge, "poset has more than 64 elements");
    std::vector<RootMask> below(n, 0);
    for (auto [lo, hi] : poset.covers) below[static_cast<std::size_t>(hi)] |= RootMask{1} << lo;

    std::unordered_map<RootMask, std::vector<int>> words{{0, {}}};
    std::vector<RootMask> frontier{0};
    while (!frontier.empty()) {
        std::vector<RootMask> next;
        for (RootMask m : frontier)
            for (std::size_t e = 0; e < n; ++e) {
                if ((m >> e) & 1u) continue;
                if ((below[e] & m) != below[e]) continue;
                const RootMask grown = m | (RootMask{1} << e);
                if (words.count(grown)) continue;
                if (words.size() >= cap) throw Error(ErrorCode::TooLarge, "ideal count exceeds cap");
                auto w = words[m];
                w.push_back(next_letter(poset, w, e));
                words.emplace(grown, std::move(w));
                next.push_back(grown);
            }
        frontier = std::move(next);
    }
    std::vector<IdealElement> out;
    out.reserve(words.size());
    for (auto& [m, w] : words) out.push_back(IdealElement{m, std::popcount(m), std::move(w)});
    std::sort(out.begin(), out.end(), [](const IdealElement& x, const IdealElement& y) {
        return std::tie(x.rank, x.members) < std::tie(y.rank, y.members);
    });
    return out;
}

namespace {

Root ideal_root_sum(const G1Poset& poset, RootMask m, int rank) {
    Root sum(static_cast<std::size_t>(rank), 0);
    for (std::size_t e = 0; e < poset.size(); ++e)
        if ((m >> e) & 1u)
            for (int i = 0; i < rank; ++i) sum[i] += poset.roots[e][i];
    return sum;
}

Weight levi_part(const CominusculePair& pair, const Weight& w) {
    Weight out(w.size(), 0);
    for (int i : pair.levi) out[i] = w[i];
    return out;
}

}  // namespace

KostantComponent kostant_component(const CominusculePair& pair, const G1Poset& poset, const IdealElement& v) {
    const auto& rs = pair.ambient;
    KostantComponent c;
    c.ideal = v;
    c.kostant_weight = rs.root_to_weight(ideal_root_sum(poset, v.members, rs.rank()));
    const auto sigma = diagram_involution(rs, pair.levi);
    c.levi_weight.assign(static_cast<std::size_t>(rs.rank()), 0);
    for (int i : pair.levi) c.levi_weight[i] = -c.kostant_weight[sigma[i]];
    Weight fund(static_cast<std::size_t>(rs.rank()), 0);
    fund[pair.node] = 1;
    c.central_charge = rs.inner(c.kostant_weight, fund) / rs.inner(fund, fund);
    c.dim = weyl_dim(rs, c.levi_weight, pair.levi);
    return c;
}

std::vector<KostantComponent> wedge_decomposition(const CominusculePair& pair, int k) {
    const auto poset = build_g1_poset(pair);
    if (k < 0 || k > static_cast<int>(poset.size()))
        throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(k) + " outside 0.." +
                                               std::to_string(poset.size()));
    std::vector<KostantComponent> out;
    for (const auto& v : enumerate_ideals(poset))
        if (v.rank == k) out.push_back(kostant_component(pair, poset, v));
    return out;
}

BigInt LSequence::dim(int k) const {
    BigInt d = 0;
    if (k < 0 || k >= static_cast<int>(L.size())) return d;
    for (const auto& c : L[static_cast<std::size_t>(k)]) d += c.dim;
    return d;
}

LSequence identify_interval(const CominusculePair& pair) {
    if (pair.n != 2) throw Error(ErrorCode::UnsupportedPair, "interval is defined for rank-two pairs");
    const auto& rs = pair.ambient;
    const auto poset = build_g1_poset(pair);
    const auto ideals = enumerate_ideals(poset);
    const int a = pair.a;

    const Weight theta = levi_part(pair, rs.root_to_weight(rs.positive_roots().back()));
    std::vector<const IdealElement*> tops;
    for (const auto& v : ideals) {
        if (v.rank != 2 * a + 1) continue;
        const auto c = kostant_component(pair, poset, v);
        bool match = true;
        for (int i : pair.levi) match = match && 2 * c.levi_weight[i] == (a + 2) * theta[i];
        if (match) tops.push_back(&v);
    }
    if (tops.empty()) throw Error(ErrorCode::TopNotFound, "no ideal carries the Cartan power weight");
    if (tops.size() > 1) throw Error(ErrorCode::TopNotUnique, "several ideals carry the Cartan power weight");

    LSequence seq;
    seq.a = a;
    seq.n_roots = static_cast<int>(poset.size());
    seq.top = *tops.front();
    seq.bottom = *std::find_if(ideals.begin(), ideals.end(), [](const IdealElement& v) { return v.rank == 1; });
    seq.L.resize(poset.size() + 1);
    for (const auto& v : ideals) {
        const bool above = (v.members & seq.bottom.members) == seq.bottom.members;
        const bool below = (v.members & seq.top.members) == v.members;
        if (!above || !below) continue;
        seq.interval.push_back(v);
        seq.L[static_cast<std::size_t>(v.rank)].push_back(kostant_component(pair, poset, v));
    }
    return seq;
}

int expected_component_count(int a, int k) {
    if (2 * k <= a - 2 || (2 * k >= 3 * a + 2 && k <= 2 * a)) return 1;
    if ((2 * k >= a && k <= a - 1) || (k >= a + 1 && 2 * k <= 3 * a)) return 2;
    if (k == a) return 3;
    return 0;
}

namespace {

using WeightMultiset = std::multiset<Weight>;

WeightMultiset levi_weights(const std::vector<KostantComponent>& cs) {
    WeightMultiset m;
    for (const auto& c : cs) m.insert(c.levi_weight);
    return m;
}

}  // namespace

StructureReport check_structure(const CominusculePair& pair) {
    StructureReport rep;
    const auto& rs = pair.ambient;
    const auto poset = build_g1_poset(pair);
    const auto ideals = enumerate_ideals(poset);
    const auto seq = identify_interval(pair);
    const int n_roots = seq.n_roots;
    const int a = pair.a;
    rep.n_ideals = ideals.size();
    rep.interval_size = seq.interval.size();

    std::vector<std::vector<KostantComponent>> full(static_cast<std::size_t>(n_roots) + 1);
    for (const auto& v : ideals) full[static_cast<std::size_t>(v.rank)].push_back(kostant_component(pair, poset, v));

    rep.completeness = true;
    for (int k = 0; k <= n_roots; ++k) {
        BigInt total = 0;
        for (const auto& c : full[k]) total += c.dim;
        if (total != binomial(n_roots, k)) {
            rep.completeness = false;
            rep.failures.push_back("sum of dimensions at degree " + std::to_string(k) + " is " + total.get_str());
        }
    }

    rep.tightness = true;
    for (int k = 1; k <= a + 1; ++k)
        if (levi_weights(seq.L[k]) != levi_weights(full[k])) {
            rep.tightness = false;
            rep.failures.push_back("L^" + std::to_string(k) + " is not the full exterior power");
        }

    rep.duality = true;
    for (int k = 0; k <= n_roots; ++k) {
        WeightMultiset expected = levi_weights(seq.L[k]);
        for (const auto& c : seq.L[static_cast<std::size_t>(n_roots - k)]) {
            Weight d = levi_part(pair, levi_dual(rs, pair.levi, c.levi_weight));
            expected.insert(d);
        }
        if (k == 0 || k == n_roots) expected.insert(Weight(static_cast<std::size_t>(rs.rank()), 0));
        if (expected != levi_weights(full[k])) {
            rep.duality = false;
            rep.failures.push_back("duality fails at degree " + std::to_string(k));
        }
    }

    // The complement of the interval and the two extremities must mirror the interval's ranks.
    std::multiset<int> interval_ranks, rest_ranks;
    for (const auto& v : seq.interval) interval_ranks.insert(n_roots - v.rank);
    std::set<RootMask> in_interval;
    for (const auto& v : seq.interval) in_interval.insert(v.members);
    for (const auto& v : ideals)
        if (!in_interval.count(v.members) && v.rank != 0 && v.rank != n_roots) rest_ranks.insert(v.rank);
    rep.partition = 2 * seq.interval.size() + 2 == ideals.size() && interval_ranks == rest_ranks;
    if (!rep.partition) rep.failures.push_back("ideals are not interval + dual + extremities");

    for (int k = 0; k <= 2 * a; ++k)
        rep.component_counts.push_back(static_cast<int>(seq.L[static_cast<std::size_t>(k + 1)].size()));
    if (a != 1) {
        bool ok = true;
        for (int k = 0; k <= 2 * a; ++k) ok = ok && rep.component_counts[k] == expected_component_count(a, k);
        rep.counts = ok;
        if (!ok) rep.failures.push_back("component counts differ from the piecewise pattern");
    }

    std::set<Root> g1(poset.roots.begin(), poset.roots.end());
    rep.edges = true;
    for (const auto& u : ideals)
        for (const auto& v : ideals) {
            if (v.rank != u.rank + 1) continue;
            const bool cover = (u.members & v.members) == u.members;
            const Root su = ideal_root_sum(poset, u.members, rs.rank());
            Root diff = ideal_root_sum(poset, v.members, rs.rank());
            for (int i = 0; i < rs.rank(); ++i) diff[i] -= su[i];
            if (cover != static_cast<bool>(g1.count(diff))) {
                rep.edges = false;
                rep.failures.push_back("edge criterion fails at rank " + std::to_string(u.rank));
            }
        }
    return rep;
}

namespace {

using Relation = std::vector<std::vector<bool>>;

Relation inclusion_relation(const std::vector<RootMask>& sets) {
    Relation r(sets.size(), std::vector<bool>(sets.size(), false));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            r[i][j] = i != j && (sets[i] & sets[j]) == sets[i];
    return r;
}

}  // namespace

bool posets_isomorphic(const Relation& la, const Relation& lb) {
    const std::size_t n = la.size();
    if (lb.size() != n) return false;
    auto signature = [n](const Relation& r, std::size_t x) {
        int down = 0, up = 0;
        for (std::size_t y = 0; y < n; ++y) {
            down += r[y][x];
            up += r[x][y];
        }
        return std::pair{down, up};
    };
    std::vector<std::pair<int, int>> sa(n), sb(n);
    for (std::size_t x = 0; x < n; ++x) {
        sa[x] = signature(la, x);
        sb[x] = signature(lb, x);
    }
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t x) {
        if (x == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || sa[x] != sb[y]) continue;
            bool ok = true;
            for (std::size_t z = 0; z < x && ok; ++z) {
                const auto mz = static_cast<std::size_t>(map[z]);
                ok = la[x][z] == lb[y][mz] && la[z][x] == lb[mz][y];
            }
            if (!ok) continue;
            map[x] = static_cast<int>(y);
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        map[x] = -1;
        return false;
    };
    return extend(0);
}

BirkhoffReport birkhoff_check(const CominusculePair& pair) {
    BirkhoffReport rep;
    const auto poset = build_g1_poset(pair);
    const auto ideals = enumerate_ideals(poset);
    std::unordered_set<RootMask> all;
    for (const auto& v : ideals) all.insert(v.members);
    rep.distributive = true;
    for (const auto& u : ideals)
        for (const auto& v : ideals)
            if (!all.count(u.members | v.members) || !all.count(u.members & v.members)) rep.distributive = false;

    // Join-irreducibles are the ideals with exactly one lower cover.
    std::vector<RootMask> irreducible;
    for (const auto& v : ideals) {
        int lower = 0;
        for (int e = 0; e < static_cast<int>(poset.size()); ++e)
            if (v.contains(e) && all.count(v.members & ~(RootMask{1} << e))) ++lower;
        if (lower == 1) irreducible.push_back(v.members);
    }
    rep.join_irreducibles = irreducible.size();

    const auto n = poset.size();
    Relation g1(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            bool le = true;
            for (int i = 0; i < pair.ambient.rank(); ++i) le = le && poset.roots[x][i] <= poset.roots[y][i];
            g1[x][y] = x != y && le;
        }
    }
    const auto ji = inclusion_relation(irreducible);
    rep.isomorphic_to_g1 = posets_isomorphic(ji, g1);
    if (pair.n == 2) {
        const auto seq = identify_interval(pair);
        std::vector<RootMask> members;
        for (const auto& v : seq.interval) members.push_back(v.members);
        rep.interval_size = members.size();
        rep.isomorphic_to_interval = posets_isomorphic(ji, inclusion_relation(members));
    }
    return rep;
}

std::string hasse_dot(const CominusculePair& pair, Highlight highlight) {
    const auto poset = build_g1_poset(pair);
    const auto ideals = enumerate_ideals(poset, 10001);
    if (ideals.size() > 10000) throw Error(ErrorCode::TooLarge, "more than 10^4 ideals");
    if (highlight != Highlight::None && pair.n != 2)
        throw Error(ErrorCode::UnsupportedPair, "interval highlighting needs a rank-two pair");
    std::set<RootMask> interval;
    if (highlight != Highlight::None)
        for (const auto& v : identify_interval(pair).interval) interval.insert(v.members);
    const int n_roots = static_cast<int>(poset.size());

    std::unordered_map<RootMask, std::size_t> id;
    for (std::size_t i = 0; i < ideals.size(); ++i) id.emplace(ideals[i].members, i);
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle, label=\"\", width=0.2];\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto& v = ideals[i];
        os << "  v" << i << " [tooltip=\"" << weight_str(kostant_component(pair, poset, v).levi_weight) << "\"";
        if (highlight != Highlight::None) {
            std::string colour;
            if (v.rank == 0 || v.rank == n_roots) colour = "black";
            else if (interval.count(v.members)) colour = "blue";
            else if (highlight == Highlight::Dual) colour = "red";
            if (!colour.empty()) os << ", style=filled, fillcolor=" << colour;
        }
        os << "];\n";
    }
    for (int r = 0; r <= n_roots; ++r) {
        os << "  { rank=same;";
        for (std::size_t i = 0; i < ideals.size(); ++i)
            if (ideals[i].rank == r) os << " v" << i << ";";
        os << " }\n";
    }
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (int e = 0; e < n_roots; ++e) {
            if (ideals[i].contains(e)) continue;
            auto it = id.find(ideals[i].members | (RootMask{1} << e));
            if (it != id.end()) os << "  v" << i << " -> v" << it->second << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace sevlab
