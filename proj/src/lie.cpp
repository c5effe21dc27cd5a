#include "sevlab/lie.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sevlab/error.hpp"
#include "sevlab/laurent.hpp"

namespace sevlab {

namespace detail {
struct WeylCache {
    std::once_flag once;
    std::vector<WeylElement> elements;
    std::size_t cap = 0;
    bool refused = false;
};
}  // namespace detail

namespace {

RationalMatrix gram_from_ambient(const std::vector<std::vector<Rational>>& simple) {
    const auto n = simple.size();
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t k = 0; k < simple[i].size(); ++k) s += simple[i][k] * simple[j][k];
            g(i, j) = s;
        }
    return g;
}

RationalMatrix simply_laced_gram(int rank, const std::vector<std::pair<int, int>>& edges) {
    RationalMatrix g(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) g(i, i) = 2;
    for (auto [a, b] : edges) {
        g(a - 1, b - 1) = -1;
        g(b - 1, a - 1) = -1;
    }
    return g;
}

std::vector<Rational> unit(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    std::vector<Rational> v(dim);
    for (const auto& [i, c] : entries) v[i] = c;
    return v;
}

}  // namespace

RootSystem::RootSystem(std::string label, RationalMatrix gram)
    : label_(std::move(label)), rank_(static_cast<int>(gram.rows())), gram_(std::move(gram)),
      weyl_(std::make_shared<detail::WeylCache>()) {
    const auto n = static_cast<std::size_t>(rank_);
    cartan_.resize(n * n);
    RationalMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = Rational(2) * gram_(i, j) / gram_(j, j);
            cartan_[i * n + j] = static_cast<int>(v.to_integer().get_si());
            c(i, j) = v;
        }
    if (n > 0) {
        const RationalMatrix cinv = c.inverse();
        root_coords_from_labels_ = cinv.transpose();
        weight_gram_ = cinv * gram_ * cinv.transpose();
    }

    // Positive roots by alpha-strings, processed in order of height.
    std::set<Root> known;
    for (std::size_t i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        positive_.push_back(r);
        known.insert(r);
    }
    for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
        const Root beta = positive_[idx];
        for (std::size_t i = 0; i < n; ++i) {
            int p = 0;
            Root down = beta;
            while (true) {
                down[i] -= 1;
                if (!known.count(down)) break;
                ++p;
            }
            int pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[j * n + i];
            if (p - pairing > 0) {
                Root up = beta;
                up[i] += 1;
                if (known.insert(up).second) positive_.push_back(up);
            }
        }
    }
    std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    for (const auto& r : positive_) norms_.push_back(norm(r));
}

Rational RootSystem::norm(const Root& r) const {
    Rational s;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (r[i] != 0 && r[j] != 0) s += Rational(r[i] * r[j]) * gram_(i, j);
    return s;
}

Rational RootSystem::coroot_pairing(const Weight& lambda, const Root& beta) const {
    Rational s;
    for (int i = 0; i < rank_; ++i)
        if (beta[i] != 0 && lambda[i] != 0) s += Rational(beta[i] * lambda[i]) * gram_(i, i);
    return s / norm(beta);
}

Weight RootSystem::root_to_weight(const Root& r) const {
    Weight w(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        if (r[i] != 0)
            for (int j = 0; j < rank_; ++j) w[j] += r[i] * cartan(i, j);
    return w;
}

std::vector<Rational> RootSystem::weight_to_root_coords(const Weight& w) const {
    std::vector<Rational> c(static_cast<std::size_t>(rank_));
    for (int k = 0; k < rank_; ++k)
        for (int j = 0; j < rank_; ++j)
            if (w[j] != 0) c[k] += root_coords_from_labels_(k, j) * Rational(w[j]);
    return c;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    Rational s;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) s += Rational(a[i] * b[j]) * weight_gram_(i, j);
    }
    return s;
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
    Weight r = lambda;
    const int li = lambda[i];
    if (li != 0)
        for (int j = 0; j < rank_; ++j) r[j] -= li * cartan(i, j);
    return r;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
    return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

Weight RootSystem::dominant_conjugate(const Weight& lambda) const {
    Weight w = lambda;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank_; ++i)
            if (w[i] < 0) {
                w = reflect(i, w);
                changed = true;
            }
    }
    return w;
}

std::vector<Weight> RootSystem::orbit(const Weight& lambda) const {
    std::set<Weight> seen{lambda};
    std::vector<Weight> queue{lambda};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int i = 0; i < rank_; ++i) {
            if (queue[k][i] == 0) continue;
            Weight r = reflect(i, queue[k]);
            if (seen.insert(r).second) queue.push_back(std::move(r));
        }
    return {seen.begin(), seen.end()};
}

const std::vector<WeylElement>& RootSystem::weyl_group(std::size_t cap) const {
    auto& cache = *weyl_;
    std::call_once(cache.once, [&] {
        const auto n = static_cast<std::size_t>(rank_);
        cache.cap = cap;
        WeylElement id;
        id.matrix.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) id.matrix[i * n + i] = 1;
        std::unordered_map<Weight, std::size_t, ExponentHash> index;
        std::vector<Weight> images{rho()};
        index.emplace(rho(), 0);
        std::vector<WeylElement> elems{id};
        for (std::size_t k = 0; k < elems.size(); ++k) {
            for (int i = 0; i < rank_; ++i) {
                Weight img = reflect(i, images[k]);
                if (index.count(img)) continue;
                if (elems.size() + 1 > cap) {
                    cache.refused = true;
                    cache.elements.clear();
                    return;
                }
                WeylElement e;
                e.sign = -elems[k].sign;
                e.matrix = elems[k].matrix;
                // Left-multiply by the matrix of s_i: row j gets row j - C_ij * row i.
                for (std::size_t j = 0; j < n; ++j) {
                    const int cij = cartan(i, static_cast<int>(j));
                    if (cij == 0 || j == static_cast<std::size_t>(i)) continue;
                    for (std::size_t c = 0; c < n; ++c)
                        e.matrix[j * n + c] -= cij * elems[k].matrix[static_cast<std::size_t>(i) * n + c];
                }
                for (std::size_t c = 0; c < n; ++c) e.matrix[static_cast<std::size_t>(i) * n + c] *= -1;
                index.emplace(img, elems.size());
                images.push_back(std::move(img));
                elems.push_back(std::move(e));
            }
        }
        cache.elements = std::move(elems);
    });
    if (cache.refused || cache.elements.size() > cap)
        throw Error(ErrorCode::ClosureCapExceeded,
                    "Weyl group of " + label_ + " exceeds " + std::to_string(cache.refused ? cache.cap : cap));
    return cache.elements;
}

std::vector<std::vector<int>> RootSystem::components() const {
    std::vector<int> comp(static_cast<std::size_t>(rank_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < rank_; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < rank_; ++j)
                if (comp[j] < 0 && cartan(nodes[k], j) != 0) {
                    comp[j] = comp[s];
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(nodes);
    }
    return out;
}

RootSystem build_root_system(const std::string& type, int rank) {
    auto fail = [&] { return Error(ErrorCode::UnsupportedType, type + std::to_string(rank)); };
    if (rank < 1) throw fail();
    const auto n = static_cast<std::size_t>(rank);
    std::vector<std::vector<Rational>> amb;
    if (type == "A") {
        for (std::size_t i = 0; i < n; ++i) amb.push_back(unit(n + 1, {{i, 1}, {i + 1, -1}}));
    } else if (type == "B" || type == "C") {
        if (rank < 2) throw fail();
        for (std::size_t i = 0; i + 1 < n; ++i) amb.push_back(unit(n, {{i, 1}, {i + 1, -1}}));
        amb.push_back(unit(n, {{n - 1, type == "B" ? 1 : 2}}));
    } else if (type == "D") {
        if (rank < 3) throw fail();
        for (std::size_t i = 0; i + 1 < n; ++i) amb.push_back(unit(n, {{i, 1}, {i + 1, -1}}));
        amb.push_back(unit(n, {{n - 2, 1}, {n - 1, 1}}));
    } else if (type == "F") {
        if (rank != 4) throw fail();
        const Rational h(1, 2);
        amb = {unit(4, {{1, 1}, {2, -1}}), unit(4, {{2, 1}, {3, -1}}), unit(4, {{3, 1}}),
               unit(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}})};
    } else if (type == "E") {
        if (rank != 6 && rank != 7) throw fail();
        std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
        if (rank == 7) edges.emplace_back(6, 7);
        return RootSystem("E" + std::to_string(rank), simply_laced_gram(rank, edges));
    } else {
        throw fail();
    }
    RootSystem rs(type + std::to_string(rank), gram_from_ambient(amb));
    rs.set_ambient(std::move(amb));
    return rs;
}

RootSystem root_system_from_label(const std::string& label) {
    const auto x = label.find('x');
    if (x != std::string::npos)
        return product(root_system_from_label(label.substr(0, x)), root_system_from_label(label.substr(x + 1)));
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw Error(ErrorCode::UnsupportedType, label);
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw Error(ErrorCode::UnsupportedType, label);
    }
    return build_root_system(label.substr(0, 1), rank);
}

RootSystem sub_system(const RootSystem& rs, const std::vector<int>& nodes) {
    RationalMatrix g(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) g(i, j) = rs.gram()(nodes[i], nodes[j]);
    std::ostringstream label;
    label << rs.label() << "[";
    for (std::size_t i = 0; i < nodes.size(); ++i) label << (i ? "," : "") << nodes[i] + 1;
    label << "]";
    return RootSystem(label.str(), g);
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
    const auto n = static_cast<std::size_t>(a.rank() + b.rank());
    RationalMatrix g(n, n);
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
    return RootSystem(a.label() + "x" + b.label(), g);
}

std::vector<Root> roots_by_reflection_closure(const RootSystem& rs) {
    const int n = rs.rank();
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i in simple-root coordinates.
    std::set<Root> all;
    std::vector<Root> queue;
    for (int i = 0; i < n; ++i) {
        Root r(static_cast<std::size_t>(n), 0);
        r[i] = 1;
        all.insert(r);
        queue.push_back(r);
    }
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += queue[k][j] * rs.cartan(j, i);
            Root r = queue[k];
            r[i] -= pairing;
            if (all.insert(r).second) queue.push_back(std::move(r));
        }
    std::vector<Root> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
    return pos;
}

BigInt weyl_dim(const RootSystem& rs, const Weight& mu, const std::vector<int>& levi) {
    std::vector<bool> in(static_cast<std::size_t>(rs.rank()), levi.empty());
    for (int i : levi) in[i] = true;
    for (int i = 0; i < rs.rank(); ++i)
        if (in[i] && mu[i] < 0)
            throw Error(ErrorCode::NotDominant, "weight " + weight_str(mu) + " is not dominant on the Levi");
    Weight shifted = mu;
    for (int i = 0; i < rs.rank(); ++i) shifted[i] = in[i] ? mu[i] + 1 : 0;
    Weight rho_l(static_cast<std::size_t>(rs.rank()), 0);
    for (int i = 0; i < rs.rank(); ++i) rho_l[i] = in[i] ? 1 : 0;
    Rational d = 1;
    for (const auto& beta : rs.positive_roots()) {
        bool inside = true;
        for (int i = 0; i < rs.rank(); ++i)
            if (beta[i] != 0 && !in[i]) inside = false;
        if (!inside) continue;
        d *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rho_l, beta);
    }
    return d.to_integer();
}

const std::vector<WeylElement>& weyl_group_elements(const RootSystem& rs, std::size_t cap) {
    return rs.weyl_group(cap);
}

std::vector<Rational> gl_to_fundamental(const std::vector<Rational>& eigenvalues) {
    std::vector<Rational> z;
    Rational prod = 1;
    for (std::size_t k = 0; k + 1 < eigenvalues.size(); ++k) {
        prod *= eigenvalues[k];
        z.push_back(prod);
    }
    return z;
}

namespace {

struct ScaledAlternant {
    BigInt sum;
    BigInt scale;
};

/// Sum over W of sign(w) z^{w v}, returned as an integer over a common scale.
ScaledAlternant alternant(const RootSystem& rs, const std::vector<WeylElement>& group, const Weight& v,
                          const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
    const auto n = static_cast<std::size_t>(rs.rank());
    std::vector<int> exps(group.size() * n);
    std::vector<int> bound(n, 0);
    for (std::size_t w = 0; w < group.size(); ++w)
        for (std::size_t i = 0; i < n; ++i) {
            int e = 0;
            for (std::size_t j = 0; j < n; ++j) e += group[w].matrix[i * n + j] * v[j];
            exps[w * n + i] = e;
            bound[i] = std::max(bound[i], std::abs(e));
        }
    std::vector<std::vector<BigInt>> ppow(n), qpow(n);
    for (std::size_t i = 0; i < n; ++i) {
        ppow[i].resize(static_cast<std::size_t>(2 * bound[i] + 1));
        qpow[i].resize(static_cast<std::size_t>(2 * bound[i] + 1));
        ppow[i][0] = 1;
        qpow[i][0] = 1;
        for (std::size_t k = 1; k < ppow[i].size(); ++k) {
            ppow[i][k] = ppow[i][k - 1] * p[i];
            qpow[i][k] = qpow[i][k - 1] * q[i];
        }
    }
    ScaledAlternant out;
    out.sum = 0;
    BigInt term;
    for (std::size_t w = 0; w < group.size(); ++w) {
        term = group[w].sign;
        for (std::size_t i = 0; i < n; ++i) {
            const int e = exps[w * n + i];
            term *= ppow[i][static_cast<std::size_t>(e + bound[i])];
            term *= qpow[i][static_cast<std::size_t>(bound[i] - e)];
        }
        out.sum += term;
    }
    out.scale = 1;
    for (std::size_t i = 0; i < n; ++i) out.scale *= ipow(p[i] * q[i], static_cast<unsigned long>(bound[i]));
    return out;
}

std::vector<Rational> normalize_point(const RootSystem& rs, const std::vector<Rational>& point) {
    const auto n = static_cast<std::size_t>(rs.rank());
    if (point.size() == n) return point;
    if (rs.label() == "A" + std::to_string(rs.rank()) && point.size() == n + 1) return gl_to_fundamental(point);
    throw Error(ErrorCode::DegreeMismatch, "torus point has " + std::to_string(point.size()) +
                                               " coordinates for " + rs.label());
}

}  // namespace

std::vector<Rational> char_eval_many(const RootSystem& rs, const std::vector<Weight>& mus,
                                     const std::vector<Rational>& point) {
    const auto z = normalize_point(rs, point);
    std::vector<BigInt> p, q;
    for (const auto& c : z) {
        if (c.is_zero()) throw Error(ErrorCode::ZeroSubstitution, "torus coordinate is zero");
        p.push_back(c.num());
        q.push_back(c.den());
    }
    const auto& group = rs.weyl_group();
    const auto den = alternant(rs, group, rs.rho(), p, q);
    if (den.sum == 0) throw Error(ErrorCode::SingularPoint, "Weyl denominator vanishes at the point");
    std::vector<Rational> out;
    for (const auto& mu : mus) {
        if (!rs.is_dominant(mu)) throw Error(ErrorCode::NotDominant, weight_str(mu));
        Weight v = mu;
        for (auto& x : v) x += 1;
        const auto num = alternant(rs, group, v, p, q);
        out.push_back(Rational(num.sum * den.scale, num.scale * den.sum));
    }
    return out;
}

Rational char_eval(const RootSystem& rs, const Weight& mu, const std::vector<Rational>& point) {
    return char_eval_many(rs, {mu}, point).front();
}

BigInt freudenthal_budget() {
    if (const char* env = std::getenv("SEVLAB_BUDGET")) {
        BigInt b;
        if (b.set_str(env, 10) == 0 && b > 0) return b;
    }
    return BigInt(20000000);
}

namespace {

/// Depth of mu - w in simple roots, or -1 when mu - w is not in the positive root cone lattice.
long depth_below(const RootSystem& rs, const Weight& mu, const Weight& w) {
    Weight diff(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) diff[i] = mu[i] - w[i];
    long depth = 0;
    for (const auto& c : rs.weight_to_root_coords(diff)) {
        if (!c.is_integer() || c.sign() < 0) return -1;
        depth += c.num().get_si();
    }
    return depth;
}

}  // namespace

WeightSystem freudenthal_weights(const RootSystem& rs, const Weight& mu) {
    if (!rs.is_dominant(mu)) throw Error(ErrorCode::NotDominant, weight_str(mu));
    WeightSystem ws;
    ws.highest = mu;
    const BigInt expected = weyl_dim(rs, mu);
    if (expected > freudenthal_budget())
        throw Error(ErrorCode::BudgetExceeded, "dimension " + expected.get_str() + " exceeds the budget");

    std::vector<Weight> pos_w;
    for (const auto& r : rs.positive_roots()) pos_w.push_back(rs.root_to_weight(r));

    std::map<Weight, long> depth{{mu, 0}};
    std::vector<Weight> queue{mu};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (const auto& a : pos_w) {
            Weight w = queue[k];
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= a[i];
            Weight d = rs.dominant_conjugate(w);
            if (depth.count(d)) continue;
            const long dep = depth_below(rs, mu, d);
            if (dep < 0) continue;
            depth.emplace(d, dep);
            queue.push_back(d);
        }
    std::vector<Weight> order(queue);
    std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

    Weight mu_rho = mu;
    for (auto& x : mu_rho) x += 1;
    const Rational top = rs.inner(mu_rho, mu_rho);
    std::map<Weight, BigInt> mult{{mu, 1}};
    for (const auto& nu : order) {
        if (nu == mu) continue;
        Rational sum;
        for (const auto& a : pos_w) {
            Weight w = nu;
            while (true) {
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += a[i];
                auto it = mult.find(rs.dominant_conjugate(w));
                if (it == mult.end()) break;
                sum += rs.inner(w, a) * Rational(it->second);
            }
        }
        Weight nu_rho = nu;
        for (auto& x : nu_rho) x += 1;
        const Rational m = Rational(2) * sum / (top - rs.inner(nu_rho, nu_rho));
        mult.emplace(nu, m.to_integer());
    }
    BigInt total = 0;
    for (const auto& [w, m] : mult) total += m * static_cast<unsigned long>(rs.orbit(w).size());
    if (total != expected)
        throw Error(ErrorCode::DimensionMismatch,
                    "Freudenthal total " + total.get_str() + " != Weyl dimension " + expected.get_str());
    ws.multiplicities = std::move(mult);
    ws.dimension = total;
    return ws;
}

std::map<Weight, BigInt> full_character(const RootSystem& rs, const WeightSystem& ws) {
    std::map<Weight, BigInt> out;
    for (const auto& [w, m] : ws.multiplicities)
        for (const auto& o : rs.orbit(w)) out.emplace(o, m);
    return out;
}

std::vector<int> diagram_involution(const RootSystem& rs, const std::vector<int>& levi) {
    std::vector<int> nodes = levi;
    if (nodes.empty()) {
        nodes.resize(static_cast<std::size_t>(rs.rank()));
        std::iota(nodes.begin(), nodes.end(), 0);
    }
    const RootSystem sub = sub_system(rs, nodes);
    std::vector<int> sigma(static_cast<std::size_t>(rs.rank()));
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Weight w(nodes.size(), 0);
        w[k] = -1;
        const Weight d = sub.dominant_conjugate(w);
        const auto it = std::find(d.begin(), d.end(), 1);
        sigma[nodes[k]] = nodes[static_cast<std::size_t>(it - d.begin())];
    }
    return sigma;
}

Weight levi_dual(const RootSystem& rs, const std::vector<int>& levi, const Weight& mu) {
    std::vector<int> nodes = levi;
    if (nodes.empty()) {
        nodes.resize(static_cast<std::size_t>(rs.rank()));
        std::iota(nodes.begin(), nodes.end(), 0);
    }
    for (int i : nodes)
        if (mu[i] < 0) throw Error(ErrorCode::NotDominant, weight_str(mu));
    Weight w = mu;
    for (auto& x : w) x = -x;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i : nodes)
            if (w[i] < 0) {
                w = rs.reflect(i, w);
                changed = true;
            }
    }
    return w;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

}  // namespace sevlab
