#include "sevlab/branching.hpp"

#include <algorithm>

#include "sevlab/error.hpp"
#include "sevlab/simplicial.hpp"

namespace sevlab {

namespace {

Weight scaled(const Weight& w, int k) {
    Weight out = w;
    for (auto& x : out) x *= k;
    return out;
}

Rational monomial_value(const std::vector<Rational>& z, const Weight& w) {
    Rational v(1);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) v *= z[i].pow(w[i]);
    return v;
}

// Partition with Dynkin labels m_1..m_r of SL(r+1).
Partition partition_from_dynkin(const Weight& m) {
    Partition p(m.size(), 0);
    int acc = 0;
    for (std::size_t r = m.size(); r-- > 0;) {
        acc += m[r];
        p[r] = acc;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Weight dynkin_from_partition(const Partition& l, int N) {
    Weight d(static_cast<std::size_t>(N - 1), 0);
    for (int r = 0; r + 1 < N; ++r) {
        const int a = r < static_cast<int>(l.size()) ? l[static_cast<std::size_t>(r)] : 0;
        const int b = r + 1 < static_cast<int>(l.size()) ? l[static_cast<std::size_t>(r) + 1] : 0;
        d[static_cast<std::size_t>(r)] = a - b;
    }
    return d;
}

std::vector<Weight> g1_levi_weights(const CominusculePair& pair) {
    std::vector<Weight> out;
    for (const auto& beta : build_g1_poset(pair).roots) out.push_back(levi_part(pair, pair.ambient.root_to_weight(beta)));
    return out;
}

}  // namespace

Weight RestrictionScheme::restrict(const Weight& levi_weight) const {
    Weight out(matrix.size(), 0);
    for (std::size_t j = 0; j < matrix.size(); ++j)
        for (std::size_t i = 0; i < levi_weight.size(); ++i) out[j] += matrix[j][i] * levi_weight[i];
    return out;
}

std::vector<Rational> RestrictionScheme::levi_point(const std::vector<Rational>& so_point) const {
    const std::size_t n_levi = matrix.front().size();
    std::vector<Rational> z(n_levi, Rational(1));
    for (std::size_t i = 0; i < n_levi; ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j)
            if (matrix[j][i] != 0) z[i] *= so_point[j].pow(matrix[j][i]);
    return z;
}

Weight levi_part(const CominusculePair& pair, const Weight& w) {
    Weight out;
    for (int i : pair.levi) out.push_back(w[static_cast<std::size_t>(i)]);
    return out;
}

RestrictionScheme restriction_scheme(int a) {
    if (a != 1 && a != 2 && a != 4 && a != 8)
        throw Error(ErrorCode::UnsupportedCase, "no restriction scheme for a = " + std::to_string(a));
    auto pair = cominuscule_pair(a);
    auto levi = sub_system(pair.ambient, pair.levi);
    RootSystem so = a == 1   ? build_root_system("A", 1)
                    : a == 2 ? build_root_system("A", 2)
                    : a == 4 ? build_root_system("C", 3)
                             : build_root_system("F", 4);
    RestrictionScheme s{a, pair, levi, so, {}, {}, {}, false, {}};

    // Highest weight of J: the dominant g_1 weight of largest norm.
    for (const auto& w : g1_levi_weights(pair))
        if (s.levi.is_dominant(w) && (s.j_levi.empty() || s.levi.inner(w, w) > s.levi.inner(s.j_levi, s.j_levi)))
            s.j_levi = w;

    switch (a) {
        case 1:
            s.j_phi = {4};
            s.matrix = {{2, 2}};
            s.torus = "U eigenvalues (s^2, 1, s^-2)";
            break;
        case 2: {
            s.j_phi = {1, 1};
            const Weight first(s.j_levi.begin(), s.j_levi.begin() + 2);
            const Weight second(s.j_levi.begin() + 2, s.j_levi.end());
            s.second_factor_inverted = first == second;
            const int sign = s.second_factor_inverted ? -1 : 1;
            s.matrix = {{1, 0, sign, 0}, {0, 1, 0, sign}};
            s.torus = s.second_factor_inverted ? "A eigenvalues x, B eigenvalues x^-1, x1 x2 x3 = 1"
                                               : "A and B eigenvalues x, x1 x2 x3 = 1";
            break;
        }
        case 4:
            s.j_phi = {0, 1, 0};
            s.matrix = {{1, 0, 0, -1, 0}, {0, 1, 0, 0, -1}, {0, 0, 1, 1, 1}};
            s.torus = "U eigenvalues (x1, x2, x3, x1^-1, x2^-1, x3^-1)";
            break;
        default:
            s.j_phi = {0, 0, 0, 1};
            // E6 labels (l1..l6) restrict to F4 labels (l2, l4, l3+l5, l1+l6).
            s.matrix = {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {1, 0, 0, 0, 0, 1}};
            s.torus = "E6 torus folded onto F4";
            break;
    }
    return s;
}

Rational j_character(const RestrictionScheme& s, const std::vector<Rational>& so_point) {
    const auto z = s.levi_point(so_point);
    Rational sum(0);
    for (const auto& w : g1_levi_weights(s.pair)) sum += monomial_value(z, w);
    return sum;
}

bool scheme_valid_at(const RestrictionScheme& s, const std::vector<Rational>& so_point) {
    return j_character(s, so_point) == char_eval(s.so, s.j_phi, so_point) + Rational(1);
}

std::vector<Rational> random_regular_point(const RestrictionScheme& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(2, 41), den(1, 7);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rational> w;
        for (int j = 0; j < s.so.rank(); ++j) w.emplace_back(num(rng), den(rng));
        try {
            (void)char_eval(s.so, Weight(static_cast<std::size_t>(s.so.rank()), 0), w);
            (void)char_eval(s.levi, Weight(static_cast<std::size_t>(s.levi.rank()), 0), s.levi_point(w));
            return w;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SingularPoint) throw;
        }
    }
    throw Error(ErrorCode::SingularPoint, "no regular point found");
}

Rational euler_char_at_point(const RestrictionScheme& s, const LSequence& seq, const std::vector<Rational>& so_point) {
    const auto z = s.levi_point(so_point);
    Rational chi(0);
    for (int k = 1; k <= 2 * s.a + 1; ++k) {
        std::vector<Weight> mus;
        for (const auto& c : seq.L[static_cast<std::size_t>(k)]) mus.push_back(levi_part(s.pair, c.levi_weight));
        Rational sum(0);
        for (const auto& v : char_eval_many(s.levi, mus, z)) sum += v;
        chi += k % 2 ? sum : -sum;
    }
    return chi;
}

bool EulerReport::ok() const {
    if (!scheme_ok || values.empty()) return false;
    return std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == expected; });
}

EulerReport euler_check(int a, int n_points, std::uint64_t seed) {
    const auto s = restriction_scheme(a);
    const auto seq = identify_interval(s.pair);
    EulerReport r;
    r.a = a;
    r.expected = Rational(manifold_euler(a));
    r.scheme_ok = true;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_points; ++i) {
        auto p = random_regular_point(s, rng);
        if (!scheme_valid_at(s, p)) r.scheme_ok = false;
        r.values.push_back(euler_char_at_point(s, seq, p));
        r.points.push_back(std::move(p));
    }
    return r;
}

bool kostant_restriction_check(const RestrictionScheme& s, const std::vector<Rational>& so_point) {
    const auto z = s.levi_point(so_point);
    // Elementary symmetric functions of the restricted weights of J.
    std::vector<Rational> e{Rational(1)};
    for (const auto& w : g1_levi_weights(s.pair)) {
        const Rational t = monomial_value(z, w);
        e.push_back(Rational(0));
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += e[k - 1] * t;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
        std::vector<Weight> mus;
        for (const auto& c : wedge_decomposition(s.pair, static_cast<int>(k))) mus.push_back(levi_part(s.pair, c.levi_weight));
        Rational sum(0);
        for (const auto& v : char_eval_many(s.levi, mus, z)) sum += v;
        if (sum != e[k]) return false;
    }
    return true;
}

std::map<Weight, BigInt> restricted_character(const RestrictionScheme& s, const Weight& levi_weight) {
    std::map<Weight, BigInt> out;
    for (const auto& [w, m] : full_character(s.levi, freudenthal_weights(s.levi, levi_weight))) out[s.restrict(w)] += m;
    return out;
}

BigInt trivial_multiplicity(const RootSystem& so, const std::map<Weight, BigInt>& mult) {
    const auto rho = so.rho();
    const auto n = static_cast<std::size_t>(so.rank());
    BigInt total = 0;
    for (const auto& w : so.weyl_group()) {
        Weight shift(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            int wr = 0;
            for (std::size_t j = 0; j < n; ++j) wr += w.matrix[i * n + j] * rho[j];
            shift[i] = rho[i] - wr;
        }
        const auto it = mult.find(shift);
        if (it != mult.end()) total += w.sign * it->second;
    }
    return total;
}

BigInt sl2_trivial_count(const std::map<Weight, BigInt>& mult) {
    std::map<int, BigInt> m;
    for (const auto& [w, c] : mult)
        if (c != 0) m[w.at(0)] += c;
    BigInt trivial = 0;
    while (!m.empty()) {
        auto top = std::prev(m.end());
        if (top->second == 0) {
            m.erase(top);
            continue;
        }
        const int h = top->first;
        const BigInt c = top->second;
        if (h < 0 || c < 0) throw Error(ErrorCode::DimensionMismatch, "character is not a sum of sl2 strings");
        if (h == 0) trivial += c;
        for (int x = h; x >= -h; x -= 2) {
            m[x] -= c;
            if (m[x] < 0) throw Error(ErrorCode::DimensionMismatch, "character is not a sum of sl2 strings");
            if (m[x] == 0) m.erase(x);
        }
    }
    return trivial;
}

bool has_so_invariant(const Partition& l, int N) {
    if (static_cast<int>(l.size()) > N) return false;
    const bool all_even = std::all_of(l.begin(), l.end(), [](int x) { return x % 2 == 0; });
    const bool all_odd = std::all_of(l.begin(), l.end(), [](int x) { return x % 2 == 1; });
    return all_even || (static_cast<int>(l.size()) == N && all_odd);
}

bool has_sp_invariant(const Partition& l, int N) {
    if (static_cast<int>(l.size()) > N) return false;
    const auto c = conjugate(l);
    return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
}

bool has_sl_pairing_invariant(const Partition& l, const Partition& m, int N) {
    if (static_cast<int>(l.size()) > N || static_cast<int>(m.size()) > N) return false;
    return dynkin_from_partition(l, N) == dynkin_from_partition(m, N);
}

std::vector<int> invariant_dims(int a) {
    if (a != 1 && a != 2 && a != 4) throw Error(ErrorCode::UnsupportedCase, "invariant rules cover a = 1, 2, 4");
    const auto s = restriction_scheme(a);
    const auto seq = identify_interval(s.pair);
    std::vector<int> out;
    for (int k = 0; k <= 2 * a; ++k) {
        int count = 0;
        for (const auto& c : seq.L[static_cast<std::size_t>(k + 1)]) {
            const auto w = levi_part(s.pair, c.levi_weight);
            if (a == 1) {
                count += static_cast<int>(sl2_trivial_count(restricted_character(s, w)).get_si());
            } else if (a == 2) {
                const Weight first(w.begin(), w.begin() + 2);
                Weight second(w.begin() + 2, w.end());
                if (!s.second_factor_inverted) std::reverse(second.begin(), second.end());
                count += first == second;
            } else {
                count += has_sp_invariant(partition_from_dynkin(w), 6);
            }
        }
        out.push_back(count);
    }
    return out;
}

std::vector<int> invariant_dims_bruteforce(int a) {
    if (a != 1 && a != 2 && a != 4) throw Error(ErrorCode::UnsupportedCase, "invariant counts cover a = 1, 2, 4");
    const auto s = restriction_scheme(a);
    const auto seq = identify_interval(s.pair);
    std::vector<int> out;
    for (int k = 0; k <= 2 * a; ++k) {
        BigInt count = 0;
        for (const auto& c : seq.L[static_cast<std::size_t>(k + 1)])
            count += trivial_multiplicity(s.so, restricted_character(s, levi_part(s.pair, c.levi_weight)));
        out.push_back(static_cast<int>(count.get_si()));
    }
    return out;
}

std::vector<int> higher_invariants(int a, int n) {
    const auto L = L_highrank(a, n);
    const int N = u_dim(a, n);
    std::vector<int> out;
    for (int k = 0; k <= a * n; ++k) {
        int count = 0;
        for (const auto& t : L[static_cast<std::size_t>(k + 1)]) {
            if (a == 1) count += has_so_invariant(t.u, N);
            else if (a == 2) count += has_sl_pairing_invariant(t.u, *t.v, N);
            else count += has_sp_invariant(t.u, N);
        }
        out.push_back(count);
    }
    return out;
}

std::vector<CartanRow> cartan_splitting_check(int a, int k_max, std::uint64_t seed) {
    if (a != 1 && a != 2 && a != 4) throw Error(ErrorCode::UnsupportedCase, "Cartan splitting covers a = 1, 2, 4");
    const auto s = restriction_scheme(a);
    std::mt19937_64 rng(seed);
    const auto point = random_regular_point(s, rng);
    const auto z = s.levi_point(point);
    std::vector<CartanRow> rows;
    for (int k = 0; k <= k_max; ++k) {
        CartanRow row;
        row.k = k;
        row.dim_power = weyl_dim(s.levi, scaled(s.j_levi, k));
        row.dim_sum = 0;
        std::vector<Weight> parts;
        for (int l = 0; l <= k; ++l) {
            parts.push_back(scaled(s.j_phi, l));
            row.dim_sum += weyl_dim(s.so, parts.back());
        }
        Rational rhs(0);
        for (const auto& v : char_eval_many(s.so, parts, point)) rhs += v;
        row.character_ok = char_eval(s.levi, scaled(s.j_levi, k), z) == rhs;
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> expected_invariant_pattern(int a, int n) {
    std::vector<int> out(static_cast<std::size_t>(a * n + 1), 0);
    for (int k = 0; k <= a * n; k += a) out[static_cast<std::size_t>(k)] = 1;
    return out;
}

}  // namespace sevlab
