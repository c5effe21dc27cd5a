#include "sevlab/highrank.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sevlab/error.hpp"

namespace sevlab {

namespace {

void check_case(int a, int n, int n_min, int n_max) {
    if ((a != 1 && a != 2 && a != 4) || n < n_min || n > n_max)
        throw Error(ErrorCode::UnsupportedCase,
                    "a = " + std::to_string(a) + ", n = " + std::to_string(n) + " is outside the supported range");
}

Partition hook(int arm, int leg) {
    Partition p{arm + 1};
    p.insert(p.end(), static_cast<std::size_t>(leg), 1);
    return p;
}

}  // namespace

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (int c = 1; c <= p.front(); ++c) {
        int len = 0;
        for (int x : p)
            if (x >= c) ++len;
        out.push_back(len);
    }
    return out;
}

bool is_strict(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
    }
    return true;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    const std::size_t r = arms.size();
    if (legs.size() != r) throw Error(ErrorCode::OutOfRange, "arms and legs differ in length");
    if (r == 0) return {};
    // Rows below the diagonal block are read off the conjugate.
    Partition rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(arms[i] + static_cast<int>(i) + 1);
    Partition cols;
    for (std::size_t i = 0; i < r; ++i) cols.push_back(legs[i] + static_cast<int>(i) + 1);
    const int n_rows = cols.front();
    for (int row = static_cast<int>(r) + 1; row <= n_rows; ++row) {
        int len = 0;
        for (int c : cols)
            if (c >= row) ++len;
        rows.push_back(len);
    }
    return rows;
}

Partition d_plus(const Partition& strict) {
    if (!is_strict(strict)) throw Error(ErrorCode::OutOfRange, partition_str(strict) + " is not strict");
    std::vector<int> arms, legs;
    for (int x : strict) {
        arms.push_back(x - 1);
        legs.push_back(x);
    }
    return from_frobenius(arms, legs);
}

Partition d_minus(const Partition& strict) { return conjugate(d_plus(strict)); }

BigInt schur_dim(const Partition& p, int n_vars) {
    if (static_cast<int>(p.size()) > n_vars) return 0;
    const auto conj = conjugate(p);
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            num *= n_vars + j - static_cast<int>(i);
            den *= (p[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
        }
    return num / den;
}

std::vector<Partition> partitions(int k, int max_part, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int x = std::min(remaining, bound); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(k, max_part);
    return out;
}

std::vector<Partition> strict_partitions(int k, int max_part) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(remaining, bound); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x - 1);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(k, max_part);
    return out;
}

int jordan_dim(int a, int n) {
    switch (a) {
        case 1: return (n + 1) * (n + 2) / 2;
        case 2: return (n + 1) * (n + 1);
        case 4: return (n + 1) * (2 * n + 1);
        default: throw Error(ErrorCode::UnsupportedCase, "a = " + std::to_string(a));
    }
}

int u_dim(int a, int n) {
    switch (a) {
        case 1:
        case 2: return n + 1;
        case 4: return 2 * n + 2;
        default: throw Error(ErrorCode::UnsupportedCase, "a = " + std::to_string(a));
    }
}

std::string SchurTerm::label() const {
    std::string s = "S" + partition_str(u);
    if (v) s += "xS" + partition_str(*v);
    return s;
}

std::vector<SchurTerm> wedge_decomp_highrank(int a, int n, int k) {
    check_case(a, n, 1, 64);
    const int m = u_dim(a, n);
    std::vector<SchurTerm> out;
    if (k < 0 || k > jordan_dim(a, n)) return out;
    if (a == 2) {
        for (const auto& l : partitions(k, n + 1, n + 1)) {
            const auto lc = conjugate(l);
            out.push_back({l, lc, schur_dim(l, m) * schur_dim(lc, m)});
        }
        return out;
    }
    const int bound = a == 1 ? n + 1 : 2 * n + 1;
    for (const auto& l : strict_partitions(k, bound)) {
        const auto shape = a == 1 ? d_minus(l) : d_plus(l);
        out.push_back({shape, std::nullopt, schur_dim(shape, m)});
    }
    return out;
}

std::vector<std::vector<SchurTerm>> L_highrank(int a, int n) {
    check_case(a, n, 2, 8);
    const int m = u_dim(a, n);
    const int top = a * n + 1;
    std::vector<std::vector<SchurTerm>> L(static_cast<std::size_t>(top + 1));
    for (int k = 1; k <= top; ++k) {
        auto& slot = L[static_cast<std::size_t>(k)];
        if (a == 1) {
            const auto shape = hook(k, k - 1);
            slot.push_back({shape, std::nullopt, schur_dim(shape, m)});
        } else if (a == 2) {
            for (int i = 0; i <= k - 1; ++i) {
                const int j = k - 1 - i;
                SchurTerm t{hook(i, j), hook(j, i), 0};
                t.dim = schur_dim(t.u, m) * schur_dim(*t.v, m);
                if (t.dim != 0) slot.push_back(t);
            }
        } else {
            for (int j = 0; 2 * j < k; ++j) {
                const int i = k - j;
                if (i > 2 * n + 1) continue;
                const Partition strict = j == 0 ? Partition{i} : Partition{i, j};
                const auto shape = d_plus(strict);
                SchurTerm t{shape, std::nullopt, schur_dim(shape, m)};
                if (t.dim != 0) slot.push_back(t);
            }
        }
    }
    return L;
}

std::vector<BigInt> face_numbers(int a, int n) {
    const auto L = L_highrank(a, n);
    std::vector<BigInt> f;
    for (std::size_t k = 1; k < L.size(); ++k) {
        BigInt s = 0;
        for (const auto& t : L[k]) s += t.dim;
        f.push_back(s);
    }
    return f;
}

BigInt top_cartan_power_dim(int a, int n) {
    check_case(a, n, 2, 8);
    const int m = u_dim(a, n);
    // d = a(n-1)/2 + 1; J = S^2 U, U (x) V, wedge^2 U.
    if (a == 1) return schur_dim({n + 1}, m);
    if (a == 2) return schur_dim({n}, m) * schur_dim({n}, m);
    return schur_dim({2 * n - 1, 2 * n - 1}, m);
}

std::string to_string(FReading r) {
    switch (r) {
        case FReading::RatioSquared: return "((n+1)/(k+1))^2";
        case FReading::OverSquare: return "(n+1)/(k+1)^2";
        case FReading::SquareOver: return "(n+1)^2/(k+1)";
    }
    return "?";
}

Rational f_closed_form_exact(int a, int n, int k, FReading reading) {
    if (a == 1) return Rational(binomial(n + k + 2, k + 1) * binomial(n + 1, k + 1), BigInt(2));
    if (a != 2) throw Error(ErrorCode::UnsupportedCase, "no closed form for a = " + std::to_string(a));
    BigInt s = 0;
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        s += binomial(n + i + 1, i) * binomial(n, i) * binomial(n + j + 1, j) * binomial(n, j);
    }
    const BigInt n1 = n + 1, k1 = k + 1;
    switch (reading) {
        case FReading::RatioSquared: return Rational(s * n1 * n1, k1 * k1);
        case FReading::OverSquare: return Rational(s * n1, k1 * k1);
        case FReading::SquareOver: return Rational(s * n1 * n1, k1);
    }
    return Rational(0);
}

BigInt f_closed_form(int a, int n, int k, FReading reading) {
    const Rational v = f_closed_form_exact(a, n, k, reading);
    if (!v.is_integer())
        throw Error(ErrorCode::NonIntegral, "f_" + std::to_string(k) + " for a = " + std::to_string(a) +
                                                ", n = " + std::to_string(n) + " is " + v.str());
    return v.num();
}

std::vector<FReading> matching_readings(int n_max) {
    std::vector<FReading> out;
    for (auto r : {FReading::RatioSquared, FReading::OverSquare, FReading::SquareOver}) {
        bool all = true;
        for (int n = 2; n <= n_max && all; ++n) {
            const auto f = face_numbers(2, n);
            for (int k = 0; k < static_cast<int>(f.size()); ++k)
                if (f_closed_form_exact(2, n, k, r) != Rational(f[static_cast<std::size_t>(k)])) all = false;
        }
        if (all) out.push_back(r);
    }
    return out;
}

BigInt alternating_sum(int a, int n) {
    BigInt s = 0;
    const auto f = face_numbers(a, n);
    for (std::size_t k = 0; k < f.size(); ++k) s += (k % 2 ? -1 : 1) * f[k];
    return s;
}

BigInt expected_alternating_sum(int a, int n) {
    if (a == 1) return n % 2 == 0 ? 1 : 0;
    return n + 1;
}

}  // namespace sevlab
