#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sevlab/rational.hpp"

namespace sevlab {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

int size(const Partition& p);
Partition conjugate(const Partition& p);
bool is_strict(const Partition& p);
std::string partition_str(const Partition& p);

/// Shape assembled from arms and legs, both of length r (Frobenius notation).
Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);

/// (l1, l2+1, ..., l_r+r-1, r^{l_r}, (r-1)^{l_{r-1}-l_r-1}, ..., 1^{l1-l2-1}) for a
/// strict partition l; Frobenius (l-1 | l), the shapes of wedge powers of an
/// exterior square. Throws OutOfRange for non-strict input.
Partition d_plus(const Partition& strict);
/// Conjugate of d_plus; Frobenius (l | l-1), the shapes of wedge powers of a symmetric square.
Partition d_minus(const Partition& strict);

/// Hook-content formula; zero when the length exceeds n_vars.
BigInt schur_dim(const Partition& p, int n_vars);

/// Partitions of k with parts at most max_part and length at most max_len.
std::vector<Partition> partitions(int k, int max_part, int max_len);
std::vector<Partition> strict_partitions(int k, int max_part);

/// dim J_{n+1}: (n+1)(n+2)/2, (n+1)^2, (n+1)(2n+1) for a = 1, 2, 4.
int jordan_dim(int a, int n);
/// Dimension of U: n+1, n+1, 2n+2.
int u_dim(int a, int n);

struct SchurTerm {
    Partition u;
    /// Second factor for a = 2.
    std::optional<Partition> v;
    BigInt dim;
    std::string label() const;
};

/// Constituents of wedge^k J_{n+1}. a = 1: S_{d_minus(l)}U over strict l with
/// l1 <= n+1; a = 2: S_l U (x) S_{l'} V in an (n+1) x (n+1) box; a = 4:
/// S_{d_plus(l)}U over strict l with l1 <= 2n+1. Throws UnsupportedCase.
std::vector<SchurTerm> wedge_decomp_highrank(int a, int n, int k);

/// L[k] for 0 <= k <= an+1 (L[0] empty). Throws UnsupportedCase unless
/// a in {1,2,4} and 2 <= n <= 8.
std::vector<std::vector<SchurTerm>> L_highrank(int a, int n);

/// f_k = dim L^{k+1} for 0 <= k <= an.
std::vector<BigInt> face_numbers(int a, int n);

/// Dimension of J^{(d)} with d = a(n-1)/2 + 1, via its Schur shape.
BigInt top_cartan_power_dim(int a, int n);

/// Readings of the prefactor printed as "(\frac{n+1}{k+1})^2".
enum class FReading { RatioSquared, OverSquare, SquareOver };
std::string to_string(FReading r);

/// a = 1: C(n+k+2,k+1) C(n+1,k+1) / 2; a = 2: prefactor times
/// sum_{i+j=k} C(n+i+1,i) C(n,i) C(n+j+1,j) C(n,j). Throws NonIntegral.
BigInt f_closed_form(int a, int n, int k, FReading reading = FReading::RatioSquared);
/// Same value without the integrality check.
Rational f_closed_form_exact(int a, int n, int k, FReading reading = FReading::RatioSquared);

/// Readings for which the closed form equals dim L^{k+1} for all 2 <= n <= n_max.
std::vector<FReading> matching_readings(int n_max);

/// sum_k (-1)^k f_k.
BigInt alternating_sum(int a, int n);
/// (1+(-1)^n)/2 for a = 1, n+1 otherwise.
BigInt expected_alternating_sum(int a, int n);

}  // namespace sevlab
