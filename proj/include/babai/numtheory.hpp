#pragma once

#include "babai/graph_core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace babai {

// Order of d in the additive group Z_n, i.e. n / gcd(n, d).
int order_in_zn(int n, int d);

// Cosets of <d> in Z_n, each listed x, x+d, x+2d, ...; the coset of 0 first.
struct CosetDecomposition {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> cosets;
};

CosetDecomposition coset_decomposition(int n, int d);

enum class CountInterval {
    OpenMToN,     // (m, n)
    HalfOpen1ToN  // [1, n)
};

// Integers in the interval that are not multiples of m, via the ceil(n/m) counts.
int count_nonmultiples(int m, int n, CountInterval interval);

// True iff every integer combination sum(c_j s_j) == 0 (mod n) has sum(c_j) == 0 (mod r).
bool is_weakly_r_free(int n, const DistanceSet& s, int r);

// Coefficients c (aligned with s.values()) with sum(c_j s_j) == 0 (mod n) but
// sum(c_j) != 0 (mod r), or nullopt when s is weakly r-free.
std::optional<std::vector<long long>> weak_r_free_violation(int n, const DistanceSet& s, int r);

// n = 5*lambda + 6*mu with the smallest lambda, if any representation exists.
std::optional<std::pair<int, int>> frobenius_56(int n);

// The m in {2, ..., n-1} with n - ceil(n/m) < k <= n - ceil(n/(m+1)).
int spec_interval_m(int n, int k);

// Strips every factor p: returns (n / p^e, e).
std::pair<long long, int> strip_factor(long long n, int p);

bool is_power_of(long long n, int p); // n = p^e with e >= 1
int ceil_div(int a, int b);

} // namespace babai
