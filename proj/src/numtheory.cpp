#include "babai/numtheory.hpp"

#include "babai/errors.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace babai {

int ceil_div(int a, int b) {
    return (a + b - 1) / b;
}

int order_in_zn(int n, int d) {
    if (n < 1) throw DomainError("modulus must be positive");
    if (d <= 0 || d >= n) throw DomainError("element must satisfy 0 < d < n");
    return n / std::gcd(n, d);
}

CosetDecomposition coset_decomposition(int n, int d) {
    const int len = order_in_zn(n, d);
    const int count = std::gcd(n, d);
    CosetDecomposition out{n, d, {}};
    // <d> = <gcd(n,d)>, so 0..count-1 are distinct coset representatives.
    for (int x = 0; x < count; ++x) {
        std::vector<int> coset;
        coset.reserve(static_cast<std::size_t>(len));
        for (int i = 0, y = x; i < len; ++i, y = (y + d) % n) coset.push_back(y);
        out.cosets.push_back(std::move(coset));
    }
    return out;
}

int count_nonmultiples(int m, int n, CountInterval interval) {
    if (m <= 1 || n <= m) throw DomainError("count_nonmultiples needs n > m > 1");
    if (interval == CountInterval::OpenMToN) return (n - m - 1) - (ceil_div(n, m) - 2);
    return (n - 1) - (ceil_div(n, m) - 1);
}

namespace {

void check_wrf_args(int n, const DistanceSet& s, int r) {
    if (n < 1) throw DomainError("modulus must be positive");
    if (r <= 1) throw DomainError("r must exceed 1");
    if (s.empty()) throw DomainError("generating set is empty");
    for (int x : s)
        if (x % n == 0) throw DomainError("element " + std::to_string(x) + " is zero mod n");
}

} // namespace

std::optional<std::vector<long long>> weak_r_free_violation(int n, const DistanceSet& s, int r) {
    check_wrf_args(n, s, r);
    // BFS over the subgroup of Z_n x Z_r generated by (s_j, 1); states are a*r + c.
    const auto states = static_cast<std::size_t>(n) * static_cast<std::size_t>(r);
    const auto& gens = s.values();
    const int k = static_cast<int>(gens.size());
    std::vector<int> parent(states, -1);
    std::vector<int> via(states, 0); // +/-(j+1)
    std::vector<char> seen(states, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        const int a = cur / r, c = cur % r;
        for (int j = 0; j < k; ++j) {
            for (int sign : {1, -1}) {
                const int g = gens[static_cast<std::size_t>(j)] % n;
                const int na = ((a + sign * g) % n + n) % n;
                const int nc = ((c + sign) % r + r) % r;
                const int nxt = na * r + nc;
                if (seen[static_cast<std::size_t>(nxt)]) continue;
                seen[static_cast<std::size_t>(nxt)] = 1;
                parent[static_cast<std::size_t>(nxt)] = cur;
                via[static_cast<std::size_t>(nxt)] = sign * (j + 1);
                queue.push_back(nxt);
            }
        }
    }
    for (int c = 1; c < r; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) continue;
        std::vector<long long> coef(static_cast<std::size_t>(k), 0);
        for (int cur = c; cur != 0; cur = parent[static_cast<std::size_t>(cur)]) {
            const int v = via[static_cast<std::size_t>(cur)];
            coef[static_cast<std::size_t>(std::abs(v) - 1)] += v > 0 ? 1 : -1;
        }
        return coef;
    }
    return std::nullopt;
}

bool is_weakly_r_free(int n, const DistanceSet& s, int r) {
    return !weak_r_free_violation(n, s, r).has_value();
}

std::optional<std::pair<int, int>> frobenius_56(int n) {
    if (n < 0) return std::nullopt;
    for (int lambda = 0; 5 * lambda <= n; ++lambda) {
        const int rest = n - 5 * lambda;
        if (rest % 6 == 0) return std::pair{lambda, rest / 6};
    }
    return std::nullopt;
}

int spec_interval_m(int n, int k) {
    if (k <= n / 2 || k > n - 1)
        throw DomainError("k=" + std::to_string(k) + " outside (floor(n/2), n-1] for n=" + std::to_string(n));
    for (int m = 2; m <= n - 1; ++m) {
        const int lo = n - ceil_div(n, m);
        const int hi = n - ceil_div(n, m + 1);
        if (lo < k && k <= hi) return m;
    }
    throw DomainError("no interval contains k"); // unreachable: the intervals partition the range
}

std::pair<long long, int> strip_factor(long long n, int p) {
    int e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return {n, e};
}

bool is_power_of(long long n, int p) {
    auto [rest, e] = strip_factor(n, p);
    return rest == 1 && e >= 1;
}

} // namespace babai
