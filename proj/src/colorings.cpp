#include "babai/colorings.hpp"

#include "babai/errors.hpp"
#include "babai/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace babai {

namespace {

std::string str(int x) {
    return std::to_string(x);
}

void check_pair(int n, int s, int t) {
    if (s == t) throw DomainError("s and t must differ");
    if (s < 1 || t < 1 || 2 * s > n || 2 * t > n)
        throw DomainError("s, t must lie in [1, n/2] for n=" + str(n));
}

Coloring from_word(const std::vector<int>& word, int n) {
    return Coloring(std::vector<int>(word.begin(), word.begin() + n));
}

// phi(lambda*s + mu*t) = q*lambda + mu (mod 3) over the given box.
Coloring box_coloring(int n, int s, int lambda_extent, int t, int mu_extent, int q) {
    auto box = box_decomposition(n, s, lambda_extent, t, mu_extent);
    if (!box) throw InapplicableError("(lambda, mu) map is not a bijection for n=" + str(n));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) {
        auto [lambda, mu] = (*box)[static_cast<std::size_t>(y)];
        colors[static_cast<std::size_t>(y)] = (q * lambda + mu) % 3;
    }
    return Coloring(std::move(colors));
}

Coloring residue_coloring(int n, int r) {
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) colors[static_cast<std::size_t>(y)] = y % r;
    return Coloring(std::move(colors));
}

// 3 | s, 3 does not divide t, n = 3^u.
Coloring three_power_mixed(int u, int s, int t) {
    const int n = ipow(3, u);
    const auto [r, a] = strip_factor(s, 3);
    const int q = (static_cast<int>(r % 3) * (t % 3)) % 3 == 1 ? 1 : 2;
    return box_coloring(n, s, ipow(3, u - a), t, ipow(3, a), q);
}

// 6 | s, t prime to 6, n = 2*3^u.
Coloring six_divides_s(int u, int s, int t) {
    const int n = 2 * ipow(3, u);
    const auto [r2, b] = strip_factor(s, 2);
    const auto [r, a] = strip_factor(r2, 3);
    int x = static_cast<int>(r % 3) * (t % 3) % 3;
    for (int i = 0; i < b - 1; ++i) x = x * 2 % 3;
    const int q = x == 1 ? 1 : 2;
    return box_coloring(n, s, ipow(3, u - a), t, 2 * ipow(3, a), q);
}

// s odd with 3 | s, t even with 3 not dividing t, n = 2*3^u.
Coloring odd_s_divisible_by_three(int u, int s, int t) {
    const int n = 2 * ipow(3, u);
    const auto [r, a] = strip_factor(s, 3);
    const int q = static_cast<int>((t % 3) * (r % 3) % 3);
    return box_coloring(n, s, 2 * ipow(3, u - a), t, ipow(3, a), q);
}

} // namespace

int ipow(int base, int exp) {
    int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

const std::vector<ColoringRecipe>& recipe_catalog() {
    static const std::vector<ColoringRecipe> catalog = {
        {"greedy_path", "any D within 1..n-1 on P_n", "|D|+1"},
        {"path_division", "any D within 1..n-1 on P_n", "|D|+1"},
        {"path_mod_m", "2 <= m <= n; forbids every distance not divisible by m", "m"},
        {"mod_r", "r | n and no d = 0 (mod r)", "r"},
        {"weakly_r_free", "S weakly r-free in Z_n", "r"},
        {"cycle_3u", "n = 3^u (u >= 2), D = {s,t}", "3"},
        {"cycle_2x3u", "n = 2*3^u (u >= 1), D = {s,t}", "2 if s,t odd, else 3"},
        {"word_12", "n > 3, n != 5, D = {1,2}", "3 if 3 | n, else 4"},
        {"word_23", "n in {10,14} or n >= 20, D = {2,3}", "3"},
        {"near_half_block", "n = 2k+1 (k >= 4), D = {k-1,k}", "3"},
        {"power_of_two", "n = 2^a (a >= 3), D = {1, 2^(a-1)}", "3"},
    };
    return catalog;
}

Coloring path_division_coloring(int n, const DistanceSet& d) {
    d.check_valid_for(MetricSpace::path(n));
    std::vector<int> desc(d.values().rbegin(), d.values().rend());
    // Lengths filled level by level: d_{k-1}, ..., d_1, then the whole path.
    std::vector<int> lengths(desc.begin(), desc.end() - 1);
    std::reverse(lengths.begin(), lengths.end());
    lengths.push_back(n);

    std::vector<int> pattern(static_cast<std::size_t>(desc.back()), 0);
    int colors = 1;
    for (int len : lengths) {
        const int fresh = colors;
        std::vector<int> shifted(pattern.size());
        for (std::size_t i = 0; i < pattern.size(); ++i)
            shifted[i] = pattern[i] == 0 ? fresh : pattern[i] - 1;
        std::vector<int> next;
        next.reserve(static_cast<std::size_t>(len));
        // A, A', A, A', ... truncated; the tail repeats the penultimate block's prefix.
        for (std::size_t block = 0; static_cast<int>(next.size()) < len; ++block) {
            const auto& src = block % 2 == 0 ? pattern : shifted;
            for (std::size_t i = 0; i < src.size() && static_cast<int>(next.size()) < len; ++i) next.push_back(src[i]);
        }
        pattern = std::move(next);
        ++colors;
    }
    return Coloring(std::move(pattern));
}

Coloring path_mod_m_coloring(int n, int m) {
    if (n < 2) throw DomainError("path needs n >= 2");
    if (m < 2 || m > n) throw DomainError("path_mod_m_coloring needs 2 <= m <= n");
    return residue_coloring(n, m);
}

DistanceSet spec_path_witness(int n, int k, int m) {
    if (n < 2 || k < 1 || k > n - 1) throw DomainError("need 1 <= k <= n-1");
    if (m < 2 || m > k + 1) throw DomainError("need 2 <= m <= k+1");
    std::vector<int> ds;
    for (int d = 1; d < m; ++d) ds.push_back(d);
    if (m == k + 1) return DistanceSet(ds);
    for (int d = m + 1; d < n && static_cast<int>(ds.size()) < k; ++d)
        if (d % m != 0) ds.push_back(d);
    if (static_cast<int>(ds.size()) < k)
        throw InfeasibleError("not enough non-multiples of " + str(m) + " in (" + str(m) + "," + str(n) + ")");
    return DistanceSet(ds);
}

Coloring mod_r_coloring(int n, const DistanceSet& d, int r) {
    d.check_valid_for(MetricSpace::cycle(n));
    if (r < 2) throw DomainError("r must exceed 1");
    if (n % r != 0) throw InapplicableError(str(r) + " does not divide " + str(n));
    for (int x : d)
        if (x % r == 0) throw InapplicableError("distance " + str(x) + " is 0 mod " + str(r));
    return residue_coloring(n, r);
}

DistanceSet cayley_distance_set(int n, const DistanceSet& s) {
    std::vector<int> ds;
    for (int x : s) {
        const int y = ((x % n) + n) % n;
        if (y == 0) throw DomainError("generator is zero mod n");
        ds.push_back(std::min(y, n - y));
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return DistanceSet(ds);
}

Coloring weakly_r_free_coloring(int n, const DistanceSet& s, int r) {
    if (!is_weakly_r_free(n, s, r))
        throw InapplicableError(s.to_string() + " is not weakly " + str(r) + "-free in Z_" + str(n));
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (label[static_cast<std::size_t>(root)] >= 0) continue;
        label[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int y = queue[head];
            const int c = label[static_cast<std::size_t>(y)];
            for (int x : s) {
                for (int sign : {1, -1}) {
                    const int z = ((y + sign * x) % n + n) % n;
                    const int want = ((c + sign) % r + r) % r;
                    int& lz = label[static_cast<std::size_t>(z)];
                    if (lz < 0) {
                        lz = want;
                        queue.push_back(z);
                    } else if (lz != want) {
                        throw InapplicableError("inconsistent labelling at " + str(z));
                    }
                }
            }
        }
    }
    return Coloring(std::move(label));
}

DistanceSet three_in_spec_witness(int n, int k) {
    if (n % 3 != 0 || n % 2 == 0 || k <= 1 || 3 * (k - 1) + 1 > n / 2)
        throw InapplicableError("three_in_spec_witness needs 3 | n, n odd, k > 1, 3(k-1)+1 <= n/2");
    std::vector<int> ds;
    for (int t = 0; t < k; ++t) ds.push_back(3 * t + 1);
    return DistanceSet(ds);
}

ScaledInstance scaling_reduce(int n, const DistanceSet& d) {
    if (d.empty()) throw DomainError("distance set is empty");
    int g = n;
    for (int x : d) g = std::gcd(g, x);
    std::vector<int> scaled;
    for (int x : d) scaled.push_back(x / g);
    return {n / g, DistanceSet(scaled), g};
}

Coloring lift_scaled_coloring(const Coloring& reduced, int g) {
    std::vector<int> colors(static_cast<std::size_t>(reduced.size() * g));
    for (std::size_t y = 0; y < colors.size(); ++y) colors[y] = reduced[static_cast<int>(y) / g];
    return Coloring(std::move(colors));
}

std::optional<std::vector<std::pair<int, int>>> box_decomposition(int n, int s, int lambda_extent, int t,
                                                                  int mu_extent) {
    if (static_cast<long long>(lambda_extent) * mu_extent != n) return std::nullopt;
    std::vector<std::pair<int, int>> where(static_cast<std::size_t>(n), {-1, -1});
    for (int lambda = 0; lambda < lambda_extent; ++lambda) {
        for (int mu = 0; mu < mu_extent; ++mu) {
            const auto y = static_cast<std::size_t>((static_cast<long long>(lambda) * s + static_cast<long long>(mu) * t) % n);
            if (where[y].first >= 0) return std::nullopt;
            where[y] = {lambda, mu};
        }
    }
    return where;
}

Coloring cycle_3u_coloring(int u, int s, int t) {
    if (u < 2) throw DomainError("cycle_3u_coloring needs u >= 2");
    const int n = ipow(3, u);
    check_pair(n, s, t);
    const bool s3 = s % 3 == 0, t3 = t % 3 == 0;
    if (!s3 && !t3) return residue_coloring(n, 3);
    if (s3 && t3) {
        const int g = std::gcd(std::gcd(s, t), n);
        const int a = strip_factor(g, 3).second;
        return lift_scaled_coloring(cycle_3u_coloring(u - a, s / g, t / g), g);
    }
    return s3 ? three_power_mixed(u, s, t) : three_power_mixed(u, t, s);
}

Coloring cycle_2x3u_coloring(int u, int s, int t) {
    if (u < 1) throw DomainError("cycle_2x3u_coloring needs u >= 1");
    const int n = 2 * ipow(3, u);
    check_pair(n, s, t);
    const bool s_odd = s % 2 != 0, t_odd = t % 2 != 0;
    if (s_odd && t_odd) return residue_coloring(n, 2);
    if (!s_odd && !t_odd) return lift_scaled_coloring(cycle_3u_coloring(u, s / 2, t / 2), 2);

    const bool s3 = s % 3 == 0, t3 = t % 3 == 0;
    if (s3 && t3) {
        const int g = std::gcd(std::gcd(s, t), n);
        const int a = strip_factor(g, 3).second;
        return lift_scaled_coloring(cycle_2x3u_coloring(u - a, s / g, t / g), g);
    }
    if (!s3 && !t3) return residue_coloring(n, 3);
    const int even = s_odd ? t : s;
    const int odd = s_odd ? s : t;
    if (even % 3 == 0) return six_divides_s(u, even, odd);
    return odd_s_divisible_by_three(u, odd, even);
}

Coloring word_coloring_12(int n) {
    if (n <= 3) throw DomainError("word_coloring_12 needs n > 3");
    if (n == 5) throw InapplicableError("chi(C_5, {1,2}) = 5; no 4-coloring word exists");
    std::vector<int> word;
    const auto rbg = [&](int reps) {
        for (int i = 0; i < reps; ++i) word.insert(word.end(), {0, 1, 2});
    };
    switch (n % 3) {
    case 0:
        rbg(n / 3);
        break;
    case 1:
        rbg((n - 1) / 3);
        word.push_back(3);
        break;
    default:
        rbg((n - 5) / 3);
        word.insert(word.end(), {0, 3, 1, 2, 3}); // r y b g y
        break;
    }
    return Coloring(std::move(word));
}

Coloring word_coloring_23(int n) {
    if (n == 10) return from_word({0, 0, 1, 1, 2, 0, 0, 1, 2, 2}, n);
    if (n == 14) return from_word({0, 0, 1, 1, 2, 0, 0, 1, 2, 2, 0, 1, 1, 2}, n);
    const auto split = n >= 20 ? frobenius_56(n) : std::nullopt;
    if (!split) throw InapplicableError("no rrbbg/rrbbgg word for n=" + str(n));
    std::vector<int> word;
    for (int i = 0; i < split->first; ++i) word.insert(word.end(), {0, 0, 1, 1, 2});
    for (int i = 0; i < split->second; ++i) word.insert(word.end(), {0, 0, 1, 1, 2, 2});
    return Coloring(std::move(word));
}

Coloring near_half_block_coloring(int k) {
    if (k < 4) throw DomainError("near_half_block_coloring needs k >= 4");
    std::vector<int> colors;
    colors.insert(colors.end(), static_cast<std::size_t>(k - 1), 0);
    colors.insert(colors.end(), static_cast<std::size_t>(k - 1), 1);
    colors.insert(colors.end(), 3, 2);
    return Coloring(std::move(colors));
}

Coloring power_of_two_coloring(int a) {
    if (a < 3) throw DomainError("power_of_two_coloring needs a >= 3");
    const int n = ipow(2, a), half = n / 2;
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        int c;
        if (j < half) c = j % 2;
        else if (j == half || j == n - 1) c = 2;
        else c = (j + 1) % 2;
        colors[static_cast<std::size_t>(j)] = c;
    }
    return Coloring(std::move(colors));
}

DistanceSet clique_witness(int n, int size) {
    if (size != 4 && size != 5) throw DomainError("clique_witness supports sizes 4 and 5");
    if (n < size) throw DomainError("cycle too small");
    if (n % size != 0) throw InfeasibleError(str(size) + " does not divide " + str(n));
    return DistanceSet{n / size, 2 * n / size};
}

} // namespace babai
