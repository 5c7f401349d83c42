#pragma once

#include "babai/chromatic.hpp"
#include "babai/graph_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace babai {

// A named construction and the color count it claims when applicable.
struct ColoringRecipe {
    std::string name;
    std::string applicability;
    std::string claimed_colors; // "3", "|D|+1", "r", ...
};

const std::vector<ColoringRecipe>& recipe_catalog();

// --- paths -------------------------------------------------------------------

// Recursive block scheme over the division chain d_1 > d_2 > ... > d_k:
// blocks of d_k alternate two colors; each higher level alternates the level
// below with a copy whose colors are shifted (1 -> new color, c -> c-1).
Coloring path_division_coloring(int n, const DistanceSet& d);

// phi(i) = i mod m.
Coloring path_mod_m_coloring(int n, int m);

// A k-subset D with chi(P_n, D) = m: {1..m-1} plus the smallest non-multiples of m above m.
DistanceSet spec_path_witness(int n, int k, int m);

// --- cycles / Cayley graphs over Z_n -----------------------------------------

// i mod r; needs r | n and no d = 0 (mod r).
Coloring mod_r_coloring(int n, const DistanceSet& d, int r);

// Labels each element of <S> by the coefficient sum of a representation, mod r,
// then copies the labelling onto every coset (representative gets 0).
Coloring weakly_r_free_coloring(int n, const DistanceSet& s, int r);

// Cayley generators of Z_n as cycle distances: s -> min(s, n-s), deduplicated.
DistanceSet cayley_distance_set(int n, const DistanceSet& s);

// {1, 4, 7, ..., 3(k-1)+1}, a k-subset with chi(C_n, D) = 3.
DistanceSet three_in_spec_witness(int n, int k);

struct ScaledInstance {
    int n = 0;
    DistanceSet d;
    int g = 1;
};

// (n, D) -> (n/g, D/g) with g = gcd(n, D).
ScaledInstance scaling_reduce(int n, const DistanceSet& d);

// Pulls a coloring of C_{n/g} back to C_n: y -> col[y / g].
Coloring lift_scaled_coloring(const Coloring& reduced, int g);

// Solves y = lambda*s + mu*t (mod n) over the box [0, lambda_extent) x [0, mu_extent).
// Returns the (lambda, mu) pair for every y in Z_n, or nullopt if the map is not a bijection.
std::optional<std::vector<std::pair<int, int>>> box_decomposition(int n, int s, int lambda_extent, int t,
                                                                  int mu_extent);

// Proper 3-coloring of G(C_{3^u}, {s, t}), u >= 2.
Coloring cycle_3u_coloring(int u, int s, int t);

// Proper coloring of G(C_{2*3^u}, {s, t}), u >= 1: 2 colors if s, t both odd, else 3.
Coloring cycle_2x3u_coloring(int u, int s, int t);

// Color words for G(C_n, {1,2}); colors r,b,g,y -> 0,1,2,3.
Coloring word_coloring_12(int n);

// Color words for G(C_n, {2,3}): explicit for n = 10, 14; rrbbg/rrbbgg blocks for n >= 20.
Coloring word_coloring_23(int n);

// n = 2k+1: k-1 vertices of color 0, k-1 of color 1, 3 of color 2. Target D = {k-1, k}.
Coloring near_half_block_coloring(int k);

// n = 2^a: parity with color 2 spliced in at 2^(a-1) and 2^a - 1. Target D = {1, 2^(a-1)}.
Coloring power_of_two_coloring(int a);

// D = {n/size, 2n/size}; G(C_n, D) then contains K_size.
DistanceSet clique_witness(int n, int size);

int ipow(int base, int exp);

} // namespace babai
