#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mincone {

// Hurwitz-Radon function: rho(2^s * odd) = 8a + 2^b with s = 4a+b, 0 <= b <= 3.
int hurwitz_radon(long m);

// Minimal half-dimension m carrying an irreducible system with q+1
// generators: 1,2,4,4,8,8,8,8 for q = 1..8, then delta(q+8) = 16 delta(q).
int delta(int q);

struct ClassRep {
    int q, m, k_plus, k_minus;
};

struct DimensionReport {
    long n = 0;
    std::vector<std::pair<int, int>> admissible_pairs;  // (q, m), 2m+q+1 = n, 1 <= q <= rho(m)
    bool realizable = false;
    int class_count = 0;
    std::vector<ClassRep> class_list;

    std::string render() const;
};

std::vector<std::pair<int, int>> admissible_pairs(long n);
bool is_realizable(long n);

DimensionReport congruence_class_count(long n);

// All non-realizable n in [n_min, n_max], ascending.
std::vector<long> realizability_scan(long n_min, long n_max);

} // namespace mincone
