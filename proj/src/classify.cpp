#include "mincone/classify.hpp"

#include <sstream>
#include <stdexcept>

namespace mincone {

int hurwitz_radon(long m) {
    if (m < 1) throw std::invalid_argument("hurwitz_radon: m must be >= 1");
    int s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    int a = s / 4, b = s % 4;
    return 8 * a + (1 << b);
}

int delta(int q) {
    if (q < 1) throw std::invalid_argument("delta: q must be >= 1");
    static const int table[8] = {1, 2, 4, 4, 8, 8, 8, 8};
    long d = table[(q - 1) % 8];
    for (int i = 0; i < (q - 1) / 8; ++i) {
        d *= 16;
        if (d > (1L << 40)) throw std::invalid_argument("delta: q out of supported range");
    }
    return static_cast<int>(d);
}

std::vector<std::pair<int, int>> admissible_pairs(long n) {
    if (n < 4) throw std::invalid_argument("admissible_pairs: n must be >= 4");
    std::vector<std::pair<int, int>> out;
    for (long m = (n - 2) / 2; m >= 1; --m) {
        long q = n - 1 - 2 * m;
        if (q < 1) continue;
        if (q <= hurwitz_radon(m)) out.emplace_back(static_cast<int>(q), static_cast<int>(m));
    }
    return out;  // q ascending
}

bool is_realizable(long n) { return !admissible_pairs(n).empty(); }

DimensionReport congruence_class_count(long n) {
    DimensionReport rep;
    rep.n = n;
    rep.admissible_pairs = admissible_pairs(n);
    rep.realizable = !rep.admissible_pairs.empty();
    for (const auto& [q, m] : rep.admissible_pairs) {
        int d = delta(q);
        if (m % d != 0) continue;  // excluded by Radon duality q <= rho(m) <=> delta(q) | m
        int k = m / d;
        if (q % 4 != 0) {
            rep.class_list.push_back({q, m, k, 0});
        } else {
            for (int j = 0; j <= k / 2; ++j) rep.class_list.push_back({q, m, k - j, j});
        }
    }
    rep.class_count = static_cast<int>(rep.class_list.size());
    return rep;
}

std::vector<long> realizability_scan(long n_min, long n_max) {
    if (n_min < 4 || n_min > n_max || n_max > 1000000L)
        throw std::invalid_argument("realizability_scan: invalid range");
    std::vector<bool> realizable(n_max - n_min + 1, false);
    for (long m = 1; 2 * m + 2 <= n_max; ++m) {
        int rho = hurwitz_radon(m);
        for (long q = 1; q <= rho; ++q) {
            long n = 2 * m + q + 1;
            if (n > n_max) break;
            if (n >= n_min) realizable[n - n_min] = true;
        }
    }
    std::vector<long> out;
    for (long n = n_min; n <= n_max; ++n)
        if (!realizable[n - n_min]) out.push_back(n);
    return out;
}

std::string DimensionReport::render() const {
    std::ostringstream out;
    out << "n: " << n << "\n";
    out << "realizable: " << (realizable ? "true" : "false") << "\n";
    out << "class_count: " << class_count << "\n";
    for (const auto& [q, m] : admissible_pairs)
        out << "pair: q=" << q << " m=" << m << "\n";
    for (const auto& c : class_list)
        out << "class: q=" << c.q << " m=" << c.m << " kplus=" << c.k_plus << " kminus=" << c.k_minus << "\n";
    return out.str();
}

} // namespace mincone
