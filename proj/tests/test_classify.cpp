#include "doctest.h"

#include "mincone/classify.hpp"

#include <stdexcept>

using namespace mincone;

TEST_CASE("Hurwitz-Radon function") {
    CHECK(hurwitz_radon(1) == 1);
    CHECK(hurwitz_radon(2) == 2);
    CHECK(hurwitz_radon(4) == 4);
    CHECK(hurwitz_radon(8) == 8);
    CHECK(hurwitz_radon(16) == 9);
    CHECK(hurwitz_radon(32) == 10);
    CHECK(hurwitz_radon(64) == 12);
    CHECK(hurwitz_radon(128) == 16);
    CHECK(hurwitz_radon(256) == 17);
    CHECK(hurwitz_radon(3) == 1);
    CHECK(hurwitz_radon(12) == 4);
    CHECK_THROWS_AS(hurwitz_radon(0), std::invalid_argument);
}

TEST_CASE("delta table and period-16 growth") {
    int expected[8] = {1, 2, 4, 4, 8, 8, 8, 8};
    for (int q = 1; q <= 8; ++q) CHECK(delta(q) == expected[q - 1]);
    CHECK(delta(9) == 16);
    CHECK(delta(10) == 32);
    CHECK(delta(16) == 128);
    CHECK(delta(17) == 256);
}

TEST_CASE("duality: q <= rho(m) iff delta(q) divides m") {
    for (int q = 1; q <= 12; ++q)
        for (long m = 1; m <= 256; ++m)
            CHECK((q <= hurwitz_radon(m)) == (m % delta(q) == 0));
}

TEST_CASE("admissible pairs") {
    auto pairs = admissible_pairs(4);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair{1, 1});
    CHECK(admissible_pairs(5).empty());
    CHECK(admissible_pairs(9).empty());
    auto p12 = admissible_pairs(12);
    REQUIRE(p12.size() == 2);
    CHECK(p12[0] == std::pair{1, 5});
    CHECK(p12[1] == std::pair{3, 4});
}

TEST_CASE("congruence class counts for n = 4..21") {
    int expected[18] = {1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 1, 1, 1, 0, 1, 1, 2, 2};
    for (long n = 4; n <= 21; ++n) CHECK(congruence_class_count(n).class_count == expected[n - 4]);
}

TEST_CASE("sign classes appear only for q divisible by 4") {
    auto rep = congruence_class_count(21);  // includes (q,m) = (4,8), k=2
    int with_minus = 0;
    for (const auto& c : rep.class_list)
        if (c.k_minus > 0) {
            ++with_minus;
            CHECK(c.q % 4 == 0);
        }
    CHECK(with_minus == 1);  // (4,8) contributes (2,0) and (1,1)
}

TEST_CASE("realizability scan small range") {
    auto bad = realizability_scan(4, 100);
    CHECK(bad == std::vector<long>{5, 9, 17, 33, 49, 65, 81, 97});
    for (long n = 4; n <= 300; ++n)
        if (n % 16 != 1 && n != 5 && n != 9) CHECK(is_realizable(n));
    CHECK_THROWS_AS(realizability_scan(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(realizability_scan(10, 4), std::invalid_argument);
}

TEST_CASE("report rendering") {
    std::string text = congruence_class_count(12).render();
    CHECK(text.find("n: 12") != std::string::npos);
    CHECK(text.find("realizable: true") != std::string::npos);
    CHECK(text.find("pair: q=1 m=5") != std::string::npos);
    CHECK(text.find("class: q=3 m=4") != std::string::npos);
}
