#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "typea/matgroup.hpp"

using namespace typea;

namespace {

std::vector<i64> class_sizes(const mat_group& g) {
    std::vector<i64> v;
    for (const auto& c : g.classes) v.push_back((i64)c.size());
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<i64> rep_orders(const mat_group& g) {
    std::vector<i64> v;
    for (int r : g.class_rep) v.push_back(g.element_order(r));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("special linear closures") {
    mat_group g = sl_group(2, 3);
    CHECK(g.order() == 24);
    CHECK(g.class_count() == 7);
    CHECK(g.name == "SL(2,3)");
    CHECK(rep_orders(g) == std::vector<i64>{1, 2, 3, 3, 4, 6, 6});

    CHECK(sl_group(2, 2).order() == 6);
    CHECK(sl_group(2, 2).class_count() == 3);
    CHECK(sl_group(2, 4).order() == 60);
    CHECK(sl_group(2, 4).class_count() == 5);
    CHECK(sl_group(2, 5).order() == 120);
    CHECK(sl_group(2, 5).class_count() == 9);
    CHECK(sl_group(2, 7).order() == 336);
    CHECK(sl_group(2, 7).class_count() == 11);
    CHECK(sl_group(3, 2).order() == 168);
    CHECK(sl_group(3, 2).class_count() == 6);

    mat_group big = sl_group(3, 3);
    CHECK(big.order() == 5616);
    CHECK(big.class_count() == 12);
    CHECK(rep_orders(big) == std::vector<i64>{1, 2, 3, 3, 4, 6, 8, 8, 13, 13, 13, 13});
}

TEST_CASE("class structure internals") {
    mat_group g = sl_group(2, 3);
    // identity class comes first and reps are least indices
    CHECK(g.classes[0] == std::vector<int>{0});
    for (i64 c = 0; c < g.class_count(); c++) {
        CHECK(g.class_rep[c] == g.classes[c].front());
        CHECK(std::is_sorted(g.classes[c].begin(), g.classes[c].end()));
        for (int e : g.classes[c]) CHECK(g.class_of[e] == c);
    }
    i64 total = 0;
    for (const auto& c : g.classes) total += (i64)c.size();
    CHECK(total == g.order());
    CHECK(class_sizes(g) == std::vector<i64>{1, 1, 4, 4, 4, 4, 6});
    for (int e = 0; e < (int)g.order(); e++) {
        CHECK(g.mul(e, g.inv_of[e]) == 0);
        CHECK(g.class_of[g.inv_of[e]] == g.class_of[g.inv_of[g.class_rep[g.class_of[e]]]]);
    }
}

TEST_CASE("order bound rejection") {
    CHECK_THROWS_AS(sl_group(2, 49), std::invalid_argument);
    CHECK_THROWS_AS(sl_group(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(sl_group(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(sl_group(1, 3), std::invalid_argument);
}

TEST_CASE("special unitary closures") {
    mat_group g = su_group(2, 3);
    CHECK(g.order() == 24);
    CHECK(g.class_count() == 7);
    CHECK(rep_orders(g) == std::vector<i64>{1, 2, 3, 3, 4, 6, 6});

    mat_group h = su_group(3, 2);
    CHECK(h.order() == 216);
    CHECK(h.class_count() == 16);
    CHECK(h.exponent() == 12);
    // every element respects the hermitian form and has determinant 1
    const fq_field& f = *h.field;
    CHECK(f.p == 2);
    CHECK(f.s == 2);
    for (const auto& m : h.elements) {
        CHECK(unitary_wrt_antidiag(f, 3, m, 1));
        CHECK(mat_det(f, 3, m) == f.one());
    }
}

TEST_CASE("projective and permutation groups") {
    mat_group g = pgl_group(2, 3);
    CHECK(g.order() == 24);
    CHECK(g.class_count() == 5);
    CHECK(rep_orders(g) == std::vector<i64>{1, 2, 2, 3, 4});
    i64 p_regular = 0;
    for (i64 c = 0; c < g.class_count(); c++)
        if (g.element_order(g.class_rep[c]) % 3 != 0) p_regular++;
    CHECK(p_regular == 4);

    CHECK(symmetric_group(3).order() == 6);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(symmetric_group(4).class_count() == 5);
    CHECK(symmetric_group(5).class_count() == 7);
    CHECK(symmetric_group(6).class_count() == 11);
    CHECK(alternating_group(5).order() == 60);
    CHECK(alternating_group(5).class_count() == 5);
    CHECK(trivial_group().order() == 1);
    CHECK(trivial_group().class_count() == 1);
}

TEST_CASE("element predicates") {
    mat_group g = sl_group(2, 3);
    i64 unitri = 0, diag = 0, regu = 0;
    for (int e = 0; e < (int)g.order(); e++) {
        if (g.is_unitriangular(e)) unitri++;
        if (g.is_diagonal(e)) diag++;
        if (g.is_regular_unipotent(e)) {
            regu++;
            CHECK(g.is_unipotent(e));
        }
        CHECK(g.is_unipotent(e) == (g.element_order(e) == 1 || g.element_order(e) == 3));
    }
    CHECK(unitri == 3);
    CHECK(diag == 2);
    CHECK(regu == 8);
    CHECK(g.is_identity(0));

    mat_group h = sl_group(3, 2);
    i64 regu3 = 0;
    for (int e = 0; e < (int)h.order(); e++)
        if (h.is_regular_unipotent(e)) {
            regu3++;
            CHECK(h.element_order(e) == 4);
        }
    // regular unipotents of SL(3,2): one class of size 42
    CHECK(regu3 == 42);
}

TEST_CASE("power and exponent helpers") {
    mat_group g = sl_group(2, 5);
    CHECK(g.exponent() == 60);
    for (int e : g.class_rep) {
        i64 o = g.element_order(e);
        CHECK(g.power(e, o) == 0);
        CHECK(g.power(e, 0) == 0);
        CHECK(g.power(e, o - 1) == g.inv_of[e]);
    }
    CHECK(sl_group(2, 3).exponent() == 12);
    CHECK(sl_group(3, 2).exponent() == 84);
    CHECK(symmetric_group(6).exponent() == 60);
}
