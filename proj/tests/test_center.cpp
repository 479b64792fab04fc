#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "typea/center.hpp"

using namespace typea;

namespace {

center_data mk(i64 n, i64 d, i64 q, bool twisted = false) {
    auto [rd, fr] = build_group(n, d, q, twisted);
    return center_group(rd, fr);
}

// ambient elements of the subgroup, from its abstract presentation
std::set<ab_elt> sub_set(const fin_ab_group& g, const subgroup_data& sub) {
    std::set<ab_elt> out;
    for (const ab_elt& e : sub.group.elements()) {
        ab_elt acc = g.zero();
        for (size_t i = 0; i < e.size(); ++i) acc = g.add(acc, g.scale(e[i], sub.gens[i]));
        out.insert(acc);
    }
    return out;
}

std::vector<i64> all_labels(i64 n) {
    std::vector<i64> v((size_t)(n - 1));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

levi_label from_mask(i64 n, i64 mask) {
    levi_label I;
    for (i64 j = 1; j < n; ++j)
        if (mask & (i64(1) << (j - 1))) I.push_back(j);
    return I;
}

std::set<i64> node_image(const std::vector<i64>& perm, const levi_label& I) {
    std::set<i64> out;
    for (i64 j : I) out.insert(perm[(size_t)j]);
    return out;
}

}  // namespace

TEST_CASE("center component groups") {
    CHECK(mk(4, 1, 3).group.factors == std::vector<i64>{4});
    CHECK(mk(4, 1, 2).group.is_trivial());
    CHECK(mk(4, 1, 4).group.is_trivial());
    CHECK(mk(2, 1, 2).group.is_trivial());
    CHECK(mk(2, 1, 3).group.factors == std::vector<i64>{2});
    CHECK(mk(6, 1, 5).group.factors == std::vector<i64>{6});
    CHECK(mk(6, 1, 2).group.factors == std::vector<i64>{3});
    CHECK(mk(6, 1, 3).group.factors == std::vector<i64>{2});
    CHECK(mk(6, 1, 7).group.factors == std::vector<i64>{6});
    CHECK(mk(3, 1, 2, true).group.factors == std::vector<i64>{3});
    CHECK(mk(6, 2, 5).group.factors == std::vector<i64>{3});
    CHECK(mk(6, 2, 3).group.is_trivial());
    CHECK(mk(4, 2, 3).group.factors == std::vector<i64>{2});
    CHECK(mk(4, 2, 2).group.is_trivial());
    CHECK(mk(4, 4, 3).group.is_trivial());
    CHECK(mk(9, 3, 2).group.factors == std::vector<i64>{3});

    center_data c = mk(5, 1, 7, true);
    CHECK(c.ns == std::vector<i64>{5});
    CHECK(c.d == 1);
    CHECK(c.p == 7);
    CHECK((i64)c.coweight_images.size() == 4);

    auto [rd, fr] = build_group(6, 1, 5, false);
    CHECK_THROWS_AS(center_group(levi_subdatum(rd, {1, 3, 5}), fr), std::invalid_argument);
}

TEST_CASE("coweight images generate cyclically") {
    for (auto [n, d, q] : std::vector<std::array<i64, 3>>{
             {2, 1, 3}, {3, 1, 2}, {4, 1, 3}, {5, 1, 2}, {6, 1, 5}, {6, 1, 2},
             {4, 2, 3}, {6, 2, 5}, {6, 3, 5}, {8, 2, 3}, {9, 3, 2}}) {
        center_data c = mk(n, d, q);
        for (i64 j = 1; j < n; ++j)
            CHECK(c.coweight_images[(size_t)j - 1] == c.group.scale(j, c.coweight_images[0]));
        if (d == 1 && c.group.order() == n)
            CHECK(c.group.element_order(c.coweight_images[0]) == n);
    }
    // the middle coweight dies in the half quotient
    center_data ch = mk(4, 2, 3);
    CHECK(ch.group.is_zero_elt(ch.coweight_images[1]));
    CHECK(ch.coweight_images[0] == ch.coweight_images[2]);
    CHECK(!ch.group.is_zero_elt(ch.coweight_images[0]));
}

TEST_CASE("frobenius acts by eps q") {
    for (i64 n : {2, 3, 4, 5, 6}) {
        for (i64 q : {2, 3, 4, 5, 9}) {
            for (bool tw : {false, true}) {
                center_data c = mk(n, 1, q, tw);
                for (const ab_elt& e : c.group.elements())
                    CHECK(c.frobenius.apply(e) == c.group.scale(tw ? -q : q, e));
            }
        }
    }
    for (bool tw : {false, true}) {
        center_data c = mk(6, 2, 5, tw);
        for (const ab_elt& e : c.group.elements())
            CHECK(c.frobenius.apply(e) == c.group.scale(tw ? -5 : 5, e));
    }
}

TEST_CASE("levi kernels") {
    center_data c6 = mk(6, 1, 7);
    CHECK(levi_kernel(c6, {1, 3, 5}).group.order() == 3);
    CHECK(levi_kernel(c6, {1, 2, 4, 5}).group.order() == 2);
    CHECK(levi_kernel(c6, all_labels(6)).group.order() == 1);
    CHECK(levi_kernel(c6, {}).group.order() == 6);
    CHECK(levi_kernel(c6, {1}).group.order() == 6);
    CHECK(levi_kernel(c6, {2, 3, 4, 5}).group.order() == 6);

    center_data c4 = mk(4, 1, 3);
    CHECK(levi_kernel(c4, {1}).group.order() == 4);
    CHECK(levi_kernel(c4, {2}).group.order() == 4);
    CHECK(levi_kernel(c4, {1, 3}).group.order() == 2);
    CHECK(levi_kernel(c4, {1, 2, 3}).group.order() == 1);

    center_data ch = mk(4, 2, 3);
    CHECK(levi_kernel(ch, {2}).group.order() == 2);
    CHECK(levi_kernel(ch, {1, 3}).group.order() == 1);

    CHECK_THROWS_AS(levi_kernel(c4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(levi_kernel(c4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(levi_kernel(c4, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(levi_kernel(c4, {1, 1}), std::invalid_argument);
}

TEST_CASE("kernel identities over all standard levis") {
    for (i64 n : {4, 5, 6}) {
        auto [rd, fr] = build_group(n, 1, 7, false);
        center_data c = center_group(rd, fr);
        i64 subsets = i64(1) << (n - 1);
        std::vector<std::set<ab_elt>> ker((size_t)subsets);
        for (i64 m = 0; m < subsets; ++m)
            ker[(size_t)m] = sub_set(c.group, levi_kernel(c, from_mask(n, m)));

        for (i64 a = 0; a < subsets; ++a) {
            for (i64 b = 0; b < subsets; ++b) {
                std::set<ab_elt> prod;
                for (const ab_elt& x : ker[(size_t)a])
                    for (const ab_elt& y : ker[(size_t)b]) prod.insert(c.group.add(x, y));
                CHECK(prod == ker[(size_t)(a & b)]);
            }
        }

        for (i64 m = 0; m < subsets; ++m) {
            levi_label I = from_mask(n, m);
            levi_label J = self_opposed_closure(rd, I);
            CHECK(ker[(size_t)m] == sub_set(c.group, levi_kernel(c, J)));
        }
    }
}

TEST_CASE("self opposed closure") {
    auto [rd4, fr4] = build_group(4, 1, 3, false);
    CHECK(self_opposed_closure(rd4, {}) == levi_label{});
    CHECK(self_opposed_closure(rd4, {1}) == levi_label{});
    CHECK(self_opposed_closure(rd4, {3}) == levi_label{});
    CHECK(self_opposed_closure(rd4, {2}) == levi_label{});
    CHECK(self_opposed_closure(rd4, {1, 3}) == levi_label{1, 3});
    CHECK(self_opposed_closure(rd4, {1, 2, 3}) == levi_label{1, 2, 3});

    auto [rd5, fr5] = build_group(5, 1, 3, false);
    CHECK(self_opposed_closure(rd5, {2, 3}) == levi_label{});
    CHECK(self_opposed_closure(rd5, {1, 2, 3, 4}) == levi_label{1, 2, 3, 4});

    auto [rd6, fr6] = build_group(6, 1, 7, false);
    CHECK(self_opposed_closure(rd6, {1, 3, 5}) == levi_label{1, 3, 5});
    CHECK(self_opposed_closure(rd6, {1, 2, 4, 5}) == levi_label{1, 2, 4, 5});
    CHECK(self_opposed_closure(rd6, {1, 2}) == levi_label{});
    CHECK(self_opposed_closure(rd6, {2, 4}) == levi_label{});

    CHECK_THROWS_AS(self_opposed_closure(rd4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(self_opposed_closure(rd4, {1, 1}), std::invalid_argument);
    auto [rd12, fr12] = build_group(12, 1, 5, false);
    CHECK_THROWS_AS(self_opposed_closure(rd12, {1}), std::invalid_argument);
}

TEST_CASE("affine diagram rotations") {
    center_data c4 = mk(4, 1, 3);
    ab_elt g = c4.coweight_images[0];
    CHECK(affine_center_iso(c4, c4.group.zero()) == std::vector<i64>{0, 1, 2, 3});
    CHECK(affine_center_iso(c4, g) == std::vector<i64>{3, 0, 1, 2});
    CHECK(affine_center_iso(c4, c4.group.scale(2, g)) == std::vector<i64>{2, 3, 0, 1});
    CHECK(affine_center_iso(c4, c4.group.scale(3, g)) == std::vector<i64>{1, 2, 3, 0});
    CHECK(node_image(affine_center_iso(c4, c4.group.scale(2, g)), {1, 3}) == std::set<i64>{1, 3});

    // full group law and injectivity, split and twisted
    for (auto [n, q, tw] : std::vector<std::tuple<i64, i64, bool>>{
             {4, 3, false}, {5, 2, false}, {5, 2, true}, {6, 7, false}, {7, 2, false}}) {
        center_data c = mk(n, 1, q, tw);
        std::set<std::vector<i64>> seen;
        for (const ab_elt& z : c.group.elements()) {
            std::vector<i64> pz = affine_center_iso(c, z);
            seen.insert(pz);
            std::vector<i64> sorted = pz;
            std::sort(sorted.begin(), sorted.end());
            for (i64 j = 0; j < n; ++j) CHECK(sorted[(size_t)j] == j);
            for (const ab_elt& w : c.group.elements()) {
                std::vector<i64> pw = affine_center_iso(c, w);
                std::vector<i64> pzw = affine_center_iso(c, c.group.add(z, w));
                for (i64 j = 0; j < n; ++j)
                    CHECK(pzw[(size_t)j] == pz[(size_t)pw[(size_t)j]]);
            }
        }
        CHECK((i64)seen.size() == c.group.order());
    }

    CHECK_THROWS_AS(affine_center_iso(mk(4, 1, 2), ab_elt{}), std::invalid_argument);
    CHECK_THROWS_AS(affine_center_iso(mk(3, 1, 3), ab_elt{}), std::invalid_argument);
    center_data ch = mk(4, 2, 3);
    CHECK_THROWS_AS(affine_center_iso(ch, ch.group.zero()), std::invalid_argument);
    CHECK_THROWS_AS(affine_center_iso(c4, ab_elt{0, 0}), std::invalid_argument);
}

TEST_CASE("kernels match affine stabilizers") {
    for (i64 n : {2, 3, 4, 5, 6}) {
        auto [rd, fr] = build_group(n, 1, 7, false);
        center_data c = center_group(rd, fr);
        for (i64 m = 0; m < (i64(1) << (n - 1)); ++m) {
            levi_label I = from_mask(n, m);
            if (self_opposed_closure(rd, I) != I) continue;
            std::set<ab_elt> ker = sub_set(c.group, levi_kernel(c, I));
            std::set<ab_elt> stab;
            std::set<i64> nodes(I.begin(), I.end());
            for (const ab_elt& z : c.group.elements())
                if (node_image(affine_center_iso(c, z), I) == nodes) stab.insert(z);
            CHECK(ker == stab);
        }
    }
}

TEST_CASE("cuspidal characters") {
    for (auto [n, q] : std::vector<std::pair<i64, i64>>{{2, 3}, {3, 2}, {4, 3}, {5, 2}, {6, 7}}) {
        center_data c = mk(n, 1, q);
        i64 phi = 0;
        for (i64 k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++phi;
        cuspidal_info info = cuspidal_data(c, build_group(n, 1, q, false).first);
        CHECK((i64)info.chars.size() == phi);
        for (const ab_char& zeta : info.chars)
            for (const ab_elt& e : c.group.elements())
                CHECK(zeta.in_kernel(e) == c.group.is_zero_elt(e));
    }

    auto [rd, fr] = build_group(4, 1, 2, false);
    CHECK(cuspidal_data(center_group(rd, fr), rd).chars.empty());
    auto [rd6, fr6] = build_group(6, 1, 2, false);
    CHECK(cuspidal_data(center_group(rd6, fr6), rd6).chars.empty());
    auto [rdh, frh] = build_group(4, 2, 3, false);
    CHECK(cuspidal_data(center_group(rdh, frh), rdh).chars.empty());
}

TEST_CASE("minimal levis per central subgroup") {
    auto [rd6, fr6] = build_group(6, 1, 7, false);
    cuspidal_info i6 = cuspidal_data(center_group(rd6, fr6), rd6);
    std::map<i64, levi_label> want6 = {
        {1, {1, 2, 3, 4, 5}}, {2, {1, 2, 4, 5}}, {3, {1, 3, 5}}, {6, {}}};
    CHECK(i6.min_levi == want6);

    auto [rd62, fr62] = build_group(6, 1, 2, false);
    cuspidal_info i62 = cuspidal_data(center_group(rd62, fr62), rd62);
    std::map<i64, levi_label> want62 = {{1, {1, 2, 4, 5}}, {3, {}}};
    CHECK(i62.min_levi == want62);

    auto [rd4, fr4] = build_group(4, 1, 3, false);
    cuspidal_info i4 = cuspidal_data(center_group(rd4, fr4), rd4);
    std::map<i64, levi_label> want4 = {{1, {1, 2, 3}}, {2, {1, 3}}, {4, {}}};
    CHECK(i4.min_levi == want4);

    auto [rd2, fr2] = build_group(2, 1, 3, false);
    cuspidal_info i2 = cuspidal_data(center_group(rd2, fr2), rd2);
    std::map<i64, levi_label> want2 = {{1, {1}}, {2, {}}};
    CHECK(i2.min_levi == want2);

    auto [rd42, fr42] = build_group(4, 1, 2, false);
    cuspidal_info i42 = cuspidal_data(center_group(rd42, fr42), rd42);
    std::map<i64, levi_label> want42 = {{1, {}}};
    CHECK(i42.min_levi == want42);

    auto [rdu, fru] = build_group(3, 1, 2, true);
    cuspidal_info iu = cuspidal_data(center_group(rdu, fru), rdu);
    std::map<i64, levi_label> wantu = {{1, {1, 2}}, {3, {}}};
    CHECK(iu.min_levi == wantu);

    auto [rdh, frh] = build_group(4, 2, 3, false);
    cuspidal_info ih = cuspidal_data(center_group(rdh, frh), rdh);
    std::map<i64, levi_label> wanth = {{1, {1, 3}}, {2, {}}};
    CHECK(ih.min_levi == wanth);
}

TEST_CASE("h1 of frobenius on the center") {
    CHECK(h1_center(mk(2, 1, 3)).factors == std::vector<i64>{2});
    CHECK(h1_center(mk(2, 1, 4)).is_trivial());
    CHECK(h1_center(mk(3, 1, 2, true)).factors == std::vector<i64>{3});
    CHECK(h1_center(mk(3, 1, 4, true)).is_trivial());
    CHECK(h1_center(mk(4, 1, 5)).factors == std::vector<i64>{4});
    CHECK(h1_center(mk(4, 1, 3)).factors == std::vector<i64>{2});

    for (i64 n : {2, 3, 4, 5, 6}) {
        for (i64 d : {1, 2, 3}) {
            if (n % d != 0) continue;
            for (i64 q : {2, 3, 4, 5, 7, 9}) {
                for (bool tw : {false, true}) {
                    center_data c = mk(n, d, q, tw);
                    i64 m = c.group.order();
                    i64 want = std::gcd(m, tw ? q + 1 : q - 1);
                    CHECK(h1_center(c).order() == want);
                    CHECK(endo_h1(c.frobenius).kernel.order() == want);
                }
            }
        }
    }
}
