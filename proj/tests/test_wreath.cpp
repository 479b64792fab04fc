#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "typea/wreath.hpp"

using namespace typea;

namespace {

partition pp(std::vector<i64> v) { return partition(std::move(v)); }

wreath_group w_s2wr2() { return wreath_group({{2, 2}}, fin_ab_group::cyclic(2), {{1, 0}}); }
wreath_group w_s3s3() { return wreath_group({{3, 2}}, fin_ab_group::cyclic(2), {{1, 0}}); }
wreath_group w_s2wr4() { return wreath_group({{2, 4}}, fin_ab_group::cyclic(4), {{1, 2, 3, 0}}); }
wreath_group w_klein() { return wreath_group({{2, 2}}, fin_ab_group({2, 2}), {{1, 0}, {1, 0}}); }
wreath_group w_mixed() { return wreath_group({{2, 2}, {3, 1}}, fin_ab_group::cyclic(2), {{1, 0, 2}}); }
wreath_group w_s3triv() { return wreath_group({{3, 1}}, fin_ab_group::trivial(), {}); }
wreath_group w_s3cube() { return wreath_group({{3, 3}}, fin_ab_group::cyclic(3), {{1, 2, 0}}); }

wreath_elt identity_elt(const wreath_group& w) {
    wreath_elt g;
    for (i64 k = 0; k < w.comp_count(); ++k) g.w.push_back(perm_identity(w.comp_degree(k)));
    g.a = w.a.zero();
    return g;
}

cyclotomic rat(i64 k) { return cyclotomic::from_rational(mpq_class((long)k)); }

/* class-weighted hermitian inner product of two value vectors */
cyclotomic brute_inner(const brute_wreath& bg, const std::vector<cyclotomic>& u,
                       const std::vector<cyclotomic>& v) {
    cyclotomic acc;
    for (i64 c = 0; c < bg.n_classes(); ++c)
        acc = acc + u[c] * v[c].conj() * mpq_class((long)bg.cls_size[c]);
    return acc.divided_by(mpq_class((long)bg.size()));
}

bool is_positive_integer(const cyclotomic& v) {
    mpq_class r;
    return v.is_rational(&r) && r.get_den() == 1 && r > 0;
}

i64 label_b(const std::vector<partition>& lam) {
    i64 b = 0;
    for (const partition& p : lam) b += b_invariant(p);
    return b;
}

}  // namespace

TEST_CASE("wreath group construction") {
    wreath_group w = w_s2wr2();
    CHECK(w.comp_count() == 2);
    CHECK(w.comp_degree(0) == 2);
    CHECK(w.base_order() == 4);
    CHECK(w.perm_of({0}) == index_perm{0, 1});
    CHECK(w.perm_of({1}) == index_perm{1, 0});
    CHECK(w.phi == index_perm{0, 1});

    wreath_group k = w_klein();
    CHECK(k.perm_of({1, 0}) == index_perm{1, 0});
    CHECK(k.perm_of({0, 1}) == index_perm{1, 0});
    CHECK(k.perm_of({1, 1}) == index_perm{0, 1});

    wreath_group m = w_mixed();
    CHECK(m.comp_count() == 3);
    CHECK(m.comp_degree(2) == 3);
    CHECK(m.base_order() == 24);

    CHECK_THROWS_AS(wreath_group({{2, 2}}, fin_ab_group::cyclic(2), {}), std::invalid_argument);
    CHECK_THROWS_AS(wreath_group({{2, 2}}, fin_ab_group::cyclic(2), {{0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(wreath_group({{2, 1}, {3, 1}}, fin_ab_group::cyclic(2), {{1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(wreath_group({{2, 3}}, fin_ab_group::cyclic(2), {{1, 2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        wreath_group({{2, 3}}, fin_ab_group({2, 2}), {{1, 0, 2}, {0, 2, 1}}),
        std::invalid_argument);
    CHECK_THROWS_AS(wreath_group({{0, 1}}, fin_ab_group::trivial(), {}), std::invalid_argument);
    CHECK_THROWS_AS(wreath_group({{2, 2}, {3, 1}}, fin_ab_group::cyclic(2), {{1, 0, 2}}, {2, 1, 0}),
                    std::invalid_argument);
    // stored outer twist
    wreath_group wp({{2, 2}}, fin_ab_group::trivial(), {}, {1, 0});
    CHECK(wp.phi == index_perm{1, 0});
}

TEST_CASE("projection along twisted cosets") {
    wreath_group w = w_s2wr2();
    wreath_elt g = identity_elt(w);
    g.a = {1};
    auto pr = pi_project(w, g);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].first == 0);
    CHECK(pr[0].second == perm_identity(2));
    CHECK(pi_class(w, g) == std::vector<partition>{pp({1, 1})});

    g.w[0] = {1, 0};
    CHECK(pi_class(w, g) == std::vector<partition>{pp({2})});

    // untwisted coset keeps the coordinates
    wreath_elt h = identity_elt(w);
    h.w[1] = {1, 0};
    auto pr0 = pi_project(w, h);
    REQUIRE(pr0.size() == 2);
    CHECK(pr0[0] == std::pair<i64, perm>{0, {0, 1}});
    CHECK(pr0[1] == std::pair<i64, perm>{1, {1, 0}});

    wreath_group w3 = w_s3s3();
    wreath_elt t = identity_elt(w3);
    t.a = {1};
    t.w[0] = {1, 2, 0};
    CHECK(pi_class(w3, t) == std::vector<partition>{pp({3})});

    // conjugation inside G° <a> preserves the projected class, and the class
    // count matches the fixed subgroup
    for (const wreath_group& grp : {w_s2wr2(), w_s2wr4(), w_mixed()}) {
        brute_wreath bg(grp);
        for (const ab_elt& a : grp.a.elements()) {
            std::set<ab_elt> cyc_a;
            ab_elt cur = grp.a.zero();
            do {
                cyc_a.insert(cur);
                cur = grp.a.add(cur, a);
            } while (!cyc_a.count(cur));
            std::vector<i64> coset, sub;
            for (i64 i = 0; i < bg.size(); ++i) {
                if (bg.elts[i].a == a) coset.push_back(i);
                if (cyc_a.count(bg.elts[i].a)) sub.push_back(i);
            }
            std::set<std::vector<partition>> values;
            std::map<i64, i64> orbit_of;
            i64 orbits = 0;
            for (i64 i : coset) {
                values.insert(pi_class(grp, bg.elts[i]));
                if (orbit_of.count(i)) continue;
                ++orbits;
                for (i64 x : sub) {
                    wreath_elt y =
                        bg.mul(bg.mul(bg.elts[x], bg.elts[i]), bg.inv(bg.elts[x]));
                    orbit_of[bg.idx(y)] = orbits;
                    CHECK(pi_class(grp, y) == pi_class(grp, bg.elts[i]));
                }
            }
            CHECK((i64)values.size() == orbits);
            CHECK(values.size() == fixed_subgroup_classes(grp, a).size());
        }
    }
}

TEST_CASE("canonical extension values") {
    wreath_group w3 = w_s3s3();
    std::vector<partition> lam{pp({2, 1}), pp({2, 1})};
    wreath_elt g = identity_elt(w3);
    g.a = {1};
    CHECK(canonical_extension_value(w3, lam, g) == 2);
    g.w[0] = {1, 2, 0};
    CHECK(canonical_extension_value(w3, lam, g) == -1);
    g.w[0] = {1, 0, 2};
    CHECK(canonical_extension_value(w3, lam, g) == 0);

    // unstable label rejected on the twisted coset, fine on the trivial one
    std::vector<partition> mixed{pp({3}), pp({2, 1})};
    CHECK_THROWS_AS(canonical_extension_value(w3, mixed, g), std::invalid_argument);
    g.a = {0};
    CHECK(canonical_extension_value(w3, mixed, g) ==
          char_value(pp({3}), perm_cycle_type(g.w[0])) *
              char_value(pp({2, 1}), perm_cycle_type(g.w[1])));

    // trivial A: the extension is the character itself
    wreath_group ws = w_s3triv();
    brute_wreath bs(ws);
    for (const wreath_elt& e : bs.elts)
        CHECK(canonical_extension_value(ws, {pp({2, 1})}, e) ==
              char_value(pp({2, 1}), perm_cycle_type(e.w[0])));
}

TEST_CASE("canonical extension is the unique positive one") {
    // stabilizer-full labels checked inside the full group, a proper stabilizer
    // checked inside the subgroup it generates
    struct job {
        wreath_group grp;
        std::vector<partition> lam;
    };
    std::vector<job> jobs;
    for (const std::vector<i64>& q : {std::vector<i64>{2}, std::vector<i64>{1, 1}}) {
        jobs.push_back({w_s2wr2(), {pp(q), pp(q)}});
        jobs.push_back({w_klein(), {pp(q), pp(q)}});
    }
    for (const std::vector<i64>& q : {std::vector<i64>{3}, std::vector<i64>{2, 1},
                                      std::vector<i64>{1, 1, 1}})
        jobs.push_back({w_s3s3(), {pp(q), pp(q)}});
    {
        // ABAB label in S2 wr C4: stabilizer is the rotation square
        wreath_group big = w_s2wr4();
        subgroup_data stab = subgroup_generated(big.a, {{2}});
        REQUIRE(stab.group == fin_ab_group::cyclic(2));
        wreath_group sub({{2, 4}}, stab.group, {big.perm_of(stab.gens[0])});
        jobs.push_back({sub, {pp({2}), pp({1, 1}), pp({2}), pp({1, 1})}});
    }
    {
        // off-diagonal Klein label: the stabilizer acts trivially
        wreath_group k = w_klein();
        subgroup_data stab = subgroup_generated(k.a, {{1, 1}});
        wreath_group sub({{2, 2}}, stab.group, {k.perm_of(stab.gens[0])});
        jobs.push_back({sub, {pp({2}), pp({1, 1})}});
    }

    for (const job& jb : jobs) {
        brute_wreath bg(jb.grp);
        std::vector<i64> ext(bg.size());
        for (i64 i = 0; i < bg.size(); ++i)
            ext[i] = canonical_extension_value(jb.grp, jb.lam, bg.elts[i]);
        // class function
        for (i64 i = 0; i < bg.size(); ++i) CHECK(ext[i] == ext[bg.cls_rep[bg.cls_of[i]]]);
        // restriction to G° and unit norm
        mpq_class norm = 0;
        for (i64 i = 0; i < bg.size(); ++i) {
            norm += mpq_class((long)(ext[i] * ext[i]));
            if (bg.w.a.is_zero_elt(bg.elts[i].a)) {
                i64 prod = 1;
                for (i64 k = 0; k < bg.w.comp_count(); ++k)
                    prod *= char_value(jb.lam[k], perm_cycle_type(bg.elts[i].w[k]));
                CHECK(ext[i] == prod);
            }
        }
        CHECK(norm == mpq_class((long)bg.size()));
        // exactly one linear twist is positive on the whole acting group
        i64 positive = 0;
        for (const ab_char& xi : all_chars(bg.w.a)) {
            bool all_pos = true;
            for (const ab_elt& alpha : bg.w.a.elements()) {
                wreath_elt pure = identity_elt(bg.w);
                pure.a = alpha;
                cyclotomic v =
                    xi.eval(alpha) * mpq_class((long)canonical_extension_value(
                                         bg.w, jb.lam, pure));
                if (!is_positive_integer(v)) all_pos = false;
            }
            if (all_pos) ++positive;
        }
        CHECK(positive == 1);
    }
}

TEST_CASE("irreducible characters of semidirect products") {
    auto degrees_of = [](const std::vector<wreath_char>& cs) {
        std::vector<i64> d;
        for (const auto& c : cs) d.push_back(c.degree);
        std::sort(d.begin(), d.end());
        return d;
    };

    std::vector<wreath_char> c22 = irr_semidirect(w_s2wr2());
    CHECK(c22.size() == 5);
    CHECK(degrees_of(c22) == std::vector<i64>{1, 1, 1, 1, 2});

    std::vector<wreath_char> c33 = irr_semidirect(w_s3s3());
    CHECK(c33.size() == 9);
    CHECK(degrees_of(c33) == std::vector<i64>{1, 1, 1, 1, 2, 4, 4, 4, 4});

    CHECK(irr_semidirect(w_s3triv()).size() == 3);
    CHECK(irr_semidirect(w_mixed()).size() == 15);
    CHECK(irr_semidirect(w_s2wr4()).size() == 13);
    CHECK(irr_semidirect(w_klein()).size() == 10);
    CHECK(irr_semidirect(w_s3cube()).size() == 17);

    for (const wreath_group& grp :
         {w_s2wr2(), w_s3s3(), w_s3triv(), w_mixed(), w_s2wr4(), w_klein(), w_s3cube()}) {
        std::vector<wreath_char> cs = irr_semidirect(grp);
        i64 sq = 0;
        for (const wreath_char& c : cs) {
            sq += c.degree * c.degree;
            // representative is least in its orbit, degree consistent
            for (const ab_elt& e : grp.a.elements())
                CHECK(!(act_on_labels(grp.perm_of(e), c.lambdas) < c.lambdas));
            CHECK(c.degree ==
                  (grp.a.order() / c.stab.group.order()) * label_dimension(grp, c.lambdas));
        }
        CHECK(sq == grp.base_order() * grp.a.order());
        // one irreducible per conjugacy class
        if (grp.base_order() * grp.a.order() <= 2000)
            CHECK((i64)cs.size() == brute_wreath(grp).n_classes());
    }

    // full brute orthonormality of the induced irreducibles
    for (const wreath_group& grp : {w_s2wr2(), w_klein(), w_s2wr4(), w_s3s3()}) {
        brute_wreath bg(grp);
        std::vector<wreath_char> cs = irr_semidirect(grp);
        std::vector<std::vector<cyclotomic>> vals;
        for (const wreath_char& c : cs) vals.push_back(induced_char_values(bg, c));
        i64 id_class = bg.cls_of[bg.idx(identity_elt(grp))];
        for (size_t i = 0; i < cs.size(); ++i) {
            CHECK(vals[i][id_class] == rat(cs[i].degree));
            for (size_t j = i; j < cs.size(); ++j)
                CHECK(brute_inner(bg, vals[i], vals[j]) == rat(i == j ? 1 : 0));
        }
    }
}

TEST_CASE("twisted induction") {
    // H° = G°: nothing happens
    {
        wreath_group w3 = w_s3s3();
        std::map<std::vector<std::vector<partition>>, cyclotomic> f;
        f[{{pp({1, 1, 1})}}] = rat(1);
        f[{{pp({2, 1})}}] = cyclotomic::root_of_unity(3, 1);
        f[{{pp({3})}}] = rat(-2);
        auto out = twisted_induce(w3, {1}, {pp({3}), pp({3})}, f);
        REQUIRE(out.size() == 3);
        for (const auto& [key, val] : f) CHECK(out.at({key[0][0]}) == val);
    }

    // trivial twist is ordinary induction from a Young subgroup
    {
        wreath_group ws = w_s3triv();
        std::map<std::vector<std::vector<partition>>, cyclotomic> f;
        for (const partition& p2 : all_partitions(2)) f[{{p2, pp({1})}}] = rat(1);
        auto out = twisted_induce(ws, ws.a.zero(), {pp({2, 1})}, f);
        auto dec = young_induction(pp({2, 1}));
        for (const partition& tau : all_partitions(3)) {
            i64 expect = 0;
            for (const auto& [mu, beta] : dec) expect += beta * char_value(mu, tau);
            CHECK(out.at({tau}) == rat(expect));
        }
        // induction from the trivial Young subgroup is |S_3|/z weighted
        std::map<std::vector<std::vector<partition>>, cyclotomic> f1;
        f1[{{pp({1}), pp({1}), pp({1})}}] = rat(1);
        auto reg = twisted_induce(ws, ws.a.zero(), {pp({1, 1, 1})}, f1);
        CHECK(reg.at({pp({1, 1, 1})}) == rat(6));
        CHECK(reg.at({pp({2, 1})}) == rat(0));
        CHECK(reg.at({pp({3})}) == rat(0));
    }

    // against the explicit coset-sum induction across the swap twist
    {
        wreath_group w3 = w_s3s3();
        brute_wreath bg(w3);
        std::vector<partition> young{pp({2, 1}), pp({2, 1})};
        auto in_y21 = [](const perm& u) { return u[2] == 2; };

        std::map<std::vector<std::vector<partition>>, cyclotomic> f1, f2;
        f1[{{pp({2}), pp({1})}}] = rat(1);
        f1[{{pp({1, 1}), pp({1})}}] = rat(1);
        f2[{{pp({2}), pp({1})}}] = rat(-1);
        f2[{{pp({1, 1}), pp({1})}}] = rat(1);
        for (const auto& f : {f1, f2}) {
            auto out = twisted_induce(w3, {1}, young, f);
            for (i64 gi = 0; gi < bg.size(); ++gi) {
                if (!(bg.elts[gi].a == ab_elt{1})) continue;
                const wreath_elt& g = bg.elts[gi];
                cyclotomic acc;
                for (const wreath_elt& x : bg.elts) {
                    if (!bg.w.a.is_zero_elt(x.a)) continue;
                    wreath_elt h = bg.mul(bg.mul(bg.inv(x), g), x);
                    if (!in_y21(h.w[0]) || !in_y21(h.w[1])) continue;
                    perm u = perm_mul(h.w[0], h.w[1]);
                    std::vector<std::vector<partition>> key{
                        {u[0] == 0 ? pp({1, 1}) : pp({2}), pp({1})}};
                    auto it = f.find(key);
                    if (it != f.end()) acc = acc + it->second;
                }
                acc = acc.divided_by(mpq_class(4));
                CHECK(acc == out.at(pi_class(w3, g)));
            }
        }

        CHECK_THROWS_AS(twisted_induce(w3, {1}, {pp({2, 1}), pp({3})}, f1),
                        std::invalid_argument);
        CHECK_THROWS_AS(twisted_induce(w3, {1}, {pp({2, 1}), pp({2, 2})}, f1),
                        std::invalid_argument);
    }
}

TEST_CASE("integral combinations of irreducibles") {
    brute_wreath bg(w_s2wr2());
    std::vector<wreath_char> cs = irr_semidirect(bg.w);
    std::vector<std::vector<cyclotomic>> vals;
    for (const wreath_char& c : cs) vals.push_back(induced_char_values(bg, c));

    for (const auto& v : vals) CHECK(integrality_test(bg, v));

    std::vector<cyclotomic> sum(bg.n_classes());
    for (i64 c = 0; c < bg.n_classes(); ++c) sum[c] = vals[0][c] + vals[1][c] - vals[2][c];
    CHECK(integrality_test(bg, sum));

    std::vector<cyclotomic> half(bg.n_classes());
    for (i64 c = 0; c < bg.n_classes(); ++c)
        half[c] = cyclotomic::from_rational(mpq_class(1, 2));
    CHECK_FALSE(integrality_test(bg, half));

    std::vector<cyclotomic> third(bg.n_classes(), cyclotomic::from_rational(mpq_class(1, 3)));
    CHECK_FALSE(integrality_test(bg, third));

    std::vector<cyclotomic> twisted(bg.n_classes(), cyclotomic::root_of_unity(4, 1));
    CHECK_FALSE(integrality_test(bg, twisted));
}

TEST_CASE("triangularity of the young induced basis") {
    for (const wreath_group& grp : {w_s2wr2(), w_klein(), w_s2wr4()}) {
        brute_wreath bg(grp);
        std::vector<wreath_char> cs = irr_semidirect(grp);
        std::vector<std::vector<cyclotomic>> vals;
        for (const wreath_char& c : cs) vals.push_back(induced_char_values(bg, c));

        bool any_nonzero = false;
        for (size_t i = 0; i < cs.size(); ++i) {
            std::vector<cyclotomic> pi = pi_induced_values(bg, cs[i]);
            std::vector<cyclotomic> diff(bg.n_classes());
            for (i64 c = 0; c < bg.n_classes(); ++c) diff[c] = pi[c] - vals[i][c];
            std::vector<cyclotomic> recon(bg.n_classes());
            for (size_t j = 0; j < cs.size(); ++j) {
                cyclotomic coeff = brute_inner(bg, diff, vals[j]);
                mpq_class r;
                REQUIRE(coeff.is_rational(&r));
                REQUIRE(r.get_den() == 1);
                CHECK(r >= 0);
                if (r != 0) {
                    any_nonzero = true;
                    CHECK(label_b(cs[j].lambdas) < label_b(cs[i].lambdas));
                    for (i64 c = 0; c < bg.n_classes(); ++c)
                        recon[c] = recon[c] + vals[j][c] * r;
                }
            }
            for (i64 c = 0; c < bg.n_classes(); ++c) CHECK(recon[c] == diff[c]);
            if (grp.comp_count() == 2) CHECK(integrality_test(bg, diff));
        }
        CHECK(any_nonzero);
    }
}

TEST_CASE("induction from a twisted coset sums over linear twists") {
    // full stabilizer inside S2 wr C2
    {
        wreath_group grp = w_s2wr2();
        brute_wreath bg(grp);
        std::vector<partition> lam{pp({1, 1}), pp({1, 1})};
        ab_elt a{1};
        std::vector<cyclotomic> lhs(bg.n_classes());
        for (i64 c = 0; c < bg.n_classes(); ++c) {
            const wreath_elt& g = bg.elts[bg.cls_rep[c]];
            cyclotomic acc;
            for (const wreath_elt& x : bg.elts) {
                wreath_elt h = bg.mul(bg.mul(bg.inv(x), g), x);
                if (!(h.a == a)) continue;
                acc = acc + rat(canonical_extension_value(grp, lam, h));
            }
            lhs[c] = acc.divided_by(mpq_class((long)grp.base_order()));
        }
        std::vector<cyclotomic> rhs(bg.n_classes());
        for (const wreath_char& wc : irr_semidirect(grp)) {
            if (!(wc.lambdas == lam)) continue;
            ab_elt co = subgroup_coords(grp.a, wc.stab, a);
            std::vector<cyclotomic> vals = induced_char_values(bg, wc);
            for (i64 c = 0; c < bg.n_classes(); ++c)
                rhs[c] = rhs[c] + wc.xi.eval(co).conj() * vals[c];
        }
        for (i64 c = 0; c < bg.n_classes(); ++c) CHECK(lhs[c] == rhs[c]);
    }
    // proper stabilizer inside S2 wr C4, twist by the rotation square
    {
        wreath_group grp = w_s2wr4();
        brute_wreath bg(grp);
        std::vector<partition> lam{pp({1, 1}), pp({2}), pp({1, 1}), pp({2})};
        ab_elt a{2};
        std::vector<cyclotomic> lhs(bg.n_classes());
        for (i64 c = 0; c < bg.n_classes(); ++c) {
            const wreath_elt& g = bg.elts[bg.cls_rep[c]];
            cyclotomic acc;
            for (const wreath_elt& x : bg.elts) {
                wreath_elt h = bg.mul(bg.mul(bg.inv(x), g), x);
                if (!(h.a == a)) continue;
                acc = acc + rat(canonical_extension_value(grp, lam, h));
            }
            lhs[c] = acc.divided_by(mpq_class((long)grp.base_order()));
        }
        std::vector<cyclotomic> rhs(bg.n_classes());
        i64 used = 0;
        for (const wreath_char& wc : irr_semidirect(grp)) {
            if (!(wc.lambdas == lam)) continue;
            ++used;
            ab_elt co = subgroup_coords(grp.a, wc.stab, a);
            std::vector<cyclotomic> vals = induced_char_values(bg, wc);
            for (i64 c = 0; c < bg.n_classes(); ++c)
                rhs[c] = rhs[c] + wc.xi.eval(co).conj() * vals[c];
        }
        CHECK(used == 2);
        for (i64 c = 0; c < bg.n_classes(); ++c) CHECK(lhs[c] == rhs[c]);
    }
}

TEST_CASE("projection isometry") {
    wreath_group grp = w_s3s3();
    brute_wreath bg(grp);
    ab_elt a{1};
    // restrictions of canonical extensions form an orthonormal family on the coset
    std::vector<std::vector<partition>> labels;
    for (const partition& mu : all_partitions(3)) labels.push_back({mu, mu});
    for (size_t i = 0; i < labels.size(); ++i) {
        for (size_t j = 0; j < labels.size(); ++j) {
            cyclotomic acc;
            for (const wreath_elt& x : bg.elts) {
                if (!(x.a == a)) continue;
                acc = acc + rat(canonical_extension_value(grp, labels[i], x) *
                                canonical_extension_value(grp, labels[j], x));
            }
            CHECK(acc.divided_by(mpq_class((long)grp.base_order())) == rat(i == j ? 1 : 0));
        }
    }
    // pullback through the projection preserves inner products of class functions
    std::map<partition, cyclotomic> f, h;
    f[pp({1, 1, 1})] = rat(0);
    f[pp({2, 1})] = rat(1);
    f[pp({3})] = cyclotomic::root_of_unity(3, 1);
    h[pp({1, 1, 1})] = rat(2);
    h[pp({2, 1})] = rat(-1);
    h[pp({3})] = cyclotomic::root_of_unity(3, 2);
    cyclotomic coset_side, group_side;
    for (const wreath_elt& x : bg.elts) {
        if (!(x.a == a)) continue;
        partition t = pi_class(grp, x)[0];
        coset_side = coset_side + f.at(t) * h.at(t).conj();
    }
    coset_side = coset_side.divided_by(mpq_class((long)grp.base_order()));
    for (const partition& mu : all_partitions(3)) {
        mpq_class weight((long)class_size(mu), (long)factorial_i(3));
        weight.canonicalize();
        group_side = group_side + f.at(mu) * h.at(mu).conj() * weight;
    }
    CHECK(coset_side == group_side);
}

TEST_CASE("brute force size guard") {
    CHECK_THROWS_AS(brute_wreath(wreath_group({{3, 4}}, fin_ab_group::cyclic(2), {{1, 0, 2, 3}})),
                    std::overflow_error);
    CHECK_THROWS_AS(all_perms(9), std::invalid_argument);
    // group axioms spot checks on a mid-size example
    brute_wreath bg(w_s2wr4());
    CHECK(bg.size() == 64);
    CHECK((i64)bg.index.size() == 64);
    const wreath_elt &x = bg.elts[7], &y = bg.elts[23], &z = bg.elts[50];
    CHECK(bg.idx(bg.mul(bg.mul(x, y), z)) == bg.idx(bg.mul(x, bg.mul(y, z))));
    CHECK(bg.idx(bg.mul(x, bg.inv(x))) == bg.idx(identity_elt(bg.w)));
    CHECK(bg.idx(bg.mul(bg.inv(y), y)) == bg.idx(identity_elt(bg.w)));
    i64 total = 0;
    for (i64 s : bg.cls_size) total += s;
    CHECK(total == 64);
}
