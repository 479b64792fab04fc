#pragma once

#include <string>
#include <utility>
#include <vector>

#include "typea/cyclotomic.hpp"
#include "typea/matgroup.hpp"

namespace typea {

/* exact character table over Z[zeta_exp(G)] by the Burnside class algebra
   method mod a prime l = 1 (mod exp), l > 2 sqrt |G|, lifted through the
   power map; rows sorted by degree then by the mod-l value vector */
struct oracle_table {
    i64 group_order = 0;
    i64 exponent = 1;
    i64 dixon_prime = 0;
    std::vector<int> reps;        // element indices, one per class
    std::vector<i64> sizes;
    std::vector<i64> rep_orders;
    std::vector<int> inv_class;   // class of the inverse
    std::vector<i64> degrees;
    std::vector<std::vector<cyclotomic>> rows;          // rows[chi][class]
    std::vector<int> central;                           // classes of size 1
    std::vector<std::vector<cyclotomic>> central_tags;  // chi(z)/chi(1) on those
};

oracle_table dixon_table(const mat_group& g);

bool row_orthogonality(const oracle_table& t);
bool column_orthogonality(const oracle_table& t);

/* one Gelfand-Graev character per T0^F-orbit of regular linear characters
   of U0^F, decomposed against the oracle table */
struct gg_char {
    std::vector<cyclotomic> values;                  // per class
    std::vector<std::pair<int, i64>> constituents;   // (row, multiplicity)
};

struct gg_report {
    mat_group group;
    oracle_table table;
    std::vector<int> u0, u1;      // element indices, ascending
    i64 regular_count = 0;        // regular linear characters of U0^F
    i64 regular_unipotent_classes = 0;
    std::vector<gg_char> gammas;  // one per orbit
};

gg_report gelfand_graev_oracle(i64 n, i64 q, bool twisted);

/* serialized layout: {"format","version","descriptor","order","exponent","prime",
   "classes":[{"size","order","rep":[[coeffs..]..]}..],
   "characters":[[{"n","c":[[exp,"num"|"num/den"]..]}..]..]} */
std::string table_json_text(const mat_group& g, const oracle_table& t);
oracle_table table_of_json_text(const std::string& text, const mat_group& g);
void save_table(const std::string& path, const mat_group& g, const oracle_table& t);
bool load_table(const std::string& path, const mat_group& g, oracle_table* out);

}  // namespace typea
