#pragma once

#include "gv/count.hpp"
#include "gv/params.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gv {

enum class FormulaId {
    GV,          // q^n / V_q(n,d-1)
    VARSHAMOV,   // 2^(n-1) / 2^floor(log2 V(n-1,d-2))
    ELIA,
    TOLHUIZEN,
    FABRIS1,
    FABRIS2,
    BGS,         // best b in the Varshamov/Elia family
    SPARSE_GV,   // GV improved by the local-sparsity log factor
    QGV,
    SPARSE_QGV,
    LEV_CW,      // constant-weight Gilbert bound
    SPARSE_CW,
    NDG_COLORING
};

std::string_view formula_name(FormulaId id);

// A lower bound on the code size: exact rational when the formula is
// rational, always a log2-domain value, and the clamped integer floor.
struct BoundResult {
    FormulaId formula;
    CodeParams params;
    std::optional<Rational> exact;
    LogValue log2_value{};
    Count floor_int;  // floor(value), clamped to >= 0
    std::map<std::string, std::string> aux;
};

BoundResult gv_bound(const CodeParams& p);
BoundResult varshamov_bound(const CodeParams& p);
BoundResult elia_bound(const CodeParams& p);
BoundResult tolhuizen_bound(const CodeParams& p);
BoundResult fabris1_bound(const CodeParams& p);
BoundResult fabris2_bound(const CodeParams& p);
std::pair<BoundResult, BoundResult> fabris_bounds(const CodeParams& p);
BoundResult bgs_bound(const CodeParams& p, std::optional<int> b_max = std::nullopt);

// (2^n / V(n,d-1)) * (log2 V(n,d-1) - 0.5 log2 e) / 10, where e is the
// per-vertex triangle count edge_third(n, d-1). When the sphere graph is
// edgeless the triangle-free form (log2 Delta)/8 is used instead, flagged
// in aux["mode"].
BoundResult sparse_gv_bound(const CodeParams& p);
BoundResult sparse_gv_qary_bound(const CodeParams& p);

BoundResult levenshtein_cw_bound(const CodeParams& p);
BoundResult sparse_cw_bound(const CodeParams& p);

// Coset-coloring upper bound on the distance-d chromatic number of the
// n-cube: 2^(floor(log2 V(n-1,d-1)) + 1).
Count ndg_coloring_bound(int n, int d);

struct TableRange {
    int n_lo = 1, n_hi = 1;
    int d_lo = 1, d_hi = 1;
    std::vector<int> qs{2};
    std::vector<int> ws{};  // empty: unrestricted-weight rows only
};

struct TableOptions {
    std::size_t max_rows = 200000;
};

struct BoundTable {
    std::vector<BoundResult> rows;
    bool truncated = false;
};

// Every applicable bound per (n, d[, q, w]) instance. The winning row of
// each instance carries aux["winner"]="1" and aux["best_floor"] (the row
// maximum clamped to >= 1). Row order is lexicographic in (n,d,q,w,formula).
BoundTable best_bound_table(const TableRange& range, const TableOptions& opts = {});

// header: n,d,q,w,formula,exact_num,exact_den,log2,floor,aux
void write_table_csv(const BoundTable& table, std::ostream& os);
void write_table_json(const BoundTable& table, std::ostream& os);

}  // namespace gv
