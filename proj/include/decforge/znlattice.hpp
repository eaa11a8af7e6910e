#pragma once

#include <cstdint>
#include <vector>

namespace decforge {

// Dense integer matrices over Z, row-oriented.  Sizes here are tiny (the
// number of invariant factors of a group, at most ~20), so the classical
// elementary-operation algorithms are plenty.
using ZRow = std::vector<std::int64_t>;
using ZMat = std::vector<ZRow>;

// Canonical row-style Hermite normal form of the lattice spanned by the rows.
// Rows of the result are a basis: pivots positive, strictly increasing pivot
// columns, entries above each pivot reduced into [0, pivot).  Zero rows are
// dropped, so the result is unique for a given row lattice.
ZMat hnf_rows(ZMat m);

// Basis (as rows) of { x : x * a == 0 } over Z.
ZMat left_kernel(const ZMat& a);

// Smith invariant factors d1 | d2 | ... (ascending, nonnegative); zero
// entries (rank deficiency) are kept at the end.
std::vector<std::int64_t> smith_invariants(ZMat m);

// Membership of v in the row lattice of h, where h is in HNF.
bool hnf_contains(const ZMat& h, const ZRow& v);

// Solve x * h == v exactly over Z (h in HNF, full story required);
// returns false if no integral solution exists.
bool hnf_solve(const ZMat& h, const ZRow& v, ZRow& x);

} // namespace decforge
