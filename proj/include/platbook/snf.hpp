#pragma once

#include <vector>

#include "platbook/intmat.hpp"

namespace platbook {

// Smith normal form with a certificate: left * original * right = diagonal,
// both transforms products of elementary integer operations (so unimodular).
// All arithmetic is exact; overflow raises errc::overflow rather than wrap.
struct SnfResult {
    IntMatrix diagonal;
    IntMatrix left;
    IntMatrix right;

    // diagonal entries d_1 | d_2 | ..., non-negative, zeros trailing
    std::vector<long long> factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

// Re-checks the claim from scratch: the product identity holds, both
// transforms have determinant +-1, and the diagonal is a non-negative
// divisibility chain.  Everything a caller needs to trust factors().
bool certificate_ok(const IntMatrix& original, const SnfResult& r);

} // namespace platbook
