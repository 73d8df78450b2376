/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <vector>

#include "transcrit/bigint.hpp"
#include "transcrit/interval.hpp"

namespace transcrit {

// Primitive integer polynomial c0 + c1·X + … + ck·X^k with ck > 0.
struct IntPolynomial {
    std::vector<BigInt> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    const BigInt& leading() const { return c.back(); }
    bool operator==(const IntPolynomial& o) const { return c == o.c; }

    // Strips leading zeros, divides by the content, flips sign so ck > 0.
    static IntPolynomial normalized(std::vector<BigInt> coeffs);

    BigRat eval(const BigRat& x) const;
    IntervalComplex eval(const IntervalComplex& x, Precision prec) const;
    std::string str() const;  // for reports, e.g. "4*X^2 - 5"
};

// Certified enclosures of the distinct roots of a squarefree integer
// polynomial. Real roots come first in ascending order with im exactly 0;
// complex roots follow in conjugate pairs (ascending real part, +im first).
struct RootEnclosures {
    std::vector<IntervalComplex> roots;
    int num_real = 0;
};

RootEnclosures isolate_roots(const IntPolynomial& p, Precision prec);

bool is_squarefree(const IntPolynomial& p);

// Exact irreducibility over Q for degree ≤ 3 (rational-root test plus the
// quadratic discriminant); degree ≥ 4 is out of reach here and must be
// asserted by the caller.
bool is_irreducible_deg_le3(const IntPolynomial& p);

// Count of real roots (Sturm), exact.
int count_real_roots(const IntPolynomial& p);

} // namespace transcrit
