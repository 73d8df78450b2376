/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transcrit/interval.hpp"
#include "transcrit/linalg.hpp"
#include "transcrit/polynomial.hpp"

namespace transcrit {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Exact element of a declared number field: rational coordinates over the
// field's declared basis. Immutable.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, VecQ coords);

    const FieldPtr& field() const { return field_; }
    const VecQ& coords() const { return coords_; }
    VecQ power_coords() const;  // coordinates over 1, θ, …, θ^{d-1}

    bool is_zero() const;
    bool is_rational() const;
    BigRat rational_value() const;

    IntervalComplex embed(int j, Precision prec) const;
    IntervalComplex value(Precision prec) const;  // distinguished embedding

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldPtr field_;
    VecQ coords_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

// A number field Q(θ) of degree d with a declared rational basis and
// certified embeddings (the roots of the defining polynomial). Immutable and
// shareable; construct through create()/from_json().
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    struct Desc {
        IntPolynomial minpoly;
        MatQ basis;              // basis[i] = power-basis coords of basis element i; empty → power basis
        int distinguished = -1;  // -1 → largest real embedding
        bool assume_irreducible = false;
    };

    static FieldPtr create(Desc desc, Precision prec = Precision());
    static FieldPtr rationals();
    // Q(φ) with minpoly X²−X−1, basis {1, φ}, distinguished embedding φ ≈ 1.618
    static FieldPtr golden();
    static FieldPtr from_json(const std::string& text, Precision prec = Precision());

    int degree() const { return minpoly_.degree(); }
    const IntPolynomial& minpoly() const { return minpoly_; }
    int distinguished() const { return distinguished_; }
    const MatQ& basis_to_power() const { return basis_to_power_; }
    const MatQ& power_to_basis() const { return power_to_basis_; }
    bool real_distinguished() const { return real_distinguished_; }

    RootEnclosures embeddings(Precision prec) const;

    FieldElement element(VecQ coords) const;
    FieldElement from_power(VecQ power_coords) const;
    FieldElement from_rat(const BigRat& q) const;
    FieldElement zero() const { return from_rat(BigRat(0)); }
    FieldElement one() const { return from_rat(BigRat(1)); }
    FieldElement theta() const;
    FieldElement basis_element(int i) const;

    // Galois automorphisms as images of θ; exact for degree ≤ 2, NotGalois
    // otherwise. Identity comes first.
    std::vector<FieldElement> galois_theta_images() const;
    FieldElement apply_galois(const FieldElement& a, const FieldElement& theta_image) const;

    // x ∈ K with x² = k, principal value under the distinguished embedding;
    // nullopt when no such element exists (or degree > 2 and k not square).
    std::optional<FieldElement> sqrt_of_rat(const BigRat& k, Precision prec) const;

    // product of power-basis coordinate vectors, reduced mod the minpoly
    VecQ mul_power(const VecQ& a, const VecQ& b) const;

private:
    NumberField() = default;
    IntPolynomial minpoly_;
    MatQ basis_to_power_, power_to_basis_;
    int distinguished_ = 0;
    bool real_distinguished_ = true;
};

// --- height, norm and house invariants --------------------------------------

IntPolynomial minimal_polynomial(const FieldElement& a);
std::vector<IntervalComplex> conjugates(const FieldElement& a, Precision prec);
IntervalReal house(const FieldElement& a, Precision prec);
BigInt denominator(const FieldElement& a);

struct Norms {
    BigRat conjprod;    // 𝒩(a): product of the conjugates
    BigRat field_norm;  // 𝒩_K(a) = 𝒩(a)^{d/deg a}
};
Norms norms(const FieldElement& a);

struct MahlerHeight {
    IntervalReal mahler, height;
};
MahlerHeight mahler_and_height(const FieldElement& a, Precision prec);

Verdict liouville_check(const FieldElement& a, const FieldElement& b, Precision prec);
Verdict linear_form_bound(const FieldElement& x, const BigInt& a, const BigInt& b, Precision prec);
IntervalReal house_linear_constant(const std::vector<FieldElement>& elems, Precision prec);

struct BasisChange {
    BigInt Q;        // positive
    MatQ transform;  // integer entries; row i: x_i = Σ_j transform[i][j]/Q · xp_j
};
BasisChange basis_change(const std::vector<FieldElement>& x, const std::vector<FieldElement>& xp);

struct IntegerCoords {
    std::vector<BigInt> coords;
    BigInt r;  // gcd of the coordinates
};
IntegerCoords integer_coords(const FieldElement& a, const std::vector<FieldElement>& basis);

// Distinguished-embedding value with the internal working precision escalated
// past coordinate-cancellation (e.g. φ^{-m} has coordinates ~φ^{m} but value
// ~φ^{-m}); the result is rounded back to prec.bits with relative width
// ~2^{-prec.bits} per component (absolute for components that vanish).
IntervalComplex value_adaptive(const FieldElement& e, Precision prec);
IntervalReal abs_value_adaptive(const FieldElement& e, Precision prec);

} // namespace transcrit
