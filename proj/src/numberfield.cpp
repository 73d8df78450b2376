/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/numberfield.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "json.hpp"
#include "transcrit/errors.hpp"

namespace transcrit {

FieldElement::FieldElement(FieldPtr field, VecQ coords) : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw Error("element of null field");
    if (coords_.size() != static_cast<std::size_t>(field_->degree()))
        throw Error("coordinate count does not match field degree");
}

VecQ FieldElement::power_coords() const { return mat_apply(field_->basis_to_power(), coords_); }

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    VecQ p = power_coords();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] != 0) return false;
    return true;
}

BigRat FieldElement::rational_value() const {
    VecQ p = power_coords();
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] != 0) throw Error("element is not rational");
    return p[0];
}

IntervalComplex FieldElement::embed(int j, Precision prec) const {
    RootEnclosures emb = field_->embeddings(prec);
    const IntervalComplex& th = emb.roots.at(j);
    VecQ p = power_coords();
    IntervalComplex acc(iv_zero(prec), iv_zero(prec));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = ic_mul(acc, th);
        acc.re = iv_add(acc.re, iv_from_rat(*it, prec));
    }
    return acc;
}

IntervalComplex FieldElement::value(Precision prec) const { return embed(field_->distinguished(), prec); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_.get() != o.field_.get()) {
        if (!field_ || !o.field_ || !(field_->minpoly() == o.field_->minpoly()) ||
            field_->basis_to_power() != o.field_->basis_to_power())
            throw FieldMismatch("comparing elements of different fields");
    }
    return coords_ == o.coords_;
}

VecQ NumberField::mul_power(const VecQ& a, const VecQ& b) const {
    int d = degree();
    VecQ prod(2 * d - 1, BigRat(0));
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce modulo the (possibly non-monic) defining polynomial:
    // θ^d = -(c0 + … + c_{d-1}θ^{d-1})/c_d
    BigRat lead(minpoly_.c[d]);
    for (int k = 2 * d - 2; k >= d; --k) {
        if (prod[k] == 0) continue;
        BigRat f = prod[k] / lead;
        for (int i = 0; i < d; ++i) prod[k - d + i] -= f * BigRat(minpoly_.c[i]);
        prod[k] = 0;
    }
    prod.resize(d);
    return prod;
}

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    const FieldPtr& f = a.field();
    if (!f || !b.field()) throw Error("arithmetic on unset element");
    if (f.get() != b.field().get()) throw FieldMismatch("elements of different fields");
    int d = f->degree();
    switch (op) {
        case ArithOp::Add: {
            VecQ c = a.coords();
            for (int i = 0; i < d; ++i) c[i] += b.coords()[i];
            return FieldElement(f, std::move(c));
        }
        case ArithOp::Sub: {
            VecQ c = a.coords();
            for (int i = 0; i < d; ++i) c[i] -= b.coords()[i];
            return FieldElement(f, std::move(c));
        }
        case ArithOp::Mul:
            return f->from_power(f->mul_power(a.power_coords(), b.power_coords()));
        case ArithOp::Div: {
            if (b.is_zero()) throw DivisionByZero("field element division by zero");
            // solve (b*x = a) in power coordinates
            VecQ bp = b.power_coords();
            MatQ mult = mat_zero(d, d);
            VecQ col(d, BigRat(0));
            for (int j = 0; j < d; ++j) {
                VecQ ej(d, BigRat(0));
                ej[j] = 1;
                VecQ bj = f->mul_power(bp, ej);
                for (int i = 0; i < d; ++i) mult[i][j] = bj[i];
            }
            auto x = mat_solve(mult, a.power_coords());
            if (!x) throw Error("division failed (singular multiplication matrix)");
            return f->from_power(*x);
        }
    }
    throw Error("unreachable");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Add); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Sub); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Mul); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) { return elem_arith(a, b, ArithOp::Div); }
FieldElement operator-(const FieldElement& a) {
    VecQ c = a.coords();
    for (auto& x : c) x = -x;
    return FieldElement(a.field(), std::move(c));
}

FieldPtr NumberField::create(Desc desc, Precision prec) {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->minpoly_ = IntPolynomial::normalized(desc.minpoly.c);
    int d = f->minpoly_.degree();
    if (d < 1) throw FieldValidation("defining polynomial must have degree >= 1");
    if (d <= 3) {
        if (!is_irreducible_deg_le3(f->minpoly_)) throw FieldValidation("defining polynomial is reducible over Q");
    } else {
        if (!desc.assume_irreducible)
            throw FieldValidation("degree >= 4 needs assume_irreducible (exact test only up to degree 3)");
        if (!is_squarefree(f->minpoly_)) throw FieldValidation("defining polynomial is not squarefree");
    }
    if (desc.basis.empty()) {
        f->basis_to_power_ = mat_identity(d);
        f->power_to_basis_ = mat_identity(d);
    } else {
        if (desc.basis.size() != static_cast<std::size_t>(d))
            throw FieldValidation("basis must have exactly d vectors");
        MatQ m = mat_zero(d, d);
        for (int i = 0; i < d; ++i) {
            if (desc.basis[i].size() != static_cast<std::size_t>(d))
                throw FieldValidation("basis vector has wrong length");
            for (int r = 0; r < d; ++r) m[r][i] = desc.basis[i][r];
        }
        auto inv = mat_invert(m);
        if (!inv) throw FieldValidation("basis vectors are linearly dependent");
        f->basis_to_power_ = std::move(m);
        f->power_to_basis_ = std::move(*inv);
    }
    RootEnclosures emb = f->embeddings(prec);
    if (desc.distinguished < 0) {
        if (emb.num_real == 0)
            throw FieldValidation("no real embedding; pick distinguished_embedding explicitly");
        f->distinguished_ = emb.num_real - 1;  // largest real root
    } else {
        if (desc.distinguished >= d) throw FieldValidation("distinguished_embedding out of range");
        f->distinguished_ = desc.distinguished;
    }
    f->real_distinguished_ = f->distinguished_ < emb.num_real;
    return f;
}

FieldPtr NumberField::rationals() {
    Desc d;
    d.minpoly = IntPolynomial{{BigInt(-1), BigInt(1)}};  // θ = 1
    return create(std::move(d));
}

FieldPtr NumberField::golden() {
    Desc d;
    d.minpoly = IntPolynomial{{BigInt(-1), BigInt(-1), BigInt(1)}};  // X² − X − 1
    return create(std::move(d));
}

RootEnclosures NumberField::embeddings(Precision prec) const { return isolate_roots(minpoly_, prec); }

FieldElement NumberField::element(VecQ coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_power(VecQ pc) const {
    return FieldElement(shared_from_this(), mat_apply(power_to_basis_, pc));
}

FieldElement NumberField::from_rat(const BigRat& q) const {
    VecQ pc(degree(), BigRat(0));
    pc[0] = q;
    return from_power(std::move(pc));
}

FieldElement NumberField::theta() const {
    VecQ pc(degree(), BigRat(0));
    if (degree() == 1) {
        pc[0] = make_rat(-minpoly_.c[0], minpoly_.c[1]);
    } else {
        pc[1] = 1;
    }
    return from_power(std::move(pc));
}

FieldElement NumberField::basis_element(int i) const {
    VecQ c(degree(), BigRat(0));
    c.at(i) = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

std::vector<FieldElement> NumberField::galois_theta_images() const {
    int d = degree();
    if (d == 1) return {theta()};
    if (d == 2) {
        // sum of the two roots is -c1/c2
        VecQ pc(2, BigRat(0));
        pc[0] = make_rat(-minpoly_.c[1], minpoly_.c[2]);
        pc[1] = -1;
        return {theta(), from_power(std::move(pc))};
    }
    throw NotGalois("exact Galois automorphisms are available for degree <= 2 fields only");
}

FieldElement NumberField::apply_galois(const FieldElement& a, const FieldElement& theta_image) const {
    VecQ p = a.power_coords();
    FieldElement acc = zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * theta_image + from_rat(*it);
    return acc;
}

std::optional<FieldElement> NumberField::sqrt_of_rat(const BigRat& k, Precision prec) const {
    auto rational_sqrt = [](const BigRat& q) -> std::optional<BigRat> {
        if (q < 0) return std::nullopt;
        BigInt n = q.get_num(), de = q.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(de.get_mpz_t()))
            return std::nullopt;
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), de.get_mpz_t());
        return make_rat(rn, rd);
    };
    if (auto r = rational_sqrt(k)) return from_rat(*r);
    if (degree() != 2) return std::nullopt;

    // x = u + vθ with x² = k: either v = 0 (handled above) or u = v·c1/(2c2)
    // and v² = 4k·c2² / (c1² − 4c0c2).
    BigInt disc = minpoly_.c[1] * minpoly_.c[1] - 4 * minpoly_.c[0] * minpoly_.c[2];
    BigRat v2 = 4 * k * BigRat(minpoly_.c[2] * minpoly_.c[2]) / BigRat(disc);
    auto v = rational_sqrt(v2);
    if (!v) return std::nullopt;
    BigRat u = *v * make_rat(minpoly_.c[1], 2 * minpoly_.c[2]);
    FieldElement x = from_power({u, *v});
    if ((x * x).rational_value() != k) throw Error("sqrt_of_rat internal check failed");
    // principal choice: positive real part, ties broken by positive imaginary part
    for (Precision p(prec.bits, prec.max_bits);; p = p.doubled()) {
        IntervalComplex val = x.value(p);
        if (val.re.is_positive()) return x;
        if (val.re.is_negative()) return -x;
        if (val.re.contains_zero() && val.im.is_positive()) return x;
        if (val.re.contains_zero() && val.im.is_negative()) return -x;
        if (!p.can_refine()) throw PrecisionExhausted("cannot orient sqrt at max precision");
    }
}

FieldPtr NumberField::from_json(const std::string& text, Precision prec) {
    nlohmann::json j = nlohmann::json::parse(text);
    Desc d;
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("minpoly")) {
        if (c.is_number_integer())
            coeffs.emplace_back(static_cast<long>(c.get<long long>()));
        else
            coeffs.push_back(parse_int(c.get<std::string>()));
    }
    d.minpoly = IntPolynomial{std::move(coeffs)};
    if (j.contains("basis")) {
        for (const auto& row : j.at("basis")) {
            VecQ v;
            for (const auto& x : row) {
                if (x.is_number_integer())
                    v.emplace_back(static_cast<long>(x.get<long long>()));
                else
                    v.push_back(parse_rat(x.get<std::string>()));
            }
            d.basis.push_back(std::move(v));
        }
    }
    if (j.contains("distinguished_embedding")) d.distinguished = j.at("distinguished_embedding").get<int>();
    if (j.contains("assume_irreducible")) d.assume_irreducible = j.at("assume_irreducible").get<bool>();
    return create(std::move(d), prec);
}

// ---------------------------------------------------------------------------

IntPolynomial minimal_polynomial(const FieldElement& a) {
    int d = a.field()->degree();
    // least k with 1, a, …, a^k linearly dependent; exact linear algebra
    std::vector<VecQ> powers;
    VecQ one(d, BigRat(0));
    one[0] = 1;
    powers.push_back(one);
    VecQ ap = a.power_coords();
    VecQ cur = one;
    for (int k = 1; k <= d; ++k) {
        cur = a.field()->mul_power(cur, ap);
        MatQ m = mat_zero(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = powers[j][i];
        if (auto lam = mat_solve(m, cur)) {
            // a^k = Σ λ_j a^j  →  X^k − Σ λ_j X^j
            BigInt denlcm = 1;
            for (const auto& l : *lam) denlcm = lcm(denlcm, l.get_den());
            std::vector<BigInt> c(k + 1);
            for (int j = 0; j < k; ++j) {
                BigRat scaled = -(*lam)[j] * BigRat(denlcm);
                c[j] = scaled.get_num();
            }
            c[k] = denlcm;
            return IntPolynomial::normalized(std::move(c));
        }
        powers.push_back(cur);
    }
    throw Error("no linear dependence found (broken field arithmetic)");
}

std::vector<IntervalComplex> conjugates(const FieldElement& a, Precision prec) {
    return isolate_roots(minimal_polynomial(a), prec).roots;
}

IntervalReal house(const FieldElement& a, Precision prec) {
    auto roots = conjugates(a, prec);
    IntervalReal m = ic_abs(roots[0]);
    for (std::size_t i = 1; i < roots.size(); ++i) m = iv_max(m, ic_abs(roots[i]));
    return m;
}

BigInt denominator(const FieldElement& a) { return minimal_polynomial(a).leading(); }

Norms norms(const FieldElement& a) {
    IntPolynomial mp = minimal_polynomial(a);
    int k = mp.degree();
    int d = a.field()->degree();
    BigRat conjprod = make_rat(mp.c[0], mp.c[k]);
    if (k % 2 != 0) conjprod = -conjprod;
    Norms n;
    n.conjprod = conjprod;
    n.field_norm = pow_rat(conjprod, d / k);
    return n;
}

MahlerHeight mahler_and_height(const FieldElement& a, Precision prec) {
    IntPolynomial mp = minimal_polynomial(a);
    auto roots = isolate_roots(mp, prec).roots;
    IntervalReal one = iv_from_rat(BigRat(1), prec);
    IntervalReal m = iv_from_int(mp.leading(), prec);
    for (const auto& r : roots) m = iv_mul(m, iv_max(one, ic_abs(r)));
    MahlerHeight out{m, iv_pow_rat(m, make_rat(1, mp.degree()), prec)};
    return out;
}

Verdict liouville_check(const FieldElement& a, const FieldElement& b, Precision prec) {
    if (a == b) throw EqualInputs("liouville_check needs distinct inputs");
    IntPolynomial pa = minimal_polynomial(a), pb = minimal_polynomial(b);
    if (pa == pb) throw ConjugatePair("inputs share a minimal polynomial");
    long dd = static_cast<long>(pa.degree()) * pb.degree();
    FieldElement diff = a - b;
    auto lhs = [&](Precision p) { return abs_value_adaptive(diff, p); };
    auto rhs = [&](Precision p) {
        IntervalReal prod = iv_mul(iv_from_rat(BigRat(2), p),
                                   iv_mul(mahler_and_height(a, p).height, mahler_and_height(b, p).height));
        return iv_pow_rat(prod, BigRat(-dd), p);
    };
    Verdict v = certify_le(rhs, lhs, prec);
    if (v == Verdict::Fails) throw Error("Liouville inequality certified violated (bug)");
    return v;
}

Verdict linear_form_bound(const FieldElement& x, const BigInt& a, const BigInt& b, Precision prec) {
    if (x.is_zero()) throw Error("linear_form_bound needs x != 0");
    FieldElement form = x.field()->from_rat(BigRat(a)) + x.field()->from_rat(BigRat(b)) * x;
    if (form.is_zero()) throw ZeroForm("a + b·x = 0");
    long degx = minimal_polynomial(x).degree();
    BigInt mx = std::max(std::max(abs(a), abs(b)), BigInt(1));
    auto lhs = [&](Precision p) {
        IntervalReal c = iv_min(iv_pow_rat(iv_mul(iv_from_rat(BigRat(2), p), mahler_and_height(x, p).height),
                                           BigRat(-degx), p),
                                abs_value_adaptive(x, p));
        return iv_mul(c, iv_pow_rat(iv_from_int(mx, p), BigRat(-2 * degx), p));
    };
    auto rhs = [&](Precision p) { return abs_value_adaptive(form, p); };
    Verdict v = certify_le(lhs, rhs, prec);
    if (v == Verdict::Fails) throw Error("Lemma 2.2 bound certified violated (bug)");
    return v;
}

IntervalReal house_linear_constant(const std::vector<FieldElement>& elems, Precision prec) {
    if (elems.empty()) throw Error("house_linear_constant needs a nonempty list");
    IntervalReal m = house(elems[0], prec);
    for (std::size_t i = 1; i < elems.size(); ++i) m = iv_max(m, house(elems[i], prec));
    return iv_mul(iv_from_int(BigInt(elems.size()), prec), m);
}

BasisChange basis_change(const std::vector<FieldElement>& x, const std::vector<FieldElement>& xp) {
    if (x.empty() || xp.empty()) throw Error("basis_change needs nonempty lists");
    const FieldPtr& f = x[0].field();
    int d = f->degree();
    std::size_t D = x.size(), Dp = xp.size();

    // greedy maximal independent subset of xp
    std::vector<std::size_t> chosen;
    MatQ cols;  // selected power-coordinate columns, as rows for rank checks
    for (std::size_t j = 0; j < Dp; ++j) {
        MatQ trial = cols;
        trial.push_back(xp[j].power_coords());
        if (mat_rank(trial) == trial.size()) {
            cols = std::move(trial);
            chosen.push_back(j);
        }
    }
    std::size_t dprime = chosen.size();
    // extend with power-basis vectors to a full basis of K
    std::vector<VecQ> ext;
    for (int i = 0; i < d && cols.size() < static_cast<std::size_t>(d); ++i) {
        VecQ e(d, BigRat(0));
        e[i] = 1;
        MatQ trial = cols;
        trial.push_back(e);
        if (mat_rank(trial) == trial.size()) {
            cols = std::move(trial);
            ext.push_back(e);
        }
    }
    MatQ full = mat_zero(d, d);  // columns: chosen xp, then extension
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) full[r][c] = cols[c][r];

    BigInt Q = 1;
    MatQ lambda;  // expansion of each x_i over the extended basis
    for (std::size_t i = 0; i < D; ++i) {
        if (x[i].field().get() != f.get()) throw FieldMismatch("basis_change inputs from different fields");
        auto lam = mat_solve(full, x[i].power_coords());
        if (!lam) throw Error("extended basis not invertible (bug)");
        for (std::size_t j = dprime; j < lam->size(); ++j)
            if ((*lam)[j] != 0) throw NotInSpan("x element outside the rational span of xp");
        for (const auto& l : *lam) Q *= l.get_den();
        lambda.push_back(std::move(*lam));
    }

    BasisChange out;
    out.Q = Q;
    out.transform = mat_zero(D, Dp);
    for (std::size_t i = 0; i < D; ++i) {
        for (std::size_t t = 0; t < dprime; ++t) {
            BigRat scaled = lambda[i][t] * BigRat(Q);
            if (!is_integer(scaled)) throw Error("transform entry not integral (bug)");
            out.transform[i][chosen[t]] = scaled;
        }
    }
    // post-check: the transform reproduces each x_i exactly
    for (std::size_t i = 0; i < D; ++i) {
        FieldElement rec = f->zero();
        for (std::size_t j = 0; j < Dp; ++j)
            rec = rec + f->from_rat(out.transform[i][j] / BigRat(Q)) * xp[j];
        if (!(rec == x[i])) throw Error("basis_change post-check failed");
    }
    return out;
}

namespace {

std::size_t coord_bits(const FieldElement& e) {
    std::size_t bits = 1;
    for (const auto& c : e.power_coords()) {
        bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
    }
    return bits;
}

bool component_settled(const IntervalReal& v, int target_bits) {
    if (mpfr_zero_p(v.lo()) && mpfr_zero_p(v.hi())) return true;
    mpfr_t width, scale;
    mpfr_init2(width, 64);
    mpfr_init2(scale, 64);
    mpfr_sub(width, v.hi(), v.lo(), MPFR_RNDU);
    mpfr_abs(scale, v.lo(), MPFR_RNDD);
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v.hi(), MPFR_RNDD);
    mpfr_max(scale, scale, t, MPFR_RNDD);
    // width ≤ 2^{-B}·|v| or width ≤ 2^{-2B} (vanishing component)
    mpfr_mul_2si(scale, scale, -target_bits, MPFR_RNDU);
    bool rel = mpfr_cmp(width, scale) <= 0;
    mpfr_set_ui_2exp(t, 1, -2L * target_bits, MPFR_RNDN);
    bool absolute = mpfr_cmp(width, t) <= 0;
    mpfr_clear(width);
    mpfr_clear(scale);
    mpfr_clear(t);
    return rel || absolute;
}

IntervalReal round_to(const IntervalReal& v, int bits) {
    IntervalReal out((Precision(bits)));
    mpfr_set(out.lo(), v.lo(), MPFR_RNDD);
    mpfr_set(out.hi(), v.hi(), MPFR_RNDU);
    return out;
}

} // namespace

IntervalComplex value_adaptive(const FieldElement& e, Precision prec) {
    long cap = static_cast<long>(std::max<std::size_t>(prec.max_bits, 64u * prec.bits) +
                                 2u * e.field()->degree() * (coord_bits(e) + 64));
    for (long bits = prec.bits;; bits *= 2) {
        IntervalComplex v = e.value(Precision(static_cast<int>(std::min(bits, cap)), INT_MAX));
        if (component_settled(v.re, prec.bits) && component_settled(v.im, prec.bits))
            return IntervalComplex(round_to(v.re, prec.bits), round_to(v.im, prec.bits));
        if (bits >= cap)
            throw PrecisionExhausted("element value does not settle below the cancellation cap");
    }
}

IntervalReal abs_value_adaptive(const FieldElement& e, Precision prec) {
    return ic_abs(value_adaptive(e, prec));
}

IntegerCoords integer_coords(const FieldElement& a, const std::vector<FieldElement>& basis) {
    const FieldPtr& f = a.field();
    int d = f->degree();
    MatQ m = mat_zero(d, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        VecQ pc = basis[j].power_coords();
        for (int i = 0; i < d; ++i) m[i][j] = pc[i];
    }
    auto lam = mat_solve(m, a.power_coords());
    if (!lam) throw NotInSpan("element not in the span of the given basis");
    IntegerCoords out;
    for (const auto& l : *lam) {
        if (!is_integer(l)) throw NotIntegerCoords("expansion has non-integer coordinates");
        out.coords.push_back(l.get_num());
    }
    BigInt g = 0;
    for (const auto& c : out.coords) g = gcd(g, c);
    out.r = g;
    return out;
}

} // namespace transcrit
