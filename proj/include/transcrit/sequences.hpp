/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transcrit/numberfield.hpp"

namespace transcrit {

// F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}; fast doubling.
BigInt fib(unsigned long m);
// F_{-k} = (-1)^{k+1} F_k
BigInt fib_signed(long m);

// φ^m as an element of a field with basis {1, φ}; coordinates (F_{m-1}, F_m).
FieldElement phi_power(const FieldPtr& field, long m);

// log|a_n| = gⁿ·(A + A_L·ln n) + B·n + C·ln n + D + o(1)
struct GrowthProfile {
    BigRat g = BigRat(2);
    double A = 0, A_L = 0, B = 0, C = 0, D = 0;
};

struct DeclaredExponents {
    std::optional<BigRat> beta, y, y1, y2, eta1, eta2;
};

// ζ as something evaluable to a certified complex enclosure.
struct Zeta {
    std::string description;
    std::function<IntervalComplex(Precision)> eval;
};

struct Term {
    FieldElement a, b;
    BigInt c = BigInt(1);
    // integer coordinates over the sequence basis, when declared by the builder
    std::optional<std::vector<BigInt>> a_coords, b_coords;
};

enum class IndexConvention { Adjacent, Nested };
std::string to_string(IndexConvention c);

struct SequenceSpec {
    std::string name;
    FieldPtr field;
    std::vector<FieldElement> basis;  // the x_i
    std::function<Term(long)> term_fn;
    GrowthProfile profile;
    DeclaredExponents exponents;
    std::optional<Zeta> zeta;
    IndexConvention convention = IndexConvention::Adjacent;

    // validated access: a_n ≠ 0, b_n ≠ 0, c_n ≥ 1
    Term term(long n) const;
};

// Measured ln|a_n| must match the declared profile within rel_tol on [lo, hi].
void validate_profile(const SequenceSpec& spec, long lo, long hi, double rel_tol = 0.05);

// --- sequence definition DSL -------------------------------------------------
//
// expr   := term (("+"|"-") term)*
// term   := factor (("*"|"/") factor)*
// factor := atom ("^" atom)?
// atom   := integer | "n" | "phi" | "phibar" | "sqrt" "(" integer ")"
//         | "F" "(" expr ")" | "(" expr ")"
struct SeqExprNode;

struct SeqExpr {
    std::shared_ptr<const SeqExprNode> root;
    FieldPtr field;
};

SeqExpr parse_seq(const std::string& dsl, const FieldPtr& field);
FieldElement eval_seq(const SeqExpr& e, long n);

// Rational evaluation with the variable bound to an arbitrary rational (the
// applicability scans use "c" as the variable; "c" and "n" both name it).
BigRat eval_rat_expr(const SeqExpr& e, const BigRat& value);

// --- builtins ---------------------------------------------------------------

struct BuiltinOptions {
    IndexConvention convention = IndexConvention::Adjacent;
    std::optional<FieldElement> x;  // Example 2.1 only
    // Example 2.4/2.6 admit a second decomposition aimed at Theorem 1.4;
    // "thm14" selects it where it differs from the default.
    std::string variant;
};

SequenceSpec builtin_example(const std::string& id, const BuiltinOptions& opts = {});

// Sequence file: {"field": {...}, "a": dsl, "b": dsl, "c": dsl|"free",
//                 "profile": {...}, "exponents": {...}, "zeta": ...}
SequenceSpec seq_from_json(const std::string& text, Precision prec = Precision());

// Permutation of 1..N sorting |a_n·c_n| non-decreasingly (certified; exact
// ties broken by index).
std::vector<long> sort_by_modulus(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                  long N, Precision prec);

// c_seq lookup helper: empty means all ones
BigInt c_at(const std::vector<BigInt>& c_seq, long n);

} // namespace transcrit
