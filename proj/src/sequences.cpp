/* SPDX-License-Identifier: Apache-2.0 */
#include "transcrit/sequences.hpp"

#include <cctype>
#include <cmath>

#include "json.hpp"
#include "transcrit/errors.hpp"

namespace transcrit {

namespace {
constexpr unsigned long kFibCeiling = 8000000;  // ~5.5M bits; runaway guard
}

BigInt fib(unsigned long m) {
    if (m > kFibCeiling) throw CeilingExceeded("Fibonacci index beyond the supported ceiling");
    // fast doubling: F(2k) = F(k)·(2F(k+1) − F(k)), F(2k+1) = F(k)² + F(k+1)²
    BigInt a = 0, b = 1;  // (F(k), F(k+1)) with k = prefix of m's bits
    if (m == 0) return a;
    int top = 63;
    while (!((m >> top) & 1ul)) --top;
    for (int i = top; i >= 0; --i) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((m >> i) & 1ul) {
            a = d;
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    return a;
}

BigInt fib_signed(long m) {
    if (m >= 0) return fib(static_cast<unsigned long>(m));
    unsigned long k = static_cast<unsigned long>(-m);
    BigInt f = fib(k);
    return (k % 2 == 0) ? BigInt(-f) : f;
}

static FieldElement resolve_phi(const FieldPtr& field, bool bar) {
    auto s5 = field->sqrt_of_rat(BigRat(5), Precision());
    if (!s5) throw UndefinedSymbol("phi is not expressible in this field");
    FieldElement half = field->from_rat(make_rat(1, 2));
    return bar ? half * (field->one() - *s5) : half * (field->one() + *s5);
}

FieldElement phi_power(const FieldPtr& field, long m) {
    FieldElement phi = resolve_phi(field, false);
    if (!(field->basis_element(0) == field->one()) || !(field->basis_element(1) == phi))
        throw FieldMismatch("phi_power needs a field with basis {1, phi}");
    return field->element({BigRat(fib_signed(m - 1)), BigRat(fib_signed(m))});
}

Term SequenceSpec::term(long n) const {
    if (n < 1) throw Error("sequence index must be >= 1");
    Term t = term_fn(n);
    if (t.a.is_zero()) throw Error(name + ": a_n = 0 at n = " + std::to_string(n));
    if (t.b.is_zero()) throw Error(name + ": b_n = 0 at n = " + std::to_string(n));
    if (t.c < 1) throw Error(name + ": c_n < 1 at n = " + std::to_string(n));
    return t;
}

std::string to_string(IndexConvention c) {
    return c == IndexConvention::Adjacent ? "adjacent" : "nested";
}

void validate_profile(const SequenceSpec& spec, long lo, long hi, double rel_tol) {
    Precision prec;
    for (long n = lo; n <= hi; ++n) {
        Term t = spec.term(n);
        IntervalReal mag = abs_value_adaptive(t.a, prec);
        if (!mag.is_positive()) throw Error("profile validation: |a_n| enclosure touches 0");
        double measured = mpfr_get_d(iv_log2(mag).lo(), MPFR_RNDN) * std::log(2.0);
        double gn = std::pow(mpq_get_d(spec.profile.g.get_mpq_t()), static_cast<double>(n));
        double predicted = gn * (spec.profile.A + spec.profile.A_L * std::log(static_cast<double>(n))) +
                           spec.profile.B * static_cast<double>(n) +
                           spec.profile.C * std::log(static_cast<double>(n)) + spec.profile.D;
        if (measured == 0.0) continue;
        if (std::abs(measured - predicted) > rel_tol * std::abs(measured))
            throw Error(spec.name + ": declared growth profile off by more than " +
                        std::to_string(rel_tol * 100) + "% at n = " + std::to_string(n));
    }
}

// --- DSL ---------------------------------------------------------------------

struct SeqExprNode {
    enum Kind { Int, VarN, Phi, PhiBar, Sqrt, Fib, Add, Sub, Mul, Div, Pow } kind;
    BigInt value;
    std::shared_ptr<const SeqExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const SeqExprNode>;

NodePtr make_node(SeqExprNode::Kind k, NodePtr l = nullptr, NodePtr r = nullptr, BigInt v = BigInt(0)) {
    auto n = std::make_shared<SeqExprNode>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->value = std::move(v);
    return n;
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    NodePtr expr() {
        NodePtr l = term();
        for (;;) {
            if (eat('+'))
                l = make_node(SeqExprNode::Add, l, term());
            else if (eat('-'))
                l = make_node(SeqExprNode::Sub, l, term());
            else
                return l;
        }
    }

    NodePtr term() {
        NodePtr l = factor();
        for (;;) {
            if (eat('*'))
                l = make_node(SeqExprNode::Mul, l, factor());
            else if (eat('/'))
                l = make_node(SeqExprNode::Div, l, factor());
            else
                return l;
        }
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (eat('^')) return make_node(SeqExprNode::Pow, base, atom());
        return base;
    }

    NodePtr atom() {
        skip();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return make_node(SeqExprNode::Int, nullptr, nullptr, parse_int(s.substr(start, pos - start)));
        }
        if (c == '(') {
            ++pos;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string word = s.substr(start, pos - start);
            if (word == "n" || word == "c") return make_node(SeqExprNode::VarN);
            if (word == "phi") return make_node(SeqExprNode::Phi);
            if (word == "phibar") return make_node(SeqExprNode::PhiBar);
            if (word == "F") {
                expect('(');
                NodePtr arg = expr();
                expect(')');
                return make_node(SeqExprNode::Fib, arg);
            }
            if (word == "sqrt") {
                expect('(');
                skip();
                std::size_t ds = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (ds == pos) throw ParseError("sqrt needs an integer argument", pos);
                BigInt k = parse_int(s.substr(ds, pos - ds));
                expect(')');
                return make_node(SeqExprNode::Sqrt, nullptr, nullptr, std::move(k));
            }
            throw ParseError("unknown symbol '" + word + "'", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

struct EvalCtx {
    FieldPtr field;
    long n;
    mutable std::optional<FieldElement> phi, phibar;
};

FieldElement eval_node(const NodePtr& node, const EvalCtx& ctx);

unsigned long eval_integer(const NodePtr& node, const EvalCtx& ctx, const char* what) {
    FieldElement v = eval_node(node, ctx);
    if (!v.is_rational()) throw Error(std::string(what) + " does not evaluate to a rational number");
    BigRat q = v.rational_value();
    if (!is_integer(q) || q < 0)
        throw Error(std::string(what) + " must be a nonnegative integer (got " + to_string(q) + ")");
    if (q > BigRat(kFibCeiling)) throw CeilingExceeded(std::string(what) + " beyond the supported ceiling");
    return q.get_num().get_ui();
}

FieldElement eval_node(const NodePtr& node, const EvalCtx& ctx) {
    switch (node->kind) {
        case SeqExprNode::Int: return ctx.field->from_rat(BigRat(node->value));
        case SeqExprNode::VarN: return ctx.field->from_rat(BigRat(BigInt(ctx.n)));
        case SeqExprNode::Phi:
            if (!ctx.phi) ctx.phi = resolve_phi(ctx.field, false);
            return *ctx.phi;
        case SeqExprNode::PhiBar:
            if (!ctx.phibar) ctx.phibar = resolve_phi(ctx.field, true);
            return *ctx.phibar;
        case SeqExprNode::Sqrt: {
            auto r = ctx.field->sqrt_of_rat(BigRat(node->value), Precision());
            if (!r) throw UndefinedSymbol("sqrt(" + node->value.get_str() + ") is not in this field");
            return *r;
        }
        case SeqExprNode::Fib:
            return ctx.field->from_rat(BigRat(fib(eval_integer(node->lhs, ctx, "F argument"))));
        case SeqExprNode::Add: return eval_node(node->lhs, ctx) + eval_node(node->rhs, ctx);
        case SeqExprNode::Sub: return eval_node(node->lhs, ctx) - eval_node(node->rhs, ctx);
        case SeqExprNode::Mul: return eval_node(node->lhs, ctx) * eval_node(node->rhs, ctx);
        case SeqExprNode::Div: return eval_node(node->lhs, ctx) / eval_node(node->rhs, ctx);
        case SeqExprNode::Pow: {
            unsigned long e = eval_integer(node->rhs, ctx, "exponent");
            FieldElement base = eval_node(node->lhs, ctx);
            FieldElement acc = ctx.field->one();
            while (e > 0) {
                if (e & 1ul) acc = acc * base;
                base = base * base;
                e >>= 1;
            }
            return acc;
        }
    }
    throw Error("unreachable");
}

} // namespace

SeqExpr parse_seq(const std::string& dsl, const FieldPtr& field) {
    Parser p{dsl};
    NodePtr root = p.expr();
    p.skip();
    if (p.pos != dsl.size()) throw ParseError("trailing input", p.pos);
    return SeqExpr{root, field};
}

FieldElement eval_seq(const SeqExpr& e, long n) {
    EvalCtx ctx{e.field, n, std::nullopt, std::nullopt};
    return eval_node(e.root, ctx);
}

namespace {

BigRat eval_rat_node(const NodePtr& node, const BigRat& value) {
    switch (node->kind) {
        case SeqExprNode::Int: return BigRat(node->value);
        case SeqExprNode::VarN: return value;
        case SeqExprNode::Add: return eval_rat_node(node->lhs, value) + eval_rat_node(node->rhs, value);
        case SeqExprNode::Sub: return eval_rat_node(node->lhs, value) - eval_rat_node(node->rhs, value);
        case SeqExprNode::Mul: return eval_rat_node(node->lhs, value) * eval_rat_node(node->rhs, value);
        case SeqExprNode::Div: {
            BigRat d = eval_rat_node(node->rhs, value);
            if (d == 0) throw DivisionByZero("division by zero in bound expression");
            return eval_rat_node(node->lhs, value) / d;
        }
        case SeqExprNode::Pow: {
            BigRat e = eval_rat_node(node->rhs, value);
            if (!is_integer(e) || e < 0) throw Error("exponent must be a nonnegative integer");
            return pow_rat(eval_rat_node(node->lhs, value), e.get_num().get_si());
        }
        case SeqExprNode::Fib: {
            BigRat a = eval_rat_node(node->lhs, value);
            if (!is_integer(a) || a < 0) throw Error("F argument must be a nonnegative integer");
            return BigRat(fib(a.get_num().get_ui()));
        }
        default:
            throw UndefinedSymbol("field constants are not allowed in rational bound expressions");
    }
}

} // namespace

BigRat eval_rat_expr(const SeqExpr& e, const BigRat& value) { return eval_rat_node(e.root, value); }

// --- builtins ---------------------------------------------------------------

namespace {

unsigned long pow_ul(unsigned long b, unsigned long e) {
    unsigned long r = 1;
    for (unsigned long i = 0; i < e; ++i) {
        if (r > kFibCeiling / b) throw CeilingExceeded("index growth beyond the supported ceiling");
        r *= b;
    }
    return r;
}

const double kLnPhi = 0.4812118250596034474977589134243684231352;
const double kLn5 = 1.6094379124341003746007593332261876395256;

Zeta zeta_one() {
    return Zeta{"1", [](Precision p) { return ic_from_real(iv_from_rat(BigRat(1), p)); }};
}

SequenceSpec example_2_1(const BuiltinOptions& opts) {
    FieldPtr field;
    FieldElement x;
    if (opts.x) {
        x = *opts.x;
        field = x.field();
        if (minimal_polynomial(x).degree() > 2)
            throw UnsupportedX("Example 2.1 needs an element of degree at most 2");
    } else {
        field = NumberField::golden();
        x = *field->sqrt_of_rat(BigRat(5), Precision());
    }
    bool nested = opts.convention == IndexConvention::Nested;
    SequenceSpec s;
    s.name = "example 2.1";
    s.field = field;
    s.basis = {field->one(), x};
    s.convention = opts.convention;
    s.term_fn = [field, x, nested](long n) {
        unsigned long m = pow_ul(9, static_cast<unsigned long>(n));
        unsigned long mp = nested ? pow_ul(9, static_cast<unsigned long>(n) + 1) : m + 1;
        BigInt fm = fib(m), fmp = fib(mp);
        Term t;
        t.a = field->from_rat(BigRat(fm * fmp));
        t.b = field->from_rat(BigRat(fm)) + field->from_rat(BigRat(fmp)) * x;
        t.a_coords = std::vector<BigInt>{fm * fmp, BigInt(0)};
        t.b_coords = std::vector<BigInt>{fm, fmp};
        return t;
    };
    s.profile.g = 9;
    s.profile.A = nested ? 10 * kLnPhi : 2 * kLnPhi;
    s.profile.D = nested ? -kLn5 : kLnPhi - kLn5;
    s.exponents.beta = make_rat(1, 2);
    s.exponents.y = BigRat(1);
    return s;
}

SequenceSpec example_2_4(const BuiltinOptions& opts) {
    FieldPtr field = NumberField::golden();
    SequenceSpec s;
    s.field = field;
    s.convention = opts.convention;
    if (opts.variant == "thm14") {
        // n^{5^n}·φ^n = n^{5^n} / ((−1)^n (F_n φ̄ + F_{n−1})): rational a_n
        FieldElement phibar = resolve_phi(field, true);
        s.name = "example 2.4 (Thm 1.4 route)";
        s.basis = {field->one(), phibar};
        s.term_fn = [field, phibar](long n) {
            BigInt nk = pow_int(BigInt(n), pow_ul(5, static_cast<unsigned long>(n)));
            int sign = (n % 2 == 0) ? 1 : -1;
            Term t;
            t.a = field->from_rat(BigRat(nk));
            t.b = field->from_rat(BigRat(sign * fib(n - 1))) +
                  field->from_rat(BigRat(sign * fib(n))) * phibar;
            t.a_coords = std::vector<BigInt>{nk, BigInt(0)};
            t.b_coords = std::vector<BigInt>{sign * fib(n - 1), sign * fib(n)};
            return t;
        };
        s.profile.g = 5;
        s.profile.A_L = 1;
        s.exponents.beta = BigRat(0);
        s.exponents.y = BigRat(1);
        s.zeta = zeta_one();
        return s;
    }
    s.name = "example 2.4";
    s.basis = {field->one(), field->theta()};  // {1, φ}
    s.term_fn = [field](long n) {
        BigInt nk = pow_int(BigInt(n), pow_ul(5, static_cast<unsigned long>(n)));
        Term t;
        t.a = field->element({BigRat(nk * fib(n - 1)), BigRat(nk * fib(n))});
        t.b = field->one();
        t.a_coords = std::vector<BigInt>{nk * fib(n - 1), nk * fib(n)};
        t.b_coords = std::vector<BigInt>{BigInt(1), BigInt(0)};
        return t;
    };
    s.profile.g = 5;
    s.profile.A_L = 1;
    s.profile.B = kLnPhi;
    s.exponents.beta = BigRat(0);
    s.exponents.y = BigRat(1);
    s.exponents.y1 = BigRat(1);
    s.exponents.y2 = BigRat(0);
    s.exponents.eta1 = BigRat(1);
    s.exponents.eta2 = BigRat(1);
    s.zeta = zeta_one();
    return s;
}

SequenceSpec example_2_5(const BuiltinOptions& opts) {
    FieldPtr field = NumberField::golden();
    SequenceSpec s;
    s.field = field;
    s.convention = opts.convention;
    if (opts.variant == "thm14") {
        // φ^{7^n} = F_{7^n} / (F_{7^n}·φ^{-7^n}): rational a_n, forcing y = 2
        s.name = "example 2.5 (Thm 1.4 route)";
        s.basis = {field->one(), field->theta()};
        s.term_fn = [field](long n) {
            unsigned long m = pow_ul(7, static_cast<unsigned long>(n));
            BigInt fm = fib(m);
            Term t;
            t.a = field->from_rat(BigRat(fm));
            // b_n = F_m·φ^{-m} = F_m·(F_{m+1} − F_m·φ)·(−1)^m, m odd here
            t.b = field->element({BigRat(-fm * fib(m + 1)), BigRat(fm * fm)});
            t.a_coords = std::vector<BigInt>{fm, BigInt(0)};
            t.b_coords = std::vector<BigInt>{-fm * fib(m + 1), fm * fm};
            return t;
        };
        s.profile.g = 7;
        s.profile.A = kLnPhi;
        s.profile.D = -0.5 * kLn5;
        s.exponents.beta = BigRat(0);
        s.exponents.y = BigRat(2);
        s.zeta = zeta_one();
        return s;
    }
    s.name = "example 2.5";
    s.basis = {field->one(), field->theta()};
    s.term_fn = [field](long n) {
        unsigned long m = pow_ul(7, static_cast<unsigned long>(n));
        Term t;
        t.a = phi_power(field, static_cast<long>(m));
        t.b = field->one();
        t.a_coords = std::vector<BigInt>{fib(m - 1), fib(m)};
        t.b_coords = std::vector<BigInt>{BigInt(1), BigInt(0)};
        return t;
    };
    s.profile.g = 7;
    s.profile.A = kLnPhi;
    s.exponents.beta = BigRat(0);
    s.exponents.y = BigRat(1);
    s.exponents.y1 = BigRat(1);
    s.exponents.y2 = BigRat(0);
    s.exponents.eta1 = BigRat(0);
    s.exponents.eta2 = BigRat(1);
    s.zeta = zeta_one();
    return s;
}

SequenceSpec example_2_6(const BuiltinOptions& opts) {
    FieldPtr field = NumberField::golden();
    FieldElement phibar = resolve_phi(field, true);
    bool nested = opts.convention == IndexConvention::Nested;
    SequenceSpec s;
    s.name = "example 2.6";
    s.field = field;
    s.basis = {field->one(), phibar};
    s.convention = opts.convention;
    s.term_fn = [field, phibar, nested](long n) {
        unsigned long m = pow_ul(9, static_cast<unsigned long>(n));
        unsigned long mp = nested ? pow_ul(9, static_cast<unsigned long>(n) + 1) : m + 1;
        BigInt fm = fib(m);
        Term t;
        t.a = field->from_rat(BigRat(fib(mp)));
        // b_n = F_m·φ^{−m} = −F_m·φ̄^m (m odd), coords −F_m·(F_{m−1}, F_m)
        t.b = field->from_rat(BigRat(-fm * fib(m - 1))) + field->from_rat(BigRat(-fm * fm)) * phibar;
        t.a_coords = std::vector<BigInt>{fib(mp), BigInt(0)};
        t.b_coords = std::vector<BigInt>{-fm * fib(m - 1), -fm * fm};
        return t;
    };
    s.profile.g = 9;
    s.profile.A = nested ? 9 * kLnPhi : kLnPhi;
    s.profile.D = (nested ? 0.0 : kLnPhi) - 0.5 * kLn5;
    s.exponents.beta = BigRat(0);
    s.exponents.y = BigRat(2);
    s.exponents.y1 = BigRat(1);
    s.exponents.y2 = BigRat(2);
    s.exponents.eta1 = BigRat(1);
    s.exponents.eta2 = BigRat(1);
    s.zeta = zeta_one();
    return s;
}

SequenceSpec example_2_7(const BuiltinOptions& opts) {
    FieldPtr field = NumberField::golden();
    SequenceSpec s;
    s.name = "example 2.7";
    s.field = field;
    s.basis = {field->one(), field->theta()};
    s.convention = opts.convention;
    s.term_fn = [field](long n) {
        unsigned long m = pow_ul(14, static_cast<unsigned long>(n));
        Term t;
        t.a = phi_power(field, static_cast<long>(2 * m));
        t.b = field->element({BigRat(fib(m)), BigRat(1)});  // F_{14^n} + φ
        t.a_coords = std::vector<BigInt>{fib(2 * m - 1), fib(2 * m)};
        t.b_coords = std::vector<BigInt>{fib(m), BigInt(1)};
        return t;
    };
    s.profile.g = 14;
    s.profile.A = 2 * kLnPhi;
    s.exponents.beta = make_rat(1, 2);
    // the decomposition has |a_{i,n}| ~ |a_n| and |b_{i,n}| ~ |a_n|^{1/2}
    s.exponents.y1 = BigRat(1);
    s.exponents.y2 = make_rat(1, 2);
    s.exponents.eta1 = BigRat(0);
    s.exponents.eta2 = BigRat(1);
    s.zeta = zeta_one();
    return s;
}

} // namespace

SequenceSpec builtin_example(const std::string& id, const BuiltinOptions& opts) {
    SequenceSpec s;
    if (id == "2.1")
        s = example_2_1(opts);
    else if (id == "2.4")
        s = example_2_4(opts);
    else if (id == "2.5")
        s = example_2_5(opts);
    else if (id == "2.6")
        s = example_2_6(opts);
    else if (id == "2.7")
        s = example_2_7(opts);
    else
        throw Error("unknown builtin example '" + id + "' (have 2.1, 2.4, 2.5, 2.6, 2.7)");
    validate_profile(s, 1, 3);
    return s;
}

SequenceSpec seq_from_json(const std::string& text, Precision prec) {
    nlohmann::json j = nlohmann::json::parse(text);
    SequenceSpec s;
    s.name = j.value("name", "user sequence");
    s.field = NumberField::from_json(j.at("field").dump(), prec);
    for (int i = 0; i < s.field->degree(); ++i) s.basis.push_back(s.field->basis_element(i));

    SeqExpr ea = parse_seq(j.at("a").get<std::string>(), s.field);
    SeqExpr eb = parse_seq(j.at("b").get<std::string>(), s.field);
    std::optional<SeqExpr> ec;
    if (j.contains("c") && j.at("c").is_string() && j.at("c").get<std::string>() != "free")
        ec = parse_seq(j.at("c").get<std::string>(), s.field);
    FieldPtr field = s.field;
    s.term_fn = [ea, eb, ec, field](long n) {
        Term t;
        t.a = eval_seq(ea, n);
        t.b = eval_seq(eb, n);
        if (ec) {
            FieldElement cv = eval_seq(*ec, n);
            if (!cv.is_rational() || !is_integer(cv.rational_value()) || cv.rational_value() < 1)
                throw Error("c_n must evaluate to a positive integer");
            t.c = cv.rational_value().get_num();
        }
        return t;
    };

    auto num_or_str = [](const nlohmann::json& v) -> BigRat {
        if (v.is_number_integer()) return BigRat(static_cast<long>(v.get<long long>()));
        return parse_rat(v.get<std::string>());
    };
    if (j.contains("profile")) {
        const auto& p = j.at("profile");
        s.profile.g = num_or_str(p.at("g"));
        s.profile.A = p.value("A", 0.0);
        s.profile.A_L = p.value("A_L", 0.0);
        s.profile.B = p.value("B", 0.0);
        s.profile.C = p.value("C", 0.0);
        s.profile.D = p.value("D", 0.0);
    }
    if (j.contains("exponents")) {
        const auto& e = j.at("exponents");
        if (e.contains("beta")) s.exponents.beta = num_or_str(e.at("beta"));
        if (e.contains("y")) s.exponents.y = num_or_str(e.at("y"));
        if (e.contains("y1")) s.exponents.y1 = num_or_str(e.at("y1"));
        if (e.contains("y2")) s.exponents.y2 = num_or_str(e.at("y2"));
        if (e.contains("eta1")) s.exponents.eta1 = num_or_str(e.at("eta1"));
        if (e.contains("eta2")) s.exponents.eta2 = num_or_str(e.at("eta2"));
    }
    if (j.contains("zeta")) {
        const auto& z = j.at("zeta");
        BigRat re(0), im(0);
        if (z.is_object()) {
            if (z.contains("re")) re = num_or_str(z.at("re"));
            if (z.contains("im")) im = num_or_str(z.at("im"));
        } else {
            re = num_or_str(z);
        }
        std::string desc = to_string(re) + (im != 0 ? " + " + to_string(im) + "i" : "");
        s.zeta = Zeta{desc, [re, im](Precision p) {
                          return IntervalComplex(iv_from_rat(re, p), iv_from_rat(im, p));
                      }};
    }
    if (j.contains("profile")) validate_profile(s, 1, 3);
    return s;
}

BigInt c_at(const std::vector<BigInt>& c_seq, long n) {
    if (c_seq.empty()) return BigInt(1);
    if (n < 1 || static_cast<std::size_t>(n) > c_seq.size())
        throw Error("c sequence too short for index " + std::to_string(n));
    return c_seq[static_cast<std::size_t>(n) - 1];
}

std::vector<long> sort_by_modulus(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                  long N, Precision prec) {
    std::vector<FieldElement> vals;
    for (long n = 1; n <= N; ++n) {
        Term t = spec.term(n);
        vals.push_back(t.a * spec.field->from_rat(BigRat(c_at(c_seq, n))));
    }
    auto modulus_less = [&](long i, long j) -> bool {
        if (vals[i] == vals[j] || vals[i] == -vals[j]) return i < j;  // exact tie
        for (Precision p = prec;; p = p.doubled()) {
            Ordering o = iv_compare(abs_value_adaptive(vals[i], p), abs_value_adaptive(vals[j], p));
            if (o == Ordering::Less) return true;
            if (o == Ordering::Greater) return false;
            if (!p.can_refine())
                throw PrecisionExhausted("sort_by_modulus: uncertifiable tie between indices " +
                                         std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
    };
    std::vector<long> perm(N);
    for (long i = 0; i < N; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), modulus_less);
    for (auto& i : perm) ++i;  // 1-based
    return perm;
}

} // namespace transcrit
