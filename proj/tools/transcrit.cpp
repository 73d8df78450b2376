/* SPDX-License-Identifier: Apache-2.0 */
//
// transcrit: certified finite-prefix verification of irrationality and
// transcendence criteria for series Σ b_n/(a_n·c_n) over number fields.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "transcrit/approximants.hpp"
#include "transcrit/criteria.hpp"
#include "transcrit/report.hpp"

using namespace transcrit;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    int precision = 256;
    int max_precision = 16384;
    std::string n_range = "2..4";
    std::string convention = "adjacent";
    std::string format = "text";
    std::string out;
};

Precision make_prec(const GlobalOpts& g) { return Precision(g.precision, g.max_precision); }

IndexConvention make_conv(const GlobalOpts& g) {
    if (g.convention == "adjacent") return IndexConvention::Adjacent;
    if (g.convention == "nested") return IndexConvention::Nested;
    throw Error("index convention must be adjacent or nested");
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long n = std::stol(s);
        return {n, n};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        f << text;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// predicted log2|a_n| from the profile, for the CLI digit ceiling
double predicted_bits(const GrowthProfile& p, long n) {
    double gn = std::pow(mpq_get_d(p.g.get_mpq_t()), static_cast<double>(n));
    double ln_a = gn * (p.A + p.A_L * std::log(static_cast<double>(n))) +
                  p.B * static_cast<double>(n) + p.C * std::log(static_cast<double>(n)) + p.D;
    return ln_a / std::log(2.0);
}

void check_ceiling(const SequenceSpec& spec, long n_hi) {
    if (predicted_bits(spec.profile, n_hi) > 3e5)
        throw CeilingExceeded("requested range needs |a_n| beyond ~3·10^5 bits; refusing (n = " +
                              std::to_string(n_hi) + ")");
}

CriterionParams params_for(const SequenceSpec& spec, TheoremId t) {
    CriterionParams p;
    p.theorem = t;
    p.adopt_exponents(spec.exponents);
    // ε must satisfy β < ε/(1+ε); double until it does
    p.eps = make_rat(1, 2);
    while (p.beta * (1 + p.eps) >= p.eps) p.eps *= 2;
    return p;
}

VerificationReport run_theorem(const SequenceSpec& spec, TheoremId t, const CriterionParams& params,
                               long lo, long hi, Precision prec) {
    HypothesesRun run = check_hypotheses(spec, params, lo, hi, prec);
    auto bases = required_bases(t, spec.field->degree(), params);
    return assemble_report(spec, t, run, bases, lo, hi, prec);
}

int overall_exit(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.overall == Overall::Inconclusive) return 2;
    return 0;
}

std::string render_reports(const GlobalOpts& g, const std::string& title,
                           const std::vector<VerificationReport>& reports,
                           const std::vector<std::string>& notes) {
    if (g.format == "json") {
        ordered_json j;
        j["example"] = title;
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(ordered_json::parse(report_to_json(r)));
        j["reports"] = arr;
        if (!notes.empty()) j["notes"] = notes;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& r : reports) os << report_to_text(r);
    for (const auto& n : notes) os << "note: " << n << "\n";
    return os.str();
}

int cmd_example(const GlobalOpts& g, const std::string& id, const std::string& x_expr) {
    Precision prec = make_prec(g);
    auto [lo, hi] = parse_range(g.n_range);
    BuiltinOptions opts;
    opts.convention = make_conv(g);

    std::vector<VerificationReport> reports;
    std::vector<std::string> notes;

    if (id == "2.1") {
        FieldPtr field = NumberField::golden();
        if (!x_expr.empty()) opts.x = eval_seq(parse_seq(x_expr, field), 1);
        SequenceSpec spec = builtin_example("2.1", opts);
        check_ceiling(spec, hi);
        CriterionParams p = params_for(spec, TheoremId::T1_4);
        p.eps = BigRat(2);  // β = 1/2 needs ε > 1
        reports.push_back(run_theorem(spec, TheoremId::T1_4, p, lo, hi, prec));
        FieldElement phibar = opts.x ? *opts.x : FieldElement();
        bool x_is_phibar = false;
        if (opts.x) {
            FieldElement pb = *spec.field->sqrt_of_rat(BigRat(5), prec);
            FieldElement phibar_elem = spec.field->from_rat(make_rat(1, 2)) * (spec.field->one() - pb);
            x_is_phibar = *opts.x == phibar_elem;
        }
        if (x_is_phibar) {
            Separation sep = partial_sum_separation(spec, hi);
            notes.push_back(std::string("x = φ̄ special case: partial sums ") +
                            (sep == Separation::Separated ? "Separated" : "RepeatRisk") +
                            " up to N = " + std::to_string(hi));
        }
    } else if (id == "2.4") {
        SequenceSpec spec = builtin_example("2.4", opts);
        check_ceiling(spec, hi);
        reports.push_back(run_theorem(spec, TheoremId::T1_6, params_for(spec, TheoremId::T1_6), lo, hi, prec));
        BuiltinOptions alt = opts;
        alt.variant = "thm14";
        SequenceSpec spec14 = builtin_example("2.4", alt);
        reports.push_back(run_theorem(spec14, TheoremId::T1_4, params_for(spec14, TheoremId::T1_4), lo, hi, prec));
    } else if (id == "2.5") {
        SequenceSpec spec = builtin_example("2.5", opts);
        check_ceiling(spec, hi);
        reports.push_back(run_theorem(spec, TheoremId::T1_6, params_for(spec, TheoremId::T1_6), lo, hi, prec));
        BuiltinOptions alt = opts;
        alt.variant = "thm14";
        SequenceSpec spec14 = builtin_example("2.5", alt);
        reports.push_back(run_theorem(spec14, TheoremId::T1_4, params_for(spec14, TheoremId::T1_4), lo, hi, prec));
        notes.push_back("Theorem 1.4 route forces y = 2: required base 9 > 7 = growth base");
    } else if (id == "2.6") {
        SequenceSpec spec = builtin_example("2.6", opts);
        check_ceiling(spec, hi);
        reports.push_back(run_theorem(spec, TheoremId::T1_4, params_for(spec, TheoremId::T1_4), lo, hi, prec));
        reports.push_back(run_theorem(spec, TheoremId::T1_7, params_for(spec, TheoremId::T1_7), lo, hi, prec));
    } else if (id == "2.7") {
        SequenceSpec spec = builtin_example("2.7", opts);
        check_ceiling(spec, hi);
        CriterionParams p = params_for(spec, TheoremId::T1_7);
        p.eps = BigRat(2);
        reports.push_back(run_theorem(spec, TheoremId::T1_7, p, lo, hi, prec));
    } else {
        throw Error("unknown example id '" + id + "'");
    }
    emit(g, render_reports(g, "example " + id, reports, notes));
    return overall_exit(reports);
}

int cmd_verify(const GlobalOpts& g, const std::string& seq_path, const std::string& field_path,
               const std::string& example_id, const std::string& theorem,
               const std::string& params_str, const std::string& zeta_str) {
    Precision prec = make_prec(g);
    auto [lo, hi] = parse_range(g.n_range);
    SequenceSpec spec;
    if (!example_id.empty()) {
        BuiltinOptions opts;
        opts.convention = make_conv(g);
        spec = builtin_example(example_id, opts);
    } else {
        ordered_json j = ordered_json::parse(slurp(seq_path));
        if (!j.contains("field")) {
            if (field_path.empty()) throw Error("sequence file lacks a field; pass --field");
            j["field"] = ordered_json::parse(slurp(field_path));
        }
        spec = seq_from_json(j.dump(), prec);
    }
    check_ceiling(spec, hi);
    TheoremId t = theorem_from_string(theorem);
    CriterionParams p = params_for(spec, t);
    // overlay user parameters
    std::stringstream ss(params_str);
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("bad parameter '" + kv + "' (use key=value)");
        std::string key = kv.substr(0, eq);
        BigRat val = parse_rat(kv.substr(eq + 1));
        if (key == "eps") p.eps = val;
        else if (key == "alpha") p.alpha = val;
        else if (key == "beta") p.beta = val;
        else if (key == "delta") p.delta = val;
        else if (key == "y") p.y = val;
        else if (key == "y1") p.y1 = val;
        else if (key == "y2") p.y2 = val;
        else if (key == "eta1") p.eta1 = val;
        else if (key == "eta2") p.eta2 = val;
        else if (key == "gamma") p.gamma = val;
        else throw Error("unknown parameter '" + key + "'");
    }
    if (!zeta_str.empty()) {
        BigRat re = parse_rat(zeta_str);
        p.zeta = Zeta{zeta_str, [re](Precision pr) { return ic_from_real(iv_from_rat(re, pr)); }};
    }

    VerificationReport rep;
    std::string extra;
    if (t == TheoremId::T1_1 || t == TheoremId::T1_2 || t == TheoremId::T1_3) {
        ClassicalVariant v = t == TheoremId::T1_1   ? ClassicalVariant::Erdos
                             : t == TheoremId::T1_2 ? ClassicalVariant::Hancl
                                                    : ClassicalVariant::AndersenKristensen;
        HypothesesRun run = check_classical(spec, v, p, lo, hi, prec);
        rep = assemble_report(spec, t, run, required_bases(t, spec.field->degree(), p), lo, hi, prec);
        if (t == TheoremId::T1_3) {
            std::ostringstream os;
            for (long n = lo; n <= hi; ++n)
                os << "  divergence exponent ∏(d^i+d)^{-1} at n = " << n << ": "
                   << to_string(thm13_product_exponent(spec.field->degree(), n)) << "\n";
            extra = os.str();
        }
    } else {
        rep = run_theorem(spec, t, p, lo, hi, prec);
    }
    if (g.format == "json") {
        ordered_json j = ordered_json::parse(report_to_json(rep));
        if (t == TheoremId::T1_3) {
            ordered_json exps;
            for (long n = lo; n <= hi; ++n)
                exps[std::to_string(n)] = to_string(thm13_product_exponent(spec.field->degree(), n));
            j["product_exponents"] = exps;
        }
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, report_to_text(rep) + extra);
    }
    return rep.overall == Overall::Inconclusive ? 2 : 0;
}

int cmd_applicability(const GlobalOpts& g, const std::string& example_id, const std::string& theorem,
                      int d, const std::string& grid_str, const std::string& y1_s,
                      const std::string& y2_s, const std::string& beta_s, const BigRat& growth_base) {
    std::ostringstream os;
    ordered_json jout;
    FieldPtr q = NumberField::rationals();
    auto bound_fn = [&](const std::string& expr) -> std::function<BigRat(const BigRat&)> {
        if (expr.empty()) return {};
        SeqExpr e = parse_seq(expr, q);
        return [e](const BigRat& c) { return eval_rat_expr(e, c); };
    };
    auto scan = [&](const std::string& name, TheoremId t, int dd, const ExponentBounds& b,
                    const std::vector<BigRat>& grid, const BigRat& gbase) {
        MinBaseResult r = min_required_base(t, dd, b, grid);
        bool inapplicable = r.minimum > gbase;
        if (g.format == "json") {
            ordered_json jb;
            jb["branch"] = name;
            jb["min_base"] = to_string(r.minimum);
            jb["argmin_c"] = to_string(r.argmin);
            jb["growth_base"] = to_string(gbase);
            jb["verdict"] = inapplicable ? "not immediately applicable" : "possibly applicable";
            jout["branches"].push_back(jb);
        } else {
            os << name << ": min base " << to_string(r.minimum) << " at c = " << to_string(r.argmin)
               << " vs growth " << to_string(gbase) << " -> "
               << (inapplicable ? "not immediately applicable" : "possibly applicable") << "\n";
        }
    };

    if (example_id == "2.3") {
        // branch c ∈ (−1, 3], step 1/10
        std::vector<BigRat> grid1;
        for (BigRat c = make_rat(-9, 10); c <= 3; c += make_rat(1, 10)) grid1.push_back(c);
        ExponentBounds b1;
        FieldPtr qq = NumberField::rationals();
        SeqExpr y1e = parse_seq("(2-c/4)/(2+c)", qq);
        SeqExpr nume = parse_seq("(1+c)/(2+c)", qq);
        b1.y1 = [y1e](const BigRat& c) { return eval_rat_expr(y1e, c); };
        b1.y2 = [nume](const BigRat& c) { return eval_rat_expr(nume, c); };
        b1.beta = b1.y2;
        scan("c in (-1, 3]", TheoremId::T1_7, 2, b1, grid1, BigRat(9));
        // branch c ∈ (−2, −1], step 1/10 (β and y₂ bounded below by 0)
        std::vector<BigRat> grid2;
        for (BigRat c = make_rat(-19, 10); c <= -1; c += make_rat(1, 10)) grid2.push_back(c);
        ExponentBounds b2;
        b2.y1 = b1.y1;
        b2.y2 = [](const BigRat&) { return BigRat(0); };
        b2.beta = [](const BigRat&) { return BigRat(0); };
        scan("c in (-2, -1]", TheoremId::T1_7, 2, b2, grid2, BigRat(9));
        // d ≥ 4 shortcut: y₁ ≥ 1, y₂, β ≥ 0
        ExponentBounds b3;
        b3.y1 = [](const BigRat&) { return BigRat(1); };
        b3.y2 = [](const BigRat&) { return BigRat(0); };
        b3.beta = [](const BigRat&) { return BigRat(0); };
        scan("d >= 4", TheoremId::T1_7, 4, b3, {BigRat(0)}, BigRat(9));
    } else {
        auto colon = grid_str.find(':');
        auto dots = grid_str.find("..");
        if (colon == std::string::npos || dots == std::string::npos)
            throw Error("grid must be lo..hi:step");
        BigRat glo = parse_rat(grid_str.substr(0, dots));
        BigRat ghi = parse_rat(grid_str.substr(dots + 2, colon - dots - 2));
        BigRat gstep = parse_rat(grid_str.substr(colon + 1));
        if (gstep <= 0) throw Error("grid step must be positive");
        std::vector<BigRat> grid;
        for (BigRat c = glo; c <= ghi; c += gstep) grid.push_back(c);
        ExponentBounds b;
        b.y1 = bound_fn(y1_s.empty() ? "1" : y1_s);
        b.y2 = bound_fn(y2_s.empty() ? "0" : y2_s);
        b.beta = bound_fn(beta_s.empty() ? "0" : beta_s);
        scan("grid", theorem_from_string(theorem), d, b, grid, growth_base);
    }
    emit(g, g.format == "json" ? jout.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_approximate(const GlobalOpts& g, const std::string& example_id, const std::string& seq_path,
                    const std::string& eta2_s, const std::string& alpha_s, bool rational,
                    const std::string& M_s, const std::string& E_s, const std::string& y_s) {
    Precision prec = make_prec(g);
    auto [lo, hi] = parse_range(g.n_range);
    SequenceSpec spec;
    if (!example_id.empty()) {
        BuiltinOptions opts;
        opts.convention = make_conv(g);
        spec = builtin_example(example_id, opts);
    } else {
        spec = seq_from_json(slurp(seq_path), prec);
    }
    check_ceiling(spec, hi);
    BigRat alpha = parse_rat(alpha_s);
    std::vector<BigInt> no_c;
    std::ostringstream os;
    ordered_json arr = ordered_json::array();
    for (long N = lo; N <= hi; ++N) {
        ApproximantResult r =
            rational ? build_q_p_rational(spec, no_c, N, parse_rat(M_s), parse_rat(E_s),
                                          parse_rat(y_s), alpha, prec)
                     : build_q_p_general(spec, no_c, N, parse_rat(eta2_s), alpha, prec);
        if (g.format == "json")
            arr.push_back(ordered_json::parse(approximant_to_json(r)));
        else
            os << approximant_to_text(r);
    }
    emit(g, g.format == "json" ? arr.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_sum(const GlobalOpts& g, const std::string& example_id, const std::string& seq_path, long N) {
    Precision prec = make_prec(g);
    SequenceSpec spec;
    if (!example_id.empty()) {
        BuiltinOptions opts;
        opts.convention = make_conv(g);
        spec = builtin_example(example_id, opts);
    } else {
        spec = seq_from_json(slurp(seq_path), prec);
    }
    check_ceiling(spec, N);
    std::vector<BigInt> no_c;
    FieldElement sN = partial_sum(spec, no_c, N);
    IntervalReal total = sum_enclosure(spec, no_c, prec);
    if (g.format == "json") {
        ordered_json j;
        j["sequence"] = spec.name;
        j["N"] = N;
        ordered_json coords = ordered_json::array();
        for (const auto& c : sN.coords()) coords.push_back(to_string(c));
        j["partial_sum_coords"] = coords;
        j["sum"] = {{"lo", total.lo_str()}, {"hi", total.hi_str()}};
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << spec.name << "\n  s_" << N << " coordinates over the basis:";
        for (const auto& c : sN.coords()) os << " " << to_string(c);
        os << "\n  full sum in " << total.brief(20) << "\n";
        emit(g, os.str());
    }
    return 0;
}

int cmd_invariants(const GlobalOpts& g, int count) {
    Precision prec = make_prec(g);
    std::mt19937_64 rng(20240722);
    auto rand_int = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
    auto rand_rat = [&](long m) {
        long den = static_cast<long>(rng() % static_cast<unsigned long>(m)) + 1;
        return make_rat(BigInt(rand_int(m)), BigInt(den));
    };
    std::ostringstream os;
    bool all_ok = true;
    auto line = [&](const std::string& name, bool ok) {
        os << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            BigRat a = rand_rat(1000), b = rand_rat(1000);
            IntervalReal ia = iv_from_rat(a, prec), ib = iv_from_rat(b, prec);
            BigRat sum = a + b, prod = a * b;
            IntervalReal is = iv_add(ia, ib), ip = iv_mul(ia, ib);
            ok = is.lo_rat() <= sum && sum <= is.hi_rat() && ip.lo_rat() <= prod && prod <= ip.hi_rat();
        }
        line("interval containment (add/mul on rationals)", ok);
    }
    {
        bool ok = true;
        FieldPtr f = NumberField::golden();
        for (int i = 0; i < count && ok; ++i) {
            FieldElement a = f->element({rand_rat(1000), rand_rat(1000)});
            FieldElement b = f->element({rand_rat(1000), rand_rat(1000)});
            if (a.is_zero() || b.is_zero()) continue;
            ok = norms(a * b).field_norm == norms(a).field_norm * norms(b).field_norm;
        }
        line("norm multiplicativity in Q(phi)", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < count && ok; ++i) {
            BigRat M = abs(rand_rat(20)) + 1, delta = abs(rand_rat(20));
            long k = 1 + static_cast<long>(rng() % 5), N = k + 1 + static_cast<long>(rng() % 6);
            ok = identity_checks(M, delta, k, N);
        }
        line("telescoping identity (23)", ok);
    }
    {
        bool ok = true;
        FieldPtr f = NumberField::golden();
        for (int i = 0; i < count / 2 && ok; ++i) {
            FieldElement a = f->element({rand_rat(100), rand_rat(100)});
            if (a.is_zero()) continue;
            auto mh = mahler_and_height(a, prec);
            IntervalReal hd = iv_pow_ui(mh.height, static_cast<unsigned long>(minimal_polynomial(a).degree()));
            ok = iv_compare(hd, mh.mahler) == Ordering::Undecided;  // overlap
        }
        line("H(a)^deg = M(a) enclosures overlap", ok);
    }
    emit(g, os.str());
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified checks for series of algebraic numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--precision", g.precision, "working precision in bits")->capture_default_str();
    app.add_option("--max-precision", g.max_precision, "refinement ceiling in bits")->capture_default_str();
    app.add_option("--n-range", g.n_range, "index range a..b")->capture_default_str();
    app.add_option("--index-convention", g.convention, "adjacent|nested")->capture_default_str();
    app.add_option("--format", g.format, "text|json")->capture_default_str();
    app.add_option("--out", g.out, "write the report to a file");

    auto* ex = app.add_subcommand("example", "reproduce a worked example (2.1, 2.4, 2.5, 2.6, 2.7)");
    std::string ex_id, ex_x;
    ex->add_option("id", ex_id)->required();
    ex->add_option("--x", ex_x, "element for example 2.1 (DSL, e.g. \"phibar\" or \"sqrt(5)\")");

    auto* ver = app.add_subcommand("verify", "check a theorem's hypotheses against a sequence");
    std::string v_seq, v_field, v_example, v_theorem = "1.6", v_params, v_zeta;
    ver->add_option("--seq", v_seq, "sequence file (JSON)");
    ver->add_option("--field", v_field, "field file (JSON), if not inline in --seq");
    ver->add_option("--example", v_example, "builtin example id instead of --seq");
    ver->add_option("--theorem", v_theorem, "1.1|1.2|1.3|1.4|1.6|1.7|7.1")->capture_default_str();
    ver->add_option("--params", v_params, "comma list, e.g. beta=1/2,y=1,eps=2,alpha=1/2");
    ver->add_option("--zeta", v_zeta, "rational ζ override");

    auto* app_cmd = app.add_subcommand("applicability", "minimum required base over a parameter grid");
    std::string a_example, a_theorem = "1.7", a_grid, a_y1, a_y2, a_beta, a_growth = "9";
    int a_d = 2;
    app_cmd->add_option("--example", a_example, "builtin case analysis (2.3)");
    app_cmd->add_option("--theorem", a_theorem)->capture_default_str();
    app_cmd->add_option("--d", a_d, "field degree")->capture_default_str();
    app_cmd->add_option("--grid", a_grid, "scan grid lo..hi:step");
    app_cmd->add_option("--y1", a_y1, "lower bound for y1 as an expression in c");
    app_cmd->add_option("--y2", a_y2, "lower bound for y2 as an expression in c");
    app_cmd->add_option("--beta", a_beta, "lower bound for beta as an expression in c");
    app_cmd->add_option("--growth-base", a_growth, "growth base to compare against")->capture_default_str();

    auto* apx = app.add_subcommand("approximate", "build (q, p_1..p_d) approximants");
    std::string x_example, x_seq, x_eta2 = "1", x_alpha = "1/2", x_M = "5", x_E = "1", x_y = "1";
    bool x_rational = false;
    apx->add_option("--example", x_example);
    apx->add_option("--seq", x_seq);
    apx->add_option("--eta2", x_eta2)->capture_default_str();
    apx->add_option("--alpha", x_alpha)->capture_default_str();
    apx->add_flag("--rational", x_rational, "use the rational-a_n construction");
    apx->add_option("--M", x_M)->capture_default_str();
    apx->add_option("--E", x_E)->capture_default_str();
    apx->add_option("--y", x_y)->capture_default_str();

    auto* sum = app.add_subcommand("sum", "exact partial sum and certified series enclosure");
    std::string s_example, s_seq;
    long s_N = 3;
    sum->add_option("--example", s_example);
    sum->add_option("--seq", s_seq);
    sum->add_option("--N", s_N)->capture_default_str();

    auto* inv = app.add_subcommand("invariants", "randomized invariant battery");
    int i_count = 200;
    inv->add_option("--count", i_count)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ex->parsed()) return cmd_example(g, ex_id, ex_x);
        if (ver->parsed())
            return cmd_verify(g, v_seq, v_field, v_example, v_theorem, v_params, v_zeta);
        if (app_cmd->parsed())
            return cmd_applicability(g, a_example, a_theorem, a_d, a_grid, a_y1, a_y2, a_beta,
                                     parse_rat(a_growth));
        if (apx->parsed())
            return cmd_approximate(g, x_example, x_seq, x_eta2, x_alpha, x_rational, x_M, x_E, x_y);
        if (sum->parsed()) return cmd_sum(g, s_example, s_seq, s_N);
        if (inv->parsed()) return cmd_invariants(g, i_count);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const EmptyGrid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NotGalois& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const CeilingExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
