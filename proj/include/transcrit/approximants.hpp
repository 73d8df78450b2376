/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transcrit/sequences.hpp"

namespace transcrit {

// Exact s_N = Σ_{n<N} b_n/(a_n·c_n); N = 1 is the empty sum.
FieldElement partial_sum(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long N);

// Certified enclosure of the full series under the distinguished embedding.
// The tail beyond the evaluated prefix is majorized by 2·|term| after a
// certified ratio ≤ 1/2 window at the profile's predicted start index.
IntervalReal sum_enclosure(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, Precision prec);

// Certified enclosure of |Σ_{n≥N} b_n/(a_n c_n)|.
IntervalReal tail_abs_enclosure(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                long N, Precision prec);

struct Approximant {
    long N = 1;
    BigInt q;
    std::vector<BigInt> p;
    IntervalReal err;  // encloses |Σ − Σ p_i x_i / q|
};

struct ApproximantResult {
    Approximant approximant;
    std::vector<std::pair<std::string, Verdict>> checks;
    std::optional<BigRat> suggested_E;  // smallest power of two making (15) hold
};

// Lemma 3.2 shape: rational positive-integer a_n; q = lcm·∏ a_n c_n,
// p_i built from the integer b-coordinates; verifies (14) and (15).
ApproximantResult build_q_p_rational(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                     long N, const BigRat& M, const BigRat& E, const BigRat& y,
                                     const BigRat& alpha, Precision prec);

// Lemma 5.2 construction: κ, r_n, 𝒩(a_n/r_n), minimal ã_n, q_N, p_{i,N};
// verifies (20), (21) and per-n (22). Galois fields only.
ApproximantResult build_q_p_general(const SequenceSpec& spec, const std::vector<BigInt>& c_seq,
                                    long N, const BigRat& eta2, const BigRat& alpha, Precision prec);

struct ZParams {
    BigRat M = BigRat(1);       // ≥ 1
    BigRat c = make_rat(1, 2);  // in (0,1)
    BigRat beta = BigRat(0);
};

// Z_N = 2^{N²·log₂^c |a_{N−1}|} · (∏_{n<N} |a_n|^M) · Σ_{n≥N} b_n/(a_n c_n);
// Z₁ is the bare tail.
IntervalReal z_value(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, const ZParams& zp,
                     long N, Precision prec);

enum class TailKind { Gamma, CapitalGamma, Window };
std::string to_string(TailKind k);

struct TailReport {
    long N = 1;
    TailKind kind = TailKind::Gamma;
    BigRat exponent;
    Verdict verdict = Verdict::Undecided;
};

TailReport tail_checks(const SequenceSpec& spec, TailKind kind, const BigRat& exponent, long N,
                       std::optional<long> Q, Precision prec);

// Indices N ≤ N_max with y_N > (1 + 1/N²)·max_{n<N} y_n, certified; positions
// that cannot be decided land in *undecided.
std::vector<long> record_indices(const std::vector<IntervalReal>& y, long N_max,
                                 std::vector<long>* undecided = nullptr);

// Eq. (23): (M+1+δ)^N = (M+1+δ)^k + (M+δ)·Σ_{n=k}^{N-1}(M+1+δ)^n, exact.
bool identity_checks(const BigRat& M, const BigRat& delta, long k, long N);

// Lemma 6.5 on a caller-supplied positive rational sequence (1-based).
Verdict lemma65_check(const std::vector<BigRat>& a, const BigRat& M, const BigRat& beta, long k,
                      long N);

// Eq. (18) shape: H(s_N) ≤ (lcm of basis denominators)·∏ a_n c_n · max(1, C₁·max_i|Σ b_{i,n}/(a_n c_n)|).
Verdict height_bound_sN(const SequenceSpec& spec, const std::vector<BigInt>& c_seq, long N,
                        Precision prec);

enum class Separation { Separated, RepeatRisk };
Separation partial_sum_separation(const SequenceSpec& spec, long N_max);

} // namespace transcrit
