#pragma once

// Exact evaluation of the compression-limit quantities for the basic file
// (every symbol once): fixed-width length L1, recoded length L2, the case
// threshold S_{n-1} and the coefficient k_min = L2 / L1. Lengths are counted
// in pits.
//
// l2_oracle_greedy and l2_oracle_exhaustive never touch the closed forms;
// they exist to check them.

#include <pitr/exact.hpp>
#include <pitr/radix.hpp>

#include <algorithm>
#include <string_view>
#include <vector>

namespace pitr {

enum class CaseTag { CaseA, CaseB, Boundary };

inline std::string_view case_name(CaseTag tag) noexcept {
    switch (tag) {
    case CaseTag::CaseA: return "a";
    case CaseTag::CaseB: return "b";
    case CaseTag::Boundary: return "boundary";
    }
    return "?";
}

struct CompressionReport {
    CodeParams params;
    wide l1 = 0;
    wide l2 = 0;
    wide s = 0;
    CaseTag case_tag = CaseTag::CaseB;
    Rational kmin;
};

/// S_{n-1} = (p^(n-1) - p) / (p - 1); equals -1 at n = 1.
inline wide s_value(Base base, unsigned n) {
    const wide p = base.value();
    return exact::div_exact(exact::sub(exact::pow(p, n - 1), p), p - 1);
}

inline wide l1(const CodeParams& params) {
    return exact::mul(params.rank, static_cast<wide>(params.alphabet));
}

/// Case-a expression, evaluated for any d (valid when d <= S_{n-1}):
///   [(n-2)p^n - (n-1)p^(n-1) + p]/(p-1)^2 + (n-1)[d + (p^n - 2p^(n-1) + p)/(p-1)]
inline wide l2_case_a(Base base, unsigned n, wide d) {
    using namespace exact;
    const wide p = base.value();
    const wide nn = n;
    const wide pn = pow(p, n);
    const wide pn1 = pow(p, n - 1);
    wide head = add(sub(mul(nn - 2, pn), mul(nn - 1, pn1)), p);
    head = div_exact(head, mul(p - 1, p - 1));
    wide tail = div_exact(add(sub(pn, mul(2, pn1)), p), p - 1);
    return add(head, mul(nn - 1, add(d, tail)));
}

/// Case-b expression, evaluated for any d (valid when d >= S_{n-1}):
///   [(n-1)p^(n+1) - n p^n + p]/(p-1)^2 + n[d - S_{n-1}]
inline wide l2_case_b(Base base, unsigned n, wide d) {
    using namespace exact;
    const wide p = base.value();
    const wide nn = n;
    wide head = add(sub(mul(nn - 1, pow(p, n + 1)), mul(nn, pow(p, n))), p);
    head = div_exact(head, mul(p - 1, p - 1));
    return add(head, mul(nn, sub(d, s_value(base, n))));
}

inline CaseTag classify(const CodeParams& params) {
    const wide s = s_value(params.base, params.rank);
    const wide d = static_cast<wide>(params.remainder);
    if (d < s) return CaseTag::CaseA;
    if (d > s) return CaseTag::CaseB;
    return CaseTag::Boundary;
}

/// L2 by the closed forms; the boundary d = S_{n-1} uses the case-b expression.
inline wide l2_closed(const CodeParams& params) {
    const wide d = static_cast<wide>(params.remainder);
    if (classify(params) == CaseTag::CaseA) return l2_case_a(params.base, params.rank, d);
    return l2_case_b(params.base, params.rank, d);
}

/// L2 of the full alphabet p^n by the term-by-term expansion.
inline wide l2_full(Base base, unsigned n) {
    using namespace exact;
    const wide p = base.value();
    wide weighted = 0;
    wide shorter = 0;
    for (unsigned k = 1; k < n; ++k) {
        wide pk = pow(p, k);
        weighted = add(weighted, mul(k, pk));
        shorter = add(shorter, pk);
    }
    return add(weighted, mul(n, sub(pow(p, n), shorter)));
}

/// k_min for the full alphabet p^n:
///   (n p^(n+2) - p^(n+1)(2n+1) + n p^n + n p^2 + p(1-n)) / (n p^n (p-1)^2)
inline Rational kmin_full_closed(Base base, unsigned n) {
    using namespace exact;
    const wide p = base.value();
    const wide nn = n;
    wide num = mul(nn, pow(p, n + 2));
    num = sub(num, mul(pow(p, n + 1), 2 * nn + 1));
    num = add(num, mul(pow(p, n), nn));
    num = add(num, mul(mul(p, p), nn));
    num = add(num, mul(p, 1 - nn));
    wide den = mul(mul(nn, pow(p, n)), mul(p - 1, p - 1));
    return Rational(num, den);
}

inline CompressionReport report(const CodeParams& params) {
    const wide len1 = l1(params);
    const wide len2 = l2_closed(params);
    return CompressionReport{params, len1, len2, s_value(params.base, params.rank), classify(params),
                             Rational(len2, len1)};
}

/// Fill lengths 1, 2, ... with min(remaining, p^k) symbols each.
inline wide l2_oracle_greedy(const CodeParams& params) {
    const wide p = params.p();
    wide remaining = static_cast<wide>(params.alphabet);
    wide total = 0;
    wide pk = 1;
    for (unsigned k = 1; remaining > 0; ++k) {
        pk = exact::mul(pk, p);
        wide take = std::min(remaining, pk);
        total = exact::add(total, exact::mul(k, take));
        remaining -= take;
    }
    return total;
}

inline constexpr std::uint64_t kExhaustiveMaxAlphabet = 6;
inline constexpr std::uint32_t kExhaustiveMaxBase = 5;

/// Minimum total length over every injective assignment of the l_A symbols
/// to distinct base-p strings of length <= n. The total only depends on the
/// image set, so the search walks all l_A-subsets of the candidate strings.
inline wide l2_oracle_exhaustive(const CodeParams& params) {
    if (params.alphabet > kExhaustiveMaxAlphabet || params.p() > kExhaustiveMaxBase)
        throw InstanceTooLarge("exhaustive search limited to l_A <= 6 and p <= 5");

    std::vector<std::vector<std::uint32_t>> candidates;
    for (unsigned k = 1; k <= params.rank; ++k) {
        std::vector<std::uint32_t> word(k, 0);
        while (true) {
            candidates.push_back(word);
            unsigned i = k;
            while (i > 0 && ++word[i - 1] == params.p()) word[--i] = 0;
            if (i == 0) break;
        }
    }

    const std::size_t need = params.alphabet;
    wide best = -1;
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from, wide sum) -> void {
        if (pick.size() == need) {
            if (best < 0 || sum < best) best = sum;
            return;
        }
        for (std::size_t i = from; i + (need - pick.size()) <= candidates.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1, sum + static_cast<wide>(candidates[i].size()));
            pick.pop_back();
        }
    };
    search(search, 0, 0);
    return best;
}

/// One report per base in [p_lo, p_hi], ascending.
inline std::vector<CompressionReport> sweep(std::uint64_t alphabet, Base p_lo, Base p_hi) {
    if (alphabet < 2) throw AlphabetTooSmall("alphabet size " + std::to_string(alphabet) + " < 2");
    if (p_lo > p_hi || p_hi.value() > alphabet)
        throw BaseOutOfRange("sweep needs 2 <= base-min <= base-max <= alphabet");
    std::vector<CompressionReport> out;
    out.reserve(p_hi.value() - p_lo.value() + 1);
    for (std::uint32_t p = p_lo.value(); p <= p_hi.value(); ++p)
        out.push_back(report(decompose(alphabet, validate_base(p))));
    return out;
}

struct OptimalBase {
    Base base;
    Rational kmin;
};

/// Base in [2, min(l_A, 2^16)] with the smallest k_min; ties go to the
/// smaller base.
inline OptimalBase optimal_base(std::uint64_t alphabet) {
    if (alphabet < 2) throw AlphabetTooSmall("alphabet size " + std::to_string(alphabet) + " < 2");
    const auto hi = validate_base(std::min<std::uint64_t>(alphabet, kMaxBase));
    OptimalBase best{validate_base(2), Rational(2)};
    for (const auto& r : sweep(alphabet, validate_base(2), hi)) {
        if (r.kmin < best.kmin) best = OptimalBase{r.params.base, r.kmin};
    }
    return best;
}

} // namespace pitr
