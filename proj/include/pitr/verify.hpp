#pragma once

// Exhaustive cross-checks between the closed forms and the oracles. Each
// check stops at the first counterexample and reports how many cases it ran.

#include <pitr/metrics.hpp>

#include <optional>
#include <string>

namespace pitr {

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::optional<std::string> counterexample;

    bool ok() const noexcept { return !counterexample; }
};

namespace detail {

inline std::string params_str(std::uint32_t p, std::uint64_t alphabet, unsigned n, std::uint64_t d) {
    return "p=" + std::to_string(p) + " l_A=" + std::to_string(alphabet) + " n=" + std::to_string(n) +
           " d=" + std::to_string(d);
}

} // namespace detail

/// l2 closed form == greedy oracle over every valid d for p in [2, max_p],
/// n in [1, max_n]. The formula is a parameter so a corrupted one can be fed in.
template <class L2Fn>
CheckResult check_closed_vs_greedy(std::uint32_t max_p, unsigned max_n, L2Fn&& closed) {
    CheckResult r{"closed-form == greedy oracle", 0, std::nullopt};
    for (std::uint32_t pv = 2; pv <= max_p; ++pv) {
        const Base base = validate_base(pv);
        for (unsigned n = 1; n <= max_n; ++n) {
            const std::uint64_t lower = detail::pow_u64(pv, n - 1);
            const std::uint64_t max_d = detail::pow_u64(pv, n) - lower;
            for (std::uint64_t d = 1; d <= max_d; ++d) {
                const std::uint64_t alphabet = lower + d;
                if (alphabet < 2) continue; // n = 1, d = 1 is the 1-symbol alphabet
                const CodeParams params = decompose(alphabet, base);
                ++r.cases;
                if (params.rank != n || params.remainder != d) {
                    r.counterexample = "decompose gave n=" + std::to_string(params.rank) + " d=" +
                                       std::to_string(params.remainder) + " for " +
                                       detail::params_str(pv, alphabet, n, d);
                    return r;
                }
                const wide want = l2_oracle_greedy(params);
                const wide got = closed(params);
                if (got != want) {
                    r.counterexample = detail::params_str(pv, alphabet, n, d) + " closed=" + exact::to_string(got) +
                                       " greedy=" + exact::to_string(want);
                    return r;
                }
            }
        }
    }
    return r;
}

inline CheckResult check_closed_vs_greedy(std::uint32_t max_p, unsigned max_n) {
    return check_closed_vs_greedy(max_p, max_n, [](const CodeParams& c) { return l2_closed(c); });
}

/// Case-a and case-b expressions agree at d = S_{n-1} for n >= 2.
inline CheckResult check_boundary(std::uint32_t max_p, unsigned max_n) {
    CheckResult r{"case a == case b at d = S", 0, std::nullopt};
    for (std::uint32_t pv = 2; pv <= max_p; ++pv) {
        const Base base = validate_base(pv);
        for (unsigned n = 2; n <= max_n; ++n) {
            const wide s = s_value(base, n);
            const wide a = l2_case_a(base, n, s);
            const wide b = l2_case_b(base, n, s);
            ++r.cases;
            if (a != b) {
                r.counterexample = "p=" + std::to_string(pv) + " n=" + std::to_string(n) + " S=" + exact::to_string(s) +
                                   " case_a=" + exact::to_string(a) + " case_b=" + exact::to_string(b);
                return r;
            }
        }
    }
    return r;
}

/// Full alphabet p^n: expansion == generalized closed form, and the k_min
/// closed form == expansion / (n p^n) as reduced rationals.
inline CheckResult check_full_alphabet(std::uint32_t max_p, unsigned max_n) {
    CheckResult r{"full-alphabet identities", 0, std::nullopt};
    for (std::uint32_t pv = 2; pv <= max_p; ++pv) {
        const Base base = validate_base(pv);
        for (unsigned n = 1; n <= max_n; ++n) {
            const std::uint64_t full = detail::pow_u64(pv, n);
            const wide expansion = l2_full(base, n);
            const wide closed = l2_closed(decompose(full, base));
            const Rational k = kmin_full_closed(base, n);
            const Rational ratio(expansion, exact::mul(n, static_cast<wide>(full)));
            ++r.cases;
            if (expansion != closed || k != ratio) {
                r.counterexample = "p=" + std::to_string(pv) + " n=" + std::to_string(n) +
                                   " l2_full=" + exact::to_string(expansion) + " l2_closed=" + exact::to_string(closed) +
                                   " kmin_closed=" + k.fraction() + " l2_full/L1=" + ratio.fraction();
                return r;
            }
        }
    }
    return r;
}

/// Greedy == exhaustive minimum for p in [2, max_p], l_A in [2, max_alphabet].
inline CheckResult check_greedy_exhaustive(std::uint32_t max_p = kExhaustiveMaxBase,
                                           std::uint64_t max_alphabet = kExhaustiveMaxAlphabet) {
    CheckResult r{"greedy == exhaustive", 0, std::nullopt};
    for (std::uint32_t pv = 2; pv <= max_p; ++pv) {
        for (std::uint64_t la = 2; la <= max_alphabet; ++la) {
            const CodeParams params = decompose(la, validate_base(pv));
            const wide g = l2_oracle_greedy(params);
            const wide e = l2_oracle_exhaustive(params);
            ++r.cases;
            if (g != e) {
                r.counterexample = detail::params_str(pv, la, params.rank, params.remainder) +
                                   " greedy=" + exact::to_string(g) + " exhaustive=" + exact::to_string(e);
                return r;
            }
        }
    }
    return r;
}

} // namespace pitr
