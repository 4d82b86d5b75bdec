// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <pitr/pitr.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace pitr;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        o.pass = false;
        o.detail += " [runtime limit " + std::to_string(limit_seconds) + " s exceeded]";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

Outcome from(const CheckResult& r) {
    return {r.ok(), std::to_string(r.cases) + " cases" + (r.ok() ? "" : ", counterexample " + *r.counterexample)};
}

} // namespace

int main() {
    criterion("AC1", "published k_min table for l_A = 256", 1.0, [] {
        struct Row {
            std::uint32_t p;
            Rational printed;
        };
        const Row rows[] = {{2, Rational(76, 100)},  {3, Rational(72, 100)},  {4, Rational(89, 100)},
                            {6, Rational(7, 10)},    {13, Rational(74, 100)}, {15, Rational(67, 100)},
                            {16, Rational(97, 100)}, {256, Rational(1)}};
        const Rational tol(75, 10000);
        bool ok = true;
        std::string detail;
        for (const auto& row : rows) {
            const auto k = report(decompose(256, validate_base(row.p))).kmin;
            const auto delta = (k - row.printed).abs();
            ok = ok && delta <= tol;
            detail += "p=" + std::to_string(row.p) + ":" + k.decimal(6) + (delta <= tol ? " " : "(!) ");
        }
        return Outcome{ok, detail};
    });

    criterion("AC2", "closed-form L2 == greedy oracle, p<=16, n<=6, all d", 30.0,
              [] { return from(check_closed_vs_greedy(16, 6)); });

    criterion("AC3", "boundary agreement and full-alphabet identities", 0, [] {
        const auto b = check_boundary(16, 6);
        const auto f = check_full_alphabet(16, 6);
        const bool spot = kmin_full_closed(validate_base(2), 2) == Rational(3, 4);
        const bool ok = b.ok() && f.ok() && spot;
        std::string detail = "boundary " + from(b).detail + "; full-alphabet " + from(f).detail +
                             "; kmin_full_closed(2,2)=" + kmin_full_closed(validate_base(2), 2).fraction();
        return Outcome{ok, detail};
    });

    criterion("AC4", "greedy == exhaustive, p<=5, l_A<=6", 10.0, [] { return from(check_greedy_exhaustive(5, 6)); });

    criterion("AC5", "basic-file payload pits == closed-form L2", 0, [] {
        std::vector<std::pair<std::uint32_t, std::uint64_t>> cases;
        for (std::uint32_t p : {2u, 3u, 13u, 15u, 16u, 255u, 256u}) cases.emplace_back(p, 256);
        for (std::uint32_t p : {2u, 3u})
            for (std::uint64_t la : {4u, 27u, 1000u}) cases.emplace_back(p, la);
        for (auto [p, la] : cases) {
            const auto params = decompose(la, validate_base(p));
            const auto pits = encode(basic_file(la), validate_base(p), 1).payload_pit_count;
            if (static_cast<wide>(pits) != l2_closed(params))
                return Outcome{false, "p=" + std::to_string(p) + " l_A=" + std::to_string(la) + " pits=" +
                                          std::to_string(pits) + " l2=" + exact::to_string(l2_closed(params))};
        }
        return Outcome{true, std::to_string(cases.size()) + " (p, l_A) pairs"};
    });

    criterion("AC6", "codec roundtrip on 1000 random files", 60.0, [] {
        std::mt19937_64 rng(0x5049'5452);
        const std::uint32_t bases[] = {2, 3, 5, 13, 15, 16, 255};
        const std::uint64_t alphabets[] = {4, 27, 256, 1000};
        std::uniform_int_distribution<std::size_t> pick_base(0, 6), pick_alpha(0, 3), size_bytes(0, 65536);
        std::uniform_int_distribution<unsigned> pick_passes(1, 3);
        std::uint64_t symbols = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto p = bases[pick_base(rng)];
            const auto la = alphabets[pick_alpha(rng)];
            const unsigned passes = pick_passes(rng);
            const std::size_t count = size_bytes(rng) / (la > 256 ? 2 : 1);
            std::uniform_int_distribution<std::uint64_t> sym(0, la - 1);
            SymbolFile f{la, std::vector<std::uint64_t>(count)};
            for (auto& s : f.symbols) s = sym(rng);
            symbols += count;
            const auto back = decode(parse(serialize(encode(f, validate_base(p), passes))));
            if (!(back == f))
                return Outcome{false, "mismatch at file " + std::to_string(i) + " p=" + std::to_string(p) +
                                          " l_A=" + std::to_string(la) + " passes=" + std::to_string(passes)};
        }
        return Outcome{true, "1000 files, " + std::to_string(symbols) + " symbols, 0 failures"};
    });

    criterion("AC7", "global optimum for l_A = 256", 0, [] {
        const auto best = optimal_base(256);
        bool ok = best.base.value() == 255 && best.kmin == Rational(257, 512);
        std::string detail = "argmin p=" + std::to_string(best.base.value()) + " k=" + best.kmin.fraction();
        for (const auto& r : sweep(256, validate_base(16), validate_base(255))) {
            if (r.kmin != Rational(512 - static_cast<wide>(r.params.p()), 512)) {
                ok = false;
                detail += "; p=" + std::to_string(r.params.p()) + " gives " + r.kmin.fraction();
            }
        }
        return Outcome{ok, detail + "; k=(512-p)/512 for p in [16,255]"};
    });

    criterion("AC8", "unpack(pack(s)) == s on 10^4 random pit streams", 0, [] {
        std::mt19937_64 rng(8);
        const std::uint32_t bases[] = {2, 3, 10, 255, 65535};
        std::uniform_int_distribution<std::size_t> len(0, 1000);
        for (int i = 0; i < 10000; ++i) {
            const Base base = validate_base(bases[i % 5]);
            std::uniform_int_distribution<std::uint32_t> digit(0, base.value() - 1);
            std::vector<std::uint32_t> d(len(rng));
            for (auto& x : d) x = digit(rng);
            const PitString s(base, d);
            if (!(unpack_pits(pack_pits(s), s.size(), base) == s))
                return Outcome{false, "stream " + std::to_string(i) + " p=" + std::to_string(base.value())};
        }
        return Outcome{true, "10000 streams"};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
