#pragma once

// Canonical pit recoding: symbol i of an l_A-symbol alphabet receives the
// i-th base-p string in shortlex order, so every short string is used before
// any longer one. The map is injective but not prefix-free.
//
// The codebook is implicit. It keeps only the per-length index offsets, so
// block alphabets far larger than memory can still be recoded symbol by
// symbol; words() materializes the table when it is small enough to want it.

#include <pitr/radix.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace pitr {

struct Codeword {
    PitString pits;

    unsigned length() const noexcept { return static_cast<unsigned>(pits.size()); }
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

class Codebook {
public:
    explicit Codebook(const CodeParams& params) : params_(params) {
        const std::uint64_t p = params.p();
        std::uint64_t assigned = 0;
        std::uint64_t pk = 1;
        offsets_.push_back(0); // unused slot so offsets_[k] belongs to length k
        for (unsigned k = 1; assigned < params.alphabet; ++k) {
            if (__builtin_mul_overflow(pk, p, &pk)) pk = std::numeric_limits<std::uint64_t>::max();
            offsets_.push_back(assigned);
            std::uint64_t take = std::min(pk, params.alphabet - assigned);
            counts_.push_back(take);
            assigned += take;
        }
    }

    const CodeParams& params() const noexcept { return params_; }
    Base base() const noexcept { return params_.base; }
    std::uint64_t size() const noexcept { return params_.alphabet; }

    /// Longest codeword actually assigned; at most params().rank.
    unsigned max_length() const noexcept { return static_cast<unsigned>(counts_.size()); }

    /// Number of codewords of length k (zero outside 1..max_length()).
    std::uint64_t count_of_length(unsigned k) const noexcept {
        return (k >= 1 && k <= counts_.size()) ? counts_[k - 1] : 0;
    }

    unsigned length_of(std::uint64_t symbol) const {
        check(symbol);
        unsigned k = max_length();
        while (offsets_[k] > symbol) --k;
        return k;
    }

    Codeword codeword_of(std::uint64_t symbol) const {
        unsigned k = length_of(symbol);
        return Codeword{digits_of(symbol - offsets_[k], k, params_.base)};
    }

    /// Inverse lookup by (length, big-endian digit value); nullopt when the
    /// string is not in the image of the map.
    std::optional<std::uint64_t> symbol_of(unsigned length, std::uint64_t value) const noexcept {
        if (length < 1 || length > max_length()) return std::nullopt;
        if (value >= count_of_length(length)) return std::nullopt;
        return offsets_[length] + value;
    }

    std::optional<std::uint64_t> symbol_of(const Codeword& word) const noexcept {
        if (word.pits.base() != params_.base) return std::nullopt;
        std::uint64_t value = 0;
        for (auto d : word.pits.digits()) value = value * params_.p() + d;
        return symbol_of(word.length(), value);
    }

    std::vector<Codeword> words() const {
        std::vector<Codeword> out;
        out.reserve(size());
        for (std::uint64_t s = 0; s < size(); ++s) out.push_back(codeword_of(s));
        return out;
    }

private:
    void check(std::uint64_t symbol) const {
        if (symbol >= params_.alphabet)
            throw SymbolOutOfRange("symbol " + std::to_string(symbol) + " not below alphabet size " +
                                   std::to_string(params_.alphabet));
    }

    CodeParams params_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::uint64_t> counts_;
};

inline Codebook build_codebook(const CodeParams& params) { return Codebook(params); }

inline Codeword codeword_of(const Codebook& book, std::uint64_t symbol) { return book.codeword_of(symbol); }

/// Codeword length -> number of symbols receiving a codeword of that length.
inline std::map<unsigned, std::uint64_t> length_histogram(const Codebook& book) {
    std::map<unsigned, std::uint64_t> hist;
    for (unsigned k = 1; k <= book.max_length(); ++k) hist[k] = book.count_of_length(k);
    return hist;
}

} // namespace pitr
