#pragma once

// File codec for the pit recoding. Pass 1 maps every symbol to its canonical
// codeword. Each later pass zero-pads the pit stream to a multiple of g (the
// pass-1 rank), reads each g-pit block as a big-endian symbol of the full
// alphabet p^g and recodes it the same way. The code uses every short string
// and so is not prefix-free; each pass stores the codeword length of every
// symbol it emitted, which is what makes decoding unique.

#include <pitr/codebook.hpp>
#include <pitr/exact.hpp>
#include <pitr/pack.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pitr {

inline constexpr unsigned kMaxPasses = 255;

struct SymbolFile {
    std::uint64_t alphabet = 0;
    std::vector<std::uint64_t> symbols;

    friend bool operator==(const SymbolFile&, const SymbolFile&) = default;
};

/// Side information for one pass. lengths[i] is the codeword length of the
/// i-th symbol the pass recoded, in [1, g].
struct PassRecord {
    unsigned g = 0;
    std::uint64_t symbol_count = 0;
    unsigned pad_pits = 0;
    std::vector<std::uint8_t> lengths;

    friend bool operator==(const PassRecord&, const PassRecord&) = default;
};

struct PitrContainer {
    Base base;
    std::uint64_t alphabet = 0;
    std::vector<PassRecord> passes;
    PitString payload;
    std::uint64_t payload_pit_count = 0;
};

/// Every symbol of the alphabet exactly once, ascending.
inline SymbolFile basic_file(std::uint64_t alphabet) {
    if (alphabet < 2) throw AlphabetTooSmall("alphabet size " + std::to_string(alphabet) + " < 2");
    SymbolFile f{alphabet, {}};
    f.symbols.resize(alphabet);
    for (std::uint64_t i = 0; i < alphabet; ++i) f.symbols[i] = i;
    return f;
}

/// Bits per stored length entry: max(1, ceil(log2 g)).
inline unsigned length_width(unsigned g) noexcept {
    return g <= 1 ? 1u : static_cast<unsigned>(std::bit_width(g - 1));
}

/// Codebook for a pass: the file alphabet for pass 1, p^g afterwards.
inline Codebook pass_codebook(Base base, std::uint64_t alphabet, unsigned g, bool first) {
    if (first) return build_codebook(decompose(alphabet, base));
    return build_codebook(decompose(detail::pow_u64(base.value(), g), base));
}

inline PitrContainer encode(const SymbolFile& file, Base base, unsigned passes) {
    if (passes < 1 || passes > kMaxPasses)
        throw PassesOutOfRange("pass count " + std::to_string(passes) + " outside [1, 255]");
    if (file.alphabet > kMaxFileAlphabet)
        throw AlphabetTooLarge("alphabet size " + std::to_string(file.alphabet) + " exceeds 2^32 - 1");
    const CodeParams params = decompose(file.alphabet, base);
    const unsigned g = params.rank;
    const std::uint64_t p = base.value();

    PitrContainer out{base, file.alphabet, {}, PitString(base), 0};
    std::vector<std::uint32_t> stream;
    {
        const Codebook book = build_codebook(params);
        PassRecord rec;
        rec.g = g;
        rec.symbol_count = file.symbols.size();
        rec.lengths.reserve(file.symbols.size());
        for (auto s : file.symbols) {
            const auto word = book.codeword_of(s); // throws SymbolOutOfRange
            rec.lengths.push_back(static_cast<std::uint8_t>(word.length()));
            stream.insert(stream.end(), word.pits.digits().begin(), word.pits.digits().end());
        }
        out.passes.push_back(std::move(rec));
    }

    if (passes > 1) {
        const Codebook book = pass_codebook(base, file.alphabet, g, false);
        for (unsigned pass = 2; pass <= passes; ++pass) {
            PassRecord rec;
            rec.g = g;
            rec.pad_pits = static_cast<unsigned>((g - stream.size() % g) % g);
            stream.resize(stream.size() + rec.pad_pits, 0);
            rec.symbol_count = stream.size() / g;
            rec.lengths.reserve(rec.symbol_count);
            std::vector<std::uint32_t> next;
            next.reserve(stream.size());
            for (std::size_t at = 0; at < stream.size(); at += g) {
                std::uint64_t block = 0;
                for (unsigned j = 0; j < g; ++j) block = block * p + stream[at + j];
                const auto word = book.codeword_of(block);
                rec.lengths.push_back(static_cast<std::uint8_t>(word.length()));
                next.insert(next.end(), word.pits.digits().begin(), word.pits.digits().end());
            }
            stream = std::move(next);
            out.passes.push_back(std::move(rec));
        }
    }

    out.payload_pit_count = stream.size();
    out.payload = PitString(base, std::move(stream));
    return out;
}

inline SymbolFile decode(const PitrContainer& c) {
    if (c.passes.empty()) throw CorruptContainer("container has no pass records");
    if (c.passes.size() > kMaxPasses) throw CorruptContainer("more than 255 pass records");
    if (c.payload.base() != c.base) throw CorruptContainer("payload base differs from header base");
    if (c.payload_pit_count != c.payload.size()) throw CorruptContainer("payload pit count mismatch");
    if (c.alphabet < 2 || c.alphabet > kMaxFileAlphabet) throw CorruptContainer("alphabet size out of range");

    const unsigned g = decompose(c.alphabet, c.base).rank;
    const std::uint64_t p = c.base.value();
    std::vector<std::uint32_t> stream = c.payload.digits();
    std::vector<std::uint64_t> symbols;

    for (std::size_t idx = c.passes.size(); idx-- > 0;) {
        const PassRecord& rec = c.passes[idx];
        const bool first = idx == 0;
        if (rec.g != g) throw CorruptContainer("pass tuple length " + std::to_string(rec.g) + " != " + std::to_string(g));
        if (rec.pad_pits >= g || (first && rec.pad_pits != 0)) throw CorruptContainer("bad pad count");
        if (rec.lengths.size() != rec.symbol_count) throw CorruptContainer("length entries != symbol count");

        const Codebook book = pass_codebook(c.base, c.alphabet, g, first);
        symbols.clear();
        symbols.reserve(rec.symbol_count);
        std::size_t at = 0;
        for (auto len : rec.lengths) {
            if (len < 1 || len > g) throw CorruptContainer("codeword length " + std::to_string(len) + " outside [1, g]");
            if (stream.size() - at < len) throw CorruptContainer("pit stream truncated");
            std::uint64_t value = 0;
            for (unsigned j = 0; j < len; ++j) value = value * p + stream[at++];
            const auto sym = book.symbol_of(len, value);
            if (!sym) throw CorruptContainer("codeword not in codebook image");
            symbols.push_back(*sym);
        }
        if (at != stream.size()) throw CorruptContainer("pit count mismatch: trailing pits after last codeword");

        if (!first) {
            std::vector<std::uint32_t> prev(symbols.size() * g);
            for (std::size_t i = 0; i < symbols.size(); ++i) {
                std::uint64_t v = symbols[i];
                for (unsigned j = g; j-- > 0;) {
                    prev[i * g + j] = static_cast<std::uint32_t>(v % p);
                    v /= p;
                }
            }
            for (unsigned j = 0; j < rec.pad_pits; ++j) {
                if (prev.empty() || prev.back() != 0) throw CorruptContainer("nonzero pad pit");
                prev.pop_back();
            }
            stream = std::move(prev);
        }
    }
    return SymbolFile{c.alphabet, std::move(symbols)};
}

// ---------------------------------------------------------------------------
// Byte format. Header integers are little-endian; the lengths block is
// MSB-first fixed-width (length - 1) entries; the payload is pack_pits output.

inline constexpr std::uint8_t kMagic[4] = {'P', 'I', 'T', 'R'};
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::size_t kHeaderBytes = 4 + 1 + 4 + 4 + 1;
inline constexpr std::size_t kRecordFixedBytes = 1 + 8 + 1 + 8;
inline constexpr std::size_t kPitCountBytes = 8;

inline std::uint64_t lengths_block_bytes(unsigned g, std::uint64_t symbol_count) {
    const unsigned __int128 bits = static_cast<unsigned __int128>(symbol_count) * length_width(g);
    return static_cast<std::uint64_t>((bits + 7) / 8);
}

namespace detail {

inline void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t le(unsigned n) {
        need(n);
        std::uint64_t v = 0;
        for (unsigned i = 0; i < n; ++i) v |= std::uint64_t{bytes_[at_ + i]} << (8 * i);
        at_ += n;
        return v;
    }

    std::span<const std::uint8_t> take(std::uint64_t n) {
        need(n);
        auto s = bytes_.subspan(at_, n);
        at_ += n;
        return s;
    }

    std::size_t remaining() const noexcept { return bytes_.size() - at_; }

private:
    void need(std::uint64_t n) const {
        if (n > remaining()) throw CorruptContainer("container truncated");
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t at_ = 0;
};

} // namespace detail

inline std::vector<std::uint8_t> serialize(const PitrContainer& c) {
    if (c.passes.empty() || c.passes.size() > kMaxPasses) throw CorruptContainer("pass count outside [1, 255]");
    std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.push_back(kVersion);
    detail::put_le(out, c.base.value(), 4);
    detail::put_le(out, c.alphabet, 4);
    out.push_back(static_cast<std::uint8_t>(c.passes.size()));
    for (const auto& rec : c.passes) {
        const unsigned w = length_width(rec.g);
        out.push_back(static_cast<std::uint8_t>(rec.g));
        detail::put_le(out, rec.symbol_count, 8);
        out.push_back(static_cast<std::uint8_t>(rec.pad_pits));
        const std::uint64_t block = lengths_block_bytes(rec.g, rec.lengths.size());
        detail::put_le(out, block, 8);
        const std::size_t start = out.size();
        out.resize(start + block, 0);
        std::uint64_t bit = 0;
        for (auto len : rec.lengths) {
            const unsigned entry = len - 1u;
            for (unsigned b = w; b-- > 0; ++bit) {
                if ((entry >> b) & 1u) out[start + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
            }
        }
    }
    detail::put_le(out, c.payload_pit_count, 8);
    const auto packed = pack_pits(c.payload);
    out.insert(out.end(), packed.begin(), packed.end());
    return out;
}

/// Parses and structurally validates a container; any deviation from the
/// byte format is CorruptContainer.
inline PitrContainer parse(std::span<const std::uint8_t> bytes) {
    detail::Reader in(bytes);
    const auto magic = in.take(4);
    if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic))) throw CorruptContainer("bad magic");
    if (in.le(1) != kVersion) throw CorruptContainer("unsupported version");

    const std::uint64_t raw_p = in.le(4);
    if (raw_p < 2 || raw_p > kMaxBase) throw CorruptContainer("base " + std::to_string(raw_p) + " out of range");
    const Base base = validate_base(raw_p);
    const std::uint64_t alphabet = in.le(4);
    if (alphabet < 2) throw CorruptContainer("alphabet size < 2");
    const unsigned g = decompose(alphabet, base).rank;

    const auto pass_count = static_cast<unsigned>(in.le(1));
    if (pass_count == 0) throw CorruptContainer("zero passes");

    PitrContainer c{base, alphabet, {}, PitString(base), 0};
    for (unsigned i = 0; i < pass_count; ++i) {
        PassRecord rec;
        rec.g = static_cast<unsigned>(in.le(1));
        if (rec.g != g) throw CorruptContainer("pass tuple length " + std::to_string(rec.g) + " != " + std::to_string(g));
        rec.symbol_count = in.le(8);
        rec.pad_pits = static_cast<unsigned>(in.le(1));
        if (rec.pad_pits >= g || (i == 0 && rec.pad_pits != 0)) throw CorruptContainer("bad pad count");
        const std::uint64_t block = in.le(8);
        if (block != lengths_block_bytes(g, rec.symbol_count)) throw CorruptContainer("lengths block size mismatch");
        const auto data = in.take(block);
        const unsigned w = length_width(g);
        rec.lengths.reserve(rec.symbol_count);
        std::uint64_t bit = 0;
        for (std::uint64_t s = 0; s < rec.symbol_count; ++s) {
            unsigned entry = 0;
            for (unsigned b = 0; b < w; ++b, ++bit) entry = (entry << 1) | ((data[bit / 8] >> (7 - bit % 8)) & 1u);
            if (entry + 1 > g) throw CorruptContainer("length entry " + std::to_string(entry + 1) + " exceeds g");
            rec.lengths.push_back(static_cast<std::uint8_t>(entry + 1));
        }
        for (; bit < block * 8; ++bit) {
            if ((data[bit / 8] >> (7 - bit % 8)) & 1u) throw CorruptContainer("nonzero padding in lengths block");
        }
        c.passes.push_back(std::move(rec));
    }

    c.payload_pit_count = in.le(8);
    const auto payload = in.take(in.remaining());
    if (c.payload_pit_count / 8 > payload.size()) throw CorruptContainer("payload pit count exceeds payload");
    c.payload = unpack_pits(payload, c.payload_pit_count, base);
    return c;
}

// ---------------------------------------------------------------------------

struct PassSize {
    std::uint64_t input_symbols = 0;
    std::uint64_t output_pits = 0;
    std::uint64_t record_bytes = 0;
};

struct SizeReport {
    std::vector<PassSize> passes;
    std::uint64_t payload_pits = 0;
    std::uint64_t payload_bytes = 0;
    /// Header, pass records and the payload pit count: everything but the payload.
    std::uint64_t side_channel_bytes = 0;
    std::uint64_t net_bytes = 0;
    /// Pass-1 output pits over n * symbol_count; absent for an empty file.
    std::optional<Rational> pit_ratio;
};

inline SizeReport measure(const PitrContainer& c) {
    SizeReport r;
    r.side_channel_bytes = kHeaderBytes + kPitCountBytes;
    for (const auto& rec : c.passes) {
        PassSize ps;
        ps.input_symbols = rec.symbol_count;
        for (auto len : rec.lengths) ps.output_pits += len;
        ps.record_bytes = kRecordFixedBytes + lengths_block_bytes(rec.g, rec.symbol_count);
        r.side_channel_bytes += ps.record_bytes;
        r.passes.push_back(ps);
    }
    r.payload_pits = c.payload_pit_count;
    r.payload_bytes = packed_size(c.base, c.payload_pit_count);
    r.net_bytes = r.side_channel_bytes + r.payload_bytes;
    if (!c.passes.empty() && c.passes.front().symbol_count > 0) {
        const auto& first = c.passes.front();
        r.pit_ratio = Rational(static_cast<wide>(r.passes.front().output_pits),
                               exact::mul(first.g, static_cast<wide>(first.symbol_count)));
    }
    return r;
}

} // namespace pitr
