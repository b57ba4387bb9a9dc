#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ember {

/// Every failure the toolkit raises carries a stable machine-readable token
/// (e.g. "schema", "empty-cohort") next to the human-readable message. The
/// CLI prints the token on its final stderr line so callers can branch on it.
class Error : public std::runtime_error {
public:
    Error(std::string token, const std::string& message)
        : std::runtime_error(message), token_(std::move(token)) {}

    const std::string& token() const { return token_; }

private:
    std::string token_;
};

// 64-bit FNV-1a, used for stream derivation and content digests.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::uint64_t value, std::uint64_t h) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Shortest round-trip decimal form of a double (bit-exact on re-parse).
std::string format_double(double v);

/// Fixed decimal formatting, used where output bytes must be reproducible.
std::string format_fixed(double v, int places);

std::string to_hex(std::uint64_t v);

/// Static partition of [0, n) across `threads` workers. Each index is
/// processed exactly once; callers must write results into per-index slots
/// so the outcome is identical for any thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace ember
