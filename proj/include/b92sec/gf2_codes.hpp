#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace b92 {

using word = std::uint64_t;

// Word-sized strings keep every per-coset loop branch-free; 31 admits hamming_code(5).
inline constexpr int kMaxBits = 31;
inline constexpr int kMaxDenseBits = 12;

struct CodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n-bit string; bit 1 of the printed form is the most significant bit,
// so "11000" with n=5 has value 24.
struct BitString {
    word v = 0;
    int n = 0;

    BitString() = default;
    BitString(word value, int length);

    bool operator==(const BitString&) const = default;
    bool operator<(const BitString& o) const { return n != o.n ? n < o.n : v < o.v; }
};

BitString operator^(BitString a, BitString b);
BitString operator&(BitString a, BitString b);

int weight(BitString x);   // n̂(x)
int parity(BitString x);   // p(x)

std::string to_string(BitString x);
BitString bitstring_from_string(std::string_view s);

// All 2^k XOR combinations (zero string included), sorted, duplicates removed.
// A dependent basis is detectable by size() < 2^k.
std::vector<BitString> span_set(const std::vector<BitString>& basis);

// Coefficients c_1..c_k with w = xor of c_l * basis[l], or nullopt if w is
// outside the span. Gaussian elimination over GF(2).
std::optional<std::vector<int>> decompose(BitString w, const std::vector<BitString>& basis);

struct CodeSpec {
    int n = 0;
    std::vector<BitString> checks;      // v_1..v_r
    std::vector<int> check_parities;    // announced p_1..p_r
    BitString key_string;               // v_d
    int key_parity = 0;

    int r() const { return static_cast<int>(checks.size()); }

    // Validates lengths, r+1 <= n, and independence of {v_1..v_r, v_d}.
    static CodeSpec make(int n, std::vector<BitString> checks, std::vector<int> check_parities,
                         BitString key_string, int key_parity = 0);
};

// Parity-check matrix of the [2^r-1, 2^r-1-r] Hamming code: columns are the
// nonzero r-bit words in increasing numeric order; v_d = all-ones.
CodeSpec hamming_code(int r);

// Multiset { n̂(v_l ^ v_d) : v_l in span(checks) }, sorted ascending.
std::vector<int> distance_profile(const CodeSpec& code);

// Text format: line 1 "n r"; r lines "check_bits parity"; last line "v_d key_parity".
CodeSpec load_code(std::istream& in, const std::string& source_name = "<stream>");
CodeSpec load_code_string(const std::string& text, const std::string& source_name = "<string>");
CodeSpec load_code_file(const std::string& path);
void save_code(std::ostream& out, const CodeSpec& code);

std::string code_id(const CodeSpec& code);

// All codes with this n, r <= min(max_r, n-1), v_d = all-ones, enumerated up to
// symmetry: check spans count once (GL(r,2) row action) and bit permutations are
// quotiented out by canonicalizing the check-column multiset.
std::vector<CodeSpec> enumerate_code_classes(int n, int max_r = 3);

} // namespace b92
