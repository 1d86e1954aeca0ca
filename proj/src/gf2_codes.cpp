#include "b92sec/gf2_codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace b92 {

static word mask(int n) { return (word(1) << n) - 1; }

BitString::BitString(word value, int length) : v(value), n(length) {
    if (length < 1 || length > kMaxBits)
        throw CodeError("bitstring length " + std::to_string(length) + " outside [1, " +
                        std::to_string(kMaxBits) + "]");
    if (value & ~mask(length))
        throw CodeError("bitstring value has bits beyond position n");
}

static void require_same_length(BitString a, BitString b) {
    if (a.n != b.n) throw CodeError("length mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
}

BitString operator^(BitString a, BitString b) {
    require_same_length(a, b);
    return BitString(a.v ^ b.v, a.n);
}

BitString operator&(BitString a, BitString b) {
    require_same_length(a, b);
    return BitString(a.v & b.v, a.n);
}

int weight(BitString x) { return std::popcount(x.v); }
int parity(BitString x) { return std::popcount(x.v) & 1; }

std::string to_string(BitString x) {
    std::string s(x.n, '0');
    for (int i = 0; i < x.n; ++i)
        if (x.v >> (x.n - 1 - i) & 1) s[i] = '1';
    return s;
}

BitString bitstring_from_string(std::string_view s) {
    if (s.empty() || s.size() > kMaxBits)
        throw CodeError("bitstring literal has unsupported length " + std::to_string(s.size()));
    word v = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw CodeError(std::string("bad character '") + ch + "' in bitstring");
        v = v << 1 | word(ch == '1');
    }
    return BitString(v, static_cast<int>(s.size()));
}

std::vector<BitString> span_set(const std::vector<BitString>& basis) {
    if (basis.empty()) return {BitString(0, 1)};
    int n = basis.front().n;
    std::set<word> seen{0};
    for (const auto& b : basis) {
        if (b.n != n) throw CodeError("span_set: mixed lengths");
        std::vector<word> next;
        for (word w : seen) next.push_back(w ^ b.v);
        seen.insert(next.begin(), next.end());
    }
    std::vector<BitString> out;
    out.reserve(seen.size());
    for (word w : seen) out.emplace_back(w, n);
    return out;
}

std::optional<std::vector<int>> decompose(BitString w, const std::vector<BitString>& basis) {
    const int k = static_cast<int>(basis.size());
    // Eliminate on (row | coefficient-tag) pairs so the combination is recovered directly.
    std::vector<std::pair<word, word>> rows;  // (vector, which basis elements it sums)
    for (int i = 0; i < k; ++i) {
        if (basis[i].n != w.n) throw CodeError("decompose: mixed lengths");
        rows.push_back({basis[i].v, word(1) << i});
    }
    word cur = w.v, tag = 0;
    for (int bit = w.n - 1; bit >= 0; --bit) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](auto& rw) { return rw.first >> bit & 1; });
        if (it == rows.end()) continue;
        auto pivot = *it;
        rows.erase(it);
        for (auto& rw : rows)
            if (rw.first >> bit & 1) { rw.first ^= pivot.first; rw.second ^= pivot.second; }
        if (cur >> bit & 1) { cur ^= pivot.first; tag ^= pivot.second; }
    }
    if (cur != 0) return std::nullopt;
    std::vector<int> coeff(k);
    for (int i = 0; i < k; ++i) coeff[i] = int(tag >> i & 1);
    return coeff;
}

CodeSpec CodeSpec::make(int n, std::vector<BitString> checks, std::vector<int> check_parities,
                        BitString key_string, int key_parity) {
    if (n < 1 || n > kMaxBits) throw CodeError("n outside [1, " + std::to_string(kMaxBits) + "]");
    const int r = static_cast<int>(checks.size());
    if (check_parities.size() != checks.size()) throw CodeError("need one parity bit per check string");
    if (r + 1 > n) throw CodeError("r + 1 exceeds n");
    if (key_string.n != n) throw CodeError("v_d length differs from n");
    if (key_string.v == 0) throw CodeError("v_d must be nonzero");
    for (const auto& c : checks)
        if (c.n != n) throw CodeError("check string length differs from n");
    for (int p : check_parities)
        if (p != 0 && p != 1) throw CodeError("parity bits must be 0 or 1");
    if (key_parity != 0 && key_parity != 1) throw CodeError("key parity must be 0 or 1");

    auto basis = checks;
    basis.push_back(key_string);
    if (span_set(basis).size() != size_t(1) << basis.size())
        throw CodeError("check strings and v_d must be linearly independent");

    CodeSpec code;
    code.n = n;
    code.checks = std::move(checks);
    code.check_parities = std::move(check_parities);
    code.key_string = key_string;
    code.key_parity = key_parity;
    return code;
}

CodeSpec hamming_code(int r) {
    if (r < 2 || r > 5) throw CodeError("hamming_code: r must be in [2, 5]");
    const int n = (1 << r) - 1;
    std::vector<BitString> checks;
    for (int row = 0; row < r; ++row) {
        word v = 0;
        for (int col = 1; col <= n; ++col) {
            int bit = col >> (r - 1 - row) & 1;   // row `row` of column value `col`
            v = v << 1 | word(bit);
        }
        checks.emplace_back(v, n);
    }
    return CodeSpec::make(n, std::move(checks), std::vector<int>(r, 0), BitString(mask(n), n));
}

std::vector<int> distance_profile(const CodeSpec& code) {
    std::vector<BitString> words = code.checks.empty()
                                       ? std::vector<BitString>{BitString(0, code.n)}
                                       : span_set(code.checks);
    std::vector<int> out;
    out.reserve(words.size());
    for (const auto& v : words) out.push_back(weight(v ^ code.key_string));
    std::sort(out.begin(), out.end());
    return out;
}

static int parse_bit(const std::string& tok, const std::string& where) {
    if (tok == "0") return 0;
    if (tok == "1") return 1;
    throw CodeError(where + ": expected a parity bit, got '" + tok + "'");
}

CodeSpec load_code(std::istream& in, const std::string& source_name) {
    auto where = [&](int line) { return source_name + ":" + std::to_string(line); };
    std::string lbuf;
    int lineno = 0;
    auto next_line = [&]() {
        while (std::getline(in, lbuf)) {
            ++lineno;
            auto first = lbuf.find_first_not_of(" \t\r\n");
            if (first == std::string::npos || lbuf[first] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line()) throw CodeError(source_name + ": empty code file");
    std::istringstream head(lbuf);
    int n = 0, r = -1;
    if (!(head >> n >> r)) throw CodeError(where(lineno) + ": expected 'n r'");
    if (n < 1 || n > kMaxBits || r < 0 || r + 1 > n)
        throw CodeError(where(lineno) + ": invalid dimensions n=" + std::to_string(n) +
                        " r=" + std::to_string(r));

    auto read_string_line = [&](const char* what) {
        if (!next_line()) throw CodeError(source_name + ": missing " + what + " line");
        std::istringstream ls(lbuf);
        std::string bits, pbit, extra;
        if (!(ls >> bits >> pbit) || ls >> extra)
            throw CodeError(where(lineno) + ": expected '<bits> <parity>'");
        if (static_cast<int>(bits.size()) != n)
            throw CodeError(where(lineno) + ": string has length " + std::to_string(bits.size()) +
                            ", expected " + std::to_string(n));
        BitString b;
        try {
            b = bitstring_from_string(bits);
        } catch (const CodeError& e) {
            throw CodeError(where(lineno) + ": " + e.what());
        }
        return std::make_pair(b, parse_bit(pbit, where(lineno)));
    };

    std::vector<BitString> checks;
    std::vector<int> parities;
    for (int i = 0; i < r; ++i) {
        auto [b, p] = read_string_line("check");
        checks.push_back(b);
        parities.push_back(p);
    }
    auto [vd, kp] = read_string_line("key string");
    try {
        return CodeSpec::make(n, std::move(checks), std::move(parities), vd, kp);
    } catch (const CodeError& e) {
        throw CodeError(source_name + ": " + e.what());
    }
}

CodeSpec load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CodeError("cannot open code file '" + path + "'");
    return load_code(in, path);
}

void save_code(std::ostream& out, const CodeSpec& code) {
    out << code.n << ' ' << code.r() << '\n';
    for (int l = 0; l < code.r(); ++l)
        out << to_string(code.checks[l]) << ' ' << code.check_parities[l] << '\n';
    out << to_string(code.key_string) << ' ' << code.key_parity << '\n';
}

std::string code_id(const CodeSpec& code) {
    std::string id = "n" + std::to_string(code.n) + "r" + std::to_string(code.r());
    for (int l = 0; l < code.r(); ++l)
        id += (l ? "." : ":") + to_string(code.checks[l]);
    id += ":" + to_string(code.key_string);
    return id;
}

CodeSpec load_code_string(const std::string& text, const std::string& source_name) {
    std::istringstream is(text);
    return load_code(is, source_name);
}

// ---- enumeration up to symmetry ----

namespace {

// Invertible r x r matrices over GF(2), rows as r-bit words.
std::vector<std::array<int, 5>> gl_matrices(int r) {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> rows{};
    const int q = 1 << r;
    auto rank_full = [&](int upto) {
        std::vector<int> basis;
        for (int i = 0; i < upto; ++i) {
            int v = rows[i];
            for (int b : basis) v = std::min(v, v ^ b);
            if (!v) return false;
            basis.push_back(v);
        }
        return true;
    };
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int depth = static_cast<int>(stack.size()) - 1;
        int& cur = stack.back();
        ++cur;
        if (cur >= q) { stack.pop_back(); continue; }
        rows[depth] = cur;
        if (!rank_full(depth + 1)) continue;
        if (depth + 1 == r) { out.push_back(rows); continue; }
        stack.push_back(0);
    }
    return out;
}

int apply_matrix(const std::array<int, 5>& m, int r, int col) {
    int out = 0;
    for (int row = 0; row < r; ++row)
        out = out << 1 | (std::popcount(unsigned(m[row] & col)) & 1);
    return out;
}

// Column multisets are stored as count vectors over the 2^r possible values.
using Counts = std::vector<int>;

bool columns_span(const Counts& counts, int r) {
    std::vector<int> basis;
    for (int v = 0; v < static_cast<int>(counts.size()); ++v) {
        if (!counts[v]) continue;
        int x = v;
        for (int b : basis) x = std::min(x, x ^ b);
        if (x) basis.push_back(x);
    }
    return static_cast<int>(basis.size()) == r;
}

bool all_ones_in_row_span(const Counts& counts, int r) {
    for (int y = 1; y < (1 << r); ++y) {
        bool all = true;
        for (int v = 0; v < (1 << r) && all; ++v)
            if (counts[v] && (std::popcount(unsigned(y & v)) & 1) == 0) all = false;
        if (all) return true;
    }
    return false;
}

Counts canonical_counts(const Counts& counts, int r, const std::vector<std::array<int, 5>>& gl) {
    Counts best = counts;
    Counts c(counts.size());
    for (const auto& m : gl) {
        std::fill(c.begin(), c.end(), 0);
        for (int v = 0; v < static_cast<int>(counts.size()); ++v)
            if (counts[v]) c[apply_matrix(m, r, v)] += counts[v];
        if (c < best) best = c;
    }
    return best;
}

CodeSpec code_from_counts(const Counts& counts, int n, int r) {
    // Columns placed in decreasing value order; the key row is all-ones.
    std::vector<int> cols;
    for (int v = static_cast<int>(counts.size()) - 1; v >= 0; --v)
        cols.insert(cols.end(), counts[v], v);
    std::vector<BitString> checks;
    for (int row = 0; row < r; ++row) {
        word w = 0;
        for (int col : cols) w = w << 1 | word(col >> (r - 1 - row) & 1);
        checks.emplace_back(w, n);
    }
    return CodeSpec::make(n, std::move(checks), std::vector<int>(r, 0),
                          BitString((word(1) << n) - 1, n));
}

} // namespace

std::vector<CodeSpec> enumerate_code_classes(int n, int max_r) {
    if (n < 1 || n > kMaxBits) throw CodeError("enumerate_code_classes: bad n");
    std::vector<CodeSpec> out;
    for (int r = 0; r <= std::min(max_r, n - 1); ++r) {
        if (r == 0) {
            out.push_back(CodeSpec::make(n, {}, {}, BitString(mask(n), n)));
            continue;
        }
        const int q = 1 << r;
        auto gl = gl_matrices(r);
        std::set<Counts> seen;
        // Multisets of n column values: nondecreasing sequences over [0, q).
        std::vector<int> col(n, 0);
        while (true) {
            Counts counts(q, 0);
            for (int c : col) ++counts[c];
            if (columns_span(counts, r) && !all_ones_in_row_span(counts, r)) {
                Counts canon = canonical_counts(counts, r, gl);
                if (seen.insert(canon).second) out.push_back(code_from_counts(canon, n, r));
            }
            int i = n - 1;
            while (i >= 0 && col[i] == q - 1) --i;
            if (i < 0) break;
            int v = col[i] + 1;
            for (int j = i; j < n; ++j) col[j] = v;
        }
    }
    return out;
}

} // namespace b92
