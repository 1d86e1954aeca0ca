#include "b92sec/parity_density.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

namespace b92 {

double amplitude(BitString x, BitString j, double alpha) {
    if (x.n != j.n) throw CodeError("amplitude: length mismatch");
    double c = std::cos(alpha), s = std::sin(alpha);
    int k = weight(j);
    double mag = std::pow(c, x.n - k) * std::pow(s, k);
    return parity(x & j) ? -mag : mag;
}

namespace {

struct BasisTables {
    std::vector<word> basis;      // v_1..v_r, v_d
    std::vector<word> span;       // subset XORs, index bit l <-> basis[l]
    std::vector<int> key_side;    // coefficient of v_d per span index
    std::vector<int> sign_par;    // sum of c_l p_l mod 2 per span index
    std::vector<word> rref;       // reduced rows, descending pivot
    word pivots = 0;
    std::vector<int> free_bits;   // non-pivot positions, ascending
};

std::vector<word> rref_rows(std::vector<word> vecs) {
    std::vector<word> rows;
    for (word v : vecs) {
        while (v) {
            int lead = std::bit_width(v) - 1;
            auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](word rw) { return std::bit_width(rw) - 1 == lead; });
            if (it == rows.end()) { rows.push_back(v); break; }
            v ^= *it;
        }
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i] >> (std::bit_width(rows[j]) - 1) & 1) rows[i] ^= rows[j];
    return rows;
}

BasisTables make_tables(const CodeSpec& code) {
    BasisTables t;
    for (const auto& c : code.checks) t.basis.push_back(c.v);
    t.basis.push_back(code.key_string.v);

    const int d = static_cast<int>(t.basis.size());
    t.span.assign(size_t(1) << d, 0);
    t.key_side.assign(size_t(1) << d, 0);
    t.sign_par.assign(size_t(1) << d, 0);
    for (word idx = 1; idx < t.span.size(); ++idx) {
        int l = std::countr_zero(idx);
        word prev = idx & (idx - 1);
        t.span[idx] = t.span[prev] ^ t.basis[l];
        t.key_side[idx] = t.key_side[prev] ^ int(l == d - 1);
        t.sign_par[idx] = t.sign_par[prev] ^ (l < d - 1 ? code.check_parities[l] : 0);
    }

    t.rref = rref_rows(t.basis);
    assert(static_cast<int>(t.rref.size()) == d);  // CodeSpec::make guarantees independence
    for (word rw : t.rref) t.pivots |= word(1) << (std::bit_width(rw) - 1);
    for (int b = 0; b < code.n; ++b)
        if (!(t.pivots >> b & 1)) t.free_bits.push_back(b);
    return t;
}

word deposit(word t, const std::vector<int>& positions) {
    word out = 0;
    for (size_t i = 0; i < positions.size(); ++i)
        if (t >> i & 1) out |= word(1) << positions[i];
    return out;
}

std::vector<double> weight_table(int n, double alpha) {
    double c2 = std::cos(alpha) * std::cos(alpha);
    double s2 = std::sin(alpha) * std::sin(alpha);
    std::vector<double> w(n + 1);
    for (int k = 0; k <= n; ++k) w[k] = std::pow(c2, n - k) * std::pow(s2, k);
    return w;
}

// Visits every coset in ascending-representative order with its two key-parity
// weight sums. The representative is the unique member with all pivot bits
// clear, which is also the minimum member.
template <class Fn>
void for_each_coset(const CodeSpec& code, const BasisTables& t, double alpha, Fn&& fn) {
    auto wtab = weight_table(code.n, alpha);
    const word ncosets = word(1) << t.free_bits.size();
    for (word i = 0; i < ncosets; ++i) {
        word rep = deposit(i, t.free_bits);
        double s[2] = {0, 0};
        for (size_t u = 0; u < t.span.size(); ++u)
            s[t.key_side[u]] += wtab[std::popcount(rep ^ t.span[u])];
        fn(rep, s[0], s[1]);
    }
}

double coset_beta(double s0, double s1) {
    // cos 2β ∝ |s0 - s1|, sin 2β ∝ 2√(s0 s1); atan2 keeps both ends of [0, π/4] exact.
    return 0.5 * std::atan2(2 * std::sqrt(s0 * s1), std::abs(s0 - s1));
}

} // namespace

DenseMatrix dense_density_matrix(const CodeSpec& code, int key_bit, double alpha) {
    if (code.n > kMaxDenseBits) throw CodeError("dense_density_matrix: n exceeds dense cap");
    if (key_bit != 0 && key_bit != 1) throw CodeError("key_bit must be 0 or 1");
    const int n = code.n;
    const word dim = word(1) << n;
    double c = std::cos(alpha), s = std::sin(alpha);

    std::vector<double> mag(dim);
    for (word j = 0; j < dim; ++j)
        mag[j] = std::pow(c, n - std::popcount(j)) * std::pow(s, std::popcount(j));

    DenseMatrix rho(static_cast<int>(dim));
    std::vector<double> psi(dim);
    word count = 0;
    for (word x = 0; x < dim; ++x) {
        bool ok = (std::popcount(x & code.key_string.v) & 1) == key_bit;
        for (int l = 0; ok && l < code.r(); ++l)
            ok = (std::popcount(x & code.checks[l].v) & 1) == code.check_parities[l];
        if (!ok) continue;
        ++count;
        for (word j = 0; j < dim; ++j)
            psi[j] = (std::popcount(x & j) & 1) ? -mag[j] : mag[j];
        for (word j = 0; j < dim; ++j) {
            double pj = psi[j];
            for (word k = j; k < dim; ++k) rho.at(int(j), int(k)) += pj * psi[k];
        }
    }
    assert(count == dim >> (code.r() + 1));
    double norm = 1.0 / double(count);
    for (word j = 0; j < dim; ++j)
        for (word k = j; k < dim; ++k) {
            rho.at(int(j), int(k)) *= norm;
            rho.at(int(k), int(j)) = rho.at(int(j), int(k));
        }
    return rho;
}

std::vector<std::vector<word>> coset_partition(const CodeSpec& code) {
    if (code.n > 20) throw CodeError("coset_partition: n too large to materialize");
    auto t = make_tables(code);
    std::vector<std::vector<word>> out;
    out.reserve(size_t(1) << t.free_bits.size());
    for (word i = 0; i < word(1) << t.free_bits.size(); ++i) {
        word rep = deposit(i, t.free_bits);
        std::vector<word> coset;
        coset.reserve(t.span.size());
        for (word sv : t.span) coset.push_back(rep ^ sv);
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

BlockStates block_states(const CodeSpec& code, const std::vector<word>& coset, double alpha) {
    auto t = make_tables(code);
    if (coset.size() != t.span.size()) throw CodeError("block_states: coset has wrong size");
    const word rep = *std::min_element(coset.begin(), coset.end());
    double c = std::cos(alpha), s = std::sin(alpha);

    std::vector<BitString> basis_bs = code.checks;
    basis_bs.push_back(code.key_string);

    BlockStates out;
    out.members = coset;
    std::sort(out.members.begin(), out.members.end());
    out.phi0.resize(coset.size());
    out.phi1.resize(coset.size());
    double norm2 = 0;
    for (size_t i = 0; i < out.members.size(); ++i) {
        word m = out.members[i];
        auto coeff = decompose(BitString(m ^ rep, code.n), basis_bs);
        if (!coeff) throw CodeError("block_states: member outside the coset's span");
        int sig = 0;
        for (int l = 0; l < code.r(); ++l) sig ^= (*coeff)[l] & code.check_parities[l];
        int cd = (*coeff)[code.r()];
        int k = std::popcount(m);
        double magv = std::pow(c, code.n - k) * std::pow(s, k);
        norm2 += magv * magv;
        out.phi0[i] = sig ? -magv : magv;
        out.phi1[i] = (sig ^ cd) ? -magv : magv;
    }
    double inv = norm2 > 0 ? 1.0 / std::sqrt(norm2) : 0.0;
    for (auto& v : out.phi0) v *= inv;
    for (auto& v : out.phi1) v *= inv;

    double total = 0;
    for_each_coset(code, t, alpha, [&](word, double s0, double s1) { total += s0 + s1; });
    out.weight = norm2 / total;
    return out;
}

BlockSpectrum block_spectrum(const CodeSpec& code, double alpha) {
    auto t = make_tables(code);
    BlockSpectrum spec;
    spec.n = code.n;
    spec.r = code.r();
    spec.alpha = alpha;
    spec.blocks.reserve(size_t(1) << t.free_bits.size());
    double total = 0;
    for_each_coset(code, t, alpha, [&](word rep, double s0, double s1) {
        total += s0 + s1;
        spec.blocks.push_back({rep, s0 + s1, coset_beta(s0, s1)});
    });
    for (auto& b : spec.blocks) b.a /= total;
    return spec;
}

} // namespace b92
