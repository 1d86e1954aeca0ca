#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "b92sec/parity_density.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace b92;
using doctest::Approx;

static const double kPi = 3.14159265358979323846;

static CodeSpec five_bit_code() {
    return CodeSpec::make(5,
                          {bitstring_from_string("11000"), bitstring_from_string("01100")},
                          {0, 0}, bitstring_from_string("11111"), 0);
}

TEST_CASE("amplitude signs and magnitudes on two qubits") {
    double alpha = 0.3, c = std::cos(alpha), s = std::sin(alpha);
    CHECK(amplitude(BitString(0, 2), BitString(0, 2), alpha) == Approx(c * c).epsilon(1e-15));
    // x = j = 11: parity(11 & 11) = 0, so the sign is +
    CHECK(amplitude(bitstring_from_string("11"), bitstring_from_string("11"), alpha) ==
          Approx(s * s).epsilon(1e-15));
    // x = j = 10: parity(10 & 10) = 1, sign -
    CHECK(amplitude(bitstring_from_string("10"), bitstring_from_string("10"), alpha) ==
          Approx(-c * s).epsilon(1e-15));
    CHECK(amplitude(bitstring_from_string("01"), bitstring_from_string("10"), alpha) ==
          Approx(c * s).epsilon(1e-15));
}

TEST_CASE("single-qubit density matrix is the pure probe state") {
    CodeSpec c1 = CodeSpec::make(1, {}, {}, bitstring_from_string("1"), 0);
    double alpha = 0.25, c = std::cos(alpha), s = std::sin(alpha);
    DenseMatrix rho = dense_density_matrix(c1, 0, alpha);
    REQUIRE(rho.dim == 2);
    CHECK(rho.at(0, 0) == Approx(c * c).epsilon(1e-15));
    CHECK(rho.at(0, 1) == Approx(c * s).epsilon(1e-15));
    CHECK(rho.at(1, 1) == Approx(s * s).epsilon(1e-15));
    DenseMatrix rho1 = dense_density_matrix(c1, 1, alpha);
    CHECK(rho1.at(0, 1) == Approx(-c * s).epsilon(1e-15));
    CHECK(rho1.at(0, 0) == Approx(c * c).epsilon(1e-15));
}

TEST_CASE("n=2 r=0 density matrix: zero pattern and closed-form entries") {
    CodeSpec c2 = CodeSpec::make(2, {}, {}, bitstring_from_string("11"), 0);
    double alpha = 0.37, c = std::cos(alpha), s = std::sin(alpha);
    DenseMatrix rho = dense_density_matrix(c2, 0, alpha);
    REQUIRE(rho.dim == 4);
    // indices 0..3 = 00,01,10,11; pairs differing outside span{11} vanish
    CHECK(rho.at(0, 1) == 0.0);
    CHECK(rho.at(0, 2) == 0.0);
    CHECK(rho.at(3, 1) == 0.0);
    CHECK(rho.at(3, 2) == 0.0);
    CHECK(rho.at(0, 3) == Approx(c * c * s * s).epsilon(1e-15));
    CHECK(rho.at(0, 0) == Approx(c * c * c * c).epsilon(1e-14));
    CHECK(rho.at(1, 1) == Approx(c * c * s * s).epsilon(1e-14));
    // trace is one
    double tr = 0;
    for (int i = 0; i < 4; ++i) tr += rho.at(i, i);
    CHECK(tr == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coset partition structure") {
    CodeSpec c3 = CodeSpec::make(3, {}, {}, bitstring_from_string("111"), 0);
    auto cosets = coset_partition(c3);
    REQUIRE(cosets.size() == 4);
    // reps ascending, each coset sorted, min member first
    word prev_rep = 0;
    std::set<word> seen;
    for (size_t i = 0; i < cosets.size(); ++i) {
        REQUIRE(cosets[i].size() == 2);
        REQUIRE(std::is_sorted(cosets[i].begin(), cosets[i].end()));
        if (i) REQUIRE(cosets[i][0] > prev_rep);
        prev_rep = cosets[i][0];
        for (auto m : cosets[i]) seen.insert(m);
    }
    CHECK(seen.size() == 8);
    CHECK(cosets[0][0] == 0);
    CHECK(cosets[0][1] == 7);  // 000 pairs with 111
}

TEST_CASE("coset partition of the five-bit example code") {
    auto cosets = coset_partition(five_bit_code());
    REQUIRE(cosets.size() == 4);  // 2^{5-2-1}
    std::set<word> seen;
    for (const auto& cs : cosets) {
        REQUIRE(cs.size() == 8);
        for (auto m : cs) seen.insert(m);
    }
    CHECK(seen.size() == 32);
    // representative of the first coset is the zero string
    CHECK(cosets[0][0] == 0);
}

TEST_CASE("coset representatives are the minimal members with pivot bits cleared") {
    CodeSpec h = hamming_code(3);
    auto cosets = coset_partition(h);
    REQUIRE(cosets.size() == 8);  // 2^{7-3-1}
    for (const auto& cs : cosets) {
        REQUIRE(cs.size() == 16);
        word rep = cs[0];
        for (auto m : cs) REQUIRE(rep <= m);
    }
}

TEST_CASE("block states on one qubit") {
    CodeSpec c1 = CodeSpec::make(1, {}, {}, bitstring_from_string("1"), 0);
    auto cosets = coset_partition(c1);
    REQUIRE(cosets.size() == 1);
    double alpha = 0.3, c = std::cos(alpha), s = std::sin(alpha);
    BlockStates bs = block_states(c1, cosets[0], alpha);
    REQUIRE(bs.members.size() == 2);
    CHECK(bs.weight == Approx(1.0).epsilon(1e-15));
    CHECK(bs.phi0[0] == Approx(c).epsilon(1e-15));
    CHECK(bs.phi0[1] == Approx(s).epsilon(1e-15));
    CHECK(bs.phi1[0] == Approx(c).epsilon(1e-15));
    CHECK(bs.phi1[1] == Approx(-s).epsilon(1e-15));
}

TEST_CASE("block states on the n=2 code reproduce the analytic pair") {
    CodeSpec c2 = CodeSpec::make(2, {}, {}, bitstring_from_string("11"), 0);
    auto cosets = coset_partition(c2);
    double alpha = 0.37, c = std::cos(alpha), s = std::sin(alpha);
    BlockStates bs = block_states(c2, cosets[0], alpha);  // members 00, 11
    double norm = std::sqrt(c * c * c * c + s * s * s * s);
    CHECK(bs.phi0[0] * bs.phi0[0] + bs.phi0[1] * bs.phi0[1] == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(bs.phi0[0]) == Approx(c * c / norm).epsilon(1e-14));
    CHECK(std::abs(bs.phi0[1]) == Approx(s * s / norm).epsilon(1e-14));
    // phi1 flips the sign of the odd-overlap component
    CHECK(bs.phi0[0] == Approx(bs.phi1[0]).epsilon(1e-15));
    CHECK(bs.phi0[1] == Approx(-bs.phi1[1]).epsilon(1e-15));
    // convention: the representative's entry is positive
    CHECK(bs.phi0[0] > 0.0);
}

TEST_CASE("frozen n=2 spectrum at alpha = 0.37") {
    CodeSpec c2 = CodeSpec::make(2, {}, {}, bitstring_from_string("11"), 0);
    BlockSpectrum sp = block_spectrum(c2, 0.37);
    REQUIRE(sp.blocks.size() == 2);
    CHECK(sp.blocks[0].rep == 0);
    CHECK(sp.blocks[0].a == Approx(0.7726679061160775).epsilon(1e-13));
    CHECK(sp.blocks[0].beta == Approx(0.14931811780305473).epsilon(1e-12));
    CHECK(sp.blocks[1].rep == 1);
    CHECK(sp.blocks[1].a == Approx(1.0 - 0.7726679061160775).epsilon(1e-13));
    // the odd coset {01, 10} has equal-weight halves, so beta is exactly pi/4
    CHECK(sp.blocks[1].beta == Approx(kPi / 4).epsilon(1e-15));
}

TEST_CASE("single qubit spectrum has beta equal to alpha") {
    for (double alpha : {0.0, 0.1, 0.5, kPi / 4}) {
        CodeSpec c1 = CodeSpec::make(1, {}, {}, bitstring_from_string("1"), 0);
        BlockSpectrum sp = block_spectrum(c1, alpha);
        REQUIRE(sp.blocks.size() == 1);
        CHECK(sp.blocks[0].a == Approx(1.0).epsilon(1e-15));
        CHECK(sp.blocks[0].beta == Approx(alpha).epsilon(1e-13));
    }
}

TEST_CASE("spectrum invariants across a code sample") {
    std::vector<CodeSpec> sample = {
        five_bit_code(), hamming_code(2), hamming_code(3),
        CodeSpec::make(6, {bitstring_from_string("111000")}, {1}, bitstring_from_string("111111"), 1),
    };
    for (const auto& code : sample) {
        for (double alpha : {0.05, 0.3, 0.7}) {
            BlockSpectrum sp = block_spectrum(code, alpha);
            REQUIRE(int(sp.blocks.size()) == 1 << (code.n - code.r() - 1));
            double asum = 0;
            word prev = 0;
            for (size_t i = 0; i < sp.blocks.size(); ++i) {
                const Block& b = sp.blocks[i];
                REQUIRE(b.a > 0.0);
                REQUIRE(b.beta >= 0.0);
                REQUIRE(b.beta <= kPi / 4 + 1e-15);
                if (i) REQUIRE(b.rep > prev);
                prev = b.rep;
                asum += b.a;
            }
            REQUIRE(asum == Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("spectrum does not depend on check order or check parities") {
    auto base = five_bit_code();
    BlockSpectrum ref = block_spectrum(base, 0.23);

    CodeSpec swapped = CodeSpec::make(5, {base.checks[1], base.checks[0]}, {0, 0},
                                      base.key_string, 0);
    CodeSpec flipped = CodeSpec::make(5, {base.checks[0], base.checks[1]}, {1, 1},
                                      base.key_string, 1);
    // replacing a check by the sum of both spans the same subgroup
    CodeSpec resummed = CodeSpec::make(5, {base.checks[0] ^ base.checks[1], base.checks[1]},
                                       {0, 0}, base.key_string, 0);
    for (const auto& variant : {swapped, flipped, resummed}) {
        BlockSpectrum sp = block_spectrum(variant, 0.23);
        REQUIRE(sp.blocks.size() == ref.blocks.size());
        for (size_t i = 0; i < sp.blocks.size(); ++i) {
            REQUIRE(sp.blocks[i].rep == ref.blocks[i].rep);
            REQUIRE(sp.blocks[i].a == Approx(ref.blocks[i].a).epsilon(1e-12));
            REQUIRE(sp.blocks[i].beta == Approx(ref.blocks[i].beta).scale(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("alpha = 0 collapses every block") {
    BlockSpectrum sp = block_spectrum(five_bit_code(), 0.0);
    for (const auto& b : sp.blocks) CHECK(b.beta == 0.0);
}

TEST_CASE("weights from block_states match spectrum weights") {
    CodeSpec code = five_bit_code();
    double alpha = 0.4;
    auto cosets = coset_partition(code);
    BlockSpectrum sp = block_spectrum(code, alpha);
    REQUIRE(cosets.size() == sp.blocks.size());
    for (size_t i = 0; i < cosets.size(); ++i) {
        BlockStates bs = block_states(code, cosets[i], alpha);
        CHECK(bs.weight == Approx(sp.blocks[i].a).epsilon(1e-13));
        // unit norm states
        double n0 = 0, n1 = 0, ov = 0;
        for (size_t k = 0; k < bs.members.size(); ++k) {
            n0 += bs.phi0[k] * bs.phi0[k];
            n1 += bs.phi1[k] * bs.phi1[k];
            ov += bs.phi0[k] * bs.phi1[k];
        }
        CHECK(n0 == Approx(1.0).epsilon(1e-13));
        CHECK(n1 == Approx(1.0).epsilon(1e-13));
        // overlap encodes the block angle
        CHECK(std::abs(ov) == Approx(std::cos(2 * sp.blocks[i].beta)).epsilon(1e-11));
    }
}

TEST_CASE("dense matrix size guard") {
    CHECK_THROWS_AS(dense_density_matrix(
                        CodeSpec::make(13, {}, {}, BitString((word(1) << 13) - 1, 13), 0), 0, 0.1),
                    CodeError);
}
