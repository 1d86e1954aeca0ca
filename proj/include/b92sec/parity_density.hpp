#pragma once

#include "b92sec/gf2_codes.hpp"

#include <vector>

namespace b92 {

// One rank-1 block of the pair of parity density matrices: the coset through
// `rep` carries pure states (cos β, ±sin β) with probability weight a.
struct Block {
    word rep = 0;
    double a = 0;
    double beta = 0;
};

struct BlockSpectrum {
    int n = 0;
    int r = 0;
    double alpha = 0;
    std::vector<Block> blocks;  // ordered by ascending representative
};

// j-th component of ψ_x: (-1)^{p(x & j)} c^{n-n̂(j)} s^{n̂(j)}.
double amplitude(BitString x, BitString j, double alpha);

// Row-major symmetric matrix, kept free of any linear-algebra dependency so the
// oracle module alone decides how to decompose it.
struct DenseMatrix {
    int dim = 0;
    std::vector<double> m;

    explicit DenseMatrix(int d) : dim(d), m(size_t(d) * d, 0.0) {}
    double& at(int i, int j) { return m[size_t(i) * dim + j]; }
    double at(int i, int j) const { return m[size_t(i) * dim + j]; }
};

// ρ for one key parity by direct summation over the 2^{n-r-1} strings that obey
// the code. Oracle-scale only (n <= kMaxDenseBits).
DenseMatrix dense_density_matrix(const CodeSpec& code, int key_bit, double alpha);

// All 2^n indices split into cosets of span{v_1..v_r, v_d}; each coset sorted,
// cosets ordered by their minimum member. Materializes 2^n words (n <= 20).
std::vector<std::vector<word>> coset_partition(const CodeSpec& code);

struct BlockStates {
    std::vector<word> members;  // sorted coset members, phi components align with these
    std::vector<double> phi0;   // normalized block state for key bit 0
    std::vector<double> phi1;   // key bit 1
    double weight = 0;          // a_j, the block's share of the total trace
};

BlockStates block_states(const CodeSpec& code, const std::vector<word>& coset, double alpha);

// The fast path: per-coset weight sums give a_j and β_j without any dense
// matrix. Cosets are enumerated in representative order directly from the
// reduced basis, so nothing 2^n-sized is ever stored.
BlockSpectrum block_spectrum(const CodeSpec& code, double alpha);

} // namespace b92
