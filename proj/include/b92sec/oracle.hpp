#pragma once

#include "b92sec/gf2_codes.hpp"
#include "b92sec/parity_density.hpp"

#include <optional>
#include <vector>

namespace b92 {

// Residuals from checking the fast path against direct dense computation.
// Everything is a magnitude; zero is perfect agreement.
struct OracleReport {
    double max_offblock_entry = 0;        // entries the zero-pattern theorem says vanish
    double max_inblock_magnitude_error = 0;  // |entry| vs the closed-form c^i s^j magnitude
    double max_rank2_residual = 0;        // per-block second eigenvalue / first
    std::vector<double> delta_a;          // per-block |a_fast - a_oracle|
    std::vector<double> delta_beta;       // per-block |beta_fast - beta_oracle|
    double max_delta_a = 0;
    double max_delta_beta = 0;
    double info_delta = 0;                // |I_fast - I_oracle|
    double trace_delta = 0;               // max |tr(rho_b) - 1|
    double min_eigenvalue = 0;            // most negative eigenvalue across both matrices
    double max_reassembly_delta = 0;      // rebuilt-from-blocks vs dense, entrywise
    int rank_expected = 0;
    int rank_seen = 0;                    // eigenvalues above 1e-12 (both matrices must agree)
    bool witness_ok = true;               // constructive pairing strings found and verified

    bool passes() const;
};

// Dense entry-by-entry verification: zero pattern, in-pattern magnitudes, PSD /
// trace / rank, and a constructive pairing string C (p(C & v_l) = 0 for every
// basis string, p(C & (j^k)) = 1) for one vanishing entry per coset pair.
OracleReport verify_theorem(const CodeSpec& code, double alpha);

// Independent spectrum: reorder the dense matrices into coset blocks and
// eigendecompose each block.
BlockSpectrum brute_force_spectrum(const CodeSpec& code, double alpha);

// Spectrum deltas and the information delta between the two routes; fills the
// comparison fields of `base` (which usually comes from verify_theorem).
void compare_spectra(const BlockSpectrum& fast, const BlockSpectrum& oracle, OracleReport& base);

// Full cross-check at one (code, alpha); the one-stop oracle call.
OracleReport run_oracle(const CodeSpec& code, double alpha);

// Max over `steps` projective two-outcome measurements in the plane of the two
// states (cos β, ±sin β) of the mutual information with the key bit.
double measurement_sweep_info(double beta, int steps);

// Solves for the pairing string used in the zero-pattern argument, or nullopt
// when w lies in the span (no such C exists).
std::optional<BitString> pairing_string(const CodeSpec& code, BitString w);

} // namespace b92
