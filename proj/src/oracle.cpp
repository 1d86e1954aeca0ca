#include "b92sec/oracle.hpp"

#include "b92sec/info_analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

namespace b92 {

namespace {

constexpr double kZeroEig = 1e-12;  // absolute floor separating true weights from noise

Eigen::MatrixXd to_eigen(const DenseMatrix& d) {
    return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        d.m.data(), d.dim, d.dim);
}

std::set<word> span_words(const CodeSpec& code) {
    std::vector<BitString> basis = code.checks;
    basis.push_back(code.key_string);
    std::set<word> out;
    for (const auto& v : span_set(basis)) out.insert(v.v);
    return out;
}

} // namespace

bool OracleReport::passes() const {
    return max_offblock_entry <= 1e-14 && max_inblock_magnitude_error <= 1e-14 &&
           max_rank2_residual <= 1e-12 && max_delta_a <= 1e-10 && max_delta_beta <= 1e-10 &&
           info_delta <= 1e-9 && trace_delta <= 1e-12 && min_eigenvalue >= -1e-12 &&
           max_reassembly_delta <= 1e-12 && rank_seen == rank_expected && witness_ok;
}

std::optional<BitString> pairing_string(const CodeSpec& code, BitString w) {
    // Solve <C, v_l> = 0 for all basis strings and <C, w> = 1 over GF(2).
    std::vector<word> lhs;
    std::vector<int> rhs;
    for (const auto& v : code.checks) { lhs.push_back(v.v); rhs.push_back(0); }
    lhs.push_back(code.key_string.v);
    rhs.push_back(0);
    lhs.push_back(w.v);
    rhs.push_back(1);

    const int rows = static_cast<int>(lhs.size());
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = code.n - 1; col >= 0 && rank < rows; --col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (lhs[i] >> col & 1) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(lhs[rank], lhs[sel]);
        std::swap(rhs[rank], rhs[sel]);
        for (int i = 0; i < rows; ++i)
            if (i != rank && (lhs[i] >> col & 1)) { lhs[i] ^= lhs[rank]; rhs[i] ^= rhs[rank]; }
        pivot_col[rank++] = col;
    }
    for (int i = rank; i < rows; ++i)
        if (rhs[i]) return std::nullopt;  // inconsistent: w inside the span

    word c = 0;
    for (int i = 0; i < rank; ++i)
        if (rhs[i]) c |= word(1) << pivot_col[i];
    // Free variables are zero; c's pivot bits alone must satisfy every equation.
    return BitString(c, code.n);
}

OracleReport verify_theorem(const CodeSpec& code, double alpha) {
    OracleReport rep;
    rep.rank_expected = 2 * (1 << (code.n - code.r() - 1));  // both matrices counted

    const double c = std::cos(alpha), s = std::sin(alpha);
    auto in_span = span_words(code);
    auto cosets = coset_partition(code);

    DenseMatrix rho[2] = {dense_density_matrix(code, 0, alpha),
                          dense_density_matrix(code, 1, alpha)};

    const word dim = word(1) << code.n;
    for (int b = 0; b < 2; ++b) {
        double tr = 0;
        for (word j = 0; j < dim; ++j) {
            tr += rho[b].at(int(j), int(j));
            for (word k = j + 1; k < dim; ++k) {
                double entry = rho[b].at(int(j), int(k));
                if (in_span.count(j ^ k)) {
                    int wj = std::popcount(j), wk = std::popcount(k);
                    double magv = std::pow(c, 2 * code.n - wj - wk) * std::pow(s, wj + wk);
                    rep.max_inblock_magnitude_error =
                        std::max(rep.max_inblock_magnitude_error, std::abs(std::abs(entry) - magv));
                } else {
                    rep.max_offblock_entry = std::max(rep.max_offblock_entry, std::abs(entry));
                }
            }
        }
        rep.trace_delta = std::max(rep.trace_delta, std::abs(tr - 1));

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(rho[b]),
                                                          Eigen::EigenvaluesOnly);
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, es.eigenvalues().minCoeff());
        rep.rank_seen += int((es.eigenvalues().array() > kZeroEig).count());
    }

    // One sampled vanishing entry per coset pair: the representatives' XOR is
    // outside the span exactly when the cosets differ.
    for (size_t a = 0; a < cosets.size() && rep.witness_ok; ++a) {
        for (size_t b = a + 1; b < cosets.size(); ++b) {
            BitString w(cosets[a][0] ^ cosets[b][0], code.n);
            auto cw = pairing_string(code, w);
            if (!cw) { rep.witness_ok = false; break; }
            bool good = parity(*cw & w) == 1 && parity(*cw & code.key_string) == 0;
            for (const auto& v : code.checks) good = good && parity(*cw & v) == 0;
            if (!good) { rep.witness_ok = false; break; }
        }
    }

    // Reassemble block states into the dense matrices.
    for (const auto& coset : cosets) {
        auto bs = block_states(code, coset, alpha);
        for (size_t i = 0; i < coset.size(); ++i)
            for (size_t j = 0; j < coset.size(); ++j) {
                double r0 = bs.weight * bs.phi0[i] * bs.phi0[j];
                double r1 = bs.weight * bs.phi1[i] * bs.phi1[j];
                rep.max_reassembly_delta = std::max(
                    {rep.max_reassembly_delta,
                     std::abs(r0 - rho[0].at(int(bs.members[i]), int(bs.members[j]))),
                     std::abs(r1 - rho[1].at(int(bs.members[i]), int(bs.members[j])))});
            }
    }
    return rep;
}

BlockSpectrum brute_force_spectrum(const CodeSpec& code, double alpha) {
    if (code.n > 10) throw CodeError("brute_force_spectrum: n exceeds oracle cap");
    auto cosets = coset_partition(code);
    DenseMatrix rho[2] = {dense_density_matrix(code, 0, alpha),
                          dense_density_matrix(code, 1, alpha)};

    BlockSpectrum spec;
    spec.n = code.n;
    spec.r = code.r();
    spec.alpha = alpha;
    for (const auto& coset : cosets) {
        const int sz = static_cast<int>(coset.size());
        Eigen::MatrixXd blk[2];
        for (int b = 0; b < 2; ++b) {
            blk[b].resize(sz, sz);
            for (int i = 0; i < sz; ++i)
                for (int j = 0; j < sz; ++j)
                    blk[b](i, j) = rho[b].at(int(coset[i]), int(coset[j]));
        }
        Eigen::VectorXd vec[2];
        double a = 0.5 * (blk[0].trace() + blk[1].trace());
        for (int b = 0; b < 2; ++b) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk[b]);
            vec[b] = es.eigenvectors().col(sz - 1);  // eigenvalues ascending
        }
        if (vec[0].dot(vec[1]) < 0) vec[1] = -vec[1];
        // Chord/anti-chord keeps beta accurate even when the states are nearly
        // parallel, where acos of the overlap would lose half the digits.
        double chord = (vec[0] - vec[1]).norm();
        double anti = (vec[0] + vec[1]).norm();
        spec.blocks.push_back({coset[0], a, std::atan2(chord, anti)});
    }
    double total = 0;
    for (const auto& b : spec.blocks) total += b.a;
    for (auto& b : spec.blocks) b.a /= total;
    return spec;
}

void compare_spectra(const BlockSpectrum& fast, const BlockSpectrum& oracle, OracleReport& rep) {
    if (fast.blocks.size() != oracle.blocks.size())
        throw CodeError("compare_spectra: block counts differ");
    rep.delta_a.clear();
    rep.delta_beta.clear();
    for (size_t i = 0; i < fast.blocks.size(); ++i) {
        if (fast.blocks[i].rep != oracle.blocks[i].rep)
            throw CodeError("compare_spectra: representative order differs");
        rep.delta_a.push_back(std::abs(fast.blocks[i].a - oracle.blocks[i].a));
        rep.delta_beta.push_back(std::abs(fast.blocks[i].beta - oracle.blocks[i].beta));
        rep.max_delta_a = std::max(rep.max_delta_a, rep.delta_a.back());
        rep.max_delta_beta = std::max(rep.max_delta_beta, rep.delta_beta.back());
    }
    rep.info_delta = std::abs(total_information(fast) - total_information(oracle));
}

OracleReport run_oracle(const CodeSpec& code, double alpha) {
    OracleReport rep = verify_theorem(code, alpha);

    // Per-block rank residuals need the block decomposition, redone here with
    // eigenvectors in hand.
    auto cosets = coset_partition(code);
    DenseMatrix rho[2] = {dense_density_matrix(code, 0, alpha),
                          dense_density_matrix(code, 1, alpha)};
    for (const auto& coset : cosets) {
        const int sz = static_cast<int>(coset.size());
        for (int b = 0; b < 2; ++b) {
            Eigen::MatrixXd blk(sz, sz);
            for (int i = 0; i < sz; ++i)
                for (int j = 0; j < sz; ++j)
                    blk(i, j) = rho[b].at(int(coset[i]), int(coset[j]));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blk, Eigen::EigenvaluesOnly);
            double lead = es.eigenvalues()(sz - 1);
            if (sz > 1 && lead > 0)
                rep.max_rank2_residual = std::max(
                    rep.max_rank2_residual,
                    std::max(std::abs(es.eigenvalues()(sz - 2)), std::abs(es.eigenvalues()(0))) / lead);
        }
    }

    compare_spectra(block_spectrum(code, alpha), brute_force_spectrum(code, alpha), rep);
    return rep;
}

double measurement_sweep_info(double beta, int steps) {
    if (steps < 1000) throw std::domain_error("measurement_sweep_info: steps must be >= 1000");
    auto h2 = [](double p) {
        if (p <= 0 || p >= 1) return 0.0;
        return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
    };
    double best = 0;
    for (int i = 0; i < steps; ++i) {
        double phi = std::numbers::pi * i / steps;
        double q0 = std::cos(phi - beta) * std::cos(phi - beta);
        double q1 = std::cos(phi + beta) * std::cos(phi + beta);
        double mi = h2(0.5 * (q0 + q1)) - 0.5 * (h2(q0) + h2(q1));
        best = std::max(best, mi);
    }
    return best;
}

} // namespace b92
