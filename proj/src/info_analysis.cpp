#include "b92sec/info_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace b92 {

using std::numbers::ln2;
using std::numbers::pi;

double info_from_sin2beta(double x) {
    x = std::clamp(x, 0.0, 1.0);
    if (x < 0.5) {
        // 1 - h((1-x)/2) = (1/ln 2) Σ_{m>=1} x^{2m} / (2m (2m-1))
        double x2 = x * x, term = x2, sum = 0;
        for (int m = 1; m < 60; ++m) {
            double add = term / (2 * m * (2 * m - 1));
            sum += add;
            if (add < sum * 1e-18) break;
            term *= x2;
        }
        return sum / ln2;
    }
    double p = (1 - x) / 2;
    if (p == 0) return 1.0;
    return 1 + p * std::log2(p) + (1 - p) * std::log2(1 - p);
}

double block_information(double beta) {
    if (!(beta >= -1e-12 && beta <= pi / 4 + 1e-12))
        throw std::domain_error("block_information: beta outside [0, pi/4]");
    return info_from_sin2beta(std::sin(2 * beta));
}

double total_information(const BlockSpectrum& spectrum) {
    double sum = 0;
    for (const auto& b : spectrum.blocks) sum += b.a * info_from_sin2beta(std::sin(2 * b.beta));
    return sum;
}

double bms_closed_form(int n_hat, double alpha) {
    if (n_hat < 1) throw std::domain_error("bms_closed_form: n_hat must be >= 1");
    int k = (n_hat + 1) / 2;
    double binom = 1;
    for (int i = 1; i <= k; ++i) binom *= double(k + i) / i;  // C(2k, k)
    double coeff = n_hat % 2 ? binom / ln2 : binom;
    return coeff * std::pow(alpha, 2 * k);
}

double word_information_exact(int n_hat, double alpha) {
    if (n_hat < 1 || n_hat > kMaxBits)
        throw std::domain_error("word_information_exact: n_hat out of range");
    auto code = CodeSpec::make(n_hat, {}, {}, BitString((word(1) << n_hat) - 1, n_hat));
    return total_information(block_spectrum(code, alpha));
}

std::vector<WordContribution> word_contributions(const CodeSpec& code, double alpha) {
    std::vector<BitString> words = code.checks.empty()
                                       ? std::vector<BitString>{BitString(0, code.n)}
                                       : span_set(code.checks);
    std::map<int, double> exact_cache;
    std::vector<WordContribution> out;
    out.reserve(words.size());
    for (const auto& v : words) {
        WordContribution wc;
        wc.v = v;
        wc.distance = weight(v ^ code.key_string);
        wc.info_eq4 = bms_closed_form(wc.distance, alpha);
        auto [it, fresh] = exact_cache.try_emplace(wc.distance, 0.0);
        if (fresh) it->second = word_information_exact(wc.distance, alpha);
        wc.info_exact = it->second;
        out.push_back(wc);
    }
    return out;
}

double i_sum(const CodeSpec& code, double alpha) {
    double sum = 0;
    for (const auto& wc : word_contributions(code, alpha)) sum += wc.info_eq4;
    return sum;
}

double i_sum_exact(const CodeSpec& code, double alpha) {
    double sum = 0;
    for (const auto& wc : word_contributions(code, alpha)) sum += wc.info_exact;
    return sum;
}

InfoReport conjecture_check(const CodeSpec& code, double alpha) {
    InfoReport rep;
    auto spectrum = block_spectrum(code, alpha);
    rep.per_block.reserve(spectrum.blocks.size());
    for (const auto& b : spectrum.blocks) {
        double info = info_from_sin2beta(std::sin(2 * b.beta));
        rep.i_total += b.a * info;
        rep.per_block.push_back({b.rep, b.a, b.beta, info});
    }
    rep.per_word = word_contributions(code, alpha);
    for (const auto& wc : rep.per_word) {
        rep.i_sum += wc.info_eq4;
        rep.i_sum_exact += wc.info_exact;
    }
    rep.margin = rep.i_sum_exact - rep.i_total;
    rep.conjecture_holds = rep.margin >= 0;
    rep.extrapolated = alpha > 0.3;
    return rep;
}

double hamming_bound(int r, double alpha) {
    if (r < 2) throw std::domain_error("hamming_bound: r must be >= 2");
    double half = double(word(1) << (r - 1));
    return 2.0 / (ln2 * std::sqrt(pi / 2)) * std::sqrt(half) * std::pow(2 * alpha, half);
}

std::vector<ScanRow> conjecture_scan(int max_n, const std::vector<double>& alphas) {
    if (max_n < 1 || max_n > 10) throw std::domain_error("conjecture_scan: max_n must be in [1, 10]");
    std::vector<ScanRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& code : enumerate_code_classes(n, 3)) {
            for (double alpha : alphas) {
                auto rep = conjecture_check(code, alpha);
                rows.push_back({code_id(code), n, code.r(), alpha, rep.i_total, rep.i_sum_exact,
                                rep.margin, rep.conjecture_holds});
            }
        }
    }
    return rows;
}

} // namespace b92
