// AVX2 + FMA integrands. Compiled with -mavx2 -mfma and only entered after the
// runtime CPU check in dispatch.cpp.
//
// The vector exp/log/expm1/sin below are range-reduced Taylor/atanh series
// carried far enough that truncation is below half an ulp on the reduced
// interval; accuracy vs <cmath> is a few ulp (see test_kernels.cpp).

#include <immintrin.h>

#include <array>
#include <cstddef>

#include "kernels/backends.hpp"
#include "kernels/series.hpp"

namespace nhq::kernels::avx2 {

namespace {

inline __m256d set1(double v) { return _mm256_set1_pd(v); }

constexpr double kLog2e = 1.4426950408889634074;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kTwoOverPi = 0.63661977236758134308;
constexpr double kPio2Hi = 1.5707963267948965579989817342720925807952880859375;
constexpr double kPio2Mid = 6.123233995736766035868820147291818e-17;
constexpr double kPio2Lo = -1.4973849048591698e-33;
constexpr double kSqrt2 = 1.41421356237309504880;

constexpr double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Integer-valued double -> int64 lanes, valid for |v| < 2^51.
inline __m256i to_int64(__m256d v) {
    const __m256d magic = set1(6755399441055744.0);  // 2^52 + 2^51
    const __m256d shifted = _mm256_add_pd(v, magic);
    return _mm256_sub_epi64(_mm256_castpd_si256(shifted), _mm256_castpd_si256(magic));
}

inline __m256d round_nearest(__m256d v) {
    return _mm256_round_pd(v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
}

// exp(x); x < -708.39 flushes to 0, x > 709 saturates to +inf.
__m256d exp_pd(__m256d x) {
    const __m256d xc = _mm256_max_pd(_mm256_min_pd(x, set1(709.0)), set1(-708.39));
    const __m256d n = round_nearest(_mm256_mul_pd(xc, set1(kLog2e)));
    __m256d r = _mm256_fnmadd_pd(n, set1(kLn2Hi), xc);
    r = _mm256_fnmadd_pd(n, set1(kLn2Lo), r);

    // |r| <= ln2/2: degree-13 Taylor is below 1e-17 relative.
    __m256d p = set1(1.0 / factorial(13));
    for (int k = 12; k >= 0; --k) p = _mm256_fmadd_pd(p, r, set1(1.0 / factorial(k)));

    const __m256i biased = _mm256_add_epi64(to_int64(n), _mm256_set1_epi64x(1023));
    const __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
    __m256d result = _mm256_mul_pd(p, scale);

    const __m256d under = _mm256_cmp_pd(x, set1(-708.39), _CMP_LT_OQ);
    const __m256d over = _mm256_cmp_pd(x, set1(709.0), _CMP_GT_OQ);
    result = _mm256_andnot_pd(under, result);
    result = _mm256_blendv_pd(result, set1(__builtin_inf()), over);
    return result;
}

// log(x) for positive normal x.
__m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mantissa_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
    const __m256i two52_bits = _mm256_set1_epi64x(0x4330000000000000LL);

    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mantissa_mask), one_bits));
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, two52_bits)),
                              set1(4503599627370496.0 + 1023.0));

    const __m256d big = _mm256_cmp_pd(m, set1(kSqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, set1(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, set1(1.0)));

    // log m = 2 atanh(s), s = (m-1)/(m+1), |s| <= 0.1716.
    const __m256d f = _mm256_sub_pd(m, set1(1.0));
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(f, set1(2.0)));
    const __m256d z = _mm256_mul_pd(s, s);
    __m256d p = set1(1.0 / 23.0);
    for (int k = 10; k >= 0; --k) p = _mm256_fmadd_pd(p, z, set1(1.0 / (2 * k + 1)));
    const __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), p);

    return _mm256_fmadd_pd(e, set1(kLn2Hi), _mm256_fmadd_pd(e, set1(kLn2Lo), log_m));
}

__m256d expm1_pd(__m256d x) {
    // Series for |x| < 0.5, exp(x) - 1 otherwise.
    __m256d q = set1(1.0 / factorial(16));
    for (int k = 14; k >= 0; --k) q = _mm256_fmadd_pd(q, x, set1(1.0 / factorial(k + 1)));
    const __m256d series = _mm256_mul_pd(x, q);
    const __m256d direct = _mm256_sub_pd(exp_pd(x), set1(1.0));
    const __m256d abs_x = _mm256_andnot_pd(set1(-0.0), x);
    const __m256d small = _mm256_cmp_pd(abs_x, set1(0.5), _CMP_LT_OQ);
    return _mm256_blendv_pd(direct, series, small);
}

__m256d sin_pd(__m256d x) {
    const __m256d n = round_nearest(_mm256_mul_pd(x, set1(kTwoOverPi)));
    __m256d r = _mm256_fnmadd_pd(n, set1(kPio2Hi), x);
    r = _mm256_fnmadd_pd(n, set1(kPio2Mid), r);
    r = _mm256_fnmadd_pd(n, set1(kPio2Lo), r);
    const __m256d z = _mm256_mul_pd(r, r);

    // sin r = r + r z Ps(z), cos r = 1 - z/2 + z^2 Pc(z); |r| <= pi/4.
    __m256d ps = set1(1.0 / factorial(21));
    for (int k = 9; k >= 1; --k) ps = _mm256_fmadd_pd(ps, z, set1((k % 2 ? -1.0 : 1.0) / factorial(2 * k + 1)));
    const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, z), ps, r);

    __m256d pc = set1(1.0 / factorial(20));
    for (int k = 9; k >= 2; --k) pc = _mm256_fmadd_pd(pc, z, set1((k % 2 ? -1.0 : 1.0) / factorial(2 * k)));
    const __m256d cos_r =
        _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_fnmadd_pd(z, set1(0.5), set1(1.0)));

    const __m256i quadrant = _mm256_and_si256(to_int64(n), _mm256_set1_epi64x(3));
    const __m256d use_cos = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(quadrant, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1)));
    const __m256d negate = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(quadrant, _mm256_set1_epi64x(2)), _mm256_set1_epi64x(2)));
    const __m256d v = _mm256_blendv_pd(sin_r, cos_r, use_cos);
    return _mm256_xor_pd(v, _mm256_and_pd(negate, set1(-0.0)));
}

__m256d x_minus_sin_pd(__m256d x) {
    const __m256d z = _mm256_mul_pd(x, x);
    __m256d acc = set1(series::kXMinusSin[6]);
    for (int k = 5; k >= 0; --k) acc = _mm256_fmadd_pd(acc, z, set1(series::kXMinusSin[k]));
    const __m256d small = _mm256_mul_pd(_mm256_mul_pd(x, z), acc);
    const __m256d direct = _mm256_sub_pd(x, sin_pd(x));
    const __m256d abs_x = _mm256_andnot_pd(set1(-0.0), x);
    const __m256d use_series = _mm256_cmp_pd(abs_x, set1(series::kXMinusSinCut), _CMP_LT_OQ);
    return _mm256_blendv_pd(direct, small, use_series);
}

__m256d one_minus_cos_pd(__m256d x) {
    const __m256d s = sin_pd(_mm256_mul_pd(x, set1(0.5)));
    return _mm256_mul_pd(set1(2.0), _mm256_mul_pd(s, s));
}

template <Integrand Kind>
__m256d integrand_pd(const IntegrandParams& p, __m256d w) {
    const __m256d exponent =
        _mm256_fmsub_pd(set1(1.0 + p.mu), log_pd(w), _mm256_div_pd(w, set1(p.wc)));
    const __m256d jw = _mm256_mul_pd(set1(p.j0), exp_pd(exponent));
    const __m256d x = _mm256_mul_pd(w, set1(p.t));
    const __m256d w2 = _mm256_mul_pd(w, w);

    if constexpr (Kind == Integrand::Decoherence) {
        const __m256d em = expm1_pd(_mm256_mul_pd(set1(-p.beta), w));
        const __m256d coth = _mm256_div_pd(_mm256_add_pd(set1(2.0), em), _mm256_sub_pd(set1(0.0), em));
        return _mm256_mul_pd(_mm256_div_pd(_mm256_mul_pd(jw, one_minus_cos_pd(x)), w2), coth);
    } else if constexpr (Kind == Integrand::DecoherenceBetaRate) {
        const __m256d bw = _mm256_mul_pd(set1(-p.beta), w);
        const __m256d em = expm1_pd(bw);
        const __m256d csch2 = _mm256_div_pd(_mm256_mul_pd(set1(4.0), exp_pd(bw)), _mm256_mul_pd(em, em));
        const __m256d base = _mm256_div_pd(_mm256_mul_pd(jw, one_minus_cos_pd(x)), w2);
        return _mm256_mul_pd(_mm256_mul_pd(base, _mm256_mul_pd(set1(-0.5), w)), csch2);
    } else if constexpr (Kind == Integrand::HermitianPhase) {
        return _mm256_div_pd(_mm256_mul_pd(jw, x_minus_sin_pd(x)), w2);
    } else if constexpr (Kind == Integrand::HermitianPhaseRate) {
        return _mm256_div_pd(_mm256_mul_pd(jw, one_minus_cos_pd(x)), w);
    } else if constexpr (Kind == Integrand::BathPhase) {
        return _mm256_div_pd(_mm256_mul_pd(jw, one_minus_cos_pd(x)), w2);
    } else if constexpr (Kind == Integrand::BathPhaseRate) {
        return _mm256_div_pd(_mm256_mul_pd(jw, sin_pd(x)), w);
    } else {
        return jw;
    }
}

template <class VecFn>
void map4(std::span<const double> in, std::span<double> out, VecFn fn, double pad) {
    const std::size_t n = in.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out.data() + i, fn(_mm256_loadu_pd(in.data() + i)));
    if (i < n) {
        alignas(32) std::array<double, 4> buf{pad, pad, pad, pad};
        for (std::size_t k = i; k < n; ++k) buf[k - i] = in[k];
        _mm256_store_pd(buf.data(), fn(_mm256_load_pd(buf.data())));
        for (std::size_t k = i; k < n; ++k) out[k] = buf[k - i];
    }
}

template <Integrand Kind>
void evaluate_kind(const IntegrandParams& p, std::span<const double> w, std::span<double> out) {
    map4(w, out, [&p](__m256d v) { return integrand_pd<Kind>(p, v); }, 1.0);
}

}  // namespace

void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out) {
    switch (kind) {
        case Integrand::Decoherence: return evaluate_kind<Integrand::Decoherence>(p, w, out);
        case Integrand::DecoherenceBetaRate: return evaluate_kind<Integrand::DecoherenceBetaRate>(p, w, out);
        case Integrand::HermitianPhase: return evaluate_kind<Integrand::HermitianPhase>(p, w, out);
        case Integrand::HermitianPhaseRate: return evaluate_kind<Integrand::HermitianPhaseRate>(p, w, out);
        case Integrand::BathPhase: return evaluate_kind<Integrand::BathPhase>(p, w, out);
        case Integrand::BathPhaseRate: return evaluate_kind<Integrand::BathPhaseRate>(p, w, out);
        case Integrand::Spectral: return evaluate_kind<Integrand::Spectral>(p, w, out);
    }
}

void exp(std::span<const double> x, std::span<double> out) { map4(x, out, exp_pd, 0.0); }
void log(std::span<const double> x, std::span<double> out) { map4(x, out, log_pd, 1.0); }
void expm1(std::span<const double> x, std::span<double> out) { map4(x, out, expm1_pd, 0.0); }
void sin(std::span<const double> x, std::span<double> out) { map4(x, out, sin_pd, 0.0); }

}  // namespace nhq::kernels::avx2
