#include "series_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace magnetic::detail {

namespace {

static_assert(GMP_NAIL_BITS == 0, "nail limbs are not supported");
constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t bit_length(const Integer& z) {
    return mpz_sgn(z.get_mpz_t()) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::vector<std::size_t> nonzero_indices(std::span<const Integer> a, std::size_t limit) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < std::min(a.size(), limit); ++i)
        if (mpz_sgn(a[i].get_mpz_t()) != 0) nz.push_back(i);
    return nz;
}

void set_from_limbs(Integer& z, const mp_limb_t* src, std::size_t n) {
    while (n > 0 && src[n - 1] == 0) --n;
    if (n == 0) {
        z = 0;
        return;
    }
    mp_limb_t* dst = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(n));
    std::copy(src, src + n, dst);
    mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(n));
}

// Places |a[i]| at bit offset slot*i; positive and negative parts kept apart.
Integer pack(std::span<const Integer> a, std::size_t n, std::size_t slot) {
    std::size_t limbs = (slot * n) / kLimbBits + 2;
    std::vector<mp_limb_t> pos(limbs, 0), neg(limbs, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        int sgn = mpz_sgn(a[i].get_mpz_t());
        if (sgn == 0) continue;
        auto& target = sgn > 0 ? pos : neg;
        any_neg |= sgn < 0;
        std::size_t bit = slot * i;
        std::size_t base = bit / kLimbBits, off = bit % kLimbBits;
        const mp_limb_t* src = mpz_limbs_read(a[i].get_mpz_t());
        std::size_t sz = mpz_size(a[i].get_mpz_t());
        for (std::size_t j = 0; j < sz; ++j) {
            target[base + j] |= src[j] << off;
            if (off) target[base + j + 1] |= src[j] >> (kLimbBits - off);
        }
    }
    Integer p, m;
    set_from_limbs(p, pos.data(), limbs);
    if (!any_neg) return p;
    set_from_limbs(m, neg.data(), limbs);
    return p - m;
}

// Reads n_out signed digits of width slot from c, whose digits lie in (-2^(slot-1), 2^(slot-1)).
std::vector<Integer> unpack(const Integer& c, std::size_t n_digits, std::size_t n_out, std::size_t slot) {
    std::size_t bias_limbs = (slot * n_digits) / kLimbBits + 2;
    std::vector<mp_limb_t> bias(bias_limbs, 0);
    for (std::size_t k = 0; k < n_digits; ++k) {
        std::size_t bit = slot * k + slot - 1;
        bias[bit / kLimbBits] |= mp_limb_t(1) << (bit % kLimbBits);
    }
    Integer b;
    set_from_limbs(b, bias.data(), bias_limbs);
    Integer biased = c + b;

    const mp_limb_t* limbs = mpz_limbs_read(biased.get_mpz_t());
    std::size_t size = mpz_size(biased.get_mpz_t());
    std::size_t width = slot / kLimbBits + 2;
    std::size_t full = slot / kLimbBits, rem = slot % kLimbBits;
    std::vector<mp_limb_t> tmp(width);
    Integer half;
    mpz_setbit(half.get_mpz_t(), slot - 1);

    std::vector<Integer> out(n_out);
    for (std::size_t k = 0; k < n_out; ++k) {
        std::size_t bit = slot * k;
        std::size_t base = bit / kLimbBits, off = bit % kLimbBits;
        for (std::size_t t = 0; t < width; ++t) {
            std::size_t idx = base + t;
            mp_limb_t lo = idx < size ? limbs[idx] : 0;
            mp_limb_t hi = idx + 1 < size ? limbs[idx + 1] : 0;
            tmp[t] = off ? (lo >> off) | (hi << (kLimbBits - off)) : lo;
        }
        std::size_t used = full;
        if (rem) {
            tmp[full] &= (mp_limb_t(1) << rem) - 1;
            used = full + 1;
        }
        set_from_limbs(out[k], tmp.data(), used);
        out[k] -= half;
    }
    return out;
}

}  // namespace

std::vector<Integer> poly_mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                                         std::size_t n_out) {
    std::vector<Integer> out(n_out, 0);
    auto na = nonzero_indices(a, n_out);
    auto nb = nonzero_indices(b, n_out);
    for (std::size_t i : na) {
        mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j : nb) {
            if (i + j >= n_out) break;
            mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
    return out;
}

std::vector<Integer> poly_mul_kronecker(std::span<const Integer> a, std::span<const Integer> b,
                                        std::size_t n_out) {
    std::size_t na = std::min(a.size(), n_out), nb = std::min(b.size(), n_out);
    if (na == 0 || nb == 0) return std::vector<Integer>(n_out, 0);
    std::size_t bits_a = 0, bits_b = 0;
    for (std::size_t i = 0; i < na; ++i) bits_a = std::max(bits_a, bit_length(a[i]));
    for (std::size_t i = 0; i < nb; ++i) bits_b = std::max(bits_b, bit_length(b[i]));
    if (bits_a == 0 || bits_b == 0) return std::vector<Integer>(n_out, 0);
    std::size_t slot = bits_a + bits_b + std::bit_width(std::min(na, nb)) + 2;

    Integer pa = pack(a, na, slot);
    Integer pb = pack(b, nb, slot);
    Integer pc = pa * pb;
    std::size_t n_digits = na + nb - 1;
    auto out = unpack(pc, n_digits, std::min(n_out, n_digits), slot);
    out.resize(n_out, 0);
    return out;
}

std::vector<Integer> poly_mul(std::span<const Integer> a, std::span<const Integer> b, std::size_t n_out) {
    std::size_t na = std::min(a.size(), n_out), nb = std::min(b.size(), n_out);
    std::size_t nza = 0, nzb = 0, bits_a = 0, bits_b = 0;
    for (std::size_t i = 0; i < na; ++i)
        if (mpz_sgn(a[i].get_mpz_t())) ++nza, bits_a = std::max(bits_a, bit_length(a[i]));
    for (std::size_t i = 0; i < nb; ++i)
        if (mpz_sgn(b[i].get_mpz_t())) ++nzb, bits_b = std::max(bits_b, bit_length(b[i]));
    if (nza == 0 || nzb == 0) return std::vector<Integer>(n_out, 0);

    // Rough operation counts; the constants were tuned on this workload.
    double limbs_a = 1.0 + bits_a / 64.0, limbs_b = 1.0 + bits_b / 64.0;
    double pairs = std::min(static_cast<double>(nza) * nzb, 0.5 * n_out * n_out + n_out);
    double school = pairs * (limbs_a * limbs_b + 2.0);
    double packed = (na + nb) * (bits_a + bits_b + 64.0) / 64.0;
    double kron = 6.0 * packed * (std::log2(packed + 2.0) + 1.0) + 4.0 * n_out * (limbs_a + limbs_b);
    return school <= kron ? poly_mul_schoolbook(a, b, n_out) : poly_mul_kronecker(a, b, n_out);
}

std::vector<Integer> poly_inv_unit(std::span<const Integer> a, std::size_t n) {
    std::vector<Integer> h(n, 0);
    if (n == 0) return h;
    h[0] = 1;
    auto nz = nonzero_indices(a, n);
    Integer acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t i : nz) {
            if (i == 0) continue;
            if (i > k) break;
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), h[k - i].get_mpz_t());
        }
        mpz_neg(h[k].get_mpz_t(), acc.get_mpz_t());
    }
    return h;
}

ScaledVector to_scaled(std::span<const Rational> values) {
    ScaledVector out;
    out.den = lcm_of_denominators(values);
    out.num.resize(values.size());
    bool unit = out.den == 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (unit) {
            out.num[i] = values[i].get_num();
        } else {
            mpz_divexact(out.num[i].get_mpz_t(), out.den.get_mpz_t(), values[i].get_den_mpz_t());
            out.num[i] *= values[i].get_num();
        }
    }
    return out;
}

std::vector<Rational> from_scaled(std::vector<Integer>&& num, const Integer& den) {
    std::vector<Rational> out(num.size());
    bool unit = den == 1;
    for (std::size_t i = 0; i < num.size(); ++i) {
        mpz_swap(mpq_numref(out[i].get_mpq_t()), num[i].get_mpz_t());
        if (!unit) {
            mpz_set(mpq_denref(out[i].get_mpq_t()), den.get_mpz_t());
            out[i].canonicalize();
        }
    }
    return out;
}

}  // namespace magnetic::detail
