#include "cliquegap/field.hpp"

namespace cg {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw ParameterError("modulus " + std::to_string(p) + " is not prime");
}

std::vector<Fe> PrimeField::add_vec(std::span<const Fe> a, std::span<const Fe> b) const {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    std::vector<Fe> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i]);
    return out;
}

std::vector<Fe> PrimeField::scale_vec(Fe c, std::span<const Fe> a) const {
    std::vector<Fe> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(c, a[i]);
    return out;
}

std::uint64_t point_index(std::span<const Fe> x, std::uint64_t p) {
    std::uint64_t idx = 0;
    for (const Fe c : x) idx = idx * p + c;
    return idx;
}

std::vector<Fe> point_at(std::uint64_t index, std::uint64_t p, std::size_t m) {
    std::vector<Fe> x(m, 0);
    for (std::size_t i = m; i-- > 0;) {
        x[i] = index % p;
        index /= p;
    }
    return x;
}

std::uint64_t pow_u64(std::uint64_t p, std::uint64_t m) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (acc > UINT64_MAX / p) throw ParameterError("p^m overflows 64 bits");
        acc *= p;
    }
    return acc;
}

u128 pow_u128(std::uint64_t p, std::uint64_t m) {
    u128 acc = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (acc > ~u128(0) / p) throw ParameterError("p^m overflows 128 bits");
        acc *= p;
    }
    return acc;
}

std::vector<std::uint64_t> mixed_radix_digits(u128 r, std::span<const u128> radices) {
    std::vector<std::uint64_t> digits(radices.size());
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = static_cast<std::uint64_t>(r % radices[i]);
        r /= radices[i];
    }
    return digits;
}

u128 mixed_radix_size(std::span<const u128> radices) {
    u128 acc = 1;
    for (const u128 rad : radices) {
        if (rad == 0) throw ParameterError("zero radix");
        if (acc > ~u128(0) / rad) throw ParameterError("randomness space overflows 128 bits");
        acc *= rad;
    }
    return acc;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

std::pair<Fe, Fe> distinct_nonzero_pair(std::uint64_t index, std::uint64_t p) {
    const std::uint64_t second_count = p - 2;
    const Fe l1 = 1 + index / second_count;
    std::uint64_t j = index % second_count;
    Fe l2 = 1 + j;
    if (l2 >= l1) ++l2; // skip λ1
    return {l1, l2};
}

} // namespace cg
