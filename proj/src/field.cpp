#include "signedperm/field.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace signedperm {

namespace {

bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
    if (modulus == 2) throw std::invalid_argument("characteristic 2 is not supported (the type B form degenerates)");
    if (modulus >= (1u << 31) || !is_prime(modulus))
        throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not an odd prime below 2^31");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = 1 % p_;
    Elem base = a % p_;
    while (e) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1u;
    }
    return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

int PrimeField::rank(std::vector<Elem> m, int rows, int cols) const {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
        const Elem scale = inv(m[rank * cols + c]);
        for (int j = c; j < cols; ++j) m[rank * cols + j] = mul(m[rank * cols + j], scale);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r * cols + c] == 0) continue;
            const Elem factor = m[r * cols + c];
            for (int j = c; j < cols; ++j) m[r * cols + j] = sub(m[r * cols + j], mul(factor, m[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace signedperm
