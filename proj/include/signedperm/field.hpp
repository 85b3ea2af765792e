#pragma once

#include <cstdint>
#include <vector>

namespace signedperm {

/// Arithmetic in Z/pZ for an odd prime p.
class PrimeField {
public:
    using Elem = std::uint32_t;

    /// Throws std::invalid_argument unless modulus is an odd prime below 2^31.
    explicit PrimeField(std::uint32_t modulus = 10007);

    std::uint32_t modulus() const noexcept { return p_; }

    Elem reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
    Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
    Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error for zero.
    Elem inv(Elem a) const;

    /// Rank of a rows x cols row-major matrix by Gaussian elimination.
    int rank(std::vector<Elem> matrix, int rows, int cols) const;

private:
    std::uint32_t p_;
};

} // namespace signedperm
