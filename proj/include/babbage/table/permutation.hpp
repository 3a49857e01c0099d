#pragma once

#include <cstddef>
#include <vector>

#include "babbage/exact/rational.hpp"

namespace babbage {

/// Bijection on {0, ..., n-1}, stored as its image list.
class Permutation {
public:
    /// Throws ContractError unless `images` is a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    /// (*this) after `inner`: i -> this(inner(i)).
    Permutation compose(const Permutation& inner) const;
    Permutation inverse() const;
    /// Any integer exponent, computed cycle-wise.
    Permutation power(long exponent) const;

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<std::size_t>> cycles() const;
    /// lcm of the cycle lengths.
    Integer order() const;
    /// True iff this^n is the identity, i.e. every cycle length divides n.
    bool power_is_identity(const Integer& n) const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> images_;
};

/// True iff `images` maps {0..n-1} onto itself bijectively.
bool is_bijection(const std::vector<std::size_t>& images);

}  // namespace babbage
