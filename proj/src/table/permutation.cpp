#include "babbage/table/permutation.hpp"

#include <numeric>

#include "babbage/errors.hpp"

namespace babbage {

bool is_bijection(const std::vector<std::size_t>& images) {
    std::vector<bool> seen(images.size(), false);
    for (std::size_t v : images) {
        if (v >= images.size() || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (!is_bijection(images_)) {
        throw ContractError("image list is not a permutation");
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return Permutation(std::move(id));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (inner.size() != size()) {
        throw ContractError("composing permutations of different sizes");
    }
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = images_[inner.images_[i]];
    }
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[images_[i]] = i;
    }
    return Permutation(std::move(out));
}

Permutation Permutation::power(long exponent) const {
    std::vector<std::size_t> out(size());
    for (const auto& cycle : cycles()) {
        const long len = static_cast<long>(cycle.size());
        const long shift = ((exponent % len) + len) % len;
        for (long i = 0; i < len; ++i) {
            out[cycle[static_cast<std::size_t>(i)]] = cycle[static_cast<std::size_t>((i + shift) % len)];
        }
    }
    return Permutation(std::move(out));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> visited(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<std::size_t> cycle;
        for (std::size_t p = start; !visited[p]; p = images_[p]) {
            visited[p] = true;
            cycle.push_back(p);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Integer Permutation::order() const {
    Integer acc = 1;
    for (const auto& cycle : cycles()) {
        Integer len = static_cast<unsigned long>(cycle.size());
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), len.get_mpz_t());
    }
    return acc;
}

bool Permutation::power_is_identity(const Integer& n) const {
    for (const auto& cycle : cycles()) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), cycle.size())) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

}  // namespace babbage
