#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace blockcheck {

// A permutation of {0, ..., degree-1}, stored as its image array.
// Composition convention: (a * b) applies a first, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);                 // identity
    explicit Permutation(std::vector<int> images);    // validates bijectivity

    int degree() const { return static_cast<int>(images_.size()); }
    int operator[](int pt) const { return images_[pt]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;  // this, then rhs
    Permutation power(long long n) const;
    // g^{-1} * (*this) * g
    Permutation conjugated_by(const Permutation& g) const;
    long order() const;

    bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
    auto operator<=>(const Permutation& rhs) const { return images_ <=> rhs.images_; }

    // Smallest moved point, or -1 for the identity.
    int first_moved_point() const;

    std::string cycle_string() const;

private:
    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : p.images()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace blockcheck
