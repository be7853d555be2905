#include "blockcheck/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blockcheck/errors.hpp"

namespace blockcheck {

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw input_error("permutation images are not a bijection");
        seen[v] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation r;
    r.images_ = std::move(inv);
    return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw input_error("permutation degree mismatch");
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i) img[i] = rhs.images_[images_[i]];
    Permutation r;
    r.images_ = std::move(img);
    return r;
}

Permutation Permutation::power(long long n) const {
    long o = order();
    n %= o;
    if (n < 0) n += o;
    Permutation acc(degree());
    Permutation base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.inverse() * (*this) * g;
}

long Permutation::order() const {
    // lcm of cycle lengths
    std::vector<char> seen(images_.size(), 0);
    long ord = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        int j = i;
        do {
            seen[j] = 1;
            j = images_[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

int Permutation::first_moved_point() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return i;
    return -1;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        os << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) os << ',';
            os << j;
            first = false;
            seen[j] = 1;
            j = images_[j];
        } while (j != i);
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace blockcheck
