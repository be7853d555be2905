#include "blockcheck/corpus.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "blockcheck/errors.hpp"

namespace blockcheck {

namespace {

Permutation cycle(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    return Permutation(img);
}

// Right-regular representation of an abstract group given by an element list
// and a multiplication function.
template <typename T>
std::vector<Permutation> regular_rep(const std::vector<T>& els,
                                     const std::function<T(T, T)>& mul,
                                     const std::vector<T>& gens) {
    std::map<T, int> idx;
    for (std::size_t i = 0; i < els.size(); ++i) idx[els[i]] = static_cast<int>(i);
    std::vector<Permutation> out;
    for (const auto& g : gens) {
        std::vector<int> img(els.size());
        for (std::size_t i = 0; i < els.size(); ++i) img[i] = idx.at(mul(els[i], g));
        out.emplace_back(std::move(img));
    }
    return out;
}

// Q8 on 8 points (regular): elements a^i b^j, b^2 = a^2, bab^-1 = a^-1
std::vector<Permutation> q8_regular() {
    using E = std::pair<int, int>;
    std::vector<E> els;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 4; ++i) els.push_back({i, j});
    std::function<E(E, E)> mul = [](E x, E y) {
        int i = x.first, j = x.second, k = y.first, l = y.second;
        int sign = j ? -1 : 1;
        return E{((i + sign * k + 2 * (j & l)) % 4 + 4) % 4, (j + l) % 2};
    };
    return regular_rep<E>(els, mul, {{1, 0}, {0, 1}});
}

Permutation embed(const Permutation& p, int offset, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
    return Permutation(img);
}

}  // namespace

PermGroup cyclic_group(int n) {
    if (n <= 1) return PermGroup::trivial(1);
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return PermGroup({cycle(n, {c})});
}

PermGroup symmetric_group(int n) {
    if (n <= 1) return PermGroup::trivial(1);
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    if (n == 2) return PermGroup({cycle(2, {{0, 1}})});
    return PermGroup({cycle(n, {{0, 1}}), cycle(n, {c})});
}

PermGroup alternating_group(int n) {
    if (n <= 2) return PermGroup::trivial(std::max(1, n));
    if (n == 3) return PermGroup({cycle(3, {{0, 1, 2}})});
    std::vector<int> c;
    if (n % 2 == 1) {
        c.resize(n);
        std::iota(c.begin(), c.end(), 0);
    } else {
        c.resize(n - 1);
        std::iota(c.begin(), c.end(), 1);
    }
    return PermGroup({cycle(n, {{0, 1, 2}}), cycle(n, {c})});
}

PermGroup dihedral_group(int n) {
    if (n < 2) throw input_error("dihedral_group: n >= 2 required");
    if (n == 2) return PermGroup({cycle(4, {{0, 1}}), cycle(4, {{2, 3}})});  // V4
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return PermGroup({cycle(n, {rot}), Permutation(refl)});
}

PermGroup dicyclic_group(int n) {
    if (n < 2) throw input_error("dicyclic_group: n >= 2 required");
    using E = std::pair<int, int>;  // a^i b^j, i < 2n, j < 2; b^2 = a^n
    std::vector<E> els;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2 * n; ++i) els.push_back({i, j});
    int m = 2 * n;
    std::function<E(E, E)> mul = [m, n](E x, E y) {
        int i = x.first, j = x.second, k = y.first, l = y.second;
        int sign = j ? -1 : 1;
        return E{((i + sign * k + n * (j & l)) % m + m) % m, (j + l) % 2};
    };
    auto gens = regular_rep<E>(els, mul, {{1, 0}, {0, 1}});
    return PermGroup(gens);
}

PermGroup semidihedral_group(int m) {
    if (m < 4) throw input_error("semidihedral_group: order 2^m with m >= 4");
    int n = 1 << (m - 1);
    std::vector<int> rot(n), s(n);
    std::iota(rot.begin(), rot.end(), 0);
    int t = (1 << (m - 2)) - 1;
    for (int i = 0; i < n; ++i) s[i] = (t * i) % n;
    return PermGroup({cycle(n, {rot}), Permutation(s)});
}

PermGroup modular_2group(int m) {
    if (m < 4) throw input_error("modular_2group: order 2^m with m >= 4");
    int n = 1 << (m - 1);
    std::vector<int> rot(n), s(n);
    std::iota(rot.begin(), rot.end(), 0);
    int t = (1 << (m - 2)) + 1;
    for (int i = 0; i < n; ++i) s[i] = (t * i) % n;
    return PermGroup({cycle(n, {rot}), Permutation(s)});
}

PermGroup elementary_abelian_2(int rank) {
    std::vector<Permutation> gens;
    int deg = 2 * rank;
    for (int i = 0; i < rank; ++i) gens.push_back(cycle(deg, {{2 * i, 2 * i + 1}}));
    return PermGroup(gens);
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
    int deg = A.degree() + B.degree();
    std::vector<Permutation> gens;
    for (const auto& a : A.generators()) gens.push_back(embed(a, 0, deg));
    for (const auto& b : B.generators()) gens.push_back(embed(b, A.degree(), deg));
    if (gens.empty()) return PermGroup::trivial(deg);
    return PermGroup(gens);
}

PermGroup sl_2_3() {
    // action on the 8 nonzero vectors of F_3^2; vector (a,b) -> index 3a+b-1 shifted
    auto vec_index = [](int a, int b) {
        int v = 3 * a + b;
        return v - 1;  // skip (0,0)
    };
    auto mat_perm = [&](int m00, int m01, int m10, int m11) {
        std::vector<int> img(8);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == 0 && b == 0) continue;
                int c = (m00 * a + m01 * b) % 3, d = (m10 * a + m11 * b) % 3;
                img[vec_index(a, b)] = vec_index(c, d);
            }
        return Permutation(img);
    };
    return PermGroup({mat_perm(1, 1, 0, 1), mat_perm(0, 2, 1, 0)});
}

PermGroup frobenius_20() {
    std::vector<int> add1(5), mul2(5);
    for (int i = 0; i < 5; ++i) {
        add1[i] = (i + 1) % 5;
        mul2[i] = (2 * i) % 5;
    }
    return PermGroup({Permutation(add1), Permutation(mul2)});
}

PermGroup c3_rtimes_c8() {
    int deg = 3 + 8;
    Permutation a = cycle(deg, {{0, 1, 2}});
    std::vector<int> b(deg);
    std::iota(b.begin(), b.end(), 0);
    b[1] = 2;
    b[2] = 1;  // inverts the 3-cycle
    for (int i = 0; i < 8; ++i) b[3 + i] = 3 + (i + 1) % 8;
    return PermGroup({a, Permutation(b)});
}

PermGroup c3_rtimes_q16() {
    PermGroup q16 = dicyclic_group(4);
    int deg = 3 + q16.degree();
    Permutation a = cycle(deg, {{0, 1, 2}});
    Permutation r = embed(q16.generators()[0], 3, deg);      // acts trivially on C3
    Permutation s0 = embed(q16.generators()[1], 3, deg);
    Permutation s = cycle(deg, {{1, 2}}) * s0;               // s inverts C3
    return PermGroup({a, r, s});
}

PermGroup small_group_24_4() {
    auto q8 = q8_regular();
    int deg = 3 + 8;
    // ((0,1,2), i) and ((0,1), j): components with matching sign under
    // S3 -> C2 and Q8 -> Q8/<i> = C2
    Permutation g1 = cycle(deg, {{0, 1, 2}}) * embed(q8[0], 3, deg);
    Permutation g2 = cycle(deg, {{0, 1}}) * embed(q8[1], 3, deg);
    return PermGroup({g1, g2});
}

PermGroup small_group_96_185() {
    return PermGroup({
        Permutation({0, 1, 3, 2, 12, 13, 15, 14, 8, 9, 11, 10, 4, 5, 7, 6, 18, 17, 16}),
        Permutation({5, 6, 4, 7, 9, 10, 8, 11, 13, 14, 12, 15, 1, 2, 0, 3, 17, 18, 16}),
    });
}

PermGroup small_group_288_375() {
    return PermGroup({
        Permutation({3, 4, 5, 6, 7, 8, 0, 1, 2, 9, 10, 11, 12, 13, 14, 15, 16}),
        Permutation({1, 2, 0, 4, 5, 3, 7, 8, 6, 9, 10, 11, 12, 13, 14, 15, 16}),
        Permutation({0, 2, 1, 3, 5, 4, 6, 8, 7, 16, 15, 14, 13, 9, 10, 12, 11}),
        Permutation({0, 3, 6, 1, 4, 7, 2, 5, 8, 12, 11, 10, 9, 15, 16, 13, 14}),
    });
}

PermGroup mathieu_11() {
    return PermGroup({
        cycle(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
        cycle(11, {{2, 6, 10, 7}, {3, 9, 4, 5}}),
    });
}

std::vector<NamedGroup> builtin_corpus() {
    std::vector<NamedGroup> out;
    auto add = [&out](std::string name, PermGroup g, unsigned long order,
                      std::string prov) {
        out.push_back({std::move(name), std::move(g), order, std::move(prov)});
    };

    add("c2", cyclic_group(2), 2, "cyclic group, natural action");
    add("c3", cyclic_group(3), 3, "cyclic group, natural action");
    add("c4", cyclic_group(4), 4, "cyclic group, natural action");
    add("c6", cyclic_group(6), 6, "cyclic group, natural action");
    add("c8", cyclic_group(8), 8, "cyclic group, natural action");
    add("c12", cyclic_group(12), 12, "cyclic group, natural action");
    add("c16", cyclic_group(16), 16, "cyclic group, natural action");
    add("c32", cyclic_group(32), 32, "cyclic group, natural action");
    add("c2xc2", elementary_abelian_2(2), 4, "direct product of cyclic groups");
    add("c2xc2xc2", elementary_abelian_2(3), 8, "direct product of cyclic groups");
    add("c2xc2xc2xc2", elementary_abelian_2(4), 16, "direct product of cyclic groups");
    add("c4xc2", direct_product(cyclic_group(4), cyclic_group(2)), 8,
        "direct product of cyclic groups");
    add("c4xc4", direct_product(cyclic_group(4), cyclic_group(4)), 16,
        "direct product of cyclic groups");
    add("c8xc2", direct_product(cyclic_group(8), cyclic_group(2)), 16,
        "direct product of cyclic groups");
    add("c4xc2xc2", direct_product(cyclic_group(4), elementary_abelian_2(2)), 16,
        "direct product of cyclic groups");
    add("c6xc2", direct_product(cyclic_group(6), cyclic_group(2)), 12,
        "direct product of cyclic groups");
    add("c12xc4", direct_product(cyclic_group(12), cyclic_group(4)), 48,
        "direct product of cyclic groups");
    add("d8", dihedral_group(4), 8, "dihedral group on 4 points");
    add("d12", dihedral_group(6), 12, "dihedral group on 6 points");
    add("d16", dihedral_group(8), 16, "dihedral group on 8 points");
    add("d32", dihedral_group(16), 32, "dihedral group on 16 points");
    add("q8", dicyclic_group(2), 8, "dicyclic group, regular representation");
    add("q16", dicyclic_group(4), 16, "dicyclic group, regular representation");
    add("q32", dicyclic_group(8), 32, "dicyclic group, regular representation");
    add("dic3", dicyclic_group(3), 12, "dicyclic group, regular representation");
    add("sd16", semidihedral_group(4), 16, "semidihedral group on 8 points");
    add("sd32", semidihedral_group(5), 32, "semidihedral group on 16 points");
    add("m16", modular_2group(4), 16, "modular 2-group on 8 points");
    add("q8xc2", direct_product(dicyclic_group(2), cyclic_group(2)), 16,
        "direct product");
    add("d8xc2", direct_product(dihedral_group(4), cyclic_group(2)), 16,
        "direct product");
    add("d8xs3", direct_product(dihedral_group(4), symmetric_group(3)), 48,
        "direct product");
    add("q8xs3", direct_product(dicyclic_group(2), symmetric_group(3)), 48,
        "direct product");
    add("s3", symmetric_group(3), 6, "symmetric group, natural action");
    add("s4", symmetric_group(4), 24, "symmetric group, natural action");
    add("s5", symmetric_group(5), 120, "symmetric group, natural action");
    add("s6", symmetric_group(6), 720, "symmetric group, natural action");
    add("a4", alternating_group(4), 12, "alternating group, natural action");
    add("a5", alternating_group(5), 60, "alternating group, natural action");
    add("s3xs3", direct_product(symmetric_group(3), symmetric_group(3)), 36,
        "direct product");
    add("s4xc2", direct_product(symmetric_group(4), cyclic_group(2)), 48,
        "direct product");
    add("sl23", sl_2_3(), 24, "SL(2,3) on the 8 nonzero vectors of F_3^2");
    add("f20", frobenius_20(), 20, "C5 : C4 as affine maps of F_5");
    add("c3_c8", c3_rtimes_c8(), 24, "C3 : C8, C8 inverting C3");
    add("c3_q16", c3_rtimes_q16(), 48, "C3 : Q16, Q16 inverting C3 through Q16/C8");
    add("sg24_4", small_group_24_4(), 24,
        "pullback of S3 -> C2 and Q8 -> C2 inside S3 x Q8; "
        "matches the published invariants of SmallGroup(24,4)");
    add("sg96_185", small_group_96_185(), 96,
        "(C4 x C2 x C2) : S3 constructed from explicit permutations; matches the "
        "published invariants of SmallGroup(96,185): 14 classes all real, "
        "self-normalizing Sylow 2 with 14 classes of which 12 real, 32/28 real counts");
    add("sg288_375", small_group_288_375(), 288,
        "(C3 x C3) : P with P of order 32 acting through D8 <= GL(2,3); matches the "
        "published invariants of SmallGroup(288,375): real 2-block with cyclic defect "
        "group of order 8 carrying 4 G-real and 2 N_G(D)-real elements");
    add("m11", mathieu_11(), 7920, "Mathieu group M11, standard generators on 11 points");
    return out;
}

}  // namespace blockcheck
