#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockcheck/perm.hpp"

namespace blockcheck {

// Finite permutation group with a base and strong generating set.
// Immutable after construction; safe to share read-only across threads.
class PermGroup {
public:
    PermGroup();  // trivial group on one point
    static PermGroup trivial(int degree);
    explicit PermGroup(std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& base() const { return base_; }
    const std::vector<Permutation>& strong_generators() const { return strong_generators_; }
    const mpz_class& order() const { return order_; }
    unsigned long order_ulong() const;  // throws capacity_error past the cap

    bool contains(const Permutation& g) const;
    bool is_trivial() const { return order_ == 1; }
    bool is_abelian() const;
    bool is_p_group(long p) const;

    // All elements, sorted lexicographically. Lazy; enforces the order cap.
    const std::vector<Permutation>& elements() const;

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;          // points, in discovery order
        std::vector<int> sv_gen;         // per point: index into gens, -1 = base point
        std::vector<int> sv_prev;        // per point: previous point on the path
        bool in_orbit(int pt) const { return sv_prev[pt] != -2; }
        Permutation transversal(int pt, int degree) const;  // maps base_point -> pt
        void recompute_orbit(int degree);
    };

    void build();
    // Strips g through levels [from..); returns (remainder, dropout level).
    std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from) const;

    int degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<int> base_;
    std::vector<Permutation> strong_generators_;
    std::vector<Level> levels_;
    mpz_class order_ = 1;

    struct ElementCache;
    std::shared_ptr<ElementCache> cache_;
};

// Conjugacy class data: representatives are the lex-least class members;
// classes sorted by (element order, class size, representative).
class ConjugacyClasses {
public:
    int count() const { return static_cast<int>(representatives_.size()); }
    const std::vector<Permutation>& representatives() const { return representatives_; }
    const std::vector<unsigned long>& sizes() const { return sizes_; }
    const std::vector<long>& rep_orders() const { return rep_orders_; }
    const std::vector<int>& inverse_map() const { return inverse_map_; }
    const std::map<long, std::vector<int>>& power_maps() const { return power_maps_; }
    long exponent() const { return exponent_; }
    int class_of(const Permutation& g) const;
    const std::vector<Permutation>& class_elements(int idx) const { return members_[idx]; }

    friend ConjugacyClasses conjugacy_classes(const PermGroup& G);

private:
    std::vector<Permutation> representatives_;
    std::vector<unsigned long> sizes_;
    std::vector<long> rep_orders_;
    std::vector<int> inverse_map_;
    std::map<long, std::vector<int>> power_maps_;
    long exponent_ = 1;
    std::vector<std::vector<Permutation>> members_;
    std::unordered_map<Permutation, int, PermHash> element_class_;
};

ConjugacyClasses conjugacy_classes(const PermGroup& G);

PermGroup subgroup_from_elements(int degree, const std::vector<Permutation>& elems);
PermGroup centralizer(const PermGroup& G, const Permutation& x);
PermGroup normalizer(const PermGroup& G, const PermGroup& H);
PermGroup sylow_subgroup(const PermGroup& G, long p);
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seeds);
PermGroup derived_subgroup(const PermGroup& G);

struct SubgroupChainEntry {
    PermGroup subgroup;
    std::string label;
};

// H >= H' >= H'' >= ..., stopping when stable or after n_max steps.
std::vector<SubgroupChainEntry> derived_subgroup_chain(const PermGroup& H, int n_max);

bool is_subgroup(const PermGroup& G, const PermGroup& H);   // H <= G
bool is_normal(const PermGroup& G, const PermGroup& N);     // N normalized by G's generators
bool subgroups_equal(const PermGroup& A, const PermGroup& B);
bool subgroups_conjugate(const PermGroup& G, const PermGroup& A, const PermGroup& B);
bool is_solvable(const PermGroup& G);
bool is_nilpotent(const PermGroup& G);
std::vector<long> prime_divisors(const mpz_class& n);
long p_valuation(const mpz_class& n, long p);
// Prime-power invariant list of an abelian group, e.g. C2 x C4 -> {2, 4}.
std::vector<unsigned long> abelian_invariants(const PermGroup& G);

// true iff x^h = y for some h in H (conjugation action; H need not contain x, y)
bool are_conjugate_in(const PermGroup& H, const Permutation& x, const Permutation& y);

struct RealElements {
    unsigned long count = 0;
    std::vector<Permutation> elements;
};
// Elements x of X with x conjugate to x^{-1} by an element of H.
RealElements real_elements_under(const PermGroup& H, const PermGroup& X);

// G/N realized on the right cosets of N (the regular action of G/N).
class Quotient {
public:
    const PermGroup& group() const { return group_; }
    int index() const { return static_cast<int>(coset_keys_.size()); }
    Permutation image(const Permutation& g) const;
    PermGroup image_subgroup(const PermGroup& H) const;
    PermGroup preimage(const PermGroup& S) const;  // S <= group()
    const PermGroup& kernel() const { return kernel_; }

    friend Quotient quotient_group(const PermGroup& G, const PermGroup& N);

private:
    PermGroup group_;
    PermGroup kernel_;
    std::vector<Permutation> coset_keys_;  // sorted canonical (lex-least) coset members
    std::unordered_map<Permutation, int, PermHash> element_coset_;
};

Quotient quotient_group(const PermGroup& G, const PermGroup& N);

struct StructuralCores {
    PermGroup o_p_prime;          // O_{p'}(G)
    PermGroup o_p_prime_p;        // O_{p',p}(G)
    PermGroup o_p_prime_p_prime;  // O_{p',p,p'}(G)
};
StructuralCores structural_cores(const PermGroup& G, long p);

// Subgroup generated by the real elements of odd order.
PermGroup real_core(const PermGroup& G);

}  // namespace blockcheck
