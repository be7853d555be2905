#pragma once

#include <string>
#include <vector>

#include "blockcheck/permgroup.hpp"

namespace blockcheck {

// Direct constructions for the bundled corpus. Everything here is built from
// explicit permutations; no external system is consulted.

PermGroup cyclic_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_group(int n);         // order 2n, n >= 2
PermGroup dicyclic_group(int n);         // order 4n, n >= 2; Q8 = dicyclic(2)
PermGroup semidihedral_group(int m);     // order 2^m, m >= 4
PermGroup modular_2group(int m);         // order 2^m, m >= 4
PermGroup elementary_abelian_2(int rank);
PermGroup direct_product(const PermGroup& A, const PermGroup& B);
PermGroup sl_2_3();
PermGroup frobenius_20();
PermGroup c3_rtimes_c8();    // C8 inverting C3, order 24
PermGroup c3_rtimes_q16();   // Q16 inverting C3 through Q16/C8, order 48

// The pullback of S3 -> C2 and Q8 -> C2 inside S3 x Q8 (order 24).
PermGroup small_group_24_4();
// (C4 x C2 x C2) : S3 with self-normalizing Sylow 2-subgroups (order 96).
PermGroup small_group_96_185();
// (C3 x C3) : P, P of order 32 acting through D8 <= GL(2,3) (order 288).
PermGroup small_group_288_375();
// Mathieu group on 11 points.
PermGroup mathieu_11();

struct NamedGroup {
    std::string name;
    PermGroup group;
    unsigned long declared_order;
    std::string provenance;
};

// The bundled verification corpus.
std::vector<NamedGroup> builtin_corpus();

}  // namespace blockcheck
