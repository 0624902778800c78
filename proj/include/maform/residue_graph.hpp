// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "maform/matrices.hpp"

namespace maform {

// Operations on residues that are well-defined regardless of the chosen
// lift: multiplication by sqrt(2), the norm t -> t^dagger t, and the
// symmetrization t -> (t + t^dagger)/sqrt(2). Implemented by lifting the
// minimal {0,1}-coefficient representative and reducing.
Residue res_mul_sqrt2(Residue r);
Residue res_norm(Residue r);
Residue res_symm(Residue r);

// One vertex of the k-residue automaton over U(2). A Clifford+T operator
// with least denominator exponent k lands on exactly one vertex (modulo
// the right action of <S,X,w>), and that vertex fixes the offsets between
// 2k and the T-count and H-count of its normal form.
struct ResidueNode {
    const char* id;
    ResidueMat2 rep;
    int dt;          // 2k - t
    int dh;          // 2k - h
    int two_k_min;   // lower bound on 2k at this vertex
    bool two_k_exact;  // whether 2k equals two_k_min exactly
};

// The static vertex table; representatives are pairwise inequivalent.
const std::vector<ResidueNode>& residue_nodes();

// The unique vertex whose representative matches the k-residue of U at
// its least denominator exponent; throws NoNodeError when nothing matches.
const ResidueNode& classify_residue(const Mat2& u);

// T-count and H-count of the normal form of U, read off the vertex table.
std::pair<unsigned, unsigned> predict_counts(const Mat2& u);

// `node=<id> k=<k> t=<t> h=<h> residue=<4x4 digit-strings>`
std::string node_report(const Mat2& u);

// Whether (top, bottom)^T is exactly a unit vector.
bool check_unit_vector(const DOmega& top, const DOmega& bottom);

// The reduction step of the automaton: under the stated residue
// hypotheses at exponents k+1 and k, the k-residue of U is forced into a
// single class. Throws HypothesisError when the hypotheses do not hold.
bool check_reduction(const Mat2& u, unsigned k);

}  // namespace maform
