// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "maform/normal_form.hpp"

namespace maform {

// The leftmost syllable of a normal form, as determined by the k-parity
// pattern of its Bloch matrix.
enum class Syllable3 { T, HT, SHT };

// The fixed parity pattern that identifies each syllable; the three
// patterns are pairwise inequivalent under column permutation.
const ParityMat3& parity_pattern(Syllable3 s);

// Matches parity_mat(V, lde) against the three patterns; exactly one
// matches for any special-orthogonal V over D[sqrt(2)] with lde > 0.
Syllable3 classify_parity(const Mat3& v);

struct SynthStats {
    unsigned iterations = 0;
};

// Exact synthesis from SO(3): peels one syllable per iteration, each peel
// dropping the least denominator exponent by exactly 1, so the loop runs
// lde(V) times. The terminal Clifford is the unique d = 0 phase lift.
MAForm synth_so3(const Mat3& v, SynthStats* stats = nullptr);

// Exact synthesis from U(2), including the global phase: the residual
// phase after the SO(3) step is a power of omega folded into the tail.
MAForm synth_u2(const Mat2& u, SynthStats* stats = nullptr);

// The six integers (a,b,c,d,e,f) of a column presented over sqrt(2)^k:
// entries a + b sqrt(2), c + d sqrt(2), e + f sqrt(2).
std::array<Integer, 6> decompose_column(const Mat3& v, int col, unsigned k);

}  // namespace maform
