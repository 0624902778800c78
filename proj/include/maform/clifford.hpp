// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maform/matrices.hpp"

namespace maform {

// Canonical form of a Clifford operator: E^a X^b S^c w^d with a in {0,1,2},
// b in {0,1}, c in {0,1,2,3}, d in {0,...,7}. The 192 tuples are in
// bijection with the 192 Clifford operators.
struct CliffordElt {
    std::uint8_t a = 0, b = 0, c = 0, d = 0;

    bool operator==(const CliffordElt&) const = default;

    int index() const { return ((a * 2 + b) * 4 + c) * 8 + d; }

    static CliffordElt from_index(int i) {
        CliffordElt e;
        e.d = static_cast<std::uint8_t>(i % 8);
        e.c = static_cast<std::uint8_t>((i / 8) % 4);
        e.b = static_cast<std::uint8_t>((i / 32) % 2);
        e.a = static_cast<std::uint8_t>(i / 64);
        return e;
    }

    static CliffordElt identity() { return {}; }

    std::string str() const {
        return std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "," + std::to_string(d);
    }
};

// Coset representative of the tail decomposition C = {I, H, SH} * S.
enum class Head : std::uint8_t { None = 0, H = 1, SH = 2 };

Mat2 clifford_unitary(const CliffordElt& e);
CliffordElt clifford_mul(const CliffordElt& x, const CliffordElt& y);
CliffordElt clifford_inv(const CliffordElt& x);

// Exact lookup among the 192 Clifford matrices; throws NotCliffordError.
CliffordElt clifford_from_unitary(const Mat2& u);
bool is_clifford_unitary(const Mat2& u);

// Membership in the 64-element subgroup generated by S, X and omega.
inline bool in_S(const CliffordElt& e) { return e.a == 0; }

// Unique decomposition c = head * s with head in {I, H, SH} and s in <S,X,w>.
std::pair<Head, CliffordElt> split_clifford(const CliffordElt& c);

// For s in <S,X,w>, the unique s' with s T = T s'.
CliffordElt commute_through_t(const CliffordElt& s);

// The CliffordElt of a Clifford gate symbol; throws NotCliffordError for T.
CliffordElt gate_clifford(Gate g);

const std::vector<CliffordElt>& enumerate_cliffords();
const std::vector<Mat3>& enumerate_bloch_cliffords();

// The unique Clifford with d = 0 among the eight phase preimages of a Bloch
// Clifford; throws NotCliffordError if the matrix is not a Bloch Clifford.
CliffordElt clifford_from_bloch(const Mat3& v);

}  // namespace maform
