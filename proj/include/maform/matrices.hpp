// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "maform/rings.hpp"

namespace maform {

// Gate alphabet. W is the scalar omega; E = H S^3 w^3 cycles the Pauli axes.
enum class Gate : char {
    H = 'H',
    S = 'S',
    T = 'T',
    X = 'X',
    Y = 'Y',
    Z = 'Z',
    W = 'W',
    E = 'E',
};

// ---------------------------------------------------------------------------
// Mat2: exact 2x2 matrix over D[omega], row major.
// ---------------------------------------------------------------------------
struct Mat2 {
    std::array<DOmega, 4> e;

    static Mat2 identity() {
        return {{DOmega::from_int(1), DOmega(), DOmega(), DOmega::from_int(1)}};
    }

    const DOmega& at(int r, int c) const { return e[2 * r + c]; }
    DOmega& at(int r, int c) { return e[2 * r + c]; }

    bool operator==(const Mat2&) const = default;

    Mat2 operator*(const Mat2& o) const {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out.at(r, c) = at(r, 0) * o.at(0, c) + at(r, 1) * o.at(1, c);
        return out;
    }

    Mat2 adjoint() const {
        return {{e[0].conj(), e[2].conj(), e[1].conj(), e[3].conj()}};
    }

    bool is_unitary() const { return adjoint() * *this == identity(); }

    unsigned lde() const {
        unsigned k = 0;
        for (const auto& x : e) k = std::max(k, x.lde());
        return k;
    }

    std::string str() const {
        return e[0].str() + "," + e[1].str() + ";" + e[2].str() + "," + e[3].str();
    }
};

// ---------------------------------------------------------------------------
// Mat3: exact 3x3 matrix over D[sqrt(2)], row major.
// ---------------------------------------------------------------------------
struct Mat3 {
    std::array<DRoot2, 9> e;

    static Mat3 identity() {
        Mat3 out;
        for (int i = 0; i < 3; ++i) out.at(i, i) = DRoot2::from_int(1);
        return out;
    }

    const DRoot2& at(int r, int c) const { return e[3 * r + c]; }
    DRoot2& at(int r, int c) { return e[3 * r + c]; }

    bool operator==(const Mat3&) const = default;

    Mat3 operator*(const Mat3& o) const {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                out.at(r, c) = at(r, 0) * o.at(0, c) + at(r, 1) * o.at(1, c) +
                               at(r, 2) * o.at(2, c);
        return out;
    }

    Mat3 transpose() const {
        Mat3 out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.at(r, c) = at(c, r);
        return out;
    }

    DRoot2 det() const {
        auto m = [&](int r, int c) -> const DRoot2& { return at(r, c); };
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    bool is_orthogonal() const { return transpose() * *this == identity(); }
    bool is_special_orthogonal() const {
        return is_orthogonal() && det() == DRoot2::from_int(1);
    }

    unsigned lde() const {
        unsigned k = 0;
        for (const auto& x : e) k = std::max(k, x.lde());
        return k;
    }

    std::string str() const {
        std::string out;
        for (int r = 0; r < 3; ++r) {
            if (r) out += ";";
            for (int c = 0; c < 3; ++c) {
                if (c) out += ",";
                out += at(r, c).str();
            }
        }
        return out;
    }
};

// k-parity and k-residue matrices, componentwise.
using ParityMat3 = std::array<Bit, 9>;
using ResidueMat2 = std::array<Residue, 4>;

inline ParityMat3 parity_mat(const Mat3& v, unsigned k) {
    ParityMat3 out{};
    for (int i = 0; i < 9; ++i) out[i] = v.e[i].k_parity(k);
    return out;
}

inline ResidueMat2 residue_mat(const Mat2& u, unsigned k) {
    ResidueMat2 out{};
    for (int i = 0; i < 4; ++i) out[i] = u.e[i].k_residue(k);
    return out;
}

// Parity matrices are compared modulo the right Bloch-Clifford action,
// which in elementary terms is a permutation of columns.
inline bool simC_equiv(const ParityMat3& p, const ParityMat3& q) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r)
            for (int c = 0; c < 3 && ok; ++c)
                if (p[3 * r + perm[c]] != q[3 * r + c]) ok = false;
        if (ok) return true;
    }
    return false;
}

// Residue matrices are compared modulo the 16-element right action of the
// subgroup generated by S, X and omega: a global digit shift (omega power),
// an optional column swap (X), and an optional shift of the second column
// by two positions (S).
inline bool simS_equiv(const ResidueMat2& r, const ResidueMat2& r2) {
    for (int d = 0; d < 4; ++d) {
        for (int b = 0; b < 2; ++b) {
            for (int m = 0; m < 2; ++m) {
                ResidueMat2 t = r;
                for (auto& x : t) x = x.shifted(d);
                if (b) {
                    std::swap(t[0], t[1]);
                    std::swap(t[2], t[3]);
                }
                if (m) {
                    t[1] = t[1].shifted(2);
                    t[3] = t[3].shifted(2);
                }
                if (t == r2) return true;
            }
        }
    }
    return false;
}

// Exact generator matrices. Y = [[0,-i],[i,0]] so that all three Pauli
// operators are available for the Bloch conversion.
Mat2 gate_unitary(Gate g);

// The U(2) -> SO(3) homomorphism: column j of the result holds the exact
// Pauli coefficients of U sigma_j U^dagger. Global phases map to the
// identity. Requires U unitary over D[omega].
Mat3 bloch(const Mat2& u);

}  // namespace maform
