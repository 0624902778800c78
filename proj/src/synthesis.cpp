// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/synthesis.hpp"

namespace maform {

namespace {

const ParityMat3 kPatternT = {1, 1, 0, 1, 1, 0, 0, 0, 0};
const ParityMat3 kPatternH = {0, 0, 0, 1, 1, 0, 1, 1, 0};
const ParityMat3 kPatternS = {1, 1, 0, 0, 0, 0, 1, 1, 0};

// Precomputed exact inverse Bloch matrices of the three syllables.
const Mat3& peel_inverse(Syllable3 s) {
    static const Mat3 t_inv = bloch(gate_unitary(Gate::T)).transpose();
    static const Mat3 ht_inv =
        bloch(gate_unitary(Gate::H) * gate_unitary(Gate::T)).transpose();
    static const Mat3 sht_inv =
        bloch(gate_unitary(Gate::S) * gate_unitary(Gate::H) * gate_unitary(Gate::T))
            .transpose();
    switch (s) {
        case Syllable3::T: return t_inv;
        case Syllable3::HT: return ht_inv;
        default: return sht_inv;
    }
}

}  // namespace

const ParityMat3& parity_pattern(Syllable3 s) {
    switch (s) {
        case Syllable3::T: return kPatternT;
        case Syllable3::HT: return kPatternH;
        default: return kPatternS;
    }
}

Syllable3 classify_parity(const Mat3& v) {
    unsigned k = v.lde();
    if (k == 0)
        throw PreconditionError("classify_parity: least denominator exponent is 0");
    ParityMat3 p = parity_mat(v, k);
    int matches = 0;
    Syllable3 found = Syllable3::T;
    for (Syllable3 s : {Syllable3::T, Syllable3::HT, Syllable3::SHT}) {
        if (simC_equiv(p, parity_pattern(s))) {
            found = s;
            ++matches;
        }
    }
    if (matches == 0)
        throw NoMatchError("classify_parity: parity matches no syllable pattern");
    if (matches > 1)
        throw AmbiguityError("classify_parity: parity matches several syllable patterns");
    return found;
}

MAForm synth_so3(const Mat3& v, SynthStats* stats) {
    if (!v.is_orthogonal())
        throw NotOrthogonalError("synth_so3: matrix is not exactly orthogonal");
    if (!(v.det() == DRoot2::from_int(1)))
        throw NotSpecialError("synth_so3: determinant is not 1");

    MAForm m;
    Mat3 cur = v;
    unsigned k = cur.lde();
    unsigned iterations = 0;
    bool first = true;
    while (k > 0) {
        Syllable3 s = classify_parity(cur);
        if (s == Syllable3::T) {
            if (!first)
                throw InternalError("synth_so3: lead syllable classified mid-sequence");
            m.lead_t = true;
        } else {
            m.syllables.push_back(s == Syllable3::HT ? MASyl::HT : MASyl::SHT);
        }
        first = false;
        cur = peel_inverse(s) * cur;
        unsigned k2 = cur.lde();
        if (k2 != k - 1)
            throw KNotDecreasedError("synth_so3: peel did not lower the exponent by 1");
        k = k2;
        ++iterations;
    }
    try {
        m.tail = clifford_from_bloch(cur);
    } catch (const NotCliffordError&) {
        throw InternalError("synth_so3: exponent-0 matrix is not a Bloch Clifford");
    }
    if (stats) stats->iterations = iterations;
    return m;
}

MAForm synth_u2(const Mat2& u, SynthStats* stats) {
    if (!u.is_unitary()) throw NotUnitaryError("synth_u2: matrix is not unitary");
    MAForm m = synth_so3(bloch(u), stats);
    // The SO(3) result is phase-normalized (tail d = 0); recover the phase.
    Mat2 residual = u * eval(m).adjoint();
    if (!residual.e[1].is_zero() || !residual.e[2].is_zero() ||
        !(residual.e[0] == residual.e[3]))
        throw PhaseError("synth_u2: residual is not a scalar matrix");
    for (int l = 0; l < 8; ++l) {
        if (residual.e[0] == DOmega(ZOmega::omega_power(l), 0)) {
            m.tail.d = static_cast<std::uint8_t>((m.tail.d + l) % 8);
            return m;
        }
    }
    throw PhaseError("synth_u2: residual scalar is not a power of omega");
}

std::array<Integer, 6> decompose_column(const Mat3& v, int col, unsigned k) {
    std::array<Integer, 6> out;
    for (int r = 0; r < 3; ++r) {
        ZRoot2 x = v.at(r, col).numerator_at(k);
        out[2 * r] = x.a();
        out[2 * r + 1] = x.b();
    }
    return out;
}

}  // namespace maform
