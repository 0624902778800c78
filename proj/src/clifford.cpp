// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/clifford.hpp"

#include <unordered_map>
#include <utility>

namespace maform {

Mat2 gate_unitary(Gate g) {
    const DOmega zero;
    const DOmega one = DOmega::from_int(1);
    const DOmega iu = DOmega(ZOmega::omega_power(2), 0);
    switch (g) {
        case Gate::H: {
            DOmega h(ZOmega::from_int(1), 1);  // 1/sqrt(2)
            return {{h, h, h, -h}};
        }
        case Gate::S:
            return {{one, zero, zero, iu}};
        case Gate::T:
            return {{one, zero, zero, DOmega(ZOmega::omega_power(1), 0)}};
        case Gate::X:
            return {{zero, one, one, zero}};
        case Gate::Y:
            return {{zero, -iu, iu, zero}};
        case Gate::Z:
            return {{one, zero, zero, -one}};
        case Gate::W: {
            DOmega w(ZOmega::omega_power(1), 0);
            return {{w, zero, zero, w}};
        }
        case Gate::E: {
            Mat2 h = gate_unitary(Gate::H);
            Mat2 s = gate_unitary(Gate::S);
            Mat2 w = gate_unitary(Gate::W);
            return h * s * s * s * w * w * w;
        }
    }
    throw ParseError("gate_unitary: unknown gate");
}

namespace {

Mat2 pauli(int i) {
    switch (i) {
        case 0: return gate_unitary(Gate::X);
        case 1: return gate_unitary(Gate::Y);
        default: return gate_unitary(Gate::Z);
    }
}

// x / 2 = x / sqrt(2)^2, exactly.
DOmega half(const DOmega& x) { return DOmega(x.num(), x.lde() + 2); }

}  // namespace

Mat3 bloch(const Mat2& u) {
    if (!u.is_unitary()) throw NotUnitaryError("bloch: input is not unitary");
    Mat2 udag = u.adjoint();
    Mat3 out;
    for (int j = 0; j < 3; ++j) {
        // U sigma_j U^dagger, expanded in the Pauli basis by exact traces.
        Mat2 conjd = u * pauli(j) * udag;
        for (int i = 0; i < 3; ++i) {
            Mat2 prod = pauli(i) * conjd;
            DOmega coeff = half(prod.e[0] + prod.e[3]);
            out.at(i, j) = coeff.to_real();
        }
    }
    return out;
}

namespace {

struct CliffordTables {
    std::vector<Mat2> mats;
    std::unordered_map<std::string, int> by_key;
    std::vector<std::uint8_t> mul;  // 192 x 192
    std::array<std::uint8_t, 192> inv{};
    std::array<std::pair<Head, std::uint8_t>, 192> split{};
    std::array<std::uint8_t, 192> commute_t{};
    std::vector<Mat3> bloch24;
    std::unordered_map<std::string, int> bloch_by_key;

    std::uint8_t product(int i, int j) const { return mul[192 * i + j]; }

    CliffordTables() {
        // Powers of the generators of the canonical form E^a X^b S^c w^d.
        std::array<Mat2, 3> ep;
        std::array<Mat2, 2> xp;
        std::array<Mat2, 4> sp;
        std::array<Mat2, 8> wp;
        ep[0] = xp[0] = sp[0] = wp[0] = Mat2::identity();
        for (int i = 1; i < 3; ++i) ep[i] = ep[i - 1] * gate_unitary(Gate::E);
        xp[1] = gate_unitary(Gate::X);
        for (int i = 1; i < 4; ++i) sp[i] = sp[i - 1] * gate_unitary(Gate::S);
        for (int i = 1; i < 8; ++i) wp[i] = wp[i - 1] * gate_unitary(Gate::W);

        mats.resize(192);
        for (int i = 0; i < 192; ++i) {
            CliffordElt e = CliffordElt::from_index(i);
            mats[i] = ep[e.a] * xp[e.b] * sp[e.c] * wp[e.d];
            auto [it, inserted] = by_key.emplace(mats[i].str(), i);
            if (!inserted)
                throw InternalError("clifford tables: canonical form is not injective");
        }

        mul.resize(192 * 192);
        for (int i = 0; i < 192; ++i)
            for (int j = 0; j < 192; ++j)
                mul[192 * i + j] =
                    static_cast<std::uint8_t>(by_key.at((mats[i] * mats[j]).str()));

        for (int i = 0; i < 192; ++i)
            inv[i] = static_cast<std::uint8_t>(by_key.at(mats[i].adjoint().str()));

        // Coset decomposition against {I, H, SH}.
        int h_idx = by_key.at(gate_unitary(Gate::H).str());
        int sh_idx = by_key.at((gate_unitary(Gate::S) * gate_unitary(Gate::H)).str());
        std::array<int, 3> heads = {0 /* identity has index 0 */, h_idx, sh_idx};
        for (int i = 0; i < 192; ++i) {
            int found = 0;
            for (int j = 0; j < 3; ++j) {
                int s = product(inv[heads[j]], i);
                if (CliffordElt::from_index(s).a == 0) {
                    split[i] = {static_cast<Head>(j), static_cast<std::uint8_t>(s)};
                    ++found;
                }
            }
            if (found != 1)
                throw InternalError("clifford tables: coset decomposition not unique");
        }

        // s T = T s' for s in <S,X,w>; s' = T^-1 s T.
        Mat2 t = gate_unitary(Gate::T);
        Mat2 t_inv = t.adjoint();
        for (int i = 0; i < 192; ++i) {
            if (CliffordElt::from_index(i).a != 0) {
                commute_t[i] = 255;
                continue;
            }
            Mat2 sprime = t_inv * mats[i] * t;
            auto it = by_key.find(sprime.str());
            if (it == by_key.end() || CliffordElt::from_index(it->second).a != 0)
                throw InternalError("clifford tables: T does not normalize <S,X,w>");
            commute_t[i] = static_cast<std::uint8_t>(it->second);
        }

        // Bloch sphere images; 24 distinct, keyed to the d = 0 preimage.
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 4; ++c) {
                    CliffordElt e{static_cast<std::uint8_t>(a),
                                  static_cast<std::uint8_t>(b),
                                  static_cast<std::uint8_t>(c), 0};
                    Mat3 v = bloch(mats[e.index()]);
                    auto [it, inserted] = bloch_by_key.emplace(v.str(), e.index());
                    if (inserted) bloch24.push_back(v);
                }
            }
        }
        if (bloch24.size() != 24)
            throw InternalError("clifford tables: expected 24 Bloch Cliffords");
    }
};

const CliffordTables& tables() {
    static const CliffordTables t;
    return t;
}

}  // namespace

Mat2 clifford_unitary(const CliffordElt& e) { return tables().mats[e.index()]; }

CliffordElt clifford_mul(const CliffordElt& x, const CliffordElt& y) {
    return CliffordElt::from_index(tables().product(x.index(), y.index()));
}

CliffordElt clifford_inv(const CliffordElt& x) {
    return CliffordElt::from_index(tables().inv[x.index()]);
}

CliffordElt clifford_from_unitary(const Mat2& u) {
    auto it = tables().by_key.find(u.str());
    if (it == tables().by_key.end())
        throw NotCliffordError("clifford_from_unitary: matrix is not a Clifford operator");
    return CliffordElt::from_index(it->second);
}

bool is_clifford_unitary(const Mat2& u) {
    return tables().by_key.count(u.str()) != 0;
}

std::pair<Head, CliffordElt> split_clifford(const CliffordElt& c) {
    auto [head, s] = tables().split[c.index()];
    return {head, CliffordElt::from_index(s)};
}

CliffordElt commute_through_t(const CliffordElt& s) {
    if (s.a != 0)
        throw PreconditionError("commute_through_t: element is not in <S,X,w>");
    return CliffordElt::from_index(tables().commute_t[s.index()]);
}

CliffordElt gate_clifford(Gate g) {
    if (g == Gate::T) throw NotCliffordError("gate_clifford: T is not Clifford");
    return clifford_from_unitary(gate_unitary(g));
}

const std::vector<CliffordElt>& enumerate_cliffords() {
    static const std::vector<CliffordElt> all = [] {
        std::vector<CliffordElt> v;
        v.reserve(192);
        for (int i = 0; i < 192; ++i) v.push_back(CliffordElt::from_index(i));
        return v;
    }();
    return all;
}

const std::vector<Mat3>& enumerate_bloch_cliffords() { return tables().bloch24; }

CliffordElt clifford_from_bloch(const Mat3& v) {
    auto it = tables().bloch_by_key.find(v.str());
    if (it == tables().bloch_by_key.end())
        throw NotCliffordError("clifford_from_bloch: matrix is not a Bloch Clifford");
    return CliffordElt::from_index(it->second);
}

}  // namespace maform
