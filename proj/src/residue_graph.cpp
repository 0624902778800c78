// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/residue_graph.hpp"

namespace maform {

namespace {

ZOmega lift(Residue r) { return {r.p(), r.q(), r.r(), r.s()}; }

constexpr ResidueMat2 rm(std::uint8_t a, std::uint8_t b, std::uint8_t c,
                         std::uint8_t d) {
    return {Residue(a), Residue(b), Residue(c), Residue(d)};
}

// Vertices of the automaton, named by their grid position (row.column).
// Offsets are dt = 2k - t and dh = 2k - h.
const std::vector<ResidueNode> kNodes = {
    {"1.1", rm(0b0001, 0b0000, 0b0000, 0b0001), 0, 0, 0, true},
    {"1.3", rm(0b0001, 0b0000, 0b0000, 0b0010), -1, 0, 0, true},
    {"2.1", rm(0b0001, 0b0001, 0b0001, 0b0001), 2, 1, 2, true},
    {"2.2", rm(0b0001, 0b0001, 0b0100, 0b0100), 2, 1, 2, true},
    {"2.3", rm(0b0001, 0b0010, 0b0001, 0b0010), 1, 1, 2, true},
    {"2.4", rm(0b0001, 0b0010, 0b0100, 0b1000), 1, 1, 2, true},
    {"3.1", rm(0b0001, 0b0001, 0b0010, 0b0010), 1, 1, 2, true},
    {"3.2", rm(0b0001, 0b0001, 0b1000, 0b1000), 1, 1, 2, true},
    {"3.3", rm(0b0001, 0b0010, 0b0010, 0b0100), 0, 1, 2, true},
    {"3.4", rm(0b0001, 0b0010, 0b1000, 0b0001), 0, 1, 2, true},
    {"4.1", rm(0b0011, 0b0011, 0b0011, 0b0011), 3, 2, 4, false},
    {"4.2", rm(0b0011, 0b0011, 0b1100, 0b1100), 3, 2, 4, false},
    {"4.3", rm(0b0011, 0b0110, 0b0011, 0b0110), 2, 2, 4, false},
    {"4.4", rm(0b0011, 0b0110, 0b1100, 0b1001), 2, 2, 4, false},
    {"5.1", rm(0b0011, 0b0011, 0b0110, 0b0110), 2, 2, 4, false},
    {"5.2", rm(0b0011, 0b0011, 0b1001, 0b1001), 2, 2, 4, false},
    {"5.3", rm(0b0011, 0b0110, 0b0110, 0b1100), 1, 2, 4, false},
    {"5.4", rm(0b0011, 0b0110, 0b1001, 0b0011), 1, 2, 4, false},
    {"7.1", rm(0b1000, 0b0111, 0b0111, 0b1000), 2, 1, 4, false},
    {"7.2", rm(0b1000, 0b0111, 0b1101, 0b0010), 2, 1, 4, false},
    {"7.3", rm(0b1000, 0b1110, 0b0111, 0b0001), 1, 1, 4, false},
    {"7.4", rm(0b1000, 0b1110, 0b1101, 0b0100), 1, 1, 4, false},
    {"8.1", rm(0b1000, 0b0111, 0b1110, 0b0001), 1, 1, 4, false},
    {"8.2", rm(0b1000, 0b0111, 0b1011, 0b0100), 1, 1, 4, false},
    {"8.3", rm(0b1000, 0b1110, 0b1110, 0b0010), 0, 1, 4, false},
    {"8.4", rm(0b1000, 0b1110, 0b1011, 0b1000), 0, 1, 4, false},
};

}  // namespace

Residue res_mul_sqrt2(Residue r) { return lift(r).times_sqrt2().residue(); }
Residue res_norm(Residue r) { return (lift(r).conj() * lift(r)).residue(); }
Residue res_symm(Residue r) { return lift(r).symm_div().residue(); }

const std::vector<ResidueNode>& residue_nodes() { return kNodes; }

const ResidueNode& classify_residue(const Mat2& u) {
    unsigned k = u.lde();
    ResidueMat2 r = residue_mat(u, k);
    for (const ResidueNode& n : kNodes)
        if (simS_equiv(r, n.rep)) return n;
    throw NoNodeError("classify_residue: residue matches no vertex");
}

std::pair<unsigned, unsigned> predict_counts(const Mat2& u) {
    const ResidueNode& n = classify_residue(u);
    long two_k = 2L * u.lde();
    return {static_cast<unsigned>(two_k - n.dt), static_cast<unsigned>(two_k - n.dh)};
}

std::string node_report(const Mat2& u) {
    const ResidueNode& n = classify_residue(u);
    unsigned k = u.lde();
    long two_k = 2L * k;
    ResidueMat2 r = residue_mat(u, k);
    return "node=" + std::string(n.id) + " k=" + std::to_string(k) +
           " t=" + std::to_string(two_k - n.dt) + " h=" + std::to_string(two_k - n.dh) +
           " residue=" + r[0].str() + "," + r[1].str() + ";" + r[2].str() + "," +
           r[3].str();
}

bool check_unit_vector(const DOmega& top, const DOmega& bottom) {
    DOmega norm = top.conj() * top + bottom.conj() * bottom;
    return norm == DOmega::from_int(1);
}

bool check_reduction(const Mat2& u, unsigned k) {
    if (k < 2) throw HypothesisError("check_reduction: requires k >= 2");
    if (u.lde() > k)
        throw HypothesisError("check_reduction: k is not a denominator exponent");
    static const ResidueMat2 hyp1 = rm(0b0101, 0b0101, 0b0101, 0b0101);
    static const ResidueMat2 hyp2a = rm(0b0011, 0b0011, 0b0110, 0b0110);
    static const ResidueMat2 hyp2b = rm(0b0011, 0b0011, 0b1001, 0b1001);
    static const ResidueMat2 conclusion = rm(0b1000, 0b0111, 0b0111, 0b1000);

    if (!simS_equiv(residue_mat(u, k + 1), hyp1))
        throw HypothesisError("check_reduction: residue at k+1 hypothesis fails");
    Mat2 hu = gate_unitary(Gate::H) * u;
    if (hu.lde() > k)
        throw HypothesisError("check_reduction: HU has no denominator exponent k");
    ResidueMat2 rhu = residue_mat(hu, k);
    if (!simS_equiv(rhu, hyp2a) && !simS_equiv(rhu, hyp2b))
        throw HypothesisError("check_reduction: residue of HU hypothesis fails");

    return simS_equiv(residue_mat(u, k), conclusion);
}

}  // namespace maform
