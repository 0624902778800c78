// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "maform/residue_graph.hpp"
#include "maform/synthesis.hpp"

using namespace maform;

namespace {

// Expected (sqrt(2)*t, conj(t)*t, (t + conj(t))/sqrt(2)) residues, indexed by
// the residue of t.
constexpr std::uint8_t kExpected[16][3] = {
    {0b0000, 0b0000, 0b0000}, {0b1010, 0b0001, 0b1010}, {0b0101, 0b0001, 0b0001},
    {0b1111, 0b1010, 0b1011}, {0b1010, 0b0001, 0b0000}, {0b0000, 0b0000, 0b1010},
    {0b1111, 0b1010, 0b0001}, {0b0101, 0b0001, 0b1011}, {0b0101, 0b0001, 0b0001},
    {0b1111, 0b1010, 0b1011}, {0b0000, 0b0000, 0b0000}, {0b1010, 0b0001, 0b1010},
    {0b1111, 0b1010, 0b0001}, {0b0101, 0b0001, 0b1011}, {0b1010, 0b0001, 0b0000},
    {0b0000, 0b0000, 0b1010},
};

ZOmega random_zomega(std::mt19937_64& rng) {
    auto pick = [&] { return Integer(static_cast<long>(rng() % 100) - 50); };
    return {pick(), pick(), pick(), pick()};
}

}  // namespace

TEST_CASE("residue operation table") {
    for (int i = 0; i < 16; ++i) {
        Residue r(static_cast<std::uint8_t>(i));
        CHECK(res_mul_sqrt2(r) == Residue(kExpected[i][0]));
        CHECK(res_norm(r) == Residue(kExpected[i][1]));
        CHECK(res_symm(r) == Residue(kExpected[i][2]));
    }
}

TEST_CASE("residue operations are well-defined on residues") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        ZOmega s = random_zomega(rng);
        ZOmega t = s + ZOmega::from_int(2) * random_zomega(rng);
        REQUIRE(s.residue() == t.residue());
        CHECK(s.times_sqrt2().residue() == t.times_sqrt2().residue());
        CHECK((s.conj() * s).residue() == (t.conj() * t).residue());
        CHECK(s.symm_div().residue() == t.symm_div().residue());
    }
}

TEST_CASE("vertex table is pairwise inequivalent") {
    const auto& nodes = residue_nodes();
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            CHECK(!simS_equiv(nodes[i].rep, nodes[j].rep));
}

TEST_CASE("classification of small operators") {
    const ResidueNode& start = classify_residue(Mat2::identity());
    CHECK(start.dt == 0);
    CHECK(start.dh == 0);
    CHECK(predict_counts(Mat2::identity()) == std::pair<unsigned, unsigned>(0, 0));

    Mat2 t = gate_unitary(Gate::T);
    CHECK(predict_counts(t) == std::pair<unsigned, unsigned>(1, 0));

    Mat2 h = gate_unitary(Gate::H);
    CHECK(h.lde() == 1);
    CHECK(predict_counts(h) == std::pair<unsigned, unsigned>(0, 1));

    std::string report = node_report(t);
    CHECK(report.find("k=0 t=1 h=0") != std::string::npos);
    CHECK(report.substr(0, 5) == "node=");
}

TEST_CASE("predictions match actual counts") {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 300; ++i) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 17));
        Mat2 u = eval(m);
        auto [t, h] = predict_counts(u);
        CHECK(t == m.t_count());
        CHECK(h == h_count(m));
        const ResidueNode& n = classify_residue(u);
        long two_k = 2L * u.lde();
        CHECK(two_k >= n.two_k_min);
        if (n.two_k_exact) CHECK(two_k == n.two_k_min);
    }
}

TEST_CASE("unit vector check") {
    CHECK(check_unit_vector(DOmega::from_int(1), DOmega::from_int(0)));
    DOmega half(ZOmega::from_int(1), 1);
    CHECK(check_unit_vector(half, half));  // Hadamard column
    CHECK(!check_unit_vector(DOmega::from_int(1), DOmega::from_int(1)));

    // Vectors whose k-residues both lie in {0001,0010,0100,1000} with k >= 2
    // are never unit vectors.
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        auto bad = [&] {
            ZOmega lift = ZOmega::omega_power(static_cast<int>(rng() % 4)) *
                          (ZOmega::from_int(1) + ZOmega::from_int(2) * random_zomega(rng));
            return DOmega(lift, 2);
        };
        DOmega top = bad(), bottom = bad();
        REQUIRE(top.lde() == 2);
        CHECK(!check_unit_vector(top, bottom));
    }
}

TEST_CASE("reduction predicate") {
    CHECK_THROWS_AS(check_reduction(Mat2::identity(), 1), HypothesisError);
    CHECK_THROWS_AS(check_reduction(Mat2::identity(), 2), HypothesisError);

    // Drive the automaton: for operators V sitting on the two vertices that
    // precede the reduction edge, H*V satisfies the hypotheses and lands in
    // the forced class.
    std::mt19937_64 rng(22);
    int found = 0;
    for (int i = 0; i < 4000 && found < 25; ++i) {
        MAForm m = random_maform(rng, 4 + static_cast<unsigned>(rng() % 10));
        Mat2 v = eval(m);
        std::string id = classify_residue(v).id;
        if (id != "5.1" && id != "5.2") continue;
        ++found;
        Mat2 u = gate_unitary(Gate::H) * v;
        CHECK(check_reduction(u, v.lde()));
    }
    CHECK(found == 25);
}
