// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "maform/normal_form.hpp"

using namespace maform;

TEST_CASE("canonical-form enumeration") {
    const auto& all = enumerate_cliffords();
    REQUIRE(all.size() == 192);
    std::unordered_set<std::string> mats;
    int in_s = 0;
    for (const CliffordElt& e : all) {
        CHECK(CliffordElt::from_index(e.index()) == e);
        mats.insert(clifford_unitary(e).str());
        if (in_S(e)) ++in_s;
    }
    CHECK(mats.size() == 192);  // injectivity of the canonical form
    CHECK(in_s == 64);
    CHECK(enumerate_bloch_cliffords().size() == 24);
}

TEST_CASE("clifford_from_unitary") {
    CHECK(clifford_unitary(CliffordElt::identity()) == Mat2::identity());
    CliffordElt h = clifford_from_unitary(gate_unitary(Gate::H));
    CHECK(clifford_unitary(h) == gate_unitary(Gate::H));
    CHECK_THROWS_AS(clifford_from_unitary(gate_unitary(Gate::T)), NotCliffordError);
    CHECK(is_clifford_unitary(gate_unitary(Gate::S)));
    CHECK(!is_clifford_unitary(gate_unitary(Gate::T)));
}

TEST_CASE("group operations agree with matrices") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        CliffordElt x = CliffordElt::from_index(static_cast<int>(rng() % 192));
        CliffordElt y = CliffordElt::from_index(static_cast<int>(rng() % 192));
        CHECK(clifford_unitary(clifford_mul(x, y)) ==
              clifford_unitary(x) * clifford_unitary(y));
        CHECK(clifford_unitary(clifford_inv(x)) == clifford_unitary(x).adjoint());
        CHECK(clifford_mul(x, clifford_inv(x)) == CliffordElt::identity());
    }
}

TEST_CASE("S-membership") {
    CHECK(in_S(CliffordElt::identity()));
    CHECK(in_S(gate_clifford(Gate::S)));
    CHECK(in_S(gate_clifford(Gate::X)));
    CHECK(in_S(gate_clifford(Gate::W)));
    CHECK(!in_S(gate_clifford(Gate::H)));
    CHECK_THROWS_AS(gate_clifford(Gate::T), NotCliffordError);
}

TEST_CASE("coset decomposition C = {I, H, SH} * S") {
    CliffordElt h_elt = gate_clifford(Gate::H);
    CliffordElt sh_elt = clifford_mul(gate_clifford(Gate::S), h_elt);
    int per_head[3] = {0, 0, 0};
    for (const CliffordElt& c : enumerate_cliffords()) {
        auto [head, s] = split_clifford(c);
        CHECK(in_S(s));
        CliffordElt head_elt = CliffordElt::identity();
        if (head == Head::H) head_elt = h_elt;
        if (head == Head::SH) head_elt = sh_elt;
        CHECK(clifford_mul(head_elt, s) == c);
        ++per_head[static_cast<int>(head)];
    }
    CHECK(per_head[0] == 64);
    CHECK(per_head[1] == 64);
    CHECK(per_head[2] == 64);
    CHECK(split_clifford(CliffordElt::identity()).first == Head::None);
    CHECK(split_clifford(h_elt).first == Head::H);
    CHECK(split_clifford(h_elt).second == CliffordElt::identity());
}

TEST_CASE("commutation through T") {
    Mat2 t = gate_unitary(Gate::T);
    for (const CliffordElt& s : enumerate_cliffords()) {
        if (!in_S(s)) continue;
        CliffordElt sp = commute_through_t(s);
        CHECK(in_S(sp));
        CHECK(clifford_unitary(s) * t == t * clifford_unitary(sp));
    }
}

TEST_CASE("Bloch Cliffords have entries in {-1,0,1} and lift uniquely") {
    auto small = [](const DRoot2& x) {
        return x == DRoot2::from_int(0) || x == DRoot2::from_int(1) ||
               x == DRoot2::from_int(-1);
    };
    std::set<std::string> seen;
    for (const Mat3& v : enumerate_bloch_cliffords()) {
        for (const DRoot2& x : v.e) CHECK(small(x));
        seen.insert(v.str());
        CliffordElt c = clifford_from_bloch(v);
        CHECK(c.d == 0);
        CHECK(bloch(clifford_unitary(c)) == v);
    }
    CHECK(seen.size() == 24);
    // A non-Clifford Bloch matrix is rejected.
    CHECK_THROWS_AS(clifford_from_bloch(bloch(gate_unitary(Gate::T))), NotCliffordError);
    // Every Clifford's Bloch matrix is in the 24-element set.
    for (const CliffordElt& c : enumerate_cliffords())
        CHECK(seen.count(bloch(clifford_unitary(c)).str()) == 1);
}
