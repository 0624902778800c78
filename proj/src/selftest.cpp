// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/selftest.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <unordered_set>

#include "maform/residue_graph.hpp"
#include "maform/synthesis.hpp"

namespace maform {

namespace {

// Frozen table of residue operations: for each residue r (by bit value),
// the expected (sqrt(2)*r, r^dagger r, (r + r^dagger)/sqrt(2)).
constexpr std::uint8_t kResidueTable[16][3] = {
    {0b0000, 0b0000, 0b0000},  // 0000
    {0b1010, 0b0001, 0b1010},  // 0001
    {0b0101, 0b0001, 0b0001},  // 0010
    {0b1111, 0b1010, 0b1011},  // 0011
    {0b1010, 0b0001, 0b0000},  // 0100
    {0b0000, 0b0000, 0b1010},  // 0101
    {0b1111, 0b1010, 0b0001},  // 0110
    {0b0101, 0b0001, 0b1011},  // 0111
    {0b0101, 0b0001, 0b0001},  // 1000
    {0b1111, 0b1010, 0b1011},  // 1001
    {0b0000, 0b0000, 0b0000},  // 1010
    {0b1010, 0b0001, 0b1010},  // 1011
    {0b1111, 0b1010, 0b0001},  // 1100
    {0b0101, 0b0001, 0b1011},  // 1101
    {0b1010, 0b0001, 0b0000},  // 1110
    {0b0000, 0b0000, 0b1010},  // 1111
};

bool check_cardinalities() {
    if (enumerate_cliffords().size() != 192) return false;
    if (enumerate_bloch_cliffords().size() != 24) return false;
    int in_s = 0;
    std::unordered_set<std::string> keys;
    for (const CliffordElt& e : enumerate_cliffords()) {
        if (in_S(e)) ++in_s;
        keys.insert(clifford_unitary(e).str());
    }
    return in_s == 64 && keys.size() == 192;
}

bool check_residue_table() {
    for (int i = 0; i < 16; ++i) {
        Residue r(static_cast<std::uint8_t>(i));
        if (res_mul_sqrt2(r) != Residue(kResidueTable[i][0])) return false;
        if (res_norm(r) != Residue(kResidueTable[i][1])) return false;
        if (res_symm(r) != Residue(kResidueTable[i][2])) return false;
    }
    return true;
}

bool check_census() {
    // All forms with T-count <= 4 evaluate to pairwise distinct operators.
    std::unordered_set<std::string> seen;
    size_t expected = 0;
    for (unsigned t = 0; t <= 4; ++t) {
        unsigned shapes = (t == 0) ? 1 : 3u << (t - 1);
        expected += static_cast<size_t>(shapes) * 192;
        for (unsigned lead = 0; lead <= (t > 0 ? 1u : 0u); ++lead) {
            unsigned n = t - lead;
            if (lead == 0 && t > 0 && n == 0) continue;
            for (unsigned bits = 0; bits < (1u << n); ++bits) {
                MAForm m;
                m.lead_t = lead != 0;
                for (unsigned i = 0; i < n; ++i)
                    m.syllables.push_back((bits >> i) & 1 ? MASyl::SHT : MASyl::HT);
                for (int c = 0; c < 192; ++c) {
                    m.tail = CliffordElt::from_index(c);
                    seen.insert(eval(m).str());
                }
            }
        }
    }
    return seen.size() == expected;
}

bool check_normalize(std::mt19937_64& rng) {
    const char alphabet[] = "HSTXYZWE";
    for (int trial = 0; trial < 100; ++trial) {
        Word w;
        unsigned len = 1 + rng() % 60;
        unsigned t_in = 0;
        for (unsigned i = 0; i < len; ++i) {
            char ch = alphabet[rng() % 8];
            if (ch == 'T') ++t_in;
            w.push_back(static_cast<Gate>(ch));
        }
        MAForm m = normalize(w);
        if (!(eval(m) == eval(w))) return false;
        if (m.t_count() > t_in) return false;
    }
    return true;
}

bool check_synthesis(std::mt19937_64& rng) {
    for (int trial = 0; trial < 100; ++trial) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 33));
        Mat2 u = eval(m);
        SynthStats stats;
        MAForm back = synth_u2(u, &stats);
        if (!(back == m)) return false;
        if (stats.iterations != m.t_count()) return false;
    }
    return true;
}

bool check_residue_counts(std::mt19937_64& rng) {
    for (int trial = 0; trial < 100; ++trial) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 17));
        auto [t, h] = predict_counts(eval(m));
        if (t != m.t_count() || h != h_count(m)) return false;
    }
    return true;
}

bool check_conversions(std::mt19937_64& rng) {
    for (int trial = 0; trial < 100; ++trial) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 17));
        Mat2 u = eval(m);
        ETForm e = to_et(m);
        XYZForm x = to_xyz(m);
        BSForm b = to_bs(m);
        if (!(eval(e) == u) || !(eval(x) == u) || !(eval(b) == u)) return false;
        if (e.t_count() != m.t_count() || x.t_count() != m.t_count() ||
            b.t_count() != m.t_count())
            return false;
        if (!(from_et(e) == m) || !(from_xyz(x) == m) || !(from_bs(b) == m))
            return false;
        for (size_t i = 1; i < x.axes.size(); ++i)
            if (x.axes[i] == x.axes[i - 1]) return false;
    }
    return true;
}

}  // namespace

bool run_selftest(std::ostream& out) {
    std::mt19937_64 rng(0xC0FFEE);
    struct Check {
        const char* name;
        std::function<bool()> run;
    };
    const Check checks[] = {
        {"group cardinalities", check_cardinalities},
        {"residue operation table", check_residue_table},
        {"uniqueness census (t <= 4)", check_census},
        {"normalization soundness", [&] { return check_normalize(rng); }},
        {"synthesis round trip", [&] { return check_synthesis(rng); }},
        {"residue count prediction", [&] { return check_residue_counts(rng); }},
        {"alternative form conversions", [&] { return check_conversions(rng); }},
    };
    bool all_ok = true;
    for (const Check& c : checks) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception&) {
            ok = false;
        }
        out << (ok ? "ok   " : "FAIL ") << c.name << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok;
}

}  // namespace maform
