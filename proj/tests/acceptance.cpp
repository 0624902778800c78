// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion; exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "maform/formats.hpp"
#include "maform/residue_graph.hpp"
#include "maform/synthesis.hpp"

namespace {

using namespace maform;

Word random_word(std::mt19937_64& rng, unsigned len) {
    const char alphabet[] = "HSTXYZWE";
    Word w;
    w.reserve(len);
    for (unsigned i = 0; i < len; ++i)
        w.push_back(static_cast<Gate>(alphabet[rng() % 8]));
    return w;
}

// 1. Exactly 192 Clifford unitaries, 64 elements of the S-subgroup, 24 Bloch
//    Cliffords.
bool cardinalities() {
    std::unordered_set<std::string> mats;
    int in_s = 0;
    for (const CliffordElt& e : enumerate_cliffords()) {
        mats.insert(clifford_unitary(e).str());
        if (in_S(e)) ++in_s;
    }
    std::unordered_set<std::string> blochs;
    for (const Mat3& v : enumerate_bloch_cliffords()) blochs.insert(v.str());
    return mats.size() == 192 && in_s == 64 && blochs.size() == 24;
}

// 2. The residue operation table, bit for bit.
bool residue_table() {
    constexpr std::uint8_t expected[16][3] = {
        {0b0000, 0b0000, 0b0000}, {0b1010, 0b0001, 0b1010}, {0b0101, 0b0001, 0b0001},
        {0b1111, 0b1010, 0b1011}, {0b1010, 0b0001, 0b0000}, {0b0000, 0b0000, 0b1010},
        {0b1111, 0b1010, 0b0001}, {0b0101, 0b0001, 0b1011}, {0b0101, 0b0001, 0b0001},
        {0b1111, 0b1010, 0b1011}, {0b0000, 0b0000, 0b0000}, {0b1010, 0b0001, 0b1010},
        {0b1111, 0b1010, 0b0001}, {0b0101, 0b0001, 0b1011}, {0b1010, 0b0001, 0b0000},
        {0b0000, 0b0000, 0b1010},
    };
    for (int i = 0; i < 16; ++i) {
        Residue r(static_cast<std::uint8_t>(i));
        if (res_mul_sqrt2(r) != Residue(expected[i][0])) return false;
        if (res_norm(r) != Residue(expected[i][1])) return false;
        if (res_symm(r) != Residue(expected[i][2])) return false;
    }
    return true;
}

// Enumerates every normal form with the given T-count and feeds it to fn.
template <typename Fn>
void for_each_form(unsigned t, Fn&& fn) {
    for (unsigned lead = 0; lead <= (t > 0 ? 1u : 0u); ++lead) {
        unsigned n = t - lead;
        for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
            MAForm m;
            m.lead_t = lead != 0;
            for (unsigned i = 0; i < n; ++i)
                m.syllables.push_back((bits >> i) & 1 ? MASyl::SHT : MASyl::HT);
            Mat2 prefix = eval(m);  // identity tail
            for (int c = 0; c < 192; ++c) {
                m.tail = CliffordElt::from_index(c);
                fn(m, prefix * clifford_unitary(m.tail));
            }
        }
    }
}

// 3. All 36,480 forms with T-count <= 6 evaluate to pairwise distinct
//    operators, with the expected count at every T-count.
bool census() {
    std::unordered_set<std::string> seen;
    std::size_t running = 0;
    for (unsigned t = 0; t <= 6; ++t) {
        std::size_t expected = (t == 0 ? 1u : 3u << (t - 1)) * std::size_t(192);
        for_each_form(t, [&](const MAForm&, const Mat2& u) { seen.insert(u.str()); });
        running += expected;
        if (seen.size() != running) return false;
    }
    return running == 36480;
}

// 4. eval(normalize(w)) = eval(w) and T-count never increases, on 1,000
//    random words of length <= 200.
bool normalize_soundness() {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, 1 + static_cast<unsigned>(rng() % 200));
        MAForm m = normalize(w);
        if (!(eval(m) == eval(w))) return false;
        unsigned t_in = 0;
        for (Gate g : w)
            if (g == Gate::T) ++t_in;
        if (m.t_count() > t_in) return false;
    }
    return true;
}

// 5. Breadth-first closure: the minimal T-count of every operator reachable
//    with <= 4 T gates equals the T-count of its normal form.
bool t_optimality() {
    std::unordered_map<std::string, unsigned> minimal;
    std::vector<Mat2> level;
    for (const CliffordElt& e : enumerate_cliffords()) {
        Mat2 u = clifford_unitary(e);
        if (minimal.emplace(u.str(), 0).second) level.push_back(u);
    }
    Mat2 t = gate_unitary(Gate::T);
    std::vector<Mat2> cliffords;
    for (const CliffordElt& e : enumerate_cliffords())
        cliffords.push_back(clifford_unitary(e));
    for (unsigned depth = 1; depth <= 4; ++depth) {
        std::vector<Mat2> next;
        for (const Mat2& u : level) {
            Mat2 ut = u * t;
            for (const Mat2& c : cliffords) {
                Mat2 v = ut * c;
                if (minimal.emplace(v.str(), depth).second) next.push_back(v);
            }
        }
        level = std::move(next);
        std::size_t expected = (3u << (depth - 1)) * std::size_t(192);
        if (level.size() != expected) return false;
        for (const Mat2& u : level)
            if (synth_u2(u).t_count() != depth) return false;
    }
    return minimal.size() == 8832;
}

// 6. lde(bloch(eval(m))) = t_count(m) on 1,000 forms with T-count <= 128.
// 7. synth_u2 round-trips those forms structurally in exactly k iterations.
bool tcount_is_lde(bool check_synth) {
    std::mt19937_64 rng(102);
    for (int i = 0; i < 1000; ++i) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 129));
        Mat2 u = eval(m);
        if (bloch(u).lde() != m.t_count()) return false;
        if (check_synth) {
            SynthStats stats;
            MAForm back = synth_u2(u, &stats);
            if (!(back == m) || stats.iterations != m.t_count()) return false;
        }
    }
    return true;
}

// 8. Residue-vertex offsets reproduce t and h; the global bounds
//    2k-3 <= t <= 2k+1 and 2k-2 <= h <= 2k hold.
bool residue_analytics() {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 33));
        Mat2 u = eval(m);
        auto [t, h] = predict_counts(u);
        if (t != m.t_count() || h != h_count(m)) return false;
        long two_k = 2L * u.lde();
        if (!(two_k - 3 <= long(t) && long(t) <= two_k + 1)) return false;
        if (!(two_k - 2 <= long(h) && long(h) <= two_k)) return false;
    }
    return true;
}

// 9. Ring lemmas: symmetrized elements are divisible by sqrt(2); the
//    column-decomposition identities hold on synthesized Bloch matrices;
//    vectors with bad residues at k >= 2 are never unit vectors.
bool lemma_suite() {
    std::mt19937_64 rng(104);
    auto pick = [&] { return Integer(static_cast<long>(rng() % 4000) - 2000); };
    auto rand_zomega = [&] { return ZOmega(pick(), pick(), pick(), pick()); };
    for (int i = 0; i < 10000; ++i) {
        ZOmega t = rand_zomega();
        if (!(t + t.conj()).divisible_by_sqrt2()) return false;
        if (!(t.symm_div().times_sqrt2() == t + t.conj())) return false;
    }
    for (int i = 0; i < 100; ++i) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 25));
        Mat3 v = bloch(eval(m));
        unsigned k = v.lde();
        Integer two_k = Integer(1) << k;
        std::array<Integer, 6> col[3];
        for (int j = 0; j < 3; ++j) col[j] = decompose_column(v, j, k);
        for (int j = 0; j < 3; ++j) {
            for (int l = 0; l < 3; ++l) {
                const auto& [aj, bj, cj, dj, ej, fj] = col[j];
                const auto& [al, bl, cl, dl, el, fl] = col[l];
                if (aj * bl + bj * al + cj * dl + dj * cl + ej * fl + fj * el != 0)
                    return false;
                Integer dot = aj * al + cj * cl + ej * el +
                              2 * (bj * bl + dj * dl + fj * fl);
                if (dot != (j == l ? two_k : Integer(0))) return false;
            }
        }
    }
    for (int i = 0; i < 1000; ++i) {
        auto bad = [&] {
            ZOmega lift = ZOmega::omega_power(static_cast<int>(rng() % 4)) *
                          (ZOmega::from_int(1) + ZOmega::from_int(2) * rand_zomega());
            return DOmega(lift, 2);
        };
        if (check_unit_vector(bad(), bad())) return false;
    }
    return true;
}

// 10. normalize runs in (roughly) linear time: doubling the input length
//     does not triple the wall time.
bool linearity() {
    std::mt19937_64 rng(105);
    Word small = random_word(rng, 100000);
    Word big = random_word(rng, 200000);
    auto time_of = [](const Word& w) {
        double best = 1e30;
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            MAForm m = normalize(w);
            auto t1 = std::chrono::steady_clock::now();
            if (m.t_count() > w.size()) return -1.0;  // keep the call alive
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        return best;
    };
    double ts = time_of(small), tb = time_of(big);
    if (ts <= 0 || tb <= 0) return false;
    std::cerr << "  normalize: " << ts << " s for 100k gates, " << tb
              << " s for 200k gates\n";
    return tb / ts <= 3.0;
}

// 11. Alternative forms preserve the operator and the T-count, keep the
//     no-adjacent-repeat invariant, and round-trip structurally.
bool alternative_forms() {
    std::mt19937_64 rng(106);
    for (int i = 0; i < 1000; ++i) {
        MAForm m = random_maform(rng, static_cast<unsigned>(rng() % 25));
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
        for (size_t j = 1; j < x.axes.size(); ++j)
            if (x.axes[j] == x.axes[j - 1]) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)();
    };
    const Criterion criteria[] = {
        {"group cardinalities (192 / 64 / 24)", cardinalities},
        {"residue operation table (16 x 3)", residue_table},
        {"uniqueness census, T-count <= 6 (36,480 operators)", census},
        {"normalization soundness (1,000 words, length <= 200)", normalize_soundness},
        {"T-optimality against breadth-first closure (T-count <= 4)", t_optimality},
        {"T-count equals denominator exponent (1,000 forms, t <= 128)",
         [] { return tcount_is_lde(false); }},
        {"synthesis round trip in exactly k iterations (1,000 forms, t <= 128)",
         [] { return tcount_is_lde(true); }},
        {"residue-vertex offsets and count bounds (1,000 forms)", residue_analytics},
        {"ring lemma suite (divisibility / column identities / unit vectors)",
         lemma_suite},
        {"linear-time normalization (100k vs 200k gates)", linearity},
        {"alternative normal forms (1,000 forms)", alternative_forms},
    };
    int failures = 0;
    int n = 0;
    for (const Criterion& c : criteria) {
        ++n;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& ex) {
            std::cerr << "  exception: " << ex.what() << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << c.name
                  << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
