// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "maform/clifford.hpp"

namespace maform {

using Word = std::vector<Gate>;

Word parse_word(std::string_view text);
std::string word_str(const Word& w);

enum class MASyl : std::uint8_t { HT = 1, SHT = 2 };
enum class ETSyl : std::uint8_t { ET = 1, EET = 2 };
enum class BSSyl : std::uint8_t { HT = 1, HSHT = 2 };
enum class Axis : std::uint8_t { X, Y, Z };

// Matsumoto-Amano normal form: (T | eps) (HT | SHT)* C. Syllables are in
// matrix-product order, leftmost factor first.
struct MAForm {
    bool lead_t = false;
    std::vector<MASyl> syllables;
    CliffordElt tail;

    bool operator==(const MAForm&) const = default;
    unsigned t_count() const {
        return static_cast<unsigned>(syllables.size()) + (lead_t ? 1 : 0);
    }
    std::string str() const;
};

// Variant with the tail split as (eps | H | SH) s, s in <S,X,w>; this is
// what gives the H-count a definition.
struct MAFormSplit {
    bool lead_t = false;
    std::vector<MASyl> syllables;
    Head head = Head::None;
    CliffordElt s;

    unsigned t_count() const {
        return static_cast<unsigned>(syllables.size()) + (lead_t ? 1 : 0);
    }
    unsigned h_count() const {
        return static_cast<unsigned>(syllables.size()) + (head != Head::None ? 1 : 0);
    }
};

// (T | eps) (ET | E^2T)* C
struct ETForm {
    bool lead_t = false;
    std::vector<ETSyl> syllables;
    CliffordElt tail;

    bool operator==(const ETForm&) const = default;
    unsigned t_count() const {
        return static_cast<unsigned>(syllables.size()) + (lead_t ? 1 : 0);
    }
    std::string str() const;
};

// T_r1 ... T_rn C with no two adjacent axes equal.
struct XYZForm {
    std::vector<Axis> axes;
    CliffordElt tail;

    bool operator==(const XYZForm&) const = default;
    unsigned t_count() const { return static_cast<unsigned>(axes.size()); }
    std::string str() const;
};

// (T | eps) (HT | HSHT)* C
struct BSForm {
    bool lead_t = false;
    std::vector<BSSyl> syllables;
    CliffordElt tail;

    bool operator==(const BSForm&) const = default;
    unsigned t_count() const {
        return static_cast<unsigned>(syllables.size()) + (lead_t ? 1 : 0);
    }
    std::string str() const;
};

// Expansion to a plain gate word over {H,S,T,X,Y,Z,W,E}.
Word expand(const MAForm& m);
Word expand(const ETForm& e);
Word expand(const XYZForm& x);
Word expand(const BSForm& b);

// Exact evaluation (gates multiply left to right in matrix-product order).
Mat2 eval(const Word& w);
Mat2 eval(const MAForm& m);
Mat2 eval(const ETForm& e);
Mat2 eval(const XYZForm& x);
Mat2 eval(const BSForm& b);

// Right-multiplies a normal form by one gate, in constant symbolic work.
MAForm push_gate(const MAForm& m, Gate g);

// Linear-time normalization; purely symbolic (table lookups only).
MAForm normalize(const Word& w);
MAForm normalize(std::string_view word);

MAFormSplit split_form(const MAForm& m);
unsigned h_count(const MAForm& m);

ETForm to_et(const MAForm& m);
MAForm from_et(const ETForm& e);
XYZForm to_xyz(const MAForm& m);
MAForm from_xyz(const XYZForm& x);
BSForm to_bs(const MAForm& m);
MAForm from_bs(const BSForm& b);

// Seeded random form: uniform syllables, uniform tail, random lead choice.
MAForm random_maform(std::mt19937_64& rng, unsigned t_count);

}  // namespace maform
