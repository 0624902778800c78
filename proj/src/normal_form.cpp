// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/normal_form.hpp"

#include <array>
#include <cctype>

namespace maform {

namespace {

const CliffordElt& s_elt() {
    static const CliffordElt s = gate_clifford(Gate::S);
    return s;
}

CliffordElt cached_gate_clifford(Gate g) {
    static const std::array<CliffordElt, 7> table = [] {
        std::array<CliffordElt, 7> t{};
        const Gate gs[] = {Gate::H, Gate::S, Gate::X, Gate::Y,
                           Gate::Z, Gate::W, Gate::E};
        for (int i = 0; i < 7; ++i) t[i] = gate_clifford(gs[i]);
        return t;
    }();
    switch (g) {
        case Gate::H: return table[0];
        case Gate::S: return table[1];
        case Gate::X: return table[2];
        case Gate::Y: return table[3];
        case Gate::Z: return table[4];
        case Gate::W: return table[5];
        case Gate::E: return table[6];
        default: throw NotCliffordError("T is not Clifford");
    }
}

// Shared normalizer core, parameterized on the coset representatives
// {I, R1, R2} of <S,X,w> in the Clifford group. The MA, E-T and
// two-syllable forms differ only in this choice.
struct CosetSystem {
    std::array<CliffordElt, 3> rep;
    std::array<CliffordElt, 3> rep_s;  // rep[j] * S, used when T T = S merges
    std::array<std::pair<std::uint8_t, std::uint8_t>, 192> split{};

    CosetSystem(const CliffordElt& r1, const CliffordElt& r2) {
        rep = {CliffordElt::identity(), r1, r2};
        for (int j = 0; j < 3; ++j) rep_s[j] = clifford_mul(rep[j], s_elt());
        for (int i = 0; i < 192; ++i) {
            int found = 0;
            for (int j = 0; j < 3; ++j) {
                CliffordElt s =
                    clifford_mul(clifford_inv(rep[j]), CliffordElt::from_index(i));
                if (in_S(s)) {
                    split[i] = {static_cast<std::uint8_t>(j),
                                static_cast<std::uint8_t>(s.index())};
                    ++found;
                }
            }
            if (found != 1)
                throw InternalError("CosetSystem: representatives do not split the group");
        }
    }
};

const CosetSystem& ma_system() {
    static const CosetSystem sys(gate_clifford(Gate::H),
                                 clifford_mul(gate_clifford(Gate::S), gate_clifford(Gate::H)));
    return sys;
}

const CosetSystem& et_system() {
    static const CosetSystem sys(gate_clifford(Gate::E),
                                 clifford_mul(gate_clifford(Gate::E), gate_clifford(Gate::E)));
    return sys;
}

const CosetSystem& bs_system() {
    static const CosetSystem sys(
        gate_clifford(Gate::H),
        clifford_mul(clifford_mul(gate_clifford(Gate::H), gate_clifford(Gate::S)),
                     gate_clifford(Gate::H)));
    return sys;
}

struct NfState {
    bool lead_t = false;
    std::vector<std::uint8_t> syl;  // values 1 or 2, the coset rep index
    CliffordElt tail;
};

void push_clifford(NfState& st, const CliffordElt& c) {
    st.tail = clifford_mul(st.tail, c);
}

// Right-multiplication by T. Writes tail = head * s, commutes s through T,
// and either emits a new syllable (head = R1 or R2) or merges T T = S into
// the rightmost T of the prefix (head = I). Only the last syllable and the
// tail are ever touched.
void push_t(NfState& st, const CosetSystem& sys) {
    auto [j, s_idx] = sys.split[st.tail.index()];
    CliffordElt sp = commute_through_t(CliffordElt::from_index(s_idx));
    if (j != 0) {
        st.syl.push_back(j);
        st.tail = sp;
    } else if (!st.lead_t && st.syl.empty()) {
        st.lead_t = true;
        st.tail = sp;
    } else if (st.lead_t && st.syl.empty()) {
        st.lead_t = false;
        st.tail = clifford_mul(s_elt(), sp);
    } else {
        std::uint8_t last = st.syl.back();
        st.syl.pop_back();
        st.tail = clifford_mul(sys.rep_s[last], sp);
    }
}

// Token stream: T or a Clifford element.
struct Tok {
    bool is_t;
    CliffordElt c;
};

NfState run_tokens(const std::vector<Tok>& toks, const CosetSystem& sys) {
    NfState st;
    for (const Tok& t : toks) {
        if (t.is_t)
            push_t(st, sys);
        else
            push_clifford(st, t.c);
    }
    return st;
}

std::vector<Tok> tokens_of(const MAForm& m) {
    std::vector<Tok> out;
    if (m.lead_t) out.push_back({true, {}});
    for (MASyl s : m.syllables) {
        if (s == MASyl::SHT) out.push_back({false, s_elt()});
        out.push_back({false, cached_gate_clifford(Gate::H)});
        out.push_back({true, {}});
    }
    out.push_back({false, m.tail});
    return out;
}

std::vector<Tok> tokens_of(const ETForm& e) {
    std::vector<Tok> out;
    if (e.lead_t) out.push_back({true, {}});
    for (ETSyl s : e.syllables) {
        out.push_back({false, cached_gate_clifford(Gate::E)});
        if (s == ETSyl::EET) out.push_back({false, cached_gate_clifford(Gate::E)});
        out.push_back({true, {}});
    }
    out.push_back({false, e.tail});
    return out;
}

std::vector<Tok> tokens_of(const BSForm& b) {
    std::vector<Tok> out;
    if (b.lead_t) out.push_back({true, {}});
    for (BSSyl s : b.syllables) {
        out.push_back({false, cached_gate_clifford(Gate::H)});
        if (s == BSSyl::HSHT) {
            out.push_back({false, s_elt()});
            out.push_back({false, cached_gate_clifford(Gate::H)});
        }
        out.push_back({true, {}});
    }
    out.push_back({false, b.tail});
    return out;
}

std::vector<Tok> tokens_of(const XYZForm& x) {
    std::vector<Tok> out;
    const CliffordElt e1 = cached_gate_clifford(Gate::E);
    const CliffordElt e2 = clifford_mul(e1, e1);
    for (Axis a : x.axes) {
        switch (a) {
            case Axis::Z:
                out.push_back({true, {}});
                break;
            case Axis::X:  // T_x = E T E^2
                out.push_back({false, e1});
                out.push_back({true, {}});
                out.push_back({false, e2});
                break;
            case Axis::Y:  // T_y = E^2 T E
                out.push_back({false, e2});
                out.push_back({true, {}});
                out.push_back({false, e1});
                break;
        }
    }
    out.push_back({false, x.tail});
    return out;
}

Mat2 eval_tokens(const std::vector<Tok>& toks) {
    Mat2 m = Mat2::identity();
    const Mat2 t = gate_unitary(Gate::T);
    for (const Tok& tok : toks) m = m * (tok.is_t ? t : clifford_unitary(tok.c));
    return m;
}

MAForm ma_of_state(NfState&& st) {
    MAForm m;
    m.lead_t = st.lead_t;
    m.syllables.reserve(st.syl.size());
    for (std::uint8_t s : st.syl)
        m.syllables.push_back(s == 1 ? MASyl::HT : MASyl::SHT);
    m.tail = st.tail;
    return m;
}

std::string tail_str(const CliffordElt& c) { return "[C:" + c.str() + "]"; }

}  // namespace

Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        switch (ch) {
            case 'H': case 'S': case 'T': case 'X':
            case 'Y': case 'Z': case 'W': case 'E':
                w.push_back(static_cast<Gate>(ch));
                break;
            default:
                throw ParseError(std::string("unknown gate symbol '") + ch + "'");
        }
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Gate g : w) out.push_back(static_cast<char>(g));
    return out;
}

std::string MAForm::str() const {
    std::string out;
    if (lead_t) out += "T.";
    for (MASyl s : syllables) out += (s == MASyl::HT) ? "HT." : "SHT.";
    return out + tail_str(tail);
}

std::string ETForm::str() const {
    std::string out;
    if (lead_t) out += "T.";
    for (ETSyl s : syllables) out += (s == ETSyl::ET) ? "ET." : "EET.";
    return out + tail_str(tail);
}

std::string XYZForm::str() const {
    std::string out;
    for (Axis a : axes)
        out += (a == Axis::X) ? "Tx." : (a == Axis::Y) ? "Ty." : "Tz.";
    return out + tail_str(tail);
}

std::string BSForm::str() const {
    std::string out;
    if (lead_t) out += "T.";
    for (BSSyl s : syllables) out += (s == BSSyl::HT) ? "HT." : "HSHT.";
    return out + tail_str(tail);
}

Word expand(const MAForm& m) {
    Word w;
    if (m.lead_t) w.push_back(Gate::T);
    for (MASyl s : m.syllables) {
        if (s == MASyl::SHT) w.push_back(Gate::S);
        w.push_back(Gate::H);
        w.push_back(Gate::T);
    }
    for (int i = 0; i < m.tail.a; ++i) w.push_back(Gate::E);
    for (int i = 0; i < m.tail.b; ++i) w.push_back(Gate::X);
    for (int i = 0; i < m.tail.c; ++i) w.push_back(Gate::S);
    for (int i = 0; i < m.tail.d; ++i) w.push_back(Gate::W);
    return w;
}

namespace {

Word expand_from_tokens(const std::vector<Tok>& toks) {
    Word w;
    for (const Tok& t : toks) {
        if (t.is_t) {
            w.push_back(Gate::T);
        } else {
            for (int i = 0; i < t.c.a; ++i) w.push_back(Gate::E);
            for (int i = 0; i < t.c.b; ++i) w.push_back(Gate::X);
            for (int i = 0; i < t.c.c; ++i) w.push_back(Gate::S);
            for (int i = 0; i < t.c.d; ++i) w.push_back(Gate::W);
        }
    }
    return w;
}

}  // namespace

Word expand(const ETForm& e) { return expand_from_tokens(tokens_of(e)); }
Word expand(const XYZForm& x) { return expand_from_tokens(tokens_of(x)); }
Word expand(const BSForm& b) { return expand_from_tokens(tokens_of(b)); }

Mat2 eval(const Word& w) {
    Mat2 m = Mat2::identity();
    for (Gate g : w) m = m * gate_unitary(g);
    return m;
}

Mat2 eval(const MAForm& m) { return eval_tokens(tokens_of(m)); }
Mat2 eval(const ETForm& e) { return eval_tokens(tokens_of(e)); }
Mat2 eval(const XYZForm& x) { return eval_tokens(tokens_of(x)); }
Mat2 eval(const BSForm& b) { return eval_tokens(tokens_of(b)); }

MAForm push_gate(const MAForm& m, Gate g) {
    NfState st;
    st.lead_t = m.lead_t;
    st.syl.reserve(m.syllables.size() + 1);
    for (MASyl s : m.syllables) st.syl.push_back(static_cast<std::uint8_t>(s));
    st.tail = m.tail;
    if (g == Gate::T)
        push_t(st, ma_system());
    else
        push_clifford(st, cached_gate_clifford(g));
    return ma_of_state(std::move(st));
}

MAForm normalize(const Word& w) {
    NfState st;
    const CosetSystem& sys = ma_system();
    for (Gate g : w) {
        if (g == Gate::T)
            push_t(st, sys);
        else
            push_clifford(st, cached_gate_clifford(g));
    }
    return ma_of_state(std::move(st));
}

MAForm normalize(std::string_view word) { return normalize(parse_word(word)); }

MAFormSplit split_form(const MAForm& m) {
    MAFormSplit out;
    out.lead_t = m.lead_t;
    out.syllables = m.syllables;
    auto [head, s] = split_clifford(m.tail);
    out.head = head;
    out.s = s;
    return out;
}

unsigned h_count(const MAForm& m) { return split_form(m).h_count(); }

ETForm to_et(const MAForm& m) {
    NfState st = run_tokens(tokens_of(m), et_system());
    ETForm e;
    e.lead_t = st.lead_t;
    for (std::uint8_t s : st.syl)
        e.syllables.push_back(s == 1 ? ETSyl::ET : ETSyl::EET);
    e.tail = st.tail;
    return e;
}

MAForm from_et(const ETForm& e) {
    return ma_of_state(run_tokens(tokens_of(e), ma_system()));
}

XYZForm to_xyz(const MAForm& m) {
    // Walk the E-T form left to right, tracking the pending power of E.
    // Moving T past E^p turns it into the 45-degree rotation about the
    // axis p steps along the cycle z -> x -> y.
    ETForm e = to_et(m);
    XYZForm out;
    static constexpr Axis cycle[3] = {Axis::Z, Axis::X, Axis::Y};
    int p = 0;
    if (e.lead_t) out.axes.push_back(Axis::Z);
    for (ETSyl s : e.syllables) {
        p = (p + (s == ETSyl::ET ? 1 : 2)) % 3;
        out.axes.push_back(cycle[p]);
    }
    CliffordElt epow = CliffordElt::identity();
    for (int i = 0; i < p; ++i) epow = clifford_mul(epow, cached_gate_clifford(Gate::E));
    out.tail = clifford_mul(epow, e.tail);
    return out;
}

MAForm from_xyz(const XYZForm& x) {
    return ma_of_state(run_tokens(tokens_of(x), ma_system()));
}

BSForm to_bs(const MAForm& m) {
    NfState st = run_tokens(tokens_of(m), bs_system());
    BSForm b;
    b.lead_t = st.lead_t;
    for (std::uint8_t s : st.syl)
        b.syllables.push_back(s == 1 ? BSSyl::HT : BSSyl::HSHT);
    b.tail = st.tail;
    return b;
}

MAForm from_bs(const BSForm& b) {
    return ma_of_state(run_tokens(tokens_of(b), ma_system()));
}

MAForm random_maform(std::mt19937_64& rng, unsigned t_count) {
    MAForm m;
    if (t_count > 0) m.lead_t = (rng() & 1) != 0;
    unsigned n = t_count - (m.lead_t ? 1 : 0);
    m.syllables.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        m.syllables.push_back((rng() & 1) ? MASyl::SHT : MASyl::HT);
    m.tail = CliffordElt::from_index(static_cast<int>(rng() % 192));
    return m;
}

}  // namespace maform
