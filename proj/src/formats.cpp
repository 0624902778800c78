// Copyright (c) 2026 the maform authors
// SPDX-License-Identifier: Apache-2.0

#include "maform/formats.hpp"

#include <cctype>

namespace maform {

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "', got '" + text[pos] + "'");
        ++pos;
    }

    bool try_consume(char c) {
        if (!at_end() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits) throw ParseError("expected an integer");
        return Integer(std::string(text.substr(start, pos - start)));
    }

    unsigned exponent() {
        Integer k = integer();
        if (k < 0) throw ParseError("denominator exponent must be non-negative");
        return static_cast<unsigned>(k);
    }

    // optional "/s2^k" suffix; absent means k = 0
    unsigned denom_suffix() {
        if (try_consume('/')) {
            expect('s');
            expect('2');
            expect('^');
            return exponent();
        }
        return 0;
    }

    void expect_end() {
        if (!at_end()) throw ParseError("trailing characters after value");
    }
};

ZRoot2 zroot2(Cursor& c) {
    c.expect('(');
    Integer a = c.integer();
    c.expect(',');
    Integer b = c.integer();
    c.expect(')');
    return {std::move(a), std::move(b)};
}

ZOmega zomega(Cursor& c) {
    c.expect('(');
    Integer a = c.integer();
    c.expect(',');
    Integer b = c.integer();
    c.expect(',');
    Integer cc = c.integer();
    c.expect(',');
    Integer d = c.integer();
    c.expect(')');
    return {std::move(a), std::move(b), std::move(cc), std::move(d)};
}

DRoot2 droot2(Cursor& c) {
    ZRoot2 num = zroot2(c);
    return DRoot2(num, c.denom_suffix());
}

DOmega domega(Cursor& c) {
    ZOmega num = zomega(c);
    return DOmega(num, c.denom_suffix());
}

CliffordElt tail_elt(Cursor& c) {
    c.expect('[');
    c.expect('C');
    c.expect(':');
    int vals[4];
    for (int i = 0; i < 4; ++i) {
        if (i) c.expect(',');
        Integer x = c.integer();
        if (x < 0 || x > 7) throw ParseError("Clifford exponent out of range");
        vals[i] = static_cast<int>(x);
    }
    c.expect(']');
    if (vals[0] > 2 || vals[1] > 1 || vals[2] > 3)
        throw ParseError("Clifford exponent out of range");
    return CliffordElt{static_cast<std::uint8_t>(vals[0]), static_cast<std::uint8_t>(vals[1]),
                       static_cast<std::uint8_t>(vals[2]), static_cast<std::uint8_t>(vals[3])};
}

// Dot-separated syllable words followed by a [C:...] tail.
std::pair<std::vector<std::string>, CliffordElt> form_parts(Cursor& c) {
    std::vector<std::string> syls;
    while (c.peek() != '[') {
        std::string tok;
        while (!c.at_end() && std::isalnum(static_cast<unsigned char>(c.text[c.pos])))
            tok.push_back(c.text[c.pos++]);
        if (tok.empty()) throw ParseError("expected a syllable");
        c.expect('.');
        syls.push_back(std::move(tok));
    }
    CliffordElt tail = tail_elt(c);
    c.expect_end();
    return {std::move(syls), tail};
}

}  // namespace

ZRoot2 parse_zroot2(std::string_view text) {
    Cursor c{text};
    ZRoot2 v = zroot2(c);
    c.expect_end();
    return v;
}

ZOmega parse_zomega(std::string_view text) {
    Cursor c{text};
    ZOmega v = zomega(c);
    c.expect_end();
    return v;
}

DRoot2 parse_droot2(std::string_view text) {
    Cursor c{text};
    DRoot2 v = droot2(c);
    c.expect_end();
    return v;
}

DOmega parse_domega(std::string_view text) {
    Cursor c{text};
    DOmega v = domega(c);
    c.expect_end();
    return v;
}

Mat2 parse_mat2(std::string_view text) {
    Cursor c{text};
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        if (r) c.expect(';');
        for (int col = 0; col < 2; ++col) {
            if (col) c.expect(',');
            m.at(r, col) = domega(c);
        }
    }
    c.expect_end();
    return m;
}

Mat3 parse_mat3(std::string_view text) {
    Cursor c{text};
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        if (r) c.expect(';');
        for (int col = 0; col < 3; ++col) {
            if (col) c.expect(',');
            m.at(r, col) = droot2(c);
        }
    }
    c.expect_end();
    return m;
}

MAForm parse_maform(std::string_view text) {
    Cursor c{text};
    auto [syls, tail] = form_parts(c);
    MAForm m;
    m.tail = tail;
    for (size_t i = 0; i < syls.size(); ++i) {
        if (syls[i] == "T" && i == 0)
            m.lead_t = true;
        else if (syls[i] == "HT")
            m.syllables.push_back(MASyl::HT);
        else if (syls[i] == "SHT")
            m.syllables.push_back(MASyl::SHT);
        else
            throw ParseError("bad syllable '" + syls[i] + "' in normal form");
    }
    return m;
}

ETForm parse_etform(std::string_view text) {
    Cursor c{text};
    auto [syls, tail] = form_parts(c);
    ETForm e;
    e.tail = tail;
    for (size_t i = 0; i < syls.size(); ++i) {
        if (syls[i] == "T" && i == 0)
            e.lead_t = true;
        else if (syls[i] == "ET")
            e.syllables.push_back(ETSyl::ET);
        else if (syls[i] == "EET")
            e.syllables.push_back(ETSyl::EET);
        else
            throw ParseError("bad syllable '" + syls[i] + "' in E-T form");
    }
    return e;
}

XYZForm parse_xyzform(std::string_view text) {
    Cursor c{text};
    auto [syls, tail] = form_parts(c);
    XYZForm x;
    x.tail = tail;
    for (const std::string& s : syls) {
        if (s == "Tx")
            x.axes.push_back(Axis::X);
        else if (s == "Ty")
            x.axes.push_back(Axis::Y);
        else if (s == "Tz")
            x.axes.push_back(Axis::Z);
        else
            throw ParseError("bad axis '" + s + "' in rotation form");
    }
    return x;
}

BSForm parse_bsform(std::string_view text) {
    Cursor c{text};
    auto [syls, tail] = form_parts(c);
    BSForm b;
    b.tail = tail;
    for (size_t i = 0; i < syls.size(); ++i) {
        if (syls[i] == "T" && i == 0)
            b.lead_t = true;
        else if (syls[i] == "HT")
            b.syllables.push_back(BSSyl::HT);
        else if (syls[i] == "HSHT")
            b.syllables.push_back(BSSyl::HSHT);
        else
            throw ParseError("bad syllable '" + syls[i] + "' in form");
    }
    return b;
}

}  // namespace maform
