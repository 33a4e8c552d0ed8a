#include "m2c/ring_a.hpp"

#include <cctype>

namespace m2c {

namespace {

// strips whitespace, returns remaining text
std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Parses a leading F4 literal from s[pos...]; advances pos.
F4 take_f4(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("a_parse: expected field element at position " + std::to_string(pos));
    char c = s[pos];
    if (c == '0' || c == '1') {
        ++pos;
        return F4(static_cast<uint8_t>(c - '0'));
    }
    if (c == 'w') {
        ++pos;
        if (pos + 1 < s.size() && s[pos] == '^' && s[pos + 1] == '2') {
            pos += 2;
            return F4::w2();
        }
        return F4::w();
    }
    throw std::invalid_argument("a_parse: bad field element at position " + std::to_string(pos));
}

}  // namespace

std::string a_str(AElem x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (!x.a.is_zero()) out = f4_str(x.a);
    if (!x.b.is_zero()) {
        if (!out.empty()) out += "+";
        out += "i*";
        out += f4_str(x.b);
    }
    return out;
}

std::string a_str_u(AElem x) {
    auto [ap, bp] = to_u_coords(x);
    if (ap.is_zero() && bp.is_zero()) return "0";
    std::string out;
    if (!ap.is_zero()) out = f4_str(ap);
    if (!bp.is_zero()) {
        if (!out.empty()) out += "+";
        out += "u*";
        out += f4_str(bp);
    }
    return out;
}

AElem a_parse(const std::string& raw) {
    std::string s = strip_ws(raw);
    if (s.empty()) throw std::invalid_argument("a_parse: empty input");

    F4 f4_part(0), unit_part(0);
    bool have_unit = false;
    char unit = 0;  // 'i' or 'u'

    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        if (!first) {
            if (s[pos] != '+') throw std::invalid_argument("a_parse: expected '+' at position " + std::to_string(pos));
            ++pos;
        }
        first = false;
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'u')) {
            char un = s[pos];
            ++pos;
            F4 coeff = F4::one();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                coeff = take_f4(s, pos);
            }
            if (have_unit && unit != un) throw std::invalid_argument("a_parse: mixed i and u terms");
            unit = un;
            have_unit = true;
            unit_part += coeff;
        } else {
            f4_part += take_f4(s, pos);
        }
    }
    if (!have_unit || unit == 'i') return {f4_part, unit_part};
    return from_u_coords(f4_part, unit_part);  // a + u*b
}

}  // namespace m2c
