// Sparse polynomial types: bivariate (the universal function representation
// of the library) and univariate with a space-flavor tag.
//
// Coefficient maps never store exact zeros; iteration is graded
// lexicographic, so every summation over a polynomial is deterministic.
#pragma once

#include <cctype>
#include <charconv>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "balldir/errors.hpp"

namespace balldir {

using Complex = std::complex<double>;

struct MultiIndex {
    int k = 0;
    int l = 0;

    int total() const { return k + l; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    // graded order: by total degree, then by k
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.k < b.k;
    }
    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        return {a.k + b.k, a.l + b.l};
    }
};

class BivarPoly {
public:
    using Terms = std::map<MultiIndex, Complex>;

    BivarPoly() = default;
    explicit BivarPoly(double c) { set({0, 0}, Complex(c)); }
    explicit BivarPoly(Complex c) { set({0, 0}, c); }

    static BivarPoly monomial(MultiIndex idx, Complex c = 1.0) {
        BivarPoly p;
        p.set(idx, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [idx, c] : terms_) d = std::max(d, idx.total());
        return d;
    }

    Complex coeff(MultiIndex idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Complex(0.0) : it->second;
    }

    // exact-zero pruning only; no epsilon thresholds
    void set(MultiIndex idx, Complex c) {
        if (c == Complex(0.0))
            terms_.erase(idx);
        else
            terms_[idx] = c;
    }

    void add_to(MultiIndex idx, Complex c) { set(idx, coeff(idx) + c); }

    bool is_real() const {
        for (const auto& [idx, c] : terms_)
            if (c.imag() != 0.0) return false;
        return true;
    }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [idx, c] : b.terms_) r.add_to(idx, c);
        return r;
    }

    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        for (const auto& [idx, c] : b.terms_) r.add_to(idx, -c);
        return r;
    }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ia, ca] : a.terms_)
            for (const auto& [ib, cb] : b.terms_) r.add_to(ia + ib, ca * cb);
        return r;
    }

    friend BivarPoly operator*(Complex s, const BivarPoly& a) {
        BivarPoly r;
        for (const auto& [idx, c] : a.terms_) r.set(idx, s * c);
        return r;
    }

    // multiplication by the monomial z1^s.k z2^s.l
    BivarPoly shifted(MultiIndex s) const {
        BivarPoly r;
        for (const auto& [idx, c] : terms_) r.set(idx + s, c);
        return r;
    }

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    Terms terms_;
};

enum class Flavor { DiskD, SmallDiskd };

class UnivarPoly {
public:
    using Coeffs = std::map<int, Complex>;

    UnivarPoly() = default;
    explicit UnivarPoly(Flavor f) : flavor_(f) {}

    Flavor flavor() const { return flavor_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Complex coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Complex(0.0) : it->second;
    }

    void set(int k, Complex c) {
        if (c == Complex(0.0))
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }

    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

private:
    Flavor flavor_ = Flavor::DiskD;
    Coeffs coeffs_;
};

// ---------------------------------------------------------------------------
// text form
//
// expr    := term (('+'|'-') term)*
// term    := factor ('*' factor)*
// factor  := ('+'|'-') factor | primary ('^' integer)?
// primary := number | 'i' | 'z1' | 'z2' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace detail {

struct PolyLexer {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
};

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : lex_{text} {}

    BivarPoly parse() {
        BivarPoly p = expr();
        if (lex_.peek() != '\0')
            throw ParseError("unexpected trailing input", lex_.pos);
        return p;
    }

private:
    PolyLexer lex_;

    BivarPoly expr() {
        BivarPoly acc = term();
        for (;;) {
            char c = lex_.peek();
            if (c == '+') {
                ++lex_.pos;
                acc = acc + term();
            } else if (c == '-') {
                ++lex_.pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    BivarPoly term() {
        BivarPoly acc = factor();
        while (lex_.peek() == '*') {
            ++lex_.pos;
            acc = acc * factor();
        }
        return acc;
    }

    BivarPoly factor() {
        char c = lex_.peek();
        if (c == '+') {
            ++lex_.pos;
            return factor();
        }
        if (c == '-') {
            ++lex_.pos;
            return Complex(-1.0) * factor();
        }
        BivarPoly base = primary();
        if (lex_.peek() == '^') {
            ++lex_.pos;
            int e = integer();
            BivarPoly r(1.0);
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    BivarPoly primary() {
        char c = lex_.peek();
        std::size_t here = lex_.pos;
        if (c == '(') {
            ++lex_.pos;
            BivarPoly p = expr();
            if (lex_.peek() != ')') throw ParseError("expected ')'", lex_.pos);
            ++lex_.pos;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return BivarPoly(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (lex_.pos < lex_.src.size() &&
                   (std::isalnum(static_cast<unsigned char>(lex_.src[lex_.pos]))))
                id += lex_.src[lex_.pos++];
            if (id == "i") return BivarPoly(Complex(0.0, 1.0));
            if (id == "z1") return BivarPoly::monomial({1, 0});
            if (id == "z2") return BivarPoly::monomial({0, 1});
            throw ParseError("unknown variable '" + id + "'", here);
        }
        throw ParseError("expected number, variable or '('", here);
    }

    double number() {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        const std::string_view s = lex_.src;
        while (lex_.pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[lex_.pos])) || s[lex_.pos] == '.'))
            ++lex_.pos;
        if (lex_.pos < s.size() && (s[lex_.pos] == 'e' || s[lex_.pos] == 'E')) {
            std::size_t save = lex_.pos++;
            if (lex_.pos < s.size() && (s[lex_.pos] == '+' || s[lex_.pos] == '-')) ++lex_.pos;
            if (lex_.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[lex_.pos]))) {
                while (lex_.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[lex_.pos])))
                    ++lex_.pos;
            } else {
                lex_.pos = save;  // 'e' was not an exponent
            }
        }
        double v = 0.0;
        auto res = std::from_chars(s.data() + start, s.data() + lex_.pos, v);
        if (res.ec != std::errc() || res.ptr != s.data() + lex_.pos)
            throw ParseError("malformed number", start);
        return v;
    }

    int integer() {
        lex_.skip_ws();
        std::size_t start = lex_.pos;
        const std::string_view s = lex_.src;
        while (lex_.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[lex_.pos])))
            ++lex_.pos;
        int v = 0;
        auto res = std::from_chars(s.data() + start, s.data() + lex_.pos, v);
        if (res.ec != std::errc() || lex_.pos == start)
            throw ParseError("expected nonnegative integer exponent", start);
        return v;
    }
};

inline std::string format_double(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace detail

inline BivarPoly parse_poly(std::string_view text) {
    return detail::PolyParser(text).parse();
}

// Canonical text form; parse(to_string(p)) == p exactly.
inline std::string to_string(const BivarPoly& p) {
    using detail::format_double;
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : p.terms()) {
        std::string mono;
        if (idx.k > 0) mono += "z1" + (idx.k > 1 ? "^" + std::to_string(idx.k) : "");
        if (idx.l > 0) {
            if (!mono.empty()) mono += "*";
            mono += "z2" + (idx.l > 1 ? "^" + std::to_string(idx.l) : "");
        }
        std::string coef;
        bool negate = false;
        if (c.imag() == 0.0) {
            double re = c.real();
            negate = re < 0.0;
            double mag = negate ? -re : re;
            if (mag == 1.0 && !mono.empty())
                coef = "";
            else
                coef = format_double(mag);
        } else {
            // complex coefficient, printed as an exact parseable subexpression
            coef = "(" + format_double(c.real()) +
                   (c.imag() < 0.0 ? " - " : " + ") +
                   format_double(std::abs(c.imag())) + "*i)";
        }
        if (first) {
            out += negate ? "-" : "";
            first = false;
        } else {
            out += negate ? " - " : " + ";
        }
        if (!coef.empty()) {
            out += coef;
            if (!mono.empty()) out += "*";
        }
        out += mono;
    }
    return out;
}

// JSON coefficient form {"terms":[{"k":int,"l":int,"re":float,"im":float}]}
inline nlohmann::json to_json(const BivarPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, c] : p.terms())
        terms.push_back({{"k", idx.k}, {"l", idx.l}, {"re", c.real()}, {"im", c.imag()}});
    return {{"terms", terms}};
}

inline BivarPoly poly_from_json(const nlohmann::json& j) {
    BivarPoly p;
    for (const auto& t : j.at("terms")) {
        int k = t.at("k").get<int>();
        int l = t.at("l").get<int>();
        if (k < 0 || l < 0) throw DomainError("negative exponent in polynomial JSON");
        p.add_to({k, l}, Complex(t.at("re").get<double>(), t.at("im").get<double>()));
    }
    return p;
}

}  // namespace balldir
