#include "ecom/coinv/polynomial.hpp"

#include <cctype>

#include "ecom/error.hpp"

namespace ecom::coinv {

Polynomial<Integer> elementary_symmetric(std::size_t n, std::size_t k) {
    Polynomial<Integer> p(n);
    // Subsets of size k by bitmask; n is tiny.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        Monomial m(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) m[i] = 1;
        p.add_term(m, Integer(1));
    }
    return p;
}

namespace {

class Parser {
public:
    Parser(const std::string& s, std::size_t n, bool with_y) : s_(s), n_(n), with_y_(with_y), nv_(with_y ? 2 * n : n) {}

    Polynomial<Rational> run() {
        auto p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t n_;
    bool with_y_;
    std::size_t nv_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    Polynomial<Rational> expr() {
        Polynomial<Rational> acc(nv_);
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        for (;;) {
            auto t = term();
            acc = negate ? acc - t : acc + t;
            if (peek('+')) {
                ++pos_;
                negate = false;
            } else if (peek('-')) {
                ++pos_;
                negate = true;
            } else {
                return acc;
            }
        }
    }

    Polynomial<Rational> term() {
        auto acc = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                skip();
                const Integer d = integer();
                if (d == 0) fail("division by zero");
                acc = acc.scaled(Rational(1, 1) / Rational(d));
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    Polynomial<Rational> power() {
        auto base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            const Integer e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    Polynomial<Rational> atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial<Rational>::constant(nv_, Rational(integer()));
        if (c == 'x' || (c == 'y' && with_y_)) {
            ++pos_;
            const Integer i = integer();
            if (i < 1 || i > static_cast<long>(n_)) fail("variable index out of range");
            const std::size_t idx = (c == 'y' ? n_ : 0) + i.get_ui() - 1;
            return Polynomial<Rational>::variable(nv_, idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

Polynomial<Rational> parse_polynomial(const std::string& text, std::size_t n, bool with_y) {
    return Parser(text, n, with_y).run();
}

std::string monomial_string(const Monomial& m, std::size_t n, bool with_y, std::size_t offset) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        const std::size_t idx = i + offset;
        const bool is_y = with_y && idx >= n;
        out += (is_y ? 'y' : 'x') + std::to_string((is_y ? idx - n : idx) + 1);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace ecom::coinv
