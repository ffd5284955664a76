#include "m0n/text.hpp"

#include <cctype>

namespace m0n {

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = get() == '-';
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            Polynomial t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            skip_space();
            if (peek() != '*')
                return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            base = pow(base, static_cast<int>(integer()));
        }
        return base;
    }

    Polynomial primary()
    {
        skip_space();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (get() != ')')
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(integer());
        if (c == 'a') {
            ++pos_;
            const int i = static_cast<int>(integer());
            if (i < 1 || i > n_ - 3)
                fail("a" + std::to_string(i) + " is not a generator for n=" + std::to_string(n_));
            return Polynomial(Monomial::a(i));
        }
        if (c == 'D') {
            ++pos_;
            skip_space();
            if (peek() == '_')
                ++pos_;
            if (get() != '{')
                fail("expected '{' after D");
            IndexSet set;
            for (;;) {
                skip_space();
                const long v = integer();
                if (v < 1 || v > n_)
                    fail("element " + std::to_string(v) + " outside {1.." + std::to_string(n_) + "}");
                if (set.contains(static_cast<int>(v)))
                    fail("repeated element in index set");
                set.insert(static_cast<int>(v));
                skip_space();
                const char d = get();
                if (d == '}')
                    break;
                if (d != ',')
                    fail("expected ',' or '}'");
            }
            if (!is_admissible(set, n_))
                fail("D" + set.to_string() + " is not admissible for n=" + std::to_string(n_));
            return Polynomial(Monomial::d(set));
        }
        fail("unexpected character");
    }

    long integer()
    {
        skip_space();
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000)
                fail("integer too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected integer");
        return v;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n)
{
    check_marking_count(n);
    return Parser(text, n).parse();
}

Monomial parse_monomial(std::string_view text, int n)
{
    const Polynomial p = parse_polynomial(text, n);
    if (p.size() != 1 || p.terms().begin()->second != 1)
        throw ParseError("expected a single monomial: \"" + std::string(text) + "\"");
    return p.terms().begin()->first;
}

}  // namespace m0n
