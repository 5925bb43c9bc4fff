#include "semreg/parser.hpp"

#include <cctype>
#include <sstream>

namespace semreg {

namespace {

struct Parser {
    const std::string& text;
    DomainMode mode;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << "parse error at column " << pos + 1 << ": " << what;
        throw error(msg.str());
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    SliceFn parse() {
        SliceFn value = expr();
        skip_space();
        if (pos != text.size()) fail("unexpected trailing input");
        return value;
    }

    SliceFn expr() {
        SliceFn acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    SliceFn term() {
        SliceFn acc = unary();
        for (;;) {
            if (eat('*'))
                acc = star_product(acc, unary());
            else if (eat('/')) {
                SliceFn d = unary();
                if (d.is_zero()) fail("division by zero");
                if (symmetrized(d).is_zero()) fail("division by a zero divisor");
                acc = star_product(acc, star_inverse(d));
            } else
                return acc;
        }
    }

    SliceFn unary() {
        if (eat('-')) return -unary();
        return power();
    }

    SliceFn power() {
        SliceFn base = atom();
        while (eat('^')) {
            bool paren = eat('(');
            bool neg = eat('-');
            long e = integer("exponent");
            if (paren && !eat(')')) fail("expected ')' after exponent");
            if (neg) {
                if (symmetrized(base).is_zero()) fail("negative power of a non-invertible element");
                base = star_pow(star_inverse(base), e);
            } else {
                base = star_pow(base, e);
            }
        }
        return base;
    }

    long integer(const char* what) {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(std::string("expected ") + what);
        return std::stol(text.substr(start, pos - start));
    }

    SliceFn atom() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Rat value(text.substr(start, pos - start));
            return SliceFn::scalar(ScalarElem::constant(value, mode));
        }
        switch (c) {
            case 'x':
                ++pos;
                return SliceFn::scalar(ScalarElem::x(mode));
            case 'J':
                ++pos;
                if (mode == DomainMode::Slice) fail("J is not available in slice mode");
                return SliceFn::scalar(ScalarElem::J(mode));
            case 'i':
                ++pos;
                return SliceFn::basis_unit(1, mode);
            case 'j':
                ++pos;
                return SliceFn::basis_unit(2, mode);
            case 'k':
                ++pos;
                return SliceFn::basis_unit(3, mode);
            case '(': {
                ++pos;
                SliceFn inner = expr();
                if (!eat(')')) fail("expected ')'");
                return inner;
            }
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }
};

void append_rat(std::ostream& out, const Rat& r, bool lead) {
    Rat a = r;
    a.canonicalize();
    bool neg = sgn(a) < 0;
    if (neg) out << (lead ? "-" : " - ");
    else if (!lead) out << " + ";
    Rat mag = abs(a);
    out << mag.get_num().get_str();
    if (mag.get_den() != 1) out << "/" << mag.get_den().get_str();
}

}  // namespace

SliceFn parse_slice_fn(const std::string& text, DomainMode mode) {
    Parser p{text, mode};
    return p.parse();
}

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool lead = true;
    for (int n = p.degree(); n >= 0; --n) {
        Rat c = p.coeff(n);
        if (sgn(c) == 0) continue;
        Rat mag = abs(c);
        if (n == 0 || mag != 1) {
            append_rat(out, c, lead);
            if (n > 0) out << "*";
        } else {
            out << (sgn(c) < 0 ? (lead ? "-" : " - ") : (lead ? "" : " + "));
        }
        if (n == 1)
            out << "x";
        else if (n > 1)
            out << "x^" << n;
        lead = false;
    }
    return out.str();
}

std::string to_string(const RatFun& r) {
    return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_string(const ScalarElem& s) {
    std::string out = to_string(s.a());
    if (!s.b().is_zero()) out += " + J*" + to_string(s.b());
    return out;
}

std::string to_string(const SliceFn& f) {
    return to_string(f[0]) + " + (" + to_string(f[1]) + ")*i + (" + to_string(f[2]) +
           ")*j + (" + to_string(f[3]) + ")*k";
}

}  // namespace semreg
