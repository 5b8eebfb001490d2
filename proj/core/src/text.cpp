#include "qslice/text.hpp"

#include <cctype>
#include <cstdlib>

#include "qslice/errors.hpp"

namespace qslice {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char take() { return text[pos++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, pos);
    }
};

std::string take_digits(Cursor& c) {
    std::string out;
    while (!c.done() && is_digit(c.peek())) out += c.take();
    if (out.empty()) c.fail("expected digits");
    return out;
}

// number := digits ['/' digits | '.' digits]
Rational take_number(Cursor& c) {
    std::string intpart = take_digits(c);
    if (c.peek() == '/') {
        c.take();
        std::string den = take_digits(c);
        mpz_class d(den);
        if (d == 0) c.fail("zero denominator");
        Rational q(mpz_class(intpart), d);
        q.canonicalize();
        return q;
    }
    if (c.peek() == '.') {
        c.take();
        std::string frac = take_digits(c);
        mpz_class scale = 1;
        for (std::size_t s = 0; s < frac.size(); ++s) scale *= 10;
        Rational q(mpz_class(intpart) * scale + mpz_class(frac), scale);
        q.canonicalize();
        return q;
    }
    return Rational(mpz_class(intpart));
}

Rational take_signed_number(Cursor& c) {
    c.skip_ws();
    bool neg = false;
    if (c.peek() == '+' || c.peek() == '-') neg = (c.take() == '-');
    c.skip_ws();
    Rational q = take_number(c);
    return neg ? Rational(-q) : q;
}

bool is_unit_char(char c) { return c == 'i' || c == 'j' || c == 'k'; }

void add_axis(RQuat& q, char unit, const Rational& value) {
    switch (unit) {
        case 'i': q.x += value; break;
        case 'j': q.y += value; break;
        case 'k': q.z += value; break;
        default: q.w += value; break;
    }
}

// "(w,x,y,z)"
RQuat take_tuple(Cursor& c) {
    if (c.take() != '(') c.fail("expected '('");
    RQuat q;
    Rational* slots[4] = {&q.w, &q.x, &q.y, &q.z};
    for (int s = 0; s < 4; ++s) {
        *slots[s] = take_signed_number(c);
        c.skip_ws();
        char expect = (s < 3) ? ',' : ')';
        if (c.peek() != expect) c.fail(std::string("expected '") + expect + "'");
        c.take();
    }
    return q;
}

// literal := signed-part+ with part := number unit? | unit
RQuat take_literal(Cursor& c) {
    RQuat q;
    bool first = true;
    while (true) {
        c.skip_ws();
        bool neg = false;
        if (c.peek() == '+' || c.peek() == '-') {
            neg = (c.take() == '-');
            c.skip_ws();
        } else if (!first) {
            break;
        }
        Rational value(1);
        bool has_number = false;
        if (is_digit(c.peek())) {
            value = take_number(c);
            has_number = true;
        }
        char unit = '\0';
        if (is_unit_char(c.peek())) unit = c.take();
        if (!has_number && unit == '\0') c.fail("expected a number or i/j/k");
        add_axis(q, unit, neg ? Rational(-value) : value);
        first = false;
    }
    return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Cursor c{text};
    Rational q = take_signed_number(c);
    c.skip_ws();
    if (!c.done()) c.fail("trailing characters after number");
    return q;
}

RQuat parse_quaternion_literal(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    RQuat q = (c.peek() == '(') ? take_tuple(c) : take_literal(c);
    c.skip_ws();
    if (!c.done()) c.fail("trailing characters after quaternion literal");
    return q;
}

// ---------------------------------------------------------------------------
// expression parsing

namespace {

struct FactorValue {
    bool is_var = false;
    std::uint32_t var = 0;
    std::uint32_t power = 1;
    RQuat constant = RQuat::one();
};

class ExprParser {
public:
    ExprParser(std::string_view source, std::uint32_t arity)
        : c_{source}, arity_(arity) {}

    std::vector<OrderedMonomial> parse() {
        std::vector<OrderedMonomial> terms;
        c_.skip_ws();
        bool neg = take_sign(true);
        terms.push_back(parse_term(neg));
        while (true) {
            c_.skip_ws();
            if (c_.done()) break;
            if (c_.peek() != '+' && c_.peek() != '-')
                c_.fail("expected '+', '-' or end of expression");
            bool minus = (c_.take() == '-');
            terms.push_back(parse_term(minus));
        }
        return terms;
    }

private:
    bool take_sign(bool allow_none) {
        c_.skip_ws();
        if (c_.peek() == '-') {
            c_.take();
            return true;
        }
        if (c_.peek() == '+') {
            c_.take();
            return false;
        }
        if (!allow_none) c_.fail("expected sign");
        return false;
    }

    OrderedMonomial parse_term(bool negated) {
        std::size_t term_start = c_.pos;
        OrderedMonomial mono;
        mono.coeff = negated ? -RQuat::one() : RQuat::one();
        parse_factor_into(mono, term_start);
        while (true) {
            c_.skip_ws();
            if (c_.peek() != '*') break;
            c_.take();
            parse_factor_into(mono, term_start);
        }
        return mono;
    }

    void parse_factor_into(OrderedMonomial& mono, std::size_t term_start) {
        FactorValue f = parse_factor();
        if (f.is_var) {
            if (!mono.vars.empty() && f.var < mono.vars.back())
                throw NonOrderedMonomial(
                    "variable indices decrease in term '" +
                    std::string(c_.text.substr(term_start, c_.pos - term_start)) + "'");
            for (std::uint32_t s = 0; s < f.power; ++s) mono.vars.push_back(f.var);
        } else {
            mono.coeff = mono.coeff * f.constant;
        }
    }

    FactorValue parse_factor() {
        FactorValue f = parse_primary();
        while (true) {
            c_.skip_ws();
            if (c_.peek() != '^') break;
            c_.take();
            c_.skip_ws();
            std::uint32_t e = take_uint();
            if (f.is_var) {
                f.power *= e;
            } else {
                RQuat base = f.constant;
                f.constant = RQuat::one();
                for (std::uint32_t s = 0; s < e; ++s) f.constant = f.constant * base;
            }
        }
        return f;
    }

    FactorValue parse_primary() {
        c_.skip_ws();
        FactorValue f;
        char ch = c_.peek();
        if (ch == 'x') {
            c_.take();
            f.is_var = true;
            f.var = take_uint();
            if (f.var < 1 || f.var > arity_)
                c_.fail("variable x" + std::to_string(f.var) + " outside 1.." +
                        std::to_string(arity_));
            return f;
        }
        if (ch == '(') {
            f.constant = take_tuple(c_);
            return f;
        }
        if (is_digit(ch)) {
            Rational value = take_number(c_);
            if (is_unit_char(c_.peek())) {
                RQuat q;
                add_axis(q, c_.take(), value);
                f.constant = q;
            } else {
                f.constant = RQuat::real(value);
            }
            return f;
        }
        if (is_unit_char(ch)) {
            RQuat q;
            add_axis(q, c_.take(), Rational(1));
            f.constant = q;
            return f;
        }
        c_.fail("expected a variable, constant or tuple");
    }

    std::uint32_t take_uint() {
        std::string d = take_digits(c_);
        return static_cast<std::uint32_t>(std::strtoul(d.c_str(), nullptr, 10));
    }

    Cursor c_;
    std::uint32_t arity_;
};

// single-axis decomposition for compact printing
bool single_axis(const RQuat& q, Rational& value, char& unit) {
    int axes = (q.w != 0) + (q.x != 0) + (q.y != 0) + (q.z != 0);
    if (axes > 1) return false;
    if (q.x != 0) {
        value = q.x;
        unit = 'i';
    } else if (q.y != 0) {
        value = q.y;
        unit = 'j';
    } else if (q.z != 0) {
        value = q.z;
        unit = 'k';
    } else {
        value = q.w;  // also covers zero
        unit = '\0';
    }
    return true;
}

}  // namespace

Expression parse_expression(std::string_view source, std::uint32_t arity) {
    check_arity_limit(arity);
    ExprParser parser(source, arity);
    Expression e;
    e.source = std::string(source);
    e.terms = parser.parse();
    return e;
}

std::string print_expression(const std::vector<OrderedMonomial>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const OrderedMonomial& term : terms) {
        Rational value;
        char unit = '\0';
        bool compact = single_axis(term.coeff, value, unit);
        bool negative = compact && value < 0;
        Rational mag = negative ? Rational(-value) : value;

        std::string vars;
        for (std::size_t s = 0; s < term.vars.size();) {
            std::size_t run = s;
            while (run < term.vars.size() && term.vars[run] == term.vars[s]) ++run;
            if (!vars.empty()) vars += '*';
            vars += "x" + std::to_string(term.vars[s]);
            if (run - s > 1) vars += "^" + std::to_string(run - s);
            s = run;
        }

        std::string coeff;
        if (compact) {
            bool is_one = (mag == 1 && unit == '\0');
            if (!is_one || vars.empty()) {
                if (mag == 1 && unit != '\0')
                    coeff = std::string(1, unit);
                else
                    coeff = to_string(mag) + (unit ? std::string(1, unit) : std::string());
            }
        } else {
            coeff = "(" + to_string(term.coeff.w) + "," + to_string(term.coeff.x) + "," +
                    to_string(term.coeff.y) + "," + to_string(term.coeff.z) + ")";
        }

        std::string body = vars;
        if (!coeff.empty()) body += (body.empty() ? "" : "*") + coeff;
        if (body.empty()) body = "1";

        if (out.empty())
            out += (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

// ---------------------------------------------------------------------------
// canonical polynomial text

QPolynomial parse_polynomial(std::string_view text, std::uint32_t arity) {
    Cursor c{text};
    QPolynomial p(arity);
    c.skip_ws();
    if (c.peek() == '0') {
        c.take();
        c.skip_ws();
        if (!c.done()) c.fail("trailing characters after zero polynomial");
        return p;
    }
    while (true) {
        c.skip_ws();
        if (c.peek() != '(') c.fail("expected '(' opening a coefficient");
        std::size_t open = c.pos;
        std::size_t close = text.find(')', open);
        if (close == std::string_view::npos) c.fail("unterminated coefficient");
        RQuat coeff = parse_quaternion_literal(text.substr(open + 1, close - open - 1));
        c.pos = close + 1;

        QPolynomial::Exponents exps(2 * arity, 0);
        while (true) {
            c.skip_ws();
            if (c.peek() != '*') break;
            c.take();
            c.skip_ws();
            char ch = c.peek();
            if (is_unit_char(ch)) {
                RQuat q;
                add_axis(q, c.take(), Rational(1));
                coeff = coeff * q;
                continue;
            }
            if (ch != 'a' && ch != 'b') c.fail("expected a variable or unit factor");
            c.take();
            std::string d = take_digits(c);
            std::uint32_t idx = static_cast<std::uint32_t>(std::strtoul(d.c_str(), nullptr, 10));
            if (idx < 1 || idx > arity)
                c.fail("variable index outside 1.." + std::to_string(arity));
            std::uint32_t e = 1;
            if (c.peek() == '^') {
                c.take();
                std::string ed = take_digits(c);
                e = static_cast<std::uint32_t>(std::strtoul(ed.c_str(), nullptr, 10));
            }
            exps[(ch == 'a' ? 0 : arity) + idx - 1] += e;
        }
        p.add_term(exps, coeff);

        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+') c.fail("expected '+' between polynomial terms");
        c.take();
    }
    return p;
}

std::vector<DQuat> parse_point_list(std::string_view text, std::uint32_t arity) {
    std::vector<DQuat> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string_view part =
            text.substr(start, end == std::string_view::npos ? text.size() - start
                                                             : end - start);
        Cursor c{part};
        c.skip_ws();
        if (c.peek() != '(') c.fail("expected '(' opening a point tuple");
        c.take();
        double comps[4];
        for (int s = 0; s < 4; ++s) {
            c.skip_ws();
            std::size_t comp_start = c.pos;
            char sep = (s < 3) ? ',' : ')';
            std::size_t stop = part.find(sep, comp_start);
            if (stop == std::string_view::npos) c.fail("unterminated point tuple");
            std::string comp(part.substr(comp_start, stop - comp_start));
            try {
                if (comp.find('/') != std::string::npos)
                    comps[s] = to_double(parse_rational(comp));
                else
                    comps[s] = std::stod(comp);
            } catch (const std::exception&) {
                c.fail("bad point component '" + comp + "'");
            }
            c.pos = stop + 1;
        }
        c.skip_ws();
        if (!c.done()) c.fail("trailing characters after point tuple");
        points.push_back(DQuat(comps[0], comps[1], comps[2], comps[3]));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (points.size() != arity)
        throw ArityMismatch("point list has " + std::to_string(points.size()) +
                            " coordinates, expected " + std::to_string(arity));
    return points;
}

SubsetIndex parse_subset(std::string_view text, std::uint32_t arity) {
    Cursor c{text};
    c.skip_ws();
    if (c.peek() != '{') c.fail("expected '{'");
    c.take();
    SubsetIndex s;
    c.skip_ws();
    if (c.peek() != '}') {
        while (true) {
            c.skip_ws();
            std::string d = take_digits(c);
            std::uint32_t h = static_cast<std::uint32_t>(std::strtoul(d.c_str(), nullptr, 10));
            check_variable_index(h, arity);
            s = s.with(h);
            c.skip_ws();
            if (c.peek() == ',') {
                c.take();
                continue;
            }
            break;
        }
    }
    if (c.peek() != '}') c.fail("expected '}'");
    c.take();
    c.skip_ws();
    if (!c.done()) c.fail("trailing characters after subset");
    return s;
}

}  // namespace qslice
