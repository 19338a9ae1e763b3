#include "wildram/job.hpp"

#include <cctype>
#include <sstream>

#include "wildram/errors.hpp"

namespace wildram {

std::string to_string(BlockKind k) {
    switch (k) {
        case BlockKind::AS: return "as";
        case BlockKind::Witt2: return "witt2";
        case BlockKind::Cover: return "cover";
    }
    return "?";
}

namespace {

struct FieldDecl {
    std::uint32_t p = 0, e = 1;
    std::vector<std::uint32_t> modulus;
    int line = 0, col = 0;
};

// Cursor over one line; columns are 1-based.
class Cursor {
public:
    Cursor(const std::string& text, int line, int col0 = 1) : s_(text), line_(line), col0_(col0) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col()); }
    [[noreturn]] void fail_at(const std::string& msg, int col) const { throw ParseError(msg, line_, col); }

    int line() const { return line_; }
    int col() const { return col0_ + int(i_); }
    /// Column of the next token.
    int token_col() {
        skip_ws();
        return col();
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail_at(std::string("expected ") + what, token_col());
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s_.compare(i_, w.size(), w) != 0) return false;
        const std::size_t end = i_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        i_ = end;
        return true;
    }
    std::string word() {
        skip_ws();
        const std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return s_.substr(b, i_ - b);
    }
    std::int64_t integer(const char* what) {
        skip_ws();
        const std::size_t b = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        const std::size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) {
            i_ = b;
            fail(std::string("expected ") + what);
        }
        if (i_ - digits > 15) fail_at(std::string(what) + " is too large", col0_ + int(b));
        return std::stoll(s_.substr(b, i_ - b));
    }
    std::size_t pos() const { return i_; }

private:
    void skip_ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_;
    int col0_;
};

std::vector<std::uint32_t> parse_modulus(Cursor& c) {
    c.expect('[', "'[' to open the modulus");
    std::vector<std::uint32_t> m;
    do {
        const std::int64_t v = c.integer("modulus coefficient");
        if (v < 0) c.fail("modulus coefficients must be non-negative");
        m.push_back(std::uint32_t(v));
    } while (c.accept(','));
    c.expect(']', "']' to close the modulus");
    return m;
}

// "p=.. e=.. [modulus=[..]]" up to the end of the key list.
FieldDecl parse_field_keys(Cursor& c) {
    FieldDecl d;
    d.line = c.line();
    d.col = c.token_col();
    bool have_p = false;
    while (true) {
        const int at = c.token_col();
        if (c.accept_word("p")) {
            c.expect('=', "'=' after p");
            const std::int64_t v = c.integer("value of p");
            if (v < 2 || v > (1 << 20)) c.fail_at("p must be prime (got " + std::to_string(v) + ")", at);
            d.p = std::uint32_t(v);
            have_p = true;
        } else if (c.accept_word("e")) {
            c.expect('=', "'=' after e");
            const std::int64_t v = c.integer("value of e");
            if (v < 1 || v > 20) c.fail_at("extension degree e must lie in 1..20", at);
            d.e = std::uint32_t(v);
        } else if (c.accept_word("modulus")) {
            c.expect('=', "'=' after modulus");
            d.modulus = parse_modulus(c);
        } else {
            break;
        }
    }
    if (!have_p) c.fail("field declaration needs p=<prime>");
    return d;
}

FieldPtr make_field(const FieldDecl& d) {
    try {
        return FieldCtx::make(d.p, d.e, d.modulus);
    } catch (const InvalidInput& ex) {
        throw ParseError(ex.what(), d.line, d.col);
    }
}

bool same_decl(const FieldCtx& f, const FieldDecl& d) {
    return f.p() == d.p && f.e() == d.e && (d.modulus.empty() || d.modulus == f.modulus());
}

FieldElem parse_coeff(Cursor& c, const FieldCtx& f) {
    if (c.peek() == '[') {
        const int at = c.token_col();
        c.expect('[', "'['");
        std::vector<std::int64_t> coords;
        do coords.push_back(c.integer("coordinate")); while (c.accept(','));
        c.expect(']', "']' to close the coordinate list");
        if (coords.size() > f.e())
            c.fail_at("coefficient has " + std::to_string(coords.size()) + " coordinates but e = " +
                          std::to_string(f.e()),
                      at);
        return f.from_coords(coords);
    }
    return f.from_int(c.integer("coefficient"));
}

struct Term {
    std::int64_t exp;
    FieldElem coeff;
    int col;
};

// Terms in `var`, optionally closed by an O-term. Returns prec (kExact if none).
std::int64_t parse_terms(Cursor& c, const FieldCtx& f, char var, std::vector<Term>& out, bool allow_o) {
    bool negate = c.accept('-');
    while (true) {
        const int at = c.token_col();
        if (allow_o && c.peek() == 'O') {
            c.accept('O');
            c.expect('(', "'(' after O");
            if (!c.accept(var)) c.fail(std::string("expected ") + var + " in the O-term");
            c.expect('^', "'^' in the O-term");
            const std::int64_t n = c.integer("precision exponent");
            c.expect(')', "')' to close the O-term");
            if (negate) c.fail_at("the O-term cannot be negated", at);
            return n;
        }
        FieldElem coeff = f.one();
        bool have_coeff = false;
        if (c.peek() != var) {
            coeff = parse_coeff(c, f);
            have_coeff = true;
            c.accept('*');
        }
        std::int64_t exp = 0;
        if (c.accept(var)) {
            exp = 1;
            if (c.accept('^')) {
                if (c.accept('(')) {
                    exp = c.integer("exponent");
                    c.expect(')', "')' after the exponent");
                } else {
                    exp = c.integer("exponent");
                }
            }
        } else if (!have_coeff) {
            c.fail("expected a term");
        }
        if (negate) coeff = f.neg(coeff);
        out.push_back({exp, coeff, at});
        if (c.accept('+')) {
            negate = false;
        } else if (c.accept('-')) {
            negate = true;
        } else {
            break;
        }
    }
    return LaurentSeries::kExact;
}

LaurentSeries build(const FieldPtr& f, const std::vector<Term>& terms, std::int64_t prec, const Cursor& c) {
    std::map<std::int64_t, FieldElem> m;
    for (const Term& t : terms) {
        if (t.exp >= prec)
            c.fail_at("term of exponent " + std::to_string(t.exp) + " lies beyond O(t^" + std::to_string(prec) + ")",
                      t.col);
        auto [it, fresh] = m.emplace(t.exp, t.coeff);
        if (!fresh) it->second = f->add(it->second, t.coeff);
    }
    return LaurentSeries(f, m, prec);
}

// Optional "p=.. e=.. ;" prefix; returns the field to use.
FieldPtr series_field(Cursor& c, const FieldPtr& known) {
    if (c.peek() != 'p') {
        if (!known) c.fail("series needs a field: declare `field p=.. e=..` or prefix the literal with `p=.. e=..;`");
        return known;
    }
    const FieldDecl d = parse_field_keys(c);
    c.expect(';', "';' after the field prefix");
    if (known) {
        if (!same_decl(*known, d)) throw ParseError("series field differs from the declared field", d.line, d.col);
        return known;
    }
    return make_field(d);
}

LaurentSeries parse_t_series(Cursor& c, FieldPtr& field) {
    field = series_field(c, field);
    std::vector<Term> terms;
    const std::int64_t prec = parse_terms(c, *field, 't', terms, true);
    if (prec == LaurentSeries::kExact) c.fail("series literal must end with O(t^N)");
    return build(field, terms, prec, c);
}

LaurentSeries parse_x_poly(Cursor& c, const FieldPtr& field) {
    std::vector<Term> terms;
    parse_terms(c, *field, 'x', terms, false);
    for (const Term& t : terms)
        if (t.exp < 0)
            c.fail_at("cover data must be polynomials in x; x^" + std::to_string(t.exp) +
                          " puts a branch point at x = 0",
                      t.col);
    return build(field, terms, LaurentSeries::kExact, c);
}

void expect_end(Cursor& c) {
    if (!c.done()) c.fail("unexpected trailing input");
}

std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

}  // namespace

JobSpec parse_job(const std::string& text) {
    JobSpec job;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int field_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        Cursor c(line, lineno);
        if (c.done()) continue;
        const int at = c.token_col();
        const std::string kw = c.word();
        if (kw == "field") {
            if (field_line) c.fail_at("field declared twice (first on line " + std::to_string(field_line) + ")", at);
            if (!job.blocks.empty()) c.fail_at("the field must be declared before any extension block", at);
            job.field = make_field(parse_field_keys(c));
            field_line = lineno;
            expect_end(c);
        } else if (kw == "prec") {
            const std::int64_t n = c.integer("precision");
            if (n <= 0) c.fail_at("precision must be positive", at);
            job.prec = n;
            expect_end(c);
        } else if (kw == "as") {
            c.expect(':', "':' after as");
            ExtensionBlock b{BlockKind::AS, CoverKind::PCyclic, parse_t_series(c, job.field),
                             LaurentSeries::zero(job.field), lineno};
            expect_end(c);
            job.blocks.push_back(std::move(b));
        } else if (kw == "witt2") {
            c.expect(':', "':' after witt2");
            if (!c.accept_word("W2")) c.fail("expected W2( ... ; ... )");
            c.expect('(', "'(' after W2");
            LaurentSeries a = parse_t_series(c, job.field);
            c.expect(';', "';' between Witt components");
            LaurentSeries b = parse_t_series(c, job.field);
            c.expect(')', "')' to close W2");
            expect_end(c);
            job.blocks.push_back({BlockKind::Witt2, CoverKind::PCyclic, std::move(a), std::move(b), lineno});
        } else if (kw == "cover") {
            if (!job.field) c.fail_at("cover blocks need a preceding field declaration", at);
            const int kat = c.token_col();
            const std::string kind = c.word();
            ExtensionBlock b{BlockKind::Cover, CoverKind::PCyclic, LaurentSeries::zero(job.field),
                             LaurentSeries::zero(job.field), lineno};
            c.expect(':', "':' after the cover kind");
            if (kind == "pcyclic") {
                b.a = parse_x_poly(c, job.field);
            } else if (kind == "elementary") {
                b.cover = CoverKind::Elementary;
                b.a = parse_x_poly(c, job.field);
                c.expect(';', "';' between the two polynomials");
                b.b = parse_x_poly(c, job.field);
            } else if (kind == "cyclic") {
                b.cover = CoverKind::Cyclic;
                if (!c.accept_word("W2")) c.fail("expected W2( ... ; ... )");
                c.expect('(', "'(' after W2");
                b.a = parse_x_poly(c, job.field);
                c.expect(';', "';' between Witt components");
                b.b = parse_x_poly(c, job.field);
                c.expect(')', "')' to close W2");
            } else {
                c.fail_at("unknown cover kind '" + kind + "' (expected pcyclic, elementary or cyclic)", kat);
            }
            expect_end(c);
            job.blocks.push_back(std::move(b));
        } else {
            c.fail_at("unknown statement '" + kw + "'", at);
        }
    }

    if (job.blocks.empty()) throw ParseError("job has no extension block", lineno + 1, 1);
    const ExtensionBlock& first = job.blocks.front();
    if (job.blocks.size() > 2) throw ParseError("at most two extension blocks are allowed", job.blocks[2].line, 1);
    if (job.blocks.size() == 2) {
        const ExtensionBlock& second = job.blocks[1];
        if (second.kind != first.kind)
            throw ParseError("a compositum needs two blocks of the same type", second.line, 1);
        if (first.kind == BlockKind::Cover)
            throw ParseError("a job describes a single cover", second.line, 1);
    }
    return job;
}

LaurentSeries parse_series(const std::string& text, const FieldPtr& field) {
    Cursor c(text, 1);
    FieldPtr f = field;
    LaurentSeries s = parse_t_series(c, f);
    expect_end(c);
    return s;
}

LaurentSeries parse_series_literal(const std::string& text) {
    Cursor c(text, 1);
    if (c.peek() != 'p') c.fail("series literal must start with p=<prime> e=<degree>;");
    FieldPtr f;
    LaurentSeries s = parse_t_series(c, f);
    expect_end(c);
    return s;
}

namespace {

std::string field_keys(const FieldCtx& f) {
    std::string s = "p=" + std::to_string(f.p()) + " e=" + std::to_string(f.e());
    if (f.e() > 1) {
        s += " modulus=[";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(f.modulus()[i]);
        }
        s += "]";
    }
    return s;
}

}  // namespace

std::string render_series_literal(const LaurentSeries& s) { return field_keys(s.field()) + "; " + s.to_string(); }

std::string render_job(const JobSpec& job) {
    std::string out = "field " + field_keys(*job.field) + "\n";
    if (job.prec) out += "prec " + std::to_string(*job.prec) + "\n";
    for (const ExtensionBlock& b : job.blocks) {
        switch (b.kind) {
            case BlockKind::AS: out += "as: " + b.a.to_string() + "\n"; break;
            case BlockKind::Witt2:
                out += "witt2: W2(" + b.a.to_string() + " ; " + b.b.to_string() + ")\n";
                break;
            case BlockKind::Cover:
                out += "cover " + to_string(b.cover) + ": ";
                if (b.cover == CoverKind::PCyclic) out += b.a.to_string("x");
                else if (b.cover == CoverKind::Elementary) out += b.a.to_string("x") + " ; " + b.b.to_string("x");
                else out += "W2(" + b.a.to_string("x") + " ; " + b.b.to_string("x") + ")";
                out += "\n";
                break;
        }
    }
    return out;
}

}  // namespace wildram
