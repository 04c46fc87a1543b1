#include "bolsuper/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "bolsuper/error.hpp"

namespace bolsuper {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t line) : s_(text), line_(line) {}

    void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool atEnd() {
        skipWs();
        return pos_ >= s_.size();
    }
    std::size_t column() const { return pos_ + 1; }
    std::size_t line() const { return line_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
    [[noreturn]] void failAt(std::size_t column, const std::string& msg) const { throw ParseError(line_, column, msg); }

    bool consume(char c) {
        skipWs();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool peekIdentifier() {
        skipWs();
        return pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }
    bool peekDigit() {
        skipWs();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::string identifier() {
        if (!peekIdentifier()) fail("expected an identifier");
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Scalar number() {
        skipWs();
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == from) fail("expected digits");
            return std::string(s_.substr(from, pos_ - from));
        };
        mpz_class num(digits()), den(1);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            den = mpz_class(digits());
            if (den == 0) failAt(start + 1, "zero denominator");
        }
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }

    std::string_view rest() {
        skipWs();
        std::string_view r = s_.substr(pos_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.remove_suffix(1);
        pos_ = s_.size();
        return r;
    }

private:
    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct Line {
    std::size_t number;
    std::string_view text;  // comment stripped
};

struct ProductListing {
    std::vector<std::size_t> indices;
    Vector value;
    std::size_t line;
    std::size_t column;
};

struct Assignment {
    Vector value;
    std::size_t line;
};

Vector parseExpression(Cursor& c, const SuperSpace& space) {
    Vector v(space.dim());
    int sign = 1;
    if (c.consume('-'))
        sign = -1;
    else
        c.consume('+');
    for (;;) {
        Scalar coef = 1;
        bool haveCoef = false;
        const std::size_t termColumn = (c.skipWs(), c.column());
        if (c.peekDigit()) {
            coef = c.number();
            haveCoef = true;
            c.consume('*');
        }
        if (c.peekIdentifier()) {
            const std::size_t col = c.column();
            const std::string label = c.identifier();
            const auto idx = space.indexOf(label);
            if (!idx) c.failAt(col, "undeclared label '" + label + "'");
            v[*idx] += sign * coef;
        } else if (!haveCoef || sgn(coef) != 0) {
            c.failAt(termColumn, haveCoef ? "expected a basis label after the coefficient" : "expected a term");
        }
        if (c.atEnd()) break;
        if (c.consume('+'))
            sign = 1;
        else if (c.consume('-'))
            sign = -1;
        else
            c.fail("expected '+' or '-'");
    }
    return v;
}

void assign(std::map<std::vector<std::size_t>, Assignment>& table, const std::vector<std::size_t>& key,
            const Vector& value, const ProductListing& listing, const SuperSpace& space, bool implied) {
    auto [it, inserted] = table.try_emplace(key, Assignment{value, listing.line});
    if (inserted || it->second.value == value) return;
    std::string name = "[";
    for (std::size_t i = 0; i < key.size(); ++i) name += (i ? "," : "") + space.label(key[i]);
    name += "]";
    const std::string why = implied ? " through super skew-symmetry" : "";
    throw ParseError(listing.line, 1,
                     "product " + name + " contradicts the value set on line " + std::to_string(it->second.line) + why);
}

}  // namespace

AlgebraDef parseAlgebra(std::string_view text) {
    std::vector<Line> lines;
    {
        std::size_t number = 1, start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view l = text.substr(start, end - start);
            if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            lines.push_back({number, l});
            ++number;
            start = end + 1;
        }
    }

    std::optional<std::string> name;
    struct Declared {
        std::string label;
        std::size_t line;
        Parity parity;
    };
    std::vector<Declared> declaredLabels;
    std::optional<std::pair<bool, bool>> declared;
    std::vector<std::pair<Line, bool>> products;  // line, ternary?
    for (const Line& line : lines) {
        Cursor c(line.text, line.number);
        if (c.atEnd()) continue;
        const std::size_t col = c.column();
        const std::string keyword = c.identifier();
        if (keyword == "name") {
            if (name) c.failAt(col, "duplicate name declaration");
            name = std::string(c.rest());
        } else if (keyword == "even" || keyword == "odd") {
            const Parity parity = keyword == "even" ? Parity::Even : Parity::Odd;
            while (!c.atEnd()) {
                if (!c.peekIdentifier()) c.fail("expected a basis label");
                declaredLabels.push_back({c.identifier(), line.number, parity});
            }
        } else if (keyword == "structure") {
            if (declared) c.failAt(col, "duplicate structure declaration");
            std::pair<bool, bool> s{false, false};
            while (!c.atEnd()) {
                const std::size_t wcol = c.column();
                const std::string what = c.identifier();
                if (what == "binary")
                    s.first = true;
                else if (what == "ternary")
                    s.second = true;
                else
                    c.failAt(wcol, "expected 'binary' or 'ternary'");
            }
            declared = s;
        } else if (keyword == "binary" || keyword == "ternary") {
            products.push_back({line, keyword == "ternary"});
        } else {
            c.failAt(col, "unknown directive '" + keyword + "'");
        }
    }

    std::vector<std::string> labels;
    std::vector<Parity> parities;
    std::map<std::string, std::size_t> seen;
    for (const auto& [label, lineNo, parity] : declaredLabels) {
        if (auto [it, ok] = seen.emplace(label, lineNo); !ok)
            throw ParseError(lineNo, 1, "duplicate basis label '" + label + "' (first declared on line " +
                                            std::to_string(it->second) + ")");
        labels.push_back(label);
        parities.push_back(parity);
    }
    const SuperSpace space = SuperSpace::withParities(std::move(labels), std::move(parities));

    bool anyBinary = false, anyTernary = false;
    std::map<std::vector<std::size_t>, Assignment> binaryTable, ternaryTable;
    for (const auto& [line, ternary] : products) {
        Cursor c(line.text, line.number);
        c.identifier();
        (ternary ? anyTernary : anyBinary) = true;
        if (declared && !(ternary ? declared->second : declared->first))
            c.failAt(1, std::string(ternary ? "ternary" : "binary") + " product listed but not declared in 'structure'");
        c.expect('[');
        ProductListing listing{{}, {}, line.number, 1};
        const std::size_t arity = ternary ? 3 : 2;
        for (std::size_t k = 0; k < arity; ++k) {
            if (k) c.expect(',');
            const std::size_t col = (c.skipWs(), c.column());
            const std::string label = c.identifier();
            const auto idx = space.indexOf(label);
            if (!idx) c.failAt(col, "undeclared label '" + label + "'");
            listing.indices.push_back(*idx);
        }
        c.expect(']');
        c.expect('=');
        listing.column = (c.skipWs(), c.column());
        listing.value = parseExpression(c, space);

        Parity expected = Parity::Even;
        for (auto i : listing.indices) expected = expected + space.parity(i);
        for (std::size_t i = 0; i < space.dim(); ++i)
            if (sgn(listing.value[i]) != 0 && space.parity(i) != expected)
                c.failAt(listing.column, "grading violation: " + space.label(i) + " has the wrong parity for this product");

        // super skew-symmetry in the first two slots
        const auto& idx = listing.indices;
        const int sign = -signPow(bit(space.parity(idx[0])) * bit(space.parity(idx[1])));
        std::vector<std::size_t> swapped = idx;
        std::swap(swapped[0], swapped[1]);
        if (idx[0] == idx[1] && sign == -1 && !isZero(listing.value))
            c.failAt(1, "product of an even label with itself must vanish by skew-symmetry");
        auto& table = ternary ? ternaryTable : binaryTable;
        assign(table, idx, listing.value, listing, space, false);
        assign(table, swapped, scaled(listing.value, sign), listing, space, true);
    }

    const bool hasBinary = declared ? declared->first : (anyBinary || !anyTernary);
    const bool hasTernary = declared ? declared->second : (anyTernary || !anyBinary);
    std::optional<BinaryStructure> binary;
    std::optional<TernaryStructure> ternary;
    if (hasBinary) {
        binary.emplace(space);
        for (const auto& [key, a] : binaryTable) binary->set(key[0], key[1], a.value);
    }
    if (hasTernary) {
        ternary.emplace(space);
        for (const auto& [key, a] : ternaryTable) ternary->set(key[0], key[1], key[2], a.value);
    }
    return AlgebraDef(name.value_or(""), space, std::move(binary), std::move(ternary));
}

AlgebraDef loadAlgebraFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parseAlgebra(ss.str());
}

std::string formatVector(const SuperSpace& space, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        const Scalar mag = abs(v[i]);
        if (out.empty())
            out += sgn(v[i]) < 0 ? "-" : "";
        else
            out += sgn(v[i]) < 0 ? " - " : " + ";
        if (mag != 1) out += mag.get_str() + "*";
        out += space.label(i);
    }
    return out.empty() ? "0" : out;
}

std::string serializeAlgebra(const AlgebraDef& a) {
    const SuperSpace& space = a.space();
    const std::size_t d = space.dim();
    auto skewSign = [&](std::size_t i, std::size_t j) {
        return -signPow(bit(space.parity(i)) * bit(space.parity(j)));
    };
    std::ostringstream out;
    if (!a.name().empty()) out << "name " << a.name() << "\n";
    // one declaration line per run of equal parity, so the basis order survives
    for (std::size_t i = 0; i < d;) {
        out << (space.parity(i) == Parity::Even ? "even" : "odd");
        const Parity p = space.parity(i);
        for (; i < d && space.parity(i) == p; ++i) out << " " << space.label(i);
        out << "\n";
    }

    const bool binaryLines = a.hasBinary() && !a.binary().isZero();
    const bool ternaryLines = a.hasTernary() && !a.ternary().isZero();
    const bool inferredBinary = binaryLines || !ternaryLines;
    const bool inferredTernary = ternaryLines || !binaryLines;
    if (inferredBinary != a.hasBinary() || inferredTernary != a.hasTernary()) {
        out << "structure";
        if (a.hasBinary()) out << " binary";
        if (a.hasTernary()) out << " ternary";
        out << "\n";
    }

    if (a.hasBinary()) {
        const auto& c = a.binary();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (c(j, i) != scaled(c(i, j), skewSign(i, j)))
                    throw Error(ErrorKind::Precondition, "binary table is not super skew-symmetric");
                if (j < i || isZero(c(i, j))) continue;
                out << "binary [" << space.label(i) << "," << space.label(j) << "] = " << formatVector(space, c(i, j))
                    << "\n";
            }
    }
    if (a.hasTernary()) {
        const auto& t = a.ternary();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    if (t(j, i, k) != scaled(t(i, j, k), skewSign(i, j)))
                        throw Error(ErrorKind::Precondition, "ternary table is not left super skew-symmetric");
                    if (j < i || isZero(t(i, j, k))) continue;
                    out << "ternary [" << space.label(i) << "," << space.label(j) << "," << space.label(k)
                        << "] = " << formatVector(space, t(i, j, k)) << "\n";
                }
    }
    return out.str();
}

}  // namespace bolsuper
