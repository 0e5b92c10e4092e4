#include "qstretch/cli/algebra_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qstretch::cli {

ParseError::ParseError(std::string message, std::size_t line, std::size_t column, std::optional<std::size_t> relation)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            (relation ? "relation " + std::to_string(*relation) + ": " : std::string()) + message),
      line_(line),
      column_(column),
      relation_(relation) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return !is_space(c) && c != '*' && c != '+' && c != '-' && c != ':'; }

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

class LineCursor {
public:
    LineCursor(std::string_view line, std::size_t number) : line_(line), number_(number) {}

    void skip_space() {
        while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= line_.size();
    }
    char peek() {
        skip_space();
        return pos_ < line_.size() ? line_[pos_] : '\0';
    }
    std::size_t column() const { return pos_ + 1; }
    bool accept(std::string_view s) {
        skip_space();
        if (line_.substr(pos_).starts_with(s)) {
            pos_ += s.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view s) {
        if (!accept(s)) fail("expected '" + std::string(s) + "'");
    }
    Token name(std::string_view what) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
        if (pos_ == start) fail("expected " + std::string(what));
        return {std::string(line_.substr(start, pos_ - start)), start + 1};
    }
    Token digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.size() && is_digit(line_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a number");
        return {std::string(line_.substr(start, pos_ - start)), start + 1};
    }
    [[noreturn]] void fail(const std::string& message, std::optional<std::size_t> relation = std::nullopt) const {
        throw ParseError(message, number_, pos_ + 1, relation);
    }
    std::size_t line() const { return number_; }

private:
    std::string_view line_;
    std::size_t number_;
    std::size_t pos_ = 0;
};

struct RawRelation {
    std::string text;
    std::size_t line;
    std::size_t column;
};

PathElement parse_relation(const RawRelation& raw, const Quiver& q, const Field& field, std::size_t index) {
    LineCursor cur(raw.text, raw.line);
    auto fail_at = [&](std::size_t column, const std::string& msg) -> ParseError {
        return ParseError(msg, raw.line, raw.column + column - 1, index);
    };
    PathElement x(field);
    if (cur.done()) throw fail_at(cur.column(), "empty relation");
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.accept("+")) {
        } else if (cur.accept("-")) {
            negative = true;
        } else if (!first) {
            throw fail_at(cur.column(), "expected '+' or '-'");
        }
        first = false;
        mpq_class coeff = 1;
        std::vector<ArrowId> word;
        std::size_t term_column = cur.column();
        while (true) {
            if (is_digit(cur.peek())) {
                if (!word.empty()) throw fail_at(cur.column(), "coefficient after an arrow");
                Token num = cur.digits();
                mpq_class c(mpz_class(num.text), 1);
                if (cur.accept("/")) {
                    Token den = cur.digits();
                    mpz_class d(den.text);
                    if (d == 0) throw fail_at(den.column, "zero denominator");
                    c = mpq_class(mpz_class(num.text), d);
                    c.canonicalize();
                }
                coeff *= c;
            } else {
                Token t = cur.name("an arrow name");
                auto a = q.find_arrow(t.text);
                if (!a) throw fail_at(t.column, "unknown arrow '" + t.text + "'");
                if (!word.empty() && q.arrow(word.back()).target != q.arrow(*a).source) {
                    throw fail_at(t.column, "arrow '" + t.text + "' does not start where the path ends");
                }
                word.push_back(*a);
            }
            if (!cur.accept("*")) break;
        }
        if (word.empty()) {
            if (coeff == 0) continue;
            throw fail_at(term_column, "term without arrows");
        }
        if (negative) coeff = -coeff;
        Scalar c;
        try {
            c = Scalar(field, coeff);
        } catch (const std::domain_error& e) {
            throw fail_at(term_column, e.what());
        }
        x.add_term(Path::from_arrows(q, std::move(word)), c);
    }
    if (!x.is_zero() && !classify(x).uniform) throw fail_at(1, "relation is not uniform");
    return x;
}

}  // namespace

Presentation parse_algebra_file(std::string_view text) {
    std::optional<Field> field;
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<RawRelation> relations;

    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        ++number;

        LineCursor cur(line, number);
        if (cur.done() || cur.peek() == '#') continue;
        Token keyword = cur.name("a keyword");
        if (keyword.text == "field") {
            if (field) cur.fail("field declared twice");
            if (!vertices.empty() || !arrows.empty() || !relations.empty()) cur.fail("field must come first");
            Token f = cur.name("Q or F");
            if (f.text == "Q") {
                field = Field::rationals();
            } else if (f.text == "F") {
                Token p = cur.digits();
                try {
                    field = Field::prime(std::stoull(p.text));
                } catch (const std::exception&) {
                    throw ParseError("characteristic " + p.text + " is not a supported prime", number, p.column);
                }
            } else {
                throw ParseError("unknown field '" + f.text + "'", number, f.column);
            }
            if (!cur.done()) cur.fail("unexpected text after field");
        } else if (keyword.text == "vertices" || keyword.text == "vertex") {
            if (!arrows.empty() || !relations.empty()) cur.fail("vertices must be declared before arrows");
            if (cur.done()) cur.fail("expected a vertex name");
            while (!cur.done()) {
                Token v = cur.name("a vertex name");
                for (const auto& w : vertices) {
                    if (w == v.text) throw ParseError("duplicate vertex '" + v.text + "'", number, v.column);
                }
                vertices.push_back(v.text);
            }
        } else if (keyword.text == "arrow") {
            if (!relations.empty()) cur.fail("arrows must be declared before relations");
            Token name = cur.name("an arrow name");
            if (is_digit(name.text.front())) {
                throw ParseError("arrow names may not start with a digit", number, name.column);
            }
            cur.expect(":");
            Token src = cur.name("a source vertex");
            cur.expect("->");
            Token tgt = cur.name("a target vertex");
            if (!cur.done()) cur.fail("unexpected text after arrow");
            for (const Token& v : {src, tgt}) {
                bool known = false;
                for (const auto& w : vertices) known = known || w == v.text;
                if (!known) throw ParseError("undeclared vertex '" + v.text + "'", number, v.column);
            }
            for (const auto& a : arrows) {
                if (a.name == name.text) throw ParseError("duplicate arrow '" + name.text + "'", number, name.column);
            }
            for (const auto& w : vertices) {
                if (w == name.text) {
                    throw ParseError("arrow '" + name.text + "' shares its name with a vertex", number, name.column);
                }
            }
            arrows.push_back({name.text, src.text, tgt.text});
        } else if (keyword.text == "relation") {
            cur.skip_space();
            std::size_t col = cur.column();
            relations.push_back({std::string(line.substr(col - 1)), number, col});
        } else {
            throw ParseError("unknown keyword '" + keyword.text + "'", number, keyword.column);
        }
    }
    if (vertices.empty()) throw ParseError("no vertices declared", number, 1);

    Presentation p;
    p.field = field.value_or(Field::rationals());
    p.quiver = Quiver(vertices, arrows);
    for (std::size_t i = 0; i < relations.size(); ++i) {
        p.relations.push_back(parse_relation(relations[i], p.quiver, p.field, i));
    }
    return p;
}

Presentation read_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_file(buf.str());
}

std::string format_element(const PathElement& x, const Quiver& q) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [p, c] = *it;
        mpq_class v = c.to_mpq();
        bool negative = x.field().is_rational() && v < 0;
        if (negative) v = -v;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (v != 1) out += v.get_str() + "*";
        for (std::size_t i = 0; i < p.arrows().size(); ++i) {
            if (i) out += "*";
            out += q.arrow(p.arrows()[i]).name;
        }
    }
    return out;
}

std::string emit_algebra_file(const Presentation& p) {
    std::string out = "field " + p.field.to_string() + "\n";
    out += "vertices";
    for (const auto& v : p.quiver.vertex_names()) out += " " + v;
    out += "\n";
    for (const auto& a : p.quiver.arrows()) {
        out += "arrow " + a.name + " : " + p.quiver.vertex_name(a.source) + " -> " + p.quiver.vertex_name(a.target) +
               "\n";
    }
    for (const auto& r : p.relations) out += "relation " + format_element(r, p.quiver) + "\n";
    return out;
}

}  // namespace qstretch::cli
