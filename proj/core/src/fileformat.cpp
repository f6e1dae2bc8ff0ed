#include "skewlin/fileformat.hpp"

#include <cctype>
#include <charconv>

namespace skewlin {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        int tline = line, tcol = col;
        std::string tok;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            tok += text[i];
            ++i;
            ++col;
        }
        if (tok == "/") continue;  // line separator in the compact form
        out.push_back(Token{std::move(tok), tline, tcol});
    }
    return out;
}

class Cursor {
   public:
    explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& next(const char* what) {
        if (pos_ >= toks_.size()) {
            const int line = toks_.empty() ? 1 : toks_.back().line;
            throw parse_error(std::string("expected ") + what + " but input ended", line, 1);
        }
        return toks_[pos_++];
    }

    bool done() const { return pos_ >= toks_.size(); }
    const Token& last() const { return toks_[pos_ - 1]; }

   private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int parse_int(const Token& t, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || p != t.text.data() + t.text.size() || value < 0)
        throw parse_error(std::string("bad ") + what + " '" + t.text + "'", t.line, t.col);
    return value;
}

}  // namespace

LinMap parse_linmap_text(std::string_view text) {
    Cursor cur(tokenize(text));
    const Token& kw = cur.next("'scalar'");
    if (kw.text != "scalar") throw parse_error("expected 'scalar'", kw.line, kw.col);

    const Token& kind = cur.next("scalar domain");
    ScalarDomain dom = ScalarDomain::rationals();
    if (kind.text == "gf") {
        const Token& ptok = cur.next("prime modulus");
        std::uint64_t p = 0;
        auto [pp, ec] = std::from_chars(ptok.text.data(), ptok.text.data() + ptok.text.size(), p);
        if (ec != std::errc{} || pp != ptok.text.data() + ptok.text.size())
            throw parse_error("bad modulus '" + ptok.text + "'", ptok.line, ptok.col);
        try {
            dom = ScalarDomain::gf(p);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), ptok.line, ptok.col);
        }
    } else if (kind.text == "q") {
        dom = ScalarDomain::rationals();
    } else if (kind.text == "quat") {
        dom = ScalarDomain::quaternions();
    } else {
        throw parse_error("unknown scalar domain '" + kind.text + "'", kind.line, kind.col);
    }

    const Token& chir = cur.next("chirality");
    Chirality c;
    if (chir.text == "right")
        c = Chirality::right;
    else if (chir.text == "left")
        c = Chirality::left;
    else
        throw parse_error("chirality must be 'right' or 'left'", chir.line, chir.col);

    int rows = parse_int(cur.next("row count"), "row count");
    int cols = parse_int(cur.next("column count"), "column count");

    Mat grid = Mat::zero(rows, cols, dom);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Token& t = cur.next("matrix entry");
            try {
                grid.at(i, j) = Scalar::parse(dom, t.text);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), t.line, t.col);
            }
        }
    if (!cur.done()) {
        const Token& t = cur.next("");
        throw parse_error("unexpected trailing token '" + t.text + "'", t.line, t.col);
    }

    VectorSpaceRef domain_space{dom, c == Chirality::right ? cols : rows, c};
    VectorSpaceRef codomain_space{dom, c == Chirality::right ? rows : cols, c};
    return LinMap(domain_space, codomain_space, std::move(grid));
}

std::string print_linmap_text(const LinMap& m) {
    const Mat& g = m.grid();
    std::string out = "scalar " + g.domain().name() + "\n";
    out += m.domain_space().chirality == Chirality::right ? "right\n" : "left\n";
    out += std::to_string(g.rows()) + " " + std::to_string(g.cols()) + "\n";
    for (int i = 0; i < g.rows(); ++i) {
        for (int j = 0; j < g.cols(); ++j) {
            if (j) out += ' ';
            out += g.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string print_vec_text(const Vec& v) {
    VectorSpaceRef line{v.space().domain, 1, v.space().chirality};
    return print_linmap_text(LinMap::from_images(line, v.space(), {v}));
}

std::string print_subspace_text(const Subspace& s) {
    VectorSpaceRef dom{s.ambient().domain, s.dim(), s.ambient().chirality};
    return print_linmap_text(LinMap::from_images(dom, s.ambient(), s.basis()));
}

}  // namespace skewlin
