#include "grb/dsl.hpp"

#include <cctype>
#include <sstream>

namespace grb {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg);
    }

  private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; continue; }
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            tok_.text = "<eof>";
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Tok::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            col_ += static_cast<int>(tok_.text.size());
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Tok::Int;
            tok_.text = text_.substr(start, pos_ - start);
            try {
                tok_.value = std::stoll(tok_.text);
            } catch (const std::exception&) {
                throw ParseError(line_, col_, "integer literal out of range");
            }
            col_ += static_cast<int>(tok_.text.size());
            return;
        }
        // multi-char punct: ->
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            tok_.kind = Tok::Punct;
            tok_.text = "->";
            pos_ += 2;
            col_ += 2;
            return;
        }
        tok_.kind = Tok::Punct;
        tok_.text = std::string(1, c);
        ++pos_;
        ++col_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lx_(text) {}

    SpecFile parse() {
        SpecFile out;
        while (lx_.peek().kind != Tok::End) {
            std::string kw = expectIdent();
            if (kw == "bundle") {
                out.bundles.push_back(parseBundle(out));
            } else if (kw == "sigma") {
                out.sigmas.push_back(parseSigma(out));
            } else if (kw == "morphism") {
                out.morphisms.push_back(parseMorphism(out));
            } else {
                lx_.fail("expected 'bundle', 'sigma' or 'morphism', got '" + kw + "'");
            }
        }
        return out;
    }

  private:
    Lexer lx_;
    SpecFile* file_ = nullptr;

    std::string expectIdent() {
        if (lx_.peek().kind != Tok::Ident)
            lx_.fail("expected identifier, got '" + lx_.peek().text + "'");
        return lx_.next().text;
    }

    long long expectInt() {
        bool neg = false;
        if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "-") {
            lx_.next();
            neg = true;
        }
        if (lx_.peek().kind != Tok::Int)
            lx_.fail("expected integer, got '" + lx_.peek().text + "'");
        long long v = lx_.next().value;
        return neg ? -v : v;
    }

    void expectPunct(const std::string& p) {
        if (lx_.peek().kind != Tok::Punct || lx_.peek().text != p)
            lx_.fail("expected '" + p + "', got '" + lx_.peek().text + "'");
        lx_.next();
    }

    bool acceptPunct(const std::string& p) {
        if (lx_.peek().kind == Tok::Punct && lx_.peek().text == p) {
            lx_.next();
            return true;
        }
        return false;
    }

    bool acceptIdent(const std::string& word) {
        if (lx_.peek().kind == Tok::Ident && lx_.peek().text == word) {
            lx_.next();
            return true;
        }
        return false;
    }

    std::vector<int> parseIntTuple() {
        expectPunct("(");
        std::vector<int> out;
        if (!acceptPunct(")")) {
            out.push_back(static_cast<int>(expectInt()));
            while (acceptPunct(",")) out.push_back(static_cast<int>(expectInt()));
            expectPunct(")");
        }
        return out;
    }

    // coordinate reference: name [ '(' bits ')' ] '[' index ']'
    CoordSymbol parseCoordRef(const Presentation& p) {
        Token nameTok = lx_.peek();
        std::string name = expectIdent();
        std::vector<int> lifts;
        if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "(") lifts = parseIntTuple();
        expectPunct("[");
        int idx = static_cast<int>(expectInt());
        expectPunct("]");
        const CoordFamily* f = p.findFamily({name, lifts});
        if (!f)
            throw ParseError(nameTok.line, nameTok.col,
                             "unknown coordinate family '" +
                                 CoordSymbol{name, lifts, idx, {}}.str() + "'");
        if (idx < 1 || idx > f->count)
            throw ParseError(nameTok.line, nameTok.col,
                             "coordinate index out of range in " + name);
        return f->coord(idx);
    }

    // symbol reference: name '[' ints ']' [ '@' '(' ints ')' ]
    Poly parseSymbolRef(Presentation& p, const std::string& name) {
        expectPunct("[");
        std::vector<int> idx;
        idx.push_back(static_cast<int>(expectInt()));
        while (acceptPunct(",")) idx.push_back(static_cast<int>(expectInt()));
        expectPunct("]");
        std::vector<int> derivs;
        if (acceptPunct("@")) derivs = parseIntTuple();
        FnSymbol raw(name, idx, derivs);
        FnSymbol canon = p.fnInstance(name, idx, derivs);
        if (!(canon == raw) && file_)
            file_->warnings.push_back("symbol " + raw.str() + " symmetrised to " + canon.str());
        return Poly::fn(canon);
    }

    Poly parseFactor(Presentation& p) {
        if (acceptPunct("(")) {
            Poly e = parseExpr(p);
            expectPunct(")");
            return e;
        }
        if (acceptPunct("-")) return -parseFactor(p);
        if (lx_.peek().kind == Tok::Int) {
            long long n = expectInt();
            return Poly::constant(Rational(n));
        }
        Token nameTok = lx_.peek();
        std::string name = expectIdent();
        // coordinate if followed by '(' bits ')' '[' or directly '[' with
        // a matching family; symbols otherwise
        if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "(") {
            std::vector<int> lifts = parseIntTuple();
            expectPunct("[");
            int idx = static_cast<int>(expectInt());
            expectPunct("]");
            const CoordFamily* f = p.findFamily({name, lifts});
            if (!f)
                throw ParseError(nameTok.line, nameTok.col,
                                 "unknown coordinate family '" + name + "'");
            if (idx < 1 || idx > f->count)
                throw ParseError(nameTok.line, nameTok.col, "coordinate index out of range");
            return Poly::coordinate(f->coord(idx));
        }
        if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "[") {
            const CoordFamily* f = p.findFamily({name, {}});
            if (f) {
                expectPunct("[");
                int idx = static_cast<int>(expectInt());
                expectPunct("]");
                if (idx < 1 || idx > f->count)
                    throw ParseError(nameTok.line, nameTok.col,
                                     "coordinate index out of range");
                return Poly::coordinate(f->coord(idx));
            }
            return parseSymbolRef(p, name);
        }
        throw ParseError(nameTok.line, nameTok.col, "dangling identifier '" + name + "'");
    }

    Poly parsePower(Presentation& p) {
        Poly r = parseFactor(p);
        if (acceptPunct("^")) {
            long long e = expectInt();
            if (e < 0) lx_.fail("negative exponent");
            Poly acc = Poly::constant(Rational(1));
            for (long long i = 0; i < e; ++i) acc = acc * r;
            return acc;
        }
        return r;
    }

    Poly parseTerm(Presentation& p) {
        Poly r = parsePower(p);
        while (true) {
            if (acceptPunct("*")) {
                r = r * parsePower(p);
            } else if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "/") {
                lx_.next();
                long long d = expectInt();
                if (d == 0) lx_.fail("division by zero");
                r = r.scaled(Rational(1, d));
            } else {
                break;
            }
        }
        return r;
    }

    Poly parseExpr(Presentation& p) {
        Poly r = parseTerm(p);
        while (true) {
            if (acceptPunct("+"))
                r += parseTerm(p);
            else if (acceptPunct("-"))
                r -= parseTerm(p);
            else
                break;
        }
        return r;
    }

    Presentation parseBundle(SpecFile& out) {
        file_ = &out;
        Presentation p;
        p.name = expectIdent();
        expectPunct("{");
        int declaredDegree = -1;
        int declaredWeights = -1;
        while (!acceptPunct("}")) {
            Token kwTok = lx_.peek();
            std::string kw = expectIdent();
            if (kw == "degree") {
                declaredDegree = static_cast<int>(expectInt());
                expectPunct(";");
            } else if (kw == "weights") {
                declaredWeights = static_cast<int>(expectInt());
                p.ncomp = declaredWeights;
                expectPunct(";");
            } else if (kw == "charts") {
                while (lx_.peek().kind == Tok::Ident) p.charts.push_back(expectIdent());
                expectPunct(";");
            } else if (kw == "base") {
                CoordFamily f;
                f.name = expectIdent();
                p.baseFamilyName = f.name;
                if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "(")
                    f.lifts = parseIntTuple();
                expectPunct("[");
                f.count = static_cast<int>(expectInt());
                expectPunct("]");
                expectPunct(";");
                f.weight = MultiWeight::zeros(p.ncomp);
                p.families.push_back(f);
            } else if (kw == "coord") {
                CoordFamily f;
                f.name = expectIdent();
                if (lx_.peek().kind == Tok::Punct && lx_.peek().text == "(")
                    f.lifts = parseIntTuple();
                expectPunct("[");
                f.count = static_cast<int>(expectInt());
                expectPunct("]");
                if (f.count < 1)
                    throw ParseError(kwTok.line, kwTok.col, "empty coordinate range");
                if (!acceptIdent("weight")) lx_.fail("expected 'weight'");
                std::vector<int> w = parseIntTuple();
                expectPunct(";");
                if (static_cast<int>(w.size()) != p.ncomp)
                    throw ParseError(kwTok.line, kwTok.col,
                                     "weight arity " + std::to_string(w.size()) +
                                         " does not match the bundle's " +
                                         std::to_string(p.ncomp) + " weight fields");
                f.weight = MultiWeight(w);
                p.families.push_back(f);
            } else if (kw == "fn") {
                std::string name = expectIdent();
                FnInfo& info = p.fnTable[name];
                while (!acceptPunct(";")) {
                    std::string prop = expectIdent();
                    if (prop == "dim") {
                        info.dim = static_cast<int>(expectInt());
                    } else if (prop == "inverse") {
                        std::string other = expectIdent();
                        info.inverseFamily = other;
                        p.fnTable[other].inverseOf = name;
                        p.fnTable[other].dim = info.dim;
                    } else if (prop == "sym") {
                        std::vector<int> group;
                        while (lx_.peek().kind == Tok::Int)
                            group.push_back(static_cast<int>(expectInt()));
                        info.symGroups.push_back(group);
                    } else if (prop == "basemap") {
                        info.baseMap = true;
                    } else {
                        lx_.fail("unknown fn property '" + prop + "'");
                    }
                }
            } else if (kw == "transition") {
                Transition t;
                t.from = expectIdent();
                expectPunct("->");
                t.to = expectIdent();
                for (auto& ch : {t.from, t.to}) {
                    bool known = false;
                    for (auto& c : p.charts) known = known || c == ch;
                    if (!known)
                        throw ParseError(kwTok.line, kwTok.col,
                                         "transition uses undeclared chart '" + ch + "'");
                }
                expectPunct("{");
                while (!acceptPunct("}")) {
                    CoordSymbol target = parseCoordRef(p);
                    expectPunct("=");
                    Poly law = parseExpr(p);
                    expectPunct(";");
                    if (t.laws.count(target.key()))
                        throw ParseError(kwTok.line, kwTok.col,
                                         "duplicate law for " + target.str());
                    t.laws[target.key()] = law;
                }
                p.transitions.push_back(std::move(t));
            } else {
                throw ParseError(kwTok.line, kwTok.col, "unknown declaration '" + kw + "'");
            }
        }
        if (p.charts.empty()) p.charts = {"c0"};
        if (declaredDegree >= 0 && p.ncomp == 1 && p.degree(0) != declaredDegree)
            throw ParseError(1, 1,
                             "declared degree " + std::to_string(declaredDegree) +
                                 " does not match the coordinate weights (max " +
                                 std::to_string(p.degree(0)) + ")");
        // any symbol used in a base-coordinate law acts as a base map
        for (auto& t : p.transitions)
            for (auto& f : p.families) {
                if (!f.weight.isZero()) continue;
                for (int i = 1; i <= f.count; ++i) {
                    auto it = t.laws.find(f.coord(i).key());
                    if (it == t.laws.end()) continue;
                    for (auto& fs : fnsIn(it->second)) p.fnTable[fs.family].baseMap = true;
                }
            }
        file_ = nullptr;
        return p;
    }

    SigmaDecl parseSigma(SpecFile& out) {
        SigmaDecl decl;
        std::vector<int> oneLine = parseIntTuple();
        decl.g.resize(oneLine.size());
        for (size_t i = 0; i < oneLine.size(); ++i) decl.g[i] = oneLine[i] - 1;
        if (!isPerm(decl.g)) lx_.fail("not a permutation");
        if (!acceptIdent("on")) lx_.fail("expected 'on'");
        decl.bundle = expectIdent();
        Presentation& D = const_cast<Presentation&>(out.bundle(decl.bundle));
        expectPunct("{");
        while (!acceptPunct("}")) {
            if (!acceptIdent("chart")) lx_.fail("expected 'chart'");
            std::string chart = expectIdent();
            expectPunct("{");
            Assignment laws;
            while (!acceptPunct("}")) {
                CoordSymbol target = parseCoordRef(D);
                expectPunct("=");
                Poly law = parseExpr(D);
                expectPunct(";");
                laws[target.key()] = law;
            }
            decl.chartLaws[chart] = std::move(laws);
        }
        return decl;
    }

    MorphismDecl parseMorphism(SpecFile& out) {
        MorphismDecl decl;
        decl.name = expectIdent();
        expectPunct(":");
        decl.srcBundle = expectIdent();
        expectPunct("->");
        decl.dstBundle = expectIdent();
        Presentation& src = const_cast<Presentation&>(out.bundle(decl.srcBundle));
        Presentation& dst = const_cast<Presentation&>(out.bundle(decl.dstBundle));
        decl.phi.name = decl.name;
        expectPunct("{");
        while (!acceptPunct("}")) {
            if (!acceptIdent("chart")) lx_.fail("expected 'chart'");
            Morphism::ChartMap cm;
            cm.srcChart = expectIdent();
            expectPunct("->");
            cm.dstChart = expectIdent();
            expectPunct("{");
            while (!acceptPunct("}")) {
                CoordSymbol target = parseCoordRef(dst);
                expectPunct("=");
                Poly law = parseExpr(src);
                expectPunct(";");
                cm.pullback[target.key()] = law;
            }
            decl.phi.maps.push_back(std::move(cm));
        }
        return decl;
    }
};

} // namespace

const Presentation& SpecFile::bundle(const std::string& name) const {
    for (auto& b : bundles)
        if (b.name == name) return b;
    throw SpecError("no bundle named '" + name + "' in the spec file");
}

SpecFile parseSpecFile(const std::string& text) { return Parser(text).parse(); }

Morphism sigmaFromDecl(const Presentation& D, const SigmaDecl& decl) {
    Morphism sigma;
    sigma.name = "sigma" + permStr(decl.g);
    for (auto& chart : D.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        auto it = decl.chartLaws.find(chart);
        for (auto& c : D.allCoords()) {
            if (it != decl.chartLaws.end()) {
                auto law = it->second.find(c.key());
                if (law != it->second.end()) {
                    cm.pullback[c.key()] = law->second;
                    continue;
                }
            }
            // default: pure lift-label permutation
            CoordSymbol img = c;
            img.lifts = epsAct(c.lifts, decl.g);
            const CoordFamily* f = D.findFamily({img.family, img.lifts});
            if (!f)
                throw SpecError("sigma default needs family " + img.str() +
                                "; provide an explicit law");
            img.weight = f->weight;
            cm.pullback[c.key()] = Poly::coordinate(img);
        }
        sigma.maps.push_back(std::move(cm));
    }
    return sigma;
}

Perm parsePermString(const std::string& text, int k) {
    Perm g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        g.push_back(std::stoi(item) - 1);
    }
    if (static_cast<int>(g.size()) != k || !isPerm(g))
        throw SpecError("bad permutation '" + text + "' for k=" + std::to_string(k));
    return g;
}

} // namespace grb
