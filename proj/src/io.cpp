#include "qba/io.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qba {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int column_of(const std::string& line, const std::string& token) {
    auto pos = line.find(token);
    return pos == std::string::npos ? 1 : static_cast<int>(pos) + 1;
}

Rational parse_rational(const std::string& s, int lineno, int col) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + s + "'", lineno, col);
    }
}

// "<a>*<b>" -> generator index pair.
std::pair<int, int> parse_monomial(const std::string& s,
                                   const std::map<std::string, int>& gen,
                                   int lineno, int col) {
    auto star = s.find('*');
    if (star == std::string::npos || s.find('*', star + 1) != std::string::npos)
        throw ParseError("expected monomial of the form a*b, got '" + s + "'", lineno, col);
    std::string a = s.substr(0, star), b = s.substr(star + 1);
    auto ia = gen.find(a), ib = gen.find(b);
    if (ia == gen.end()) throw ParseError("unknown generator '" + a + "'", lineno, col);
    if (ib == gen.end()) throw ParseError("unknown generator '" + b + "'", lineno, col);
    return {ia->second, ib->second};
}

// Cycle notation "(a b)(c d)" or "id" over declared generators.
std::vector<int> parse_permutation(const std::string& body, int n,
                                   const std::map<std::string, int>& gen,
                                   int lineno, int col) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string trimmed;
    for (char c : body)
        if (!isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed += c;
    while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    if (trimmed == "id" || trimmed == "()") return perm;
    size_t i = 0;
    bool any = false;
    while (i < body.size()) {
        if (isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
            continue;
        }
        if (body[i] != '(')
            throw ParseError("expected cycle '(...)' or 'id'", lineno, col);
        size_t close = body.find(')', i);
        if (close == std::string::npos)
            throw ParseError("unterminated cycle", lineno, col);
        auto elems = tokenize(body.substr(i + 1, close - i - 1));
        if (elems.size() < 2)
            throw ParseError("cycle needs at least two elements", lineno, col);
        std::vector<int> cyc;
        for (const auto& e : elems) {
            auto it = gen.find(e);
            if (it == gen.end())
                throw ParseError("unknown generator '" + e + "'", lineno, col);
            cyc.push_back(it->second);
        }
        for (size_t k = 0; k < cyc.size(); ++k) {
            if (perm[cyc[k]] != cyc[k])
                throw ParseError("generator repeated across cycles", lineno, col);
            perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
        }
        any = true;
        i = close + 1;
    }
    if (!any) throw ParseError("empty permutation", lineno, col);
    return perm;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    int n = 0;
    std::vector<std::string> names;
    std::map<std::string, int> gen;
    bool have_gens = false;

    std::vector<Relation> rels;
    std::vector<bool> monomial_used;
    std::vector<std::vector<int>> lmaps;
    std::vector<bool> lmap_seen;
    bool saw_rel = false, saw_lmap = false;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& kw = toks[0];
        if (kw == "gens") {
            if (have_gens) throw ParseError("duplicate gens line", lineno, 1);
            if (toks.size() < 2) throw ParseError("gens line needs at least one name", lineno, 1);
            for (size_t i = 1; i < toks.size(); ++i) {
                if (gen.count(toks[i]))
                    throw ParseError("duplicate generator '" + toks[i] + "'", lineno,
                                     column_of(line, toks[i]));
                gen[toks[i]] = n++;
                names.push_back(toks[i]);
            }
            have_gens = true;
            monomial_used.assign(n * n, false);
            lmaps.assign(n, {});
            lmap_seen.assign(n, false);
        } else if (kw == "rel") {
            if (!have_gens) throw ParseError("rel before gens", lineno, 1);
            if (saw_lmap) throw ParseError("cannot mix rel and lmap lines", lineno, 1);
            saw_rel = true;
            if (toks.size() < 4 || toks[2] != "=")
                throw ParseError("expected 'rel a*b = [c *] d*e'", lineno, 1);
            auto lhs = parse_monomial(toks[1], gen, lineno, column_of(line, toks[1]));
            Rational coeff(1);
            std::string rhs_tok;
            if (toks.size() == 4) {
                rhs_tok = toks[3];
            } else if (toks.size() == 6 && toks[4] == "*") {
                coeff = parse_rational(toks[3], lineno, column_of(line, toks[3]));
                rhs_tok = toks[5];
            } else {
                throw ParseError("expected 'rel a*b = [c *] d*e'", lineno, 1);
            }
            if (coeff == 0)
                throw ParseError("zero coefficient", lineno, column_of(line, toks[3]));
            auto rhs = parse_monomial(rhs_tok, gen, lineno, column_of(line, rhs_tok));
            for (auto [a, b] : {lhs, rhs}) {
                if (monomial_used[a * n + b])
                    throw ParseError("monomial occurs in more than one relation", lineno, 1);
                monomial_used[a * n + b] = true;
            }
            rels.push_back({lhs.first, lhs.second, rhs.first, rhs.second, coeff});
        } else if (kw == "lmap") {
            if (!have_gens) throw ParseError("lmap before gens", lineno, 1);
            if (saw_rel) throw ParseError("cannot mix rel and lmap lines", lineno, 1);
            saw_lmap = true;
            if (toks.size() < 3 || toks[2] != ":")
                throw ParseError("expected 'lmap name : permutation'", lineno, 1);
            auto it = gen.find(toks[1]);
            if (it == gen.end())
                throw ParseError("unknown generator '" + toks[1] + "'", lineno,
                                 column_of(line, toks[1]));
            if (lmap_seen[it->second])
                throw ParseError("duplicate lmap for '" + toks[1] + "'", lineno, 1);
            auto colon = line.find(':');
            lmaps[it->second] =
                parse_permutation(line.substr(colon + 1), n, gen, lineno,
                                  static_cast<int>(colon) + 2);
            lmap_seen[it->second] = true;
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno, 1);
        }
    }
    if (!have_gens) throw ParseError("missing gens line", lineno, 1);
    if (saw_lmap) {
        for (int i = 0; i < n; ++i)
            if (!lmap_seen[i])
                throw ParseError("missing lmap for generator '" + names[i] + "'", lineno, 1);
        return QuadraticSet::from_lmap(n, names, lmaps);
    }
    try {
        return RelationSet(n, names, rels);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_presentation(ss.str());
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string cycles_str(const std::vector<int>& perm, const std::vector<std::string>& names) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == static_cast<int>(i)) continue;
        out += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += names[j];
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

}  // namespace

std::string emit_presentation(const Presentation& p) {
    std::ostringstream os;
    if (std::holds_alternative<RelationSet>(p)) {
        const auto& rs = std::get<RelationSet>(p);
        os << "gens";
        for (const auto& nm : rs.names()) os << " " << nm;
        os << "\n";
        for (const auto& rel : rs.relations()) {
            os << "rel " << rs.names()[rel.x] << "*" << rs.names()[rel.y] << " = ";
            if (rel.coeff != 1) os << rational_str(rel.coeff) << " * ";
            os << rs.names()[rel.yp] << "*" << rs.names()[rel.xp] << "\n";
        }
        return os.str();
    }
    const auto& qs = std::get<QuadraticSet>(p);
    int n = qs.size();
    std::vector<std::vector<int>> lperm(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) lperm[x][y] = qs.left(x, y);
    // lmap form is faithful only for left-action-type r.
    if (!(QuadraticSet::from_lmap(n, qs.names(), lperm) == qs))
        throw std::invalid_argument("emit_presentation: set is not of left-action type");
    os << "gens";
    for (const auto& nm : qs.names()) os << " " << nm;
    os << "\n";
    for (int x = 0; x < n; ++x)
        os << "lmap " << qs.names()[x] << " : " << cycles_str(lperm[x], qs.names()) << "\n";
    return os.str();
}

std::string report_to_text(const nlohmann::json& body) {
    nlohmann::json report = body;
    report["format"] = 1;
    return report.dump(2) + "\n";
}

}  // namespace qba
