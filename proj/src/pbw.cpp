#include "qba/pbw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qba {

namespace {

struct Rule {
    int c, d;  // replacement pair
    Rational coeff;
};

using RuleMap = std::map<std::pair<int, int>, Rule>;

RuleMap rule_map(const std::vector<OrientedRel>& oriented) {
    RuleMap rules;
    for (const auto& o : oriented) rules[{o.l1, o.l2}] = {o.r1, o.r2, o.coeff};
    return rules;
}

// Leftmost occurrence of the deg-lex-largest reducible adjacent pair.
// Deterministic witnesses; any strategy terminates.
NormalForm normalize(NormalForm t, const RuleMap& rules, const std::vector<int>& rk) {
    for (;;) {
        int best = -1;
        for (int i = 0; i + 1 < static_cast<int>(t.word.size()); ++i) {
            if (!rules.count({t.word[i], t.word[i + 1]})) continue;
            if (best == -1) {
                best = i;
                continue;
            }
            int a = rk[t.word[i]], b = rk[t.word[i + 1]];
            int ba = rk[t.word[best]], bb = rk[t.word[best + 1]];
            if (a > ba || (a == ba && b > bb)) best = i;
        }
        if (best == -1) return t;
        const Rule& rule = rules.at({t.word[best], t.word[best + 1]});
        t.word[best] = rule.c;
        t.word[best + 1] = rule.d;
        t.scalar *= rule.coeff;
    }
}

}  // namespace

std::vector<OrientedRel> orient_relations(const RelationSet& rs, const DegLexOrder& ord) {
    if (static_cast<int>(ord.perm.size()) != rs.size())
        throw std::invalid_argument("orient_relations: order size mismatch");
    auto rk = ord.ranks();
    std::vector<OrientedRel> out;
    out.reserve(rs.relations().size());
    for (const auto& rel : rs.relations()) {
        bool lhs_leads = std::make_pair(rk[rel.x], rk[rel.y]) >
                         std::make_pair(rk[rel.yp], rk[rel.xp]);
        if (std::make_pair(rel.x, rel.y) == std::make_pair(rel.yp, rel.xp))
            throw std::invalid_argument("orient_relations: degenerate relation");
        if (lhs_leads)
            out.push_back({rel.x, rel.y, rel.yp, rel.xp, rel.coeff});
        else
            out.push_back({rel.yp, rel.xp, rel.x, rel.y, Rational(1) / rel.coeff});
    }
    return out;
}

PbwReport check_pbw(const RelationSet& rs, const DegLexOrder& ord) {
    PbwReport report;
    report.order = ord;
    report.oriented = orient_relations(rs, ord);
    for (const auto& o : report.oriented) report.obstructions.insert({o.l1, o.l2});
    auto rules = rule_map(report.oriented);
    auto rk = ord.ranks();
    report.is_pbw = true;
    for (const auto& [a, b] : report.obstructions)
        for (const auto& [b2, c] : report.obstructions) {
            if (b2 != b) continue;
            report.overlaps_checked.push_back({a, b, c});
            NormalForm left{Rational(1), {a, b, c}};
            const Rule& rab = rules.at({a, b});
            left.word[0] = rab.c;
            left.word[1] = rab.d;
            left.scalar *= rab.coeff;
            left = normalize(std::move(left), rules, rk);
            NormalForm right{Rational(1), {a, b, c}};
            const Rule& rbc = rules.at({b, c});
            right.word[1] = rbc.c;
            right.word[2] = rbc.d;
            right.scalar *= rbc.coeff;
            right = normalize(std::move(right), rules, rk);
            if (left != right && report.is_pbw) {
                report.is_pbw = false;
                report.failing_overlap = {a, b, c};
                report.failing_forms = {left, right};
            }
        }
    return report;
}

std::vector<DegLexOrder> pbw_search(const RelationSet& rs, int factorial_bound) {
    int n = rs.size();
    if (n > factorial_bound)
        throw std::invalid_argument("pbw_search: generator count exceeds search bound");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<DegLexOrder> found;
    do {
        DegLexOrder ord{perm};
        if (check_pbw(rs, ord).is_pbw) found.push_back(ord);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

bool is_skew_polynomial_type(const RelationSet& rs, const DegLexOrder& ord) {
    auto oriented = orient_relations(rs, ord);
    auto rk = ord.ranks();
    long n = rs.size();
    std::set<std::pair<int, int>> rhs_pairs;
    for (const auto& o : oriented) {
        int j = rk[o.l1], i = rk[o.l2], ip = rk[o.r1], jp = rk[o.r2];
        if (!(j > i && j > ip && ip < jp)) return false;
        rhs_pairs.insert({ip, jp});
    }
    return static_cast<long>(rhs_pairs.size()) == n * (n - 1) / 2;
}

std::optional<DegLexOrder> certify_skew_polynomial_ring(const RelationSet& rs,
                                                        int factorial_bound) {
    int n = rs.size();
    if (n > factorial_bound)
        throw std::invalid_argument("certify_skew_polynomial_ring: bound exceeded");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        DegLexOrder ord{perm};
        if (is_skew_polynomial_type(rs, ord) && check_pbw(rs, ord).is_pbw) return ord;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<std::vector<int>> normal_words(const PbwReport& report, int m) {
    if (m < 0) throw std::invalid_argument("normal_words: negative degree");
    if (!report.is_pbw)
        throw std::invalid_argument("normal_words: report is not PBW");
    int n = static_cast<int>(report.order.perm.size());
    std::vector<std::vector<int>> words{{}};
    for (int len = 0; len < m; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
            for (int g = 0; g < n; ++g) {
                if (!w.empty() && report.obstructions.count({w.back(), g})) continue;
                auto w2 = w;
                w2.push_back(g);
                next.push_back(std::move(w2));
            }
        words = std::move(next);
    }
    return words;
}

}  // namespace qba
