#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "qba/classify.hpp"
#include "qba/graphs.hpp"
#include "qba/harness.hpp"
#include "qba/io.hpp"
#include "qba/orbits.hpp"
#include "qba/pbw.hpp"
#include "qba/relations.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    std::string file;
    std::string report_path;
    int bound = qba::kDefaultDegreeBound;
    uint64_t seed = 0;
    int degree = 3;
    int max_degree = 4;
    std::string order;
    bool search = false;
    int n = 3;
    std::string scope = "fixtures";
};

qba::QuadraticSet to_set(const qba::Presentation& p) {
    if (std::holds_alternative<qba::QuadraticSet>(p)) return std::get<qba::QuadraticSet>(p);
    return std::get<qba::RelationSet>(p).derived_r();
}

qba::RelationSet to_relations(const qba::Presentation& p) {
    if (std::holds_alternative<qba::RelationSet>(p)) return std::get<qba::RelationSet>(p);
    return qba::relations_from_set(std::get<qba::QuadraticSet>(p));
}

std::string rational_str(const qba::Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Order on the command line is written largest generator first.
qba::DegLexOrder parse_order(const std::string& spec, const std::vector<std::string>& names) {
    std::istringstream is(spec);
    std::string tok;
    std::vector<int> desc;
    std::vector<bool> used(names.size(), false);
    while (is >> tok) {
        auto it = std::find(names.begin(), names.end(), tok);
        if (it == names.end()) throw std::runtime_error("unknown generator '" + tok + "' in --order");
        int idx = static_cast<int>(it - names.begin());
        if (used[idx]) throw std::runtime_error("generator repeated in --order");
        used[idx] = true;
        desc.push_back(idx);
    }
    if (desc.size() != names.size())
        throw std::runtime_error("--order must list every generator exactly once");
    qba::DegLexOrder ord;
    ord.perm.assign(desc.rbegin(), desc.rend());
    return ord;
}

json order_json(const qba::DegLexOrder& ord, const std::vector<std::string>& names) {
    json arr = json::array();
    for (auto it = ord.perm.rbegin(); it != ord.perm.rend(); ++it) arr.push_back(names[*it]);
    return arr;
}

json word_json(const std::vector<int>& w, const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += names[w[i]];
    }
    return s;
}

const char* type_name(qba::OrbitType t) {
    switch (t) {
        case qba::OrbitType::Diagonal: return "diagonal";
        case qba::OrbitType::TypeII: return "type_ii";
        case qba::OrbitType::SquareFree: return "square_free";
        default: return "other";
    }
}

json predicates_json(const qba::SetPredicates& p) {
    return {{"involutive", p.involutive},
            {"nondegenerate", p.nondegenerate},
            {"square_free", p.square_free},
            {"braided", p.braided},
            {"quantum_binomial", p.quantum_binomial},
            {"symmetric", p.symmetric}};
}

json pbw_report_json(const qba::PbwReport& rep, const std::vector<std::string>& names) {
    json j;
    j["order"] = order_json(rep.order, names);
    j["is_pbw"] = rep.is_pbw;
    json obs = json::array();
    for (auto [a, b] : rep.obstructions) obs.push_back(word_json({a, b}, names));
    j["obstructions"] = obs;
    json ovl = json::array();
    for (const auto& o : rep.overlaps_checked) ovl.push_back(word_json({o[0], o[1], o[2]}, names));
    j["overlaps_checked"] = ovl;
    if (rep.failing_overlap) {
        const auto& o = *rep.failing_overlap;
        j["failing_overlap"] = word_json({o[0], o[1], o[2]}, names);
        j["failing_forms"] = {
            {"left", {{"scalar", rational_str(rep.failing_forms->first.scalar)},
                      {"word", word_json(rep.failing_forms->first.word, names)}}},
            {"right", {{"scalar", rational_str(rep.failing_forms->second.scalar)},
                       {"word", word_json(rep.failing_forms->second.word, names)}}}};
    }
    return j;
}

int run(const std::string& cmd, const Options& opt) {
    json report;
    report["command"] = cmd;
    int exit_code = 0;

    if (cmd == "classify") {
        auto census = qba::enumerate_quantum_binomial(opt.n);
        report["n"] = census.n;
        report["total_quantum_binomial"] = census.total_quantum_binomial;
        report["total_symmetric"] = census.total_symmetric;
        json reps = json::array();
        for (const auto& e : census.representatives) {
            json r;
            r["encoding"] = e.rep.encode();
            r["symmetric"] = e.symmetric;
            r["q"] = e.q;
            r["type_ii_sizes"] = e.type_ii_sizes;
            r["square_free_sizes"] = e.square_free_sizes;
            r["dim_a3"] = e.dim_a3;
            r["pbw_order_count"] = e.pbw_order_count;
            reps.push_back(std::move(r));
        }
        report["representatives"] = std::move(reps);
        report["class_count"] = report["representatives"].size();
    } else if (cmd == "suite") {
        qba::Scope scope;
        if (opt.scope == "fixtures") scope = qba::Scope::Fixtures;
        else if (opt.scope == "exhaustive3") scope = qba::Scope::ExhaustiveN3;
        else if (opt.scope == "sampled5") scope = qba::Scope::SampledN5;
        else if (opt.scope == "census4") scope = qba::Scope::CensusN4;
        else throw std::runtime_error("unknown scope '" + opt.scope + "'");
        auto result = qba::run_suite(scope, opt.seed);
        report["scope"] = opt.scope;
        report["seed"] = opt.seed;
        report["checked"] = result.checked;
        report["passed"] = result.passed;
        report["failures"] = result.failures;
        if (!result.passed) exit_code = 1;
    } else {
        auto pres = qba::load_presentation_file(opt.file);
        auto qs = to_set(pres);
        const auto& names = qs.names();
        report["n"] = qs.size();
        report["generators"] = names;

        if (cmd == "check") {
            report["predicates"] = predicates_json(qs.predicates());
            if (std::holds_alternative<qba::RelationSet>(pres))
                report["quantum_binomial"] =
                    qba::is_quantum_binomial(std::get<qba::RelationSet>(pres));
            else
                report["quantum_binomial"] = qs.predicates().quantum_binomial;
        } else if (cmd == "orbits") {
            auto census = qba::enumerate_orbits(qs, opt.degree, opt.bound);
            report["degree"] = census.m;
            json orbits = json::array();
            long counts[4] = {0, 0, 0, 0};
            for (const auto& o : census.orbits) {
                orbits.push_back({{"representative",
                                   word_json(qba::decode_word(o.representative, qs.size(),
                                                              census.m), names)},
                                  {"size", o.size},
                                  {"type", type_name(o.type)}});
                ++counts[static_cast<int>(o.type)];
            }
            report["orbits"] = std::move(orbits);
            report["orbit_count"] = census.orbits.size();
            if (census.m == 3) {
                report["q"] = census.q;
                report["type_ii_sizes"] = census.type_ii_sizes;
                report["counts"] = {{"diagonal", counts[0]},
                                    {"type_ii", counts[1]},
                                    {"square_free", counts[2]}};
            }
        } else if (cmd == "dims") {
            auto rs = to_relations(pres);
            json dims = json::object(), monoid = json::object(), dual = json::object();
            bool coeff_one = true;
            for (const auto& rel : rs.relations())
                if (rel.coeff != 1) coeff_one = false;
            for (int m = 0; m <= opt.max_degree; ++m) {
                long d = qba::dim_A(rs, m);
                dims[std::to_string(m)] = d;
                dual[std::to_string(m)] = qba::dim_A_dual(rs, m);
                if (coeff_one) {
                    long om = qba::monoid_dimension(qs, m, opt.bound);
                    monoid[std::to_string(m)] = om;
                    if (om != d) exit_code = 1;
                }
            }
            report["dim_A"] = std::move(dims);
            report["dim_A_dual"] = std::move(dual);
            if (coeff_one) report["dim_monoid"] = std::move(monoid);
            long n = qs.size();
            long lhs = qba::dim_A_dual(rs, 3);
            long rhs = n * n * n - 2 * n * qba::dim_A(rs, 2) + qba::dim_A(rs, 3);
            report["dual_formula_check"] = (lhs == rhs);
            if (lhs != rhs) exit_code = 1;
        } else if (cmd == "pbw") {
            auto rs = to_relations(pres);
            if (opt.search || opt.order.empty()) {
                auto orders = qba::pbw_search(rs);
                json arr = json::array();
                for (const auto& ord : orders) arr.push_back(order_json(ord, names));
                report["pbw_orders"] = std::move(arr);
                report["pbw_order_count"] = orders.size();
                auto cert = qba::certify_skew_polynomial_ring(rs);
                if (cert)
                    report["skew_certificate"] = order_json(*cert, names);
                else
                    report["skew_certificate"] = nullptr;
            }
            if (!opt.order.empty()) {
                auto ord = parse_order(opt.order, names);
                auto rep = qba::check_pbw(rs, ord);
                report["report"] = pbw_report_json(rep, names);
                report["skew_polynomial_type"] = qba::is_skew_polynomial_type(rs, ord);
            }
        } else if (cmd == "graphs") {
            auto rs = to_relations(pres);
            auto ord = parse_order(opt.order, names);
            auto rep = qba::check_pbw(rs, ord);
            report["report"] = pbw_report_json(rep, names);
            auto [gn, gw] = qba::build_graphs(qs.size(), rep.obstructions);
            report["gamma_n"] = qba::emit_edge_list(gn, names);
            report["gamma_w"] = qba::emit_edge_list(gw, names);
            auto growth = qba::growth_and_gldim(gn, gw, opt.bound > 8 ? opt.bound : 8);
            json hilb = json::array();
            for (const auto& h : growth.hilbert) hilb.push_back(h.str());
            report["hilbert"] = std::move(hilb);
            report["polynomial_growth"] = growth.polynomial;
            if (growth.degree) report["growth_degree"] = *growth.degree;
            if (growth.gldim)
                report["gldim"] = *growth.gldim;
            else
                report["gldim"] = "infinite";
            bool tournament = qba::is_acyclic_tournament(gw);
            report["acyclic_tournament"] = tournament;
            if (tournament) {
                auto relabel = qba::tournament_relabel(gw);
                json arr = json::array();
                for (int k = 0; k < qs.size(); ++k) arr.push_back(names[relabel[k]]);
                report["tournament_relabel"] = std::move(arr);
            }
            auto verdict = qba::monomial_algebra_check(qs.size(), rep.obstructions);
            report["monomial_conditions"] = verdict.conditions;
            report["monomial_value"] = verdict.value;
        } else if (cmd == "harness") {
            auto rs = to_relations(pres);
            report["theorem1"] = qba::theorem1_matrix(rs);
            report["theorem2"] = qba::theorem2_matrix(rs);
            if (qs.predicates().quantum_binomial) {
                auto t3 = qba::theorem3_harness(qs);
                report["theorem3"] = {{"conditions", t3.conditions},
                                      {"value", t3.value},
                                      {"as_regular_implied", t3.as_regular_implied}};
            }
        }
    }

    std::string text = qba::report_to_text(report);
    std::cout << text;
    if (!opt.report_path.empty()) {
        std::ofstream f(opt.report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + opt.report_path);
        f << text;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum binomial algebra toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_file) {
        if (needs_file) sub->add_option("file", opt.file, "presentation file")->required();
        sub->add_option("--report", opt.report_path, "write the JSON report here");
        sub->add_option("--bound", opt.bound, "degree bound for searches");
        sub->add_option("--seed", opt.seed, "sampling seed");
        return sub;
    };

    add_common(app.add_subcommand("check", "predicates and quantum-binomial verdict"), true);
    auto* orbits = add_common(app.add_subcommand("orbits", "orbit census"), true);
    orbits->add_option("--degree", opt.degree, "word length (default 3)");
    auto* dims = add_common(app.add_subcommand("dims", "algebra dimensions by both oracles"), true);
    dims->add_option("--max", opt.max_degree, "largest degree (default 4)");
    auto* pbw = add_common(app.add_subcommand("pbw", "PBW order check or search"), true);
    pbw->add_option("--order", opt.order, "generators, largest first");
    pbw->add_flag("--search", opt.search, "enumerate all PBW orders");
    auto* graphs = add_common(app.add_subcommand("graphs", "graph analyses under an order"), true);
    graphs->add_option("--order", opt.order, "generators, largest first")->required();
    add_common(app.add_subcommand("harness", "theorem equivalence matrices"), true);
    auto* classify = add_common(app.add_subcommand("classify", "solution census"), false);
    classify->add_option("--n", opt.n, "number of generators")->required();
    auto* suite = add_common(app.add_subcommand("suite", "invariant suites"), false);
    suite->add_option("scope", opt.scope, "fixtures|exhaustive3|sampled5|census4")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
