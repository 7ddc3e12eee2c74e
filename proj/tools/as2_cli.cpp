// as2: command-line workbench for the tree algebra, normal forms and series checks.
//
// Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error.

#include "as2/as2.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace {

using namespace as2;

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::size_t labels = 0;
    std::string alphabet;

    [[nodiscard]] bool json() const { return format == "json"; }

    /// --alphabet, then --labels, then labels found in the inputs (sorted).
    [[nodiscard]] Alphabet resolve(const std::vector<std::string>& inputs, std::size_t fallback = 0) const {
        if (!alphabet.empty()) {
            std::vector<std::string> names;
            std::stringstream ss(alphabet);
            for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
            return Alphabet(names);
        }
        if (labels > 0) return Alphabet::numbered(labels);
        std::set<std::string> found;
        for (const auto& text : inputs)
            for (std::size_t i = 0; i < text.size();) {
                if (std::isalpha(static_cast<unsigned char>(text[i]))) {
                    std::size_t j = i;
                    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
                    found.insert(text.substr(i, j - i));
                    i = j;
                } else {
                    ++i;
                }
            }
        if (found.empty() && fallback > 0) return Alphabet::numbered(fallback);
        return Alphabet(std::vector<std::string>(found.begin(), found.end()));
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    auto* l = sub->add_option("--labels", c.labels, "Alphabet x1..xk")->check(CLI::PositiveNumber);
    sub->add_option("--alphabet", c.alphabet, "Comma-separated label names")->excludes(l);
}

std::string read_stdin() {
    std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!all.empty() && std::isspace(static_cast<unsigned char>(all.back()))) all.pop_back();
    return all;
}

std::string input_or_stdin(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    std::string s = read_stdin();
    if (s.empty()) throw UsageError("no input given (flag or stdin)");
    return s;
}

template <class Key, class RenderKey>
Json lincomb_json(const LinComb<Key>& x, RenderKey&& put) {
    Json terms = Json::array();
    for (const auto& [k, c] : x) {
        Json t;
        t["coeff"] = c.str();
        put(t, k);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

Json trees_json(const TreeLinComb& x, const Alphabet& a) {
    return lincomb_json(x, [&](Json& t, const PlanarTree& k) { t["tree"] = render_tree(k, a); });
}

Json pairs_json(const TreePairLinComb& x, const Alphabet& a) {
    return lincomb_json(x, [&](Json& t, const TreePair& k) {
        t["left"] = render_tree(k.first, a);
        t["right"] = render_tree(k.second, a);
    });
}

Json exprs_json(const ExprLinComb& x, const Alphabet& a) {
    return lincomb_json(x, [&](Json& t, const Expr& k) { t["expr"] = render_expr(k, a); });
}

Json nf_json(const NFLinComb& x, const Alphabet& a) {
    return lincomb_json(x, [&](Json& t, const NFMonomial& k) {
        t["expr"] = render_expr(k.expr(), a);
        t["tag"] = k.tag();
    });
}

int emit_reports(const std::vector<CheckReport>& reports, bool json) {
    if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        Json doc;
        doc["reports"] = std::move(arr);
        doc["pass"] = all_pass(reports);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
    }
    return all_pass(reports) ? 0 : kCheckFailed;
}

std::vector<CheckReport> series_reports(const std::string& check, std::size_t order) {
    if (check == "narayana") return {check_narayana_eq(order)};
    if (check == "funcas") return {check_funcas(order)};
    if (check == "koszul") return {check_koszul_gf(order)};
    if (check == "beta") return check_beta_eqs(order);
    if (check == "duality") return {check_character_duality(order)};
    return check_sl2_corollary(order);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for the free algebra on two compatible associative products"};
    app.require_subcommand(1);

    Common common;

    std::size_t degree = 0;
    auto* count = app.add_subcommand("count-trees", "Number of labelled planar rooted trees of a degree");
    count->add_option("--degree", degree)->required();
    add_common(count, common);

    auto* enumerate = app.add_subcommand("enum-trees", "List trees of a degree in canonical order");
    enumerate->add_option("--degree", degree)->required();
    add_common(enumerate, common);

    int op = 1;
    bool unital = false;
    std::string lhs, rhs;
    auto* mul = app.add_subcommand("mul", "Grafting product of two tree combinations");
    mul->add_option("--op", op)->check(CLI::IsMember({1, 2}));
    mul->add_flag("--unital", unital, "Treat () as a two-sided unit");
    mul->add_option("--lhs", lhs);
    mul->add_option("--rhs", rhs);
    add_common(mul, common);

    std::string tree;
    auto* cop = app.add_subcommand("coproduct", "Coproduct of a tree combination");
    cop->add_option("--tree", tree);
    add_common(cop, common);

    std::string expr;
    auto* nf = app.add_subcommand("nf", "Normal form of an expression combination");
    nf->add_option("--expr", expr);
    add_common(nf, common);

    bool multilinear = false, words = false;
    auto* basis = app.add_subcommand("basis", "Monomial basis (multilinear on the first n labels, or all words)");
    auto* ml_flag = basis->add_flag("--multilinear", multilinear);
    basis->add_flag("--words", words)->excludes(ml_flag);
    basis->add_option("--degree,--n", degree)->required();
    add_common(basis, common);

    auto* to_basis = app.add_subcommand("to-basis", "Coordinates of a tree combination in the normal-form basis");
    to_basis->add_option("--tree", tree);
    add_common(to_basis, common);

    std::size_t fuel = 1000;
    auto* decompose = app.add_subcommand("decompose", "Generation recursion through degree-1 trees");
    decompose->add_option("--tree", tree);
    decompose->add_option("--fuel", fuel)->check(CLI::PositiveNumber);
    add_common(decompose, common);

    std::size_t n = 3;
    auto* rank_cmd = app.add_subcommand("rank", "Rank of all evaluated multilinear expressions");
    rank_cmd->add_option("--n", n)->check(CLI::Range(2, 5));
    add_common(rank_cmd, common);

    std::string check = "funcas";
    std::size_t order = 8;
    auto* series = app.add_subcommand("series", "Generating-function and character identities");
    series->add_option("--check", check)
        ->check(CLI::IsMember({"funcas", "narayana", "koszul", "beta", "duality", "sl2"}));
    series->add_option("--order", order)->check(CLI::Range(2, 40));
    add_common(series, common);

    std::string suite = "all";
    std::size_t max_degree = 4;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"products", "basis", "iso", "series", "hopf", "all"}));
    verify->add_option("--max-degree", max_degree)->check(CLI::Range(2, 4));
    verify->add_option("--order", order)->check(CLI::Range(2, 16));
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    const bool json = common.json();
    try {
        if (*count) {
            const std::size_t k = common.resolve({}, 1).size();
            BigInt total = catalan(degree);
            for (std::size_t i = 0; i < degree; ++i) total *= k;
            if (json) {
                Json j;
                j["degree"] = degree;
                j["labels"] = k;
                j["count"] = big_to_json(total);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << total.str() << "\n";
            }
        } else if (*enumerate) {
            const Alphabet a = common.resolve({}, 1);
            const auto trees = enumerate_trees(degree, a);
            if (json) {
                Json arr = Json::array();
                for (const auto& t : trees) arr.push_back(render_tree(t, a));
                Json j;
                j["degree"] = degree;
                j["trees"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& t : trees) std::cout << render_tree(t, a) << "\n";
            }
        } else if (*mul) {
            if (lhs.empty() || rhs.empty()) {
                std::istringstream in(read_stdin());
                if (lhs.empty()) std::getline(in, lhs);
                if (rhs.empty()) std::getline(in, rhs);
                if (lhs.empty() || rhs.empty()) throw UsageError("mul needs --lhs and --rhs (or two stdin lines)");
            }
            const Alphabet a = common.resolve({lhs, rhs});
            const auto x = parse_tree_lincomb(lhs, a);
            const auto y = parse_tree_lincomb(rhs, a);
            const auto p = star_lin(op == 1 ? Product::first : Product::second, x, y,
                                    unital ? UnitMode::unital : UnitMode::strict);
            std::cout << (json ? trees_json(p, a).dump(2) : render(p, a)) << "\n";
        } else if (*cop) {
            const std::string text = input_or_stdin(tree);
            const Alphabet a = common.resolve({text});
            const auto d = coproduct(parse_tree_lincomb(text, a));
            std::cout << (json ? pairs_json(d, a).dump(2) : render(d, a)) << "\n";
        } else if (*nf) {
            const std::string text = input_or_stdin(expr);
            const Alphabet a = common.resolve({text});
            const auto r = normal_form(parse_expr_lincomb(text, a));
            std::cout << (json ? nf_json(r, a).dump(2) : render(r, a)) << "\n";
        } else if (*basis) {
            if (degree == 0) throw UsageError("basis: --degree must be >= 1");
            std::vector<NFMonomial> monomials;
            Alphabet a;
            if (words) {
                a = common.resolve({}, 1);
                monomials = gen_word_monomials(degree, a);
            } else {
                a = common.resolve({}, degree);
                if (a.size() < degree) throw UsageError("basis --multilinear: alphabet has fewer than n labels");
                auto ls = a.labels();
                ls.resize(degree);
                monomials = gen_multilinear_basis(ls);
            }
            if (json) {
                Json arr = Json::array();
                for (const auto& m : monomials) arr.push_back({{"expr", render_expr(m.expr(), a)}, {"tag", m.tag()}});
                Json j;
                j["degree"] = degree;
                j["count"] = monomials.size();
                j["monomials"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& m : monomials) std::cout << render_expr(m.expr(), a) << "\n";
            }
        } else if (*to_basis) {
            const std::string text = input_or_stdin(tree);
            const Alphabet a = common.resolve({text});
            TreeBasisSolver solver(a);
            const auto coords = solver.tree_to_basis(parse_tree_lincomb(text, a));
            std::cout << (json ? nf_json(coords, a).dump(2) : render(coords, a)) << "\n";
        } else if (*decompose) {
            const std::string text = input_or_stdin(tree);
            const Alphabet a = common.resolve({text});
            std::size_t used = 0;
            const auto r = decompose_generation(parse_tree(text, a), fuel, &used);
            if (json) {
                Json j = r ? exprs_json(*r, a) : Json::object();
                j["status"] = r ? "ok" : "FuelExhausted";
                j["fuel_used"] = used;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (r ? render(*r, a) : std::string("FuelExhausted")) << "\n";
            }
            return r ? 0 : kCheckFailed;
        } else if (*rank_cmd) {
            return emit_reports({multilinear_rank_check(n)}, json);
        } else if (*series) {
            return emit_reports(series_reports(check, order), json);
        } else if (*verify) {
            const auto results = run_suite(*parse_suite(suite), VerifyConfig::scaled(max_degree, order), false);
            bool pass = true;
            if (json) {
                Json arr = Json::array();
                for (const auto& r : results) {
                    Json reports = Json::array();
                    for (const auto& rep : r.reports) reports.push_back(rep.to_json());
                    arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"reports", reports}});
                    pass = pass && r.pass;
                }
                Json j;
                j["suite"] = suite;
                j["max_degree"] = max_degree;
                j["order"] = order;
                j["criteria"] = std::move(arr);
                j["pass"] = pass;
                std::cout << j.dump(2) << "\n";
            } else {
                std::size_t passed = 0;
                for (const auto& r : results) {
                    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
                    for (const auto& rep : r.reports) std::cout << "  " << rep.to_text() << "\n";
                    pass = pass && r.pass;
                    passed += r.pass ? 1 : 0;
                }
                std::cout << passed << "/" << results.size() << " criteria passed\n";
            }
            return pass ? 0 : kCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SolveFailure& e) {
        std::cerr << "solve failure: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return 0;
}
