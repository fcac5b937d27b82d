// liefield — exact symbolic calculator for finite-dimensional Lie algebras
// of exponential-polynomial vector fields on C^N.
//
// Subcommands:
//   bracket     Lie bracket of two fields given as expressions
//   closure     span closure of a generator list (dimension + basis)
//   analyze     closure + Killing form diagnostics, optional root analysis
//   realize     canonical realization of a product of A-type factors
//   straighten  torus substitution x_i = exp(u_i) applied to a realization
//   certify     full classification verdict with a re-checkable certificate
//   roots       root-system tables, diagrams and obstruction witnesses
//
// Exit codes: 0 success (any verdict), 1 failed verification or domain
// failure, 2 usage / parse error, 3 resource cap exhausted.

#include "liefield/certify.hpp"
#include "liefield/json_io.hpp"
#include "liefield/parse.hpp"
#include "liefield/print.hpp"
#include "liefield/realize.hpp"
#include "liefield/roots.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace liefield;

struct Options {
    int dim = 0;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    int max_dim = kDefaultMaxDim;
};

/// "A2,A1" -> {A2, A1}. TypeError propagates to the usage handler.
std::vector<SimpleType> parse_factor_list(const std::string& text) {
    std::vector<SimpleType> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // tolerate surrounding spaces, as in "A2, A1"
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw TypeError("empty factor in list '" + text + "'");
        out.push_back(parse_simple_type(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw TypeError("empty factor list");
    return out;
}

std::string join_types(const std::vector<SimpleType>& ts) {
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ",";
        s += ts[i].str();
    }
    return s;
}

int rank_sum(const std::vector<SimpleType>& ts) {
    int s = 0;
    for (const auto& t : ts) s += t.rank;
    return s;
}

std::vector<GField> parse_fields(const std::vector<std::string>& exprs, int dim) {
    std::vector<GField> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(parse_field(e, dim));
    return out;
}

json fields_to_json(const std::vector<GField>& fs) {
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(field_to_json(f));
    return arr;
}

json triples_to_json(const Realization& r) {
    json arr = json::array();
    for (const auto& t : r.triples) {
        arr.push_back(json{{"x", field_to_json(t.x)},
                           {"y", field_to_json(t.y)},
                           {"h", field_to_json(t.h)}});
    }
    return arr;
}

void print_triples(std::ostream& os, const Realization& r) {
    os << "ambient dimension: " << r.ambient << "\n";
    os << "factors: " << join_types(r.factors) << "\n";
    os << "rank: " << r.rank() << "\n";
    for (int i = 0; i < r.rank(); ++i) {
        const auto& t = r.triples[static_cast<std::size_t>(i)];
        os << "triple " << (i + 1) << ":\n";
        os << "  X = " << to_string(t.x) << "\n";
        os << "  Y = " << to_string(t.y) << "\n";
        os << "  H = " << to_string(t.h) << "\n";
    }
}

std::string root_vec_str(const RootVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------- bracket

int cmd_bracket(const Options& opt, const std::vector<std::string>& exprs) {
    const GField u = parse_field(exprs[0], opt.dim);
    const GField v = parse_field(exprs[1], opt.dim);
    const GField w = bracket(u, v);
    if (opt.json) {
        std::cout << field_to_json(w).dump(2) << "\n";
    } else {
        std::cout << to_string(w) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- closure

int cmd_closure(const Options& opt, const std::vector<std::string>& exprs, int expect_dim) {
    const auto gens = parse_fields(exprs, opt.dim);
    const Subalgebra A = span_closure(gens, opt.max_dim);
    if (opt.json) {
        json out{{"dim", opt.dim},
                 {"closure_dim", A.dimension()},
                 {"basis", fields_to_json(A.basis())}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "closure dimension: " << A.dimension() << "\n";
        for (int i = 0; i < A.dimension(); ++i)
            std::cout << "  b" << (i + 1) << " = " << to_string(A.basis()[static_cast<std::size_t>(i)])
                      << "\n";
    }
    if (expect_dim >= 0 && A.dimension() != expect_dim) {
        std::cerr << "expectation failed: closure dimension " << A.dimension() << " != "
                  << expect_dim << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Options& opt, const std::vector<std::string>& exprs,
                const std::vector<std::string>& cartan_exprs, int expect_dim,
                const std::string& expect_type) {
    const auto gens = parse_fields(exprs, opt.dim);
    const Subalgebra A = span_closure(gens, opt.max_dim);
    const GaussianRational det = killing_determinant(A);
    const bool ss = !det.is_zero();
    const int rank = generic_rank(A.basis(), opt.seed);

    std::vector<SimpleType> type;
    json roots_json = json::array();
    std::vector<std::string> root_lines;
    if (!cartan_exprs.empty()) {
        const auto cartan = parse_fields(cartan_exprs, opt.dim);
        const CartanData cd = root_decomposition(A, cartan);
        type = identify_type(cd);
        for (std::size_t r = 0; r < cd.roots.size(); ++r) {
            std::string s = "(";
            for (std::size_t k = 0; k < cd.roots[r].size(); ++k) {
                if (k) s += ",";
                std::ostringstream os;
                os << cd.roots[r][k];
                s += os.str();
            }
            s += ")";
            root_lines.push_back(s + " dim " +
                                 std::to_string(cd.root_spaces[r].size()));
            roots_json.push_back(json{{"value", s},
                                      {"space_dim", cd.root_spaces[r].size()}});
        }
    }

    if (opt.json) {
        json out{{"dim", opt.dim},
                 {"closure_dim", A.dimension()},
                 {"killing_determinant", det.str()},
                 {"semisimple", ss},
                 {"generic_rank", rank}};
        if (!cartan_exprs.empty()) {
            out["type"] = join_types(type);
            out["roots"] = roots_json;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "closure dimension: " << A.dimension() << "\n";
        std::cout << "killing determinant: " << det.str() << "\n";
        std::cout << "semisimple: " << (ss ? "yes" : "no") << "\n";
        std::cout << "generic rank: " << rank << "\n";
        if (!cartan_exprs.empty()) {
            std::cout << "type: " << join_types(type) << "\n";
            std::cout << "roots (" << root_lines.size() << "):\n";
            for (const auto& l : root_lines) std::cout << "  " << l << "\n";
        }
    }

    if (expect_dim >= 0 && A.dimension() != expect_dim) {
        std::cerr << "expectation failed: closure dimension " << A.dimension() << " != "
                  << expect_dim << "\n";
        return 1;
    }
    if (!expect_type.empty()) {
        if (cartan_exprs.empty()) {
            std::cerr << "--expect-type requires --cartan\n";
            return 2;
        }
        if (join_types(type) != expect_type) {
            std::cerr << "expectation failed: type " << join_types(type) << " != " << expect_type
                      << "\n";
            return 1;
        }
    }
    return 0;
}

// ------------------------------------------------------- realize/straighten

Realization build_product(const std::vector<SimpleType>& factors, int dim) {
    std::vector<int> ranks;
    for (const auto& t : factors) {
        if (!is_a_type(t))
            throw TypeError("factor " + t.str() +
                            " is not A-type; only A-type products have canonical "
                            "realizations (see `certify`)");
        ranks.push_back(t.rank);
    }
    const int total = rank_sum(factors);
    if (dim != 0 && dim != total)
        throw DimensionMismatch("--dim " + std::to_string(dim) + " does not match the rank sum " +
                                std::to_string(total));
    return product(ranks);
}

int report_realization(const Options& opt, const Realization& r, bool do_audit) {
    AuditReport rep;
    if (do_audit) rep = audit(r, opt.seed, opt.max_dim);
    if (opt.json) {
        json out{{"ambient", r.ambient},
                 {"factors", join_types(r.factors)},
                 {"rank", r.rank()},
                 {"triples", triples_to_json(r)}};
        if (do_audit) {
            out["audit"] = json{{"ok", rep.ok},
                                {"closure_dim", rep.closure_dim},
                                {"expected_dim", rep.expected_dim},
                                {"semisimple", rep.semisimple},
                                {"identified", join_types(rep.identified)},
                                {"pointwise_rank", rep.pointwise_rank},
                                {"failures", rep.failures}};
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_triples(std::cout, r);
        if (do_audit) std::cout << rep.str();
    }
    if (do_audit && !rep.ok) {
        std::cerr << "audit failed\n";
        return 1;
    }
    return 0;
}

int cmd_realize(const Options& opt, const std::string& factors_text, bool do_audit) {
    const auto factors = parse_factor_list(factors_text);
    const Realization r = build_product(factors, opt.dim);
    return report_realization(opt, r, do_audit);
}

int cmd_straighten(const Options& opt, const std::string& factors_text, bool do_audit) {
    const auto factors = parse_factor_list(factors_text);
    const Realization r = straighten(build_product(factors, opt.dim));
    return report_realization(opt, r, do_audit);
}

// ---------------------------------------------------------------- certify

int cmd_certify(const Options& opt, const std::string& factors_text, bool recheck) {
    const auto factors = parse_factor_list(factors_text);
    if (opt.dim <= 0) throw IndexError("--dim must be a positive ambient dimension");
    GroebnerOptions gopt;
    const Certificate cert = classify(factors, opt.dim, gopt, opt.seed);
    bool rechecked_ok = true;
    if (recheck) rechecked_ok = reverify(cert, opt.seed);
    if (opt.json) {
        json out = cert.to_json();
        if (recheck) out["reverified"] = rechecked_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << cert.verdict_name() << "\n";
        std::cout << cert.transcript();
        if (recheck)
            std::cout << "reverified: " << (rechecked_ok ? "yes" : "NO") << "\n";
    }
    if (recheck && !rechecked_ok) {
        std::cerr << "certificate failed re-verification\n";
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------ roots

int cmd_roots(const Options& opt, const std::string& type_text, bool diagram, bool witness) {
    const SimpleType t = parse_simple_type(type_text);
    const RootSystem rs = build_root_system(t);
    const RootVec high = highest_root(rs);

    json wj;
    std::string wtext;
    if (witness) {
        const ObstructionWitness w = obstruction_witness(t);
        if (w.a_type) {
            wtext = "witness: none (A-type factors carry no obstruction)\n";
            wj = json{{"a_type", true}};
        } else {
            wtext = "witness: " + w.target.str() + " on nodes {";
            for (std::size_t i = 0; i < w.nodes.size(); ++i) {
                if (i) wtext += ",";
                wtext += std::to_string(w.nodes[i]);
            }
            wtext += "}\n";
            wj = json{{"a_type", false}, {"target", w.target.str()}, {"nodes", w.nodes}};
            if (!w.e6_nodes.empty()) {
                wtext += "via E6 sub-diagram on nodes {";
                for (std::size_t i = 0; i < w.e6_nodes.size(); ++i) {
                    if (i) wtext += ",";
                    wtext += std::to_string(w.e6_nodes[i]);
                }
                wtext += "}\n";
                wj["e6_nodes"] = w.e6_nodes;
            }
        }
    }

    if (opt.json) {
        json cart = json::array();
        for (const auto& row : rs.cartan) cart.push_back(row);
        json pos = json::array();
        for (const auto& r : rs.positive) pos.push_back(r);
        json out{{"type", t.str()},
                 {"rank", rs.rank},
                 {"cartan_matrix", cart},
                 {"half_norms", rs.half_norms},
                 {"positive_roots", pos},
                 {"highest_root", high}};
        if (diagram) out["diagram"] = ascii_diagram(t);
        if (witness) out["witness"] = wj;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "type: " << t.str() << "\n";
        std::cout << "rank: " << rs.rank << "\n";
        if (diagram) std::cout << ascii_diagram(t) << "\n";
        std::cout << "cartan matrix:\n";
        for (const auto& row : rs.cartan) {
            std::cout << "  ";
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << " ";
                std::cout << row[j];
            }
            std::cout << "\n";
        }
        std::cout << "positive roots (" << rs.positive.size() << "):\n";
        for (const auto& r : rs.positive) std::cout << "  " << root_vec_str(r) << "\n";
        std::cout << "highest root: " << root_vec_str(high) << "\n";
        if (witness) std::cout << wtext;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for Lie algebras of exponential-polynomial "
                 "vector fields"};
    app.require_subcommand(1);
    app.get_formatter()->column_width(30);

    Options opt;

    // Global flags are registered on every subcommand so they can appear
    // after the subcommand name (the natural position).
    auto add_common = [&](CLI::App* sub, bool need_dim) {
        auto* d = sub->add_option("--dim", opt.dim, "ambient dimension N (coordinates x1..xN)");
        if (need_dim) d->required();
        sub->add_flag("--json", opt.json, "emit the report as JSON");
        sub->add_option("--seed", opt.seed, "seed for the numeric rank diagnostic");
        sub->add_option("--max-dim", opt.max_dim,
                        "closure dimension cap (resource limit, exit 3 when hit)");
    };

    // bracket
    std::vector<std::string> bracket_exprs;
    auto* sub_bracket = app.add_subcommand("bracket", "Lie bracket [U,V] of two fields");
    sub_bracket->add_option("fields", bracket_exprs, "two field expressions")
        ->expected(2)
        ->required();
    add_common(sub_bracket, true);

    // closure
    std::vector<std::string> closure_exprs;
    int closure_expect_dim = -1;
    auto* sub_closure = app.add_subcommand("closure", "span closure of a generator list");
    sub_closure->add_option("fields", closure_exprs, "generator expressions")->required();
    add_common(sub_closure, true);
    sub_closure->add_option("--expect-dim", closure_expect_dim,
                            "fail (exit 1) unless the closure has this dimension");

    // analyze
    std::vector<std::string> analyze_exprs;
    std::vector<std::string> analyze_cartan;
    int analyze_expect_dim = -1;
    std::string analyze_expect_type;
    auto* sub_analyze =
        app.add_subcommand("analyze", "closure, Killing form, rank; optional root analysis");
    sub_analyze->add_option("fields", analyze_exprs, "generator expressions")->required();
    add_common(sub_analyze, true);
    sub_analyze->add_option("--cartan", analyze_cartan,
                            "commuting family for the root decomposition");
    sub_analyze->add_option("--expect-dim", analyze_expect_dim,
                            "fail (exit 1) unless the closure has this dimension");
    sub_analyze->add_option("--expect-type", analyze_expect_type,
                            "fail (exit 1) unless the identified type matches, e.g. A2,A1");

    // realize
    std::string realize_factors;
    bool realize_audit = false;
    auto* sub_realize =
        app.add_subcommand("realize", "canonical realization of an A-type product");
    sub_realize->add_option("--factors", realize_factors, "comma-separated list, e.g. A2,A1")
        ->required();
    add_common(sub_realize, false);
    sub_realize->add_flag("--audit", realize_audit, "re-derive and check every claim (exit 1 on failure)");

    // straighten
    std::string straighten_factors;
    bool straighten_audit = false;
    auto* sub_straighten = app.add_subcommand(
        "straighten", "exponential-coordinate form of a canonical realization");
    sub_straighten->add_option("--factors", straighten_factors, "comma-separated list, e.g. A2,A1")
        ->required();
    add_common(sub_straighten, false);
    sub_straighten->add_flag("--audit", straighten_audit,
                             "re-derive and check every claim (exit 1 on failure)");

    // certify
    std::string certify_factors;
    bool certify_recheck = false;
    auto* sub_certify = app.add_subcommand(
        "certify", "classification verdict for a product of simple factors on C^N");
    sub_certify->add_option("--factors", certify_factors, "comma-separated list, e.g. B2 or A2,A1")
        ->required();
    add_common(sub_certify, true);
    sub_certify->add_flag("--recheck", certify_recheck,
                          "re-verify the emitted certificate from scratch (exit 1 on failure)");

    // roots
    std::string roots_type;
    bool roots_diagram = false;
    bool roots_witness = false;
    auto* sub_roots = app.add_subcommand("roots", "root-system tables for a simple type");
    sub_roots->add_option("--type", roots_type, "simple type, e.g. A3, B2, G2, D4, E8")
        ->required();
    add_common(sub_roots, false);
    sub_roots->add_flag("--diagram", roots_diagram, "include the Dynkin diagram");
    sub_roots->add_flag("--witness", roots_witness, "include the obstruction witness sub-diagram");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; any usage error exits 2
    }

    try {
        if (sub_bracket->parsed()) return cmd_bracket(opt, bracket_exprs);
        if (sub_closure->parsed()) return cmd_closure(opt, closure_exprs, closure_expect_dim);
        if (sub_analyze->parsed())
            return cmd_analyze(opt, analyze_exprs, analyze_cartan, analyze_expect_dim,
                               analyze_expect_type);
        if (sub_realize->parsed()) return cmd_realize(opt, realize_factors, realize_audit);
        if (sub_straighten->parsed()) return cmd_straighten(opt, straighten_factors, straighten_audit);
        if (sub_certify->parsed()) return cmd_certify(opt, certify_factors, certify_recheck);
        if (sub_roots->parsed()) return cmd_roots(opt, roots_type, roots_diagram, roots_witness);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ResourceExhausted& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const TypeError& e) {
        std::cerr << "type error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return 2;
    } catch (const IndexError& e) {
        std::cerr << "index error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
