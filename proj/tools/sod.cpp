#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sodlat/bnclassify.hpp"
#include "sodlat/families.hpp"
#include "sodlat/hochschild.hpp"
#include "sodlat/isometry.hpp"
#include "sodlat/verify.hpp"

using nlohmann::ordered_json;
using namespace sod;

namespace {

enum class status { ok = 0, verification_failed = 1, usage = 2 };

struct command_result {
    status st = status::ok;
    ordered_json payload;
    std::string human_text;
};

std::string format_flag;  // "table" (default) or "json"

void emit(const command_result& r) {
    if (format_flag == "json")
        std::cout << r.payload.dump(2) << "\n";
    else
        std::cout << r.human_text;
}

ordered_json matrix_json(const imat& m) {
    ordered_json rows = ordered_json::array();
    for (long long i = 0; i < m.nrows; ++i) {
        ordered_json row = ordered_json::array();
        for (long long j = 0; j < m.ncols; ++j) row.push_back(to_ll(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

kclass parse_class(const std::string& text, long long rank) {
    kclass v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(Int(std::stoll(tok)));
        } catch (const std::exception&) {
            throw usage_error("bad class coordinate '" + tok + "'");
        }
    }
    if (static_cast<long long>(v.size()) != rank)
        throw usage_error("class has " + std::to_string(v.size()) + " coordinates, lattice rank is " +
                          std::to_string(rank));
    return v;
}

struct family_options {
    std::string family;
    long long genus = -1, g1 = -1, g2 = -1, h0 = -1, h1 = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "family kind (augmented|ipg|rpg|bncomp) or spec like augmented:4")
            ->required();
        cmd->add_option("--genus", genus, "genus for augmented / bncomp");
        cmd->add_option("--g1", g1, "first genus for ipg / rpg");
        cmd->add_option("--g2", g2, "second genus for ipg / rpg");
        cmd->add_option("--h0", h0, "h^0 for bncomp");
        cmd->add_option("--h1", h1, "h^1 for bncomp");
    }

    family_spec resolve() const {
        if (family.find(':') != std::string::npos) return parse_family(family);
        std::ostringstream spec;
        if (family == "augmented") {
            if (genus < 0) throw usage_error("augmented needs --genus");
            spec << "augmented:" << genus;
        } else if (family == "ipg" || family == "rpg") {
            if (g1 < 0 || g2 < 0) throw usage_error(family + " needs --g1 and --g2");
            spec << family << ":" << g1 << "," << g2;
        } else if (family == "bncomp") {
            if (genus < 0 || h0 < 0 || h1 < 0) throw usage_error("bncomp needs --genus, --h0, --h1");
            spec << "bncomp:" << genus << "," << h0 << "," << h1;
        } else {
            throw usage_error("unknown family '" + family + "'");
        }
        return parse_family(spec.str());
    }
};

/* a lattice argument: family spec string, or @path to a lattice JSON file */
euler_lattice resolve_lattice(const std::string& arg, std::string& label) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw usage_error("cannot open lattice file " + arg.substr(1));
        ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw usage_error(std::string("bad lattice JSON: ") + e.what());
        }
        label = arg;
        return lattice_from_json(j);
    }
    label = arg;
    return lattice_for(parse_family(arg));
}

command_result run_invariants(const family_options& fam) {
    family_spec spec = fam.resolve();
    euler_lattice l = lattice_for(spec);
    command_result r;
    r.payload["family"] = spec.to_string();
    r.payload["lattice"] = lattice_to_json(l);
    r.payload["det"] = to_ll(l.determinant);
    r.payload["unimodular"] = l.unimodular();
    std::ostringstream text;
    text << "family " << spec.to_string() << "\n";
    text << "basis";
    for (const auto& b : l.basis) text << " " << b;
    text << "\ngram " << l.gram.to_string() << "\ndet " << l.determinant << "\n";
    serre_data s = serre_analysis(l);
    r.payload["serre"] = {{"matrix", matrix_json(s.serre_matrix)},
                          {"char_poly", s.characteristic_polynomial.to_string()},
                          {"quasiunipotent", s.quasiunipotent},
                          {"unipotent", s.unipotent}};
    text << "serre matrix " << s.serre_matrix.to_string() << "\nserre char poly "
         << s.characteristic_polynomial.to_string() << "\nquasiunipotent "
         << (s.quasiunipotent ? "yes" : "no") << ", unipotent " << (s.unipotent ? "yes" : "no")
         << "\n";
    r.payload["hh_homology"] = hh_homology(spec).to_json();
    text << "HH homology " << hh_homology(spec).to_string() << "\n";
    try {
        graded_dims coh = hh_cohomology(spec);
        r.payload["hh_cohomology"] = coh.to_json();
        text << "HH cohomology " << coh.to_string() << "\n";
    } catch (const unsupported_range_error& e) {
        r.payload["hh_cohomology"] = nullptr;
        r.payload["hh_cohomology_note"] = e.what();
        text << "HH cohomology unavailable: " << e.what() << "\n";
    }
    r.human_text = text.str();
    return r;
}

command_result run_check(const std::string& predicate, const family_options& fam,
                         const std::string& class_text) {
    family_spec spec = fam.resolve();
    euler_lattice l = lattice_for(spec);
    kclass v = parse_class(class_text, l.rank());
    class_predicate_result p = class_predicates(l, v);
    bool holds;
    if (predicate == "exceptional")
        holds = p.numerically_exceptional;
    else if (predicate == "spherical")
        holds = p.numerically_2spherical;
    else
        throw usage_error("check predicate must be 'exceptional' or 'spherical'");
    command_result r;
    r.st = holds ? status::ok : status::verification_failed;
    r.payload["family"] = spec.to_string();
    r.payload["class"] = class_text;
    r.payload["chi_self"] = to_ll(p.chi_self);
    r.payload["numerically_exceptional"] = p.numerically_exceptional;
    r.payload["numerically_2spherical"] = p.numerically_2spherical;
    r.payload["predicate"] = predicate;
    r.payload["holds"] = holds;
    std::ostringstream text;
    text << "chi(v, v) = " << p.chi_self << "\nnumerically " << predicate << ": "
         << (holds ? "yes" : "no") << "\n";
    r.human_text = text.str();
    return r;
}

command_result run_isometry(const std::string& left, const std::string& right, long long bound) {
    std::string llabel, rlabel;
    euler_lattice l1 = resolve_lattice(left, llabel);
    euler_lattice l2 = resolve_lattice(right, rlabel);
    isometry_result res = isometry_search(l1, l2, bound);
    command_result r;
    r.payload["left"] = llabel;
    r.payload["right"] = rlabel;
    r.payload["bound"] = bound;
    std::ostringstream text;
    switch (res.kind) {
        case isometry_kind::found:
            r.st = status::ok;
            r.payload["result"] = "found";
            r.payload["transform"] = matrix_json(res.transform);
            text << "found P = " << res.transform.to_string() << "\n";
            break;
        case isometry_kind::refuted_by_invariant:
            r.st = status::verification_failed;
            r.payload["result"] = "refuted_by_invariant";
            r.payload["invariant"] = res.invariant;
            text << "refuted by invariant: " << res.invariant << "\n";
            break;
        case isometry_kind::not_found_up_to_bound:
            r.st = status::verification_failed;
            r.payload["result"] = "not_found_up_to_bound";
            text << "no isometry with entries bounded by " << bound
                 << " (inconclusive: larger transforms may exist)\n";
            break;
    }
    r.human_text = text.str();
    return r;
}

command_result run_classify_bn(long long genus) {
    if (genus < 1) throw usage_error("classify-bn needs --genus >= 1");
    auto entries = classify_bn(genus);
    command_result r;
    r.payload["genus"] = genus;
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    text << "genus " << genus << "\n";
    for (const auto& e : entries) {
        list.push_back({{"h0", e.h0},
                        {"h1", e.h1},
                        {"form", {to_ll(e.symmetrized.p), to_ll(e.symmetrized.q), to_ll(e.symmetrized.r)}},
                        {"disc", to_ll(e.disc)},
                        {"curve_equivalent", e.curve_equivalent},
                        {"verdict", e.verdict}});
        text << "(h0, h1) = (" << e.h0 << ", " << e.h1 << ")  form " << e.symmetrized.to_string()
             << "  disc " << e.disc << "  " << e.verdict << "\n";
    }
    r.payload["entries"] = list;
    r.human_text = text.str();
    return r;
}

command_result run_bnp(long long genus) {
    if (genus < 1) throw usage_error("bnp needs --genus >= 1");
    command_result r;
    r.payload["genus"] = genus;
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    text << "genus " << genus << "\n";
    for (const auto& e : bnp_enumerate(genus)) {
        list.push_back({{"r", e.r}, {"s", e.s}, {"degree", to_ll(e.degree)}, {"count", e.count.str()}});
        text << "h0 = " << e.r << ", h1 = " << e.s << ", degree " << e.degree << ", count "
             << e.count << "\n";
    }
    r.payload["entries"] = list;
    r.human_text = text.str();
    return r;
}

command_result run_lattice(const family_options& fam) {
    family_spec spec = fam.resolve();
    command_result r;
    r.payload = lattice_to_json(lattice_for(spec));
    r.human_text = r.payload.dump(2) + "\n";
    return r;
}

command_result run_verify_all(const std::string& filter) {
    std::uint64_t seed = 20240801;
    if (const char* env = std::getenv("SOD_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            throw usage_error("SOD_SEED must be an unsigned integer");
        }
    }
    auto outcomes = run_verify(filter, seed);
    if (outcomes.empty()) throw usage_error("no verification item matches filter '" + filter + "'");
    command_result r;
    r.st = all_passed(outcomes) ? status::ok : status::verification_failed;
    ordered_json items = ordered_json::array();
    std::ostringstream text;
    for (const auto& o : outcomes) {
        ordered_json item = {{"id", o.id}, {"description", o.description}, {"passed", o.passed}};
        if (!o.passed) item["message"] = o.message;
        items.push_back(item);
        text << (o.passed ? "PASS " : "FAIL ") << o.id << "  " << o.description << "\n";
        if (!o.passed) text << "       " << o.message << "\n";
    }
    r.payload["seed"] = seed;
    r.payload["items"] = items;
    r.payload["passed"] = all_passed(outcomes);
    text << (all_passed(outcomes) ? "all items passed" : "FAILURES PRESENT") << "\n";
    r.human_text = text.str();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler-lattice toolkit for glued derived categories of curves"};
    app.require_subcommand(1);
    app.add_option("--format", format_flag, "output format: table (default) or json")
        ->default_val("table")
        ->check(CLI::IsMember({"table", "json"}));

    family_options inv_fam, check_fam, lattice_fam;
    std::string check_predicate, check_class;
    std::string iso_left, iso_right, filter;
    long long iso_bound = 10, genus = -1;

    CLI::App* inv = app.add_subcommand("invariants", "Gram matrix, Hochschild tables, Serre analysis");
    inv->fallthrough();
    inv_fam.attach(inv);

    CLI::App* check = app.add_subcommand("check", "numerical class predicates");
    check->fallthrough();
    check->add_option("predicate", check_predicate, "exceptional | spherical")->required();
    check_fam.attach(check);
    check->add_option("--class", check_class, "comma-separated integer coordinates")->required();

    CLI::App* iso = app.add_subcommand("isometry", "bounded isometry search between two lattices");
    iso->fallthrough();
    iso->add_option("--left", iso_left, "family spec or @lattice.json")->required();
    iso->add_option("--right", iso_right, "family spec or @lattice.json")->required();
    iso->add_option("--bound", iso_bound, "entry bound for the transform (default 10)");

    CLI::App* cls = app.add_subcommand("classify-bn", "quadratic-form classification of BN complements");
    cls->fallthrough();
    cls->add_option("--genus", genus, "curve genus")->required();

    CLI::App* bnp = app.add_subcommand("bnp", "extremal line bundle enumeration by factorization");
    bnp->fallthrough();
    bnp->add_option("--genus", genus, "curve genus")->required();

    CLI::App* lat = app.add_subcommand("lattice", "emit a family lattice in the JSON file format");
    lat->fallthrough();
    lattice_fam.attach(lat);

    CLI::App* ver = app.add_subcommand("verify-all", "run the full regression suite");
    ver->fallthrough();
    ver->add_option("--filter", filter, "run only items whose id or description matches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        command_result r;
        if (inv->parsed())
            r = run_invariants(inv_fam);
        else if (check->parsed())
            r = run_check(check_predicate, check_fam, check_class);
        else if (iso->parsed())
            r = run_isometry(iso_left, iso_right, iso_bound);
        else if (cls->parsed())
            r = run_classify_bn(genus);
        else if (bnp->parsed())
            r = run_bnp(genus);
        else if (lat->parsed())
            r = run_lattice(lattice_fam);
        else if (ver->parsed())
            r = run_verify_all(filter);
        emit(r);
        return static_cast<int>(r.st);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
