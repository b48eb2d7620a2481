// Command-line front end: validation, invariant reports, equivalence
// decisions, enumeration of characteristic matrices, and the bundled case
// studies.  Exit codes: 0 success / positive answer, 1 negative answer or
// failed reproduction, 2 usage error, 3 invalid or unreadable input.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtoric/cohomology.hpp"
#include "qtoric/equivalence.hpp"
#include "qtoric/pair_io.hpp"

using nlohmann::json;
using namespace qtoric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct Options {
    bool json_output = false;
    unsigned seed = 20260314; // reserved for reproducibility of randomized reports
};

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

void emit(const Options& opts, const json& doc, const std::string& text) {
    if (opts.json_output)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

json issues_json(const Validation& report) {
    json arr = json::array();
    for (const auto& issue : report.issues) arr.push_back({{"code", issue.code}, {"message", issue.message}});
    return arr;
}

// nullopt on failure after printing diagnostics
std::optional<RealizedDocument> load_document(const Options& opts, const std::string& path) {
    std::string text;
    if (!read_input(path, text)) {
        emit(opts, json{{"error", "cannot read " + path}}, "error: cannot read " + path + "\n");
        return std::nullopt;
    }
    ParsedDocument parsed = parse_pair_document(text);
    if (!parsed.doc) {
        emit(opts, json{{"error", "schema"}, {"issues", issues_json(parsed.report)}},
             parsed.report.summary());
        return std::nullopt;
    }
    RealizedDocument realized = realize_document(*parsed.doc);
    return realized;
}

template <typename T>
json vec_json(const std::vector<T>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(e);
    return arr;
}

std::string join(const std::vector<Int>& v, const char* sep = ", ") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

json lambda_json(const IntMatrix& lambda) {
    json rows = json::array();
    for (int i = 0; i < lambda.rows(); ++i) rows.push_back(lambda.row(i));
    return rows;
}

int run_validate(const Options& opts, const std::string& path) {
    std::string text;
    if (!read_input(path, text)) {
        emit(opts, json{{"error", "cannot read " + path}}, "error: cannot read " + path + "\n");
        return kExitInvalid;
    }
    ParsedDocument parsed = parse_pair_document(text);
    if (!parsed.doc) {
        emit(opts, json{{"valid", false}, {"issues", issues_json(parsed.report)}}, parsed.report.summary());
        return kExitInvalid;
    }
    RealizedDocument realized = realize_document(*parsed.doc);
    if (!realized.report.ok()) {
        emit(opts, json{{"valid", false}, {"issues", issues_json(realized.report)}},
             realized.report.summary());
        return kExitNegative;
    }
    std::string what = realized.pair ? "pair" : "complex";
    std::ostringstream os;
    os << "valid " << what << ": rank " << realized.complex->rank() << ", " << realized.complex->facet_count()
       << " facets, " << realized.complex->vertex_count() << " vertices\n";
    emit(opts,
         json{{"valid", true},
              {"kind", what},
              {"rank", realized.complex->rank()},
              {"facet_count", realized.complex->facet_count()},
              {"vertex_count", realized.complex->vertex_count()}},
         os.str());
    return kExitOk;
}

int run_invariants(const Options& opts, const std::string& path) {
    auto loaded = load_document(opts, path);
    if (!loaded) return kExitInvalid;
    if (!loaded->report.ok() || !loaded->pair) {
        Validation report = loaded->report;
        if (report.ok()) report.add("BadInput", "invariants need a document with a lambda matrix");
        emit(opts, json{{"error", "invalid input"}, {"issues", issues_json(report)}}, report.summary());
        return kExitInvalid;
    }
    const CharacteristicPair& p = *loaded->pair;
    json out;
    std::ostringstream os;
    std::vector<Int> f = f_vector(p.complex);
    out["f_vector"] = vec_json(f);
    os << "f-vector: (" << join(f) << ")\n";

    std::vector<Int> counts;
    for (int i = 0; i < p.facet_count(); ++i)
        counts.push_back(static_cast<Int>(p.complex.facet_vertex_ids(i).size()));
    out["facet_vertex_counts"] = vec_json(counts);
    os << "facet vertex counts: (" << join(counts) << ")\n";

    bool polytopal = p.complex.is_polytopal();
    out["polytopal"] = polytopal;
    if (polytopal) {
        std::vector<Int> h = h_vector(p.complex);
        out["h_vector"] = vec_json(h);
        os << "h-vector: (" << join(h) << ")\n";
        FaceRing ring(p);
        std::vector<Int> b = ring.betti();
        out["betti"] = vec_json(b);
        out["euler_characteristic"] = ring.euler_characteristic();
        out["generated_in_degree_two"] = ring.generated_in_degree_two();
        os << "betti numbers: (" << join(b) << ")\n";
        os << "euler characteristic: " << ring.euler_characteristic() << "\n";
        os << "generated in degree two: " << (ring.generated_in_degree_two() ? "yes" : "no") << "\n";
    } else {
        os << "pair is not polytopal; h-vector and cohomology are undefined\n";
    }
    emit(opts, out, os.str());
    return kExitOk;
}

int run_equiv(const Options& opts, const std::string& path1, const std::string& path2, bool strict) {
    auto a = load_document(opts, path1);
    if (!a) return kExitInvalid;
    auto b = load_document(opts, path2);
    if (!b) return kExitInvalid;
    for (const auto* loaded : {&*a, &*b}) {
        if (!loaded->report.ok() || !loaded->pair) {
            Validation report = loaded->report;
            if (report.ok()) report.add("BadInput", "equivalence needs documents with lambda matrices");
            emit(opts, json{{"error", "invalid input"}, {"issues", issues_json(report)}}, report.summary());
            return kExitInvalid;
        }
    }
    std::optional<EquivalenceWitness> w;
    try {
        w = are_equivalent(*a->pair, *b->pair, EquivOptions{strict});
    } catch (const Error& e) {
        emit(opts, json{{"error", e.code()}, {"message", e.what()}}, std::string(e.what()) + "\n");
        return kExitInvalid;
    }
    if (!w) {
        emit(opts, json{{"equivalent", false}}, "inequivalent\n");
        return kExitNegative;
    }
    json out{{"equivalent", true},
             {"witness",
              {{"facet_bijection", vec_json(w->facet_bijection)},
               {"unimodular", lambda_json(w->unimodular)},
               {"signs", vec_json(w->signs)}}}};
    std::ostringstream os;
    os << "equivalent\nfacet bijection:";
    for (int img : w->facet_bijection) os << " " << img;
    os << "\nunimodular matrix:\n" << w->unimodular.to_string() << "\nsigns:";
    for (int s : w->signs) os << " " << (s > 0 ? "+1" : "-1");
    os << "\n";
    emit(opts, out, os.str());
    return kExitOk;
}

int run_enumerate(const Options& opts, const std::string& path, Int bound) {
    auto loaded = load_document(opts, path);
    if (!loaded) return kExitInvalid;
    if (!loaded->complex || !loaded->report.ok()) {
        emit(opts, json{{"error", "invalid input"}, {"issues", issues_json(loaded->report)}},
             loaded->report.summary());
        return kExitInvalid;
    }
    std::vector<CharacteristicPair> reps;
    try {
        reps = enumerate_pairs(*loaded->complex, bound);
    } catch (const Error& e) {
        emit(opts, json{{"error", e.code()}, {"message", e.what()}}, std::string(e.what()) + "\n");
        return kExitInvalid;
    }
    json pairs = json::array();
    std::ostringstream os;
    os << reps.size() << " equivalence class" << (reps.size() == 1 ? "" : "es") << " (bound " << bound
       << ")\n";
    for (size_t i = 0; i < reps.size(); ++i) {
        pairs.push_back(json::parse(serialize_document(document_from_pair(reps[i]))));
        os << "class " << i << " lambda:\n" << reps[i].lambda.to_string() << "\n";
    }
    emit(opts, json{{"bound", bound}, {"count", reps.size()}, {"pairs", pairs}}, os.str());
    return kExitOk;
}

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

int finish_casestudy(const Options& opts, const std::string& name, const std::vector<Check>& checks) {
    bool all = true;
    json arr = json::array();
    std::ostringstream os;
    for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": expected " << c.expected << ", got "
           << c.actual << "\n";
    }
    os << (all ? "all checks passed\n" : "some checks FAILED\n");
    emit(opts, json{{"case", name}, {"pass", all}, {"checks", arr}}, os.str());
    return all ? kExitOk : kExitNegative;
}

int casestudy_cp3(const Options& opts) {
    std::vector<Check> checks;
    auto reps = enumerate_pairs(simplex_boundary_complex(3), 2);
    checks.push_back({"equivalence classes over the tetrahedron (bound 2)", "1",
                      std::to_string(reps.size()), reps.size() == 1});
    bool standard = reps.size() == 1 && are_equivalent(reps[0], simplex_pair(3)).has_value();
    checks.push_back({"class is the standard projective-space action", "true",
                      standard ? "true" : "false", standard});
    return finish_casestudy(opts, "cp3", checks);
}

int casestudy_figure1(const Options& opts) {
    std::vector<Check> checks;
    const Int range = 5;
    for (const char* family : {"sphere-bundle", "projective-bundle"}) {
        bool sphere = std::string(family) == "sphere-bundle";
        int classes = 0;
        bool diagonal = true;
        std::vector<CharacteristicPair> members;
        for (Int a = 0; a <= range; ++a)
            members.push_back(sphere ? lens_family_pair(a) : prism_family_pair(a));
        for (size_t a = 0; a < members.size(); ++a) {
            bool fresh = true;
            for (size_t b = 0; b < a; ++b) {
                bool eq = are_equivalent(members[a], members[b]).has_value();
                if (eq) fresh = false;
                if (eq != false) diagonal = false;
            }
            if (!are_equivalent(members[a], members[a]).has_value()) diagonal = false;
            if (fresh) ++classes;
        }
        checks.push_back({std::string(family) + " classes for parameters 0..5", "6",
                          std::to_string(classes), classes == 6});
        checks.push_back({std::string(family) + " members equivalent only to themselves", "true",
                          diagonal ? "true" : "false", diagonal});
    }
    return finish_casestudy(opts, "figure1", checks);
}

int casestudy_figure2(const Options& opts) {
    std::vector<Check> checks;
    std::vector<std::pair<std::string, CharacteristicPair>> reps;
    for (Int p = -3; p <= 3; ++p) reps.emplace_back("a(" + std::to_string(p) + ")", square_pair_a(p));
    reps.emplace_back("b", square_pair_b());

    // base classes: a(p) ~ a(-p), b separate
    int classes = 0;
    for (size_t i = 0; i < reps.size(); ++i) {
        bool fresh = true;
        for (size_t j = 0; j < i; ++j)
            if (are_equivalent(reps[i].second, reps[j].second).has_value()) fresh = false;
        if (fresh) ++classes;
    }
    checks.push_back({"square classes among a(-3..3) and b", "5", std::to_string(classes), classes == 5});

    // pairs of opposite cube facets with equal rows up to sign
    auto opposite_equal = [](const CharacteristicPair& cube) {
        int count = 0;
        for (auto [x, y] : {std::pair{0, 2}, std::pair{1, 3}, std::pair{4, 5}}) {
            auto a = cube.row(x);
            auto b = cube.row(y);
            if (a == b || a == negated(b)) ++count;
        }
        return count;
    };
    bool counts_ok = true;
    for (const auto& [name, rep] : reps) {
        int expected = name == "b" ? 1 : (name == "a(0)" ? 3 : 2);
        if (opposite_equal(product_with_s2(rep)) != expected) counts_ok = false;
    }
    checks.push_back({"opposite facet pairs with equal values after taking the product",
                      "3 for a(0), 2 for a(p!=0), 1 for b", counts_ok ? "as expected" : "mismatch",
                      counts_ok});

    bool shadow = true;
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) {
            bool base = are_equivalent(reps[i].second, reps[j].second).has_value();
            bool prod = are_equivalent(product_with_s2(reps[i].second), product_with_s2(reps[j].second))
                            .has_value();
            if (base != prod) shadow = false;
        }
    checks.push_back({"product preserves and reflects equivalence", "true", shadow ? "true" : "false",
                      shadow});
    return finish_casestudy(opts, "figure2", checks);
}

int casestudy_s2xkcp2(const Options& opts, int k) {
    std::vector<Check> checks;
    auto sols = facet_count_solutions(k);
    auto fmt = [](const FacetTypeCount& c) {
        return "(" + std::to_string(c.d4) + "," + std::to_string(c.dk2) + "," + std::to_string(c.dk3) + ")";
    };
    std::string actual;
    for (const auto& s : sols) actual += fmt(s);
    if (k == 2) {
        bool ok = sols.size() == 7;
        for (const auto& s : sols) ok = ok && s.dk3 == 0 && s.d4 + s.dk2 == 6;
        checks.push_back({"facet-count solutions", "7 solutions, all with dk3 = 0", actual, ok});
    } else if (k == 3) {
        bool ok = sols == std::vector<FacetTypeCount>{{5, 2, 0}, {6, 0, 1}};
        checks.push_back({"facet-count solutions", "(5,2,0)(6,0,1)", actual, ok});
    } else {
        bool ok = sols.size() == 1 && sols[0] == FacetTypeCount{k + 2, 2, 0};
        checks.push_back({"facet-count solutions", fmt(FacetTypeCount{k + 2, 2, 0}), actual, ok});
    }

    CharacteristicPair prod = product_with_s2(polygon_sum_pair(k));
    FacetCensus census = facet_type_census(prod, k);
    checks.push_back({"facet census of the product action", fmt(FacetTypeCount{k + 2, 2, 0}),
                      fmt(census.counts), census.counts == FacetTypeCount{k + 2, 2, 0}});

    int bottom = prod.facet_count() - 2;
    int top = prod.facet_count() - 1;
    FaceRing ring(prod);
    bool caps_ok = true;
    for (int cap : {bottom, top}) {
        RestrictionDeg2 r = restriction_deg2(prod, cap);
        caps_ok = caps_ok && r.kernel_rank == 1 && r.kernel_contains(ring.generator_coeffs(top));
    }
    checks.push_back({"cap restriction kernels", "rank 1 containing the sphere class",
                      caps_ok ? "as expected" : "mismatch", caps_ok});
    bool sides_ok = true;
    for (int side = 0; side < prod.facet_count() - 2; ++side) {
        RestrictionDeg2 r = restriction_deg2(prod, side);
        sides_ok = sides_ok && r.kernel_rank == k - 1;
    }
    checks.push_back({"side restriction kernels", "rank " + std::to_string(k - 1),
                      sides_ok ? "as expected" : "mismatch", sides_ok});
    return finish_casestudy(opts, "s2xkcp2", checks);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial models of torus-manifold actions: validation, invariants, "
                 "equivalence and enumeration"};
    app.require_subcommand(1);
    Options opts;
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "seed for randomized reports (current commands are deterministic)");

    std::string file1, file2, case_name;
    Int bound = 1;
    int k = 2;
    bool strict = false;

    auto* validate = app.add_subcommand("validate", "validate a pair or complex document");
    validate->add_option("file", file1, "input file or - for stdin")->required();

    auto* invariants = app.add_subcommand("invariants", "report invariants of a pair document");
    invariants->add_option("file", file1, "input file or - for stdin")->required();

    auto* equiv = app.add_subcommand("equiv", "decide weak equivariant equivalence of two pairs");
    equiv->add_option("file1", file1, "first pair document")->required();
    equiv->add_option("file2", file2, "second pair document")->required();
    equiv->add_flag("--strict", strict, "require the identity torus automorphism");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate characteristic matrices over a complex");
    enumerate->add_option("file", file1, "complex document")->required();
    enumerate->add_option("--bound", bound, "entry bound after normalization")->default_val(1);

    auto* casestudy = app.add_subcommand("casestudy", "reproduce a bundled classification");
    casestudy->add_option("name", case_name, "one of cp3, figure1, figure2, s2xkcp2")->required();
    casestudy->add_option("--k", k, "number of projective-plane summands (s2xkcp2)")->default_val(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }
    opts.json_output = format == "json";

    try {
        if (*validate) return run_validate(opts, file1);
        if (*invariants) return run_invariants(opts, file1);
        if (*equiv) return run_equiv(opts, file1, file2, strict);
        if (*enumerate) return run_enumerate(opts, file1, bound);
        if (*casestudy) {
            if (case_name == "cp3") return casestudy_cp3(opts);
            if (case_name == "figure1") return casestudy_figure1(opts);
            if (case_name == "figure2") return casestudy_figure2(opts);
            if (case_name == "s2xkcp2") {
                if (k < 2) {
                    std::cerr << "error: --k must be at least 2\n";
                    return kExitUsage;
                }
                return casestudy_s2xkcp2(opts, k);
            }
            std::cerr << "error: UnknownCaseStudy '" << case_name << "'\n";
            return kExitUsage;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
