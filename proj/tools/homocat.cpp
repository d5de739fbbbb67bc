// Command-line surface for the homocat library.  Every subcommand prints a
// single self-describing report: {"query", "result", "provenance"} as JSON
// (default) or a flat key/value TSV.  Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <homocat/cellres.hpp>
#include <homocat/excseq.hpp>
#include <homocat/ktheory.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace homocat;
using json = nlohmann::ordered_json;

namespace {

// ----------------------------------------------------------------- parsing

Rat parse_rat(const std::string& tok) {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(tok));
    return Rat(std::stoll(tok.substr(0, slash)),
               std::stoll(tok.substr(slash + 1)));
}

Weight parse_weight(const std::string& s) {
    Weight out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

GLWeight parse_glweight(const std::string& s) {
    GLWeight out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::vector<GLWeight> parse_labels(const std::string& s) {
    std::vector<GLWeight> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(parse_glweight(tok));
    return out;
}

Geometry parse_geometry(const std::string& name, int k, int n) {
    if (name == "grass-a") return {Geometry::Kind::GrassA, k, n};
    if (name == "igrass-c") return {Geometry::Kind::IGrassC, k, n};
    throw CLI::ValidationError("--geometry must be grass-a or igrass-c");
}

Family parse_family(const std::string& f) {
    if (f == "A") return Family::A;
    if (f == "B") return Family::B;
    if (f == "C") return Family::C;
    if (f == "D") return Family::D;
    throw CLI::ValidationError("--family must be one of A, B, C, D");
}

// -------------------------------------------------------------- serializing

std::string weight_str(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += to_string(w[i]);
    }
    return s;
}

std::string glweight_str(const GLWeight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

json ext_table_json(const ExtTable& t) {
    json groups = json::object();
    for (const auto& [deg, entries] : t.groups) {
        json lst = json::array();
        for (const auto& [w, mult] : entries)
            lst.push_back({{"weight", weight_str(w)}, {"mult", mult}});
        groups[std::to_string(deg)] = lst;
    }
    json totals = json::object();
    for (const auto& [deg, dim] : t.total_dim)
        totals[std::to_string(deg)] = dim.str();
    return {{"groups", groups}, {"total_dim", totals}};
}

json coh_json(const CohomologyResult& r) {
    if (r.zero) return {{"zero", true}};
    return {{"zero", false},
            {"degree", r.degree},
            {"highest_weight", weight_str(r.highest_weight)},
            {"dim", r.dim.str()}};
}

json gram_json(const GramMatrix& g) {
    json rows = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(r);
    }
    return rows;
}

json classes_json(const std::vector<KClass>& cs) {
    json out = json::array();
    for (const auto& c : cs) {
        json r = json::array();
        for (const auto& v : c) r.push_back(v.str());
        out.push_back(r);
    }
    return out;
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.push_back({prefix, j.is_string() ? j.get<std::string>()
                                             : j.dump()});
    }
}

int emit(const json& query, const json& result, const std::string& rule,
         const std::string& format, int exit_code = 0) {
    const json report = {
        {"query", query},
        {"result", result},
        {"provenance", {{"paper_ref", rule}}},
    };
    if (format == "tsv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(report, "", rows);
        for (const auto& [k, v] : rows) std::cout << k << "\t" << v << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homocat: cohomology of homogeneous bundles, exceptional "
                 "collections, and cellular resolutions"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    // shared option storage
    std::string geometry = "grass-a", a_str, b_str, labels_str, mode_str =
        "very-strong-poset", family_str = "A", lambda_str, gamma_str,
        what_str, word_str, side_str = "right", gx_str, gy_str;
    int k = 0, n = 0, rank = 0, cell_n = 1, bd = 0, be = 0, bk = 0, bt = -1;
    bool relative_flag = false;
    std::vector<int> parabolic;

    auto* bott = app.add_subcommand("bott", "Single-bundle cohomology");
    bott->add_flag("--relative-flag", relative_flag,
                   "Direct images along a full-flag fiber");
    bott->add_option("--geometry", geometry);
    bott->add_option("--k", k);
    bott->add_option("--n", n);
    bott->add_option("--lambda", lambda_str, "Weight, rationals allowed");
    bott->add_option("--gamma", gamma_str, "Integer bundle label");

    auto* lr = app.add_subcommand("lr", "Tensor-product decomposition");
    lr->add_option("--k", k)->required();
    lr->add_option("--a", a_str)->required();
    lr->add_option("--b", b_str)->required();

    auto* ext = app.add_subcommand("ext", "Graded extension table");
    ext->add_option("--geometry", geometry)->required();
    ext->add_option("--k", k)->required();
    ext->add_option("--n", n)->required();
    ext->add_option("--a", a_str)->required();
    ext->add_option("--b", b_str)->required();

    auto* enumerate = app.add_subcommand("enumerate", "Candidate enumeration");
    enumerate->add_option("--what", what_str)
        ->required()
        ->check(CLI::IsMember({"thm333", "sharp", "hearts"}));
    enumerate->add_option("--k", k);
    enumerate->add_option("--n", n);

    auto* verify = app.add_subcommand("verify", "Check an ordered collection");
    verify->add_option("--geometry", geometry)->required();
    verify->add_option("--k", k)->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--labels", labels_str, "Semicolon-separated labels")
        ->required();
    verify->add_option("--mode", mode_str)
        ->check(CLI::IsMember({"sequence", "poset", "very-strong-poset"}));

    auto* gram = app.add_subcommand("gram", "Euler-form Gram matrix");
    gram->add_option("--geometry", geometry)->required();
    gram->add_option("--k", k)->required();
    gram->add_option("--n", n)->required();
    gram->add_option("--labels", labels_str)->required();

    auto* mut = app.add_subcommand("mutate", "Apply a mutation word");
    mut->add_option("--geometry", geometry)->required();
    mut->add_option("--k", k)->required();
    mut->add_option("--n", n)->required();
    mut->add_option("--labels", labels_str)->required();
    mut->add_option("--word", word_str,
                    "Comma-separated moves, e.g. L0,R1,L0")
        ->required();

    auto* dual = app.add_subcommand("dual", "Iterated-mutation dual sequence");
    dual->add_option("--geometry", geometry)->required();
    dual->add_option("--k", k)->required();
    dual->add_option("--n", n)->required();
    dual->add_option("--labels", labels_str)->required();
    dual->add_option("--side", side_str)
        ->check(CLI::IsMember({"left", "right"}));

    auto* kron = app.add_subcommand("kron", "Kronecker product of Gram "
                                            "matrices (rows ';', entries ',')");
    kron->add_option("--gx", gx_str)->required();
    kron->add_option("--gy", gy_str)->required();

    auto* scount = app.add_subcommand("schubert-count",
                                      "Number of Schubert cells of G/P");
    scount->add_option("--family", family_str)->required();
    scount->add_option("--rank", rank)->required();
    scount->add_option("--parabolic", parabolic,
                       "1-based omitted simple roots")
        ->required();

    auto* bruhat = app.add_subcommand(
        "bruhat", "Componentwise order on Grassmannian index tuples");
    bruhat->add_option("--k", k)->required();
    bruhat->add_option("--n", n)->required();
    bruhat->add_option("--a", a_str)->required();
    bruhat->add_option("--b", b_str)->required();

    auto* cell = app.add_subcommand("cell", "Square-free cell complexes");
    cell->add_option("--what", what_str)
        ->required()
        ->check(CLI::IsMember({"build", "audit", "resolve"}));
    cell->add_option("--n", cell_n)->required();

    auto* beil = app.add_subcommand("beilinson",
                                    "Degenerate-diagonal pushforward data");
    beil->add_option("--what", what_str)
        ->required()
        ->check(CLI::IsMember({"object", "morphism"}));
    beil->add_option("--n", n)->required();
    beil->add_option("--d", bd);
    beil->add_option("--e", be);
    beil->add_option("--k", bk);
    beil->add_option("--t", bt, "Also report the Hilbert function at t");

    // let --format appear after the subcommand as well
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (bott->parsed()) {
            if (relative_flag) {
                const auto lam = parse_weight(lambda_str);
                const auto r = relative_bott_flag(
                    k ? k : static_cast<int>(lam.size()), lam);
                json res;
                if (r.zero) {
                    res = {{"zero", true}};
                } else {
                    res = {{"zero", false},
                           {"degree", r.degree},
                           {"label", glweight_str(r.label)},
                           {"dual_label", glweight_str(dualize(r.label))},
                           {"l_twist", r.l_twist}};
                }
                return emit({{"subcommand", "bott"},
                             {"relative_flag", true},
                             {"k", k},
                             {"lambda", lambda_str}},
                            res, "dotted-Weyl-action direct image", format);
            }
            const auto geom = parse_geometry(geometry, k, n);
            const auto w = parse_glweight(
                gamma_str.empty() ? lambda_str : gamma_str);
            const auto r = geom.kind == Geometry::Kind::GrassA
                               ? coh_grass_A(k, n, w)
                               : coh_igrass_C(k, n, w);
            return emit({{"subcommand", "bott"},
                         {"geometry", geometry},
                         {"k", k},
                         {"n", n},
                         {"weight", glweight_str(w)}},
                        coh_json(r), "dominance-reduction cohomology", format);
        }

        if (lr->parsed()) {
            const auto dec =
                lr_decompose(parse_glweight(a_str), parse_glweight(b_str), k);
            json res = json::object();
            for (const auto& [nu, mult] : dec) res[glweight_str(nu)] = mult;
            return emit({{"subcommand", "lr"},
                         {"k", k},
                         {"a", a_str},
                         {"b", b_str}},
                        res, "littlewood-richardson expansion", format);
        }

        if (ext->parsed()) {
            const auto t = ext_table(parse_geometry(geometry, k, n),
                                     parse_glweight(a_str),
                                     parse_glweight(b_str));
            return emit({{"subcommand", "ext"},
                         {"geometry", geometry},
                         {"k", k},
                         {"n", n},
                         {"a", a_str},
                         {"b", b_str}},
                        ext_table_json(t),
                        "tensor decomposition + dominance reduction", format);
        }

        if (enumerate->parsed()) {
            json res = json::array();
            if (what_str == "thm333") {
                for (const auto& l : enumerate_thm333(k, n))
                    res.push_back(label_to_string(l));
            } else if (what_str == "sharp") {
                for (const auto& w : enumerate_sharp(k, n))
                    res.push_back(weight_str(w));
            } else {
                for (const auto& w : enumerate_hearts_b3())
                    res.push_back(weight_str(w));
            }
            return emit({{"subcommand", "enumerate"},
                         {"what", what_str},
                         {"k", k},
                         {"n", n}},
                        {{"count", res.size()}, {"items", res}},
                        "candidate-set enumeration", format);
        }

        if (verify->parsed()) {
            const VerifyMode mode =
                mode_str == "sequence"
                    ? VerifyMode::Sequence
                    : (mode_str == "poset" ? VerifyMode::Poset
                                           : VerifyMode::VeryStrongPoset);
            const auto rep = verify_collection(parse_geometry(geometry, k, n),
                                               parse_labels(labels_str), mode);
            json offenders = json::array();
            for (const auto& o : rep.offenders)
                offenders.push_back({{"i", o.i},
                                     {"j", o.j},
                                     {"degree", o.degree},
                                     {"dim", o.dim.str()}});
            const bool ok = rep.passes(mode);
            return emit(
                {{"subcommand", "verify"},
                 {"geometry", geometry},
                 {"k", k},
                 {"n", n},
                 {"labels", labels_str},
                 {"mode", mode_str}},
                {{"passes", ok},
                 {"is_exceptional_each", rep.is_exceptional_each},
                 {"is_exceptional_sequence", rep.is_exceptional_sequence},
                 {"is_strong", rep.is_strong},
                 {"admissible_poset_ok", rep.admissible_poset_ok},
                 {"labels_count", rep.labels_count},
                 {"schubert_cells", rep.schubert_cells},
                 {"completeness_necessary_ok", rep.completeness_necessary_ok},
                 {"offenders", offenders}},
                "pairwise extension-vanishing verification", format,
                ok ? 0 : 1);
        }

        if (gram->parsed()) {
            const auto g = gram_from_collection(parse_geometry(geometry, k, n),
                                                parse_labels(labels_str));
            return emit({{"subcommand", "gram"},
                         {"geometry", geometry},
                         {"k", k},
                         {"n", n},
                         {"labels", labels_str}},
                        {{"gram", gram_json(g)},
                         {"det", det_unimodular_check(g).str()}},
                        "euler-form gram matrix", format);
        }

        if (mut->parsed()) {
            const auto g = gram_from_collection(parse_geometry(geometry, k, n),
                                                parse_labels(labels_str));
            MutationState s = initial_state(g);
            std::stringstream ss(word_str);
            std::string move;
            while (std::getline(ss, move, ',')) {
                if (move.size() < 2 || (move[0] != 'L' && move[0] != 'R'))
                    throw CLI::ValidationError(
                        "--word moves must look like L0 or R2");
                s = mutate(s, std::stoi(move.substr(1)),
                           move[0] == 'L' ? Side::Left : Side::Right);
            }
            return emit({{"subcommand", "mutate"},
                         {"geometry", geometry},
                         {"k", k},
                         {"n", n},
                         {"labels", labels_str},
                         {"word", word_str}},
                        {{"classes", classes_json(s.classes)},
                         {"semi_orthonormal", semi_orthonormal(s)}},
                        "k-level mutation", format);
        }

        if (dual->parsed()) {
            const auto g = gram_from_collection(parse_geometry(geometry, k, n),
                                                parse_labels(labels_str));
            const auto d = dual_sequence(initial_state(g),
                                         side_str == "left" ? Side::Left
                                                            : Side::Right);
            return emit({{"subcommand", "dual"},
                         {"geometry", geometry},
                         {"k", k},
                         {"n", n},
                         {"labels", labels_str},
                         {"side", side_str}},
                        {{"classes", classes_json(d)}},
                        "iterated-mutation dual sequence", format);
        }

        if (kron->parsed()) {
            auto parse_gram = [](const std::string& s) {
                GramMatrix g;
                for (const auto& row : parse_labels(s)) {
                    g.emplace_back(row.begin(), row.end());
                }
                return g;
            };
            const auto g = kron_gram(parse_gram(gx_str), parse_gram(gy_str));
            return emit({{"subcommand", "kron"}, {"gx", gx_str}, {"gy", gy_str}},
                        {{"gram", gram_json(g)},
                         {"det", det_unimodular_check(g).str()}},
                        "kronecker gram matrix", format);
        }

        if (scount->parsed()) {
            const ParabolicSpec p{{parse_family(family_str), rank},
                                  {parabolic.begin(), parabolic.end()}};
            return emit({{"subcommand", "schubert-count"},
                         {"family", family_str},
                         {"rank", rank},
                         {"parabolic", parabolic}},
                        {{"count", schubert_count(p)}},
                        "minimal coset representative count", format);
        }

        if (bruhat->parsed()) {
            GrassIndex ga, gb;
            for (long long v : parse_glweight(a_str))
                ga.idx.push_back(static_cast<int>(v));
            for (long long v : parse_glweight(b_str))
                gb.idx.push_back(static_cast<int>(v));
            if (!valid_grass_index(ga, n) || !valid_grass_index(gb, n))
                throw CLI::ValidationError("index tuples must be strictly "
                                           "increasing inside [1, n]");
            return emit({{"subcommand", "bruhat"},
                         {"k", k},
                         {"n", n},
                         {"a", a_str},
                         {"b", b_str}},
                        {{"leq", bruhat_leq(ga, gb)},
                         {"a_diagram", glweight_str(grass_young_bijection(
                                           k, n, ga))},
                         {"b_diagram", glweight_str(grass_young_bijection(
                                           k, n, gb))}},
                        "componentwise index-tuple order", format);
        }

        if (cell->parsed()) {
            const auto X = yn_build(cell_n);
            const auto names = xy_names(cell_n);
            if (what_str == "build") {
                json faces = json::array();
                for (const auto& f : X.faces)
                    faces.push_back({{"dim", f.dim},
                                     {"label", mono_to_string(f.label, names)},
                                     {"mu1", f.mu1}});
                json fvec = json::array();
                for (const auto& level : X.by_dim) fvec.push_back(level.size());
                return emit({{"subcommand", "cell"},
                             {"what", "build"},
                             {"n", cell_n}},
                            {{"f_vector", fvec}, {"faces", faces}},
                            "square-free complex construction", format);
            }
            if (what_str == "audit") {
                const auto audit = incidence_audit(X);
                return emit({{"subcommand", "cell"},
                             {"what", "audit"},
                             {"n", cell_n}},
                            {{"ok", audit.ok}, {"detail", audit.detail}},
                            "incidence-function audit", format,
                            audit.ok ? 0 : 1);
            }
            const bool ok = is_resolution(X, xy_ideal(cell_n));
            const auto C = cellular_complex(X, xy_ideal(cell_n));
            json ranks = json::array();
            for (long long r : C.ranks) ranks.push_back(r);
            return emit({{"subcommand", "cell"},
                         {"what", "resolve"},
                         {"n", cell_n}},
                        {{"is_resolution", ok}, {"ranks", ranks}},
                        "lcm-lattice acyclicity check", format, ok ? 0 : 1);
        }

        if (beil->parsed()) {
            if (what_str == "object") {
                const auto obj = beilinson_degenerate_object(n, bd);
                json summands = json::array();
                for (const auto& [i, mult] : obj.summands)
                    summands.push_back(
                        {{"plane_dim", n - i - 1}, {"mult", mult.str()}});
                json res = {{"summands", summands},
                            {"hilbert_ok", obj.hilbert_ok}};
                if (bt >= 0)
                    res["hilbert_function_at_t"] =
                        beilinson_hf_closed(n, bd, bt).str();
                return emit({{"subcommand", "beilinson"},
                             {"what", "object"},
                             {"n", n},
                             {"d", bd},
                             {"t", bt}},
                            res, "pushforward block decomposition", format,
                            obj.hilbert_ok ? 0 : 1);
            }
            json maps = json::array();
            const auto all_names = xy_names(n);
            const std::vector<std::string> xn(all_names.begin(),
                                              all_names.begin() + n + 1);
            for (const auto& bm : beilinson_degenerate_morphism(n, be, bk))
                maps.push_back({{"source", mono_to_string(bm.source, xn)},
                                {"target", mono_to_string(bm.target, xn)},
                                {"identity", bm.identity}});
            return emit({{"subcommand", "beilinson"},
                         {"what", "morphism"},
                         {"n", n},
                         {"e", be},
                         {"k", bk}},
                        {{"block_maps", maps}},
                        "multiplication block maps", format);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
