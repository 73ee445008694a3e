// oscsym: command-line surface over the core library.  Every verb prints a
// deterministic RunReport (JSON object with sorted keys and fixed float
// formatting) so runs are byte-reproducible and scriptable; timing goes to
// stderr only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oscsym/algebra.hpp"
#include "oscsym/catalog.hpp"
#include "oscsym/errors.hpp"
#include "oscsym/exact.hpp"
#include "oscsym/jsonio.hpp"
#include "oscsym/oscillator.hpp"
#include "oscsym/phasespace.hpp"
#include "oscsym/realizations.hpp"

using nlohmann::json;
using namespace oscsym;

namespace {

int precision_from_env() {
    const char* p = std::getenv("OSCSYM_PRECISION");
    if (!p) return 15;
    int v = std::atoi(p);
    return (v >= 1 && v <= 17) ? v : 15;
}

// Deterministic uniforms: identical sequences for identical seeds on every
// platform (mt19937_64 output mapped to [0,1) by the top 53 bits).
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct Output {
    json report;         // {"verb","inputs","results","pass"}
    std::string csv;     // tabular rendering
    std::string pretty;  // human rendering
};

json float_vec(const Eigen::Vector4d& v) {
    return json::array({v(0), v(1), v(2), v(3)});
}

json float_mat(const Eigen::Matrix4d& m) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

json state_json(const GaussianState& s) {
    return {{"mean", float_vec(s.mean)},
            {"cov", float_mat(s.cov)},
            {"ordering", to_string(s.ordering)}};
}

std::string pretty_matrix(const ExactMatrix& m) {
    std::vector<size_t> w(static_cast<size_t>(m.n()), 0);
    for (int c = 0; c < m.n(); ++c)
        for (int r = 0; r < m.n(); ++r)
            w[static_cast<size_t>(c)] =
                std::max(w[static_cast<size_t>(c)], m.at(r, c).str().size());
    std::string out;
    for (int r = 0; r < m.n(); ++r) {
        out += "  [";
        for (int c = 0; c < m.n(); ++c) {
            std::string s = m.at(r, c).str();
            out += std::string(w[static_cast<size_t>(c)] - s.size() + 1, ' ') + s;
        }
        out += " ]\n";
    }
    return out;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open matrix file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Transform input: either the exact matrix schema (entries must be real)
// or a plain 4x4 float array-of-arrays.
Eigen::Matrix4d read_transform(const std::string& path) {
    const std::string text = read_all(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in matrix input: " + path);
    Eigen::Matrix4d m;
    if (j.is_object()) {
        ExactMatrix em = matrix_from_json(j);
        if (em.n() != 4) throw ParseError("transform must be 4x4, got n=" + std::to_string(em.n()));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                if (!em.at(r, c).im.is_zero())
                    throw ParseError("transform entry (" + std::to_string(r) + "," +
                                     std::to_string(c) + ") has an imaginary part");
                m(r, c) = em.at(r, c).re.to_double();
            }
        return m;
    }
    if (j.is_array() && j.size() == 4) {
        for (int r = 0; r < 4; ++r) {
            if (!j[r].is_array() || j[r].size() != 4)
                throw ParseError("row " + std::to_string(r) + " is not a 4-element array");
            for (int c = 0; c < 4; ++c) {
                if (!j[r][c].is_number())
                    throw ParseError("entry (" + std::to_string(r) + "," +
                                     std::to_string(c) + ") is not a number");
                m(r, c) = j[r][c].get<double>();
            }
        }
        return m;
    }
    throw ParseError("matrix input must be the exact schema object or a 4x4 array");
}

json notes_json() {
    json arr = json::array();
    for (const CatalogNote& n : catalog_notes()) arr.push_back({{"id", n.id}, {"text", n.text}});
    return arr;
}

// ---------------------------------------------------------------- verbs --

Output run_dump(const std::string& set, const std::string& name) {
    Output o;
    struct Row {
        std::string name;
        ExactMatrix mat;
        std::string op;    // diffop text, empty otherwise
        std::string note;  // diffop note, empty otherwise
    };
    std::vector<Row> rows;
    if (set == "secii") {
        for (SecIIName n : kAllSecII)
            rows.push_back({to_string(n), secii_generator(n), "", ""});
    } else if (set == "traditional") {
        for (GeneratorName g : kSp4Members)
            rows.push_back({to_string(g), sp4_generator(g, Ordering::Traditional), "", ""});
    } else if (set == "interleaved") {
        for (GeneratorName g : kAllGenerators)
            rows.push_back({to_string(g), sp4_generator(g, Ordering::Interleaved), "", ""});
    } else if (set == "o33") {
        for (GeneratorName g : kAllGenerators)
            rows.push_back({to_string(g), o33_generator(g), "", ""});
    } else {  // diffop
        for (GeneratorName g : kAllGenerators) {
            DiffOpCoeff d = diffop(g);
            rows.push_back({to_string(g), d.C, op_form(d), diffop_note(g)});
        }
    }
    if (!name.empty()) {
        std::vector<Row> keep;
        for (Row& r : rows)
            if (r.name == name) keep.push_back(std::move(r));
        if (keep.empty()) throw CatalogMissError("no generator named " + name + " in set " + set);
        rows = std::move(keep);
    }

    json gens = json::array();
    for (const Row& r : rows) {
        json g = {{"name", r.name}, {"matrix", matrix_to_json(r.mat)}};
        if (!r.op.empty()) g["op_form"] = r.op;
        if (!r.note.empty()) g["note"] = r.note;
        gens.push_back(g);
    }
    json results = {{"set", set}, {"generators", gens}};
    if (set == "interleaved" || set == "o33") results["notes"] = notes_json();

    o.report = {{"verb", "dump-generators"},
                {"inputs", {{"set", set}, {"name", name}}},
                {"results", results},
                {"pass", true}};

    std::string csv = "name,row,col,re,im\n";
    for (const Row& r : rows)
        for (int i = 0; i < r.mat.n(); ++i)
            for (int j2 = 0; j2 < r.mat.n(); ++j2) {
                const GaussRational& v = r.mat.at(i, j2);
                csv += r.name + "," + std::to_string(i) + "," + std::to_string(j2) + "," +
                       v.re.str() + "," + v.im.str() + "\n";
            }
    o.csv = csv;

    std::string pretty;
    for (const Row& r : rows) {
        pretty += r.name + ":\n" + pretty_matrix(r.mat);
        if (!r.op.empty()) pretty += "  " + r.op + "\n";
        if (!r.note.empty()) pretty += "  note: " + r.note + "\n";
        pretty += "\n";
    }
    o.pretty = pretty;
    return o;
}

Output run_verify_algebra(const std::string& set, const std::string& ordering_s) {
    Output o;
    const Ordering ordering = parse_ordering(ordering_s);
    json results;
    bool pass = true;
    std::string csv;
    std::string pretty;

    if (set == "mode1" || set == "mode2" || set == "coupling") {
        std::vector<IdentityCheck> checks =
            (set == "coupling") ? verify_coupling_identities()
                                : verify_mode_triple(set == "mode1" ? 1 : 2);
        json arr = json::array();
        int failures = 0;
        csv = "description,ok\n";
        for (const IdentityCheck& c : checks) {
            arr.push_back({{"description", c.description}, {"ok", c.ok}});
            if (!c.ok) ++failures;
            csv += c.description + "," + (c.ok ? "true" : "false") + "\n";
            pretty += std::string(c.ok ? "  ok   " : "  FAIL ") + c.description + "\n";
        }
        results = {{"set", set}, {"checks", arr}, {"failures", failures}};
        pass = failures == 0;
    } else {
        BasisSet basis;
        StructureTable expected(1);
        if (set == "sp4") {
            basis = sp4_basis(ordering);
            expected = expected_sp4_table();
        } else if (set == "sl4") {
            basis = full_basis_4x4(ordering);
            expected = expected_sl4_table();
        } else {  // o33
            basis = full_basis_6x6();
            expected = expected_sl4_table();
        }
        VerifyReport rep = verify_table(basis, expected);
        json mism = json::array();
        csv = "i,j,ok\n";
        for (const PairCheck& p : rep.pairs) {
            if (!p.ok)
                mism.push_back(json::array(
                    {basis.labels[static_cast<size_t>(p.i)], basis.labels[static_cast<size_t>(p.j)]}));
            csv += basis.labels[static_cast<size_t>(p.i)] + "," +
                   basis.labels[static_cast<size_t>(p.j)] + "," + (p.ok ? "true" : "false") + "\n";
        }
        results = {{"set", set},
                   {"ordering", to_string(ordering)},
                   {"pairs", static_cast<int>(rep.pairs.size())},
                   {"mismatches", rep.mismatches},
                   {"mismatched_pairs", mism}};
        if (set == "sl4" || set == "o33") results["notes"] = notes_json();
        pass = rep.pass;
        pretty = set + " (" + to_string(ordering) + "): " + std::to_string(rep.pairs.size()) +
                 " pairs, " + std::to_string(rep.mismatches) + " mismatches\n";
    }

    o.report = {{"verb", "verify-algebra"},
                {"inputs", {{"set", set}, {"ordering", ordering_s}}},
                {"results", results},
                {"pass", pass}};
    o.csv = csv;
    o.pretty = (pass ? "PASS\n" : "FAIL\n") + pretty;
    return o;
}

Output run_verify_isomorphism() {
    Output o;
    BasisSet b4 = full_basis_4x4(Ordering::Interleaved);
    BasisSet b6 = full_basis_6x6();
    IsoReport rep = check_isomorphism(b4, b6);
    json mism = json::array();
    std::string csv = "i,j\n";
    for (auto [i, j2] : rep.mismatched) {
        mism.push_back(json::array(
            {b4.labels[static_cast<size_t>(i)], b4.labels[static_cast<size_t>(j2)]}));
        csv += b4.labels[static_cast<size_t>(i)] + "," + b4.labels[static_cast<size_t>(j2)] + "\n";
    }
    const int pairs = static_cast<int>(b4.size() * (b4.size() - 1) / 2);
    o.report = {{"verb", "verify-isomorphism"},
                {"inputs", json::object()},
                {"results",
                 {{"pairs", pairs},
                  {"mismatches", static_cast<int>(rep.mismatched.size())},
                  {"mismatched_pairs", mism}}},
                {"pass", rep.ok}};
    o.csv = csv;
    o.pretty = std::string(rep.ok ? "PASS" : "FAIL") + ": " + std::to_string(pairs) +
               " structure-constant pairs compared, " +
               std::to_string(rep.mismatched.size()) + " mismatches\n";
    return o;
}

Output run_subgroups() {
    Output o;
    std::vector<Subgroup> subs = enumerate_sp4_subgroups();
    SymplecticForm J = j_matrix(Ordering::Interleaved);
    json arr = json::array();
    std::string csv = "pivot,members,canonical_count,all_canonical\n";
    std::string pretty;
    std::vector<std::string> all_canonical;
    for (const Subgroup& s : subs) {
        json members = json::array(), canon = json::array(), noncanon = json::array();
        std::string mlist;
        int ncanon = 0;
        for (GeneratorName g : s.members) {
            members.push_back(to_string(g));
            mlist += (mlist.empty() ? "" : " ") + to_string(g);
            if (generator_is_canonical(g, J)) {
                canon.push_back(to_string(g));
                ++ncanon;
            } else {
                noncanon.push_back(to_string(g));
            }
        }
        bool all = ncanon == 10;
        if (all) all_canonical.push_back(to_string(s.pivot));
        arr.push_back({{"pivot", to_string(s.pivot)},
                       {"members", members},
                       {"canonical", canon},
                       {"noncanonical", noncanon},
                       {"all_canonical", all}});
        csv += to_string(s.pivot) + "," + mlist + "," + std::to_string(ncanon) + "," +
               (all ? "true" : "false") + "\n";
        pretty += "pivot " + to_string(s.pivot) + ": {" + mlist + "} canonical " +
                  std::to_string(ncanon) + "/10" + (all ? "  <- canonical subgroup" : "") + "\n";
    }
    bool pass = subs.size() == 6 && all_canonical.size() == 1 && all_canonical[0] == "S3";
    json ac = json::array();
    for (const std::string& s : all_canonical) ac.push_back(s);
    o.report = {{"verb", "subgroups"},
                {"inputs", {{"form", "interleaved"}}},
                {"results",
                 {{"count", static_cast<int>(subs.size())},
                  {"subgroups", arr},
                  {"all_canonical_pivots", ac}}},
                {"pass", pass}};
    o.csv = csv;
    o.pretty = pretty;
    return o;
}

Output run_solve(double m1, double m2, double A, double B, double C, int nmax) {
    Output o;
    ReducedParams red = reduce({m1, m2, A, B, C});
    NormalForm nf = normal_form(red);
    json spect = json::array();
    std::string csv = "n1,n2,E\n";
    for (int n1 = 0; n1 <= nmax; ++n1)
        for (int n2 = 0; n2 <= nmax; ++n2) {
            double e = spectrum(nf, {n1, n2, SpectrumVariant::Coupled_H});
            spect.push_back({{"n1", n1}, {"n2", n2}, {"E", e}});
            char buf[64];
            std::snprintf(buf, sizeof buf, "%d,%d,%.15g\n", n1, n2, e);
            csv += buf;
        }
    json results = {{"m", red.m},   {"A", red.A},         {"B", red.B},
                    {"C", red.C},   {"K", nf.K},          {"eta", nf.eta},
                    {"alpha", nf.alpha}, {"omega", nf.omega}, {"spectrum", spect}};
    o.report = {{"verb", "solve"},
                {"inputs",
                 {{"m1", m1}, {"m2", m2}, {"A", A}, {"B", B}, {"C", C}, {"nmax", nmax}}},
                {"results", results},
                {"pass", true}};
    o.csv = csv;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "m=%.15g A=%.15g B=%.15g C=%.15g\nK=%.15g eta=%.15g alpha=%.15g omega=%.15g\n",
                  red.m, red.A, red.B, red.C, nf.K, nf.eta, nf.alpha, nf.omega);
    o.pretty = buf;
    return o;
}

Output run_check_transform(const std::string& matrix_path, const std::string& gen,
                           double theta, int random_thetas, uint64_t seed,
                           const std::string& ordering_s, double tol) {
    Output o;
    const Ordering ordering = parse_ordering(ordering_s);
    SymplecticForm J = j_matrix(ordering);
    json results;
    bool pass = true;
    std::string csv, pretty;

    if (!matrix_path.empty()) {
        Eigen::Matrix4d M = read_transform(matrix_path);
        GroupElement g{M, ordering, "file:" + matrix_path};
        double defect = canonical_defect(g, J);
        bool ok = defect <= tol;
        pass = ok;
        results = {{"source", "matrix"},
                   {"defect", defect},
                   {"canonical", ok},
                   {"tolerance", tol},
                   {"ordering", to_string(ordering)}};
        csv = "source,defect,canonical\nmatrix," + std::to_string(defect) + "," +
              (ok ? "true" : "false") + "\n";
        char buf[128];
        std::snprintf(buf, sizeof buf, "defect |MJM^T - J| = %.3e -> %s\n", defect,
                      ok ? "canonical" : "NOT canonical");
        pretty = buf;
    } else {
        GeneratorName name = parse_generator(gen);
        json checks = json::array();
        csv = "theta,defect,canonical\n";
        double worst = 0.0;
        int failures = 0;
        std::vector<double> thetas;
        if (random_thetas > 0) {
            Rng rng(seed);
            for (int k = 0; k < random_thetas; ++k) thetas.push_back(rng.range(-2.0, 2.0));
        } else {
            thetas.push_back(theta);
        }
        for (double th : thetas) {
            GroupElement g = exp_generator(name, th, ordering);
            double defect = canonical_defect(g, J);
            bool ok = defect <= tol;
            if (!ok) ++failures;
            worst = std::max(worst, defect);
            checks.push_back({{"theta", th}, {"defect", defect}, {"canonical", ok}});
            char buf[96];
            std::snprintf(buf, sizeof buf, "%.15g,%.3e,%s\n", th, defect, ok ? "true" : "false");
            csv += buf;
        }
        bool gen_canonical = generator_is_canonical(name, J);
        pass = failures == 0;
        results = {{"source", "generator"},
                   {"generator", gen},
                   {"generator_canonical", gen_canonical},
                   {"checks", checks},
                   {"max_defect", worst},
                   {"failures", failures},
                   {"tolerance", tol},
                   {"ordering", to_string(ordering)}};
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%s: %zu thetas, max defect %.3e, %d failures (generator %s)\n",
                      gen.c_str(), thetas.size(), worst, failures,
                      gen_canonical ? "canonical" : "noncanonical");
        pretty = buf;
    }

    o.report = {{"verb", "check-transform"},
                {"inputs",
                 {{"matrix", matrix_path},
                  {"generator", gen},
                  {"theta", theta},
                  {"random_thetas", random_thetas},
                  {"seed", seed},
                  {"ordering", ordering_s},
                  {"tolerance", tol}}},
                {"results", results},
                {"pass", pass}};
    o.csv = csv;
    o.pretty = (pass ? "PASS\n" : "FAIL\n") + pretty;
    return o;
}

Output run_evolve(const std::string& gen, double theta, const std::string& state_s,
                  double eta, double alpha, bool gate) {
    Output o;
    GeneratorName name = parse_generator(gen);
    GaussianState st = (state_s == "coupled") ? coupled_ground_state(eta, alpha)
                                              : vacuum_state();
    GroupElement M = exp_generator(name, theta, Ordering::Interleaved);
    GaussianState out = transform_state(st, M);
    auto [nu1, nu2] = symplectic_eigenvalues(out);
    bool admissible = uncertainty_ok(out);
    SymplecticForm J = j_matrix(Ordering::Interleaved);
    double defect = canonical_defect(M, J);
    bool pass = gate ? admissible : true;

    json results = {{"generator", gen},
                    {"theta", theta},
                    {"initial_state", state_s},
                    {"state", state_json(out)},
                    {"symplectic_eigenvalues", json::array({nu1, nu2})},
                    {"admissible", admissible},
                    {"canonical_defect", defect},
                    {"gate", gate}};
    o.report = {{"verb", "evolve"},
                {"inputs",
                 {{"generator", gen},
                  {"theta", theta},
                  {"state", state_s},
                  {"eta", eta},
                  {"alpha", alpha},
                  {"gate", gate}}},
                {"results", results},
                {"pass", pass}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "nu = (%.15g, %.15g), admissible: %s\n", nu1, nu2,
                  admissible ? "true" : "false");
    o.csv = std::string("nu1,nu2,admissible\n") +
            std::to_string(nu1) + "," + std::to_string(nu2) + "," +
            (admissible ? "true" : "false") + "\n";
    o.pretty = buf;
    return o;
}

Output run_fock_check(int N, const std::string& variant_s) {
    Output o;
    HattedVariant variant = HattedVariant::Default;
    if (variant_s == "legacy") variant = HattedVariant::LegacySigns;
    else if (variant_s == "kflip") variant = HattedVariant::KFlip;
    else if (variant_s != "default")
        throw ParseError("unknown variant: " + variant_s);

    FockTruncation t(N);
    const double threshold = 1e-10;
    json pairs = json::array(), failing = json::array();
    std::string csv = "x,y,residual\n";
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j2 = i + 1; j2 < 10; ++j2) {
            GeneratorName x = kSp4Members[static_cast<size_t>(i)];
            GeneratorName y = kSp4Members[static_cast<size_t>(j2)];
            double r = fock_commutator_check(x, y, t, variant);
            worst = std::max(worst, r);
            pairs.push_back({{"x", to_string(x)}, {"y", to_string(y)}, {"residual", r}});
            if (r > threshold)
                failing.push_back(json::array({to_string(x), to_string(y)}));
            char buf[64];
            std::snprintf(buf, sizeof buf, "%s,%s,%.3e\n", to_string(x).c_str(),
                          to_string(y).c_str(), r);
            csv += buf;
        }
    bool pass = worst <= threshold;
    o.report = {{"verb", "fock-check"},
                {"inputs", {{"N", N}, {"variant", variant_s}}},
                {"results",
                 {{"N", N},
                  {"variant", variant_s},
                  {"pairs", pairs},
                  {"max_residual", worst},
                  {"threshold", threshold},
                  {"failing_pairs", failing}}},
                {"pass", pass}};
    o.csv = csv;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s N=%d variant=%s: max residual %.3e over 45 pairs\n",
                  pass ? "PASS" : "FAIL", N, variant_s.c_str(), worst);
    o.pretty = buf;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generator catalogs, bracket verification, and Gaussian "
                 "phase-space evolution for two coupled oscillators"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();

    // dump-generators
    auto* dump = app.add_subcommand("dump-generators", "print a catalog slice");
    std::string dump_set;
    std::string dump_name;
    dump->add_option("--set", dump_set, "catalog slice")
        ->required()
        ->check(CLI::IsMember({"interleaved", "traditional", "secii", "o33", "diffop"}));
    dump->add_option("--name", dump_name, "restrict to one generator");

    // verify-algebra
    auto* valg = app.add_subcommand("verify-algebra", "check a bracket table or identity set");
    std::string valg_set;
    std::string valg_ordering = "interleaved";
    valg->add_option("--set", valg_set, "which table/identities")
        ->required()
        ->check(CLI::IsMember({"mode1", "mode2", "coupling", "sp4", "sl4", "o33"}));
    valg->add_option("--ordering", valg_ordering, "coordinate ordering for 4x4 sets")
        ->check(CLI::IsMember({"interleaved", "traditional"}))
        ->capture_default_str();

    // verify-isomorphism
    app.add_subcommand("verify-isomorphism",
                       "compare 4x4 and 6x6 structure constants name-by-name");

    // subgroups
    app.add_subcommand("subgroups", "enumerate the ten-dimensional bracket-closed subalgebras");

    // solve
    auto* solve = app.add_subcommand("solve", "two-oscillator normal form and spectrum");
    double s_m1 = 1.0, s_m2 = 1.0, s_A = 0.0, s_B = 0.0, s_C = 0.0;
    int s_nmax = 3;
    solve->add_option("--m1", s_m1, "mass 1")->capture_default_str();
    solve->add_option("--m2", s_m2, "mass 2")->capture_default_str();
    solve->add_option("--A", s_A, "x1^2 coefficient")->required();
    solve->add_option("--B", s_B, "x2^2 coefficient")->required();
    solve->add_option("--C", s_C, "cross coefficient")->required();
    solve->add_option("--nmax", s_nmax, "spectrum levels per mode")->capture_default_str();

    // check-transform
    auto* ct = app.add_subcommand("check-transform", "test M J M^T = J");
    std::string ct_matrix, ct_gen, ct_ordering = "interleaved";
    double ct_theta = 1.0, ct_tol = 1e-12;
    int ct_random = 0;
    uint64_t ct_seed = 20260819;
    auto* ct_m = ct->add_option("--matrix", ct_matrix, "matrix JSON file, '-' for stdin");
    auto* ct_g = ct->add_option("--generator", ct_gen, "generator name to exponentiate");
    ct_m->excludes(ct_g);
    ct->add_option("--theta", ct_theta, "parameter for --generator")->capture_default_str();
    ct->add_option("--random-thetas", ct_random, "check N random thetas in [-2,2] instead")
        ->capture_default_str();
    ct->add_option("--seed", ct_seed, "seed for --random-thetas")->capture_default_str();
    ct->add_option("--ordering", ct_ordering, "coordinate ordering")
        ->check(CLI::IsMember({"interleaved", "traditional"}))
        ->capture_default_str();
    ct->add_option("--tol", ct_tol, "defect tolerance")->capture_default_str();

    // evolve
    auto* ev = app.add_subcommand("evolve", "apply exp(theta iX) to a Gaussian state");
    std::string ev_gen, ev_state = "vacuum";
    double ev_theta = 0.0, ev_eta = 0.0, ev_alpha = 0.0;
    bool ev_gate = false;
    ev->add_option("--generator", ev_gen, "generator name")->required();
    ev->add_option("--theta", ev_theta, "parameter")->required();
    ev->add_option("--state", ev_state, "initial state")
        ->check(CLI::IsMember({"vacuum", "coupled"}))
        ->capture_default_str();
    ev->add_option("--eta", ev_eta, "squeeze parameter for --state coupled")
        ->capture_default_str();
    ev->add_option("--alpha", ev_alpha, "rotation angle for --state coupled")
        ->capture_default_str();
    ev->add_flag("--gate", ev_gate, "fail (exit 1) when the result violates nu >= 1/2");

    // fock-check
    auto* fc = app.add_subcommand("fock-check", "truncated ladder-operator bracket residuals");
    int fc_N = 12;
    std::string fc_variant = "default";
    fc->add_option("--N", fc_N, "per-mode cutoff")->capture_default_str();
    fc->add_option("--variant", fc_variant, "sign variant")
        ->check(CLI::IsMember({"default", "legacy", "kflip"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const int precision = precision_from_env();
    const auto t0 = std::chrono::steady_clock::now();
    Output out;
    std::string verb;
    try {
        if (dump->parsed()) {
            verb = "dump-generators";
            out = run_dump(dump_set, dump_name);
        } else if (valg->parsed()) {
            verb = "verify-algebra";
            out = run_verify_algebra(valg_set, valg_ordering);
        } else if (app.get_subcommand("verify-isomorphism")->parsed()) {
            verb = "verify-isomorphism";
            out = run_verify_isomorphism();
        } else if (app.get_subcommand("subgroups")->parsed()) {
            verb = "subgroups";
            out = run_subgroups();
        } else if (solve->parsed()) {
            verb = "solve";
            out = run_solve(s_m1, s_m2, s_A, s_B, s_C, s_nmax);
        } else if (ct->parsed()) {
            verb = "check-transform";
            if (ct_matrix.empty() && ct_gen.empty()) {
                std::cerr << "check-transform: need --matrix or --generator\n";
                return 2;
            }
            out = run_check_transform(ct_matrix, ct_gen, ct_theta, ct_random, ct_seed,
                                      ct_ordering, ct_tol);
        } else if (ev->parsed()) {
            verb = "evolve";
            out = run_evolve(ev_gen, ev_theta, ev_state, ev_eta, ev_alpha, ev_gate);
        } else if (fc->parsed()) {
            verb = "fock-check";
            out = run_fock_check(fc_N, fc_variant);
        } else {
            std::cerr << "no verb selected\n";
            return 2;
        }
    } catch (const ParseError& e) {
        std::cerr << "oscsym: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "oscsym: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "oscsym: " << e.what() << "\n";
        return 2;
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::fprintf(stderr, "oscsym: %s completed in %.1f ms\n", verb.c_str(), ms);

    if (format == "json") {
        std::cout << dump_deterministic(out.report, precision) << "\n";
    } else if (format == "csv") {
        std::cout << out.csv;
    } else {
        std::cout << out.pretty;
    }
    return out.report.value("pass", true) ? 0 : 1;
}
