#include "linfkit/courant.hpp"
#include "linfkit/homotopy_poisson.hpp"
#include "linfkit/ikeda_uchino.hpp"
#include "linfkit/io.hpp"
#include "linfkit/linfty.hpp"
#include "linfkit/quasi_groupoid.hpp"
#include "linfkit/schouten.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace lk;
using nlohmann::json;

namespace {

struct Options {
    std::string input, output, report;
    int degree_cap = 2;
    int jacobi_max = 4;
    std::size_t witness_cap = 10;
    std::string convention = "left";
    std::string formulas = "derived";
    bool quiet = false;
};

// Named reports of one run plus whatever the command writes out.
struct Run {
    std::vector<std::pair<std::string, Report>> sections;
    std::string artifact;   // goes to --output, or stdout
    std::string info;       // console only

    void add(const std::string& name, Report r) { sections.emplace_back(name, std::move(r)); }
    bool pass() const
    {
        for (const auto& [n, r] : sections)
            if (!r.pass())
                return false;
        return true;
    }
};

json to_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks()) {
        json j{{"name", c.name},
               {"status", c.pass ? "pass" : "fail"},
               {"instances", c.instances},
               {"failures", c.failures},
               {"witnesses", c.witnesses}};
        if (!c.note.empty())
            j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    return checks;
}

Report single(const std::string& name, bool ok, const std::string& witness = {})
{
    Report r;
    r.check(name);
    r.record(name, ok, witness);
    return r;
}

StructureFile load(const Options& o)
{
    return parse_structure_file(read_file(o.input));
}

std::string name_of(const StructureFile& f)
{
    auto it = f.meta.find("name");
    return it == f.meta.end() ? "input" : it->second;
}

void need_two_term(const LInfty& g)
{
    if (!is_two_term(g))
        throw std::invalid_argument("this command needs a 2-term structure (degrees 0 and -1)");
}

Convention convention(const Options& o)
{
    if (o.convention == "left")
        return Convention::Left;
    if (o.convention == "right")
        return Convention::Right;
    throw std::invalid_argument("--convention must be left or right");
}

Run cmd_verify(const Options& o)
{
    Run run;
    const LInfty L = load(o).structure;
    Report audit = degree_audit(L);
    const bool degrees_ok = audit.pass();
    run.add("degree rule", std::move(audit));
    run.add("higher Jacobi", check_higher_jacobi(L, o.jacobi_max));
    if (!degrees_ok || L.space().max_degree() > 0)
        return run;
    const int n = L.space().terms();
    Encoding enc = hamiltonian_encode(L, n);
    run.add("master equation", check_master_equation(enc.chart, enc.hamiltonian, o.witness_cap).report);
    run.add("derived-bracket round trip",
            single("extracted l_k = stored l_k", decode(enc, L.space(), L.max_arity() + 1) == L));
    return run;
}

Run cmd_encode(const Options& o)
{
    Run run;
    const LInfty L = load(o).structure;
    if (L.space().max_degree() > 0)
        throw std::invalid_argument("encode needs degrees <= 0");
    const int n = L.space().terms();
    Encoding enc = hamiltonian_encode(L, n);
    std::ostringstream out;
    out << "# T*[" << n << "]g[" << n - 1 << "]\n";
    for (int v = 0; v < enc.chart.size(); ++v)
        out << enc.chart.name(v) << " " << (enc.chart.is_momentum(v) ? "momentum" : "position") << " "
            << enc.chart.degree(v) << "\n";
    out << "H = " << to_string(enc.chart, enc.hamiltonian) << "\n";
    run.artifact = out.str();
    run.add("derived-bracket round trip",
            single("extracted l_k = stored l_k", decode(enc, L.space(), L.max_arity() + 1) == L));
    run.add("master equation", check_master_equation(enc.chart, enc.hamiltonian, o.witness_cap).report);
    return run;
}

Run cmd_courant(const Options& o)
{
    Run run;
    const LInfty g = load(o).structure;
    need_two_term(g);
    CourantData cd = courant_from_2term(g);
    run.add("Courant axioms", verify_courant_axioms(cd, o.degree_cap, o.witness_cap));
    run.add("derived brackets", check_derived_route(cd, std::min(o.degree_cap, 1), o.witness_cap));
    return run;
}

Run cmd_new2term(const Options& o)
{
    Run run;
    StructureFile f = load(o);
    need_two_term(f.structure);
    LInfty gt = new_two_term(f.structure);
    run.add("higher Jacobi", check_higher_jacobi(gt, o.jacobi_max));
    run.add("Courant route",
            single("closed forms = sections of the Courant algebroid",
                   twoterm_from_courant(courant_from_2term(f.structure)) == gt));
    run.artifact = serialize_structure(gt, {{"name", "new2term(" + name_of(f) + ")"}});
    return run;
}

Run cmd_morphism(const Options& o)
{
    Run run;
    const LInfty g = load(o).structure;
    need_two_term(g);
    run.add("canonical morphism", verify_morphism(canonical_morphism(g), new_two_term(g), g));
    return run;
}

Run cmd_bialgebroid(const Options& o)
{
    Run run;
    StructureFile f = load(o);
    need_two_term(f.structure);
    auto B = split_quasi_bialgebroid(f.structure);
    run.add("quasi-bialgebroid", verify_quasi_bialgebroid(B, o.witness_cap));
    KerdTwoTerm K = kerd_two_term(B, o.degree_cap);
    run.add("Ker(d_A) slice", K.report);
    run.add("Ker(d_A) higher Jacobi", check_higher_jacobi(K.structure, o.jacobi_max));
    run.add("Courant -> Ker(d_A) morphism", verify_kerd_morphism(B, K, std::min(o.degree_cap, 1), o.witness_cap));
    run.artifact = serialize_structure(K.structure, {{"name", "kerd(" + name_of(f) + ")"},
                                                     {"weight-cap", std::to_string(o.degree_cap)}});
    return run;
}

Run cmd_bivector(const Options& o)
{
    Run run;
    const LInfty g = load(o).structure;
    need_two_term(g);
    auto P = groupoid_bivector(g);
    run.add("groupoid generators", verify_groupoid_generators(P, convention(o), o.witness_cap));
    run.artifact = serialize_bivector({P.pi, ConstantThreeForm(P.dim(), std::vector<Scalar>(P.dim() * P.dim() * P.dim()))});
    std::ostringstream info;
    const auto& sp = g.space();
    int k = 0;
    info << "coordinates:";
    for (int d : {-1, 0})
        for (int id : sp.ids_of_degree(d))
            info << " x" << ++k << " = " << sp.label(id) << "*";
    info << "\n";
    info << "phi = " << groupoid_phi(P).to_string() << "\n";
    run.info = info.str();
    return run;
}

Run cmd_quasi_check(const Options& o)
{
    Run run;
    const LInfty g = load(o).structure;
    need_two_term(g);
    auto P = groupoid_bivector(g);
    run.add("quasi-Poisson", verify_quasi_poisson(P, groupoid_phi(P), convention(o), o.witness_cap));
    run.add("groupoid generators", verify_groupoid_generators(P, convention(o), o.witness_cap));
    return run;
}

Run cmd_iu(const Options& o)
{
    Run run;
    const LInfty g = load(o).structure;
    IUFormulas which;
    if (o.formulas == "derived")
        which = IUFormulas::Derived;
    else if (o.formulas == "printed")
        which = IUFormulas::Printed;
    else
        throw std::invalid_argument("--formulas must be derived or printed");
    bidegree_split(g);
    run.add("bidegree", audit_bracket_bidegree(g, 2, o.witness_cap));
    auto d = iu_from_3term(g, which);
    run.add("derived brackets", check_iu_derived_tables(d, o.witness_cap));
    run.add("algebroid axioms", verify_iu_axioms(d, std::min(o.degree_cap, 1), o.witness_cap));
    return run;
}

Run cmd_induce2term(const Options& o)
{
    Run run;
    StructureFile f = load(o);
    InducedTwoTerm I = induced_two_term(f.structure);
    run.add("induced brackets", I.report);
    run.add("higher Jacobi", check_higher_jacobi(I.structure, o.jacobi_max));
    std::ostringstream info;
    for (const auto& [id, s] : I.element)
        if (I.structure.space().degree(id) == -1)
            info << I.structure.space().label(id) << " = " << to_string(iu_from_3term(f.structure).chart(), s) << "\n";
    run.info = info.str();
    run.artifact = serialize_structure(I.structure, {{"name", "induced(" + name_of(f) + ")"}});
    return run;
}

Run cmd_mc_check(const Options& o)
{
    Run run;
    BivectorFile f = parse_bivector_file(read_file(o.input));
    const int N = f.pi.base_dim();
    auto T = twisted_poisson_presentation(N, f.H.triples());
    run.add("presentation", validate(T.presentation));
    const Chart& c = T.presentation.chart;
    PolyMultivector mc = from_poly(mc_residual(T.presentation, to_poly(f.pi, c, T.x, T.p)), c, T.x, T.p);
    PolyMultivector tw = twisted_poisson_residual(f.pi, f.H);
    run.add("cross-oracle", single("mc_residual = 1/2[pi,pi] - wedge3 pi# H", mc == tw,
                                   "mc_residual " + mc.to_string() + ", Schouten side " + tw.to_string()));
    run.add("twisted Poisson", single("1/2[pi,pi] = wedge3 pi# H", tw.is_zero(), "residual " + tw.to_string()));
    return run;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact L-infinity, Courant and Ikeda-Uchino structure checks"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        Run (*fn)(const Options&);
    };
    const Command commands[] = {
        {"verify", "degree rule, higher Jacobi, master equation, derived-bracket round trip", cmd_verify},
        {"encode", "print the Hamiltonian of the structure", cmd_encode},
        {"courant", "Courant algebroid of a 2-term algebra", cmd_courant},
        {"new2term", "the 2-term algebra of sections of the Courant algebroid", cmd_new2term},
        {"morphism", "the canonical morphism new2term(g) -> g", cmd_morphism},
        {"bialgebroid", "Lie quasi-bialgebroid splitting and the Ker(d_A) algebra", cmd_bialgebroid},
        {"bivector", "groupoid bivector Pi on g-1* x g0*", cmd_bivector},
        {"quasi-check", "quasi-Poisson identities of the groupoid bivector", cmd_quasi_check},
        {"iu", "Ikeda-Uchino algebroid of a 3-term algebra", cmd_iu},
        {"induce2term", "2-term algebra of the Ikeda-Uchino algebroid", cmd_induce2term},
        {"mc-check", "bivector file: Maurer-Cartan residual vs H-twisted Poisson residual", cmd_mc_check},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* s = app.add_subcommand(c.name, c.help);
        s->add_option("-i,--input", o.input, "input file")->required()->check(CLI::ExistingFile);
        s->add_option("-o,--output", o.output, "write the produced file here");
        s->add_option("-r,--report", o.report, "write a JSON report here");
        s->add_option("--degree-cap", o.degree_cap, "coefficient degree cap for sampled sections")
            ->capture_default_str()
            ->check(CLI::Range(0, 8));
        s->add_option("--jacobi-max", o.jacobi_max, "highest n of the Jacobi suite")
            ->capture_default_str()
            ->check(CLI::Range(1, 8));
        s->add_option("--witness-cap", o.witness_cap, "witnesses kept per check")->capture_default_str();
        s->add_option("--convention", o.convention, "translation sign, left or right")
            ->capture_default_str()
            ->check(CLI::IsMember({"left", "right"}));
        s->add_option("--formulas", o.formulas, "iu tables, derived or printed")
            ->capture_default_str()
            ->check(CLI::IsMember({"derived", "printed"}));
        s->add_flag("-q,--quiet", o.quiet, "only print the verdict");
        subs.emplace_back(s, &c);
    }
    CLI11_PARSE(app, argc, argv);

    for (const auto& [s, c] : subs) {
        if (!s->parsed())
            continue;
        json rep{{"command", c->name}, {"input", o.input}};
        Run run;
        try {
            run = c->fn(o);
        } catch (const ParseError& e) {
            std::cerr << o.input << ":" << e.line() << ":" << e.column() << ": " << kind_name(e.kind())
                      << " error: " << e.message() << "\n";
            if (!o.report.empty()) {
                rep["status"] = "error";
                rep["error"] = {{"kind", kind_name(e.kind())}, {"line", e.line()}, {"column", e.column()},
                                {"message", e.message()}};
                write_file(o.report, rep.dump(2) + "\n");
            }
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            if (!o.report.empty()) {
                rep["status"] = "error";
                rep["error"] = {{"message", e.what()}};
                write_file(o.report, rep.dump(2) + "\n");
            }
            return 2;
        }
        const bool ok = run.pass();
        if (!o.quiet) {
            for (const auto& [name, r] : run.sections)
                std::cout << "[" << name << "]\n" << r.summary();
            std::cout << run.info;
        }
        if (!run.artifact.empty()) {
            if (!o.output.empty())
                write_file(o.output, run.artifact);
            else if (!o.quiet)
                std::cout << run.artifact;
        }
        std::cout << c->name << ": " << (ok ? "pass" : "FAIL") << "\n";
        if (!o.report.empty()) {
            rep["status"] = ok ? "pass" : "fail";
            json secs = json::array();
            for (const auto& [name, r] : run.sections)
                secs.push_back({{"name", name}, {"status", r.pass() ? "pass" : "fail"}, {"checks", to_json(r)}});
            rep["sections"] = secs;
            write_file(o.report, rep.dump(2) + "\n");
        }
        return ok ? 0 : 1;
    }
    return 2;
}
