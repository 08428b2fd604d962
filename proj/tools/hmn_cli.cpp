// Command line front end: construct modules as files, analyze and relate
// them, and run the verification suites. Exit codes: 0 success, 1 a
// verification or validity check failed, 2 usage or file trouble.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include <hmn/context.hpp>
#include <hmn/homalg.hpp>
#include <hmn/hopf.hpp>
#include <hmn/module.hpp>
#include <hmn/module_io.hpp>
#include <hmn/structure.hpp>
#include <hmn/verify.hpp>

using namespace hmn;

namespace {

// Shared loader: peek the file's parameters, build the workspace once, and
// keep it alive for every module read against it.
struct Workspace {
    std::unique_ptr<Context> C;

    const Context& at(int m, int n) {
        if (!C || C->field().m() != m || C->field().n() != n) C = std::make_unique<Context>(m, n);
        return *C;
    }
    const Context& for_file(const std::string& path) {
        auto mn = module_file_params(path);
        return at(mn.first, mn.second);
    }
};

struct ConstructArgs {
    std::string kind;
    int m = 2, n = 2;
    int l = 1, i = 0, j = 0, t = 1;
    std::string eta = "1";
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    Workspace w;
    const Context& C = w.at(a.m, a.n);
    const Field& F = C.field();
    Module M;
    if (a.kind == "M")
        M = simple_M(F, a.l, a.i);
    else if (a.kind == "Z")
        M = verma_Z(C.algebra(), a.i, a.j);
    else if (a.kind == "P")
        M = projective_P(F, a.l, a.i);
    else if (a.kind == "T1")
        M = t1_module(F, a.l, a.i);
    else if (a.kind == "T1bar")
        M = t1bar_module(F, a.l, a.i);
    else if (a.kind == "M1")
        M = m1_module(F, a.l, a.i, parse_scalar(F, a.eta));
    else if (a.kind == "T" || a.kind == "Tbar" || a.kind == "Mt") {
        TowerBuilder towers(C);
        const TowerKind k = a.kind == "T"      ? TowerKind::T
                            : a.kind == "Tbar" ? TowerKind::Tbar
                                               : TowerKind::MFam;
        M = towers.floor(k, a.l, a.i, parse_scalar(F, a.eta), a.t);
    } else
        throw std::invalid_argument("unknown kind '" + a.kind + "'");
    write_module(a.out, M);
    std::cout << M.label << " (dim " << M.dim << ") -> " << a.out << "\n";
    return 0;
}

int run_analyze(const std::string& path) {
    Workspace w;
    const Context& C = w.for_file(path);
    Module M = read_module(C.field(), path);
    std::cout << "label: " << M.label << "\n";
    std::cout << "parameters: m=" << C.field().m() << " n=" << C.field().n() << "\n";
    std::cout << "dimension: " << M.dim << "\n";
    auto fails = M.relation_failures();
    if (!fails.empty()) {
        std::cout << "relations: FAIL\n";
        for (const auto& f : fails) std::cout << "  " << f << "\n";
        return 1;
    }
    std::cout << "relations: ok\n";
    if (M.dim == 0) {
        std::cout << "zero module\n";
        return 0;
    }
    LoewyData L = loewy_data(C, M);
    std::cout << "socle: " << socle_of(C, M).str(C) << "\n";
    std::cout << "top: " << top_of(C, M).str(C) << "\n";
    std::cout << "loewy length: " << L.loewy_length << "\n";
    if (L.has_type) std::cout << "loewy type: (" << L.s << "," << L.t << ")\n";
    std::cout << "weight spaces:";
    for (const auto& [i, sp] : weight_decomposition(M)) std::cout << " " << i << ":" << sp.dim();
    std::cout << "\n";
    std::cout << "indecomposable: " << (is_indecomposable(C, M) ? "yes" : "no") << "\n";
    return 0;
}

int run_pair(const std::string& what, const std::string& pa, const std::string& pb) {
    Workspace w;
    const Context& C = w.for_file(pa);
    Module A = read_module(C.field(), pa);
    Module B = read_module(C.field(), pb);
    if (what == "hom") {
        std::cout << "dim Hom(" << A.label << ", " << B.label << ") = " << hom_dim(A, B) << "\n";
    } else if (what == "ext") {
        std::cout << "dim Ext^1(" << A.label << ", " << B.label << ") = " << ext1(A, B).dim << "\n";
    } else {
        const bool iso = is_isomorphic(A, B);
        std::cout << A.label << (iso ? " ~ " : " !~ ") << B.label << "\n";
    }
    return 0;
}

struct SyzygyArgs {
    std::string in, out;
    int power = 1;
    bool inverse = false;
};

int run_syzygy(const SyzygyArgs& a) {
    Workspace w;
    const Context& C = w.for_file(a.in);
    Module M = read_module(C.field(), a.in);
    Module S = syzygy_power(C, M, a.power, a.inverse);
    write_module(a.out, S);
    std::cout << S.label << " (dim " << S.dim << ") -> " << a.out << "\n";
    return 0;
}

int run_blocks(int m, int n) {
    Workspace w;
    const Context& C = w.at(m, n);
    const Field& F = C.field();
    std::vector<Module> W;
    for (int l = 1; l <= n - 1; ++l)
        for (int i = 0; i < F.N(); ++i) W.push_back(simple_M(F, l, i));
    const int k = static_cast<int>(W.size());
    std::vector<int> uf(static_cast<size_t>(k));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x) x = uf[static_cast<size_t>(x)];
        return x;
    };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (ext1(W[static_cast<size_t>(a)], W[static_cast<size_t>(b)]).dim > 0 ||
                ext1(W[static_cast<size_t>(b)], W[static_cast<size_t>(a)]).dim > 0)
                uf[static_cast<size_t>(find(a))] = find(b);
    std::map<int, std::vector<std::string>> classes;
    for (int a = 0; a < k; ++a) classes[find(a)].push_back(W[static_cast<size_t>(a)].label);
    int c = 0;
    for (const auto& [root, labels] : classes) {
        std::cout << "class " << ++c << ":";
        for (const auto& lab : labels) std::cout << " " << lab;
        std::cout << "\n";
    }
    const auto I0 = enumerate_I0(F);
    std::cout << "singleton classes: " << I0.size() << " simple induced modules\n";
    std::cout << "total: " << classes.size() + I0.size() << " blocks\n";
    return 0;
}

struct VerifyArgs {
    int m = 2, n = 2;
    std::vector<std::string> suites;
    std::vector<std::string> etas;
    int dim_cap = 12;
    int tower_height = 3;
    bool timings = false;
    bool extended = false;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    std::vector<std::pair<int, int>> points = {{a.m, a.n}};
    if (a.extended) {
        points.emplace_back(2, 3);
        points.emplace_back(3, 2);
    }
    std::string text;
    bool all_ok = true;
    for (auto [m, n] : points) {
        VerifyOptions opt;
        opt.m = m;
        opt.n = n;
        opt.suites = a.suites;
        opt.dim_cap = a.dim_cap;
        opt.tower_height = a.tower_height;
        if (!a.etas.empty()) opt.eta_grid = a.etas;
        opt.timings = a.timings;
        VerifyReport rep = run_verification(opt);
        all_ok = all_ok && rep.ok;
        text += rep.to_json();
        std::cerr << "(m,n) = (" << m << "," << n << ")\n";
        for (const SuiteResult& s : rep.suites) {
            std::cerr << "  " << s.id << ": " << (s.ok ? "ok" : "FAIL") << " (" << s.passed() << "/"
                      << s.cases.size() << ")";
            if (a.timings) std::cerr << " " << s.elapsed_ms << " ms";
            std::cerr << "\n";
            if (!s.ok)
                for (const CaseResult& c : s.cases)
                    if (!c.ok) std::cerr << "    [" << c.params << "] " << c.detail << "\n";
        }
    }
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary | std::ios::trunc);
        if (!f) throw ModuleIOError("cannot open " + a.out + " for writing");
        f << text;
        if (!f.good()) throw ModuleIOError("write error on " + a.out);
    }
    std::cerr << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int run_hopf_check(int m, int n) {
    Field F(m, n);
    Algebra A(F);
    std::cout << "dim H = " << A.dim() << "\n";
    auto rf = A.relation_failures();
    bool ok = rf.empty();
    std::cout << "defining relations: " << (rf.empty() ? "ok" : "FAIL") << "\n";
    for (const auto& f : rf) std::cout << "  " << f << "\n";
    std::string why;
    if (A.dim() <= 64) {
        const bool assoc = A.associativity_exhaustive(&why);
        ok = ok && assoc;
        std::cout << "associativity (exhaustive): " << (assoc ? "ok" : "FAIL " + why) << "\n";
    } else {
        const bool assoc = A.associativity_sampled(20000, 12345, &why);
        ok = ok && assoc;
        std::cout << "associativity (20000 samples): " << (assoc ? "ok" : "FAIL " + why) << "\n";
    }
    Hopf h(A);
    auto rep = h.verify();
    ok = ok && rep.ok;
    std::cout << "coproduct, counit, antipode: " << (rep.ok ? "ok" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for the Drinfeld double of a Radford Hopf algebra"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "Build a module and write it to a file");
    construct->add_option("--kind", ca.kind, "M | Z | P | T1 | T1bar | M1 | T | Tbar | Mt")->required();
    construct->add_option("--m", ca.m, "first parameter (default 2)");
    construct->add_option("--n", ca.n, "second parameter (default 2)");
    construct->add_option("--l", ca.l, "weight length 1 <= l <= n-1");
    construct->add_option("--i", ca.i, "shift parameter");
    construct->add_option("--j", ca.j, "character exponent (kind Z)");
    construct->add_option("--eta", ca.eta, "scalar for M1 / Mt: integer, rational, xi or xi^k");
    construct->add_option("--t", ca.t, "tower height (kinds T, Tbar, Mt)");
    construct->add_option("--out", ca.out, "output file")->required();

    std::string analyze_path;
    CLI::App* analyze = app.add_subcommand("analyze", "Report structure of a module file");
    analyze->add_option("path", analyze_path, "module file")->required();

    std::string pa, pb;
    CLI::App* hom = app.add_subcommand("hom", "dim Hom(first, second)");
    hom->add_option("first", pa)->required();
    hom->add_option("second", pb)->required();
    CLI::App* ext = app.add_subcommand("ext", "dim Ext^1(first, second): classes of 0 -> second -> E -> first -> 0");
    ext->add_option("first", pa)->required();
    ext->add_option("second", pb)->required();
    CLI::App* iso = app.add_subcommand("iso", "Decide isomorphism of two module files");
    iso->add_option("first", pa)->required();
    iso->add_option("second", pb)->required();

    SyzygyArgs sa;
    CLI::App* syz = app.add_subcommand("syzygy", "Write a syzygy or cosyzygy power of a module");
    syz->add_option("path", sa.in, "module file")->required();
    syz->add_option("--power", sa.power, "number of applications (default 1)");
    syz->add_flag("--inverse", sa.inverse, "use the cosyzygy");
    syz->add_option("--out", sa.out, "output file")->required();

    int bm = 2, bn = 2;
    CLI::App* blocks = app.add_subcommand("blocks", "Print the extension-linking classes of the simples");
    blocks->add_option("--m", bm, "first parameter (default 2)");
    blocks->add_option("--n", bn, "second parameter (default 2)");

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run verification suites; report JSON on stdout, summary on stderr");
    verify->add_option("--m", va.m, "first parameter (default 2)");
    verify->add_option("--n", va.n, "second parameter (default 2)");
    verify->add_option("--suite", va.suites, "suite id, repeatable (default: all)");
    verify->add_option("--dim-cap", va.dim_cap, "classification sample dimension cap (default 12)");
    verify->add_option("--tower-height", va.tower_height, "tallest tower exercised (default 3)");
    verify->add_option("--eta-grid", va.etas, "eta values, comma separated or repeated (default: 1,2,-1,xi)")
        ->delimiter(',');
    verify->add_flag("--timings", va.timings, "record per-suite times (reports no longer byte-stable)");
    verify->add_flag("--extended", va.extended, "also run (2,3) and (3,2)");
    verify->add_option("--out", va.out, "write the JSON report here instead of stdout");

    int hm = 2, hn = 2;
    CLI::App* hopfc = app.add_subcommand("hopf-check", "Verify the algebra and Hopf structure");
    hopfc->add_option("--m", hm, "first parameter (default 2)");
    hopfc->add_option("--n", hn, "second parameter (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (analyze->parsed()) return run_analyze(analyze_path);
        if (hom->parsed()) return run_pair("hom", pa, pb);
        if (ext->parsed()) return run_pair("ext", pa, pb);
        if (iso->parsed()) return run_pair("iso", pa, pb);
        if (syz->parsed()) return run_syzygy(sa);
        if (blocks->parsed()) return run_blocks(bm, bn);
        if (verify->parsed()) return run_verify(va);
        if (hopfc->parsed()) return run_hopf_check(hm, hn);
    } catch (const ModuleIOError& e) {
        nlohmann::ordered_json err;
        err["error"] = "module-io";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
