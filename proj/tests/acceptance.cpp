// Acceptance gate: twelve criteria, one PASS/FAIL line each. Structural
// checks run through the verification suites at (2,2) with extensions at
// (2,3) and (3,2); the last criterion shells out to the CLI (argv[1]) and
// byte-compares two reports. Exit code 0 iff every criterion passes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <hmn/verify.hpp>

using namespace hmn;

namespace {

int g_failed = 0;

void line(int k, bool ok, const std::string& text, const std::string& detail = std::string()) {
    if (!ok) ++g_failed;
    std::printf("%s %2d  %s%s%s\n", ok ? "PASS" : "FAIL", k, text.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
}

const SuiteResult* suite(const VerifyReport& r, const std::string& id) {
    for (const SuiteResult& s : r.suites)
        if (s.id == id) return &s;
    return nullptr;
}

bool suite_ok(const VerifyReport& r, const std::string& id, std::string* why) {
    const SuiteResult* s = suite(r, id);
    if (!s) {
        *why += "[missing suite " + id + "] ";
        return false;
    }
    if (!s->ok) {
        for (const CaseResult& c : s->cases)
            if (!c.ok) {
                *why += "[" + id + " / " + c.params + ": " + c.detail + "] ";
                break;
            }
        return false;
    }
    return true;
}

bool all_ok(const VerifyReport& r, const std::vector<std::string>& ids, std::string* why) {
    bool ok = true;
    for (const std::string& id : ids) ok = suite_ok(r, id, why) && ok;
    return ok;
}

std::string case_detail(const VerifyReport& r, const std::string& id, const std::string& params) {
    const SuiteResult* s = suite(r, id);
    if (!s) return "";
    for (const CaseResult& c : s->cases)
        if (c.params == params) return c.detail;
    return "";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    std::setbuf(stdout, nullptr);

    VerifyOptions base;
    VerifyReport A = run_verification(base); // every suite at (2,2)

    VerifyOptions e23;
    e23.m = 2;
    e23.n = 3;
    e23.suites = {"algebra",  "coefficients", "simples",    "semisimple-length",
                  "ar-simples", "towers",     "towers-bar", "towers-eta"};
    VerifyReport B = run_verification(e23);

    VerifyOptions e32;
    e32.m = 3;
    e32.n = 2;
    e32.suites = {"coefficients", "simples", "semisimple-length"};
    VerifyReport C = run_verification(e32);

    {
        std::string why;
        bool ok = suite_ok(A, "algebra", &why) && suite_ok(B, "algebra", &why);
        const std::string d22 = case_detail(A, "algebra", "dimension m^2 n^4");
        const std::string d23 = case_detail(B, "algebra", "dimension m^2 n^4");
        if (d22 != "64") {
            ok = false;
            why += "[dim at (2,2) reported " + d22 + "] ";
        }
        if (d23 != "324") {
            ok = false;
            why += "[dim at (2,3) reported " + d23 + "] ";
        }
        line(1, ok, "algebra: dim 64 at (2,2) and 324 at (2,3); defining relations; associativity",
             ok ? "exhaustive at (2,2), sampled at (2,3)" : why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "hopf", &why);
        line(2, ok, "hopf structure at (2,2): coproduct and counit respect the relations; axioms", why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "radical", &why);
        const std::string d = case_detail(A, "radical", "dim H/J equals the sum of squared simple dimensions");
        if (d.rfind("52", 0) != 0) {
            ok = false;
            why += "[semisimple quotient " + d + "] ";
        }
        line(3, ok, "radical: J^3 = 0, J^2 != 0, dim H/J = 52 at (2,2)", why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "coefficients", &why) && suite_ok(B, "coefficients", &why) &&
                  suite_ok(C, "coefficients", &why);
        line(4, ok, "coefficient identities, all seven clauses at (2,2), (2,3), (3,2)", why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "projectives", &why);
        line(5, ok, "projectives at (2,2): three layers, prescribed content, dimension count", why);
    }
    {
        std::string why;
        bool ok = all_ok(A, {"simples", "semisimple-length"}, &why) &&
                  all_ok(B, {"simples", "semisimple-length"}, &why) &&
                  all_ok(C, {"simples", "semisimple-length"}, &why);
        line(6, ok, "induced simplicity on the index set, pairwise distinction, semisimple lengths", why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "blocks", &why);
        const std::string d = case_detail(A, "blocks", "number of linking classes");
        if (d != "13") {
            ok = false;
            why += "[class count " + d + "] ";
        }
        line(7, ok, "blocks at (2,2): linking classes match the prescribed partition, 13 total", why);
    }
    {
        std::string why;
        bool ok = all_ok(A, {"syzygy-simples", "syzygy-shifts"}, &why);
        line(8, ok, "syzygy types (2,1)/(1,2), transition law, period-two shifts with sign twist", why);
    }
    {
        std::string why;
        bool ok = all_ok(A, {"eta-iso", "eta-family"}, &why);
        line(9, ok, "eta family at (2,2): isomorphism criteria, scalar endomorphisms, no embedded uniserial",
             why);
    }
    {
        std::string why;
        bool ok = all_ok(A, {"towers", "towers-bar", "towers-eta", "ar-simples"}, &why) &&
                  all_ok(B, {"towers", "towers-bar", "towers-eta", "ar-simples"}, &why);
        line(10, ok, "towers to height 3 at (2,2) and (2,3): layers, chains, almost split sequences", why);
    }
    {
        std::string why;
        bool ok = suite_ok(A, "classification", &why);
        line(11, ok, "classification sample at (2,2), dimension cap 12, pairwise distinct",
             ok ? case_detail(A, "classification", "representative sample pairwise distinct") : why);
    }
    {
        bool ok = false;
        std::string why;
        if (argc < 2) {
            why = "no CLI path supplied";
        } else {
            const std::string cli = argv[1];
            const std::string o1 = "acceptance_report_1.json", o2 = "acceptance_report_2.json";
            const std::string cmd1 = "\"" + cli + "\" verify --m 2 --n 2 --out " + o1 + " 2>/dev/null";
            const std::string cmd2 = "\"" + cli + "\" verify --m 2 --n 2 --out " + o2 + " 2>/dev/null";
            const int r1 = std::system(cmd1.c_str());
            const int r2 = std::system(cmd2.c_str());
            if (r1 != 0 || r2 != 0) {
                why = "CLI verify exited nonzero";
            } else {
                const std::string t1 = slurp(o1), t2 = slurp(o2);
                if (t1.empty()) {
                    why = "empty report";
                } else if (t1 != t2) {
                    why = "reports differ";
                } else {
                    ok = true;
                    why = std::to_string(t1.size()) + " bytes, identical";
                }
            }
        }
        line(12, ok, "two CLI runs of verify --m 2 --n 2 are byte-identical", why);
    }

    std::printf("ACCEPTANCE: %d/12 passed\n", 12 - g_failed);
    return g_failed == 0 ? 0 : 1;
}
