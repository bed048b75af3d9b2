// End-to-end CLI tests: exercises subcommands through the installed binary,
// pins exit codes and the --json schemas against golden files.
// usage: cli_tests <path-to-vclab> <golden-dir>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string cli;
std::string golden_dir;
int failures = 0;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

void check_golden(const RunResult& r, const std::string& name, const std::string& what) {
    std::string want = slurp(golden_dir + "/" + name);
    bool ok = r.code == 0 && !want.empty() && r.out == want;
    check(ok, what + " matches golden " + name);
    if (!ok && !want.empty()) {
        std::printf("---- got ----\n%s---- want ----\n%s----\n", r.out.c_str(), want.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <vclab> <golden-dir>\n");
        return 2;
    }
    cli = argv[1];
    golden_dir = argv[2];

    char tmpl[] = "/tmp/vclab_cli_XXXXXX";
    std::string dir = mkdtemp(tmpl);

    // construct + vcdim pipeline
    RunResult c = run("construct --kind mz --n 8 --d 2 --out " + dir + "/f.fam");
    check(c.code == 0, "construct mz exits 0");
    RunResult v = run("vcdim " + dir + "/f.fam");
    check(v.code == 0 && v.out == "2\n", "vcdim prints 2");
    check_golden(run("vcdim " + dir + "/f.fam --json"), "vcdim_mz8.json", "vcdim --json");

    // audit with J = {1,2}: deficiency 0 on the mz family
    check_golden(run("audit " + dir + "/f.fam --J 1,2 --json"), "audit_mz8.json", "audit --json");

    // certificate round trip
    RunResult pc = run("polycert " + dir + "/f.fam --gamma 12 --out " + dir + "/cert.json");
    check(pc.code == 0, "polycert exits 0");
    RunResult pv = run("polycert --verify " + dir + "/cert.json");
    check(pv.code == 0, "polycert --verify exits 0");

    // tampered certificate fails verification with exit 1
    {
        std::string cert = slurp(dir + "/cert.json");
        auto pos = cert.find("\"rank\": ");
        cert.replace(pos, 9, "\"rank\": 1");
        std::ofstream out(dir + "/bad.json", std::ios::binary);
        out << cert;
        out.close();
        RunResult bad = run("polycert --verify " + dir + "/bad.json");
        check(bad.code == 1, "tampered certificate exits 1");
    }

    // construct star + witness + links + transversal
    run("construct --kind star --n 6 --k 3 --center 6 --out " + dir + "/star.fam");
    RunResult w = run("witness " + dir + "/star.fam --out " + dir + "/star.wfam");
    check(w.code == 0, "witness exits 0");
    check_golden(run("transversal " + dir + "/star.wfam --s 2 --json"), "transversal_star6.json",
                 "transversal --json");
    check_golden(run("links " + dir + "/star.wfam --json"), "links_star6.json", "links --json");

    // shadow and kk
    check_golden(run("shadow " + dir + "/star.fam --s 1 --json"), "shadow_star6.json",
                 "shadow --json");
    check_golden(run("kk --exact-min 5 3 2 --json"), "kk_exact_min.json", "kk --exact-min");
    RunResult kk = run("kk " + dir + "/star.fam --json");
    check(kk.code == 0 && kk.out.find("\"holds\": true") != std::string::npos, "kk holds");

    // sunflower
    check_golden(run("sunflower " + dir + "/star.fam --r 3 --json"), "sunflower_star6.json",
                 "sunflower --json");
    RunResult sa = run("sunflower --audit " + dir + "/star.wfam");
    check(sa.code == 0, "sunflower --audit exits 0");

    // search with fixed seed-free modes
    check_golden(run("search --mode intersecting --n 6 --k 3 --json"), "search_ekr6.json",
                 "search intersecting --json");
    RunResult sw = run("search --mode switness --n 6 --d 2 --s 2 --json");
    check(sw.code == 0 && sw.out.find("\"size\": 10") != std::string::npos, "switness optimum 10");

    // hunt: none at verified scale, exit 0; identical seeds, identical output
    RunResult h1 = run("hunt --n 6 --d 2 --s 1 --budget 20000 --seed 5 --json");
    RunResult h2 = run("hunt --n 6 --d 2 --s 1 --budget 20000 --seed 5 --json");
    check(h1.code == 0 && h1.out.find("\"found\": false") != std::string::npos, "hunt finds none");
    check(h1.out == h2.out, "hunt deterministic under fixed seed");

    // usage errors
    check(run("vcdim /nonexistent.fam").code == 2, "missing file exits 2");
    check(run("nonsense").code == 2, "unknown subcommand exits 2");
    check(run("audit " + dir + "/star.wfam").code == 2, "audit without --J exits 2");

    // violation exit: complete family has a shattered member
    run("construct --kind complete --n 4 --k 3 --out " + dir + "/full.fam");
    check(run("witness " + dir + "/full.fam").code == 1, "shattered member exits 1");

    if (failures == 0) std::printf("cli: all checks pass\n");
    return failures == 0 ? 0 : 1;
}
