// End-to-end checks of the pcp binary: round trips, exit codes, tamper
// detection. The binary path arrives as argv[1] from ctest.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    } else {
        std::cout << "ok: " << what << "\n";
    }
}

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: pcp_cli_test <pcp-binary>\n";
        return 2;
    }
    const std::string pcp = argv[1];
    const std::string dir = "cli_test_tmp";
    (void)run("rm -rf " + dir + " && mkdir -p " + dir);

    expect(run(pcp + " gen --kind uniform --n 13 --seed 7 --out " + dir + "/in.pts") == 0,
           "gen exits 0");
    expect(run(pcp + " partition13 " + dir + "/in.pts --out " + dir +
               "/parts.json --svg " + dir + "/parts.svg 2>" + dir + "/p13.log") == 0,
           "partition13 exits 0");
    expect(slurp(dir + "/parts.json").find("\"branch\"") != std::string::npos,
           "partition JSON has a branch");
    expect(run(pcp + " verify " + dir + "/parts.json > " + dir + "/verify.log") == 0,
           "verify exits 0 on untampered output");
    expect(slurp(dir + "/verify.log").find("verified: true") != std::string::npos,
           "verify reports success");
    expect(slurp(dir + "/parts.svg").find("<svg") == 0, "svg rendered");

    // tamper: flip a digit of the first member id, breaking coverage
    {
        std::string json = slurp(dir + "/parts.json");
        auto at = json.find("\"members\": [");
        expect(at != std::string::npos, "members key present");
        auto digit = json.find_first_of("0123456789", at);
        json[digit] = json[digit] == '0' ? '1' : '0';
        std::ofstream out(dir + "/tampered.json");
        out << json;
    }
    int tampered = run(pcp + " verify " + dir + "/tampered.json >/dev/null 2>&1");
    expect(tampered != 0, "verify flags a tampered file");

    expect(run(pcp + " gen --kind uniform --n 26 --seed 3 --out " + dir + "/n26.pts") == 0,
           "gen 26 points");
    expect(run(pcp + " partition " + dir + "/n26.pts --out " + dir + "/n26.json 2>/dev/null") ==
               0,
           "partition exits 0");
    {
        std::string json = slurp(dir + "/n26.json");
        size_t parts = 0, at = 0;
        while ((at = json.find("\"kind\"", at)) != std::string::npos) {
            ++parts;
            ++at;
        }
        expect(parts <= 6, "n=26 yields at most 6 parts");
    }

    expect(run(pcp + " oracle " + dir + "/in.pts --max-parts 3 > " + dir + "/oracle.log") == 0,
           "oracle exits 0");
    expect(slurp(dir + "/oracle.log").find("psi = ") != std::string::npos,
           "oracle reports a value");

    // bad input: collinear points exit 2
    {
        std::ofstream bad(dir + "/bad.pts");
        bad << "3\n0 0\n1 1\n2 2\n";
    }
    expect(run(pcp + " partition13 " + dir + "/bad.pts >/dev/null 2>&1") == 2,
           "collinear input exits 2");

    expect(run(pcp + " sweep --kind uniform --n 13 --seed 100 --count 20 --jobs 2 --out " + dir +
               "/sweep.csv") == 0,
           "sweep exits 0");
    {
        std::string csv = slurp(dir + "/sweep.csv");
        expect(csv.rfind("seed,digest,command,branch,parts,verified,ms", 0) == 0,
               "sweep CSV header");
        size_t rows = 0, at = 0;
        while ((at = csv.find("\npartition13,", at)) != std::string::npos) ++rows, ++at;
        // rows are seed-ordered regardless of the worker pool
        std::istringstream lines(csv);
        std::string line;
        std::getline(lines, line);
        std::uint64_t prev = 0;
        bool ordered = true, first = true;
        size_t count = 0;
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            std::uint64_t seed = std::stoull(line.substr(0, line.find(',')));
            if (!first && seed <= prev) ordered = false;
            prev = seed;
            first = false;
            ++count;
        }
        expect(ordered && count == 20, "sweep rows seed-ordered and complete");
    }

    (void)run("rm -rf " + dir);
    if (failures) {
        std::cerr << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
