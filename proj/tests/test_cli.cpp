// End-to-end tests driving the installed CLI binary. The binary path comes
// in through DIFFSPEC_CLI_PATH at compile time.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = std::string(DIFFSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

} // namespace

int main() {
    const auto spectrum = run("spectrum --n 6 --d 7 --method brute --format json");
    expect(spectrum.exit_code == 0, "spectrum exit code");
    expect(spectrum.out ==
               "{\"d\":7,\"delta0\":6,\"delta1\":4,\"delta_max\":6,"
               "\"locally_apn\":true,\"modulus\":\"0x43\",\"n\":6,"
               "\"omega\":{\"0\":35,\"2\":27,\"4\":1,\"6\":1}}\n",
           "spectrum JSON document");

    // Byte-identical output for identical arguments; --jobs never changes it.
    const auto again = run("spectrum --n 6 --d 7 --method brute --format json");
    expect(again.out == spectrum.out, "deterministic repetition");
    const auto jobs = run("spectrum --n 6 --d 7 --method brute --format json --jobs 4");
    expect(jobs.out == spectrum.out, "--jobs does not change the document");

    // The kernel route agrees with brute force through the CLI as well.
    const auto kernel = run("spectrum --n 6 --t 3 --method kernel --format json");
    expect(kernel.out == spectrum.out, "kernel route document");

    // Conflicting selectors are a usage error.
    expect(run("spectrum --n 6 --d 7 --t 3").exit_code == 2, "conflicting selectors");
    expect(run("spectrum --n 6").exit_code == 2, "missing selector");
    expect(run("spectrum --d 7").exit_code == 2, "missing --n");
    expect(run("bogus").exit_code == 2, "unknown subcommand");
    expect(run("spectrum --n 6 --d 7 --format yaml").exit_code == 2, "unknown format");
    expect(run("spectrum --n 30 --d 7").exit_code == 2, "degree beyond exhaustive cap");

    // Modulus override changes the document only in the modulus field.
    const auto m1 = run("spectrum --n 8 --d 7 --modulus 0x11b --format csv");
    const auto m2 = run("spectrum --n 8 --d 7 --modulus 0x11d --format csv");
    expect(m1.exit_code == 0 && m2.exit_code == 0, "modulus override accepted");
    expect(m1.out == m2.out, "modulus independence end to end (CSV carries no modulus)");
    expect(run("spectrum --n 8 --d 7 --modulus 0x11c").exit_code == 2,
           "reducible modulus rejected");

    // verify: exit 0 iff all passed.
    const auto verify = run("verify --n-min 4 --n-max 10 --format json");
    expect(verify.exit_code == 0, "verify exit code");
    expect(verify.out.find("\"all_passed\":true") != std::string::npos,
           "verify all_passed");

    // The wide CSV form is refused when it would have 2^31 columns.
    expect(run("spectrum --n 40 --family half --format csv").exit_code == 2,
           "huge CSV spectrum refused");
    expect(run("spectrum --n 40 --family half --format json").exit_code == 0,
           "huge spectrum fine as JSON");

    // scan in CSV form.
    const auto scan = run("scan --n-min 5 --n-max 5 --format csv");
    expect(scan.out == "n,t,delta,apn\n5,2,2,true\n5,3,2,true\n5,4,2,true\n",
           "scan CSV rows");

    // kloosterman: both methods agree on the value field.
    const auto k_direct = run("kloosterman --n 8 --method brute --format csv");
    const auto k_formula = run("kloosterman --n 8 --method formula --format csv");
    expect(k_direct.out == "n,method,value\n8,direct,32\n", "direct Kloosterman");
    expect(k_formula.out == "n,method,value\n8,carlitz,32\n", "Carlitz Kloosterman");

    const auto codes = run("codes --n 6 --format json");
    expect(codes.out == "{\"b3\":21,\"b4\":63,\"n\":6}\n", "codes document");

    const auto profile = run("profile --n 6 --t 3 --format json");
    expect(profile.out == "{\"counts\":{\"1\":35,\"2\":28,\"3\":1},\"n\":6,\"t\":3}\n",
           "profile document");

    // family selector with the formula method.
    const auto family = run("spectrum --n 8 --family half --format csv");
    expect(family.out == "n,d,delta_max,omega_0,omega_2,omega_4,omega_6,"
                         "omega_8,omega_10,omega_12,omega_14\n"
                         "8,15,14,134,121,0,0,0,0,0,1\n",
           "family closed-form CSV");

    if (failures == 0) std::cout << "cli tests passed\n";
    return failures == 0 ? 0 : 1;
}
