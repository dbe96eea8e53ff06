#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcfa/serialize.hpp"
#include "tcfa/verify.hpp"
#include "tcfa/version.hpp"

namespace {

using tcfa::Json;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw tcfa::InvalidInput("cannot open output file " + out_path);
    out << text;
}

tcfa::ParsedSpace load_space(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tcfa::InvalidInput("cannot open space file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    tcfa::ParsedSpace parsed = tcfa::parse_space_text(buf.str());
    for (const auto& warning : parsed.warnings) std::cerr << "warning: " << warning << "\n";
    return parsed;
}

int run_koszul(int n, int d, int K, const std::string& out_path) {
    tcfa::LieDualChar dual = tcfa::an_character(n, d, K);
    Json params{{"n", n}, {"d", d}, {"max_degree", K}};
    Json doc = tcfa::result_file("koszul", params, &dual.char_raw, nullptr);
    if (n > 2)
        doc["meta"]["note"] =
            "slices at graded degree >= n are computed outputs; only the degree-1 slice, the "
            "vanishing window and the support bounds are independently guaranteed";
    doc["renormalized"] = tcfa::character_to_json(dual.renormalized);
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_conf(const std::string& space_path, int n, int K, const std::string& format, bool no_unit,
             const std::string& out_path) {
    tcfa::ParsedSpace parsed = load_space(space_path);
    tcfa::ConfCohomology cc = tcfa::conf_cohomology(parsed.space, n, K, !no_unit);
    if (format == "table") {
        write_output(out_path, tcfa::character_table(cc.character));
        return 0;
    }
    if (format != "json") throw tcfa::InvalidInput("unknown format \"" + format + "\"");
    Json params{{"space", tcfa::space_to_json(parsed.space)},
                {"n", n},
                {"max_degree", K},
                {"unit", !no_unit}};
    Json doc = tcfa::result_file("conf", params, &cc.character, nullptr);
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_stability(const std::string& space_path, const std::string& mode, int n, int c0, int m,
                  int i, int K, const std::string& out_path) {
    tcfa::ParsedSpace parsed = load_space(space_path);
    tcfa::StabilityReport rep;
    if (mode == "iterate") {
        if (c0 < 0) throw tcfa::InvalidInput("mode iterate requires --c0");
        rep = tcfa::iterate_indecomposables(parsed.space, n, c0, K);
    } else if (mode == "toptriv") {
        if (m < 1) throw tcfa::InvalidInput("mode toptriv requires --m >= 1");
        rep = tcfa::toptriv_split(parsed.space, m, K);
    } else if (mode == "figen") {
        if (c0 < 0 || i < 0) throw tcfa::InvalidInput("mode figen requires --c0 and --i");
        rep = tcfa::finite_generation_report(parsed.space, n, c0, i);
    } else {
        throw tcfa::InvalidInput("unknown mode \"" + mode + "\" (expected iterate|toptriv|figen)");
    }
    Json params{{"space", tcfa::space_to_json(parsed.space)}, {"mode", mode}, {"n", n},
                {"max_degree", K}};
    if (c0 >= 0) params["c0"] = c0;
    if (m >= 1) params["m"] = m;
    if (i >= 0) params["i"] = i;
    Json doc = tcfa::result_file("stability", params, nullptr, &rep);
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_verify(const std::string& suite, int K) {
    auto results = tcfa::verification_suite(suite, K);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant cohomology characters of generalized configuration spaces"};
    app.set_version_flag("--version", tcfa::kEngineVersion);
    app.require_subcommand(1);

    auto* koszul = app.add_subcommand("koszul", "dual coLie cohomology characters");
    int kz_n = 2, kz_d = 1, kz_K = 6;
    std::string kz_out;
    koszul->add_option("--n", kz_n, "truncation level (>= 2)");
    koszul->add_option("--d", kz_d, "dimension of the underlying space");
    koszul->add_option("--max-degree", kz_K, "graded-degree truncation");
    koszul->add_option("--out", kz_out, "output file (default stdout)");

    auto* conf = app.add_subcommand("conf", "configuration space cohomology characters");
    std::string cf_space, cf_format = "json", cf_out;
    int cf_n = 2, cf_K = 6;
    bool cf_nounit = false;
    conf->add_option("--space", cf_space, "space description file")->required();
    conf->add_option("--n", cf_n, "truncation level (>= 2)");
    conf->add_option("--max-degree", cf_K, "graded-degree truncation");
    conf->add_option("--format", cf_format, "json|table");
    conf->add_flag("--no-unit", cf_nounit, "drop the k=0 unit slice");
    conf->add_option("--out", cf_out, "output file (default stdout)");

    auto* stab = app.add_subcommand("stability", "representation stability reports");
    std::string st_space, st_mode, st_out;
    int st_n = 2, st_c0 = -1, st_m = -1, st_i = -1, st_K = 6;
    stab->add_option("--space", st_space, "space description file")->required();
    stab->add_option("--mode", st_mode, "iterate|toptriv|figen")->required();
    stab->add_option("--n", st_n, "truncation level (>= 2)");
    stab->add_option("--c0", st_c0, "top deleted cohomological degree (iterate/figen)");
    stab->add_option("--m", st_m, "operator level (toptriv)");
    stab->add_option("--i", st_i, "cohomological degree (figen)");
    stab->add_option("--max-degree", st_K, "graded-degree truncation");
    stab->add_option("--out", st_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string vf_suite = "all";
    int vf_K = 6;
    verify->add_option("--suite", vf_suite, "calibration|oracle|all");
    verify->add_option("--max-degree", vf_K, "graded-degree truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (koszul->parsed()) return run_koszul(kz_n, kz_d, kz_K, kz_out);
        if (conf->parsed()) return run_conf(cf_space, cf_n, cf_K, cf_format, cf_nounit, cf_out);
        if (stab->parsed())
            return run_stability(st_space, st_mode, st_n, st_c0, st_m, st_i, st_K, st_out);
        if (verify->parsed()) return run_verify(vf_suite, vf_K);
    } catch (const tcfa::CalibrationError& e) {
        std::cerr << "calibration failure: " << e.what() << "\n";
        return 3;
    } catch (const tcfa::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
