#include "padspec/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"padspec: exact radii and Berkovich spectra of p-adic differential operators (JSON in, JSON out)"};
    std::string input = "-";
    bool pretty = false;
    int probe_level = -1, precision = -1, lmax = -1;
    app.add_option("--input", input, "job file, or '-' for stdin (default)");
    app.add_flag("--pretty", pretty, "indent the output document");
    app.add_option("--probe-level", probe_level, "default probe level when the job omits options.probe_level");
    app.add_option("--precision", precision, "default factorization precision when the job omits options.precision");
    app.add_option("--lmax", lmax, "default descent cap when the job omits options.lmax");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(input);
        if (!f) {
            std::cerr << "cannot open " << input << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }

    // Flags are conveniences: they fill defaults the job does not pin itself.
    try {
        padspec::json job = padspec::json::parse(text);
        if (job.is_object()) {
            if (!job.contains("options")) job["options"] = padspec::json::object();
            auto& o = job["options"];
            if (probe_level >= 0 && !o.contains("probe_level")) o["probe_level"] = probe_level;
            if (precision >= 0 && !o.contains("precision")) o["precision"] = precision;
            if (lmax >= 0 && !o.contains("lmax")) o["lmax"] = lmax;
            text = job.dump();
        }
    } catch (...) {
        // leave malformed input to the engine so the error shape is uniform
    }

    int code = 0;
    std::cout << padspec::run_job_string(text, pretty, code);
    return code;
}
