#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qzeta/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact weighted zeta functions of finite graphs over the rational quaternions"};
    app.require_subcommand(1);

    qzeta::ComputeConfig compute_config;
    std::vector<std::string> method_names = {"euler", "expgen", "hashimoto", "bass"};
    std::string output_path;
    CLI::App* compute =
        app.add_subcommand("compute", "Compute 1/z and z by the selected methods and compare "
                                      "them coefficient by coefficient");
    compute->add_option("--input", compute_config.input_path, "Graph description (JSON file)")
        ->required();
    compute
        ->add_option("--order", compute_config.order,
                     "Truncation order: series are computed exactly mod t^(order+1)")
        ->capture_default_str();
    compute
        ->add_option("--methods", method_names,
                     "Comma-separated subset of: euler, expgen, hashimoto, bass, ihara")
        ->delimiter(',')
        ->capture_default_str();
    compute->add_option("--output", output_path,
                        "Write the JSON report to this file instead of stdout");

    qzeta::VerifyConfig verify_config;
    CLI::App* verify =
        app.add_subcommand("verify", "Run the randomized self-verification suites");
    verify->add_option("--seed", verify_config.seed, "Random seed")->capture_default_str();
    verify->add_option("--trials", verify_config.trials, "Trials per randomized check")
        ->capture_default_str();
    verify
        ->add_option("--suite", verify_config.suite,
                     "Suite to run: all, quaternion, series, lyndon, study, graph, zeta")
        ->capture_default_str();
    verify->add_flag("--corrupt-sdet", verify_config.corrupt_sdet,
                     "Deliberately corrupt the Study determinant to prove the suite catches it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (compute->parsed()) {
        compute_config.methods.clear();
        for (const std::string& name : method_names) {
            const auto m = qzeta::method_from_name(name);
            if (!m) {
                std::cerr << "error: unknown method '" << name
                          << "' (expected euler, expgen, hashimoto, bass, or ihara)\n";
                return 2;
            }
            compute_config.methods.push_back(*m);
        }
        if (!output_path.empty()) compute_config.output_path = output_path;
        return qzeta::run_compute(compute_config, std::cout, std::cerr);
    }
    return qzeta::run_verify(verify_config, std::cout, std::cerr);
}
