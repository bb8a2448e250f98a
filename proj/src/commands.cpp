#include "qzeta/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qzeta/json_io.hpp"

namespace qzeta {
namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

ordered_json build_report(const Graph& g, int order, const std::vector<ZetaResult>& results,
                          bool agreement, const std::optional<Discrepancy>& disc) {
    ordered_json report;
    ordered_json graph_info;
    graph_info["n"] = g.vertex_count();
    graph_info["m"] = g.edge_count();
    report["graph"] = std::move(graph_info);
    report["order"] = order;

    ordered_json methods = ordered_json::object();
    for (const ZetaResult& r : results) {
        ordered_json entry;
        entry["z_inv"] = r.z_inv;
        entry["z"] = r.z;
        entry["cycles"] = r.cycle_count ? ordered_json(*r.cycle_count) : ordered_json(nullptr);
        entry["ms"] = r.millis;
        methods[std::string(method_name(r.method))] = std::move(entry);
    }
    report["results"] = std::move(methods);
    report["agreement"] = agreement;

    if (disc) {
        ordered_json d;
        d["degree"] = disc->degree;
        d["methods"] = ordered_json::array({std::string(method_name(disc->method_a)),
                                            std::string(method_name(disc->method_b))});
        d["values"] = ordered_json::array({disc->value_a.str(), disc->value_b.str()});
        report["first_discrepancy"] = std::move(d);
    } else {
        report["first_discrepancy"] = nullptr;
    }

    ordered_json env;
    env["version"] = kVersion;
    env["threads"] = effective_thread_count(0);
    report["environment"] = std::move(env);
    return report;
}

}  // namespace

int run_compute(const ComputeConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.order < 1) {
            err << "error: order must be at least 1\n";
            return 2;
        }
        if (config.methods.empty()) {
            err << "error: no methods selected\n";
            return 2;
        }
        // Canonical order, duplicates dropped.
        std::vector<Method> methods;
        for (Method m : kAllMethods)
            if (std::find(config.methods.begin(), config.methods.end(), m) !=
                    config.methods.end() &&
                std::find(methods.begin(), methods.end(), m) == methods.end())
                methods.push_back(m);
        for (Method m : methods)
            if ((m == Method::bass || m == Method::ihara) && config.order < 2) {
                err << "error: " << method_name(m) << " requires order >= 2\n";
                return 2;
            }

        const Graph g = Graph::from_file(config.input_path);

        std::vector<ZetaResult> results;
        bool agreement = true;
        std::optional<Discrepancy> disc;
        if (methods.size() == 1) {
            results.push_back(run_method(methods.front(), g, config.order));
        } else {
            ComparisonReport rep = compare_methods(g, config.order, methods);
            results = std::move(rep.results);
            agreement = rep.agreement;
            disc = rep.first_discrepancy;
        }

        const ordered_json report = build_report(g, config.order, results, agreement, disc);
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file) {
                err << "error: cannot open output file '" << *config.output_path << "'\n";
                return 2;
            }
            file << report.dump(2) << "\n";
        } else {
            out << report.dump(2) << "\n";
        }
        if (!agreement && disc) {
            err << "disagreement at degree " << disc->degree << ": " << method_name(disc->method_a)
                << " gives " << disc->value_a << ", " << method_name(disc->method_b) << " gives "
                << disc->value_b << "\n";
        }
        return agreement ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qzeta
