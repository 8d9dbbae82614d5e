#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eppo/catalog.hpp"
#include "eppo/config.hpp"
#include "eppo/constructors.hpp"
#include "eppo/eppo_check.hpp"
#include "eppo/errors.hpp"
#include "eppo/group_io.hpp"
#include "eppo/perm_dense.hpp"
#include "eppo/report.hpp"
#include "eppo/spectrum.hpp"
#include "eppo/structure.hpp"
#include "eppo/verify.hpp"

namespace {

using namespace eppo;

constexpr int kExitEppo = 0;
constexpr int kExitNotEppo = 1;
constexpr int kExitError = 2;

struct GroupHandle {
    std::string source;
    std::shared_ptr<const PermGroup> perm;
    std::shared_ptr<const FiniteGroup> table;

    uint64_t order() const { return perm ? perm->order() : table->order(); }
};

/// Sources: file:<path>, matfile:<path>, catalog:<name>, or a constructor
/// spec string ("metacyclic p=5 a=1 q=2 b=2 r=4", "genquat n=3", ...).
GroupHandle resolve_source(const std::vector<std::string>& words) {
    if (words.empty()) throw ParseError("no group source given");
    std::string joined;
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) joined += ' ';
        joined += words[i];
    }
    GroupHandle h;
    h.source = joined;
    if (joined.rfind("file:", 0) == 0) {
        h.perm = std::make_shared<PermGroup>(read_group_file(joined.substr(5)));
    } else if (joined.rfind("matfile:", 0) == 0) {
        const auto def = read_matrix_group_file(joined.substr(8));
        h.table = std::make_shared<MatrixClosureGroup>(def.generators, 1 << 20);
    } else if (joined.rfind("catalog:", 0) == 0) {
        h.perm = std::make_shared<PermGroup>(build_catalog_group(joined.substr(8)));
    } else {
        h.table = build_from_spec_string(joined);
    }
    return h;
}

std::string spectrum_values(const Spectrum& s) {
    std::ostringstream out;
    for (size_t i = 0; i < s.orders.size(); ++i) {
        if (i) out << ' ';
        out << s.orders[i];
    }
    return out.str();
}

void emit_witness_records(RecordWriter& w, const EppoVerdict& v) {
    if (!v.witness) return;
    std::ostringstream line;
    for (size_t i = 0; i < v.witness->elements.size(); ++i) {
        if (i) line << " | ";
        line << v.witness->elements[i].first << " order " << v.witness->elements[i].second;
    }
    w.field("witness", line.str());
    w.field("witness-note", v.witness->note);
}

int cmd_check(const GroupHandle& h, const RunConfig& config) {
    std::vector<EppoVerdict> verdicts;
    Spectrum spec;
    bool sampled = false;

    std::shared_ptr<const FiniteGroup> dense = h.table;
    if (h.perm && h.perm->order() <= config.enumeration_threshold)
        dense = std::make_shared<PermDenseGroup>(*h.perm, config.enumeration_threshold);

    if (dense) {
        spec = spectrum_of(*dense);
        verdicts =
            all_applicable_eppo_checks(*dense, config.enumeration_threshold,
                                       config.pairwise_threshold);
    } else {
        if (config.skip_sampled)
            throw ThresholdError(h.perm->order(), config.enumeration_threshold,
                                 "check with --skip-sampled");
        sampled = true;
        spec = spectrum_sampled(*h.perm, config.sample_n, config.seed);
        verdicts.push_back(is_eppo_sampled(*h.perm, config.sample_n, config.seed));
    }
    const EppoVerdict& head = verdicts.front();

    if (config.format == RunConfig::Format::records) {
        RecordWriter w;
        write_run_config(w, config, "check");
        w.begin("eppo-check");
        w.field("source", h.source);
        w.field("order", h.order());
        w.field("spectrum", spectrum_values(spec));
        w.field("spectrum-sampled", sampled);
        w.field("all-prime-power", spec.all_prime_power);
        for (const auto& v : verdicts)
            w.field("verdict-" + to_string(v.method),
                    v.is_eppo ? (v.definitive ? "eppo" : "sampled-consistent") : "not-eppo");
        emit_witness_records(w, head);
        w.field("result", head.is_eppo ? (head.definitive ? "eppo" : "sampled-consistent")
                                       : "not-eppo");
        std::cout << w.str();
    } else {
        std::cout << "group: " << h.source << " (order " << h.order() << ")\n";
        std::cout << "spectrum: " << spec.to_string() << (sampled ? " (sampled)" : "") << "\n";
        for (const auto& v : verdicts)
            std::cout << "verdict[" << to_string(v.method) << "]: " << v.summary() << "\n";
        std::cout << "seed: " << config.seed << "\n";
    }
    return head.is_eppo ? kExitEppo : kExitNotEppo;
}

int cmd_spectrum(const GroupHandle& h, const RunConfig& config) {
    Spectrum spec;
    bool sampled = false;
    if (h.table) {
        spec = spectrum_of(*h.table);
    } else if (h.perm->order() <= config.enumeration_threshold) {
        spec = spectrum_of(*h.perm, config.enumeration_threshold);
    } else {
        if (config.skip_sampled)
            throw ThresholdError(h.perm->order(), config.enumeration_threshold,
                                 "spectrum with --skip-sampled");
        sampled = true;
        spec = spectrum_sampled(*h.perm, config.sample_n, config.seed);
    }
    if (config.format == RunConfig::Format::records) {
        RecordWriter w;
        write_run_config(w, config, "spectrum");
        w.begin("spectrum");
        w.field("source", h.source);
        w.field("order", h.order());
        w.field("orders", spectrum_values(spec));
        w.field("sampled", sampled);
        w.field("all-prime-power", spec.all_prime_power);
        std::cout << w.str();
    } else {
        std::cout << "group: " << h.source << " (order " << h.order() << ")\n";
        std::cout << "spectrum: " << spec.to_string() << (sampled ? " (sampled)" : "") << "\n";
        std::cout << "seed: " << config.seed << "\n";
    }
    return kExitEppo;
}

int cmd_classify(const GroupHandle& h, const RunConfig& config) {
    ClassificationRecord rec;
    if (h.table) {
        rec = classify(*h.table);
    } else if (h.perm->order() <= config.enumeration_threshold) {
        PermDenseGroup dense(*h.perm, config.enumeration_threshold);
        rec = classify(dense);
    } else {
        if (config.skip_sampled)
            throw ThresholdError(h.perm->order(), config.enumeration_threshold,
                                 "classify with --skip-sampled");
        rec = classify_sampled(*h.perm, config.sample_n, config.seed);
    }
    if (config.format == RunConfig::Format::records) {
        RecordWriter w;
        write_run_config(w, config, "classify");
        w.begin("classification");
        w.field("source", h.source);
        w.field("order", rec.order);
        w.field("verdict", to_string(rec.verdict));
        if (!rec.simple_name.empty()) w.field("simple-name", rec.simple_name);
        w.field("spectrum", spectrum_values(rec.spectrum));
        w.field("solvable", rec.solvable);
        w.field("simple", rec.simple);
        if (rec.chief) w.field("chief-factors", rec.chief->to_string());
        emit_witness_records(w, rec.eppo);
        std::cout << w.str();
    } else {
        std::cout << "group: " << h.source << "\n";
        std::cout << "classification: " << rec.summary() << "\n";
        std::cout << "seed: " << config.seed << "\n";
    }
    return rec.verdict == GroupClass::not_eppo ? kExitNotEppo : kExitEppo;
}

int cmd_catalog_list(const RunConfig& config) {
    if (config.format == RunConfig::Format::records) {
        RecordWriter w;
        write_run_config(w, config, "catalog-list");
        for (const auto& e : simple_eppo_catalog()) {
            w.begin("catalog-entry");
            w.field("name", e.name);
            w.field("order", e.expected_order);
            w.field("degree", e.degree);
            w.field("spectrum", e.expected_spectrum);
            w.field("exhaustive", e.exhaustive);
            w.end();
        }
        std::cout << w.str();
    } else {
        for (const auto& e : simple_eppo_catalog())
            std::cout << e.name << "  order " << e.expected_order << "  degree " << e.degree
                      << "\n";
    }
    return kExitEppo;
}

int cmd_catalog_build(const std::string& name, const std::string& out_path) {
    const PermGroup g = build_catalog_group(name);
    const std::string text = write_group_text(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write to '" + out_path + "'");
        out << text;
        std::cout << "wrote " << name << " (order " << g.order() << ", degree " << g.degree()
                  << ") to " << out_path << "\n";
    }
    return kExitEppo;
}

int run_verify(const RunConfig& config, const std::vector<std::string>& only,
               const std::string& inject) {
    const VerifyRun run = run_verification(config, only, inject);
    if (config.format == RunConfig::Format::records) {
        std::cout << run.records;
    } else {
        for (const auto& r : run.results) std::cout << criterion_line(r) << "\n";
        std::cout << (run.all_pass ? "all criteria passed" : "CRITERIA FAILED") << "\n";
    }
    if (run.all_pass) return kExitEppo;
    for (const auto& r : run.results)
        if (!r.pass) std::cerr << "failed criterion: " << r.id << "\n";
    return kExitNotEppo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite group analysis: prime-power element orders, constructions, catalog"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format = "text";
    app.add_option("--threshold", config.enumeration_threshold,
                   "enumeration threshold (elements)");
    app.add_option("--pairwise-threshold", config.pairwise_threshold,
                   "pairwise-scan threshold (elements)");
    app.add_option("--sample-n", config.sample_n, "sample count for groups above the threshold");
    app.add_option("--seed", config.seed, "PRNG seed (echoed in every report)");
    app.add_option("--format", format, "output format: text or records")
        ->check(CLI::IsMember({"text", "records"}));
    app.add_flag("--skip-sampled", config.skip_sampled, "skip sampled (randomized) checks");

    std::vector<std::string> source;
    auto* check = app.add_subcommand("check", "run all applicable EPPO predicates");
    check->fallthrough();
    check->add_option("source", source, "group source")->required()->expected(-1);
    auto* spectrum = app.add_subcommand("spectrum", "element-order spectrum");
    spectrum->fallthrough();
    spectrum->add_option("source", source, "group source")->required()->expected(-1);
    auto* classify_cmd = app.add_subcommand("classify", "classification verdict");
    classify_cmd->fallthrough();
    classify_cmd->add_option("source", source, "group source")->required()->expected(-1);

    auto* catalog = app.add_subcommand("catalog", "catalog of simple groups");
    catalog->fallthrough();
    auto* cat_list = catalog->add_subcommand("list", "list the catalog");
    cat_list->fallthrough();
    std::string build_name, out_path;
    auto* cat_build = catalog->add_subcommand("build", "emit a catalog group definition file");
    cat_build->fallthrough();
    cat_build->add_option("name", build_name, "catalog name")->required();
    cat_build->add_option("--out", out_path, "output path (default: stdout)");
    auto* cat_verify = catalog->add_subcommand("verify", "verify catalog orders and spectra");
    cat_verify->fallthrough();
    catalog->require_subcommand(1);

    std::vector<std::string> only;
    std::string inject;
    auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
    verify->fallthrough();
    verify->add_option("--only", only, "run only the listed criteria");
    verify->add_option("--inject-failure", inject, "force a failure in the named criterion")
        ->group("");  // test hook, hidden from help

    CLI11_PARSE(app, argc, argv);

    config.format =
        format == "records" ? RunConfig::Format::records : RunConfig::Format::text;

    try {
        config.validate();
        if (*check) return cmd_check(resolve_source(source), config);
        if (*spectrum) return cmd_spectrum(resolve_source(source), config);
        if (*classify_cmd) return cmd_classify(resolve_source(source), config);
        if (*cat_list) return cmd_catalog_list(config);
        if (*cat_build) return cmd_catalog_build(build_name, out_path);
        if (*cat_verify) return run_verify(config, {"c01-catalog"}, "");
        if (*verify) return run_verify(config, only, inject);
    } catch (const ThresholdError& e) {
        std::cerr << "threshold refusal: " << e.what() << "\n";
        return kExitError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
