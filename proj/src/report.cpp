#include "eppo/report.hpp"

#include "eppo/errors.hpp"

namespace eppo {

void RunConfig::validate() const {
    if (enumeration_threshold == 0 || pairwise_threshold == 0)
        throw PreconditionError("config: thresholds must be positive");
}

void write_run_config(RecordWriter& w, const RunConfig& config, const std::string& command) {
    w.begin("run-config");
    w.field("command", command);
    w.field("enumeration-threshold", config.enumeration_threshold);
    w.field("pairwise-threshold", config.pairwise_threshold);
    w.field("sample-n", config.sample_n);
    w.field("seed", config.seed);
    w.field("skip-sampled", config.skip_sampled);
    w.end();
}

}  // namespace eppo
