#pragma once

#include <cstdint>
#include <string>

namespace eppo {

/// Run-wide knobs. The seed is echoed in every report so sampled results
/// can be reproduced exactly.
struct RunConfig {
    uint64_t enumeration_threshold = 1ull << 21;
    uint64_t pairwise_threshold = 1ull << 12;
    uint64_t sample_n = 100000;
    uint64_t seed = 20110800;
    enum class Format { text, records } format = Format::text;
    bool skip_sampled = false;

    void validate() const;
};

}  // namespace eppo
