#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "eppo/config.hpp"

namespace eppo {

/**
 * Line-oriented key/value records: one "key: value" line per field,
 * records separated by blank lines, the first field naming the record
 * type. Deliberately flat so fixtures diff cleanly; identical inputs
 * (source, config, seed) produce byte-identical output.
 */
class RecordWriter {
public:
    void begin(const std::string& record_type) {
        if (open_) end();
        out_ << "record: " << record_type << "\n";
        open_ = true;
    }

    void field(const std::string& key, const std::string& value) {
        out_ << key << ": " << value << "\n";
    }
    void field(const std::string& key, const char* value) { field(key, std::string(value)); }
    void field(const std::string& key, uint64_t value) { field(key, std::to_string(value)); }
    void field(const std::string& key, uint32_t value) { field(key, std::to_string(value)); }
    void field(const std::string& key, int value) { field(key, std::to_string(value)); }
    void field(const std::string& key, bool value) {
        field(key, value ? std::string("true") : std::string("false"));
    }
    template <typename T>
    void field(const std::string& key, const std::vector<T>& values) {
        std::ostringstream line;
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) line << ' ';
            line << values[i];
        }
        field(key, line.str());
    }

    void end() {
        if (open_) out_ << "\n";
        open_ = false;
    }

    std::string str() {
        if (open_) end();
        return out_.str();
    }

private:
    std::ostringstream out_;
    bool open_ = false;
};

/// The header record every command emits: the config with its seed.
void write_run_config(RecordWriter& w, const RunConfig& config, const std::string& command);

}  // namespace eppo
