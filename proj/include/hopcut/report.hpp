#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace hopcut {

// Line-oriented key=value report with a final single-line summary. Reports
// are byte-identical for identical (config, seed): nothing execution-bound
// (wall clock, thread count) is ever written here.
class Report {
public:
    void kv(const std::string& key, const std::string& value) {
        lines_.push_back(key + "=" + value);
    }
    void kv(const std::string& key, uint64_t value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, int64_t value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, double value) {
        std::ostringstream os;
        os.precision(10);
        os << value;
        kv(key, os.str());
    }
    void kv(const std::string& key, bool value) { kv(key, std::string(value ? "1" : "0")); }

    void summary(const std::string& line) { summary_ = line; }

    std::string str() const {
        std::string out;
        for (const auto& l : lines_) {
            out += l;
            out += '\n';
        }
        if (!summary_.empty()) {
            out += "SUMMARY ";
            out += summary_;
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::string> lines_;
    std::string summary_;
};

} // namespace hopcut
