#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repsim::cli {

// Streaming JSON emitter with insertion-ordered keys and 17-significant-digit
// doubles, so reports are byte-stable across runs and platforms.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double number);
    JsonWriter& value(std::uint64_t number);
    JsonWriter& value(int number);
    JsonWriter& value(bool flag);
    JsonWriter& value(std::string_view text);
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void before_value();
    void newline_indent();

    std::string out_;
    std::vector<bool> has_items_;  // per open container
    bool pending_key_ = false;
};

} // namespace repsim::cli
