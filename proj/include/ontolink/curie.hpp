#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ontolink {

// Compact ontology identifier of the form PREFIX:ddddddd, e.g. HP:0001251.
// The prefix is one or more uppercase ASCII letters and the digit block is
// always exactly seven characters; parse/str round-trip is the identity.
class Curie {
public:
    static constexpr std::size_t kDigitCount = 7;

    Curie() = default;  // empty sentinel, not a valid identifier

    // Throws std::invalid_argument when either part breaks the invariants.
    Curie(std::string prefix, std::string digits);

    // Returns nullopt unless `text` is exactly PREFIX:ddddddd.
    static std::optional<Curie> parse(std::string_view text);

    const std::string& prefix() const { return prefix_; }
    const std::string& digits() const { return digits_; }
    std::string str() const { return prefix_ + ":" + digits_; }
    bool empty() const { return prefix_.empty(); }

    auto operator<=>(const Curie&) const = default;

private:
    std::string prefix_;
    std::string digits_;
};

}  // namespace ontolink
