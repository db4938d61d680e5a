#pragma once

#include <stdexcept>
#include <string>

namespace rcdkit {

enum class Errc {
    malformed_document,
    dimension_mismatch,
    not_a_probability,
    index_out_of_range,
    zero_mass_event,
    overlapping_blocks,
    uncovered_states,
    empty_block,
    too_large,
    ambiguous_atoms,
    unknown_law,
    float_mode_refused,
    not_a_counterexample,
    usage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

    // CLI convention: 2 = refused for resource/mode reasons, 1 = bad input or usage.
    int exit_code() const {
        return (code_ == Errc::too_large || code_ == Errc::float_mode_refused) ? 2 : 1;
    }

private:
    Errc code_;
};

}  // namespace rcdkit
