// errors.hpp
//
// Error codes and the exception type shared by all diffspec modules.

#ifndef DIFFSPEC_ERRORS_HPP
#define DIFFSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diffspec {

enum class errc {
    reducible_modulus,
    degree_mismatch,
    not_in_subfield,
    t_out_of_range,
    zero_input,
    field_too_large,
    non_integer_result,
    unsupported_params,
    zero_constant,
    precondition_not_met,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace diffspec

#endif
