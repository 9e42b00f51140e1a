#ifndef OSCALG_ERRORS_HPP
#define OSCALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oscalg {

enum class errc {
    denominator_zero,
    invalid_parameter,
    non_positive_b2,
    not_positive_definite,
    insufficient_moments,
    insufficient_table,
    not_symmetric,
    dimension_mismatch,
    index_out_of_domain,
    truncation_too_small,
    config_invalid,
    not_finite,
    unknown_family,
    malformed_spec,
};

inline const char* errc_name(errc c)
{
    switch (c) {
        case errc::denominator_zero:      return "DenominatorZero";
        case errc::invalid_parameter:     return "InvalidParameter";
        case errc::non_positive_b2:       return "NonPositiveB2";
        case errc::not_positive_definite: return "NotPositiveDefinite";
        case errc::insufficient_moments:  return "InsufficientMoments";
        case errc::insufficient_table:    return "InsufficientTable";
        case errc::not_symmetric:         return "NotSymmetric";
        case errc::dimension_mismatch:    return "DimensionMismatch";
        case errc::index_out_of_domain:   return "IndexOutOfDomain";
        case errc::truncation_too_small:  return "TruncationTooSmall";
        case errc::config_invalid:        return "ConfigInvalid";
        case errc::not_finite:            return "NotFinite";
        case errc::unknown_family:        return "UnknownFamily";
        case errc::malformed_spec:        return "MalformedSpec";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw error(code, what);
}

}  // namespace oscalg

#endif
