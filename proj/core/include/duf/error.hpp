#ifndef DUF_ERROR_HPP
#define DUF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace duf {

enum class errc {
    modulus_error,
    division_by_zero,
    order_error,
    degenerate_equation,
    zero_direction,
    not_t_alpha_invariant,
    degenerate_leading,
    zero_polynomial,
    undefined_resultant,
    not_a_polynomial_map,
    unsupported_degree,
    field_too_large,
    not_odd,
    not_odd_prime,
    ineligible_prime,
    m_not_member,
    scale_error,
    invalid_argument,
};

const char* errc_name(errc c) noexcept;

/// Library-wide exception; `code()` identifies the contract violation.
class Error : public std::runtime_error {
  public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace duf

#endif
