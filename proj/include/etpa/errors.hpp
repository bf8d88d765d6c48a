#ifndef ETPA_ERRORS_HPP
#define ETPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etpa {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// level_model
struct zero_dipole_vector : error { using error::error; };
struct boundary_level : error { using error::error; };

// freq_domain
struct pole_on_grid : error { using error::error; };
struct in_band_level_present : error { using error::error; };
struct band_violation : error { using error::error; };

// special_functions / input validation
struct domain_error : error { using error::error; };

// quadrature / numeric_oracle
struct quadrature_not_converged : error { using error::error; };
struct pole_in_band : error { using error::error; };

// config parsing
struct config_error : error { using error::error; };

}  // namespace etpa

#endif
