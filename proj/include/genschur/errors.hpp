#pragma once

#include <stdexcept>
#include <string>

namespace genschur {

// Base for all domain-level failures. The CLI maps these to exit code 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : domain_error { using domain_error::domain_error; };
struct shape_error : domain_error { using domain_error::domain_error; };
struct length_error : domain_error { using domain_error::domain_error; };
struct truncation_error : domain_error { using domain_error::domain_error; };
struct singular_error : domain_error { using domain_error::domain_error; };
struct degeneracy_error : domain_error { using domain_error::domain_error; };
struct incomplete_family_error : domain_error { using domain_error::domain_error; };

} // namespace genschur
