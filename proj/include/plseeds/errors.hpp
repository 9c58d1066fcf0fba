#ifndef PLSEEDS_ERRORS_HPP
#define PLSEEDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plseeds {

// Facet list mixes cardinalities where a pure complex is required.
struct purity_error : std::runtime_error {
    explicit purity_error(const std::string& what) : std::runtime_error(what) {}
};

// A query face is not a face of the complex.
struct not_a_face_error : std::runtime_error {
    explicit not_a_face_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed .cplx / .mat input.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// The seed database lacks a stratum that an inductive check depends on.
struct db_stratum_error : std::runtime_error {
    explicit db_stratum_error(const std::string& what) : std::runtime_error(what) {}
};

// A combination space exceeds the configured candidate cap.
struct cap_exceeded_error : std::runtime_error {
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace plseeds

#endif
