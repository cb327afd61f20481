#ifndef FFGENUS_ERRORS_HPP
#define FFGENUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffgenus {

/// Input does not satisfy the documented schema or an operation's precondition.
class schema_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force computation would exceed its configured size cap.
class cap_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A Kummer radicand whose exponents are all multiples of the radical degree.
class trivial_extension : public schema_error {
   public:
    using schema_error::schema_error;
};

/// Two routes that must agree by a theorem disagreed. Never recoverable.
class consistency_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace ffgenus

#endif
