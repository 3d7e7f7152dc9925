#pragma once

#include <stdexcept>
#include <string>

namespace nachbin {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class unknown_element : public error {
public:
    explicit unknown_element(const std::string& label)
        : error("unknown element '" + label + "'"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class duplicate_element : public error {
public:
    explicit duplicate_element(const std::string& label)
        : error("duplicate element '" + label + "'") {}
};

/// Raised when the closure of an order relation has x <= y <= x with x != y.
class antisymmetry_violation : public error {
public:
    antisymmetry_violation(std::string lower, std::string upper)
        : error("antisymmetry violated: " + lower + " <= " + upper + " <= " + lower),
          lower_(std::move(lower)), upper_(std::move(upper)) {}
    const std::string& first() const noexcept { return lower_; }
    const std::string& second() const noexcept { return upper_; }

private:
    std::string lower_;
    std::string upper_;
};

class carrier_mismatch : public error {
public:
    carrier_mismatch() : error("carrier mismatch") {}
    explicit carrier_mismatch(const std::string& what) : error("carrier mismatch: " + what) {}
};

class empty_carrier : public error {
public:
    empty_carrier() : error("empty carrier") {}
};

class not_in_skeleton : public error {
public:
    not_in_skeleton() : error("function is not a member of the skeleton") {}
};

class not_a_morphism : public error {
public:
    explicit not_a_morphism(const std::string& law) : error("morphism law violated: " + law) {}
};

class not_representable : public error {
public:
    not_representable(const std::string& x, const std::string& y)
        : error("function distinguishes equivalent points " + x + " and " + y) {}
};

class not_block_constant : public error {
public:
    not_block_constant() : error("function is not constant on the blocks of the algebra") {}
};

class not_monotone : public error {
public:
    not_monotone() : error("function is not monotone") {}
};

class non_positive_epsilon : public error {
public:
    non_positive_epsilon() : error("epsilon must be positive") {}
};

class no_approximant_within_tolerance : public error {
public:
    no_approximant_within_tolerance()
        : error("no proximal approximant pair found within tolerance") {}
};

class too_large_to_enumerate : public error {
public:
    explicit too_large_to_enumerate(std::size_t n)
        : error("instance with " + std::to_string(n) + " points is too large to enumerate") {}
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace nachbin
