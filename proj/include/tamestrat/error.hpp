#ifndef TAMESTRAT_ERROR_HPP
#define TAMESTRAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tamestrat {

// Carries a stable machine-readable code next to the human message.
// Codes are the contract error names (FieldMismatch, NotUnit, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace tamestrat

#endif
