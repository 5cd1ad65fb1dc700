#ifndef TAMESTRAT_TESTS_TESTUTIL_HPP
#define TAMESTRAT_TESTS_TESTUTIL_HPP

#include <functional>
#include <string>

#include "tamestrat/error.hpp"

namespace tamestrat::testutil {

// true iff f throws an Error carrying exactly this code
inline bool throws_code(const std::function<void()>& f, const std::string& code) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    } catch (...) {
        return false;
    }
    return false;
}

} // namespace tamestrat::testutil

#endif
