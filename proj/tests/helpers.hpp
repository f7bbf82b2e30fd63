#pragma once

#include <utility>

#include "platbook/errors.hpp"

// true iff fn() throws platbook::Error with exactly the given code
template <typename Fn>
inline bool fails_with(platbook::errc code, Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const platbook::Error& e) {
        return e.code() == code;
    } catch (...) {
        return false;
    }
    return false;
}
