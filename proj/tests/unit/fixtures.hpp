#pragma once

#include <string>

#include "tautilt/algebra.hpp"

inline tautilt::AlgebraPtr fixture(const std::string& name) {
    return tautilt::load_algebra(std::string(TAUTILT_FIXTURES) + "/" + name + ".json");
}
