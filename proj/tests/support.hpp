#pragma once

#include <doctest.h>

#include <gfkit/arith.hpp>

namespace doctest {
template <>
struct StringMaker<gfkit::SqrtRational> {
    static String convert(const gfkit::SqrtRational& v) { return v.str().c_str(); }
};
}  // namespace doctest
