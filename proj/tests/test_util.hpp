#pragma once

#include "doctest.h"
#include "motsq/algebra.hpp"
#include "motsq/tensor.hpp"

namespace doctest {
template <> struct StringMaker<motsq::AlgebraElement> {
    static String convert(const motsq::AlgebraElement& x) { return x.to_string().c_str(); }
};
template <> struct StringMaker<motsq::TensorElement> {
    static String convert(const motsq::TensorElement& x) { return x.to_string().c_str(); }
};
template <> struct StringMaker<motsq::BiDegree> {
    static String convert(const motsq::BiDegree& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
