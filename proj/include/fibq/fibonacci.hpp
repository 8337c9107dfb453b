// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibq {

/// Exact integer of arbitrary size. Q-matrix entries grow like phi^n, so
/// fixed-width integers overflow for any message beyond a few hundred blocks.
using BigInt = boost::multiprecision::cpp_int;

/// n-th Fibonacci number under F0 = 0, F1 = 1. Exact for any n >= 0.
BigInt fib(int n);

/// n-th power of Q = [[1,1],[1,0]], laid out [[q1,q2],[q3,q4]].
/// By construction q1 = F(n+1), q2 = q3 = F(n), q4 = F(n-1), and the
/// determinant obeys the Cassini identity det(Q^n) = (-1)^n.
struct QMatrix {
    BigInt q1, q2, q3, q4;
    int n = 0;

    BigInt det() const { return q1 * q4 - q2 * q3; }
};

/// Requires n >= 1 (F(-1) is out of scope; the codec never asks for n < 3).
QMatrix q_power(int n);

}  // namespace fibq
