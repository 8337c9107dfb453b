// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/fibonacci.hpp"

#include <utility>

#include "fibq/error.hpp"

namespace fibq {

BigInt fib(int n) {
    if (n < 0) {
        throw CodecError(errc::bad_argument, "fib: index must be nonnegative");
    }
    BigInt prev = 0;  // F(i)
    BigInt cur = 1;   // F(i+1)
    while (n-- > 0) {
        prev += cur;
        std::swap(prev, cur);
    }
    return prev;
}

QMatrix q_power(int n) {
    if (n < 1) {
        throw CodecError(errc::bad_argument, "q_power: exponent must be at least 1");
    }
    BigInt prev = 0;  // F(i-1)
    BigInt cur = 1;   // F(i)
    for (int i = 1; i < n; ++i) {
        prev += cur;
        std::swap(prev, cur);
    }
    BigInt next = prev + cur;  // F(n+1)
    return QMatrix{std::move(next), cur, cur, std::move(prev), n};
}

}  // namespace fibq
