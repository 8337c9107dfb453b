// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "fibq/error.hpp"
#include "fibq/fibonacci.hpp"

using namespace fibq;

TEST_SUITE("fibonacci") {

TEST_CASE("fib small values") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(4) == 3);
    CHECK(fib(5) == 5);
    CHECK(fib(10) == 55);
}

TEST_CASE("fib recurrence holds through n = 500") {
    BigInt prev = fib(0);
    BigInt cur = fib(1);
    for (int n = 0; n <= 500; ++n) {
        const BigInt next = fib(n + 2);
        CHECK(next == cur + prev);
        prev = cur;
        cur = next;
    }
}

TEST_CASE("fib is monotone, strictly from n = 2") {
    for (int n = 0; n <= 500; ++n) {
        CHECK(fib(n + 1) >= fib(n));
    }
    for (int n = 2; n <= 500; ++n) {
        CHECK(fib(n + 1) > fib(n));
    }
}

TEST_CASE("fib rejects negative indices") {
    CHECK_THROWS_AS(fib(-1), CodecError);
}

TEST_CASE("fib scales well past 64 bits") {
    // F(10000) has 2090 decimal digits (n*log10(phi) - log10(sqrt 5), +1).
    CHECK(fib(10000).str().size() == 2090);
}

TEST_CASE("q_power known matrices") {
    const QMatrix q1 = q_power(1);
    CHECK(q1.q1 == 1);
    CHECK(q1.q2 == 1);
    CHECK(q1.q3 == 1);
    CHECK(q1.q4 == 0);

    const QMatrix q3 = q_power(3);
    CHECK(q3.q1 == 3);
    CHECK(q3.q2 == 2);
    CHECK(q3.q3 == 2);
    CHECK(q3.q4 == 1);

    const QMatrix q4 = q_power(4);
    CHECK(q4.q1 == 5);
    CHECK(q4.q2 == 3);
    CHECK(q4.q3 == 3);
    CHECK(q4.q4 == 2);
    CHECK(q4.n == 4);
}

TEST_CASE("q_power entries are consecutive Fibonacci numbers") {
    for (int n = 1; n <= 200; ++n) {
        const QMatrix q = q_power(n);
        CHECK(q.q1 == fib(n + 1));
        CHECK(q.q2 == fib(n));
        CHECK(q.q3 == q.q2);
        CHECK(q.q4 == fib(n - 1));
    }
}

TEST_CASE("q_power satisfies the matrix recurrence Q^(n+1) = Q * Q^n") {
    for (int n = 1; n <= 200; ++n) {
        const QMatrix q = q_power(n);
        const QMatrix next = q_power(n + 1);
        CHECK(next.q1 == q.q1 + q.q3);
        CHECK(next.q2 == q.q2 + q.q4);
        CHECK(next.q3 == q.q1);
        CHECK(next.q4 == q.q2);
    }
}

TEST_CASE("Cassini identity det(Q^n) = (-1)^n") {
    for (int n = 1; n <= 500; ++n) {
        const BigInt expected = n % 2 == 0 ? 1 : -1;
        CHECK(q_power(n).det() == expected);
    }
}

TEST_CASE("q_power rejects exponents below 1") {
    CHECK_THROWS_AS(q_power(0), CodecError);
    CHECK_THROWS_AS(q_power(-3), CodecError);
    try {
        q_power(0);
    } catch (const CodecError& e) {
        CHECK(e.code() == errc::bad_argument);
    }
}

}  // TEST_SUITE
