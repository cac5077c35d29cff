#pragma once

#include "doctest.h"
#include "dtriples/error.hpp"

// Runs expr and checks that it throws dtriples::Error of the given kind.
#define CHECK_THROWS_KIND(expr, k)                               \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const dtriples::Error& e_) {                        \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.kind() == (k), e_.what());                \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected an exception from " #expr); \
  } while (0)
