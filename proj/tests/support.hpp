#pragma once

#include <gtest/gtest.h>

#include "latcodes/error.hpp"

template <class Fn>
void expect_error(latcodes::ErrorKind kind, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "no error thrown";
  } catch (const latcodes::Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}
