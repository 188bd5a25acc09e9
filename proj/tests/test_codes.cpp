// Copyright 2026 The adlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "adlp/codes.hpp"
#include "oracle.hpp"

TEST_SUITE_BEGIN("codes");

TEST_CASE("builtin leung4") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  CHECK(code.n() == 4);
  CHECK(code.M() == 2);
  CHECK(std::abs(code.projector.trace().real() - 2.0) < 1e-12);
  CHECK((code.projector * code.projector - code.projector).cwiseAbs().maxCoeff() < 1e-12);
  // |0>_L lives on 0000 and 1111 with equal weight.
  CHECK(std::abs(std::norm(code.spec.codewords(0, 0)) - 0.5) < 1e-12);
  CHECK(std::abs(std::norm(code.spec.codewords(15, 0)) - 0.5) < 1e-12);
}

TEST_CASE("builtin shor9") {
  const adlp::Code code = adlp::validate(adlp::builtin("shor9"));
  CHECK(code.n() == 9);
  CHECK(code.M() == 2);
  CHECK(std::abs(code.projector.trace().real() - 2.0) < 1e-12);
}

TEST_CASE("builtin trivial codes") {
  const adlp::Code zero = adlp::validate(adlp::builtin("trivial-zero(3)"));
  CHECK(zero.n() == 3);
  CHECK(zero.M() == 1);
  CHECK(std::abs(zero.spec.codewords(0, 0) - std::complex<double>(1, 0)) < 1e-15);
  const adlp::Code one = adlp::validate(adlp::builtin("trivial-one(2)"));
  CHECK(one.n() == 2);
  CHECK(std::abs(one.spec.codewords(3, 0) - std::complex<double>(1, 0)) < 1e-15);
}

TEST_CASE("unknown builtin") {
  CHECK_THROWS_AS(adlp::builtin("leung5"), adlp::CodeError);
  try {
    adlp::builtin("leung5");
  } catch (const adlp::CodeError& e) {
    CHECK(e.kind == adlp::CodeError::UnknownCode);
  }
}

TEST_CASE("validate rejects bad codewords") {
  adlp::CodeSpec spec = adlp::builtin("leung4");
  spec.codewords.col(0) *= 1.1;
  try {
    adlp::validate(spec);
    FAIL("expected a normalization failure");
  } catch (const adlp::CodeError& e) {
    CHECK(e.kind == adlp::CodeError::NotNormalized);
  }

  adlp::CodeSpec dup = adlp::builtin("leung4");
  dup.codewords.col(1) = dup.codewords.col(0);
  try {
    adlp::validate(dup);
    FAIL("expected an orthogonality failure");
  } catch (const adlp::CodeError& e) {
    CHECK(e.kind == adlp::CodeError::NotOrthogonal);
  }
}

TEST_CASE("random codes validate") {
  oracle::GaussianSource gauss(5);
  for (int trial = 0; trial < 5; ++trial) {
    const adlp::Code code = oracle::random_code(3, 2, gauss);
    CHECK(std::abs(code.projector.trace().real() - 2.0) < 1e-10);
  }
}

TEST_CASE("json round trip") {
  const adlp::CodeSpec spec = adlp::builtin("leung4");
  const std::string path = "codes_roundtrip_tmp.json";
  {
    std::ofstream f(path);
    f << adlp::code_to_json(spec);
  }
  const adlp::CodeSpec back = adlp::load_code_json(path);
  std::remove(path.c_str());
  REQUIRE(back.n == spec.n);
  REQUIRE(back.codewords.rows() == spec.codewords.rows());
  REQUIRE(back.codewords.cols() == spec.codewords.cols());
  CHECK((back.codewords - spec.codewords).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("load rejects malformed files") {
  const std::string path = "codes_bad_tmp.json";
  {
    std::ofstream f(path);
    f << "{\"n\": 1, \"codewords\": [[[1, 0]], [[0, 0]], [[0, 0]]]}";
  }
  CHECK_THROWS_AS(adlp::load_code_json(path), adlp::CodeError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(adlp::load_code_json("does_not_exist.json"), adlp::CodeError);
}

TEST_SUITE_END();
