#pragma once

#include "aistriu/reproduce.hpp"

namespace aistriu::test {

inline const FixtureData& fixtures() {
  static const FixtureData data = FixtureData::load(data_dir());
  return data;
}

}  // namespace aistriu::test
