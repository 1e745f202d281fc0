#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ntrans/quiver.hpp"

#ifndef NTRANS_TESTDATA_DIR
#error "NTRANS_TESTDATA_DIR must point at the sample quiver files"
#endif

inline std::string testdata_text(const std::string& name) {
  std::string path = std::string(NTRANS_TESTDATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ntrans::BoundQuiver load_testdata(const std::string& name) {
  return ntrans::parse_quiver(testdata_text(name));
}
