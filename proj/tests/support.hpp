#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "heegaard/io.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) { return std::string(HEEGAARD_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T expect_value(heegaard::ParseResult<T> r, const std::string& what) {
  if (!r.ok()) {
    std::string msg = what + ":";
    for (const auto& d : r.diagnostics) msg += " " + heegaard::to_string(d);
    throw std::runtime_error(msg);
  }
  return std::move(*r.value);
}

inline heegaard::HeegaardGraph graph(const std::string& name) {
  return expect_value(heegaard::parse_hg(read_fixture(name)), name);
}

inline heegaard::LinkDiagram diagram(const std::string& name, const heegaard::HeegaardGraph& g) {
  return expect_value(heegaard::parse_tgl(read_fixture(name), g), name);
}

inline heegaard::FlatPlat plat(const std::string& name) {
  return expect_value(heegaard::parse_plat(read_fixture(name)), name);
}

}  // namespace support
