#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "taxmine/table.hpp"

namespace fixture {

/// The bundled headache example shipped with the project.
inline std::string headache_csv_path() {
  return std::string(TAXMINE_DATA_DIR) + "/headache.csv";
}

inline taxmine::DecisionTable headache_table() {
  std::ifstream in(headache_csv_path(), std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return taxmine::DecisionTable::from_csv(buffer.str());
}

}  // namespace fixture
