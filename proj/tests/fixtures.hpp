#pragma once

#include "logcy/pair_io.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(LOGCY_DATA_DIR) + "/" + name; }

inline logcy::PairData load_data(const std::string& name) { return logcy::parse_pair(logcy::read_json_file(data_path(name))); }

inline logcy::LogCY3Pair load(const std::string& name) { return logcy::LogCY3Pair(load_data(name)); }

inline std::vector<std::string> pair_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(LOGCY_DATA_DIR)) {
    std::string n = e.path().filename().string();
    if (n.size() > 10 && n.ends_with(".pair.json") && !n.starts_with("bad_")) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> toric_files() {
  std::vector<std::string> out;
  for (const auto& n : pair_files())
    if (load_data(n).program.empty()) out.push_back(n);
  return out;
}

inline logcy::GaussianRational q(const char* s) { return logcy::GaussianRational::parse(s); }

inline logcy::PairData p3() {
  logcy::PairData d;
  d.fan = logcy::Fan3::projective_space();
  return d;
}

// Conic 2H in D_3 of P^3 meeting D_0, D_1, D_2 in two points each.
inline logcy::PairData p3_conic() {
  logcy::PairData d = p3();
  logcy::CurveBlowup c;
  c.component = 3;
  c.cls.boundary = {{0, 2}};
  c.points = {{0, {q("2"), q("3")}}, {1, {q("5"), q("7")}}, {2, {q("1/6"), q("1/35")}}};
  d.program.push_back(c);
  return d;
}

inline logcy::IntVector random_vector(std::size_t n, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  logcy::IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline logcy::IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, long lo = -4, long hi = 4) {
  std::vector<logcy::IntVector> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vector(c, rng, lo, hi));
  return logcy::IntMatrix::from_rows(rows, c);
}

inline logcy::PicVector random_pic(const logcy::LogCY3Pair& p, std::mt19937_64& rng) {
  return logcy::PicVector(random_vector(p.rank(), rng), logcy::PicTag::threefold());
}

}  // namespace fixtures
