#pragma once

#include "atfkit/atbd.hpp"
#include "atfkit/orbifold.hpp"

#include <json.hpp>

#include <string>

namespace atf {

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Integers are written as decimal strings; readers also accept JSON numbers.
nlohmann::json int_to_json(const Int& n);
Int int_from_json(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const LatticeVec& v);
LatticeVec vec_from_json(const nlohmann::json& j);

nlohmann::json diagram_to_json(const ATBD& d);
ATBD diagram_from_json(const nlohmann::json& j);

// Byte-stable text: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);
std::string write_diagram(const ATBD& d);
ATBD read_diagram(const std::string& text);
ATBD load_diagram(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

nlohmann::json profile_to_json(const Profile& p);
nlohmann::json orbifold_to_json(const LimitOrbifold& o);
nlohmann::json matrix_to_json(const IntersectionMatrix& m);
nlohmann::json hull_to_json(const HullPolygon& h);

}  // namespace atf
