#pragma once

#include "liecell/errors.hpp"

#include <compare>
#include <cstdlib>
#include <string>

namespace liecell {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Classification label of a simple root-system type. Low-rank coincidences
// are normalized at construction: B2 is canonical (C2 rejected), A3 is
// canonical (D3 rejected).
struct LieType {
  Family family;
  int rank;

  static LieType make(Family f, int r) {
    bool ok = false;
    switch (f) {
      case Family::A: ok = r >= 1; break;
      case Family::B: ok = r >= 2; break;
      case Family::C: ok = r >= 3; break;
      case Family::D: ok = r >= 4; break;
      case Family::E: ok = r >= 6 && r <= 8; break;
      case Family::F: ok = r == 4; break;
      case Family::G: ok = r == 2; break;
    }
    if (!ok)
      throw usage_error("invalid type " + std::string(1, static_cast<char>(f)) +
                        std::to_string(r));
    return LieType{f, r};
  }

  static LieType parse(const std::string& s) {
    if (s.size() < 2) throw usage_error("cannot parse type '" + s + "'");
    char f = s[0];
    char* end = nullptr;
    long r = std::strtol(s.c_str() + 1, &end, 10);
    if (!end || *end != '\0' || r <= 0)
      throw usage_error("cannot parse type '" + s + "'");
    switch (f) {
      case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
        return make(static_cast<Family>(f), static_cast<int>(r));
      default:
        throw usage_error("cannot parse type '" + s + "'");
    }
  }

  std::string str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  auto operator<=>(const LieType&) const = default;
};

// 1-connected group named per the dual convention: A_{n-1} <-> SU(n),
// B_n <-> Sp(n), C_n <-> Spin(2n+1), D_n <-> Spin(2n).
struct GroupId {
  enum class Kind { SU, Sp, Spin, G2, F4, E6, E7, E8 } kind;
  int param = 0;

  std::string str() const {
    switch (kind) {
      case Kind::SU: return "SU(" + std::to_string(param) + ")";
      case Kind::Sp: return "Sp(" + std::to_string(param) + ")";
      case Kind::Spin: return "Spin(" + std::to_string(param) + ")";
      case Kind::G2: return "G2";
      case Kind::F4: return "F4";
      case Kind::E6: return "E6";
      case Kind::E7: return "E7";
      case Kind::E8: return "E8";
    }
    return {};
  }

  auto operator<=>(const GroupId&) const = default;
};

inline GroupId group_of_type(LieType t) {
  switch (t.family) {
    case Family::A: return {GroupId::Kind::SU, t.rank + 1};
    case Family::B: return {GroupId::Kind::Sp, t.rank};
    case Family::C: return {GroupId::Kind::Spin, 2 * t.rank + 1};
    case Family::D: return {GroupId::Kind::Spin, 2 * t.rank};
    case Family::F: return {GroupId::Kind::F4, 4};
    case Family::G: return {GroupId::Kind::G2, 2};
    case Family::E:
      if (t.rank == 6) return {GroupId::Kind::E6, 6};
      if (t.rank == 7) return {GroupId::Kind::E7, 7};
      return {GroupId::Kind::E8, 8};
  }
  throw usage_error("bad type");
}

// Accepts either a type label ("F4", "B3") or a group name ("Sp(3)",
// "Spin(8)"); exceptional isomorphisms in low rank resolve to the canonical
// family.
inline LieType type_of_group_name(const std::string& s) {
  auto paren = s.find('(');
  if (paren == std::string::npos) {
    if (s == "G2") return LieType::make(Family::G, 2);
    if (s == "F4") return LieType::make(Family::F, 4);
    if (s == "E6") return LieType::make(Family::E, 6);
    if (s == "E7") return LieType::make(Family::E, 7);
    if (s == "E8") return LieType::make(Family::E, 8);
    return LieType::parse(s);
  }
  if (s.back() != ')') throw usage_error("cannot parse group '" + s + "'");
  std::string name = s.substr(0, paren);
  int m = std::atoi(s.substr(paren + 1, s.size() - paren - 2).c_str());
  if (name == "SU") {
    if (m < 2) throw usage_error("SU(n) needs n >= 2");
    return LieType::make(Family::A, m - 1);
  }
  if (name == "Sp") {
    if (m == 1) return LieType::make(Family::A, 1);
    if (m < 1) throw usage_error("Sp(n) needs n >= 1");
    return LieType::make(Family::B, m);
  }
  if (name == "Spin") {
    switch (m) {
      case 3: return LieType::make(Family::A, 1);
      case 5: return LieType::make(Family::B, 2);
      case 6: return LieType::make(Family::A, 3);
      default:
        if (m >= 7 && m % 2 == 1) return LieType::make(Family::C, (m - 1) / 2);
        if (m >= 8 && m % 2 == 0) return LieType::make(Family::D, m / 2);
        throw usage_error("Spin(" + std::to_string(m) + ") is not a 1-connected simple group here");
    }
  }
  throw usage_error("cannot parse group '" + s + "'");
}

}  // namespace liecell
