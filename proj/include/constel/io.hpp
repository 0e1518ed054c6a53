#ifndef CONSTEL_IO_HPP
#define CONSTEL_IO_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/errors.hpp"
#include "constel/surface_map.hpp"

namespace constel {

namespace detail {

inline std::string strip_line(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

/// Next significant line (comments and blanks skipped), or nullopt at EOF.
inline std::optional<std::string> next_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip_line(line);
    if (!s.empty()) return s;
  }
  return std::nullopt;
}

inline std::pair<std::string, std::string> split_keyword(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  auto rest = line.find_first_not_of(" \t", sp);
  return {line.substr(0, sp), rest == std::string::npos ? "" : line.substr(rest)};
}

inline int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(text, &pos);
    if (pos != text.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("expected integer for ") + what + ", got \"" + text + "\"");
  }
}

} // namespace detail

/// Parse the line-oriented constellation format:
///   constellation / degree <d> / perm <cycles>... / end
inline Constellation read_constellation(std::istream& in) {
  auto header = detail::next_line(in);
  if (!header || *header != "constellation")
    throw ParseError("expected \"constellation\" header");
  Constellation c;
  bool have_degree = false, ended = false;
  while (auto line = detail::next_line(in)) {
    auto [kw, rest] = detail::split_keyword(*line);
    if (kw == "end") {
      ended = true;
      break;
    }
    if (kw == "degree") {
      if (have_degree) throw ParseError("duplicate degree line");
      c.degree = detail::parse_int(rest, "degree");
      if (c.degree < 1) throw ParseError("degree must be at least 1");
      have_degree = true;
    } else if (kw == "perm") {
      if (!have_degree) throw ParseError("perm line before degree");
      c.tuple.push_back(Perm::parse_cycles(rest, c.degree));
    } else {
      throw ParseError("unknown keyword \"" + kw + "\" in constellation file");
    }
  }
  if (!ended) throw ParseError("missing \"end\"");
  if (!have_degree) throw ParseError("missing degree");
  return c;
}

inline void write_constellation(std::ostream& out, const Constellation& c) {
  out << "constellation\n";
  out << "degree " << c.degree << "\n";
  for (const Perm& p : c.tuple) out << "perm " << p.to_cycles() << "\n";
  out << "end\n";
}

/// Parse the line-oriented map format:
///   map / darts <2E> / alpha <cycles> / sigma <cycles> / label <dart> <l>... / end
/// Labels are optional; a label line names any dart of the vertex it labels.
inline LabeledMap read_map(std::istream& in) {
  auto header = detail::next_line(in);
  if (!header || *header != "map") throw ParseError("expected \"map\" header");
  int darts = 0;
  std::optional<Perm> alpha, sigma;
  std::vector<std::pair<int, int>> raw_labels;
  bool ended = false;
  while (auto line = detail::next_line(in)) {
    auto [kw, rest] = detail::split_keyword(*line);
    if (kw == "end") {
      ended = true;
      break;
    }
    if (kw == "darts") {
      if (darts != 0) throw ParseError("duplicate darts line");
      darts = detail::parse_int(rest, "darts");
      if (darts < 2 || darts % 2 != 0)
        throw ParseError("dart count must be even and positive");
    } else if (kw == "alpha") {
      if (darts == 0) throw ParseError("alpha line before darts");
      if (alpha) throw ParseError("duplicate alpha line");
      alpha = Perm::parse_cycles(rest, darts);
    } else if (kw == "sigma") {
      if (darts == 0) throw ParseError("sigma line before darts");
      if (sigma) throw ParseError("duplicate sigma line");
      sigma = Perm::parse_cycles(rest, darts);
    } else if (kw == "label") {
      if (darts == 0) throw ParseError("label line before darts");
      std::istringstream ls(rest);
      int dart = 0, lab = -1;
      if (!(ls >> dart >> lab)) throw ParseError("label line needs dart and label");
      std::string extra;
      if (ls >> extra) throw ParseError("trailing text on label line");
      if (dart < 1 || dart > darts) throw ParseError("label dart out of range");
      if (lab < 0 || lab > 2) throw ParseError("label must be 0, 1 or 2");
      raw_labels.emplace_back(dart, lab);
    } else {
      throw ParseError("unknown keyword \"" + kw + "\" in map file");
    }
  }
  if (!ended) throw ParseError("missing \"end\"");
  if (darts == 0) throw ParseError("missing darts");
  if (!alpha) throw ParseError("missing alpha");
  if (!sigma) throw ParseError("missing sigma");
  LabeledMap lm;
  lm.map = CombinatorialMap(darts, *alpha, *sigma);
  std::vector<int> vert = vertex_of_dart(lm.map);
  for (auto [dart, lab] : raw_labels) {
    int id = vert[static_cast<std::size_t>(dart)];
    auto [it, fresh] = lm.labels.emplace(id, lab);
    if (!fresh && it->second != lab)
      throw ParseError("conflicting labels for the vertex of dart " + std::to_string(dart));
  }
  return lm;
}

inline void write_map(std::ostream& out, const LabeledMap& lm) {
  out << "map\n";
  out << "darts " << lm.map.dart_count << "\n";
  out << "alpha " << lm.map.alpha.to_cycles() << "\n";
  out << "sigma " << lm.map.sigma.to_cycles() << "\n";
  for (const auto& [vertex, label] : lm.labels)
    out << "label " << vertex << " " << label << "\n";
  out << "end\n";
}

inline void write_map(std::ostream& out, const CombinatorialMap& m) {
  write_map(out, LabeledMap{m, {}});
}

/// Either file format, dispatched on the header keyword.
using AnyInput = std::variant<Constellation, LabeledMap>;

inline AnyInput read_any(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::istringstream peek(text);
  auto header = detail::next_line(peek);
  if (!header) throw ParseError("empty input");
  auto kw = detail::split_keyword(*header).first;
  std::istringstream again(text);
  if (kw == "constellation") return read_constellation(again);
  if (kw == "map") return read_map(again);
  throw ParseError("unrecognized header \"" + kw + "\"");
}

} // namespace constel

#endif
