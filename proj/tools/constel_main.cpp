// constel: command-line front end for the branched-cover engine.
//
// Exit codes: 0 success/valid, 1 validation or identity failure,
// 2 parse/input error, 3 search cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "constel/catalog.hpp"
#include "constel/constellation.hpp"
#include "constel/errors.hpp"
#include "constel/hurwitz.hpp"
#include "constel/io.hpp"
#include "constel/ledger.hpp"
#include "constel/perm.hpp"
#include "constel/report.hpp"
#include "constel/surface_map.hpp"

namespace {

using namespace constel;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Constellation load_constellation(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_constellation(in);
}

LabeledMap load_map(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_map(in);
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + output_path);
  out << payload;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& path) {
  std::istringstream in(slurp(path));
  AnyInput any = read_any(in);
  if (std::holds_alternative<Constellation>(any)) {
    const auto& c = std::get<Constellation>(any);
    auto r = validate(c);
    std::cout << "constellation degree " << r.degree << " entries " << r.branch_count
              << "\n";
    std::cout << "product identity " << yesno(r.product_is_identity) << "\n";
    std::cout << "transitive " << yesno(r.transitive) << "\n";
    std::cout << "simple " << yesno(r.simple) << "\n";
    std::cout << "euler characteristic " << r.euler_characteristic << "\n";
    if (r.genus) std::cout << "genus " << *r.genus << "\n";
    std::cout << "valid " << yesno(r.valid()) << "\n";
    for (const auto& msg : r.messages) std::cerr << "note: " << msg << "\n";
    return r.valid() ? 0 : 1;
  }
  const auto& lm = std::get<LabeledMap>(any);
  auto r = validate_map(lm.map);
  std::cout << "map darts " << lm.map.dart_count << "\n";
  std::cout << "involution " << yesno(r.involution_ok) << "\n";
  std::cout << "fixed point free " << yesno(r.fixed_point_free) << "\n";
  std::cout << "connected " << yesno(r.connected) << "\n";
  std::cout << "vertices " << r.vertices << "\n";
  std::cout << "edges " << r.edges << "\n";
  std::cout << "faces " << r.faces << "\n";
  std::cout << "euler characteristic " << r.euler_characteristic << "\n";
  std::cout << "valid " << yesno(r.valid()) << "\n";
  for (const auto& msg : r.messages) std::cerr << "note: " << msg << "\n";
  return r.valid() ? 0 : 1;
}

int cmd_genus(const std::string& path) {
  std::cout << genus(load_constellation(path)) << "\n";
  return 0;
}

int cmd_bundle(int degree, const std::string& output) {
  std::ostringstream os;
  write_constellation(os, bundle_tuple(degree));
  emit(os.str(), output);
  return 0;
}

int cmd_braid(const std::string& path, const std::string& word, const std::string& output) {
  Constellation c = apply_braid_word(load_constellation(path), parse_braid_word(word));
  std::ostringstream os;
  write_constellation(os, c);
  emit(os.str(), output);
  return 0;
}

int cmd_orbit(const std::string& path, std::size_t cap) {
  OrbitSummary s = hurwitz_orbit(load_constellation(path), cap);
  std::cout << "orbit size " << s.size << "\n";
  std::cout << "truncated " << yesno(s.truncated) << "\n";
  return s.truncated ? 3 : 0;
}

int cmd_movie(int degree, const std::string& word, const std::string& output) {
  Movie m = monodromy_movie(degree, parse_braid_word(word));
  std::ostringstream os;
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    os << "frame " << i << "\n";
    write_constellation(os, m.frames[i]);
  }
  os << "final canonical\n";
  write_constellation(os, m.final_canonical);
  os << "closes up " << yesno(m.closes_up) << "\n";
  emit(os.str(), output);
  return 0;
}

int cmd_plumb(const std::string& path, int units, int anchor, const std::string& output) {
  Constellation c = plumb(load_constellation(path), units, anchor);
  std::ostringstream os;
  write_constellation(os, c);
  emit(os.str(), output);
  return 0;
}

int cmd_subdivide(const std::string& path, const std::string& output) {
  LabeledMap lm = barycentric_subdivide(load_map(path).map);
  std::ostringstream os;
  write_map(os, lm);
  emit(os.str(), output);
  return 0;
}

int cmd_flip(const std::string& path, int edge, const std::string& output) {
  CombinatorialMap flipped = edge_flip(load_map(path).map, edge);
  std::ostringstream os;
  write_map(os, flipped);
  emit(os.str(), output);
  return 0;
}

int cmd_quads(const std::string& path) {
  QuadReport r = validate_quadrangulation(load_map(path));
  std::cout << "quadrangulation valid " << yesno(r.valid()) << "\n";
  if (r.map_valid) {
    std::cout << "q " << r.quads << "\n";
    std::cout << "v " << r.vertices << "\n";
    std::cout << "chi " << r.euler_characteristic << "\n";
    std::cout << "identity[q = v - chi] " << (r.identity_holds ? "holds" : "fails") << "\n";
  }
  for (const auto& msg : r.messages) std::cerr << "note: " << msg << "\n";
  return r.valid() && r.identity_holds ? 0 : 1;
}

int cmd_match(const std::string& path) {
  Matching m = dual_matching(load_map(path));
  std::cout << "matching perfect " << yesno(m.perfect()) << "\n";
  for (auto [a, b] : m.pairs) std::cout << "pair " << a << " " << b << "\n";
  for (int f : m.unmatched) std::cout << "unmatched " << f << "\n";
  return m.perfect() ? 0 : 1;
}

int cmd_merge(const std::string& path, const std::string& output) {
  LabeledMap lm = load_map(path);
  Matching m = dual_matching(lm);
  if (!m.perfect()) {
    std::cerr << "note: no perfect matching; " << m.unmatched.size()
              << " faces uncovered\n";
    return 1;
  }
  LabeledMap merged = merge_to_hexagons(lm, m);
  std::ostringstream os;
  write_map(os, merged);
  emit(os.str(), output);
  return 0;
}

/// The full pipeline.  Triangulations are barycentrically subdivided first;
/// maps already carrying {0,1} labels (quadrangulations, merged hexagon
/// decompositions) are their own dessins and get the matching constants.
int cmd_belyi(const std::string& path, const std::string& output) {
  LabeledMap lm = load_map(path);
  MapReport mr = validate_map(lm.map);
  if (!mr.valid()) {
    for (const auto& msg : mr.messages) std::cerr << "note: " << msg << "\n";
    return 1;
  }

  bool zero_one = !lm.labels.empty();
  for (const auto& [v, lab] : lm.labels)
    if (lab != 0 && lab != 1) zero_one = false;

  Constellation c;
  LedgerReport checks;
  if (zero_one) {
    c = dessin_constellation(extract_dessin(lm));
    checks.lines.push_back(leaf_euler_check(c));
    checks.lines.push_back(parity_check(c));
    if (mr.vertices % 2 == 0) {
      int y = mr.vertices / 2;
      auto faces = lm.map.face_cycles();
      bool quads = !faces.empty(), hexes = !faces.empty();
      for (const auto& f : faces) {
        quads = quads && f.size() == 4;
        hexes = hexes && f.size() == 6;
      }
      if (quads)
        for (auto& line : quad_constants_check(c, y, mr.euler_characteristic).lines)
          checks.lines.push_back(line);
      if (hexes)
        for (auto& line : hex_constants_check(c, y, mr.euler_characteristic).lines)
          checks.lines.push_back(line);
    }
  } else {
    for (const auto& f : lm.map.face_cycles())
      if (f.size() != 3) {
        std::cerr << "note: belyi pipeline needs a triangulation; face of size "
                  << f.size() << " found\n";
        return 1;
      }
    c = dessin_constellation(extract_dessin(barycentric_subdivide(lm.map)));
    checks.lines.push_back(leaf_euler_check(c));
    checks.lines.push_back(parity_check(c));
    for (auto& line :
         belyi_constants_check(c, mr.vertices, mr.euler_characteristic).lines)
      checks.lines.push_back(line);
  }

  std::ostringstream os;
  write_constellation(os, c);
  emit(os.str(), output);
  for (const auto& line : checks.lines) std::cout << render(line) << "\n";
  return checks.all_passed() ? 0 : 1;
}

int cmd_ledger(const std::string& path, const std::string& form, int y, int chi,
               bool have_leaf_data, bool tsv) {
  Constellation c = load_constellation(path);
  LedgerReport rep;
  rep.lines.push_back(leaf_euler_check(c));
  rep.lines.push_back(parity_check(c));
  if (!form.empty()) {
    if (!have_leaf_data)
      throw ParseError("--form needs both --y and --chi");
    LedgerReport extra;
    if (form == "belyi")
      extra = belyi_constants_check(c, y, chi); // y doubles as the vertex count here
    else if (form == "quad")
      extra = quad_constants_check(c, y, chi);
    else if (form == "hex")
      extra = hex_constants_check(c, y, chi);
    else
      throw ParseError("unknown --form \"" + form + "\" (belyi, quad or hex)");
    for (auto& line : extra.lines) rep.lines.push_back(line);
  }
  for (const auto& line : rep.lines)
    std::cout << (tsv ? render_tsv(line) : render(line)) << "\n";
  return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"branched covers of surfaces: constellations, Hurwitz moves, "
               "Belyi pipelines and counting identities"};
  app.require_subcommand(1);

  std::string path, word, output, form;
  int degree = 2, anchor = 1, edge = 1, y = 0, chi = 0;
  std::size_t cap = 1'000'000;

  auto* validate_cmd = app.add_subcommand("validate", "diagnose a constellation or map file");
  validate_cmd->add_option("file", path, "input file")->required();

  auto* genus_cmd = app.add_subcommand("genus", "genus of a valid constellation");
  genus_cmd->add_option("file", path, "constellation file")->required();

  auto* bundle_cmd = app.add_subcommand("bundle", "surface-bundle tuple of a given degree");
  bundle_cmd->add_option("--degree", degree, "cover degree >= 2")->required();
  bundle_cmd->add_option("--output", output, "write payload to file");

  auto* braid_cmd = app.add_subcommand("braid", "apply a braid word to a constellation");
  braid_cmd->add_option("file", path, "constellation file")->required();
  braid_cmd->add_option("--word", word, "braid word, e.g. \"1 -2 3\"")->required();
  braid_cmd->add_option("--output", output, "write payload to file");

  auto* orbit_cmd = app.add_subcommand("orbit", "Hurwitz orbit of canonical forms");
  orbit_cmd->add_option("file", path, "constellation file")->required();
  orbit_cmd->add_option("--cap", cap, "orbit size cap (default 1000000)");

  auto* movie_cmd = app.add_subcommand("movie", "tuple movie of a braid word on a bundle");
  movie_cmd->add_option("--degree", degree, "cover degree >= 2")->required();
  movie_cmd->add_option("--word", word, "braid word (empty for the bare bundle)");
  movie_cmd->add_option("--output", output, "write payload to file");

  auto* plumb_cmd = app.add_subcommand("plumb", "raise degree along a transversal");
  plumb_cmd->add_option("file", path, "constellation file")->required();
  plumb_cmd->add_option("--degree", degree, "plumbing degree (new sheets)")->required();
  plumb_cmd->add_option("--anchor", anchor, "sheet the new sheets attach to (default 1)");
  plumb_cmd->add_option("--output", output, "write payload to file");

  auto* belyi_cmd = app.add_subcommand("belyi", "Belyi pipeline with ledger checks");
  belyi_cmd->add_option("file", path, "map file")->required();
  belyi_cmd->add_option("--output", output, "write payload to file");

  auto* subdivide_cmd = app.add_subcommand("subdivide", "first barycentric subdivision");
  subdivide_cmd->add_option("file", path, "map file")->required();
  subdivide_cmd->add_option("--output", output, "write payload to file");

  auto* flip_cmd = app.add_subcommand("flip", "2-2 move on a triangulation edge");
  flip_cmd->add_option("file", path, "map file")->required();
  flip_cmd->add_option("--edge", edge, "a dart of the edge to flip")->required();
  flip_cmd->add_option("--output", output, "write payload to file");

  auto* quads_cmd = app.add_subcommand("quads", "validate a bicolored quadrangulation");
  quads_cmd->add_option("file", path, "map file")->required();

  auto* match_cmd = app.add_subcommand("match", "perfect matching of adjacent quadrilaterals");
  match_cmd->add_option("file", path, "map file")->required();

  auto* merge_cmd = app.add_subcommand("merge", "fuse matched quadrilaterals into hexagons");
  merge_cmd->add_option("file", path, "map file")->required();
  merge_cmd->add_option("--output", output, "write payload to file");

  auto* ledger_cmd = app.add_subcommand("ledger", "counting identities of a constellation");
  ledger_cmd->add_option("file", path, "constellation file")->required();
  auto* form_opt = ledger_cmd->add_option("--form", form, "constants family: belyi, quad or hex");
  auto* y_opt = ledger_cmd->add_option("--y", y, "transversal count (or vertex count for belyi)");
  auto* chi_opt = ledger_cmd->add_option("--chi", chi, "leaf Euler characteristic");
  bool tsv = false;
  ledger_cmd->add_flag("--tsv", tsv, "tab-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path);
    if (genus_cmd->parsed()) return cmd_genus(path);
    if (bundle_cmd->parsed()) return cmd_bundle(degree, output);
    if (braid_cmd->parsed()) return cmd_braid(path, word, output);
    if (orbit_cmd->parsed()) return cmd_orbit(path, cap);
    if (movie_cmd->parsed()) return cmd_movie(degree, word, output);
    if (plumb_cmd->parsed()) return cmd_plumb(path, degree, anchor, output);
    if (belyi_cmd->parsed()) return cmd_belyi(path, output);
    if (subdivide_cmd->parsed()) return cmd_subdivide(path, output);
    if (flip_cmd->parsed()) return cmd_flip(path, edge, output);
    if (quads_cmd->parsed()) return cmd_quads(path);
    if (match_cmd->parsed()) return cmd_match(path);
    if (merge_cmd->parsed()) return cmd_merge(path, output);
    if (ledger_cmd->parsed())
      return cmd_ledger(path, form, y, chi,
                        y_opt->count() > 0 && chi_opt->count() > 0, tsv);
    (void)form_opt;
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
