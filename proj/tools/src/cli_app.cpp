#include "cli_app.hpp"

#include "eafc/artin_system.hpp"
#include "eafc/decompose.hpp"
#include "eafc/dihedral.hpp"
#include "eafc/graph_json.hpp"
#include "eafc/kernel_omega.hpp"
#include "eafc/snf.hpp"
#include "eafc/subgroups.hpp"
#include "eafc/word_problem.hpp"
#include "eafc/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eafc::cli {

namespace {

using nlohmann::ordered_json;

// ----- small helpers ---------------------------------------------------

ordered_json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(to_ll(v));
  return v.str();
}

std::string subset_names(const ArtinSystem& sys, const VertexSubset& S) {
  std::string out = "{";
  for (size_t i = 0; i < S.idx.size(); ++i) {
    if (i) out += ", ";
    out += sys.name(S.idx[i]);
  }
  return out + "}";
}

ordered_json subset_json(const ArtinSystem& sys, const VertexSubset& S) {
  ordered_json arr = ordered_json::array();
  for (int v : S.idx) arr.push_back(sys.name(v));
  return arr;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

VertexSubset parse_subset(const ArtinSystem& sys, const std::string& names) {
  return VertexSubset::of(sys, split_commas(names));
}

// Orientation file format:
//   {"edges": [{"u":"a","v":"b","b_role":"b"}, ...]}
// Listed edges get the named endpoint as the tracked (nonzero-residue) side;
// unlisted edges keep the default orientation.
G0Map orientation_from_file(const ArtinSystem& sys, const std::string& path) {
  G0Map map = G0Map::defaults(sys);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open orientation file '" + path + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw input_error(std::string("orientation file: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("orientation document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "edges")
      throw input_error("unknown field '" + it.key() + "' in orientation document");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw input_error("orientation document needs an 'edges' array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw input_error("orientation entries must be objects");
    for (auto it = e.begin(); it != e.end(); ++it)
      if (it.key() != "u" && it.key() != "v" && it.key() != "b_role")
        throw input_error("unknown field '" + it.key() + "' in orientation entry");
    if (!e.contains("u") || !e.contains("v") || !e.contains("b_role") ||
        !e["u"].is_string() || !e["v"].is_string() || !e["b_role"].is_string())
      throw input_error("orientation entry needs string fields u, v, b_role");
    int u = sys.index_of(e["u"].get<std::string>());
    int v = sys.index_of(e["v"].get<std::string>());
    if (!sys.adjacent(u, v))
      throw input_error("orientation entry names a non-edge " + e["u"].get<std::string>() +
                        "-" + e["v"].get<std::string>());
    int idx = sys.edge_index(u, v);
    std::string role = e["b_role"].get<std::string>();
    int r = sys.index_of(role);
    if (r != u && r != v)
      throw input_error("b_role '" + role + "' is not an endpoint of edge " +
                        e["u"].get<std::string>() + "-" + e["v"].get<std::string>());
    map.b_role[idx] = r;
  }
  return map;
}

G0Map orientation_from_flags(const ArtinSystem& sys, const std::vector<std::string>& b_roles,
                             const std::string& file = "") {
  G0Map map = file.empty() ? G0Map::defaults(sys) : orientation_from_file(sys, file);
  if (b_roles.empty()) return map;
  std::vector<char> wanted(sys.vertex_count(), 0);
  for (const std::string& name : b_roles) wanted[sys.index_of(name)] = 1;
  for (size_t e = 0; e < sys.edges().size(); ++e) {
    const Edge& ed = sys.edges()[e];
    bool wu = wanted[ed.u], wv = wanted[ed.v];
    if (wu && wv)
      throw input_error("conflicting orientation: both endpoints of edge " + sys.name(ed.u) +
                        "-" + sys.name(ed.v) + " were requested as the tracked side");
    if (wu) map.b_role[e] = ed.u;
    if (wv) map.b_role[e] = ed.v;
  }
  return map;
}

// Shared state for one invocation.
struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  std::string graph_path;
  std::unique_ptr<ArtinSystem> sys;
  int exit_code = 0;

  const ArtinSystem& graph() {
    if (!sys) sys = std::make_unique<ArtinSystem>(load_graph_file(graph_path));
    return *sys;
  }
  void emit(const ordered_json& j) { out << j.dump(2) << "\n"; }
};

// ----- decomposition printing ------------------------------------------

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::FreeProduct: return "free_product";
    case NodeKind::DirectProduct: return "direct_product";
    case NodeKind::CompleteBase: return "complete";
    case NodeKind::Amalgam: return "amalgam";
  }
  return "?";
}

std::string factor_text(const ArtinSystem& sys, const CompleteFactor& f) {
  if (f.kind == CompleteFactor::Dihedral)
    return "dihedral(" + sys.name(f.u) + ", " + sys.name(f.v) + "; n=" + std::to_string(f.n) + ")";
  return "cyclic(" + sys.name(f.u) + ")";
}

void print_tree(Ctx& c, const ArtinSystem& sys, const DecompositionNode& node, int depth) {
  std::string indent(static_cast<size_t>(depth) * 2, ' ');
  c.out << indent << kind_name(node.kind) << " on " << subset_names(sys, node.vertices);
  switch (node.kind) {
    case NodeKind::CompleteBase: {
      c.out << ":";
      for (const auto& f : node.factors) c.out << " " << factor_text(sys, f);
      c.out << "\n";
      break;
    }
    case NodeKind::Amalgam:
      c.out << ": apex " << sys.name(node.apex) << ", edge group "
            << subset_names(sys, node.link) << "\n";
      break;
    default:
      c.out << " (" << node.children.size() << " factors)\n";
      break;
  }
  for (const auto& ch : node.children) print_tree(c, sys, ch, depth + 1);
}

ordered_json tree_json(const ArtinSystem& sys, const DecompositionNode& node) {
  ordered_json j;
  j["kind"] = kind_name(node.kind);
  j["vertices"] = subset_json(sys, node.vertices);
  switch (node.kind) {
    case NodeKind::CompleteBase: {
      ordered_json fs = ordered_json::array();
      for (const auto& f : node.factors) {
        ordered_json fj;
        if (f.kind == CompleteFactor::Dihedral) {
          fj["kind"] = "dihedral";
          fj["u"] = sys.name(f.u);
          fj["v"] = sys.name(f.v);
          fj["n"] = f.n;
        } else {
          fj["kind"] = "cyclic";
          fj["u"] = sys.name(f.u);
        }
        fs.push_back(std::move(fj));
      }
      j["factors"] = std::move(fs);
      break;
    }
    case NodeKind::Amalgam:
      j["apex"] = sys.name(node.apex);
      j["edge_group"] = subset_json(sys, node.link);
      break;
    default:
      break;
  }
  if (!node.children.empty()) {
    ordered_json ch = ordered_json::array();
    for (const auto& child : node.children) ch.push_back(tree_json(sys, child));
    j["children"] = std::move(ch);
  }
  return j;
}

// ----- matrix input for snf ---------------------------------------------

IntMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open matrix file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw input_error("matrix file '" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw input_error("matrix file must be an object with an \"entries\" array of rows");
  const auto& rows = j["entries"];
  int r = static_cast<int>(rows.size());
  int c = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw input_error("matrix rows must be arrays");
    c = std::max(c, static_cast<int>(row.size()));
  }
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != c)
      throw input_error("matrix rows must all have the same length");
    for (int k = 0; k < c; ++k) {
      const auto& cell = row[static_cast<size_t>(k)];
      if (cell.is_number_integer())
        m.at(i, k) = cell.get<long long>();
      else if (cell.is_string())
        m.at(i, k) = Int(cell.get<std::string>());
      else
        throw input_error("matrix entries must be integers (or decimal strings)");
    }
  }
  return m;
}

// ----- presentation rendering -------------------------------------------

std::string relator_text(const Presentation& p, const std::vector<std::pair<int, Int>>& rel) {
  std::string out;
  for (size_t i = 0; i < rel.size(); ++i) {
    if (i) out += " ";
    out += p.generators[static_cast<size_t>(rel[i].first)];
    if (rel[i].second != 1) out += "^" + rel[i].second.str();
  }
  return out.empty() ? "1" : out;
}

ordered_json presentation_json(const Presentation& p) {
  ordered_json j;
  j["generators"] = p.generators;
  ordered_json rels = ordered_json::array();
  for (const auto& rel : p.relators) {
    ordered_json r = ordered_json::array();
    for (const auto& [gen, exp] : rel)
      r.push_back(ordered_json::array({p.generators[static_cast<size_t>(gen)], json_int(exp)}));
    rels.push_back(std::move(r));
  }
  j["relators"] = std::move(rels);
  return j;
}

ordered_json abelian_json(const AbelianInvariants& inv) {
  ordered_json j;
  j["free_rank"] = inv.free_rank;
  ordered_json t = ordered_json::array();
  for (const Int& d : inv.torsion) t.push_back(json_int(d));
  j["torsion"] = std::move(t);
  return j;
}

// ----- subcommand bodies -------------------------------------------------

void cmd_validate(Ctx& c) {
  const ArtinSystem& sys = c.graph();  // construction validates structure
  EafcCheck chk = validate_eafc(sys);
  if (c.as_json) {
    ordered_json j;
    j["valid"] = chk.ok;
    if (!chk.ok)
      j["triangle"] = {sys.name(chk.triangle[0]), sys.name(chk.triangle[1]),
                       sys.name(chk.triangle[2])};
    c.emit(j);
  } else if (chk.ok) {
    c.out << "valid: even FC-type system with " << sys.vertex_count() << " generators and "
          << sys.edges().size() << " edges\n";
  } else {
    c.out << "not FC-type: triangle " << sys.name(chk.triangle[0]) << ", "
          << sys.name(chk.triangle[1]) << ", " << sys.name(chk.triangle[2])
          << " has more than one label exceeding 2\n";
  }
  c.exit_code = chk.ok ? 0 : 1;
}

void cmd_classify(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  GroupClass cls = classify_group(sys);
  if (c.as_json) {
    ordered_json j;
    j["class"] = cls.kind == GroupClass::FreeAbelian ? "free_abelian" : "large";
    if (cls.kind == GroupClass::FreeAbelian) j["rank"] = cls.rank;
    c.emit(j);
  } else if (cls.kind == GroupClass::FreeAbelian) {
    c.out << "free abelian of rank " << cls.rank << "\n";
  } else {
    c.out << "large\n";
  }
}

void cmd_coherence(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  CoherenceResult res = is_coherent(sys);
  if (c.as_json) {
    ordered_json j;
    j["coherent"] = res.coherent;
    if (!res.coherent) {
      ordered_json cyc = ordered_json::array();
      for (int v : res.witness) cyc.push_back(sys.name(v));
      j["witness_cycle"] = std::move(cyc);
      j["witness_graph"] = res.witness_in_le2 ? "label2_subgraph" : "full_graph";
    }
    c.emit(j);
  } else if (res.coherent) {
    c.out << "coherent: the graph and its label-2 subgraph are both chordal\n";
  } else {
    c.out << "not coherent: chordless cycle";
    for (int v : res.witness) c.out << " " << sys.name(v);
    c.out << " in the " << (res.witness_in_le2 ? "label-2 subgraph" : "graph") << "\n";
  }
  c.exit_code = res.coherent ? 0 : 1;
}

void cmd_gamma_le2(Ctx& c) {
  // The canonical output is the graph document itself, in both modes.
  c.out << graph_to_json(gamma_le2(c.graph()));
}

void cmd_decompose(Ctx& c, const std::optional<std::string>& split, bool gog) {
  const ArtinSystem& sys = c.graph();
  DecomposeOptions opts;
  opts.split_vertex = split;
  DecompositionNode root = decompose(sys, opts);
  if (gog) {
    GraphOfGroups g = to_graph_of_groups(sys, root);
    std::vector<int> tree = maximal_subtree(g);
    int rank = static_cast<int>(g.edges.size() - tree.size());
    if (c.as_json) {
      ordered_json j;
      ordered_json vs = ordered_json::array();
      for (const auto& v : g.vertices) vs.push_back(subset_json(sys, v.group));
      j["vertices"] = std::move(vs);
      ordered_json es = ordered_json::array();
      for (const auto& e : g.edges) {
        ordered_json ej;
        ej["a"] = e.a;
        ej["b"] = e.b;
        ej["group"] = subset_json(sys, e.group);
        es.push_back(std::move(ej));
      }
      j["edges"] = std::move(es);
      j["tree_edges"] = tree;
      j["underlying_free_rank"] = rank;
      c.emit(j);
    } else {
      c.out << "graph of groups with " << g.vertices.size() << " vertices, " << g.edges.size()
            << " edges\n";
      for (size_t i = 0; i < g.vertices.size(); ++i)
        c.out << "  vertex " << i << ": " << subset_names(sys, g.vertices[i].group) << "\n";
      for (size_t i = 0; i < g.edges.size(); ++i)
        c.out << "  edge " << i << ": " << g.edges[i].a << " -- " << g.edges[i].b << " over "
              << subset_names(sys, g.edges[i].group) << "\n";
      c.out << "  maximal subtree edges:";
      for (int e : tree) c.out << " " << e;
      c.out << "\n  underlying free rank: " << rank << "\n";
    }
    return;
  }
  if (c.as_json)
    c.emit(tree_json(sys, root));
  else
    print_tree(c, sys, root, 0);
}

void cmd_presentation(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  Presentation p = emit_presentation(sys);
  if (c.as_json) {
    c.emit(presentation_json(p));
    return;
  }
  c.out << "generators:";
  for (const auto& g : p.generators) c.out << " " << g;
  c.out << "\n";
  for (const auto& rel : p.relators) c.out << "relator: " << relator_text(p, rel) << "\n";
}

void cmd_abel(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  AbelianInvariants inv = abelianization_invariants(emit_presentation(sys));
  if (c.as_json) {
    c.emit(abelian_json(inv));
    return;
  }
  c.out << "abelianization: Z^" << inv.free_rank;
  for (const Int& d : inv.torsion) c.out << " x Z/" << d.str();
  c.out << "\n";
}

void cmd_relator(Ctx& c, const std::string& u, const std::string& v) {
  const ArtinSystem& sys = c.graph();
  Word r = artin_relator(sys, sys.index_of(u), sys.index_of(v));
  if (c.as_json) {
    ordered_json j;
    j["relator"] = format_word(r);
    j["length"] = json_int(r.length());
    c.emit(j);
  } else {
    c.out << format_word(r) << "\n";
  }
}

void cmd_parse(Ctx& c, const std::string& text) {
  const ArtinSystem& sys = c.graph();
  Word w = parse_word(sys, text);
  if (c.as_json) {
    ordered_json j;
    j["word"] = format_word(w);
    j["length"] = json_int(w.length());
    ordered_json ex;
    std::vector<Int> img = abelian_image(w);
    for (int i = 0; i < sys.vertex_count(); ++i) ex[sys.name(i)] = json_int(img[i]);
    j["exponent_sums"] = std::move(ex);
    c.emit(j);
  } else {
    c.out << (w.empty() ? "(identity)" : format_word(w)) << "\n";
  }
}

void cmd_wp(Ctx& c, const std::string& text, const std::string& other,
            const std::optional<std::string>& split) {
  const ArtinSystem& sys = c.graph();
  DecomposeOptions opts;
  opts.split_vertex = split;
  WordProblemSolver solver(sys, opts);
  if (!other.empty()) {
    bool eq = solver.are_equal(parse_word(sys, text), parse_word(sys, other));
    if (c.as_json) {
      ordered_json j;
      j["equal"] = eq;
      c.emit(j);
    } else {
      c.out << (eq ? "equal" : "not-equal") << "\n";
    }
    c.exit_code = eq ? 0 : 1;
    return;
  }
  bool trivial = solver.is_trivial(parse_word(sys, text));
  if (c.as_json) {
    ordered_json j;
    j["trivial"] = trivial;
    c.emit(j);
  } else {
    c.out << (trivial ? "trivial" : "nontrivial") << "\n";
  }
  c.exit_code = trivial ? 0 : 1;
}

void cmd_equal(Ctx& c, const std::string& t1, const std::string& t2,
               const std::optional<std::string>& split) {
  const ArtinSystem& sys = c.graph();
  DecomposeOptions opts;
  opts.split_vertex = split;
  WordProblemSolver solver(sys, opts);
  bool eq = solver.are_equal(parse_word(sys, t1), parse_word(sys, t2));
  if (c.as_json) {
    ordered_json j;
    j["equal"] = eq;
    c.emit(j);
  } else {
    c.out << (eq ? "equal" : "not-equal") << "\n";
  }
  c.exit_code = eq ? 0 : 1;
}

void cmd_pieces(Ctx& c, const std::string& apex, const std::string& text) {
  const ArtinSystem& sys = c.graph();
  int av = sys.index_of(apex);
  Word w = parse_word(sys, text);
  auto pieces = amalgam_syllable_decomposition(sys, av, w);
  if (c.as_json) {
    ordered_json j = ordered_json::array();
    for (const auto& p : pieces) {
      ordered_json pj;
      pj["side"] = p.side_star ? "star" : "complement";
      Word pw = Word::from_syllables(sys, p.syllables);
      pj["word"] = format_word(pw);
      j.push_back(std::move(pj));
    }
    ordered_json root;
    root["apex"] = apex;
    root["pieces"] = std::move(j);
    c.emit(root);
  } else {
    c.out << pieces.size() << " pieces (apex " << apex << ")\n";
    for (const auto& p : pieces) {
      Word pw = Word::from_syllables(sys, p.syllables);
      c.out << "  [" << (p.side_star ? "star" : "comp") << "] "
            << (pw.empty() ? "(identity)" : format_word(pw)) << "\n";
    }
  }
}

void cmd_member(Ctx& c, const std::string& sub, const std::string& conj, const std::string& text,
                int max_n, const std::optional<std::string>& split) {
  const ArtinSystem& sys = c.graph();
  DecomposeOptions opts;
  opts.split_vertex = split;
  WordProblemSolver solver(sys, opts);
  VertexSubset S = parse_subset(sys, sub);
  Word w = parse_word(sys, text);
  Word cw = parse_word(sys, conj);
  if (max_n > 0) {
    RootClosureReport rep = check_root_closure(solver, S, cw, w, max_n);
    if (c.as_json) {
      ordered_json j;
      ordered_json rows = ordered_json::array();
      for (const auto& r : rep.rows) {
        ordered_json rj;
        rj["n"] = r.n;
        rj["power_in"] = r.power_in;
        rj["base_in"] = r.base_in;
        rows.push_back(std::move(rj));
      }
      j["rows"] = std::move(rows);
      j["violation"] = rep.violation;
      c.emit(j);
    } else {
      for (const auto& r : rep.rows)
        c.out << "n=" << r.n << ": power " << (r.power_in ? "in" : "out") << ", base "
              << (r.base_in ? "in" : "out") << "\n";
      c.out << (rep.violation ? "root closure violated\n" : "root closure holds\n");
    }
    c.exit_code = rep.violation ? 1 : 0;
    return;
  }
  bool in = solver.in_parabolic(S, cw, w);
  if (c.as_json) {
    ordered_json j;
    j["member"] = in;
    c.emit(j);
  } else {
    c.out << (in ? "member" : "not a member") << "\n";
  }
  c.exit_code = in ? 0 : 1;
}

void cmd_qz(Ctx& c, const std::string& sub, const std::string& text) {
  const ArtinSystem& sys = c.graph();
  WordProblemSolver solver(sys);
  bool in = solver.in_quasi_centralizer(parse_subset(sys, sub), parse_word(sys, text));
  if (c.as_json) {
    ordered_json j;
    j["fixes_generators"] = in;
    c.emit(j);
  } else {
    c.out << (in ? "fixes every generator of the subset\n" : "moves some generator\n");
  }
  c.exit_code = in ? 0 : 1;
}

void cmd_g0(Ctx& c, const std::vector<std::string>& b_roles, const std::string& orientation,
            bool index_only, const std::string& text) {
  const ArtinSystem& sys = c.graph();
  G0Map map = orientation_from_flags(sys, b_roles, orientation);
  if (index_only) {
    Int bound = g0_index(sys);
    if (c.as_json) {
      ordered_json j;
      j["index"] = json_int(bound);
      c.emit(j);
    } else {
      c.out << bound.str() << "\n";
    }
    return;
  }
  if (text.empty()) {
    Int bound = g0_index(sys);
    if (c.as_json) {
      ordered_json j;
      j["index_bound"] = json_int(bound);
      ordered_json edges = ordered_json::array();
      for (size_t e = 0; e < sys.edges().size(); ++e) {
        ordered_json ej;
        ej["edge"] = {sys.name(sys.edges()[e].u), sys.name(sys.edges()[e].v)};
        ej["modulus"] = sys.edges()[e].m / 2;
        ej["tracked"] = sys.name(map.b_role[e]);
        edges.push_back(std::move(ej));
      }
      j["residues"] = std::move(edges);
      c.emit(j);
    } else {
      c.out << "residue lattice order (index bound): " << bound.str() << "\n";
      for (size_t e = 0; e < sys.edges().size(); ++e)
        c.out << "  edge " << sys.name(sys.edges()[e].u) << "-" << sys.name(sys.edges()[e].v)
              << ": tracked " << sys.name(map.b_role[e]) << " mod " << sys.edges()[e].m / 2
              << "\n";
    }
    return;
  }
  Word w = parse_word(sys, text);
  std::vector<int> img = g0_image(sys, map, w);
  bool inside = std::all_of(img.begin(), img.end(), [](int r) { return r == 0; });
  if (c.as_json) {
    ordered_json j;
    j["residues"] = img;
    j["member"] = inside;
    c.emit(j);
  } else {
    c.out << "residues:";
    for (int r : img) c.out << " " << r;
    c.out << "\n" << (inside ? "member of the residue kernel\n" : "outside the residue kernel\n");
  }
  c.exit_code = inside ? 0 : 1;
}

void cmd_rs(Ctx& c, const std::vector<std::string>& b_roles, const std::string& orientation,
            const std::vector<std::string>& gen_texts, long long limit) {
  const ArtinSystem& sys = c.graph();
  G0Map map = orientation_from_flags(sys, b_roles, orientation);
  SchreierData data;
  if (gen_texts.empty()) {
    data = reidemeister_schreier_g0(sys, map, limit);
  } else {
    std::vector<Word> gens;
    for (const std::string& t : gen_texts) gens.push_back(parse_word(sys, t));
    data = reidemeister_schreier_g0(sys, map, gens, limit);
  }
  if (c.as_json) {
    ordered_json j;
    j["index"] = json_int(data.index);
    ordered_json tr = ordered_json::array();
    for (const Word& t : data.transversal) tr.push_back(format_word(t));
    j["transversal"] = std::move(tr);
    ordered_json gens = ordered_json::array();
    for (const Word& g : data.generators) gens.push_back(format_word(g));
    j["generators"] = std::move(gens);
    c.emit(j);
  } else {
    c.out << "index: " << data.index.str() << "\n";
    c.out << "transversal:";
    for (const Word& t : data.transversal) c.out << " [" << (t.empty() ? "1" : format_word(t)) << "]";
    c.out << "\ngenerators (" << data.generators.size() << "):\n";
    for (const Word& g : data.generators) c.out << "  " << format_word(g) << "\n";
  }
}

void cmd_equation(Ctx& c, const std::vector<std::string>& b_roles, const std::string& orientation,
                  const std::string& xs, const std::string& ys, const std::string& zs) {
  const ArtinSystem& sys = c.graph();
  G0Map map = orientation_from_flags(sys, b_roles, orientation);
  WordProblemSolver solver(sys);
  EquationOutcome res = check_equation_property(solver, map, parse_word(sys, xs),
                                                parse_word(sys, ys), parse_word(sys, zs));
  const char* text = res == EquationOutcome::Vacuous     ? "vacuous"
                     : res == EquationOutcome::Confirmed ? "confirmed"
                                                         : "violation";
  if (c.as_json) {
    ordered_json j;
    j["outcome"] = text;
    c.emit(j);
  } else {
    c.out << text << "\n";
  }
  c.exit_code = res == EquationOutcome::Violation ? 1 : 0;
}

void cmd_kernel_rank(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  long long rank = kernel_phi_rank(sys);
  if (c.as_json) {
    ordered_json j;
    j["rank"] = rank;
    c.emit(j);
  } else {
    c.out << "kernel of the total-exponent map is free of rank " << rank << "\n";
  }
}

void cmd_omega(Ctx& c, const std::string& apex, const std::string& embed_text) {
  const ArtinSystem& sys = c.graph();
  OmegaSystem os = build_omega(sys, sys.index_of(apex));
  if (!embed_text.empty()) {
    Word w = parse_word(os.omega, embed_text);
    Word im = embed(os, w);
    if (c.as_json) {
      ordered_json j;
      j["embedded"] = format_word(im);
      c.emit(j);
    } else {
      c.out << (im.empty() ? "(identity)" : format_word(im)) << "\n";
    }
    return;
  }
  if (c.as_json) {
    ordered_json j = ordered_json::parse(graph_to_json(os.omega));
    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < os.info.size(); ++i) {
      ordered_json row;
      row["vertex"] = os.omega.name(static_cast<int>(i));
      row["ambient"] = sys.name(os.info[i].orig);
      row["shift"] = os.info[i].shift;
      table.push_back(std::move(row));
    }
    ordered_json root;
    root["graph"] = std::move(j);
    root["embedding"] = std::move(table);
    c.emit(root);
  } else {
    c.out << graph_to_json(os.omega);
    for (size_t i = 0; i < os.info.size(); ++i)
      c.out << "# " << os.omega.name(static_cast<int>(i)) << " -> " << apex << "^"
            << os.info[i].shift << " " << sys.name(os.info[i].orig) << " " << apex << "^-"
            << os.info[i].shift << "\n";
  }
}

void cmd_large(Ctx& c) {
  const ArtinSystem& sys = c.graph();
  LargenessCertificate cert = largeness_certificate(sys);
  bool ok = verify_certificate(sys, cert);
  if (!ok) throw input_error("internal: generated certificate failed verification");
  if (c.as_json) {
    ordered_json j;
    switch (cert.kind) {
      case LargenessCertificate::FreeAbelian:
        j["large"] = false;
        j["kind"] = "free_abelian";
        j["rank"] = cert.rank;
        break;
      case LargenessCertificate::FreeRetraction:
        j["large"] = true;
        j["kind"] = "free_retraction";
        j["pair"] = {sys.name(cert.u), sys.name(cert.v)};
        break;
      case LargenessCertificate::DihedralRoute: {
        j["large"] = true;
        j["kind"] = "dihedral_route";
        j["edge"] = {sys.name(cert.u), sys.name(cert.v)};
        j["index"] = cert.n;
        ordered_json gens = ordered_json::array();
        for (const Word& g : cert.subgroup_gens) gens.push_back(format_word(g));
        j["subgroup_generators"] = std::move(gens);
        j["quotient"] = presentation_json(cert.quotient);
        break;
      }
    }
    j["verified"] = ok;
    c.emit(j);
  } else {
    switch (cert.kind) {
      case LargenessCertificate::FreeAbelian:
        c.out << "not large: free abelian of rank " << cert.rank << "\n";
        break;
      case LargenessCertificate::FreeRetraction:
        c.out << "large: retraction onto the non-adjacent pair {" << sys.name(cert.u) << ", "
              << sys.name(cert.v) << "} is free of rank 2\n";
        break;
      case LargenessCertificate::DihedralRoute:
        c.out << "large: index-" << cert.n << " subgroup over edge " << sys.name(cert.u) << "-"
              << sys.name(cert.v) << " maps onto a free group of rank " << cert.n << "\n";
        for (const Word& g : cert.subgroup_gens) c.out << "  gen: " << format_word(g) << "\n";
        break;
    }
    c.out << "certificate verified\n";
  }
  c.exit_code = cert.kind == LargenessCertificate::FreeAbelian ? 1 : 0;
}

void cmd_snf(Ctx& c, const std::string& path) {
  IntMatrix A = load_matrix_file(path);
  SmithNormalForm s = smith_normal_form(A);
  bool ok = mul(mul(s.U, A), s.V) == s.D;
  if (!ok) throw input_error("internal: transform verification failed");
  if (c.as_json) {
    ordered_json j;
    ordered_json diag = ordered_json::array();
    for (int i = 0; i < std::min(s.D.rows, s.D.cols); ++i) diag.push_back(json_int(s.D.at(i, i)));
    j["diagonal"] = std::move(diag);
    auto dump = [](const IntMatrix& m) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < m.cols; ++k) row.push_back(json_int(m.at(i, k)));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    j["U"] = dump(s.U);
    j["V"] = dump(s.V);
    j["verified"] = ok;
    c.emit(j);
  } else {
    c.out << "diagonal:";
    for (int i = 0; i < std::min(s.D.rows, s.D.cols); ++i) c.out << " " << s.D.at(i, i).str();
    c.out << "\ntransforms verified: U*A*V == D\n";
  }
}

void cmd_dihedral(Ctx& c, int n, const std::string& an, const std::string& bn,
                  const std::string& central, const std::string& semidirect,
                  const std::string& cn, bool basis, bool gens) {
  DihedralContext ctx = DihedralContext::make(n, an, bn);
  if (!central.empty()) {
    Word w = parse_word(ctx.sys(), central);
    CentralCoords cc = central_coords(ctx, w);
    if (c.as_json) {
      ordered_json j;
      ordered_json syl = ordered_json::array();
      for (const auto& s : cc.syllables) {
        ordered_json sj;
        if (s.is_x) {
          sj["x_class"] = s.x_cls;
        } else {
          sj["a_exp"] = json_int(s.a_exp);
        }
        syl.push_back(std::move(sj));
      }
      j["normal_form"] = std::move(syl);
      j["x_exponent_sum"] = json_int(cc.x_exponent_sum);
      j["trivial"] = cc.trivial();
      c.emit(j);
    } else {
      c.out << "normal form:";
      if (cc.syllables.empty()) c.out << " (empty)";
      for (const auto& s : cc.syllables) {
        if (s.is_x)
          c.out << " x[" << s.x_cls << "]";
        else
          c.out << " a^" << s.a_exp.str();
      }
      c.out << "\nx exponent sum: " << cc.x_exponent_sum.str() << "\n"
            << (cc.trivial() ? "trivial" : "nontrivial") << "\n";
    }
    c.exit_code = cc.trivial() ? 0 : 1;
    return;
  }
  if (!semidirect.empty()) {
    Word w = parse_word(ctx.sys(), semidirect);
    SemidirectCoords sc = semidirect_coords(ctx, w);
    if (c.as_json) {
      ordered_json j;
      ordered_json k = ordered_json::array();
      for (const auto& [i, e] : sc.kernel) k.push_back(ordered_json::array({i, json_int(e)}));
      j["kernel"] = std::move(k);
      j["t_exponent"] = json_int(sc.t_exponent);
      j["trivial"] = sc.trivial();
      c.emit(j);
    } else {
      c.out << "kernel word:";
      if (sc.kernel.empty()) c.out << " (empty)";
      for (const auto& [i, e] : sc.kernel) c.out << " g" << i << "^" << e.str();
      c.out << "\nt exponent: " << sc.t_exponent.str() << "\n"
            << (sc.trivial() ? "trivial" : "nontrivial") << "\n";
    }
    c.exit_code = sc.trivial() ? 0 : 1;
    return;
  }
  if (!cn.empty()) {
    Word w = parse_word(ctx.sys(), cn);
    int cls = cn_quotient_image(ctx, w);
    if (c.as_json) {
      ordered_json j;
      j["class"] = cls;
      c.emit(j);
    } else {
      c.out << cls << "\n";
    }
    return;
  }
  if (basis) {
    auto words = kernel_basis(ctx);
    if (c.as_json) {
      ordered_json j = ordered_json::array();
      for (const Word& w : words) j.push_back(format_word(w));
      ordered_json root;
      root["basis"] = std::move(j);
      c.emit(root);
    } else {
      for (const Word& w : words) c.out << format_word(w) << "\n";
    }
    return;
  }
  if (gens) {
    auto words = appropriate_gens(ctx);
    if (c.as_json) {
      ordered_json j = ordered_json::array();
      for (const Word& w : words) j.push_back(format_word(w));
      ordered_json root;
      root["generators"] = std::move(j);
      c.emit(root);
    } else {
      for (const Word& w : words) c.out << format_word(w) << "\n";
    }
    return;
  }
  throw input_error(
      "dihedral needs one of --central, --semidirect, --cn, --kernel-basis, --appropriate-gens");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err};

  CLI::App app{"computations with finitely generated even FC-type Artin groups"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph,--graph", ctx.graph_path, "defining graph JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--json", ctx.as_json, "machine-readable output");
  };

  std::function<void()> action;

  // validate
  {
    auto* cmd = app.add_subcommand("validate", "check the FC-type conditions");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_validate(ctx); }; });
  }
  // classify
  {
    auto* cmd = app.add_subcommand("classify", "free abelian or large");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_classify(ctx); }; });
  }
  // coherence
  {
    auto* cmd = app.add_subcommand("coherence", "coherence via double chordality");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_coherence(ctx); }; });
  }
  // gamma-le2
  {
    auto* cmd = app.add_subcommand("gamma-le2", "label-2 subgraph as a graph document");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_gamma_le2(ctx); }; });
  }
  // decompose
  {
    auto* cmd = app.add_subcommand("decompose", "recursive splitting tree");
    add_graph(cmd);
    auto split = std::make_shared<std::string>();
    auto gog = std::make_shared<bool>(false);
    cmd->add_option("--split-vertex", *split, "force this amalgam apex where possible");
    cmd->add_flag("--gog", *gog, "print the top-level graph of groups");
    cmd->callback([&, split, gog] {
      action = [&, split, gog] {
        std::optional<std::string> sv;
        if (!split->empty()) sv = *split;
        cmd_decompose(ctx, sv, *gog);
      };
    });
  }
  // presentation
  {
    auto* cmd = app.add_subcommand("presentation", "standard presentation");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_presentation(ctx); }; });
  }
  // abel
  {
    auto* cmd = app.add_subcommand("abel", "abelianization invariants");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_abel(ctx); }; });
  }
  // relator
  {
    auto* cmd = app.add_subcommand("relator", "defining relator of an edge");
    add_graph(cmd);
    auto u = std::make_shared<std::string>(), v = std::make_shared<std::string>();
    cmd->add_option("u", *u, "first endpoint")->required();
    cmd->add_option("v", *v, "second endpoint")->required();
    cmd->callback([&, u, v] { action = [&, u, v] { cmd_relator(ctx, *u, *v); }; });
  }
  // parse
  {
    auto* cmd = app.add_subcommand("parse", "normalize a word");
    add_graph(cmd);
    auto w = std::make_shared<std::string>();
    cmd->add_option("word", *w, "word text")->required();
    cmd->callback([&, w] { action = [&, w] { cmd_parse(ctx, *w); }; });
  }
  // wp
  {
    auto* cmd = app.add_subcommand(
        "wp", "word problem: one word tests triviality, two words test equality");
    add_graph(cmd);
    auto w = std::make_shared<std::string>();
    auto w2 = std::make_shared<std::string>();
    auto split = std::make_shared<std::string>();
    cmd->add_option("word", *w, "word text")->required();
    cmd->add_option("other", *w2, "optional second word to compare against");
    cmd->add_option("--split-vertex", *split, "force this amalgam apex where possible");
    cmd->callback([&, w, w2, split] {
      action = [&, w, w2, split] {
        std::optional<std::string> sv;
        if (!split->empty()) sv = *split;
        cmd_wp(ctx, *w, *w2, sv);
      };
    });
  }
  // equal
  {
    auto* cmd = app.add_subcommand("equal", "do two words represent the same element?");
    add_graph(cmd);
    auto w1 = std::make_shared<std::string>(), w2 = std::make_shared<std::string>();
    auto split = std::make_shared<std::string>();
    cmd->add_option("first", *w1, "first word")->required();
    cmd->add_option("second", *w2, "second word")->required();
    cmd->add_option("--split-vertex", *split, "force this amalgam apex where possible");
    cmd->callback([&, w1, w2, split] {
      action = [&, w1, w2, split] {
        std::optional<std::string> sv;
        if (!split->empty()) sv = *split;
        cmd_equal(ctx, *w1, *w2, sv);
      };
    });
  }
  // pieces
  {
    auto* cmd = app.add_subcommand("pieces", "alternating piece decomposition at an apex");
    add_graph(cmd);
    auto apex = std::make_shared<std::string>(), w = std::make_shared<std::string>();
    cmd->add_option("--apex", *apex, "splitting vertex")->required();
    cmd->add_option("word", *w, "word text")->required();
    cmd->callback([&, apex, w] { action = [&, apex, w] { cmd_pieces(ctx, *apex, *w); }; });
  }
  // member
  {
    auto* cmd = app.add_subcommand("member", "membership in a (conjugated) standard subgroup");
    add_graph(cmd);
    auto sub = std::make_shared<std::string>(), conj = std::make_shared<std::string>(),
         w = std::make_shared<std::string>(), split = std::make_shared<std::string>();
    auto max_n = std::make_shared<int>(0);
    cmd->add_option("--sub", *sub, "comma-separated generating subset")->required();
    cmd->add_option("--conj", *conj, "conjugating word (default: identity)");
    cmd->add_option("--max-n", *max_n, "scan powers 1..N for root closure");
    cmd->add_option("--split-vertex", *split, "force this amalgam apex where possible");
    cmd->add_option("word", *w, "word text")->required();
    cmd->callback([&, sub, conj, w, max_n, split] {
      action = [&, sub, conj, w, max_n, split] {
        std::optional<std::string> sv;
        if (!split->empty()) sv = *split;
        cmd_member(ctx, *sub, *conj, *w, *max_n, sv);
      };
    });
  }
  // qz
  {
    auto* cmd = app.add_subcommand("qz", "does the word fix each generator of the subset?");
    add_graph(cmd);
    auto sub = std::make_shared<std::string>(), w = std::make_shared<std::string>();
    cmd->add_option("--sub", *sub, "comma-separated generating subset")->required();
    cmd->add_option("word", *w, "word text")->required();
    cmd->callback([&, sub, w] { action = [&, sub, w] { cmd_qz(ctx, *sub, *w); }; });
  }
  // g0
  {
    auto* cmd = app.add_subcommand("g0", "edge residue maps and their kernel");
    add_graph(cmd);
    auto roles = std::make_shared<std::vector<std::string>>();
    auto orient = std::make_shared<std::string>();
    auto index_only = std::make_shared<bool>(false);
    auto w = std::make_shared<std::string>();
    cmd->add_option("--b-role", *roles, "track this vertex on all its edges (repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--orientation", *orient, "JSON file with per-edge b_role overrides")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--index", *index_only, "print only the residue lattice order");
    cmd->add_option("word", *w, "optional word to test");
    cmd->callback([&, roles, orient, index_only, w] {
      action = [&, roles, orient, index_only, w] {
        cmd_g0(ctx, *roles, *orient, *index_only, *w);
      };
    });
  }
  // rs
  {
    auto* cmd = app.add_subcommand("rs", "coset enumeration of the residue kernel");
    add_graph(cmd);
    auto roles = std::make_shared<std::vector<std::string>>();
    auto orient = std::make_shared<std::string>();
    auto gens = std::make_shared<std::vector<std::string>>();
    auto limit = std::make_shared<long long>(1 << 20);
    cmd->add_option("--b-role", *roles, "track this vertex on all its edges (repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--orientation", *orient, "JSON file with per-edge b_role overrides")
        ->check(CLI::ExistingFile);
    cmd->add_option("--gen", *gens,
                    "subgroup generator word (repeatable; default: all vertex generators)");
    cmd->add_option("--limit", *limit, "maximum number of cosets to enumerate");
    cmd->callback([&, roles, orient, gens, limit] {
      action = [&, roles, orient, gens, limit] { cmd_rs(ctx, *roles, *orient, *gens, *limit); };
    });
  }
  // equation
  {
    auto* cmd = app.add_subcommand("equation", "commuting-conjugates property inside the residue kernel");
    add_graph(cmd);
    auto roles = std::make_shared<std::vector<std::string>>();
    auto orient = std::make_shared<std::string>();
    auto xs = std::make_shared<std::string>(), ys = std::make_shared<std::string>(),
         zs = std::make_shared<std::string>();
    cmd->add_option("--b-role", *roles, "track this vertex on all its edges (repeatable)")
        ->allow_extra_args(false);
    cmd->add_option("--orientation", *orient, "JSON file with per-edge b_role overrides")
        ->check(CLI::ExistingFile);
    cmd->add_option("-x", *xs, "word x")->required();
    cmd->add_option("-y", *ys, "word y")->required();
    cmd->add_option("-z", *zs, "word z")->required();
    cmd->callback([&, roles, orient, xs, ys, zs] {
      action = [&, roles, orient, xs, ys, zs] {
        cmd_equation(ctx, *roles, *orient, *xs, *ys, *zs);
      };
    });
  }
  // kernel-rank
  {
    auto* cmd = app.add_subcommand("kernel-rank", "rank of the total-exponent kernel (trees)");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_kernel_rank(ctx); }; });
  }
  // omega
  {
    auto* cmd = app.add_subcommand("omega", "kernel graph of the apex height map");
    add_graph(cmd);
    auto apex = std::make_shared<std::string>(), w = std::make_shared<std::string>();
    cmd->add_option("--apex", *apex, "cone vertex")->required();
    cmd->add_option("--embed", *w, "map this kernel word into the ambient group");
    cmd->callback([&, apex, w] { action = [&, apex, w] { cmd_omega(ctx, *apex, *w); }; });
  }
  // large
  {
    auto* cmd = app.add_subcommand("large", "largeness certificate");
    add_graph(cmd);
    cmd->callback([&] { action = [&] { cmd_large(ctx); }; });
  }
  // snf
  {
    auto* cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--matrix", *path, "JSON matrix file with an \"entries\" array")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--json", ctx.as_json, "machine-readable output");
    cmd->callback([&, path] { action = [&, path] { cmd_snf(ctx, *path); }; });
  }
  // dihedral
  {
    auto* cmd = app.add_subcommand("dihedral", "two-generator computations");
    auto n = std::make_shared<int>(0);
    auto an = std::make_shared<std::string>("a"), bn = std::make_shared<std::string>("b");
    auto central = std::make_shared<std::string>(), semi = std::make_shared<std::string>(),
         cn = std::make_shared<std::string>();
    auto basis = std::make_shared<bool>(false), gens = std::make_shared<bool>(false);
    cmd->add_option("--n", *n, "half-label (edge label = 2n)")->required();
    cmd->add_option("--a", *an, "first generator name");
    cmd->add_option("--b", *bn, "second generator name");
    cmd->add_option("--central", *central, "central-quotient normal form of this word");
    cmd->add_option("--semidirect", *semi, "kernel/height coordinates of this word");
    cmd->add_option("--cn", *cn, "finite-quotient class of this word");
    cmd->add_flag("--kernel-basis", *basis, "print the free kernel basis");
    cmd->add_flag("--appropriate-gens", *gens, "print the finite-index generating set");
    cmd->add_flag("--json", ctx.as_json, "machine-readable output");
    cmd->callback([&, n, an, bn, central, semi, cn, basis, gens] {
      action = [&, n, an, bn, central, semi, cn, basis, gens] {
        cmd_dihedral(ctx, *n, *an, *bn, *central, *semi, *cn, *basis, *gens);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream so, se;
    int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return ctx.exit_code;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eafc::cli
