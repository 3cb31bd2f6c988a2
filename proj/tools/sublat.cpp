// Command-line surface over the library: construct and inspect finite
// tables, export subsemigroup lattices, search for lattice isomorphisms,
// enumerate small semigroups, materialize the symbolic quotients, and run
// the verification suites. Every subcommand writes a deterministic function
// of its inputs to standard output; usage errors exit 2, computation errors
// exit 1.
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sublat/classify.hpp"
#include "sublat/congruence.hpp"
#include "sublat/corpus.hpp"
#include "sublat/enumerate.hpp"
#include "sublat/exceptions.hpp"
#include "sublat/extension.hpp"
#include "sublat/green.hpp"
#include "sublat/lattice-iso.hpp"
#include "sublat/monogenic.hpp"
#include "sublat/rho.hpp"
#include "sublat/semigroup.hpp"
#include "sublat/spec-parse.hpp"
#include "sublat/structure.hpp"
#include "sublat/sublattice.hpp"
#include "sublat/suites.hpp"
#include "sublat/table-io.hpp"

namespace {

// Argument combinations CLI11 cannot express; reported on exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sublat::FiniteSemigroup load_input(std::string const& spec, std::string const& file) {
  if (spec.empty() == file.empty()) {
    throw UsageError("exactly one of --spec and --file is required");
  }
  if (!spec.empty()) {
    return sublat::construct(spec);
  }
  if (file == "-") {
    return sublat::read_table(std::cin);
  }
  return sublat::read_table_file(file);
}

void require_format(std::string const& fmt, std::vector<std::string> const& allowed) {
  if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end()) {
    std::string list;
    for (std::string const& a : allowed) {
      list += (list.empty() ? "" : ", ") + a;
    }
    throw UsageError("--format " + fmt + " is not available here (use " + list + ")");
  }
}

std::string class_text(sublat::FiniteSemigroup const& S, std::vector<int> const& cls) {
  std::string out = "{";
  for (std::size_t i = 0; i < cls.size(); ++i) {
    out += (i ? "," : "") + S.name(cls[i]);
  }
  return out + "}";
}

std::string classes_text(sublat::FiniteSemigroup const&          S,
                         std::vector<std::vector<int>> const&    classes) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out += (i ? " " : "") + class_text(S, classes[i]);
  }
  return out;
}

// Right-aligned grid with the row label column separated by a bar.
std::string table_grid(sublat::FiniteSemigroup const& S) {
  int         n = S.order();
  std::size_t w = 1;
  for (int i = 0; i < n; ++i) {
    w = std::max(w, S.name(i).size());
  }
  auto pad = [w](std::string const& s) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::ostringstream out;
  out << pad("*") << " |";
  for (int j = 0; j < n; ++j) {
    out << ' ' << pad(S.name(j));
  }
  out << '\n' << std::string(w, '-') << "-+" << std::string((w + 1) * static_cast<std::size_t>(n), '-') << '\n';
  for (int i = 0; i < n; ++i) {
    out << pad(S.name(i)) << " |";
    for (int j = 0; j < n; ++j) {
      out << ' ' << pad(S.name(S.product(i, j)));
    }
    out << '\n';
  }
  return out.str();
}

void emit_json(nlohmann::json const& j) { std::cout << j.dump(2) << '\n'; }

int run_construct(std::string const& spec, std::string const& file,
                  std::string const& fmt, std::string const& out_path) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup S = load_input(spec, file);
  if (!out_path.empty()) {
    sublat::write_table_file(out_path, S);
    std::cout << "wrote " << out_path << '\n';
    return 0;
  }
  if (fmt == "structured") {
    emit_json(sublat::table_to_json(S));
    return 0;
  }
  std::cout << "order: " << S.order() << '\n' << table_grid(S);
  std::cout << "idempotents:";
  S.idempotents().for_each([&](int e) { std::cout << ' ' << S.name(e); });
  std::cout << '\n';
  return 0;
}

int run_classify(std::string const& spec, std::string const& file, std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup S = load_input(spec, file);
  sublat::PropertyReport  r = sublat::classify(S);
  if (fmt == "structured") {
    nlohmann::json j;
    j["order"]              = S.order();
    j["band"]               = r.is_band;
    j["semilattice"]        = r.is_semilattice;
    j["rectangular_band"]   = r.is_rectangular_band;
    j["regular"]            = r.is_regular;
    j["inverse"]            = r.is_inverse;
    j["orthodox"]           = r.is_orthodox;
    j["group"]              = r.is_group;
    j["completely_simple"]  = r.is_completely_simple;
    j["combinatorial"]      = r.is_combinatorial;
    j["torsion_free"]       = r.is_torsion_free;
    j["element_orders"]     = r.element_orders;
    emit_json(j);
    return 0;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "order: " << S.order() << '\n'
            << "band: " << yn(r.is_band) << '\n'
            << "semilattice: " << yn(r.is_semilattice) << '\n'
            << "rectangular_band: " << yn(r.is_rectangular_band) << '\n'
            << "regular: " << yn(r.is_regular) << '\n'
            << "inverse: " << yn(r.is_inverse) << '\n'
            << "orthodox: " << yn(r.is_orthodox) << '\n'
            << "group: " << yn(r.is_group) << '\n'
            << "completely_simple: " << yn(r.is_completely_simple) << '\n'
            << "combinatorial: " << yn(r.is_combinatorial) << '\n'
            << "torsion_free: " << yn(r.is_torsion_free) << '\n';
  std::cout << "element_orders:";
  for (int o : r.element_orders) {
    std::cout << ' ' << o;
  }
  std::cout << '\n';
  return 0;
}

int run_green(std::string const& spec, std::string const& file, std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup S = load_input(spec, file);
  sublat::GreenData       g = sublat::green(S);
  if (fmt == "structured") {
    nlohmann::json j;
    j["order"]     = S.order();
    j["h_trivial"] = g.h_trivial();
    j["L"]         = g.L;
    j["R"]         = g.R;
    j["H"]         = g.H;
    j["D"]         = g.D;
    j["J"]         = g.J;
    emit_json(j);
    return 0;
  }
  std::cout << "order: " << S.order() << '\n'
            << "h_trivial: " << (g.h_trivial() ? "yes" : "no") << '\n'
            << "L (" << g.L.size() << "): " << classes_text(S, g.L) << '\n'
            << "R (" << g.R.size() << "): " << classes_text(S, g.R) << '\n'
            << "H (" << g.H.size() << "): " << classes_text(S, g.H) << '\n'
            << "D (" << g.D.size() << "): " << classes_text(S, g.D) << '\n'
            << "J (" << g.J.size() << "): " << classes_text(S, g.J) << '\n';
  return 0;
}

int run_gamma(std::string const& spec, std::string const& file, std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup     S = load_input(spec, file);
  sublat::CongruencePartition p = sublat::gamma(S);
  sublat::FiniteSemigroup     Q = sublat::quotient(S, p);
  if (fmt == "structured") {
    nlohmann::json j;
    j["order"]       = S.order();
    j["num_classes"] = p.num_classes;
    j["class_of"]    = p.class_of;
    j["classes"]     = p.classes();
    j["quotient"]    = sublat::table_to_json(Q);
    emit_json(j);
    return 0;
  }
  std::cout << "order: " << S.order() << '\n'
            << "classes (" << p.num_classes << "): " << classes_text(S, p.classes()) << '\n'
            << "quotient order: " << Q.order() << '\n'
            << "quotient inverse: " << (sublat::classify(Q).is_inverse ? "yes" : "no") << '\n';
  return 0;
}

int run_kernel(std::string const& spec, std::string const& file, std::string const& fmt,
               bool decompose) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup S = load_input(spec, file);
  sublat::ElemSet         K = sublat::kernel(S);
  nlohmann::json          j;
  if (fmt == "structured") {
    j["order"]  = S.order();
    j["kernel"] = K.to_vector();
  } else {
    std::cout << "order: " << S.order() << '\n'
              << "kernel size: " << K.count() << '\n'
              << "kernel: " << class_text(S, K.to_vector()) << '\n';
  }
  if (decompose) {
    sublat::KernelDecomposition kd = sublat::kernel_decomposition(S);
    if (fmt == "structured") {
      nlohmann::json d;
      d["group_order"]   = kd.group.order();
      d["band_order"]    = kd.band.order();
      d["product_order"] = kd.product.order();
      d["witness"]       = kd.witness;
      j["decomposition"] = d;
    } else {
      std::cout << "group order: " << kd.group.order() << '\n'
                << "band order: " << kd.band.order() << '\n'
                << "product order: " << kd.product.order() << '\n'
                << "witness: verified isomorphism onto group x band" << '\n';
    }
  }
  if (fmt == "structured") {
    emit_json(j);
  }
  return 0;
}

int run_sublattice(std::string const& spec, std::string const& file,
                   std::string const& fmt, int bound) {
  require_format(fmt, {"text", "dot", "structured"});
  sublat::FiniteSemigroup      S = load_input(spec, file);
  sublat::SubsemigroupLattice  L = sublat::sub_lattice(S, bound);
  if (fmt == "dot") {
    std::cout << sublat::lattice_dot(L);
    return 0;
  }
  if (fmt == "structured") {
    std::cout << sublat::lattice_structured(L);
    return 0;
  }
  std::cout << "ground order: " << S.order() << '\n'
            << "nodes: " << L.size() << '\n';
  for (int v = 0; v < L.size(); ++v) {
    std::cout << "  " << v << ": " << sublat::lattice_node_label(L, v)
              << " (rank " << L.rank[static_cast<std::size_t>(v)] << ")\n";
  }
  std::cout << "covers:\n";
  for (int v = 0; v < L.size(); ++v) {
    for (int u : L.covers_up[static_cast<std::size_t>(v)]) {
      std::cout << "  " << v << " -> " << u << '\n';
    }
  }
  return 0;
}

int run_latiso(std::string const& left_spec, std::string const& left_file,
               std::string const& right_spec, std::string const& right_file,
               std::string const& fmt, int bound) {
  require_format(fmt, {"text", "structured"});
  sublat::FiniteSemigroup S = [&] {
    if (left_spec.empty() == left_file.empty()) {
      throw UsageError("exactly one of --left and --left-file is required");
    }
    return left_spec.empty() ? sublat::read_table_file(left_file)
                             : sublat::construct(left_spec);
  }();
  sublat::FiniteSemigroup T = [&] {
    if (right_spec.empty() == right_file.empty()) {
      throw UsageError("exactly one of --right and --right-file is required");
    }
    return right_spec.empty() ? sublat::read_table_file(right_file)
                              : sublat::construct(right_spec);
  }();
  sublat::SubsemigroupLattice L1 = sublat::sub_lattice(S, bound);
  sublat::SubsemigroupLattice L2 = sublat::sub_lattice(T, bound);
  std::optional<sublat::LatticeIso> iso = sublat::lattice_iso(L1, L2);
  std::optional<sublat::InducedBijection> ind;
  if (iso) {
    ind = sublat::induced_bijection(L1, L2, *iso);
  }

  if (fmt == "structured") {
    nlohmann::json j;
    j["left_nodes"]  = L1.size();
    j["right_nodes"] = L2.size();
    j["isomorphic"]  = iso.has_value();
    j["map"]         = iso ? nlohmann::json(iso->map) : nlohmann::json();
    if (ind) {
      nlohmann::json b;
      b["phi"]        = ind->phi;
      b["induces"]    = ind->induces;
      b["diagnostic"] = ind->diagnostic;
      j["induced"] = b;
    } else {
      j["induced"] = nullptr;
    }
    emit_json(j);
    return 0;
  }
  std::cout << "left nodes: " << L1.size() << '\n'
            << "right nodes: " << L2.size() << '\n';
  if (!iso) {
    std::cout << "no lattice isomorphism\n";
    return 0;
  }
  std::cout << "lattice isomorphism:\n";
  for (int v = 0; v < L1.size(); ++v) {
    std::cout << "  " << sublat::lattice_node_label(L1, v) << " -> "
              << sublat::lattice_node_label(L2, iso->map[static_cast<std::size_t>(v)]) << '\n';
  }
  if (ind) {
    std::cout << "element bijection:";
    for (std::size_t x = 0; x < ind->phi.size(); ++x) {
      std::cout << ' ' << S.name(static_cast<int>(x)) << "->"
                << T.name(ind->phi[x]);
    }
    std::cout << "\n  (" << ind->diagnostic << ")\n";
  } else {
    std::cout << "element bijection: none (some node image has no unique generator)\n";
  }
  return 0;
}

int run_enumerate(int n, std::string const& mode_text, std::string const& fmt,
                  bool allow_order_6) {
  require_format(fmt, {"text", "structured"});
  sublat::EnumMode mode = sublat::parse_mode(mode_text);
  std::vector<sublat::FiniteSemigroup> tables = sublat::all_semigroups(n, mode, allow_order_6);
  if (fmt == "structured") {
    nlohmann::json j;
    j["n"]     = n;
    j["mode"]  = mode_text;
    j["count"] = tables.size();
    nlohmann::json arr = nlohmann::json::array();
    for (sublat::FiniteSemigroup const& S : tables) {
      arr.push_back(sublat::table_to_json(S));
    }
    j["tables"] = arr;
    emit_json(j);
    return 0;
  }
  std::cout << "n: " << n << '\n'
            << "mode: " << mode_text << '\n'
            << "count: " << tables.size() << '\n';
  return 0;
}

int run_mk(std::int64_t k, std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  sublat::MkModel mk = sublat::mk_model(k);
  if (fmt == "structured") {
    nlohmann::json j;
    j["k"]     = k;
    j["order"] = mk.sg.order();
    j["table"] = sublat::table_to_json(mk.sg);
    emit_json(j);
    return 0;
  }
  std::cout << "k: " << k << '\n'
            << "order: " << mk.sg.order() << '\n'
            << "elements:\n";
  for (int i = 0; i < mk.sg.order(); ++i) {
    std::cout << "  " << i << ": " << mk.sg.name(i)
              << (i == 0 ? " (collapsed ideal)" : "") << '\n';
  }
  std::cout << "table:\n" << table_grid(mk.sg);
  return 0;
}

int run_rho(std::int64_t k, std::string const& flavor_text, std::string const& fmt,
            std::int64_t bound) {
  require_format(fmt, {"text", "structured"});
  std::optional<sublat::RhoFlavor> flavor = sublat::parse_rho_flavor(flavor_text);
  if (!flavor) {
    throw UsageError("unknown flavor: " + flavor_text + " (use omega, inf+ or inf-)");
  }
  sublat::RhoType            t(k, *flavor);
  sublat::LrValues           lr = sublat::lr_values(t, bound);
  sublat::MonogenicStructure ms = sublat::classify_monogenic(t);
  if (fmt == "structured") {
    nlohmann::json j;
    j["type"]   = t.display();
    j["k"]      = k;
    j["flavor"] = sublat::to_string(*flavor);
    auto side = [](sublat::LrBound const& b) {
      nlohmann::json s;
      s["value"]   = b.value ? nlohmann::json(*b.value) : nlohmann::json();
      s["bound"]   = b.bound;
      s["display"] = b.display();
      return s;
    };
    j["l"]            = side(lr.l);
    j["r"]            = side(lr.r);
    j["kernel_kind"]  = ms.kernel_kind;
    j["dclass_sizes"] = ms.dclass_sizes;
    j["chain_length"] = ms.chain_length;
    emit_json(j);
    return 0;
  }
  std::cout << "type: " << t.display() << '\n'
            << "l: " << lr.l.display() << '\n'
            << "r: " << lr.r.display() << '\n'
            << "kernel kind: " << ms.kernel_kind << '\n';
  std::cout << "dclass sizes:";
  if (ms.dclass_sizes.empty()) {
    std::cout << " none";
  }
  for (std::int64_t s : ms.dclass_sizes) {
    std::cout << ' ' << s;
  }
  std::cout << '\n' << "chain length: " << ms.chain_length << '\n';
  return 0;
}

// Cross-checks the key-wise quotient against the retract-ideal-extension
// reconstruction on every element pair up to the weight bound.
int run_extension(std::int64_t k, std::string const& flavor_text, std::string const& fmt,
                  std::int64_t max_weight) {
  require_format(fmt, {"text", "structured"});
  std::optional<sublat::RhoFlavor> flavor = sublat::parse_rho_flavor(flavor_text);
  if (!flavor) {
    throw UsageError("unknown flavor: " + flavor_text + " (use omega, inf+ or inf-)");
  }
  sublat::RhoType            t(k, *flavor);
  sublat::RhoQuotient        q(t);
  sublat::ExtensionQuotient  ext(t);
  std::vector<sublat::C2Elt> elems = sublat::elements_of_weight_at_most(max_weight);

  long embed_ok = 0;
  for (sublat::C2Elt const& u : elems) {
    if (ext.embed(u) == q.class_of(u)) {
      ++embed_ok;
    }
  }
  long pairs = 0;
  std::optional<std::pair<sublat::C2Elt, sublat::C2Elt>> mismatch;
  for (sublat::C2Elt const& u : elems) {
    for (sublat::C2Elt const& v : elems) {
      ++pairs;
      if (!mismatch
          && !(ext.multiply(ext.embed(u), ext.embed(v))
               == q.multiply(q.class_of(u), q.class_of(v)))) {
        mismatch = std::make_pair(u, v);
      }
    }
  }
  bool pass = !mismatch && embed_ok == static_cast<long>(elems.size());

  if (fmt == "structured") {
    nlohmann::json j;
    j["type"]              = t.display();
    j["finite_part_order"] = ext.mk().sg.order();
    j["max_weight"]        = max_weight;
    j["elements"]          = elems.size();
    j["embeddings_agree"]  = embed_ok;
    j["pairs_checked"]     = pairs;
    j["result"]            = pass ? "pass" : "FAIL";
    emit_json(j);
  } else {
    std::cout << "type: " << t.display() << '\n'
              << "finite part order: " << ext.mk().sg.order() << '\n'
              << "max weight: " << max_weight << '\n'
              << "elements: " << elems.size() << '\n'
              << "embeddings agree: " << embed_ok << '/' << elems.size() << '\n'
              << "pairs checked: " << pairs << '\n';
    if (mismatch) {
      std::cout << "mismatch at u=" << to_string(mismatch->first)
                << " v=" << to_string(mismatch->second) << '\n';
    }
    std::cout << "result: " << (pass ? "pass" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

void print_suite_text(sublat::SuiteReport const& rep) {
  std::cout << "suite: " << rep.name << '\n';
  for (sublat::SuiteCheck const& c : rep.checks) {
    std::cout << "  " << c.id << ": " << to_string(c.status);
    if (c.status != sublat::CheckStatus::pass && !c.witness.empty()) {
      std::cout << " (" << c.witness << ")";
    }
    std::cout << '\n';
  }
  std::cout << "result: " << (rep.passed() ? "pass" : "FAIL")
            << " (" << rep.checks.size() << " checks)\n";
}

// Timing is left out of both formats so repeated runs and different
// --threads values stay byte-identical.
int run_suite_cmd(std::string const& name, bool list, int threads, std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  if (list) {
    for (std::string const& s : sublat::suite_names()) {
      std::cout << s << '\n';
    }
    return 0;
  }
  if (name.empty()) {
    throw UsageError("pass a suite name, `all`, or --list");
  }
  std::vector<std::string> names;
  if (name == "all") {
    names = sublat::suite_names();
  } else {
    names.push_back(name);
  }
  int            failed = 0;
  nlohmann::json arr    = nlohmann::json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    sublat::SuiteReport rep = sublat::run_suite(names[i], threads);
    if (!rep.passed()) {
      ++failed;
    }
    if (fmt == "structured") {
      nlohmann::json r;
      r["name"]   = rep.name;
      r["passed"] = rep.passed();
      nlohmann::json checks = nlohmann::json::array();
      for (sublat::SuiteCheck const& c : rep.checks) {
        nlohmann::json cj;
        cj["id"]      = c.id;
        cj["status"]  = to_string(c.status);
        cj["witness"] = c.witness;
        checks.push_back(cj);
      }
      r["checks"] = checks;
      arr.push_back(r);
    } else {
      if (i > 0) {
        std::cout << '\n';
      }
      print_suite_text(rep);
    }
  }
  if (fmt == "structured") {
    emit_json(arr);
  } else if (names.size() > 1) {
    std::cout << "\nsuites passed: " << (names.size() - static_cast<std::size_t>(failed))
              << '/' << names.size() << '\n';
  }
  return failed == 0 ? 0 : 1;
}

int run_corpus(std::string const& dir, int n, std::string const& mode_text,
               std::string const& fmt) {
  require_format(fmt, {"text", "structured"});
  sublat::EnumMode                     mode = sublat::parse_mode(mode_text);
  std::vector<sublat::FiniteSemigroup> tables =
      sublat::corpus_cached(std::filesystem::path(dir), n, mode);
  std::string digest = sublat::digest_hex(sublat::corpus_serialize(tables));
  std::string file   = (std::filesystem::path(dir) / sublat::corpus_file_name(n, mode)).string();
  if (fmt == "structured") {
    nlohmann::json j;
    j["n"]      = n;
    j["mode"]   = mode_text;
    j["count"]  = tables.size();
    j["file"]   = file;
    j["digest"] = digest;
    emit_json(j);
    return 0;
  }
  std::cout << "n: " << n << '\n'
            << "mode: " << mode_text << '\n'
            << "count: " << tables.size() << '\n'
            << "file: " << file << '\n'
            << "digest: " << digest << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup tables, subsemigroup lattices and monogenic"
               " inverse quotients",
               "sublat"};
  app.require_subcommand(1);
  int rc = 0;

  auto format_opt = [](CLI::App* sub, std::string& fmt) {
    sub->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "dot", "structured"}))
        ->capture_default_str();
  };
  auto input_opts = [](CLI::App* sub, std::string& spec, std::string& file) {
    sub->add_option("--spec", spec, "inline constructor, e.g. left_zero:3");
    sub->add_option("--file", file, "JSON table file, - for standard input");
  };

  // construct
  std::string co_spec, co_file, co_fmt = "text", co_out;
  {
    auto* sub = app.add_subcommand("construct", "build a table and print or save it");
    input_opts(sub, co_spec, co_file);
    format_opt(sub, co_fmt);
    sub->add_option("--out", co_out, "write the table to this file instead");
    sub->callback([&] { rc = run_construct(co_spec, co_file, co_fmt, co_out); });
  }

  // classify
  std::string cl_spec, cl_file, cl_fmt = "text";
  {
    auto* sub = app.add_subcommand("classify", "property report for a table");
    input_opts(sub, cl_spec, cl_file);
    format_opt(sub, cl_fmt);
    sub->callback([&] { rc = run_classify(cl_spec, cl_file, cl_fmt); });
  }

  // green
  std::string gr_spec, gr_file, gr_fmt = "text";
  {
    auto* sub = app.add_subcommand("green", "Green relation classes");
    input_opts(sub, gr_spec, gr_file);
    format_opt(sub, gr_fmt);
    sub->callback([&] { rc = run_green(gr_spec, gr_file, gr_fmt); });
  }

  // gamma
  std::string ga_spec, ga_file, ga_fmt = "text";
  {
    auto* sub = app.add_subcommand(
        "gamma", "least inverse-quotient congruence of an orthodox semigroup");
    input_opts(sub, ga_spec, ga_file);
    format_opt(sub, ga_fmt);
    sub->callback([&] { rc = run_gamma(ga_spec, ga_file, ga_fmt); });
  }

  // kernel
  std::string ke_spec, ke_file, ke_fmt = "text";
  bool        ke_decompose = false;
  {
    auto* sub = app.add_subcommand("kernel", "minimal ideal, optionally decomposed");
    input_opts(sub, ke_spec, ke_file);
    format_opt(sub, ke_fmt);
    sub->add_flag("--decompose", ke_decompose,
                  "split the kernel as group x rectangular band");
    sub->callback([&] { rc = run_kernel(ke_spec, ke_file, ke_fmt, ke_decompose); });
  }

  // sublattice
  std::string sl_spec, sl_file, sl_fmt = "text";
  int         sl_bound = sublat::kSubLatticeBound;
  {
    auto* sub = app.add_subcommand("sublattice", "lattice of all subsemigroups");
    input_opts(sub, sl_spec, sl_file);
    format_opt(sub, sl_fmt);
    sub->add_option("--bound", sl_bound, "largest ground order accepted")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->callback([&] { rc = run_sublattice(sl_spec, sl_file, sl_fmt, sl_bound); });
  }

  // latiso
  std::string li_left, li_left_file, li_right, li_right_file, li_fmt = "text";
  int         li_bound = sublat::kSubLatticeBound;
  {
    auto* sub = app.add_subcommand("latiso",
                                   "search for a subsemigroup-lattice isomorphism");
    sub->add_option("--left", li_left, "inline spec of the left semigroup");
    sub->add_option("--left-file", li_left_file, "JSON table file for the left semigroup");
    sub->add_option("--right", li_right, "inline spec of the right semigroup");
    sub->add_option("--right-file", li_right_file, "JSON table file for the right semigroup");
    format_opt(sub, li_fmt);
    sub->add_option("--bound", li_bound, "largest ground order accepted")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->callback([&] {
      rc = run_latiso(li_left, li_left_file, li_right, li_right_file, li_fmt, li_bound);
    });
  }

  // enumerate
  int         en_n = 0;
  std::string en_mode = "iso", en_fmt = "text";
  bool        en_six = false;
  {
    auto* sub = app.add_subcommand("enumerate",
                                   "all semigroups of one order up to equivalence");
    sub->add_option("--n", en_n, "order to enumerate")->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", en_mode, "equivalence: iso or iso_or_anti")
        ->check(CLI::IsMember({"iso", "iso_or_anti"}))
        ->capture_default_str();
    format_opt(sub, en_fmt);
    sub->add_flag("--allow-order-6", en_six, "permit the multi-hour order 6 run");
    sub->callback([&] { rc = run_enumerate(en_n, en_mode, en_fmt, en_six); });
  }

  // mk
  std::int64_t mk_k = 0;
  std::string  mk_fmt = "text";
  {
    auto* sub = app.add_subcommand("mk", "finite Rees quotient M_k as a table");
    sub->add_option("--k", mk_k, "collapse everything of weight >= k")
        ->required()
        ->check(CLI::PositiveNumber);
    format_opt(sub, mk_fmt);
    sub->callback([&] { rc = run_mk(mk_k, mk_fmt); });
  }

  // rho
  std::int64_t rh_k = 0, rh_bound = 0;
  std::string  rh_flavor, rh_fmt = "text";
  {
    auto* sub = app.add_subcommand("rho", "inspect one congruence family quotient");
    sub->add_option("--k", rh_k, "weight threshold k >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--flavor", rh_flavor, "omega, inf+ or inf-")->required();
    format_opt(sub, rh_fmt);
    sub->add_option("--bound", rh_bound, "l/r witness search bound (default 3k)")
        ->check(CLI::PositiveNumber);
    sub->callback([&] { rc = run_rho(rh_k, rh_flavor, rh_fmt, rh_bound); });
  }

  // extension
  std::int64_t ex_k = 0, ex_bound = 3;
  std::string  ex_flavor, ex_fmt = "text";
  {
    auto* sub = app.add_subcommand(
        "extension", "check the quotient against its ideal-extension reconstruction");
    sub->add_option("--k", ex_k, "weight threshold k >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--flavor", ex_flavor, "omega, inf+ or inf-")->required();
    format_opt(sub, ex_fmt);
    sub->add_option("--bound", ex_bound, "largest element weight compared")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->callback([&] { rc = run_extension(ex_k, ex_flavor, ex_fmt, ex_bound); });
  }

  // suite
  std::string su_name, su_fmt = "text";
  bool        su_list = false;
  int         su_threads = 1;
  {
    auto* sub = app.add_subcommand("suite", "run a verification suite (or all)");
    sub->add_option("name", su_name, "suite name or `all`");
    sub->add_flag("--list", su_list, "print the registered suite names");
    sub->add_option("--threads", su_threads, "worker threads for sweep suites")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    format_opt(sub, su_fmt);
    sub->callback([&] { rc = run_suite_cmd(su_name, su_list, su_threads, su_fmt); });
  }

  // corpus
  std::string cp_dir = "corpus-cache", cp_mode = "iso", cp_fmt = "text";
  int         cp_n = 0;
  {
    auto* sub = app.add_subcommand("corpus", "build or reuse the on-disk corpus cache");
    sub->add_option("--dir", cp_dir, "cache directory")->capture_default_str();
    sub->add_option("--n", cp_n, "order to cache")->required()->check(CLI::PositiveNumber);
    sub->add_option("--mode", cp_mode, "equivalence: iso or iso_or_anti")
        ->check(CLI::IsMember({"iso", "iso_or_anti"}))
        ->capture_default_str();
    format_opt(sub, cp_fmt);
    sub->callback([&] { rc = run_corpus(cp_dir, cp_n, cp_mode, cp_fmt); });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (sublat::SublatError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
