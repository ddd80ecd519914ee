#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cslab/action.hpp"
#include "cslab/json_io.hpp"
#include "cslab/series.hpp"
#include "cslab/spitzer.hpp"
#include "cslab/svg.hpp"
#include "cslab/verify.hpp"

using namespace cslab;

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyFailure = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> to_ints(const std::string& text) {
  std::vector<int> out;
  for (auto v : parse_int_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::string join_big(const std::vector<BigInt>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

void write_output(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file, std::ios::binary);
  if (!out) throw UsageError("cannot open " + file + " for writing");
  out << text;
}

// enumerate

struct EnumerateOpts {
  int k = 2;
  int n = 0;
  bool bridges = false;
  std::string format = "text";
};

int run_enumerate(const EnumerateOpts& o) {
  long index = 0;
  if (o.format == "csv") std::cout << "index,kind,k,steps\n";
  auto emit = [&](const LatticePath& p) {
    if (o.format == "json") {
      std::cout << io::to_json(p).dump() << '\n';
    } else if (o.format == "csv") {
      std::cout << index << ',' << to_string(p.kind) << ',' << p.k << ',' << p.step_string() << '\n';
    } else {
      std::cout << p.step_string() << '\n';
    }
    ++index;
  };
  if (o.bridges) {
    visit_bridges(o.n, o.k, emit);
  } else {
    visit_catalan(o.n, o.k, emit);
  }
  return 0;
}

// count

struct CountOpts {
  int k = 2;
  int n = 0;
  bool by_type = false;
  bool by_below = false;
  bool by_above = false;
};

int run_count(const CountOpts& o) {
  if (o.by_type + o.by_below + o.by_above > 1) throw UsageError("choose at most one of --by-type, --by-below-axis, --by-above-axis");
  if (o.by_type) {
    std::map<TypeVector, BigInt> census;
    visit_catalan(o.n, o.k, [&](const LatticePath& p) { census[path_type(augment(p))] += 1; });
    std::cout << "type,count\n";
    for (const auto& [t, c] : census) std::cout << '"' << join_ints(t) << "\"," << c.get_str() << '\n';
    return 0;
  }
  if (o.by_below || o.by_above) {
    if (o.by_above && o.k != 2) throw UsageError("--by-above-axis needs --k 2");
    const int top = o.by_above ? 2 * o.n : (o.k - 1) * o.n;
    std::vector<BigInt> hist(static_cast<std::size_t>(top) + 1, BigInt(0));
    visit_bridges(o.n, o.k, [&](const LatticePath& b) {
      hist[static_cast<std::size_t>(o.by_above ? steps_above_axis(b) : up_steps_below_axis(b))] += 1;
    });
    std::cout << (o.by_above ? "above_axis" : "ups_below_axis") << ",count\n";
    for (std::size_t r = 0; r < hist.size(); ++r) std::cout << r << ',' << hist[r].get_str() << '\n';
    return 0;
  }
  BigInt total = 0;
  visit_catalan(o.n, o.k, [&](const LatticePath&) { total += 1; });
  std::cout << total.get_str() << '\n';
  return 0;
}

// perm

struct PermOpts {
  int k = 2;
  std::string path;
  std::string perm;
  bool short_form = false;
  bool reconstruct = false;
  std::string format = "text";
};

int run_perm(const PermOpts& o) {
  if (o.reconstruct) {
    if (o.perm.empty()) throw UsageError("--reconstruct needs --perm");
    const auto p = reconstruct(Permutation(to_ints(o.perm)), o.k);
    std::cout << (o.format == "json" ? io::to_json(p).dump() : p.step_string()) << '\n';
    return 0;
  }
  if (o.path.empty()) throw UsageError("perm needs --path (or --reconstruct --perm)");
  const auto p = parse_catalan_or_augmented(o.path, o.k);
  Permutation out;
  if (o.short_form) {
    out = short_csp(p.kind == PathKind::Augmented ? deaugment(p) : p);
  } else {
    out = full_csp(p.kind == PathKind::Augmented ? p : augment(p));
  }
  std::cout << (o.format == "json" ? io::to_json(out).dump() : out.to_string()) << '\n';
  return 0;
}

// types

int run_types(int k, const std::string& vec) {
  std::vector<int> t = to_ints(vec);
  if (t.empty() || t[0] < 1) throw UsageError("--vec needs a first entry of at least 1");
  std::cout << type_count(t, k).get_str() << '\n';
  return 0;
}

// genfun

struct GenfunOpts {
  int k = 2;
  int r = 1;
  int deg = 6;
  int n = 0;
  bool continuant = false;
  bool ones = false;
  std::string format = "text";
};

std::string monomial(const Exponents& e) {
  std::string m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!m.empty()) m += '*';
    m += "x" + std::to_string(i + 1);
    if (e[i] > 1) m += "^" + std::to_string(e[i]);
  }
  return m.empty() ? "1" : m;
}

int run_genfun(const GenfunOpts& o) {
  if (o.continuant) {
    if (o.ones) {
      const auto v = continuant_ones(o.k, o.n);
      std::cout << "n,K\n";
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << i << ',' << v[i].get_str() << '\n';
    } else {
      const auto p = continuant_symbolic(o.k, o.n);
      std::cout << (o.format == "json" ? io::to_json(p).dump() : p.to_string()) << '\n';
    }
    return 0;
  }
  const auto s = t_series(o.k, o.r, o.deg);
  if (o.format == "json") {
    std::cout << io::to_json(s).dump() << '\n';
  } else if (o.format == "csv") {
    std::cout << "type,coefficient\n";
    for (const auto& [e, c] : s.poly.terms()) {
      std::size_t len = e.size();
      while (len > 0 && e[len - 1] == 0) --len;
      std::cout << '"' << join_ints(std::vector<int>(e.begin(), e.begin() + static_cast<long>(len))) << "\","
                << c.get_str() << '\n';
    }
  } else {
    for (const auto& [e, c] : s.poly.terms()) std::cout << c.get_str() << ' ' << monomial(e) << '\n';
  }
  return 0;
}

// orbits

struct OrbitOpts {
  std::string cls = "short-csp";
  int k = 2;
  int n = 1;
  bool series = false;
  int deg = 6;
  bool members = false;
  std::string format = "text";
};

int run_orbits(const OrbitOpts& o) {
  const auto cls = PermClass::by_name(o.cls, o.k);
  if (o.series) {
    const auto s = orbit_series(cls, o.deg);
    std::cout << "n,P,O,P(y),O(y)\n";
    for (int n = 1; n <= o.deg; ++n) {
      const auto i = static_cast<std::size_t>(n);
      std::cout << n << ',' << s.P[i].get_str() << ',' << s.O[i].get_str() << ",\"" << s.Pxy[i].to_string()
                << "\",\"" << s.Oxy[i].to_string() << "\"\n";
    }
    if (!s.agrees()) {
      std::cout << "closed forms disagree with the counts\n";
      return kVerifyFailure;
    }
    return 0;
  }
  for (const auto& rec : orbits(cls, o.n, o.members)) {
    if (o.format == "json") {
      auto j = io::to_json(rec);
      if (o.members) {
        j["members"] = io::json::array();
        for (const auto& m : rec.members) j["members"].push_back(m.vector());
      }
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "rep=" << rec.rep.to_string() << " I={" << join_ints(rec.flip_indices) << "} size="
                << rec.size.get_str();
      if (o.members) {
        std::cout << " members=";
        for (std::size_t i = 0; i < rec.members.size(); ++i) std::cout << (i ? " " : "") << rec.members[i].to_string();
      }
      std::cout << '\n';
    }
  }
  return 0;
}

// verify

int run_verify(const std::string& suite, int max) {
  const bool ok = verify::run_suite(
      suite, max,
      [](const verify::CaseResult& c) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      },
      [](const std::string& line) { std::cout << line; });
  std::cout << (ok ? "all cases passed" : "verification failed") << '\n';
  return ok ? 0 : kVerifyFailure;
}

// render

int run_render(const std::string& path, int k, const std::string& tree, const std::string& file) {
  if (path.empty() == tree.empty()) throw UsageError("render needs exactly one of --path or --tree");
  if (!path.empty()) {
    if (k < 2) throw UsageError("render --path needs --k");
    write_output(file, svg::render_path(parse_catalan_or_augmented(path, k)));
  } else {
    const Permutation p(to_ints(tree));
    write_output(file, svg::render_tree(build_fs_tree(p.values())));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan-Spitzer permutation toolkit: lattice paths, Foata-Strehl trees, type series, orbits"};
  app.require_subcommand(1);
  int rc = 0;

  EnumerateOpts eo;
  auto* enumerate = app.add_subcommand("enumerate", "Stream k-Catalan paths (or bridges) in lexicographic order, Up < Down");
  enumerate->add_option("--k", eo.k, "Down step is (1, 1-k)")->required()->check(CLI::Range(2, 64));
  enumerate->add_option("--n", eo.n, "Number of down steps")->required()->check(CLI::Range(0, 64));
  enumerate->add_flag("--bridges", eo.bridges, "All paths ending at height 0, no sign constraint");
  enumerate->add_option("--format", eo.format, "text: step strings; json: one path object per line; csv: index,kind,k,steps")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->callback([&] { rc = run_enumerate(eo); });

  CountOpts co;
  auto* count = app.add_subcommand("count", "Count paths, optionally tabulated (CSV: key,count)");
  count->add_option("--k", co.k)->required()->check(CLI::Range(2, 64));
  count->add_option("--n", co.n)->required()->check(CLI::Range(0, 64));
  count->add_flag("--by-type", co.by_type, "Catalan paths by type of the augmented path (type,count)");
  count->add_flag("--by-below-axis", co.by_below, "Bridges by up steps starting below the axis (ups_below_axis,count)");
  count->add_flag("--by-above-axis", co.by_above, "k=2 bridges by steps above the axis (above_axis,count)");
  count->callback([&] { rc = run_count(co); });

  PermOpts po;
  auto* perm = app.add_subcommand("perm", "Catalan-Spitzer permutation of a path, or the path of a short permutation");
  perm->add_option("--k", po.k)->required()->check(CLI::Range(2, 64));
  perm->add_option("--path", po.path, "U/D string, catalan or augmented (told apart by step counts)");
  perm->add_flag("--short", po.short_form, "Print the short permutation instead of the full one");
  perm->add_flag("--reconstruct", po.reconstruct, "Rebuild the catalan path from --perm");
  perm->add_option("--perm", po.perm, "Comma-separated one-line notation");
  perm->add_option("--format", po.format)->check(CLI::IsMember({"text", "json"}));
  perm->callback([&] { rc = run_perm(po); });

  int tk = 2;
  std::string tvec;
  auto* types = app.add_subcommand("types", "Number of augmented paths with the given level counts");
  types->add_option("--k", tk)->required()->check(CLI::Range(2, 64));
  types->add_option("--vec", tvec, "Points per level, e.g. 3,2,3,3,1,1")->required();
  types->callback([&] { rc = run_types(tk, tvec); });

  GenfunOpts go;
  auto* genfun = app.add_subcommand("genfun", "Type generating function coefficients, or k-continuants");
  genfun->add_option("--k", go.k)->required()->check(CLI::Range(2, 64));
  genfun->add_option("--r", go.r, "Number of level variables")->check(CLI::Range(1, 64));
  genfun->add_option("--deg", go.deg, "Total degree bound")->check(CLI::Range(0, 64));
  genfun->add_flag("--continuant", go.continuant, "Print K_{k,n} instead");
  genfun->add_option("--n", go.n, "Continuant order")->check(CLI::Range(0, 10000));
  genfun->add_flag("--ones", go.ones, "Table of K_{k,m}(1,...,1) for m = 0..n (CSV: n,K)");
  genfun->add_option("--format", go.format, "text: 'coef monomial' lines; csv: type,coefficient; json: series object")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  genfun->callback([&] { rc = run_genfun(go); });

  OrbitOpts oo;
  auto* orbit = app.add_subcommand("orbits", "Orbits of the restricted Foata-Strehl action on a permutation class");
  orbit->add_option("--class", oo.cls)->check(CLI::IsMember({"all", "short-csp", "short-k-csp"}));
  orbit->add_option("--k", oo.k, "Parameter of short-k-csp")->check(CLI::Range(2, 64));
  orbit->add_option("--n", oo.n, "Permutation size")->check(CLI::Range(0, 12));
  orbit->add_flag("--series", oo.series, "Print P, O, P(x,y), O(x,y) through --deg (CSV: n,P,O,P(y),O(y))");
  orbit->add_option("--deg", oo.deg)->check(CLI::Range(0, 12));
  orbit->add_flag("--members", oo.members, "List every orbit member");
  orbit->add_option("--format", oo.format)->check(CLI::IsMember({"text", "json"}));
  orbit->callback([&] { rc = run_orbits(oo); });

  std::string suite = "all";
  int vmax = 6;
  auto* ver = app.add_subcommand("verify", "Run property checks; prints PASS/FAIL per case");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"chung-feller", "huq", "raney", "injectivity",
                                                           "fs-characterization", "type-oracle", "continuant",
                                                           "orbit-genfun", "all"}));
  ver->add_option("--max", vmax, "Size bound")->check(CLI::Range(0, 12));
  ver->callback([&] { rc = run_verify(suite, vmax); });

  std::string rpath;
  std::string rtree;
  std::string rfile;
  int rk = 0;
  auto* render = app.add_subcommand("render", "SVG drawing of a path or of the Foata-Strehl tree of a permutation");
  render->add_option("--path", rpath, "U/D string");
  render->add_option("--k", rk);
  render->add_option("--tree", rtree, "Comma-separated permutation");
  render->add_option("--svg", rfile, "Output file (stdout if omitted)");
  render->callback([&] { rc = run_render(rpath, rk, rtree, rfile); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FlipClosureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailure;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return rc;
}
