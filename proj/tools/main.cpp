#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resolvent/io.hpp"
#include "resolvent/relclasses.hpp"
#include "resolvent/towers.hpp"

using namespace resolvent;

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::string backend;
  std::string klass = "inj";
  int p = 0;  // 0: take the modulus from the input (default 5 otherwise)
  uint64_t seed = 0;
  bool seed_set = false;
  int depth = 4;
  int levels = 3;
  int degree = 0;
  int steps = 5;
  int k = 0;
};

/* Check report: one line per certified property, nonzero exit on any failure. */
struct Report {
  bool ok = true;
  void check(const std::string& anchor, const std::string& what, bool pass) {
    std::cout << "check " << anchor << " — " << what << ": " << (pass ? "PASS" : "FAIL") << "\n";
    ok = ok && pass;
  }
  void info(const std::string& what) { std::cout << what << "\n"; }
  int exit_code() const { return ok ? 0 : 1; }
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrKind::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_json(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return true;
  size_t a = text.find_first_not_of(" \t\r\n");
  return a != std::string::npos && (text[a] == '{' || text[a] == '[');
}

void apply_p(const Options& opt, int file_p) {
  if (opt.p != 0 && opt.p != file_p)
    fail(ErrKind::ParseError, "--p disagrees with the p header of the input (" + std::to_string(opt.p) +
                                  " vs " + std::to_string(file_p) + ")");
}

Complex load_complex(const Options& opt) {
  std::string text = read_all(opt.input);
  io::ParsedComplex pc;
  if (looks_json(opt.input, text)) {
    pc = io::complex_from_json(text);
  } else {
    std::istringstream in(text);
    pc = io::complex_from_text(in);
  }
  apply_p(opt, pc.p);
  return pc.cx;
}

ChainMap load_chain_map(const Options& opt) {
  std::string text = read_all(opt.input);
  io::ParsedChainMap pm;
  if (looks_json(opt.input, text)) {
    pm = io::chain_map_from_json(text);
  } else {
    std::istringstream in(text);
    pm = io::chain_map_from_text(in);
  }
  apply_p(opt, pm.p);
  return pm.map;
}

std::vector<Complex> load_complex_list(const Options& opt) {
  std::string text = read_all(opt.input);
  std::vector<io::ParsedComplex> list;
  if (looks_json(opt.input, text)) {
    list = io::complex_list_from_json(text);
  } else {
    std::istringstream in(text);
    list = io::complex_list_from_text(in);
  }
  std::vector<Complex> out;
  for (auto& pc : list) {
    apply_p(opt, pc.p);
    out.push_back(pc.cx);
  }
  return out;
}

/* A complex concentrated in one degree, read as a single object. */
Obj load_object(const Options& opt) {
  Complex x = trim(load_complex(opt));
  require(x.lo == x.hi(), ErrKind::ParseError, "expected a complex concentrated in a single degree");
  return x.obj_at(x.lo);
}

void emit_complex(const Options& opt, const Complex& x) {
  int p = (int)fp::modulus();
  std::string body = opt.format == "json" ? io::to_json(x, p) : io::to_text(x, p);
  std::cout << body;
  std::cout << "digest " << std::hex << io::fnv1a(io::to_text(x, p)) << std::dec << "\n";
}

InjClass make_class(const Options& opt, const Backend& b) {
  if (opt.klass == "inj") return full_injectives(b);
  if (opt.klass == "torsion") return torsion_injectives();
  if (opt.klass.rfind("prod:", 0) == 0) {
    Options gopt = opt;
    gopt.input = opt.klass.substr(5);
    std::vector<Obj> gens;
    for (auto& cx : load_complex_list(gopt))
      for (auto& a : cx.objs)
        if (!a.is_zero()) gens.push_back(a);
    return prod_of(b, std::move(gens));
  }
  fail(ErrKind::ParseError, "unknown class '" + opt.klass + "' (expected inj, prod:<file>, torsion)");
}

bool degreewise_injective(const Complex& x) {
  for (auto& a : x.objs)
    if (!is_injective_obj(a)) return false;
  return true;
}

// ------------------------------------------------------------------ commands

int cmd_resolve(const Options& opt) {
  Complex x = load_complex(opt);
  auto r = inj_res_bounded_below(x, opt.depth);
  emit_complex(opt, r.res);
  Report rep;
  rep.info("window [" + std::to_string(r.res.lo) + ", " + std::to_string(r.window_hi) + "]" +
           (r.terminated ? ", terminated" : ""));
  rep.check("resolve.1", "terms are injective", degreewise_injective(r.res));
  bool mono = true;
  for (int n = x.lo; n <= x.hi(); ++n) mono = mono && is_mono(r.lambda.at(n));
  rep.check("resolve.2", "comparison map is a degreewise mono", mono);
  rep.check("resolve.3", "comparison map is a quasi-isomorphism in the window",
            is_quasi_iso_in(r.lambda, x.lo - 1, r.window_hi));
  return rep.exit_code();
}

int cmd_ce(const Options& opt) {
  Complex x = load_complex(opt);
  auto ce = ce_resolution(x, opt.depth);
  if (opt.format == "text") std::cout << io::grid_to_text(ce.grid, (int)fp::modulus());
  auto v = validate_ce(ce);
  Report rep;
  rep.check("ce.1", "columns vanish outside the support window", v.columns_windowed);
  rep.check("ce.2", "injective resolution of B^n", v.b_columns_resolve);
  rep.check("ce.3", "injective resolution of Z^n", v.z_columns_resolve);
  rep.check("ce.4", "injective resolution of H^n", v.h_columns_resolve);
  rep.check("ce.5", "injective resolution of the degreewise terms", v.full_columns_resolve);
  return rep.exit_code();
}

int cmd_tot(const Options& opt) {
  Complex x = load_complex(opt);
  auto ce = ce_resolution(x, opt.depth);
  auto t = ce_tot(ce);
  emit_complex(opt, t.tot.cx);
  Report rep;
  rep.info("window [" + std::to_string(x.lo) + ", " + std::to_string(t.window_hi) + "]");
  rep.check("tot.1", "terms are injective", degreewise_injective(t.tot.cx));
  rep.check("tot.2", "comparison map is a quasi-isomorphism in the window",
            is_quasi_iso_in(t.lambda, x.lo - 1, t.window_hi));
  return rep.exit_code();
}

int cmd_kill(const Options& opt) {
  Complex x = load_complex(opt);
  int n = opt.degree;
  auto kr = kill_coboundaries(x, n);
  emit_complex(opt, kr.k);
  Report rep;
  rep.info("added summand in degree " + std::to_string(n + 1) + ": " + iso_type(kr.added));
  rep.check("kill.1", "H^" + std::to_string(n) + " of the result vanishes",
            cohomology_obj(kr.k, n).is_zero());
  bool split = true, kerok = true;
  for (int m = kr.k.lo; m <= kr.k.hi(); ++m) {
    split = split && is_split_epi(kr.pi.at(m));
    Obj ker = kernel(kr.pi.at(m)).obj;
    if (m == n + 1)
      kerok = kerok && iso_type(ker) == iso_type(kr.added);
    else
      kerok = kerok && ker.is_zero();
  }
  rep.check("kill.2", "projection is a degreewise split epi", split);
  rep.check("kill.3", "kernel of the projection is the added stalk", kerok);
  bool untouched = true;
  for (int m = std::min(x.lo, n) - 1; m <= std::max(x.hi(), n + 1) + 1; ++m) {
    if (m == n || m == n + 1) continue;
    untouched = untouched && iso_type(cohomology_obj(kr.k, m)) == iso_type(cohomology_obj(x, m));
  }
  rep.check("kill.4", "cohomology away from the modified degrees is unchanged", untouched);
  return rep.exit_code();
}

int cmd_ding_yang(const Options& opt) {
  Complex x = load_complex(opt);
  auto dy = ding_yang_iterate(x, opt.steps);
  Report rep;
  for (int i = 0; i < opt.steps; ++i) {
    const Complex& y = dy.ys[i + 1];
    std::ostringstream os;
    os << "step " << i << ": kill at degree " << dy.ns[i] << ",";
    Complex t = trim(y);
    for (int m = t.lo; m <= t.hi(); ++m) os << " [" << m << "] " << iso_type(t.obj_at(m));
    rep.info(os.str());
  }
  emit_complex(opt, dy.ys[opt.steps]);
  bool killed = true;
  for (int i = 0; i < opt.steps; ++i)
    killed = killed && cohomology_obj(dy.ys[i + 1], dy.ns[i]).is_zero();
  rep.check("dy.1", "each scheduled degree is acyclic right after its step", killed);
  return rep.exit_code();
}

int cmd_tower(const Options& opt) {
  Complex x = load_complex(opt);
  auto tw = build_tower(x, opt.levels, opt.depth);
  auto lim = finite_limit(tw);
  auto lp = lim_prod_sequence(tw, lim);
  emit_complex(opt, lim.lim);
  Report rep;
  bool compat = true, split = true;
  for (int n = 0; n < tw.levels; ++n) {
    compat = compat && chain_map_is_zero(chain_map_sub(compose(tw.lambdas[n], tw.rhos[n]),
                                                       compose(tw.ts[n], tw.lambdas[n + 1])));
    for (int m = tw.es[n].lo; m <= tw.es[n].hi(); ++m)
      split = split && is_split_epi(tw.ts[n].at(m));
  }
  rep.check("tower.1", "transitions are compatible with the truncation maps", compat);
  rep.check("tower.2", "transitions are degreewise split epi", split);
  rep.check("tower.3", "finite limit projects isomorphically onto the deepest level",
            is_degreewise_iso(lim.projs[tw.levels]));
  rep.check("tower.4", "explicit right inverse of the shifted-difference map", lp.right_inverse_ok);
  rep.check("tower.5", "limit matches the degreewise kernels", lp.kernel_ok);
  rep.check("tower.6", "cohomology stabilizes in the certified windows", stabilization_check(tw));
  return rep.exit_code();
}

int cmd_rel_resolve(const Options& opt) {
  Obj a = load_object(opt);
  InjClass cls = make_class(opt, a.backend);
  auto r = rel_inj_res(cls, a, opt.depth);
  emit_complex(opt, r.res);
  Report rep;
  rep.info(r.terminated ? "terminated at length " + std::to_string(trim(r.res).hi())
                        : "not terminated within depth " + std::to_string(opt.depth));
  bool inclass = true;
  for (auto& t : r.res.objs) inclass = inclass && in_class(cls, t);
  rep.check("rel.1", "terms lie in the class", inclass);
  rep.check("rel.2", "augmentation is a relative mono", is_I_mono(cls, r.aug));
  return rep.exit_code();
}

int cmd_check_we(const Options& opt) {
  ChainMap f = load_chain_map(opt);
  InjClass cls = make_class(opt, f.src.backend);
  Report rep;
  rep.check("we.1", "relative weak equivalence", is_I_we(cls, f));
  return rep.exit_code();
}

int cmd_check_fib(const Options& opt) {
  ChainMap f = load_chain_map(opt);
  InjClass cls = make_class(opt, f.src.backend);
  Report rep;
  bool certified = is_I_fibration(cls, f) == FibrationStatus::Certified;
  rep.info(certified ? "CERTIFIED" : "UNKNOWN");
  rep.check("fib.1", "split-epi-with-class-kernels certificate", certified);
  return rep.exit_code();
}

int cmd_ab4(const Options& opt) {
  auto inputs = load_complex_list(opt);
  require(!inputs.empty(), ErrKind::ParseError, "ab4-check needs at least one object");
  InjClass cls = make_class(opt, inputs[0].backend);
  std::vector<Complex> family;
  for (auto& cx : inputs) {
    Complex t = trim(cx);
    require(t.lo == t.hi(), ErrKind::ParseError, "expected objects: complexes concentrated in one degree");
    family.push_back(rel_inj_res(cls, t.obj_at(t.lo), opt.depth).res);
  }
  auto rep4 = ab4_I_k_check(cls, family, opt.k, opt.depth);
  Report rep;
  for (int n = rep4.n_lo; n <= rep4.n_hi; ++n) {
    int i = n - rep4.n_lo;
    rep.info("degree -" + std::to_string(n) + ": hom route " + (rep4.via_hom[i] ? "exact" : "not exact") +
             ", mono route " + (rep4.via_mono[i] ? "exact" : "not exact"));
  }
  rep.check("ab4.1", "the two exactness routes agree in every probed degree", rep4.agree);
  return rep.exit_code();
}

int cmd_icodim(const Options& opt) {
  Obj a = load_object(opt);
  InjClass cls = make_class(opt, a.backend);
  auto bound = I_codim_upper(cls, a, opt.depth);
  if (bound)
    std::cout << "relative codimension <= " << *bound << "\n";
  else
    std::cout << "no terminating resolution within depth " << opt.depth << "\n";
  return 0;
}

Complex random_bounded_complex(const Backend& b, std::mt19937_64& rng, int lo, int hi, int max_dim) {
  std::vector<Obj> objs;
  for (int n = lo; n <= hi; ++n) objs.push_back(random_obj(b, rng, max_dim));
  std::vector<Mor> diffs;
  for (int n = lo; n < hi; ++n) {
    if (n == lo) {
      diffs.push_back(random_mor(rng, objs[0], objs[1]));
      continue;
    }
    auto q = cokernel(diffs.back());
    diffs.push_back(compose(random_mor(rng, q.obj, objs[n + 1 - lo]), q.map));
  }
  return make_complex(b, lo, std::move(objs), std::move(diffs));
}

int cmd_selftest(const Options& opt) {
  if (opt.p != 0) fp::set_modulus(opt.p);
  std::vector<Backend> backends;
  if (!opt.backend.empty())
    backends.push_back(io::parse_backend(opt.backend));
  else
    backends = {{BackendKind::VectFp, 1}, {BackendKind::NilpMod, 2}, {BackendKind::NilpMod, 3},
                {BackendKind::RepA2, 1}};
  Report rep;
  for (auto& b : backends) {
    std::mt19937_64 rng(opt.seed);
    std::string tag = backend_name(b);
    bool res_ok = true, kill_ok = true, ce_ok = true;
    for (int it = 0; it < 5; ++it) {
      Complex x = random_bounded_complex(b, rng, -1, 1, 2);
      auto r = inj_res_bounded_below(x, 3);
      res_ok = res_ok && degreewise_injective(r.res) &&
               is_quasi_iso_in(r.lambda, x.lo - 1, r.window_hi);
      auto kr = kill_coboundaries(x, 0);
      kill_ok = kill_ok && cohomology_obj(kr.k, 0).is_zero();
      for (int m = kr.k.lo; m <= kr.k.hi(); ++m) kill_ok = kill_ok && is_split_epi(kr.pi.at(m));
      auto ce = ce_resolution(x, 2);
      ce_ok = ce_ok && validate_ce(ce).all();
      auto t = ce_tot(ce);
      ce_ok = ce_ok && is_quasi_iso_in(t.lambda, x.lo - 1, t.window_hi);
    }
    rep.check("self.resolve[" + tag + "]", "random resolutions are certified", res_ok);
    rep.check("self.kill[" + tag + "]", "random coboundary kills are certified", kill_ok);
    rep.check("self.ce[" + tag + "]", "random grids validate and totalize", ce_ok);
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resolvent: exact computations with injective resolutions over F_p"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("RESOLVENT_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--p", opt.p, "prime modulus (must match the input header when both are given)");
  app.add_option("--seed", opt.seed, "seed for randomized constructions (env RESOLVENT_SEED)");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--backend", opt.backend, "backend token: vect, nilp:<n>, repa2");

  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", opt.input, "input file ('-' or omitted: stdin)");
  };
  auto add_class = [&](CLI::App* c) {
    c->add_option("--class", opt.klass, "relative class: inj, prod:<file>, torsion");
  };

  auto* c_resolve = app.add_subcommand("resolve", "injective resolution of a bounded-below complex");
  add_input(c_resolve);
  c_resolve->add_option("--depth", opt.depth, "resolution depth");

  auto* c_ce = app.add_subcommand("ce", "Cartan-Eilenberg-style grid with validation");
  add_input(c_ce);
  c_ce->add_option("--depth", opt.depth, "column depth");

  auto* c_tot = app.add_subcommand("tot", "totalization of the grid with comparison map");
  add_input(c_tot);
  c_tot->add_option("--depth", opt.depth, "column depth");

  auto* c_kill = app.add_subcommand("kill", "kill coboundaries in one degree");
  add_input(c_kill);
  c_kill->add_option("--degree", opt.degree, "degree whose cohomology is killed");

  auto* c_dy = app.add_subcommand("ding-yang", "iterated coboundary killing along the spiral schedule");
  add_input(c_dy);
  c_dy->add_option("--steps", opt.steps, "number of iterations");

  auto* c_tower = app.add_subcommand("tower", "tower of resolutions of left truncations and its limit");
  add_input(c_tower);
  c_tower->add_option("--levels", opt.levels, "deepest truncation level");
  c_tower->add_option("--depth", opt.depth, "resolution depth at level 0");

  auto* c_rel = app.add_subcommand("rel-resolve", "relative resolution of an object in a class");
  add_input(c_rel);
  add_class(c_rel);
  c_rel->add_option("--depth", opt.depth, "probe depth");

  auto* c_we = app.add_subcommand("check-we", "test a chain map for relative weak equivalence");
  add_input(c_we);
  add_class(c_we);

  auto* c_fib = app.add_subcommand("check-fib", "look for a relative fibration certificate");
  add_input(c_fib);
  add_class(c_fib);

  auto* c_ab4 = app.add_subcommand("ab4-check", "two-route exactness check on a finite family");
  add_input(c_ab4);
  add_class(c_ab4);
  c_ab4->add_option("--k", opt.k, "exactness threshold");
  c_ab4->add_option("--depth", opt.depth, "resolution depth");

  auto* c_codim = app.add_subcommand("icodim", "upper bound for the relative codimension");
  add_input(c_codim);
  add_class(c_codim);
  c_codim->add_option("--depth", opt.depth, "probe depth");

  auto* c_self = app.add_subcommand("selftest", "seeded randomized property checks");

  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt.p != 0)
      fp::set_modulus(opt.p);
    else
      fp::set_modulus(5);
    if (c_resolve->parsed()) return cmd_resolve(opt);
    if (c_ce->parsed()) return cmd_ce(opt);
    if (c_tot->parsed()) return cmd_tot(opt);
    if (c_kill->parsed()) return cmd_kill(opt);
    if (c_dy->parsed()) return cmd_ding_yang(opt);
    if (c_tower->parsed()) return cmd_tower(opt);
    if (c_rel->parsed()) return cmd_rel_resolve(opt);
    if (c_we->parsed()) return cmd_check_we(opt);
    if (c_fib->parsed()) return cmd_check_fib(opt);
    if (c_ab4->parsed()) return cmd_ab4(opt);
    if (c_codim->parsed()) return cmd_icodim(opt);
    if (c_self->parsed()) return cmd_selftest(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == ErrKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
