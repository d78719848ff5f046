#include "propcalc/cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "propcalc/cli/io.hpp"
#include "propcalc/cli/verify.hpp"
#include "propcalc/symgroup/group_algebra.hpp"
#include "propcalc/symgroup/tableau.hpp"
#include "propcalc/teval/checks.hpp"
#include "propcalc/teval/kernel.hpp"
#include "propcalc/wprop/z_bridge.hpp"
#include "propcalc/zideal/contraction.hpp"
#include "propcalc/zideal/ideal.hpp"

namespace propcalc::cli {

using diagram::Signature;
using wprop::PropElt;

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string sig_path;
  int dim = 0;
  int bound = 6;
  bool json = false;
  std::size_t limit = 200000;
  int max_atoms = 64;
  int max_partition = 7;
};

class Session {
public:
  Session(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    if (!cfg.sig_path.empty()) sig_ = Signature::parse(read_file(cfg.sig_path));
  }

  PropElt element(const std::string& text) const {
    PropElt a = PropElt::parse(text, sig_);
    for (const auto& [m, c] : a.terms())
      if (m.box_count() > cfg_.max_atoms)
        throw teval::SizeLimitError("expression has a monomial with " + std::to_string(m.box_count()) + " boxes (max-atoms " +
                                    std::to_string(cfg_.max_atoms) + ")");
    return a;
  }

  /// Diagram syntax, or group-algebra syntax of degree n (0: inferred).
  PropElt z_element(const std::string& text, int n) const {
    PropElt a = is_group_algebra_text(text) ? wprop::group_algebra_to_z(parse_group_algebra(text, n))
                                            : PropElt::parse(text, Signature());
    if (a.p() != a.q()) throw UsageError("expected an element of type (n,n) without generators");
    return a;
  }

  void check_partition_size(int n) const {
    if (n > cfg_.max_partition)
      throw teval::SizeLimitError("partition size " + std::to_string(n) + " exceeds max-partition " +
                                  std::to_string(cfg_.max_partition));
  }

  void print(const PropElt& a) {
    if (cfg_.json) out_ << element_to_json(a).dump() << "\n";
    else out_ << a.to_string() << "\n";
  }
  template <class S>
  void print(const teval::Tensor<S>& t) {
    if (cfg_.json) out_ << tensor_to_json(t).dump() << "\n";
    else out_ << tensor_to_text(t);
  }
  void print(const zideal::IdealData& d) { out_ << ideal_to_json(d).dump() << "\n"; }
  void print_bool(const char* key, bool v) {
    if (cfg_.json) out_ << ojson{{key, v}}.dump() << "\n";
    else out_ << (v ? "true" : "false") << "\n";
  }

  const Signature& sig() const { return sig_; }
  const Config& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }

private:
  Config cfg_;
  std::ostream& out_;
  Signature sig_;
};

int rectangle_for(const std::vector<zideal::IdealData>& ideals) {
  int n = 1;
  for (const auto& d : ideals)
    for (const auto& b : d.C) n = std::max({n, b.i, b.j});
  return n;
}

std::pair<int, int> parse_type(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("type must be written p,q");
  }
}

int print_suites(Session& s, const std::vector<SuiteResult>& results) {
  bool all_ok = true, limited = false;
  ojson doc = ojson::array();
  for (const auto& r : results) {
    all_ok = all_ok && r.ok;
    limited = limited || r.size_limited;
    if (s.cfg().json) {
      doc.push_back({{"suite", r.name}, {"ok", r.ok}, {"size_limited", r.size_limited}, {"report", r.lines}});
      continue;
    }
    s.out() << "== " << r.name << ": " << (r.size_limited ? "SIZE LIMIT" : (r.ok ? "PASS" : "FAIL")) << "\n";
    for (const auto& line : r.lines) s.out() << "  " << line << "\n";
  }
  if (s.cfg().json) s.out() << doc.dump() << "\n";
  if (limited) return size_limit;
  return all_ok ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic calculator for wheeled PROPs", "propcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--sig", cfg.sig_path, "Signature file (lines 'gen A : 2 -> 1')");
  app.add_option("--dim", cfg.dim, "Dimension n of the vector space");
  app.add_option("--bound", cfg.bound, "Partition size up to which ideal compatibility is checked");
  app.add_flag("--json", cfg.json, "Print JSON instead of text");
  app.add_option("--limit", cfg.limit, "Maximum number of wirings tried when enumerating monomials");
  app.add_option("--max-atoms", cfg.max_atoms, "Maximum number of generator boxes in one monomial");
  app.add_option("--max-partition", cfg.max_partition, "Maximum partition size for symmetric-group work");

  std::string expr, expr2, text;
  int ci = 0, cj = 0;

  auto* canon = app.add_subcommand("canon", "Print the canonical form of an expression");
  canon->add_option("expr", expr, "Diagram expression")->required();

  std::string rep_path;
  bool generic = false;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression as a tensor");
  eval->add_option("expr", expr, "Diagram expression")->required();
  eval->add_option("--rep", rep_path, "Representation file mapping generators to tensors");
  eval->add_flag("--generic", generic, "Use generic tensors with indeterminate entries");

  auto* pair = app.add_subcommand("pair", "Pair a (p,q) element with a (q,p) element");
  pair->add_option("a", expr, "Diagram expression")->required();
  pair->add_option("b", expr2, "Diagram expression")->required();

  auto* contract = app.add_subcommand("contract", "Join output j to input i");
  contract->add_option("expr", expr, "Diagram expression")->required();
  contract->add_option("i", ci, "Input position (1-based)")->required();
  contract->add_option("j", cj, "Output position (1-based)")->required();

  auto* symm = app.add_subcommand("symmetrizer", "Young symmetrizer of a tableau and its last-strand contraction");
  symm->add_option("tableau", text, "Tableau rows, e.g. {1,2}{3}")->required();

  auto* idem = app.add_subcommand("idempotent", "Central idempotent of a partition");
  idem->add_option("partition", text, "Partition, e.g. (2,1)")->required();

  auto* ideal = app.add_subcommand("ideal", "Ideals of the initial wheeled PROP");
  ideal->require_subcommand(1);
  std::string ideal_a, ideal_b;
  std::vector<std::string> gens;
  int degree_n = 0;
  auto* member = ideal->add_subcommand("member", "Is an element in the ideal");
  member->add_option("ideal", ideal_a, "Ideal JSON or file")->required();
  member->add_option("expr", expr, "Element of type (n,n) without generators")->required();
  member->add_option("--n", degree_n, "Degree for group-algebra notation (default: largest point used)");
  auto* generate = ideal->add_subcommand("generate", "Normal form of the ideal generated by elements");
  // The elements arrive as extras: CLI11 splits positional values of the
  // form "[...]" into lists, which breaks "[e] - [(1 2)]".
  app.allow_extras();
  generate->add_option("--n", degree_n, "Degree for group-algebra notation (default: largest point used)");
  auto* sum = ideal->add_subcommand("sum", "Normal form of a sum of two ideals");
  sum->add_option("a", ideal_a, "Ideal JSON or file")->required();
  sum->add_option("b", ideal_b, "Ideal JSON or file")->required();
  auto* classify = ideal->add_subcommand("classify", "prime_not_maximal, maximal or not_prime");
  classify->add_option("ideal", ideal_a, "Ideal JSON or file")->required();
  auto* show = ideal->add_subcommand("show", "Draw the box set of an ideal");
  show->add_option("ideal", ideal_a, "Ideal JSON or file")->required();

  auto* check = app.add_subcommand("check", "Relation checks in a tensor representation");
  check->require_subcommand(1);
  std::string algebra, tensor_path;
  int degree = 0;
  auto* check_lie = check->add_subcommand("lie", "Lie algebra diagram identities");
  check_lie->add_option("--algebra", algebra, "Built-in structure constants")
      ->check(CLI::IsMember(teval::lie_algebra_names()));
  check_lie->add_option("--tensor", tensor_path, "Structure tensor of type (2,1), JSON or file");
  auto* check_alt = check->add_subcommand("alt", "alt(n+1) vanishes in dimension n and alt(n) does not");
  auto* check_ch = check->add_subcommand("ch", "Cayley-Hamilton identity from alt(n+1)");
  check_ch->add_option("--matrix", tensor_path, "Matrix tensor of type (1,1), JSON or file")->required();
  check_ch->add_option("--degree", degree, "n, the number of copies of A (default: the matrix size)");

  std::string type;
  std::vector<std::string> degrees;
  int max_loops = 0;
  auto* kernel = app.add_subcommand("kernel", "Relations among bounded monomials in dimension n");
  kernel->add_option("--type", type, "Type p,q")->required();
  kernel->add_option("--degree", degrees, "Generator bound G=k (repeatable)");
  kernel->add_option("--loops", max_loops, "Maximum number of loops");

  VerifyOptions vopt;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-n", vopt.max_n, "Largest n for the symmetrizer and div2 suites");
  verify->add_option("--algebra", vopt.algebra, "Lie algebra for the lie suite")
      ->check(CLI::IsMember(teval::lie_algebra_names()));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  if (!generate->parsed() && !app.remaining().empty()) {
    err << "unexpected argument: " << app.remaining().front() << "\nRun with --help for more information.\n";
    return usage_error;
  }

  try {
    Session s(cfg, out);
    if (canon->parsed()) {
      s.print(s.element(expr));
    } else if (eval->parsed()) {
      const PropElt a = s.element(expr);
      if (generic) {
        if (cfg.dim < 1) throw UsageError("eval --generic needs --dim");
        s.print(teval::eval(teval::generic_rep(s.sig(), cfg.dim), a));
      } else {
        teval::RatRep rep;
        if (!rep_path.empty()) {
          rep = load_representation(rep_path, s.sig());
          if (cfg.dim > 0 && cfg.dim != rep.dim) throw UsageError("--dim disagrees with the representation");
        } else {
          if (!s.sig().empty()) throw UsageError("eval over a signature needs --rep or --generic");
          if (cfg.dim < 1) throw UsageError("eval needs --dim");
          rep.dim = cfg.dim;
        }
        s.print(teval::eval(rep, a));
      }
    } else if (pair->parsed()) {
      s.print(wprop::pairing(s.element(expr), s.element(expr2)));
    } else if (contract->parsed()) {
      s.print(wprop::contract(s.element(expr), ci, cj));
    } else if (symm->parsed()) {
      const auto tab = symgroup::Tableau::parse(text);
      s.check_partition_size(tab.size());
      const auto c = zideal::contract_symmetrizer(tab);
      if (cfg.json) {
        out << ojson{{"tableau", tab.to_string()},
                     {"symmetrizer", symgroup::young_symmetrizer(tab).to_string()},
                     {"contraction", c.contraction.to_string()},
                     {"factor", c.factor.to_string()},
                     {"reduced", c.reduced.to_string()}}
                   .dump()
            << "\n";
      } else {
        out << "y = " << symgroup::young_symmetrizer(tab) << "\n";
        out << "contraction = " << c.contraction << "\n";
        out << "factor = " << c.factor.to_string() << "\n";
        out << "reduced = " << c.reduced << "\n";
      }
    } else if (idem->parsed()) {
      const auto lambda = symgroup::Partition::parse(text);
      s.check_partition_size(lambda.size());
      const auto e = symgroup::central_idempotent(lambda);
      if (cfg.json) out << ojson{{"partition", lambda.to_string()}, {"idempotent", e.to_string()}}.dump() << "\n";
      else out << e << "\n";
    } else if (member->parsed()) {
      const auto d = ideal_from_json(load_json(ideal_a));
      const PropElt z = s.z_element(expr, degree_n);
      s.check_partition_size(z.p());
      s.print_bool("member", zideal::member(d, z));
    } else if (generate->parsed()) {
      std::vector<symgroup::GAElt> elts;
      int n = 1;
      gens = app.remaining();
      if (gens.empty()) throw UsageError("ideal generate needs at least one element");
      for (const auto& g : gens) {
        const PropElt z = s.z_element(g, degree_n);
        s.check_partition_size(z.p());
        n = std::max(n, z.p());
        elts.push_back(wprop::z_to_group_algebra(z));
      }
      s.print(zideal::normal_form(zideal::generate(elts, cfg.bound), n));
    } else if (sum->parsed()) {
      const auto a = ideal_from_json(load_json(ideal_a));
      const auto b = ideal_from_json(load_json(ideal_b));
      const auto F = zideal::ideal_sum(zideal::CompatFamily::of(a), zideal::CompatFamily::of(b), cfg.bound);
      s.print(zideal::normal_form(F, rectangle_for({a, b})));
    } else if (classify->parsed()) {
      const auto cls = zideal::to_string(zideal::classify(ideal_from_json(load_json(ideal_a))));
      if (cfg.json) out << ojson{{"class", cls}}.dump() << "\n";
      else out << cls << "\n";
    } else if (show->parsed()) {
      const auto d = ideal_from_json(load_json(ideal_a));
      if (!d.zero) out << "f = " << d.f.to_string() << "\n";
      out << zideal::picture(d);
    } else if (check_lie->parsed()) {
      if (algebra.empty() == tensor_path.empty()) throw UsageError("check lie needs exactly one of --algebra and --tensor");
      const auto L = algebra.empty() ? tensor_from_json(load_json(tensor_path)) : teval::lie_structure(algebra);
      const auto rep = teval::check_lie(L.dim(), L);
      SuiteResult r{"lie", rep.ok(), false, lie_report_lines(algebra.empty() ? "L" : algebra, rep)};
      return print_suites(s, {r});
    } else if (check_alt->parsed()) {
      VerifyOptions o;
      o.dim = cfg.dim;
      if (cfg.dim < 1) throw UsageError("check alt needs --dim");
      return print_suites(s, {run_suite("alt", o)});
    } else if (check_ch->parsed()) {
      const auto A = tensor_from_json(load_json(tensor_path));
      const bool holds = teval::check_cayley_hamilton(degree > 0 ? degree : A.dim(), A);
      s.print_bool("holds", holds);
      return holds ? ok : verification_failed;
    } else if (kernel->parsed()) {
      if (cfg.dim < 1) throw UsageError("kernel needs --dim");
      const auto [p, q] = parse_type(type);
      teval::MonomialBounds bounds;
      bounds.limit = cfg.limit;
      bounds.max_loops = max_loops;
      for (const auto& d : degrees) {
        const auto eq = d.find('=');
        if (eq == std::string::npos) throw UsageError("degree bounds are written G=k");
        try {
          bounds.per_gen[d.substr(0, eq)] = std::stoi(d.substr(eq + 1));
        } catch (const std::logic_error&) {
          throw UsageError("degree bounds are written G=k");
        }
      }
      const auto k = teval::relation_kernel(s.sig(), cfg.dim, p, q, bounds);
      if (cfg.json) {
        ojson basis = ojson::array();
        for (const auto& e : k.basis) basis.push_back(element_to_json(e));
        out << ojson{{"monomials", k.monomials.size()}, {"basis", basis}}.dump() << "\n";
      } else {
        out << "kernel dimension " << k.basis.size() << " among " << k.monomials.size() << " monomials\n";
        for (const auto& e : k.basis) out << e << "\n";
      }
    } else if (verify->parsed()) {
      vopt.dim = cfg.dim;
      vopt.limit = cfg.limit;
      if (vopt.max_n > cfg.max_partition) {
        err << "error: size limit exceeded: --max-n " << vopt.max_n << " is above --max-partition " << cfg.max_partition << "\n";
        return size_limit;
      }
      return print_suites(s, run_suites(suite == "all" ? suite_names() : std::vector<std::string>{suite}, vopt));
    }
    return ok;
  } catch (const teval::SizeLimitError& e) {
    err << "error: size limit exceeded: " << e.what() << "\n";
    return size_limit;
  } catch (const diagram::DiagramError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return verification_failed;
  }
}

}  // namespace propcalc::cli
