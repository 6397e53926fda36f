#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gjt/alpha.hpp"
#include "gjt/binomial.hpp"
#include "gjt/bounds.hpp"
#include "gjt/error.hpp"
#include "gjt/wilson.hpp"

namespace gjt::cli {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  std::optional<int> t;
  std::optional<std::string> allowed;
  std::optional<int> missing;
  std::string format = "table";
  std::string output;
  bool scan = false;
  double budget = 300.0;
  std::size_t cap = 1000;
  std::string vector = "graph";
  std::optional<int> n_min;
  int n_max = 0;
  std::string target;
};

IntList parse_list(const std::string& text) {
  IntList out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("malformed intersection list '" + text + "'");
    out.push_back(value);
  }
  return out;
}

LSystemSpec spec_from(const Options& o) {
  const SchemeParams p(o.n, o.k);
  if (o.missing) return LSystemSpec::missing_one(p, *o.missing);
  if (o.allowed) return LSystemSpec(p, parse_list(*o.allowed));
  throw std::invalid_argument("specify L with --L <sizes> or --missing <size>");
}

void add_spec_options(CLI::App* cmd, Options& o) {
  auto* l = cmd->add_option("--L", o.allowed, "allowed intersection sizes, comma separated ('none' for empty)");
  auto* m = cmd->add_option("--missing", o.missing, "shorthand for L = {0..k-1} minus this size");
  l->excludes(m);
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
  cmd->add_option("--output", o.output, "write the report here instead of standard output");
}

Cell optional_cell(const std::optional<Rational>& value) {
  if (value) return *value;
  return std::monostate{};
}

Table bound_table(const LSystemSpec& spec) {
  const BoundReport b = bound_report(spec);
  Table t;
  t.columns = {"n", "k", "l", "theta_prime", "theta", "closed_form", "two_star", "strict_separation",
               "theta_exceeds_two_star"};
  t.add({long{spec.params().n()}, long{spec.params().k()}, spec.allowed(), b.theta_prime, b.theta,
         optional_cell(b.closed_form_theta), b.two_star, b.strict_separation, b.theta_exceeds_two_star});
  return t;
}

Table certificate_table(const std::vector<Certificate>& certs) {
  Table t;
  const int k = certs.empty() ? 0 : certs.front().spec.params().k();
  t.columns = {"n", "k", "t", "l", "bound", "entry_feasible", "entry_tight", "eig_ok"};
  for (int s = 0; s <= k; ++s) t.columns.push_back("m_" + std::to_string(s));
  for (const auto& c : certs) {
    std::vector<Cell> row{long{c.spec.params().n()}, long{c.spec.params().k()}, long{c.t}, c.spec.allowed(), c.bound,
                          c.entry_feasible_for_theta_prime, c.entry_tight_for_theta, c.eig_ok};
    for (const auto& e : c.matrix.entries()) row.emplace_back(e);
    t.add(std::move(row));
  }
  return t;
}

SchemeVector named_vector(const Options& o) {
  const SchemeParams p(o.n, o.k);
  if (o.vector == "graph") return SchemeVector::adjacency(spec_from(o));
  if (o.vector == "ones") return SchemeVector::ones(p);
  if (o.vector == "identity") return SchemeVector::identity(p);
  if (!o.t) throw std::invalid_argument("--vector " + o.vector + " needs --t");
  if (o.vector == "wilson") return wilson_vector(p, *o.t);
  return build_certificate(p, *o.t).matrix;
}

Table eigs_table(const EigTable& eigs) {
  Table t;
  t.columns = {"j", "multiplicity", "eigenvalue"};
  for (std::size_t j = 0; j < eigs.values.size(); ++j) {
    const BigInt& m = eigs.multiplicities[j];
    t.add({static_cast<long>(j), m.fits_slong_p() ? Cell{m.get_si()} : Cell{m.get_str()}, eigs.values[j]});
  }
  return t;
}

Table scan_table(const Options& o) {
  Table t;
  t.columns = {"n", "k", "l", "theta_prime", "theta", "two_star"};
  const int lo = o.n_min.value_or(o.k);
  for (int n = lo; n <= o.n_max; ++n) {
    Options point = o;
    point.n = n;
    const LSystemSpec spec = spec_from(point);
    t.add({long{n}, long{o.k}, spec.allowed(), theta_prime_lp(spec), theta_lp(spec), Rational(binom(n - 2, o.k - 2))});
  }
  return t;
}

void emit_alpha(const LSystemSpec& spec, const AlphaResult& a, Format format, std::ostream& out) {
  const auto& p = spec.params();
  switch (format) {
    case Format::table:
      out << "alpha(G(" << p.n() << "," << p.k() << "," << spec.allowed_str() << ")) = " << a.size << " ("
          << to_string(a.status) << ")\n";
      for (const auto& set : a.witness.sets) {
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
        out << '\n';
      }
      break;
    case Format::csv: {
      Table t;
      t.columns = {"n", "k", "l", "alpha", "status", "set"};
      for (const auto& set : a.witness.sets) {
        std::string text;
        for (std::size_t i = 0; i < set.size(); ++i) text += (i ? " " : "") + std::to_string(set[i]);
        t.add({long{p.n()}, long{p.k()}, spec.allowed(), static_cast<long>(a.size), std::string(to_string(a.status)),
               text});
      }
      emit(t, format, out);
      break;
    }
    case Format::jsonl: {
      nlohmann::ordered_json obj;
      obj["n"] = p.n();
      obj["k"] = p.k();
      obj["l"] = spec.allowed();
      obj["alpha"] = a.size;
      obj["status"] = to_string(a.status);
      obj["witness"] = a.witness.sets;
      out << obj.dump() << '\n';
      break;
    }
  }
}

int dispatch(CLI::App& app, const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (app.got_subcommand("bound")) {
    emit(bound_table(spec_from(o)), format, out);
  } else if (app.got_subcommand("certificate")) {
    if (!o.t) throw std::invalid_argument("certificate needs --t");
    if (o.scan) {
      emit(certificate_table(certificate_range_scan(o.k, *o.t)), format, out);
    } else {
      emit(certificate_table({build_certificate(SchemeParams(o.n, o.k), *o.t)}), format, out);
    }
  } else if (app.got_subcommand("alpha")) {
    const LSystemSpec spec = spec_from(o);
    AlphaOptions ao;
    ao.cap = o.cap;
    ao.budget = std::chrono::duration<double>(o.budget);
    emit_alpha(spec, alpha_bruteforce(spec, ao), format, out);
  } else if (app.got_subcommand("eigs")) {
    emit(eigs_table(eig_of_vector(named_vector(o))), format, out);
  } else if (app.got_subcommand("scan")) {
    emit(scan_table(o), format, out);
  } else if (app.got_subcommand("reproduce")) {
    const ReproduceReport report = reproduce(o.target);
    emit(report.table, format, out);
    if (format == Format::table) {
      out << o.target << ": " << report.passed << "/" << report.total << " passed\n";
    }
    return report.ok() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact independence numbers, Delsarte and Lovasz bounds for generalized Johnson graphs", "gjt"};
  app.require_subcommand(1);
  Options o;

  auto* bound = app.add_subcommand("bound", "theta' and theta of G(n,k,L)");
  bound->add_option("--n", o.n, "ground set size")->required();
  bound->add_option("--k", o.k, "set size")->required();
  add_spec_options(bound, o);
  add_output_options(bound, o);

  auto* cert = app.add_subcommand("certificate", "Wilson-matrix certificate M_t = J - C(n-t,k-t) A_t");
  auto* cert_n = cert->add_option("--n", o.n, "ground set size");
  cert->add_option("--k", o.k, "set size")->required();
  cert->add_option("--t", o.t, "certificate order, 2 <= t <= k/2 + 1")->required();
  cert->add_flag("--scan", o.scan, "scan n over the certified range and two points beyond")->excludes(cert_n);
  add_output_options(cert, o);

  auto* alpha = app.add_subcommand("alpha", "exact independence number with a witness family");
  alpha->add_option("--n", o.n, "ground set size")->required();
  alpha->add_option("--k", o.k, "set size")->required();
  add_spec_options(alpha, o);
  alpha->add_option("--budget", o.budget, "time budget in seconds")->check(CLI::PositiveNumber);
  alpha->add_option("--cap", o.cap, "largest vertex count searched exhaustively");
  add_output_options(alpha, o);

  auto* eigs = app.add_subcommand("eigs", "eigenvalue table of a scheme element");
  eigs->add_option("--n", o.n, "ground set size")->required();
  eigs->add_option("--k", o.k, "set size")->required();
  add_spec_options(eigs, o);
  eigs->add_option("--t", o.t, "order for the wilson and certificate vectors");
  eigs->add_option("--vector", o.vector, "graph (default), ones, identity, wilson or certificate")
      ->check(CLI::IsMember({"graph", "ones", "identity", "wilson", "certificate"}));
  add_output_options(eigs, o);

  auto* scan = app.add_subcommand("scan", "theta' and theta over a range of n");
  scan->add_option("--k", o.k, "set size")->required();
  scan->add_option("--n-min", o.n_min, "first n (default k)");
  scan->add_option("--n-max", o.n_max, "last n")->required();
  add_spec_options(scan, o);
  add_output_options(scan, o);

  auto* repro = app.add_subcommand("reproduce", "run one verification grid and report pass/fail");
  std::string targets;
  for (auto name : reproduce_targets()) targets += (targets.empty() ? "" : ", ") + std::string(name);
  repro->add_option("target", o.target, "one of: " + targets)->required();
  add_output_options(repro, o);

  std::vector<std::string> argv_storage{"gjt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand("scan") && !o.allowed && !o.missing) o.missing = 1;

  try {
    if (o.output.empty()) return dispatch(app, o, out);
    std::ostringstream buffer;
    const int code = dispatch(app, o, buffer);
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + o.output + "'");
    file << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << "gjt: error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gjt::cli
