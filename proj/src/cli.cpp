#include "cmkit/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cmkit/weyl.hpp"

namespace cmkit::cli {

json Report::to_json() const {
  return json{{"command", command}, {"flags", flags},   {"input_digest", input_digest},
              {"status", status},   {"result", result}, {"messages", messages}};
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

bool needs_input(const std::string& command) { return command != "sample" && command != "cech"; }

json flags_json(const Options& o) {
  json f = json::object();
  if (o.field) f["field"] = *o.field;
  if (o.field == "complex") f["tolerance"] = o.tolerance;
  const auto& c = o.command;
  if (c == "moment") f["convention"] = o.convention;
  if (c == "invariants") f["max_len"] = o.max_len;
  if (c == "hilbert-ideal" && o.degree) f["degree"] = *o.degree;
  if (c == "sample") {
    f["n"] = o.n;
    f["seed"] = o.seed;
  }
  if (c == "cech") {
    f["twist"] = o.twist;
    if (o.cutoff) f["cutoff"] = *o.cutoff;
  }
  if (c == "homotopy" && o.homotopy) f["h"] = *o.homotopy;
  return f;
}

// Accept a previous report as input and use its result payload.
const json& unwrap(const json& doc) {
  if (doc.is_object() && doc.contains("status") && doc.contains("result") && doc["result"].is_object())
    return doc["result"];
  return doc;
}

template <class T>
json scalar_list(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <class T>
void verify(const CMQuadruple<T>& q, const Field<T>& field, Report& rep) {
  const auto residual = cm_residual(q);
  const bool ok = residual.is_zero(field);
  rep.result = {{"cm_residual", to_json(residual)},
                {"moment_std", to_json(moment_std(q))},
                {"trace_ji", to_json((q.j * q.i).trace())},
                {"is_cm_point", ok},
                {"stable", is_stable(q, field)}};
  if (!ok) {
    rep.status = "infeasible";
    rep.messages.push_back("[X,Y] - ij + I is not zero");
  }
}

template <class T>
void hilbert(const CMQuadruple<T>& q, const Options& o, const Field<T>& field, Report& rep) {
  const int degree = o.degree.value_or(static_cast<int>(q.n()));
  const auto ideal = hilbert_ideal(q, degree, field);
  json monomials = json::array();
  for (const auto& [a, b] : ideal.monomials) monomials.push_back(json::array({a, b}));
  json basis = json::array();
  for (const auto& v : ideal.basis) {
    json entry{{"coeffs", scalar_list(v)}};
    if constexpr (std::is_same_v<T, Rational>) entry["polynomial"] = polynomial_string(ideal.monomials, v);
    basis.push_back(std::move(entry));
  }
  rep.result = {{"degree", degree},
                {"monomials", std::move(monomials)},
                {"basis", std::move(basis)},
                {"quotient_dim", ideal.quotient_dim},
                {"length_matches_n", ideal.quotient_dim == q.n()}};
}

template <class T>
void normalize_cmd(const KoszulTriple<T>& kt, const Field<T>& field, Report& rep) {
  const auto residual = check_square(kt);
  if (!residual.is_zero(field)) {
    rep.status = "error";
    rep.result = {{"square_residual", to_json(residual)}};
    rep.messages.push_back("I + XY - YX - sum_k X^k i j_k is not zero; the square does not commute");
    return;
  }
  const auto h = normalizing_homotopy(kt);
  const auto q = normalize(kt, field);
  rep.result = {{"quadruple", to_json(q)}, {"homotopy", to_json(h)}, {"is_cm_point", is_cm_point(q, field)}};
}

template <class T>
void fiber_solve(const FramedTorsionSheaf<T>& fs, const Field<T>& field, Report& rep) {
  const auto sol = solve_cm_fiber(fs.X, fs.i, field);
  if (!sol) {
    rep.status = "infeasible";
    rep.result = {{"feasible", false}};
    rep.messages.push_back("no (Y, j) satisfies [X,Y] - ij + I = 0 for this (X, i)");
    return;
  }
  json kernel = json::array();
  for (const auto& [y, j] : sol->kernel) kernel.push_back({{"Y", to_json(y)}, {"j", to_json(j)}});
  rep.result = {{"feasible", true},
                {"particular", {{"Y", to_json(sol->Y)}, {"j", to_json(sol->j)}}},
                {"kernel_dim", sol->dimension()},
                {"kernel_basis", std::move(kernel)}};
}

json support_json(const FramedTorsionSheaf<Rational>& fs, const Options&) {
  json out = json::array();
  for (const auto& f : support(fs)) {
    out.push_back({{"factor", f.factor.to_string("x")},
                   {"coeffs", scalar_list(f.factor.coeffs())},
                   {"multiplicity", f.multiplicity}});
  }
  return out;
}

json support_json(const FramedTorsionSheaf<Complex>& fs, const Options& o) {
  json out = json::array();
  for (const auto& root : support(fs, std::sqrt(o.tolerance)))
    out.push_back({{"root", to_json(root.value)}, {"multiplicity", root.multiplicity}});
  return out;
}

template <class T>
void classify(const FramedTorsionSheaf<T>& fs, const Options& o, const Field<T>& field, Report& rep) {
  const auto check = cm_support_check(fs, field);
  rep.result = {{"support", support_json(fs, o)},
                {"framing_surjective", framing_surjective(fs, field)},
                {"end_dim", endomorphisms(fs, field).size()},
                {"indecomposable", nullptr},
                {"in_cm_support", check.in_support},
                {"fiber_dim", check.fiber_dim ? json(*check.fiber_dim) : json(nullptr)}};
  if constexpr (std::is_same_v<T, Rational>) {
    const auto report = indecomposability(fs);
    rep.result["indecomposable"] = to_string(report.verdict);
    rep.result["radical_dim"] = report.radical_dim;
  } else {
    rep.messages.push_back("indecomposability is decided in rational mode only");
  }
}

template <class T>
void dispatch(const Options& o, const json& doc, const Field<T>& field, Report& rep) {
  const auto& c = o.command;
  if (c == "verify") {
    verify(quadruple_from_json<T>(doc), field, rep);
  } else if (c == "moment") {
    const auto q = quadruple_from_json<T>(doc);
    if (o.convention == "std") {
      rep.result = {{"convention", "std"}, {"moment", to_json(moment_std(q))}};
    } else if (o.convention == "cm") {
      rep.result = {{"convention", "cm"}, {"moment", to_json(cm_residual(q))}};
    } else {
      throw SchemaError("--convention", "expected std or cm");
    }
  } else if (c == "invariants") {
    json list = json::array();
    for (const auto& w : word_invariants(quadruple_from_json<T>(doc), o.max_len))
      list.push_back({{"kind", w.key.kind}, {"word", w.key.word}, {"value", to_json(w.value)}});
    rep.result = {{"max_len", o.max_len}, {"invariants", std::move(list)}};
  } else if (c == "hilbert-ideal") {
    hilbert(quadruple_from_json<T>(doc), o, field, rep);
  } else if (c == "normalize") {
    normalize_cmd(triple_from_json<T>(doc), field, rep);
  } else if (c == "homotopy") {
    if (!o.homotopy) throw SchemaError("--h", "homotopy requires --h <file>");
    const auto kt = triple_from_json<T>(doc);
    rep.result = {{"triple", to_json(apply_homotopy(kt, covector_from_json<T>(*o.homotopy, "--h")))}};
  } else if (c == "fiber-solve") {
    fiber_solve(sheaf_from_json<T>(doc), field, rep);
  } else if (c == "classify") {
    classify(sheaf_from_json<T>(doc), o, field, rep);
  } else {
    throw SchemaError("command", "unknown command " + c);
  }
}

std::string resolve_field(const Options& o, const json& doc) {
  if (o.field) {
    if (*o.field != "rational" && *o.field != "complex") throw SchemaError("--field", "expected rational or complex");
    return *o.field;
  }
  return declared_field(doc);
}

void run_inputless(const Options& o, Report& rep) {
  if (o.command == "sample") {
    const auto q = sample_cm(o.n, o.seed);
    rep.result = o.field == "complex" ? to_json(to_complex(q)) : to_json(q);
  } else {
    const int cutoff = o.cutoff.value_or(std::abs(o.twist) + 2);
    const auto ranks = cech_graded_ranks(o.twist, cutoff);
    rep.result = {{"twist", ranks.twist},
                  {"h0_rank", ranks.h0_rank},
                  {"h1_rank", ranks.h1_rank},
                  {"certified", ranks.certified},
                  {"cutoff", cutoff}};
    if (!ranks.certified) rep.messages.push_back("ranks changed between the last two cutoff windows");
  }
}

}  // namespace

Report run(const Options& opts, const std::optional<std::string>& input) {
  Report rep;
  rep.command = opts.command;
  rep.flags = flags_json(opts);
  rep.input_digest = "fnv1a64:" + fnv1a64(input.value_or(""));
  try {
    if (!needs_input(opts.command)) {
      run_inputless(opts, rep);
      return rep;
    }
    if (!input) throw SchemaError("input", "command " + opts.command + " needs a JSON document");
    json parsed;
    try {
      parsed = json::parse(*input);
    } catch (const json::parse_error& e) {
      throw SchemaError("input", std::string("invalid JSON: ") + e.what());
    }
    const json& doc = unwrap(parsed);
    if (resolve_field(opts, doc) == "complex") {
      Field<Complex> field;
      field.tolerance = opts.tolerance;
      dispatch(opts, doc, field, rep);
    } else {
      dispatch(opts, doc, Field<Rational>{}, rep);
    }
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.messages.push_back(e.what());
  }
  return rep;
}

std::vector<Report> run_batch(const Options& opts, const std::vector<std::string>& lines, unsigned threads) {
  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < lines.size(); ++k)
    if (lines[k].find_first_not_of(" \t\r") != std::string::npos) todo.push_back(k);
  std::vector<Report> out(todo.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < todo.size();) out[k] = run(opts, lines[todo[k]]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calogero-Moser, ADHM and Koszul data toolkit"};
  app.require_subcommand(1);

  Options opts;
  std::string input_path;
  std::string h_path;
  std::string field;
  bool compact = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "rational or complex")->check(CLI::IsMember({"rational", "complex"}));
    sub->add_option("--tolerance", opts.tolerance, "zero threshold in complex mode");
    sub->add_flag("--compact", compact, "single-line output");
  };
  const auto with_input = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--input,input", input_path, "JSON file (stdin when omitted or -)");
    sub->add_flag("--batch", opts.batch, "newline-delimited JSON, one report per line");
  };

  with_input(app.add_subcommand("verify", "CM residual and standard moment map"));
  auto* moment = app.add_subcommand("moment", "moment map in the chosen convention");
  with_input(moment);
  moment->add_option("--convention", opts.convention)->check(CLI::IsMember({"std", "cm"}));
  auto* invariants = app.add_subcommand("invariants", "trace word invariants");
  with_input(invariants);
  invariants->add_option("--max-len", opts.max_len);
  auto* hilbert = app.add_subcommand("hilbert-ideal", "ideal of a commuting stable quadruple");
  with_input(hilbert);
  hilbert->add_option("--degree", opts.degree);
  with_input(app.add_subcommand("normalize", "homotopy-normalize Koszul data to a CM quadruple"));
  auto* homotopy = app.add_subcommand("homotopy", "apply a homotopy to Koszul data");
  homotopy->set_help_flag("--help", "Print this help message and exit");
  with_input(homotopy);
  homotopy->add_option("--h", h_path, "JSON file {\"coeffs\": [...]}")->required();
  with_input(app.add_subcommand("fiber-solve", "solve for the CM fiber over (X, i)"));
  with_input(app.add_subcommand("classify", "support, endomorphisms and CM support of (X, i)"));
  auto* sample = app.add_subcommand("sample", "reproducible random CM point");
  common(sample);
  sample->add_option("--n", opts.n)->check(CLI::PositiveNumber);
  sample->add_option("--seed", opts.seed);
  auto* cech = app.add_subcommand("cech", "graded Cech ranks of a twisted Rees module");
  common(cech);
  cech->add_option("--twist", opts.twist)->required();
  cech->add_option("--cutoff", opts.cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) opts.field = field;
  const int indent = compact || opts.batch ? -1 : 2;

  if (!h_path.empty()) {
    std::ifstream hf(h_path);
    try {
      if (!hf) throw std::runtime_error("cannot open " + h_path);
      opts.homotopy = json::parse(hf);
    } catch (const std::exception& e) {
      Report rep;
      rep.command = opts.command;
      rep.status = "error";
      rep.messages.push_back(std::string("--h: ") + e.what());
      out << rep.to_json().dump(indent) << '\n';
      return 2;
    }
  }

  std::optional<std::string> text;
  if (needs_input(opts.command)) {
    std::stringstream buf;
    if (input_path.empty() || input_path == "-") {
      buf << in.rdbuf();
    } else {
      std::ifstream f(input_path);
      if (!f) {
        err << "cannot open " << input_path << '\n';
        return 2;
      }
      buf << f.rdbuf();
    }
    text = buf.str();
  }

  if (opts.batch && text) {
    std::vector<std::string> lines;
    std::istringstream ls(*text);
    for (std::string line; std::getline(ls, line);) lines.push_back(line);
    int code = 0;
    for (const auto& rep : run_batch(opts, lines)) {
      out << rep.to_json().dump() << '\n';
      code = std::max(code, rep.exit_code());
    }
    return code;
  }
  const Report rep = run(opts, text);
  out << rep.to_json().dump(indent) << '\n';
  return rep.exit_code();
}

}  // namespace cmkit::cli
