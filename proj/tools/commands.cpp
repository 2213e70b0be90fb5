#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookalg/central_elements.hpp"
#include "rookalg/group_io.hpp"
#include "rookalg/induced_char.hpp"
#include "rookalg/limits.hpp"
#include "rookalg/reps.hpp"
#include "rookalg/version.hpp"

namespace rookalg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct OutputOptions {
  std::string format = "json";
  std::string outPath;
};

std::string timestampNow() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void writeAtomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
  }
  fs::rename(tmp, target);
}

std::string toCsv(const ordered_json& report) {
  if (!report.contains("rows") || !report["rows"].is_array() || report["rows"].empty())
    throw std::runtime_error("csv format requires a tabular command");
  std::ostringstream out;
  const auto& rows = report["rows"];
  bool headerDone = false;
  for (const auto& row : rows) {
    if (!headerDone) {
      bool first = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!first) out << ",";
        first = false;
        out << it.key();
      }
      out << "\n";
      headerDone = true;
    }
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!first) out << ",";
      first = false;
      if (it->is_string())
        out << "\"" << it->get<std::string>() << "\"";
      else
        out << it->dump();
    }
    out << "\n";
  }
  return out.str();
}

std::string toText(const ordered_json& report) {
  std::ostringstream out;
  out << report["command"].get<std::string>() << "  (rookalg " << kVersion << ")\n";
  if (report.contains("rows"))
    for (const auto& row : report["rows"]) out << "  " << row.dump() << "\n";
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "rows" || it.key() == "command") continue;
    out << it.key() << ": " << it->dump() << "\n";
  }
  return out.str();
}

int emitReport(const OutputOptions& opts, ordered_json report, bool pass) {
  report["pass"] = pass;
  report["version"] = kVersion;
  report["timestamp"] = timestampNow();
  std::string text;
  if (opts.format == "json")
    text = report.dump(2) + "\n";
  else if (opts.format == "csv")
    text = toCsv(report);
  else if (opts.format == "text")
    text = toText(report);
  else
    throw CLI::ValidationError("--format must be json, csv or text");
  if (opts.outPath.empty())
    std::cout << text;
  else
    writeAtomically(opts.outPath, text);
  return pass ? 0 : 1;
}

const FiniteGroupTable* resolveGroup(const std::string& spec) {
  for (const std::string& name : FiniteGroupTable::builtinNames())
    if (name == spec) return &FiniteGroupTable::builtin(name);
  static std::vector<std::unique_ptr<FiniteGroupTable>> loaded;
  loaded.push_back(std::make_unique<FiniteGroupTable>(loadGroupFile(spec)));
  return loaded.back().get();
}

std::vector<long> parseSchedule(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  if (out.empty()) throw CLI::ValidationError("empty schedule");
  return out;
}

MonomialMatrix classRepresentative(const Partition& rho, int n, const FiniteGroupTable* g) {
  std::vector<int> row(n);
  int pos = 1;
  for (long part : rho.parts()) {
    for (int t = 0; t < part; ++t) row[pos - 1 + t] = pos + ((t + 1) % part);
    pos += static_cast<int>(part);
  }
  for (; pos <= n; ++pos) row[pos - 1] = pos;
  return MonomialMatrix::fromColumnMap(row, std::vector<int>(n, 0), g);
}

int cmdEigentable(const OutputOptions& opts, int n, long kOpt, const std::string& groupSpec) {
  ordered_json report;
  report["command"] = "eigentable";
  report["params"] = {{"n", n}, {"k", kOpt}, {"group", groupSpec}};
  ordered_json rows = ordered_json::array();
  bool pass = true;
  if (groupSpec.empty() || groupSpec == "trivial") {
    for (const Partition& la : partitionsOf(n)) {
      SymRep rep(la);
      std::vector<RatMat> images = cycleSumImages(rep);
      for (long k = 1; k <= n; ++k) {
        if (kOpt > 0 && k != kOpt) continue;
        Rat got;
        bool scalar = images[k - 1].isScalar(&got);
        Rat want = evalPsharpOne(k, la);
        bool ok = scalar && got == want;
        pass = pass && ok;
        rows.push_back({{"lambda", la.str()},
                        {"k", k},
                        {"zhat", scalar ? ratStr(got) : "non-scalar"},
                        {"psharp", ratStr(want)},
                        {"match", ok}});
      }
    }
  } else {
    const FiniteGroupTable* g = resolveGroup(groupSpec);
    for (const Multipartition& bla : multipartitionsOf(n, g)) {
      RepModel rep(std::in_place_type<WreathRep>, bla);
      for (long k = 1; k <= n; ++k) {
        if (kOpt > 0 && k != kOpt) continue;
        for (int psi = 0; psi < g->numChars(); ++psi) {
          Rat got = centralEigenvalue(rep, cycleSumWreath(k, psi, n, g));
          Rat want = evalPsharpOne(k, bla.at(psi));
          bool ok = got == want;
          pass = pass && ok;
          rows.push_back({{"mlambda", bla.str()},
                          {"k", k},
                          {"psi", psi},
                          {"zhat", ratStr(got)},
                          {"psharp", ratStr(want)},
                          {"match", ok}});
        }
      }
    }
  }
  report["rows"] = rows;
  return emitReport(opts, std::move(report), pass);
}

int cmdDimIdentity(const OutputOptions& opts, int n) {
  ordered_json report;
  report["command"] = "dim-identity";
  report["params"] = {{"n", n}};
  const FiniteGroupTable* g = &FiniteGroupTable::trivialGroup();
  Int lhs = 0;
  for (const Partition& la : partitionsUpTo(n)) {
    Int d = binomialInt(n, la.size()) * dimPartition(la);
    lhs += d * d;
  }
  Int rhs = countGamma(n, g);
  Int enumerated = n <= 8 ? Int(static_cast<long>(enumerateGamma(n, g).size())) : Int(-1);
  bool pass = lhs == rhs && (n > 8 || enumerated == rhs);
  report["rows"] = ordered_json::array({{{"n", n},
                                         {"sum_of_squares", lhs.get_str()},
                                         {"closed_form", rhs.get_str()},
                                         {"enumerated", enumerated.get_str()},
                                         {"match", pass}}});
  return emitReport(opts, std::move(report), pass);
}

int cmdVerifyHecke(const OutputOptions& opts, int n, const std::string& groupSpec) {
  const FiniteGroupTable* g =
      groupSpec.empty() ? &FiniteGroupTable::trivialGroup() : resolveGroup(groupSpec);
  ordered_json report;
  report["command"] = "verify-hecke";
  report["params"] = {{"n", n}, {"group", g->name}};
  ordered_json rows = ordered_json::array();
  bool pass = true;
  auto record = [&](const std::string& name, int a, int b, bool ok) {
    pass = pass && ok;
    rows.push_back({{"relation", name}, {"i", a}, {"j", b}, {"ok", ok}});
  };

  for (int a = 1; a <= n; ++a) {
    auto ea = MonomialMatrix::epsOne(a, n, g);
    record("eps_i^2 = eps_i", a, 0, compose(ea, ea) == ea);
    for (int b = 1; b <= n; ++b) {
      auto eb = MonomialMatrix::epsOne(b, n, g);
      record("eps_i eps_j = eps_j eps_i", a, b, compose(ea, eb) == compose(eb, ea));
    }
  }
  for (int a = 1; a + 1 <= n; ++a) {
    auto sa = MonomialMatrix::transposition(a, a + 1, n, g);
    auto ea = MonomialMatrix::epsOne(a, n, g);
    auto ea1 = MonomialMatrix::epsOne(a + 1, n, g);
    record("s_i eps_i = eps_{i+1} s_i", a, 0, compose(sa, ea) == compose(ea1, sa));
    record("s_i eps_i eps_{i+1} = eps_i eps_{i+1}", a, 0,
           compose(sa, compose(ea, ea1)) == compose(ea, ea1));
    record("s_i^2 = 1", a, 0, compose(sa, sa).isIdentity());
    if (a + 2 <= n) {
      auto sb = MonomialMatrix::transposition(a + 1, a + 2, n, g);
      record("braid", a, 0, compose(sa, compose(sb, sa)) == compose(sb, compose(sa, sb)));
    }
  }

  int top = std::min(n - 1, 4);
  std::vector<AlgebraElement> u;
  u.push_back(AlgebraElement(n, g));
  for (int a = 1; a <= std::min(n, top + 1); ++a) u.push_back(jucysMurphy(a, n, g));
  for (int a = 1; a <= top; ++a) {
    auto sa = AlgebraElement::monomial(MonomialMatrix::transposition(a, a + 1, n, g));
    AlgebraElement tail(n, g);
    for (int h = 0; h < g->order; ++h) {
      auto d = compose(MonomialMatrix::diag(h, a, n, g),
                       MonomialMatrix::diag(g->inv[h], a + 1, n, g));
      tail = tail + AlgebraElement::monomial(d);
    }
    tail = tail * (epsBar(a, n, g) * epsBar(a + 1, n, g));
    record("s_i u_i = u_{i+1} s_i + twist", a, 0, sa * u[a] == u[a + 1] * sa + tail);
    auto epsA = AlgebraElement::monomial(MonomialMatrix::epsOne(a, n, g));
    record("eps_i u_i = 0", a, 0, (epsA * u[a]).isZero());
    record("u_i eps_i = 0", a, 0, (u[a] * epsA).isZero());
    for (int b = 1; b < static_cast<int>(u.size()); ++b) {
      record("u_i u_j = u_j u_i", a, b, u[a] * u[b] == u[b] * u[a]);
      if (b != a && b != a + 1) record("s_i u_j = u_j s_i", a, b, sa * u[b] == u[b] * sa);
      if (b != a) {
        auto epsB = AlgebraElement::monomial(MonomialMatrix::epsOne(b, n, g));
        record("eps_j u_i = u_i eps_j", a, b, epsB * u[a] == u[a] * epsB);
      }
    }
    if (!g->trivial()) {
      for (int h : g->generators()) {
        auto d = AlgebraElement::monomial(MonomialMatrix::diag(h, a, n, g));
        record("h u_i = u_i h", a, h, d * u[a] == u[a] * d);
      }
    }
  }
  report["rows"] = rows;
  return emitReport(opts, std::move(report), pass);
}

int cmdVerifyCentral(const OutputOptions& opts, int n, const std::string& groupSpec) {
  const FiniteGroupTable* g =
      groupSpec.empty() ? &FiniteGroupTable::trivialGroup() : resolveGroup(groupSpec);
  ordered_json report;
  report["command"] = "verify-central";
  report["params"] = {{"n", n}, {"group", g->name}};
  ordered_json rows = ordered_json::array();
  bool pass = true;
  auto record = [&](const std::string& name, long k, bool ok) {
    pass = pass && ok;
    rows.push_back({{"check", name}, {"k", k}, {"ok", ok}});
  };
  CentralizerSpec center{0, CentralizerSpec::Flavor::Semigroup};
  CentralizerSpec groupCenter{0, CentralizerSpec::Flavor::Group};
  for (long k = 1; k <= n; ++k) {
    if (g->trivial()) {
      record("cycleSum central", k, isInCentralizer(cycleSum(k, n, g), groupCenter).inCentralizer);
      record("rookCycleSum central", k,
             isInCentralizer(rookCycleSum(k, n, g), center).inCentralizer);
      record("theta(Delta_n) = Delta_{n-1}", k,
             rookCycleSum(k, n, g).truncated(n - 1) == rookCycleSum(k, n - 1, g));
    } else {
      for (int psi = 0; psi < g->numChars(); ++psi) {
        if (k <= n)
          record("cycleSumWreath central psi=" + std::to_string(psi), k,
                 isInCentralizer(cycleSumWreath(k, psi, n, g), groupCenter).inCentralizer);
        auto phi = classFunctionForPsi(k, psi, g);
        record("rookCycleSumPhi central psi=" + std::to_string(psi), k,
               isInCentralizer(rookCycleSumPhi(k, n, g, phi), center).inCentralizer);
        record("theta-consistency psi=" + std::to_string(psi), k,
               rookCycleSumPhi(k, n, g, phi).truncated(n - 1) ==
                   rookCycleSumPhi(k, n - 1, g, phi));
      }
    }
  }
  for (int a = 1; a < n; ++a)
    record("theta(u_{i|n}) = u_{i|n-1}", a,
           jucysMurphy(a, n, g).truncated(n - 1) == jucysMurphy(a, n - 1, g));
  auto phi1 = identityIndicator(g);
  record("Delta2_n - xi(Delta2_{n-1}) = 2 u_{1|n}", 2,
         rookCycleSumPhi(2, n, g, phi1) - rookCycleSumPhi(2, n - 1, g, phi1).shifted() ==
             jucysMurphy(1, n, g).scaled(2));
  report["rows"] = rows;
  return emitReport(opts, std::move(report), pass);
}

int cmdSpectrum(const OutputOptions& opts, const std::string& lambdaText, int n,
                const std::string& groupSpec, const std::string& mlambdaText) {
  ordered_json report;
  report["command"] = "spectrum";
  ordered_json rows = ordered_json::array();
  bool pass = true;
  if (groupSpec.empty() || groupSpec == "trivial") {
    const FiniteGroupTable* g = &FiniteGroupTable::trivialGroup();
    Partition la = Partition::parse(lambdaText);
    report["params"] = {{"lambda", la.str()}, {"n", n}};
    RookRep rook(la, n, g);
    std::vector<Partition> expected = stripSetXn(la, n);
    for (const Partition& nu : partitionsOf(n)) {
      Rat mult = 0;
      for (const Partition& rho : partitionsOf(n))
        mult += rook.traceOf(classRepresentative(rho, n, g)) * Rat(charValue(nu, rho)) /
                Rat(zRho(rho));
      bool inStrip = std::binary_search(expected.begin(), expected.end(), nu);
      Rat want = inStrip ? 1 : 0;
      bool ok = mult == want;
      pass = pass && ok;
      if (mult != 0 || inStrip)
        rows.push_back({{"nu", nu.str()},
                        {"multiplicity", ratStr(mult)},
                        {"expected", ratStr(want)},
                        {"match", ok}});
    }
    for (const Partition& nu : expected) {
      Partition tail(nu.parts().size() > 1
                         ? std::vector<long>(nu.parts().begin() + 1, nu.parts().end())
                         : std::vector<long>{});
      pass = pass && la.contains(tail) && nu == lambdaBracket(tail, n);
    }
  } else {
    const FiniteGroupTable* g = resolveGroup(groupSpec);
    Multipartition bla = Multipartition::parse(mlambdaText, g);
    report["params"] = {{"mlambda", bla.str()}, {"n", n}, {"group", g->name}};
    RookRep rook(bla, n);
    std::vector<MonomialMatrix> all = enumerateGn(n, g);
    std::vector<Multipartition> expected = mpStripSetXn(bla, n);
    for (const Multipartition& bnu : multipartitionsOf(n, g)) {
      WreathRep rep(bnu);
      Rat mult = 0;
      for (const MonomialMatrix& x : all)
        mult += rook.traceOf(x) * rep.image(x.star()).trace();
      mult /= Rat(countGn(n, g));
      bool inStrip = std::binary_search(expected.begin(), expected.end(), bnu);
      Rat want = inStrip ? 1 : 0;
      bool ok = mult == want;
      pass = pass && ok;
      if (mult != 0 || inStrip)
        rows.push_back({{"nu", bnu.str()},
                        {"multiplicity", ratStr(mult)},
                        {"expected", ratStr(want)},
                        {"match", ok}});
    }
  }
  report["rows"] = rows;
  return emitReport(opts, std::move(report), pass);
}

int cmdCharval(const OutputOptions& opts, const std::string& lambdaText,
               const std::string& rhoText) {
  Partition la = Partition::parse(lambdaText);
  Partition rho = Partition::parse(rhoText);
  ordered_json report;
  report["command"] = "charval";
  report["params"] = {{"lambda", la.str()}, {"rho", rho.str()}};
  report["rows"] = ordered_json::array({{{"lambda", la.str()},
                                         {"rho", rho.str()},
                                         {"chi", charValue(la, rho).get_str()},
                                         {"dim", dimPartition(la).get_str()},
                                         {"z_rho", zRho(rho).get_str()}}});
  return emitReport(opts, std::move(report), true);
}

int cmdSstarTable(const OutputOptions& opts, int size) {
  ordered_json report;
  report["command"] = "sstar-table";
  report["params"] = {{"size", size}};
  ordered_json rows = ordered_json::array();
  bool pass = true;
  for (const Partition& la : partitionsUpTo(size)) {
    if (la.empty()) continue;
    for (const Partition& nu : partitionsUpTo(size)) {
      Rat v = evalSstar(la, nu);
      bool ok = nu.contains(la) || v == 0;  // extra vanishing
      pass = pass && ok;
      rows.push_back({{"lambda", la.str()},
                      {"nu", nu.str()},
                      {"sstar", ratStr(v)},
                      {"extra_vanishing_ok", ok}});
    }
  }
  report["rows"] = rows;
  return emitReport(opts, std::move(report), pass);
}

int cmdEmitGroup(const OutputOptions& opts, const std::string& name) {
  const FiniteGroupTable& g = FiniteGroupTable::builtin(name);
  std::string text = groupToJson(g);
  if (opts.outPath.empty())
    std::cout << text;
  else
    writeAtomically(opts.outPath, text);
  return 0;
}

SequenceFamily buildFamily(const std::string& kind, int i, int m, long k, int psi,
                           const FiniteGroupTable* g) {
  if (kind == "eps") return SequenceFamily::epsApprox(i, m, g);
  if (kind == "alpha")
    return g->trivial() ? SequenceFamily::alpha(k) : SequenceFamily::alphaWreath(k, g);
  if (kind == "zpsi") {
    if (g->trivial()) throw CLI::ValidationError("zpsi needs a nontrivial group");
    return SequenceFamily::lift(ShiftedFunction::psharp(Partition({k})).tagged(psi), g,
                                CoefficientHint{0, 0});
  }
  throw CLI::ValidationError("unknown family kind: " + kind);
}

int cmdLimit(const OutputOptions& opts, const std::string& sub, const std::string& familyKind,
             int i, int m, long k, int psi, int r, int bigR, const std::string& lambdaText,
             const std::string& groupSpec, const std::string& scheduleText, double tol,
             bool cauchy) {
  const FiniteGroupTable* g =
      groupSpec.empty() ? &FiniteGroupTable::trivialGroup() : resolveGroup(groupSpec);
  ordered_json report;
  report["command"] = "limit " + sub;
  bool pass = true;
  if (sub == "eps" || sub == "alpha" || sub == "zpsi") {
    SequenceFamily fam = buildFamily(sub, i, m, k, psi, g);
    report["params"] = {{"family", fam.name()}, {"r", r}, {"mode", cauchy ? "cauchy" : "exact-fit"}};
    TruncationLimitResult res =
        cauchy ? truncationLimitCauchy(fam, r, parseSchedule(scheduleText), tol)
               : truncationLimit(fam, r);
    report["limit_element"] = res.limit.str();
    report["certificate"] = ordered_json::parse(toJsonText(res.certificate));
    if (cauchy) {
      pass = true;  // a non-Cauchy schedule throws before reaching here
    } else if (sub == "eps") {
      pass = res.limit == AlgebraElement::monomial(MonomialMatrix::epsOne(i, r, g));
    } else {
      pass = isInCentralizer(res.limit, CentralizerSpec{0, CentralizerSpec::Flavor::Semigroup})
                 .inCentralizer;
    }
  } else if (sub == "window") {
    SequenceFamily fam = buildFamily(familyKind, i, m, k, psi, g);
    report["params"] = {{"family", fam.name()}, {"R", bigR}};
    int r0 = std::max(fam.level(), 1);
    std::vector<AlgebraElement> levels;
    ordered_json perR = ordered_json::array();
    for (int rr = r0; rr <= bigR; ++rr) {
      TruncationLimitResult res = truncationLimit(fam, rr);
      perR.push_back({{"r", rr},
                      {"limit_element", res.limit.str()},
                      {"certificate", ordered_json::parse(toJsonText(res.certificate))}});
      levels.push_back(std::move(res.limit));
    }
    WindowElement w(fam.level(), fam.group(), std::move(levels), fam.degreeBound());
    w.validate();
    report["family"] = fam.name();
    report["level_m"] = w.level();
    report["degree_bound"] = w.degreeBound();
    report["per_r"] = perR;
  } else if (sub == "compress") {
    SequenceFamily fam = buildFamily(familyKind, i, m, k, psi, g);
    Partition la = Partition::parse(lambdaText);
    std::vector<long> schedule = parseSchedule(scheduleText);
    CompressionReport rep = compressionExperiment(fam, la, r, schedule, tol);
    report["params"] = {{"family", rep.family}, {"lambda", rep.lambda}, {"r", r}};
    report["experiment"] = ordered_json::parse(toJsonText(rep));
    pass = rep.pass;
  } else if (sub == "pipeline") {
    std::vector<long> schedule = parseSchedule(scheduleText);
    Partition la = Partition::parse(lambdaText);
    PipelineReport rep = eigenPipeline(k, la, schedule);
    report["params"] = {{"k", k}, {"lambda", la.str()}};
    report["experiment"] = ordered_json::parse(toJsonText(rep));
    pass = rep.pass;
  } else {
    throw CLI::ValidationError("unknown limit subcommand: " + sub);
  }
  return emitReport(opts, std::move(report), pass);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"exact rook-monoid and wreath-product algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  OutputOptions opts;
  app.add_option("--format", opts.format, "json|csv|text")->capture_default_str();
  app.add_option("--out", opts.outPath, "write the report to this path (atomically)");

  int n = 3, i = 1, m = 1, psi = 0, r = 2, bigR = 3, size = 3;
  long k = 1, kOpt = 0;
  double tol = 1e-8;
  std::string group, lambda = "[1]", rho = "[1]", mlambda, schedule = "8,12,18,27,40",
                     name = "Z2", familyKind = "alpha", sub;

  auto* eig = app.add_subcommand("eigentable", "central-element eigenvalue tables");
  eig->add_option("--n", n)->required();
  eig->add_option("--k", kOpt);
  eig->add_option("--group", group);

  auto* dim = app.add_subcommand("dim-identity", "semisimplicity dimension identity");
  dim->add_option("--n", n)->required();

  auto* hecke = app.add_subcommand("verify-hecke", "presentation and commutation relations");
  hecke->add_option("--n", n)->required();
  hecke->add_option("--group", group);

  auto* central = app.add_subcommand("verify-central",
                                     "centrality, truncation-consistency and shift identities");
  central->add_option("--n", n)->required();
  central->add_option("--group", group);

  auto* spec = app.add_subcommand("spectrum", "restriction spectrum of the rook model");
  spec->add_option("--lambda", lambda);
  spec->add_option("--n", n)->required();
  spec->add_option("--group", group);
  spec->add_option("--mlambda", mlambda);

  auto* charv = app.add_subcommand("charval", "symmetric group character value");
  charv->add_option("--lambda", lambda)->required();
  charv->add_option("--rho", rho)->required();

  auto* sstar = app.add_subcommand("sstar-table", "table of shifted Schur evaluations");
  sstar->add_option("--size", size)->required();

  auto* emitg = app.add_subcommand("emit-group", "write a built-in group definition file");
  emitg->add_option("--name", name)->required();

  auto* limit = app.add_subcommand("limit", "truncation limits, windows and experiments");
  limit->add_option("what", sub, "eps|alpha|zpsi|window|compress|pipeline")->required();
  limit->add_option("--i", i);
  limit->add_option("--m", m);
  limit->add_option("--k", k);
  limit->add_option("--psi", psi);
  limit->add_option("--r", r);
  limit->add_option("--R", bigR);
  limit->add_option("--family", familyKind);
  limit->add_option("--lambda", lambda);
  limit->add_option("--group", group);
  limit->add_option("--schedule", schedule);
  limit->add_option("--tol", tol);
  bool cauchy = false;
  limit->add_flag("--cauchy", cauchy, "float Cauchy mode instead of the exact fit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eig->parsed()) return cmdEigentable(opts, n, kOpt, group);
    if (dim->parsed()) return cmdDimIdentity(opts, n);
    if (hecke->parsed()) return cmdVerifyHecke(opts, n, group);
    if (central->parsed()) return cmdVerifyCentral(opts, n, group);
    if (spec->parsed()) return cmdSpectrum(opts, lambda, n, group, mlambda);
    if (charv->parsed()) return cmdCharval(opts, lambda, rho);
    if (sstar->parsed()) return cmdSstarTable(opts, size);
    if (emitg->parsed()) return cmdEmitGroup(opts, name);
    if (limit->parsed())
      return cmdLimit(opts, sub, familyKind, i, m, k, psi, r, bigR, lambda, group, schedule,
                      tol, cauchy);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rookalg::cli
