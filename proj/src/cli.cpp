#include "hopfcm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "hopfcm/enumeration.hpp"
#include "hopfcm/hopf_complexes.hpp"
#include "hopfcm/homology.hpp"
#include "hopfcm/invariants.hpp"
#include "hopfcm/serialize.hpp"

namespace hopfcm::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string submonoid;
  std::string basis = "monomial";
  std::string field = "rational";
  std::string format = "json";
  std::optional<int> max_vertices;
  std::optional<std::size_t> max_faces;
  // survey
  std::string family = "mixed-graph";
  int n = 4;
  std::string output;
  int jobs = 1;
};

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field parse_field(const std::string& text) {
  if (text == "rational") return Field{};
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(text.substr(prefix.size()), &used);
      if (used != text.size() - prefix.size()) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
      throw InvalidInput("field '" + text + "' needs a prime below 2^31");
    }
    return Field{p};
  }
  throw InvalidInput("field must be 'rational' or 'prime:<p>', got '" + text + "'");
}

Limits make_limits(const Options& o) {
  Limits limits = limits_from_environment();
  if (o.max_vertices) limits.max_vertices = *o.max_vertices;
  if (o.max_faces) limits.max_faces = *o.max_faces;
  return limits;
}

Structure load(const Options& o, const Limits& limits) {
  std::ifstream in(o.input);
  if (!in) throw IoError("cannot read '" + o.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Structure h = parse_structure_text(buffer.str());
  if (h.size() > limits.max_vertices) {
    throw ResourceLimitExceeded("input has " + std::to_string(h.size()) + " elements; the vertex limit is " +
                                std::to_string(limits.max_vertices));
  }
  return h;
}

SubmonoidId submonoid_for(const Options& o, Family family) {
  if (o.submonoid.empty()) return natural_submonoid(family);
  const SubmonoidId s = parse_submonoid(o.submonoid);
  if (!valid_for(s, family)) {
    throw InvalidInput("submonoid '" + o.submonoid + "' does not apply to " + std::string(to_string(family)));
  }
  return s;
}

Json header(const Structure& h, const char* verb) {
  return {{"verb", verb}, {"structure", to_json(h)}};
}

Json header(const Structure& h, const char* verb, SubmonoidId s) {
  Json doc = header(h, verb);
  doc["submonoid"] = std::string(to_string(s));
  return doc;
}

void emit(std::ostream& out, const Options& o, const Json& doc, const std::string& text) {
  if (o.format == "text" && !text.empty()) out << text << '\n';
  else out << doc.dump(2) << '\n';
}

std::string render_pair(const GroundSet& ground, const IndexPair& p, const char* sep) {
  return ground.label(p.first) + sep + ground.label(p.second);
}

Json crossing_json(const MixedGraph& g) {
  Json pairs = Json::array();
  for (const auto& c : crossing_pairs(g)) {
    pairs.push_back({{"e", {g.ground().label(c.e.first), g.ground().label(c.e.second)}},
                     {"f", {g.ground().label(c.f.first), g.ground().label(c.f.second)}},
                     {"e_crosses_f", c.e_crosses_f},
                     {"f_crosses_e", c.f_crosses_e}});
  }
  return pairs;
}

Json inv2desc_json(const DoublePoset& p) {
  const auto result = inversion_to_descent(p);
  Json inv = Json::array();
  for (const auto& e : inversions(p)) inv.push_back({p.carrier().label(e.first), p.carrier().label(e.second)});
  Json desc = Json::array();
  for (const auto& e : descents(p)) desc.push_back({p.carrier().label(e.first), p.carrier().label(e.second)});
  Json doc{{"holds", result.holds}, {"inversions", inv}, {"descents", desc}};
  if (result.witness) {
    doc["witness"] = {p.carrier().label(result.witness->first), p.carrier().label(result.witness->second)};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

std::string render_minor(const MinorKey& key, const GroundSet& ground) {
  auto set = [&](Mask m) {
    std::string s = "{";
    for (const auto& l : ground.labels_of(m)) s += (s.size() > 1 ? "," : "") + l;
    return s + "}";
  };
  return "S=" + set(key.lower) + " T=" + set(key.upper);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  Json membership = Json::object();
  for (SubmonoidId s : {SubmonoidId::Edgeless, SubmonoidId::Directed, SubmonoidId::InversionFree, SubmonoidId::Full}) {
    if (valid_for(s, h.family())) membership[std::string(to_string(s))] = in_submonoid(h, s);
  }
  Json doc = header(h, "validate");
  doc["valid"] = true;
  doc["size"] = h.size();
  doc["canonical"] = canonical_form(h);
  doc["in_submonoid"] = membership;
  emit(out, o, doc, "valid");
  return kOk;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  Json doc = header(h, "sigma");
  doc["complex"] = to_json(sigma(h, limits));
  emit(out, o, doc, "");
  return kOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  Json doc = header(h, "gamma", s);
  doc["complex"] = to_json(gamma(h, s, limits));
  emit(out, o, doc, "");
  return kOk;
}

int cmd_fvector(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const RelativePair pair = sigma_gamma_pair(h, s, limits);
  Json doc = header(h, "fvector", s);
  doc["sigma"] = f_vector(pair.total());
  doc["gamma"] = f_vector(pair.sub());
  doc["relative"] = pair.relative_face_counts();
  emit(out, o, doc, "");
  return kOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const Field field = parse_field(o.field);
  const RelativePair pair = sigma_gamma_pair(h, s, limits);
  Json doc = header(h, "homology", s);
  doc["field"] = o.field;
  doc["sigma"] = to_json(reduced_betti(pair.total(), field));
  doc["gamma"] = to_json(reduced_betti(pair.sub(), field));
  doc["relative"] = to_json(relative_betti(pair, field));
  emit(out, o, doc, "");
  return kOk;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const RationalPolynomial p = char_polynomial(h, s, limits);
  Json values = Json::array();
  for (int k = 0; k <= h.size() + 1; ++k) values.push_back(integer_json(count_s_proper(h, s, k, limits)));
  Json doc = header(h, "charpoly", s);
  doc["polynomial"] = to_json(p);
  doc["values"] = values;
  emit(out, o, doc, p.to_string());
  return kOk;
}

int cmd_hvector(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const HVector shifted = h_vector_shifted(h, s, limits);
  Json doc = header(h, "hvector", s);
  doc["h_vector"] = to_json(shifted);
  doc["unshifted"] = to_json(w_transform(char_polynomial(h, s, limits)));
  emit(out, o, doc, shifted.display());
  return kOk;
}

int cmd_qsym(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  QSymExpansion q = qsym_monomial(h, s);
  if (o.basis == "fundamental") q = to_fundamental(q);
  else if (o.basis != "monomial") throw InvalidInput("basis must be 'monomial' or 'fundamental'");
  Json doc = header(h, "qsym", s);
  doc["qsym"] = to_json(q);
  if (q.basis == QSymBasis::Fundamental) doc["f_positive"] = is_f_positive(q);
  emit(out, o, doc, q.display());
  return kOk;
}

int cmd_cm_check(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const Field field = parse_field(o.field);
  const RelativePair pair = sigma_gamma_pair(h, s, limits);
  const CmReport sigma_cm = is_cm(pair.total(), field);
  const CmReport relative = is_relatively_cm(pair, field);
  Json doc = header(h, "cm-check", s);
  doc["field"] = o.field;
  doc["sigma_cm"] = to_json(sigma_cm, h.ground());
  doc["relatively_cm"] = to_json(relative, h.ground());
  emit(out, o, doc, relative.verdict ? "PASS" : "FAIL");
  return kOk;
}

int cmd_theorem_check(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const SubmonoidId s = submonoid_for(o, h.family());
  const Field field = parse_field(o.field);
  const CmReport combinatorial = theorem1_combinatorial(h, s, limits);
  const CmReport homological = is_relatively_cm(sigma_gamma_pair(h, s, limits), field);
  Json doc = header(h, "theorem-check", s);
  doc["status"] = combinatorial.verdict ? "PASS" : "FAIL";
  doc["theorem1"] = to_json(combinatorial, h.ground());
  doc["relatively_cm"] = to_json(homological, h.ground());
  doc["agree"] = combinatorial.verdict == homological.verdict;

  std::string text = combinatorial.verdict ? "PASS" : "FAIL";
  if (!combinatorial.failures.empty() && combinatorial.failures.front().minor) {
    const auto& first = combinatorial.failures.front();
    doc["witness_minor"] = to_json(*first.minor, h.ground());
    text += " minor " + render_minor(*first.minor, h.ground()) + " (" + first.reason + ")";
  }
  if (const MixedGraph* g = h.mixed_graph()) {
    const auto pairs = crossing_pairs(*g);
    doc["noncrossing"] = pairs.empty();
    doc["crossing_pairs"] = crossing_json(*g);
    if (!pairs.empty()) {
      text += " crossing " + render_pair(g->ground(), pairs.front().e, "-") + " / " +
              render_pair(g->ground(), pairs.front().f, "-");
    }
  } else {
    const DoublePoset& p = *h.double_poset();
    const auto result = inversion_to_descent(p);
    doc["inversion_to_descent"] = inv2desc_json(p);
    if (result.witness) text += " inversion " + render_pair(p.carrier(), *result.witness, "<");
  }
  emit(out, o, doc, text);
  return kOk;
}

int cmd_crossing(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const MixedGraph* g = h.mixed_graph();
  if (!g) throw InvalidInput("crossing applies to mixed graphs");
  Json doc = header(h, "crossing");
  doc["noncrossing"] = is_noncrossing(*g);
  doc["crossing_pairs"] = crossing_json(*g);
  emit(out, o, doc, is_noncrossing(*g) ? "noncrossing" : "crossing");
  return kOk;
}

int cmd_inv2desc(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Structure h = load(o, limits);
  const DoublePoset* p = h.double_poset();
  if (!p) throw InvalidInput("inv2desc applies to double posets");
  Json doc = header(h, "inv2desc");
  doc["inversion_to_descent"] = inv2desc_json(*p);
  emit(out, o, doc, inversion_to_descent(*p).holds ? "holds" : "fails");
  return kOk;
}

Json survey_record(const Structure& h, SubmonoidId s, const Limits& limits) {
  const StructureAnalysis a = analyze(h, s, limits);
  Json h_vector = Json::array();
  for (const auto& e : a.h_vector.entries) h_vector.push_back(integer_json(e));
  Json record{{"canonical", a.canonical},
              {"size", h.size()},
              {"h_vector", h_vector},
              {"h_positive", a.h_positive},
              {"f_positive", a.f_positive},
              {"theorem1", a.theorem1},
              {"relatively_cm", a.relatively_cm}};
  if (a.characterization) record["characterization"] = *a.characterization;
  else record["characterization"] = nullptr;
  record["agree"] = a.theorem1 == a.relatively_cm && (!a.characterization || *a.characterization == a.relatively_cm);
  return record;
}

// canonical form -> record line; a torn last line from an interrupted run is dropped
std::map<std::string, std::string> read_records(const std::string& path) {
  std::map<std::string, std::string> records;
  std::ifstream in(path);
  if (!in) return records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json doc = Json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("canonical") || !doc["canonical"].is_string()) {
      continue;
    }
    records.emplace(doc["canonical"].get<std::string>(), line);
  }
  return records;
}

int cmd_survey(const Options& o, std::ostream& out) {
  const Limits limits = make_limits(o);
  const Family family = parse_family(o.family);
  const SubmonoidId s = submonoid_for(o, family);
  if (o.n < 0) throw InvalidInput("--n must be nonnegative");
  if (o.n > enumeration_cap(family)) {
    throw ResourceLimitExceeded("survey size " + std::to_string(o.n) + " exceeds the cap " +
                                std::to_string(enumeration_cap(family)));
  }
  if (o.output.empty()) throw InvalidInput("survey needs --output");

  auto records = read_records(o.output);
  const std::size_t resumed = records.size();

  std::vector<Structure> todo;
  std::size_t total = 0;
  for (int n = 0; n <= o.n; ++n) {
    for (auto& h : enumerate_structures(family, n)) {
      ++total;
      if (!records.count(canonical_form(h))) todo.push_back(std::move(h));
    }
  }

  {
    std::ofstream append(o.output, std::ios::app);
    if (!append) throw IoError("cannot write '" + o.output + "'");
    std::mutex writer;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto work = [&] {
      for (std::size_t i = next++; i < todo.size(); i = next++) {
        try {
          Json record = survey_record(todo[i], s, limits);
          const std::string key = record["canonical"].get<std::string>();
          std::string line = record.dump();
          std::lock_guard<std::mutex> lock(writer);
          append << line << '\n' << std::flush;
          records.emplace(key, std::move(line));
        } catch (...) {
          std::lock_guard<std::mutex> lock(writer);
          if (!failure) failure = std::current_exception();
          next = todo.size();
        }
      }
    };
    const int jobs = std::max(1, o.jobs);
    std::vector<std::thread> workers;
    for (int j = 1; j < jobs; ++j) workers.emplace_back(work);
    work();
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
    if (!append) throw IoError("write to '" + o.output + "' failed");
  }

  const std::string tmp = o.output + ".tmp";
  {
    std::ofstream final_out(tmp, std::ios::trunc);
    if (!final_out) throw IoError("cannot write '" + tmp + "'");
    for (const auto& [key, line] : records) final_out << line << '\n';
    if (!final_out) throw IoError("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, o.output, ec);
  if (ec) throw IoError("cannot replace '" + o.output + "': " + ec.message());

  std::size_t agree = 0, h_positive = 0, relcm = 0;
  for (const auto& [key, line] : records) {
    const Json doc = Json::parse(line);
    agree += doc.value("agree", false);
    h_positive += doc.value("h_positive", false);
    relcm += doc.value("relatively_cm", false);
  }
  Json summary{{"verb", "survey"},
               {"family", std::string(to_string(family))},
               {"submonoid", std::string(to_string(s))},
               {"n", o.n},
               {"structures", total},
               {"resumed", resumed},
               {"computed", todo.size()},
               {"records", records.size()},
               {"agree", agree},
               {"h_positive", h_positive},
               {"relatively_cm", relcm}};
  std::ostringstream text;
  text << records.size() << " records, " << agree << " agreeing, " << h_positive << " h-positive";
  emit(out, o, summary, text.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay checks for linearized Hopf monoids", "hopfcm"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool submonoid) {
    cmd->add_option("input", o.input, "structure document (JSON)")->required();
    if (submonoid) {
      cmd->add_option("--submonoid", o.submonoid, "edgeless | directed | inversion-free | full");
    }
    cmd->add_option("--max-vertices", o.max_vertices, "largest accepted ground set");
    cmd->add_option("--max-faces", o.max_faces, "largest complex built");
    cmd->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", o.field, "rational | prime:<p>");
  };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* cmd = app.add_subcommand(name, help);
    handlers[cmd] = fn;
    return cmd;
  };

  add_common(verb("validate", "parse and validate a structure", cmd_validate), false);
  add_common(verb("sigma", "order complex of the structure", cmd_sigma), false);
  add_common(verb("gamma", "coloring complex for a submonoid", cmd_gamma), true);
  add_common(verb("fvector", "f-vectors of sigma, gamma and the pair", cmd_fvector), true);
  {
    CLI::App* cmd = verb("homology", "reduced and relative Betti numbers", cmd_homology);
    add_common(cmd, true);
    add_field(cmd);
  }
  add_common(verb("charpoly", "characteristic polynomial", cmd_charpoly), true);
  add_common(verb("hvector", "shifted h-vector of the characteristic polynomial", cmd_hvector), true);
  {
    CLI::App* cmd = verb("qsym", "characteristic quasisymmetric function", cmd_qsym);
    add_common(cmd, true);
    cmd->add_option("--basis", o.basis, "monomial | fundamental")
        ->check(CLI::IsMember({"monomial", "fundamental"}));
  }
  {
    CLI::App* cmd = verb("cm-check", "homological Cohen-Macaulay checks", cmd_cm_check);
    add_common(cmd, true);
    add_field(cmd);
  }
  {
    CLI::App* cmd = verb("theorem-check", "combinatorial criterion against homology", cmd_theorem_check);
    add_common(cmd, true);
    add_field(cmd);
  }
  add_common(verb("crossing", "crossing pairs of undirected edges", cmd_crossing), false);
  add_common(verb("inv2desc", "inversion-to-descent condition", cmd_inv2desc), false);
  {
    CLI::App* cmd = verb("survey", "scan all structures up to a size", cmd_survey);
    cmd->add_option("--family", o.family, "mixed-graph | double-poset")
        ->check(CLI::IsMember({"mixed-graph", "double-poset"}));
    cmd->add_option("--submonoid", o.submonoid, "edgeless | directed | inversion-free | full");
    cmd->add_option("--n", o.n, "largest size scanned");
    cmd->add_option("--output", o.output, "JSON-lines result table")->required();
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--max-vertices", o.max_vertices, "largest accepted ground set");
    cmd->add_option("--max-faces", o.max_faces, "largest complex built");
    cmd->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    for (const auto& [cmd, fn] : handlers) {
      if (cmd->parsed()) return fn(o, out);
    }
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const ValidationError& e) {
    err << "invalid input (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace hopfcm::cli
