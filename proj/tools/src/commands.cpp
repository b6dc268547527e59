#include "commands.hpp"

#include <cstdlib>
#include <ostream>

#include "io.hpp"
#include "tlalg/error.hpp"

namespace tlalg::cli {

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Cohomology: return "cohomology";
    case Command::ChernWeil: return "chern-weil";
    case Command::CharClasses: return "char-classes";
    case Command::Pullback: return "pullback";
    case Command::Surjectivity: return "surjectivity";
  }
  return "?";
}

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple(const Simplex& s) {
  std::vector<std::string> parts;
  for (Vertex v : s) parts.push_back(std::to_string(v));
  return "(" + join(parts, ",") + ")";
}

Json coords_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

std::string coords_text(const RationalVector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(format_rational(x));
  return "[" + join(parts, ", ") + "]";
}

// Everything a job may need, loaded once.
struct Inputs {
  ComplexPtr complex;
  SystemPtr system;                       // null when no coefficients were given
  std::optional<TwistedCochain> omega;
};

Inputs load_inputs(const JobConfig& cfg) {
  Inputs in;
  if (!cfg.complex.empty()) in.complex = load_complex(cfg.complex);
  int sources = !cfg.rep.empty() + !cfg.rep_file.empty() + !cfg.algebroid_file.empty();
  if (sources > 1) throw Error(ErrorCode::InvalidArgument, "use only one of --rep, --rep-file, --algebroid");

  if (!cfg.algebroid_file.empty()) {
    auto parts = algebroid_from_json(read_json_file(cfg.algebroid_file), in.complex);
    in.complex = parts.complex;
    in.system = parts.adjoint;
    in.omega = parts.omega;
  } else if (!cfg.rep.empty() || !cfg.rep_file.empty() || !cfg.omega_file.empty()) {
    if (!in.complex) throw Error(ErrorCode::InvalidArgument, "--complex is required");
    if (!cfg.rep.empty()) {
      in.system = share(representation_from_inline(in.complex, cfg.rep));
    } else if (!cfg.rep_file.empty()) {
      auto j = read_json_file(cfg.rep_file);
      in.system = share(j.contains("transports") ? transports_from_json(in.complex, j)
                                                 : representation_from_json(in.complex, j));
    }
  }
  if (!cfg.omega_file.empty()) {
    if (!in.system) in.system = share(LocalSystem::trivial(in.complex, 1));
    in.omega = cochain_from_json(in.system, read_json_file(cfg.omega_file));
  }
  return in;
}

SystemPtr system_or_trivial(const Inputs& in) {
  return in.system ? in.system : share(LocalSystem::trivial(in.complex, 1));
}

CommAlgebroid algebroid_of(const Inputs& in) {
  auto s = system_or_trivial(in);
  return make_algebroid(s, in.omega ? *in.omega : TwistedCochain(s, 2));
}

Json header(const JobConfig& cfg) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command_name(cfg.command)}};
}

int do_validate(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  std::vector<std::string> checks{"complex"};
  if (in.omega) {
    algebroid_of(in);
    checks.insert(checks.end(), {"flat", "closed"});
  } else if (in.system) {
    if (auto bad = check_flat(*in.system); !bad.empty())
      throw Error(ErrorCode::NotFlat, "local system is not flat", bad);
    checks.push_back("flat");
  }
  if (cfg.json) {
    auto j = header(cfg);
    j["valid"] = true;
    j["complex"] = complex_to_json(*in.complex);
    j["checks"] = checks;
    if (in.system) j["rank"] = in.system->rank();
    out << j.dump(2) << "\n";
  } else {
    const auto& c = *in.complex;
    out << "valid: " << join(checks, ", ") << "\n";
    if (cfg.verbosity > 0) {
      out << "complex " << c.name() << ": dimension " << c.dimension() << ", counts";
      for (int n = 0; n <= c.dimension(); ++n) out << " " << c.count(n);
      out << ", euler " << c.euler_characteristic() << "\n";
    }
  }
  return 0;
}

std::vector<int> degrees_of(const JobConfig& cfg, const Complex& c) {
  if (cfg.degree && !cfg.all_degrees) return {*cfg.degree};
  std::vector<int> out;
  for (int n = 0; n <= c.dimension(); ++n) out.push_back(n);
  return out;
}

int do_cohomology(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  auto s = system_or_trivial(in);
  Json dims = Json::object();
  Json reps = Json::object();
  std::vector<std::string> text;
  for (int n : degrees_of(cfg, *in.complex)) {
    auto h = cohomology(s, n);
    dims[std::to_string(n)] = h.dimension();
    text.push_back("H" + std::to_string(n) + "=" + std::to_string(h.dimension()));
    if (cfg.verbosity >= 2) {
      Json r = Json::array();
      for (const auto& z : h.representatives()) r.push_back(cochain_to_json(z));
      reps[std::to_string(n)] = r;
    }
  }
  if (cfg.json) {
    auto j = header(cfg);
    j["complex"] = in.complex->name();
    j["rank"] = s->rank();
    j["dimensions"] = dims;
    if (cfg.verbosity >= 2) j["representatives"] = reps;
    out << j.dump(2) << "\n";
  } else {
    out << join(text) << "\n";
    if (cfg.verbosity >= 2) out << reps.dump(2) << "\n";
  }
  return 0;
}

int do_chern_weil(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  auto a = algebroid_of(in);
  std::vector<std::size_t> powers;
  if (cfg.power) {
    powers.push_back(*cfg.power);
  } else {
    for (int k = 0; 2 * k <= a.base().dimension(); ++k) powers.push_back(static_cast<std::size_t>(k));
  }
  Json rows = Json::array();
  for (auto k : powers) {
    auto inv = invariant_sections(a, k);
    auto classes = chern_weil_image(a, k);
    auto dim = chern_weil_image_dimension(a, k);
    Json cls = Json::array();
    for (const auto& c : classes) cls.push_back(coords_to_json(c.coordinates));
    rows.push_back({{"k", k}, {"degree", 2 * k}, {"invariant_sections", inv.dimension()}, {"image_dimension", dim},
                    {"classes", cls}});
    if (!cfg.json) {
      out << "k=" << k << " degree=" << 2 * k << " invariant_sections=" << inv.dimension() << " image_dim=" << dim
          << "\n";
      if (cfg.verbosity > 0)
        for (const auto& c : classes) out << "  class " << coords_text(c.coordinates) << "\n";
    }
  }
  if (cfg.json) {
    auto j = header(cfg);
    j["complex"] = a.base().name();
    j["rank"] = a.adjoint().rank();
    j["powers"] = rows;
    out << j.dump(2) << "\n";
  }
  return 0;
}

Json surjectivity_json(const LocalSystem& l, const SurjectivityResult& r) {
  return Json{{"surjective", r.surjective}, {"certificate", certificate_to_json(r.certificate)},
              {"verified", r.surjective && verify_certificate(l, r.certificate)}};
}

void certificate_text(const LocalSystem& l, const SurjectivityResult& r, std::ostream& out) {
  out << "surjective: " << (r.surjective ? "true" : "false") << "\n";
  if (!r.surjective) return;
  out << "certificate:\n";
  for (const auto& e : r.certificate) {
    std::vector<std::string> terms;
    for (const auto& [t, q] : e.terms) terms.push_back(format_rational(q) + " " + t);
    out << "  " << e.target << " = " << join(terms, " + ") << "\n";
  }
  out << "verified: " << (verify_certificate(l, r.certificate) ? "true" : "false") << "\n";
}

int do_char_classes(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  auto s = system_or_trivial(in);
  auto report = characteristic_classes(*s, cfg.check_surjectivity);
  if (cfg.json) {
    auto j = header(cfg);
    j["generators"] = report.generators;
    Json sign = Json::array();
    for (const auto& [name, bit] : report.sign.loop_values) sign.push_back(bit.value() ? 1 : 0);
    j["sign"] = sign;
    Json logs = Json::object();
    for (const auto& [p, c] : report.logs) {
      Json vals = Json::array();
      for (const auto& [name, v] : c.loop_values) vals.push_back(rational_to_json(v));
      logs[std::to_string(p)] = vals;
    }
    j["logs"] = logs;
    Json image = Json::object();
    for (const auto& [d, img] : report.image) image[std::to_string(d)] = img.dimension;
    j["image_dims"] = image;
    if (report.surjectivity) {
      auto sj = surjectivity_json(*s, *report.surjectivity);
      j["surjective"] = sj["surjective"];
      j["certificate"] = sj["certificate"];
      j["verified"] = sj["verified"];
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "generators: " << join(report.generators) << "\n";
  std::vector<std::string> bits;
  for (const auto& [name, bit] : report.sign.loop_values) bits.push_back(bit.value() ? "1" : "0");
  out << "sign: " << join(bits) << (report.sign.is_zero() ? " (zero class)" : "") << "\n";
  if (report.logs.empty()) out << "logs: none\n";
  for (const auto& [p, c] : report.logs) {
    std::vector<std::string> vals;
    for (const auto& [name, v] : c.loop_values) vals.push_back(format_rational(v));
    out << "log_" << p << ": " << join(vals) << "\n";
  }
  std::vector<std::string> dims;
  for (const auto& [d, img] : report.image) dims.push_back("H" + std::to_string(d) + "=" + std::to_string(img.dimension));
  out << "image_dims: " << join(dims) << "\n";
  if (cfg.verbosity > 0) {
    for (const auto& [d, img] : report.image)
      if (!img.labels.empty()) out << "  degree " << d << " spanned by " << join(img.labels, ", ") << "\n";
  }
  if (report.surjectivity) certificate_text(*s, *report.surjectivity, out);
  return 0;
}

int do_surjectivity(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  auto s = system_or_trivial(in);
  auto r = surjectivity_check(*s);
  if (cfg.json) {
    auto j = header(cfg);
    j.update(surjectivity_json(*s, r));
    out << j.dump(2) << "\n";
  } else {
    certificate_text(*s, r, out);
  }
  return 0;
}

int do_pullback(const JobConfig& cfg, const Inputs& in, std::ostream& out) {
  if (cfg.map_files.empty()) throw Error(ErrorCode::InvalidArgument, "pullback needs at least one --map");
  std::vector<SimplicialMap> maps;
  for (const auto& path : cfg.map_files) maps.push_back(map_from_json(read_json_file(path)));
  const auto& target = maps.front().target_ptr();

  Json links = Json::array();
  bool chain = true;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    bool c = contiguous(maps[i], maps[i + 1]);
    links.push_back(c);
    chain = chain && c;
  }

  SystemPtr system = in.system;
  if (system && !(system->base() == *target)) {
    throw Error(ErrorCode::BaseMismatch, "local system does not live on the maps' target");
  }
  if (!system) system = share(LocalSystem::trivial(target, 1));

  Json pulls = Json::array();
  std::vector<LocalSystem> pulled;
  for (const auto& f : maps) {
    pulled.push_back(pullback_system(f, *system));
    auto ps = share(pulled.back());
    Json dims = Json::object();
    for (int n = 0; n <= f.source().dimension(); ++n) dims[std::to_string(n)] = cohomology(ps, n).dimension();
    Json entry{{"dimensions", dims}};
    if (in.omega) {
      auto a = pullback_algebroid(f, algebroid_of(in));
      Json cw = Json::object();
      for (int k = 0; 2 * k <= f.source().dimension(); ++k)
        cw[std::to_string(2 * k)] = chern_weil_image_dimension(a, static_cast<std::size_t>(k));
      entry["chern_weil_image_dims"] = cw;
    }
    pulls.push_back(entry);
  }
  Json iso = Json::array();
  if (system->rank() == 1)
    for (std::size_t i = 0; i + 1 < pulled.size(); ++i) iso.push_back(iso_rank1(pulled[i], pulled[i + 1]));

  if (cfg.json) {
    auto j = header(cfg);
    j["maps"] = maps.size();
    j["links_contiguous"] = links;
    j["chain_contiguous"] = chain;
    j["pullbacks"] = pulls;
    if (system->rank() == 1) j["pullbacks_isomorphic"] = iso;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "maps: " << maps.size() << "\n";
  out << "chain contiguous: " << (chain ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    out << "map " << i << ":";
    for (const auto& [n, d] : pulls[i]["dimensions"].items()) out << " H" << n << "=" << d.get<std::size_t>();
    if (pulls[i].contains("chern_weil_image_dims")) {
      out << " chern-weil";
      for (const auto& [n, d] : pulls[i]["chern_weil_image_dims"].items()) out << " H" << n << "=" << d.get<std::size_t>();
    }
    out << "\n";
    if (i < iso.size()) out << "  pullbacks " << i << "," << i + 1 << " isomorphic: " << (iso[i].get<bool>() ? "true" : "false") << "\n";
  }
  return 0;
}

void report_error(const JobConfig& cfg, const Error& e, std::ostream& err) {
  if (cfg.json) {
    err << error_to_json(e).dump(2) << "\n";
    return;
  }
  err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
  for (const auto& w : e.witnesses()) err << "  at " << tuple(w) << "\n";
}

}  // namespace

int verbosity_from_env() {
  const char* v = std::getenv("TLALG_VERBOSITY");
  if (!v) return 1;
  std::string s(v);
  if (s == "0" || s == "1" || s == "2") return s[0] - '0';
  return 1;
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto in = load_inputs(cfg);
    if (!in.complex && cfg.command != Command::Pullback) {
      throw Error(ErrorCode::InvalidArgument, "--complex is required");
    }
    switch (cfg.command) {
      case Command::Validate: return do_validate(cfg, in, out);
      case Command::Cohomology: return do_cohomology(cfg, in, out);
      case Command::ChernWeil: return do_chern_weil(cfg, in, out);
      case Command::CharClasses: return do_char_classes(cfg, in, out);
      case Command::Pullback: return do_pullback(cfg, in, out);
      case Command::Surjectivity: return do_surjectivity(cfg, in, out);
    }
  } catch (const Error& e) {
    report_error(cfg, e, err);
    return 1;
  }
  return 1;
}

}  // namespace tlalg::cli
