#include "wqd/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wqd/errors.hpp"

namespace wqd {

namespace {

struct Entry {
  std::string value;
  int line;
};
using FlatMap = std::vector<std::pair<std::string, Entry>>;  // ordered

const Entry* find(const FlatMap& m, const std::string& key) {
  for (const auto& [k, e] : m) {
    if (k == key) return &e;
  }
  return nullptr;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw SchemaError("line " + std::to_string(line) + ": " + what);
}

double to_double(const Entry& e, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    fail(e.line, "field '" + key + "' expects a number, got '" + e.value + "'");
  }
}

std::vector<double> to_list(const Entry& e, const std::string& key) {
  std::string v = e.value;
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
    fail(e.line, "field '" + key + "' expects a list like [1, 2, 3]");
  }
  v = v.substr(1, v.size() - 2);
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      fail(e.line, "field '" + key + "': bad list element '" + item + "'");
    }
  }
  if (out.empty()) fail(e.line, "field '" + key + "': empty list");
  return out;
}

// Indentation-tree text -> ordered flat map of dotted paths. Two spaces per
// level; 'key: value' is a leaf, bare 'key:' opens a section.
FlatMap flatten(const std::string& text) {
  FlatMap out;
  std::vector<std::string> stack;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < s.size() && s[indent] == ' ') ++indent;
    if (indent == s.size()) continue;  // blank
    if (s.find('\t') != std::string::npos) fail(line, "tabs are not allowed");
    if (indent % 2 != 0) fail(line, "indentation must be multiples of 2 spaces");
    const std::size_t depth = indent / 2;
    if (depth > stack.size()) fail(line, "indentation jumps a level");
    stack.resize(depth);

    std::string body = s.substr(indent);
    while (!body.empty() && body.back() == ' ') body.pop_back();
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) fail(line, "expected 'key:' or 'key: value'");
    std::string key = body.substr(0, colon);
    if (key.empty()) fail(line, "empty key");
    std::string value = body.substr(colon + 1);
    const std::size_t first = value.find_first_not_of(' ');
    value = first == std::string::npos ? "" : value.substr(first);

    std::string path;
    for (const auto& part : stack) path += part + ".";
    path += key;
    if (value.empty()) {
      stack.push_back(key);
    } else {
      if (find(out, path)) fail(line, "duplicate key '" + path + "'");
      out.emplace_back(path, Entry{value, line});
    }
  }
  return out;
}

// flat map -> indentation tree text (sections re-opened as needed)
std::string emit_flat(const FlatMap& flat) {
  std::ostringstream os;
  std::vector<std::string> open;
  for (const auto& [k, e] : flat) {
    std::vector<std::string> parts;
    std::stringstream ks(k);
    std::string part;
    while (std::getline(ks, part, '.')) parts.push_back(part);
    std::size_t common = 0;
    while (common < open.size() && common + 1 < parts.size() &&
           open[common] == parts[common]) {
      ++common;
    }
    open.resize(common);
    for (std::size_t i = common; i + 1 < parts.size(); ++i) {
      os << std::string(2 * i, ' ') << parts[i] << ":\n";
      open.push_back(parts[i]);
    }
    os << std::string(2 * (parts.size() - 1), ' ') << parts.back() << ": "
       << e.value << "\n";
  }
  return os.str();
}

void read_worldline(const FlatMap& m, const std::string& prefix,
                    WorldlineSpec& w, std::vector<std::string>& seen) {
  const auto grab = [&](const std::string& leaf, auto&& set) {
    const std::string key = prefix + "." + leaf;
    if (const Entry* e = find(m, key)) {
      set(*e, key);
      seen.push_back(key);
    }
  };
  grab("family", [&](const Entry& e, const std::string&) { w.family = e.value; });
  grab("velocity", [&](const Entry& e, const std::string& k) { w.velocity = to_double(e, k); });
  grab("accel", [&](const Entry& e, const std::string& k) { w.accel = to_double(e, k); });
  grab("profile", [&](const Entry& e, const std::string&) { w.profile = e.value; });
  grab("value", [&](const Entry& e, const std::string& k) { w.value = to_double(e, k); });
  grab("amplitude", [&](const Entry& e, const std::string& k) { w.amplitude = to_double(e, k); });
  grab("tau1", [&](const Entry& e, const std::string& k) { w.tau1 = to_double(e, k); });
  grab("tau2", [&](const Entry& e, const std::string& k) { w.tau2 = to_double(e, k); });
  grab("omega-g", [&](const Entry& e, const std::string& k) { w.omega_g = to_double(e, k); });
  grab("radius", [&](const Entry& e, const std::string& k) { w.radius = to_double(e, k); });
  grab("phase", [&](const Entry& e, const std::string& k) { w.phase = to_double(e, k); });
}

void read_mode(const FlatMap& m, const std::string& prefix, ModeSpec& mode,
               std::vector<std::string>& seen) {
  read_worldline(m, prefix + ".worldline", mode.worldline, seen);
  const auto grab = [&](const std::string& leaf, auto&& set) {
    const std::string key = prefix + "." + leaf;
    if (const Entry* e = find(m, key)) {
      set(*e, key);
      seen.push_back(key);
    }
  };
  grab("switching.kind", [&](const Entry& e, const std::string&) { mode.switching.kind = e.value; });
  grab("switching.sigma", [&](const Entry& e, const std::string& k) { mode.switching.sigma = to_double(e, k); });
  grab("switching.omega-m", [&](const Entry& e, const std::string& k) { mode.switching.omega_m = to_double(e, k); });
  grab("spectrum.kind", [&](const Entry& e, const std::string&) { mode.spectrum.kind = e.value; });
  grab("spectrum.coupling", [&](const Entry& e, const std::string& k) { mode.spectrum.coupling = to_double(e, k); });
  grab("spectrum.lambda-ir", [&](const Entry& e, const std::string& k) { mode.spectrum.lambda_ir = to_double(e, k); });
  grab("spectrum.lambda-uv", [&](const Entry& e, const std::string& k) { mode.spectrum.lambda_uv = to_double(e, k); });
  grab("time-map.kind", [&](const Entry& e, const std::string&) { mode.time_map.kind = e.value; });
  grab("time-map.separation", [&](const Entry& e, const std::string& k) { mode.time_map.separation = to_double(e, k); });
}

Scenario build(const FlatMap& m) {
  Scenario s;
  std::vector<std::string> seen;
  const auto grab = [&](const std::string& key, auto&& set) {
    if (const Entry* e = find(m, key)) {
      set(*e, key);
      seen.push_back(key);
    }
  };
  grab("name", [&](const Entry& e, const std::string&) { s.name = e.value; });
  grab("frame", [&](const Entry& e, const std::string&) { s.frame = e.value; });
  grab("dimension", [&](const Entry& e, const std::string& k) {
    s.dimension = static_cast<int>(to_double(e, k));
  });
  grab("observer", [&](const Entry& e, const std::string&) { s.observer = e.value; });
  grab("grid.tau-max", [&](const Entry& e, const std::string& k) { s.tau_max = to_double(e, k); });
  grab("grid.step", [&](const Entry& e, const std::string& k) { s.step = to_double(e, k); });
  grab("initial-state.rho00", [&](const Entry& e, const std::string& k) { s.rho00 = to_double(e, k); });
  grab("initial-state.re-rho01", [&](const Entry& e, const std::string& k) { s.re_rho01 = to_double(e, k); });
  grab("initial-state.im-rho01", [&](const Entry& e, const std::string& k) { s.im_rho01 = to_double(e, k); });
  grab("temperature", [&](const Entry& e, const std::string& k) { s.temperature = to_double(e, k); });
  grab("analysis.backflow-threshold", [&](const Entry& e, const std::string& k) {
    s.backflow_threshold = to_double(e, k);
  });

  read_mode(m, "mode1", s.mode1, seen);

  bool like_mode1 = false;
  if (const Entry* e = find(m, "mode2.like")) {
    if (e->value != "mode1") fail(e->line, "mode2.like only supports 'mode1'");
    like_mode1 = true;
    seen.push_back("mode2.like");
  }
  bool mode2_fields = false;
  for (const auto& [k, e] : m) {
    (void)e;
    if (k.rfind("mode2.", 0) == 0 && k != "mode2.like") mode2_fields = true;
  }
  // absent mode2, or an explicit 'like', starts from a copy of mode1
  ModeSpec m2 = (like_mode1 || !mode2_fields) ? s.mode1 : ModeSpec{};
  m2.time_map = TimeMapSpec{};
  read_mode(m, "mode2", m2, seen);
  s.mode2 = m2;

  grab("sweep.kind", [&](const Entry& e, const std::string&) { s.sweep.kind = e.value; });
  grab("sweep.accel", [&](const Entry& e, const std::string& k) { s.sweep.accel = to_list(e, k); });
  grab("sweep.omega", [&](const Entry& e, const std::string& k) { s.sweep.omega = to_list(e, k); });
  grab("sweep.sigma", [&](const Entry& e, const std::string& k) { s.sweep.sigma = to_list(e, k); });
  grab("sweep.lambda-ir", [&](const Entry& e, const std::string& k) { s.sweep.lambda_ir = to_list(e, k); });

  // variants: ordered subsections (or dotted leaves) under 'variants.'
  for (const auto& [k, e] : m) {
    if (k.rfind("variants.", 0) != 0) continue;
    const std::string rest = k.substr(9);
    const std::size_t dot = rest.find('.');
    if (dot == std::string::npos) fail(e.line, "variant entries need 'label.path: value'");
    const std::string label = rest.substr(0, dot);
    const std::string path = rest.substr(dot + 1);
    Variant* v = nullptr;
    for (auto& existing : s.variants) {
      if (existing.label == label) v = &existing;
    }
    if (!v) {
      s.variants.push_back({label, {}});
      v = &s.variants.back();
    }
    v->overrides.emplace_back(path, e.value);
    seen.push_back(k);
  }

  // reject unknown keys so typos do not silently vanish
  for (const auto& [k, e] : m) {
    bool known = false;
    for (const auto& sk : seen) known = known || sk == k;
    if (!known) fail(e.line, "unknown field '" + k + "'");
  }
  return s;
}

const char* kFamilies[] = {"static", "const-velocity", "const-accel",
                           "generic-linear", "circular"};
const char* kProfiles[] = {"constant", "rectangular", "cosine"};
const char* kSpectra[] = {"uniform", "ohmic", "sub-ohmic", "super-ohmic"};
const char* kSwitchings[] = {"unity", "gaussian", "cosine"};

template <std::size_t N>
bool one_of(const std::string& v, const char* (&set)[N]) {
  for (const char* s : set) {
    if (v == s) return true;
  }
  return false;
}

void validate_mode(const ModeSpec& m, const std::string& which, int dim) {
  if (!one_of(m.worldline.family, kFamilies)) {
    throw SchemaError(which + ": unknown worldline family '" + m.worldline.family + "'");
  }
  if (!one_of(m.worldline.profile, kProfiles)) {
    throw SchemaError(which + ": unknown profile '" + m.worldline.profile + "'");
  }
  if (!one_of(m.spectrum.kind, kSpectra)) {
    throw SchemaError(which + ": unknown spectrum '" + m.spectrum.kind + "'");
  }
  if (!one_of(m.switching.kind, kSwitchings)) {
    throw SchemaError(which + ": unknown switching '" + m.switching.kind + "'");
  }
  const bool circ = m.worldline.family == "circular";
  if (circ && dim != 2) {
    throw SchemaError(which + ": circular worldlines need dimension: 2");
  }
  if (!circ && m.worldline.family != "static" && dim != 1) {
    throw SchemaError(which + ": linear worldlines need dimension: 1");
  }
  if (m.time_map.kind != "none" && m.time_map.kind != "linear-separation" &&
      m.time_map.kind != "linear-two-accels") {
    throw SchemaError(which + ": unknown time-map '" + m.time_map.kind + "'");
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s = build(flatten(text));
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

void validate_scenario(const Scenario& s) {
  if (s.frame != "M" && s.frame != "E" && s.frame != "thermal") {
    throw SchemaError("frame must be M, E or thermal, got '" + s.frame + "'");
  }
  if (s.dimension != 1 && s.dimension != 2) {
    throw SchemaError("dimension must be 1 or 2");
  }
  if (!(s.tau_max > 0.0) || !(s.step > 0.0)) {
    throw SchemaError("grid.tau-max and grid.step must be positive");
  }
  if (s.step < 0.002 - 1e-12 || s.step > 0.01 + 1e-12) {
    throw SchemaError("grid.step must lie in [0.002, 0.01]");
  }
  if (s.rho00 < 0.0 || s.rho00 > 1.0) {
    throw SchemaError("initial-state.rho00 must lie in [0, 1]");
  }
  const double d = s.rho00 - 0.5;
  if (d * d + s.re_rho01 * s.re_rho01 + s.im_rho01 * s.im_rho01 > 0.25 + 1e-12) {
    throw SchemaError("initial state violates positivity");
  }
  validate_mode(s.mode1, "mode1", s.dimension);
  validate_mode(s.mode2, "mode2", s.dimension);
  if (s.mode1.time_map.kind != "none") {
    throw SchemaError("time-map belongs on mode2 (mode1 carries the observer)");
  }
  if (s.mode2.time_map.kind != "none") {
    if (s.observer != "mode1") {
      throw SchemaError("incoherent motion requires observer: mode1");
    }
    if (s.frame != "M") {
      throw SchemaError("time maps are defined in the comoving frame (frame: M)");
    }
    if (s.mode1.worldline.family != "const-accel") {
      throw SchemaError("time maps need a const-accel observer worldline");
    }
  }
  if (s.sweep.kind != "none" && s.sweep.kind != "transition-vs-accel" &&
      s.sweep.kind != "transition-vs-omega" && s.sweep.kind != "backflow-grid") {
    throw SchemaError("unknown sweep kind '" + s.sweep.kind + "'");
  }
  if ((s.sweep.kind == "transition-vs-accel" || s.sweep.kind == "backflow-grid") &&
      s.sweep.accel.empty()) {
    throw SchemaError("sweep '" + s.sweep.kind + "' needs sweep.accel");
  }
  if (s.sweep.kind == "transition-vs-omega" && s.sweep.omega.empty()) {
    throw SchemaError("sweep 'transition-vs-omega' needs sweep.omega");
  }
  if (s.sweep.kind == "backflow-grid" && s.sweep.sigma.empty()) {
    throw SchemaError("sweep 'backflow-grid' needs sweep.sigma");
  }
  if (!(s.backflow_threshold > 0.0)) {
    throw SchemaError("analysis.backflow-threshold must be positive");
  }
  for (const auto& v : s.variants) {
    if (v.label.empty() || v.label.find('.') != std::string::npos) {
      throw SchemaError("variant labels must be non-empty and dot-free");
    }
  }
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt(v[i]);
  }
  return out + "]";
}

void write_worldline(std::ostream& os, const WorldlineSpec& w,
                     const std::string& indent) {
  os << indent << "worldline:\n";
  os << indent << "  family: " << w.family << "\n";
  if (w.family == "const-velocity") {
    os << indent << "  velocity: " << fmt(w.velocity) << "\n";
  }
  if (w.family == "const-accel") {
    os << indent << "  accel: " << fmt(w.accel) << "\n";
  }
  if (w.family == "generic-linear" || w.family == "circular") {
    os << indent << "  profile: " << w.profile << "\n";
    if (w.profile == "constant") {
      os << indent << "  value: " << fmt(w.value) << "\n";
    } else if (w.profile == "rectangular") {
      os << indent << "  amplitude: " << fmt(w.amplitude) << "\n";
      os << indent << "  tau1: " << fmt(w.tau1) << "\n";
      os << indent << "  tau2: " << fmt(w.tau2) << "\n";
    } else {
      os << indent << "  value: " << fmt(w.value) << "\n";
      os << indent << "  omega-g: " << fmt(w.omega_g) << "\n";
    }
  }
  if (w.family == "circular") {
    os << indent << "  radius: " << fmt(w.radius) << "\n";
    os << indent << "  phase: " << fmt(w.phase) << "\n";
  }
}

void write_mode(std::ostream& os, const ModeSpec& m, const std::string& name) {
  os << name << ":\n";
  write_worldline(os, m.worldline, "  ");
  os << "  switching:\n";
  os << "    kind: " << m.switching.kind << "\n";
  if (m.switching.kind == "gaussian") {
    os << "    sigma: " << fmt(m.switching.sigma) << "\n";
  }
  if (m.switching.kind == "cosine") {
    os << "    omega-m: " << fmt(m.switching.omega_m) << "\n";
  }
  os << "  spectrum:\n";
  os << "    kind: " << m.spectrum.kind << "\n";
  os << "    coupling: " << fmt(m.spectrum.coupling) << "\n";
  os << "    lambda-ir: " << fmt(m.spectrum.lambda_ir) << "\n";
  os << "    lambda-uv: " << fmt(m.spectrum.lambda_uv) << "\n";
  if (m.time_map.kind != "none") {
    os << "  time-map:\n";
    os << "    kind: " << m.time_map.kind << "\n";
    if (m.time_map.kind == "linear-separation") {
      os << "    separation: " << fmt(m.time_map.separation) << "\n";
    }
  }
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "name: " << s.name << "\n";
  os << "frame: " << s.frame << "\n";
  os << "dimension: " << s.dimension << "\n";
  os << "observer: " << s.observer << "\n";
  os << "grid:\n";
  os << "  tau-max: " << fmt(s.tau_max) << "\n";
  os << "  step: " << fmt(s.step) << "\n";
  os << "initial-state:\n";
  os << "  rho00: " << fmt(s.rho00) << "\n";
  os << "  re-rho01: " << fmt(s.re_rho01) << "\n";
  os << "  im-rho01: " << fmt(s.im_rho01) << "\n";
  if (s.temperature >= 0.0) os << "temperature: " << fmt(s.temperature) << "\n";
  write_mode(os, s.mode1, "mode1");
  write_mode(os, s.mode2, "mode2");
  if (s.sweep.kind != "none") {
    os << "sweep:\n";
    os << "  kind: " << s.sweep.kind << "\n";
    if (!s.sweep.accel.empty()) os << "  accel: " << fmt_list(s.sweep.accel) << "\n";
    if (!s.sweep.omega.empty()) os << "  omega: " << fmt_list(s.sweep.omega) << "\n";
    if (!s.sweep.sigma.empty()) os << "  sigma: " << fmt_list(s.sweep.sigma) << "\n";
    if (!s.sweep.lambda_ir.empty()) {
      os << "  lambda-ir: " << fmt_list(s.sweep.lambda_ir) << "\n";
    }
  }
  if (!s.variants.empty()) {
    os << "variants:\n";
    for (const auto& v : s.variants) {
      os << "  " << v.label << ":\n";
      for (const auto& [path, value] : v.overrides) {
        os << "    " << path << ": " << value << "\n";
      }
    }
  }
  os << "analysis:\n";
  os << "  backflow-threshold: " << fmt(s.backflow_threshold) << "\n";
  return os.str();
}

Scenario apply_variant(const Scenario& base, const Variant& v) {
  Scenario stripped = base;
  stripped.variants.clear();
  FlatMap flat = flatten(serialize_scenario(stripped));
  for (const auto& [path, value] : v.overrides) {
    bool replaced = false;
    for (auto& [k, e] : flat) {
      if (k == path) {
        e.value = value;
        replaced = true;
      }
    }
    if (!replaced) flat.emplace_back(path, Entry{value, 0});
  }
  Scenario out = parse_scenario(emit_flat(flat));
  out.name = base.name + "__" + v.label;
  return out;
}

}  // namespace wqd
