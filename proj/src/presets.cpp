#include "wqd/presets.hpp"

#include <cmath>

namespace wqd {

namespace {

Scenario base_linear(const std::string& name, double tau_max) {
  Scenario s;
  s.name = name;
  s.frame = "M";
  s.dimension = 1;
  s.tau_max = tau_max;
  s.step = 0.005;
  s.mode1.worldline.family = "const-accel";
  s.mode1.worldline.accel = 5.0;
  s.mode1.spectrum.kind = "super-ohmic";
  s.mode2 = s.mode1;
  return s;
}

Scenario base_circular(const std::string& name, double tau_max, double omega) {
  Scenario s;
  s.name = name;
  s.frame = "M";
  s.dimension = 2;
  s.tau_max = tau_max;
  s.step = 0.005;
  s.mode1.worldline.family = "circular";
  s.mode1.worldline.profile = "constant";
  s.mode1.worldline.value = omega;
  s.mode1.worldline.radius = 1.0;
  s.mode1.spectrum.kind = "super-ohmic";
  s.mode2 = s.mode1;
  s.mode2.worldline.phase = M_PI;
  return s;
}

void add_variant(Scenario& s, const std::string& label,
                 std::initializer_list<std::pair<const char*, std::string>> kv) {
  Variant v;
  v.label = label;
  for (const auto& [path, value] : kv) v.overrides.emplace_back(path, value);
  s.variants.push_back(std::move(v));
}

std::vector<Preset> make_catalog() {
  std::vector<Preset> cat;

  {  // decoherence of an accelerated pair in three frames, uniform spectrum
    Scenario s = base_linear("fig2-left", 8.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode2 = s.mode1;
    add_variant(s, "m-frame", {{"frame", "M"}});
    add_variant(s, "e-frame", {{"frame", "E"}});
    add_variant(s, "thermal", {{"frame", "thermal"}});
    cat.push_back({s.name,
                   "a=5 pair, uniform spectrum: comoving / environment / "
                   "thermal frames",
                   s});
  }
  {
    Scenario s = base_linear("fig2-right", 8.0);
    add_variant(s, "m-frame", {{"frame", "M"}});
    add_variant(s, "e-frame", {{"frame", "E"}});
    add_variant(s, "thermal", {{"frame", "thermal"}});
    cat.push_back({s.name,
                   "a=5 pair, super-Ohmic spectrum: comoving / environment / "
                   "thermal frames",
                   s});
  }
  {  // influence functionals across accelerations
    Scenario s = base_linear("fig3-left", 5.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode2 = s.mode1;
    add_variant(s, "a1", {{"mode1.worldline.accel", "1"}, {"mode2.worldline.accel", "1"}});
    add_variant(s, "a5", {{"mode1.worldline.accel", "5"}, {"mode2.worldline.accel", "5"}});
    add_variant(s, "a10", {{"mode1.worldline.accel", "10"}, {"mode2.worldline.accel", "10"}});
    cat.push_back({s.name, "uniform spectrum, a in {1,5,10}: overtaking", s});
  }
  {
    Scenario s = base_linear("fig3-right", 5.0);
    add_variant(s, "a1", {{"mode1.worldline.accel", "1"}, {"mode2.worldline.accel", "1"}});
    add_variant(s, "a5", {{"mode1.worldline.accel", "5"}, {"mode2.worldline.accel", "5"}});
    add_variant(s, "a10", {{"mode1.worldline.accel", "10"}, {"mode2.worldline.accel", "10"}});
    cat.push_back({s.name, "super-Ohmic spectrum, a in {1,5,10}: overtaking", s});
  }
  {  // boosts
    Scenario s = base_linear("fig4-left", 20.0);
    s.mode1.worldline.family = "const-velocity";
    s.mode1.spectrum.kind = "sub-ohmic";
    s.mode2 = s.mode1;
    add_variant(s, "v0", {{"mode1.worldline.velocity", "0"}, {"mode2.worldline.velocity", "0"}});
    add_variant(s, "v04", {{"mode1.worldline.velocity", "0.4"}, {"mode2.worldline.velocity", "0.4"}});
    add_variant(s, "v08", {{"mode1.worldline.velocity", "0.8"}, {"mode2.worldline.velocity", "0.8"}});
    cat.push_back({s.name, "boosts v in {0,0.4,0.8}, sub-Ohmic spectrum", s});
  }
  {
    Scenario s = base_linear("fig4-right", 20.0);
    s.mode1.worldline.family = "const-velocity";
    s.mode2 = s.mode1;
    add_variant(s, "v0", {{"mode1.worldline.velocity", "0"}, {"mode2.worldline.velocity", "0"}});
    add_variant(s, "v04", {{"mode1.worldline.velocity", "0.4"}, {"mode2.worldline.velocity", "0.4"}});
    add_variant(s, "v08", {{"mode1.worldline.velocity", "0.8"}, {"mode2.worldline.velocity", "0.8"}});
    cat.push_back({s.name, "boosts v in {0,0.4,0.8}, super-Ohmic spectrum", s});
  }
  {  // switched decoherence patterns, q = 0.5
    Scenario s = base_linear("fig5-left", 9.0);
    s.mode1.spectrum.coupling = 0.5;
    s.mode1.switching.kind = "gaussian";
    s.mode2 = s.mode1;
    for (const char* a : {"1", "5", "10"}) {
      for (const char* sg : {"0.1", "2"}) {
        const std::string slabel = sg[0] == '0' ? "01" : sg;
        add_variant(s, std::string("a") + a + "-s" + slabel,
                    {{"mode1.worldline.accel", a},
                     {"mode2.worldline.accel", a},
                     {"mode1.switching.sigma", sg},
                     {"mode2.switching.sigma", sg}});
      }
    }
    cat.push_back({s.name,
                   "super-Ohmic q=0.5, gaussian switching sigma in {0.1,2}, "
                   "a in {1,5,10}",
                   s});
  }
  {  // transition probabilities vs acceleration, q = 0.5
    Scenario s = base_linear("fig5-right", 9.0);
    s.mode1.spectrum.coupling = 0.5;
    s.mode2 = s.mode1;
    s.sweep.kind = "transition-vs-accel";
    s.sweep.sigma = {0.1, 2.0};
    s.sweep.accel = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    cat.push_back({s.name,
                   "P(a) and first-order P(a), super-Ohmic q=0.5, sigma in "
                   "{0.1,2}",
                   s});
  }
  {  // uniform-spectrum transition scans
    Scenario s = base_linear("fig6-left", 9.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode1.spectrum.coupling = 0.01;
    s.mode2 = s.mode1;
    s.sweep.kind = "transition-vs-accel";
    s.sweep.sigma = {0.1, 2.0};
    s.sweep.accel = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    cat.push_back({s.name, "P(a), uniform spectrum q=0.01, sigma in {0.1,2}", s});
  }
  {
    Scenario s = base_linear("fig6-right", 9.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode1.spectrum.coupling = 0.05;
    s.mode2 = s.mode1;
    s.sweep.kind = "transition-vs-accel";
    s.sweep.sigma = {0.1, 2.0};
    s.sweep.accel = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    cat.push_back({s.name, "P(a), uniform spectrum q=0.05, sigma in {0.1,2}", s});
  }
  {  // IR-cutoff crossover
    Scenario s = base_linear("fig7", 9.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode1.spectrum.coupling = 0.01;
    s.mode2 = s.mode1;
    s.sweep.kind = "transition-vs-accel";
    s.sweep.sigma = {2.0};
    s.sweep.lambda_ir = {0.001, 0.02, 1.0};
    s.sweep.accel = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    cat.push_back({s.name,
                   "P(a), uniform q=0.01 sigma=2, IR cutoff in {0.001,0.02,1}",
                   s});
  }
  {  // backflow parameter region
    Scenario s = base_linear("fig8", 9.0);
    s.backflow_threshold = 1e-5;  // declared detection threshold of this scan
    s.sweep.kind = "backflow-grid";
    s.sweep.sigma = {0.1, 0.48, 0.86, 1.24, 1.62, 2.0};
    s.sweep.accel = {1.0, 2.8, 4.6, 6.4, 8.2, 10.0};
    cat.push_back({s.name,
                   "backflow region on the 6x6 (sigma, a) grid over "
                   "[0.1,2]x[1,10], super-Ohmic",
                   s});
  }
  {  // cosine switching modulation
    Scenario s = base_linear("fig9-left", 5.0);
    s.mode1.spectrum.kind = "uniform";
    s.mode1.switching.kind = "cosine";
    s.mode2 = s.mode1;
    for (const char* om : {"1", "5", "10"}) {
      add_variant(s, std::string("wm") + om,
                  {{"mode1.switching.omega-m", om}, {"mode2.switching.omega-m", om}});
    }
    cat.push_back({s.name, "cosine switching, uniform spectrum, a=5", s});
  }
  {
    Scenario s = base_linear("fig9-right", 5.0);
    s.mode1.switching.kind = "cosine";
    s.mode2 = s.mode1;
    for (const char* om : {"1", "5", "10"}) {
      add_variant(s, std::string("wm") + om,
                  {{"mode1.switching.omega-m", om}, {"mode2.switching.omega-m", om}});
    }
    cat.push_back({s.name, "cosine switching, super-Ohmic spectrum, a=5", s});
  }
  {  // modulated acceleration
    Scenario s = base_linear("fig10-left", 10.0);
    s.mode1.worldline.family = "generic-linear";
    s.mode1.worldline.profile = "rectangular";
    s.mode1.worldline.tau1 = 0.3;
    s.mode1.worldline.tau2 = 0.5;
    s.mode2 = s.mode1;
    for (const char* c : {"1", "5", "10"}) {
      add_variant(s, std::string("c") + c,
                  {{"mode1.worldline.amplitude", c}, {"mode2.worldline.amplitude", c}});
    }
    cat.push_back({s.name,
                   "rectangular acceleration burst C in {1,5,10}, tau window "
                   "(0.3,0.5), super-Ohmic",
                   s});
  }
  {
    Scenario s = base_linear("fig10-right", 10.0);
    s.mode1.worldline.family = "generic-linear";
    s.mode1.worldline.profile = "cosine";
    s.mode1.worldline.value = 10.0;
    s.mode2 = s.mode1;
    for (const char* wg : {"1", "10", "50"}) {
      add_variant(s, std::string("wg") + wg,
                  {{"mode1.worldline.omega-g", wg}, {"mode2.worldline.omega-g", wg}});
    }
    cat.push_back({s.name,
                   "cosine acceleration a=10 cos(wg tau), wg in {1,10,50}, "
                   "super-Ohmic",
                   s});
  }
  {  // incoherent pair: initial separation
    Scenario s = base_linear("fig11-left", 3.0);
    s.mode2.time_map.kind = "linear-separation";
    for (const char* l : {"0", "1", "5"}) {
      add_variant(s, std::string("l") + l, {{"mode2.time-map.separation", l}});
    }
    cat.push_back({s.name,
                   "partner influence for initial separations L in {0,1,5}, "
                   "a=5, super-Ohmic",
                   s});
  }
  {  // incoherent pair: different accelerations
    Scenario s = base_linear("fig11-right", 5.0);
    s.mode1.worldline.accel = 2.0;
    s.mode2 = s.mode1;
    s.mode2.time_map.kind = "linear-two-accels";
    for (const char* a2 : {"5", "2", "1", "-1"}) {
      add_variant(s, std::string("a2_") + (a2[0] == '-' ? "m1" : a2),
                  {{"mode2.worldline.accel", a2}});
    }
    cat.push_back({s.name,
                   "partner influence for a2 in {5,2,1,-1} with a=2, "
                   "super-Ohmic",
                   s});
  }
  {  // circular overtaking
    Scenario s = base_circular("fig12", 10.0, 0.9);
    for (const char* om : {"0.7", "0.9", "0.95"}) {
      add_variant(s, std::string("om") + (om + 2),
                  {{"mode1.worldline.value", om}, {"mode2.worldline.value", om}});
    }
    cat.push_back({s.name,
                   "circular motion Omega in {0.7,0.9,0.95}, r0=1, "
                   "super-Ohmic",
                   s});
  }
  {  // circular switched patterns
    Scenario s = base_circular("fig13-left", 9.0, 0.9);
    s.mode1.switching.kind = "gaussian";
    s.mode2.switching.kind = "gaussian";
    for (const char* om : {"0.7", "0.9", "0.95"}) {
      for (const char* sg : {"0.1", "2"}) {
        const std::string slabel = sg[0] == '0' ? "01" : sg;
        add_variant(s, std::string("om") + (om + 2) + "-s" + slabel,
                    {{"mode1.worldline.value", om},
                     {"mode2.worldline.value", om},
                     {"mode1.switching.sigma", sg},
                     {"mode2.switching.sigma", sg}});
      }
    }
    cat.push_back({s.name,
                   "circular decoherence, gaussian switching sigma in "
                   "{0.1,2}, Omega in {0.7,0.9,0.95}",
                   s});
  }
  {
    Scenario s = base_circular("fig13-right", 9.0, 0.9);
    s.sweep.kind = "transition-vs-omega";
    s.sweep.sigma = {0.1, 2.0};
    s.sweep.omega = {0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95};
    cat.push_back({s.name,
                   "P(Omega), circular motion, gaussian switching sigma in "
                   "{0.1,2}",
                   s});
  }
  {  // circular cosine switching
    Scenario s = base_circular("fig14", 5.0, 0.9);
    s.mode1.switching.kind = "cosine";
    s.mode2.switching.kind = "cosine";
    for (const char* om : {"1", "5", "10"}) {
      add_variant(s, std::string("wm") + om,
                  {{"mode1.switching.omega-m", om}, {"mode2.switching.omega-m", om}});
    }
    cat.push_back({s.name, "circular Omega=0.9 with cosine switching", s});
  }
  {  // modulated angular velocity
    Scenario s = base_circular("fig15-left", 6.0, 0.9);
    s.mode1.worldline.profile = "rectangular";
    s.mode1.worldline.tau1 = 0.3;
    s.mode1.worldline.tau2 = 0.5;
    s.mode2 = s.mode1;
    s.mode2.worldline.phase = M_PI;
    for (const char* c : {"0.7", "0.9", "0.95"}) {
      add_variant(s, std::string("c") + (c + 2),
                  {{"mode1.worldline.amplitude", c}, {"mode2.worldline.amplitude", c}});
    }
    cat.push_back({s.name,
                   "rectangular angular-velocity burst C in {0.7,0.9,0.95}, "
                   "window (0.3,0.5)",
                   s});
  }
  {
    Scenario s = base_circular("fig15-right", 6.0, 0.95);
    s.mode1.worldline.profile = "cosine";
    s.mode1.worldline.value = 0.95;
    s.mode2 = s.mode1;
    s.mode2.worldline.phase = M_PI;
    for (const char* wg : {"1", "10", "50"}) {
      add_variant(s, std::string("wg") + wg,
                  {{"mode1.worldline.omega-g", wg}, {"mode2.worldline.omega-g", wg}});
    }
    cat.push_back({s.name,
                   "cosine angular velocity 0.95 cos(wg tau), wg in "
                   "{1,10,50}",
                   s});
  }

  return cat;
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
  static const std::vector<Preset> cat = make_catalog();
  return cat;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : preset_catalog()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace wqd
