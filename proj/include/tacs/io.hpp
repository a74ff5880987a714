#pragma once

// Serialization of solved spectra, band tables and states: JSON for
// round-tripping, CSV for plotting, and a fixed-width table for reading.

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tacs/bands.hpp"
#include "tacs/eigenstates.hpp"
#include "tacs/roots.hpp"
#include "tacs/spectrum.hpp"

namespace tacs {

struct LevelRecord {
  int zeta = 0;
  int k = 0, nu_a = 0, nu_b = 0;
  double energy_over_chi = 0.0;
  double g0 = 0.0;
  std::vector<double> coeffs;
  std::vector<cplx> zeros;

  bool operator==(const LevelRecord &) const = default;
};

struct SpectrumRecord {
  HalfInt J;
  std::vector<LevelRecord> levels;

  bool operator==(const SpectrumRecord &) const = default;
};

/// Flattens a solved spectrum, finding the zeros of every polynomial.
inline SpectrumRecord make_record(const Spectrum &s) {
  SpectrumRecord r{s.J, {}};
  for (const Level &l : s.levels) {
    LevelRecord lr;
    lr.zeta = l.zeta;
    lr.k = l.config.k();
    lr.nu_a = l.config.nu_a();
    lr.nu_b = l.config.nu_b();
    lr.energy_over_chi = l.energy_over_chi;
    lr.g0 = l.polynomial.g0;
    lr.coeffs = l.polynomial.coeffs;
    lr.zeros = polynomial_zeros(l.polynomial).zeros;
    r.levels.push_back(std::move(lr));
  }
  return r;
}

inline nlohmann::ordered_json to_json(const SpectrumRecord &r) {
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const auto &l : r.levels) {
    nlohmann::ordered_json zeros = nlohmann::ordered_json::array();
    for (const cplx &w : l.zeros)
      zeros.push_back({w.real(), w.imag()});
    levels.push_back({{"zeta", l.zeta},
                      {"k", l.k},
                      {"nu_a", l.nu_a},
                      {"nu_b", l.nu_b},
                      {"E_over_chi", l.energy_over_chi},
                      {"g0", l.g0},
                      {"coeffs", l.coeffs},
                      {"zeros", std::move(zeros)}});
  }
  return {{"J", r.J.str()}, {"levels", std::move(levels)}};
}

/// Throws std::invalid_argument on a malformed document.
inline SpectrumRecord spectrum_from_json(const nlohmann::json &j) {
  try {
    SpectrumRecord r{HalfInt::parse(j.at("J").get<std::string>()), {}};
    for (const auto &l : j.at("levels")) {
      LevelRecord lr;
      lr.zeta = l.at("zeta").get<int>();
      lr.k = l.at("k").get<int>();
      lr.nu_a = l.at("nu_a").get<int>();
      lr.nu_b = l.at("nu_b").get<int>();
      lr.energy_over_chi = l.at("E_over_chi").get<double>();
      lr.g0 = l.at("g0").get<double>();
      lr.coeffs = l.at("coeffs").get<std::vector<double>>();
      for (const auto &w : l.at("zeros")) {
        const auto pair = w.get<std::vector<double>>();
        if (pair.size() != 2)
          throw std::invalid_argument("zero is not a [re, im] pair");
        lr.zeros.emplace_back(pair[0], pair[1]);
      }
      r.levels.push_back(std::move(lr));
    }
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("spectrum_from_json: ") + e.what());
  }
}

inline std::string serialize(const SpectrumRecord &r, int indent = 2) {
  return to_json(r).dump(indent);
}

inline SpectrumRecord parse_spectrum(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("parse_spectrum: ") + e.what());
  }
  return spectrum_from_json(j);
}

/// Compact decimal with `digits` significant figures.
inline std::string format_number(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// y(w) written low order first, e.g. "448.949 + 17.8348 w + w^2".
inline std::string polynomial_string(const std::vector<double> &b, int digits = 6) {
  std::string out;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double c = b[j];
    std::string term;
    const bool unit = j > 0 && std::abs(c) == 1.0;
    if (!unit)
      term = format_number(std::abs(c), digits);
    if (j > 0) {
      if (!unit)
        term += ' ';
      term += 'w';
      if (j > 1)
        term += '^' + std::to_string(j);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

inline std::string sector_label(int k, int zeta, int nu_a, int nu_b) {
  return "{" + std::to_string(k) + "," + std::to_string(zeta) + ";" + std::to_string(nu_a) + "," +
         std::to_string(nu_b) + "}";
}

/// Levels grouped by sector with zeta counted within the sector. `chi`
/// only rescales the displayed energy column.
inline void write_table(std::ostream &os, const Spectrum &s, double chi = 1.0) {
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %-14s %14s %14s  %s\n", "J", "{k,zeta;na,nb}", "g0",
                chi == 1.0 ? "E/chi" : "E", "y(w)");
  os << line;
  bool first = true;
  for (const Sector &sec : enumerate_sectors(s.J)) {
    for (const Level *l : s.sector(sec)) {
      const double e = chi * l->energy_over_chi;
      std::snprintf(line, sizeof line, "%-6s %-14s %14s %14s  ", first ? s.J.str().c_str() : "",
                    sector_label(sec.k, l->zeta, sec.nu_a, sec.nu_b).c_str(),
                    format_number(l->polynomial.g0).c_str(),
                    format_number(std::abs(e) < 1e-12 * std::max(1.0, std::abs(chi)) ? 0.0 : e).c_str());
      os << line << polynomial_string(l->polynomial.coeffs) << '\n';
      first = false;
    }
  }
}

/// One row per level; coefficients joined by ';'.
inline void write_spectrum_csv(std::ostream &os, const SpectrumRecord &r) {
  os << "J,zeta,k,nu_a,nu_b,E_over_chi,g0,coeffs\n";
  for (const auto &l : r.levels) {
    os << r.J.str() << ',' << l.zeta << ',' << l.k << ',' << l.nu_a << ',' << l.nu_b << ','
       << format_number(l.energy_over_chi, 17) << ',' << format_number(l.g0, 17) << ',';
    for (std::size_t j = 0; j < l.coeffs.size(); ++j)
      os << (j ? ";" : "") << format_number(l.coeffs[j], 17);
    os << '\n';
  }
}

inline void write_bands_csv(std::ostream &os, const std::vector<Band> &bands) {
  os << "band,twoJ,E_over_chi,omega\n";
  for (const Band &b : bands)
    for (const BandPoint &p : b.points)
      os << b.zeta << ',' << p.J.twice() << ',' << format_number(p.energy_over_chi, 17) << ','
         << format_number(p.omega, 17) << '\n';
}

inline std::string fit_summary(int zeta, const QuadraticFit &f) {
  return "zeta=" + std::to_string(zeta) + ": a=" + format_number(f.a) + " b=" +
         format_number(f.b) + " c=" + format_number(f.c) + " rms=" + format_number(f.rms_residual, 3);
}

inline nlohmann::ordered_json to_json(const StateVector &v, double energy) {
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  for (int i = 0; i < static_cast<int>(v.amplitudes.size()); ++i)
    amps.push_back({{"M", basis_m(v.J, i).str()}, {"amplitude", v.amplitudes[i]}});
  return {{"J", v.J.str()},
          {"k", v.sector.k},
          {"nu_a", v.sector.nu_a},
          {"nu_b", v.sector.nu_b},
          {"zeta", v.zeta},
          {"E_over_chi", energy},
          {"amplitudes", std::move(amps)}};
}

/// Nonzero amplitudes in descending M.
inline void write_state_table(std::ostream &os, const StateVector &v, double energy) {
  os << "J=" << v.J.str() << " sector " << v.sector.str() << " zeta=" << v.zeta
     << " E/chi=" << format_number(energy) << '\n';
  char line[96];
  for (int i = 0; i < static_cast<int>(v.amplitudes.size()); ++i) {
    if (v.amplitudes[i] == 0.0)
      continue;
    std::snprintf(line, sizeof line, "%8s  % .12f\n", basis_m(v.J, i).str().c_str(), v.amplitudes[i]);
    os << line;
  }
}

} // namespace tacs
