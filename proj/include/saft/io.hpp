/******************************************************************************
 * Copyright 2026 The saft authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file io.hpp CSV and JSON serialization with atomic writes
 *
 *****************************************************************************/
#ifndef SAFT_IO_HPP
#define SAFT_IO_HPP

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "saft/operators.hpp"
#include "saft/params.hpp"
#include "saft/sampling.hpp"
#include "saft/siv.hpp"
#include "saft/types.hpp"
#include "saft/zak.hpp"

namespace saft {

namespace detail {

/// Shortest decimal that round-trips a double (17 significant digits).
inline std::string format_sig17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_double(const std::string& s, const std::string& context)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw IoError("malformed number '" + s + "' in " + context);
    }
}

} // namespace detail

/// Writes content to path via a temp file and rename, so readers never see a
/// partial file.
inline void atomic_write_text(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp + "' for writing");
        out << content;
        if (!out.flush()) throw IoError("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Signal/Spectrum CSV: header `<axis>,re,im`, one row per grid point.
inline void write_sampled_csv(const std::string& path, const SampledFn& f,
                              const std::string& axis)
{
    std::string out = axis + ",re,im\n";
    for (std::size_t j = 0; j < f.grid.count; ++j) {
        out += detail::format_sig17(f.grid.point(j));
        out += ',';
        out += detail::format_sig17(f.values[j].real());
        out += ',';
        out += detail::format_sig17(f.values[j].imag());
        out += '\n';
    }
    atomic_write_text(path, out);
}

inline void write_signal_csv(const std::string& path, const Signal& f)
{
    write_sampled_csv(path, f, "t");
}

inline void write_spectrum_csv(const std::string& path, const Spectrum& f)
{
    write_sampled_csv(path, f, "omega");
}

/// Reads a Signal/Spectrum CSV; the grid must be uniform. Accepts either
/// axis header name.
inline SampledFn read_sampled_csv(const std::string& path)
{
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    {
        const auto hdr = detail::split_csv_line(line);
        if (hdr.size() != 3 || hdr[1] != "re" || hdr[2] != "im")
            throw IoError("'" + path + "': expected header '<axis>,re,im'");
    }
    std::vector<double> xs;
    std::vector<Complex> vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cols = detail::split_csv_line(line);
        if (cols.size() != 3)
            throw IoError("'" + path + "': expected 3 columns per row");
        xs.push_back(detail::parse_double(cols[0], path));
        vs.emplace_back(detail::parse_double(cols[1], path),
                        detail::parse_double(cols[2], path));
    }
    if (xs.empty()) throw IoError("'" + path + "' holds no samples");

    SampledFn f;
    f.values = std::move(vs);
    f.grid.start = xs.front();
    f.grid.count = xs.size();
    f.grid.step = xs.size() > 1
                      ? (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1)
                      : 1.0;
    if (!(f.grid.step > 0.0))
        throw IoError("'" + path + "': grid is not increasing");
    for (std::size_t j = 0; j < xs.size(); ++j)
        if (std::abs(xs[j] - f.grid.point(j)) > 1e-6 * f.grid.step)
            throw IoError("'" + path + "': grid is not uniform");
    return f;
}

/// SampleSet CSV: header `x,re,im`, strictly increasing points.
inline void write_samples_csv(const std::string& path, const SampleSet& s)
{
    if (s.points.size() != s.values.size())
        throw IoError("sample points and values differ in length");
    std::string out = "x,re,im\n";
    for (std::size_t j = 0; j < s.points.size(); ++j) {
        out += detail::format_sig17(s.points[j]);
        out += ',';
        out += detail::format_sig17(s.values[j].real());
        out += ',';
        out += detail::format_sig17(s.values[j].imag());
        out += '\n';
    }
    atomic_write_text(path, out);
}

inline SampleSet read_samples_csv(const std::string& path)
{
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    SampleSet s;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cols = detail::split_csv_line(line);
        if (cols.size() != 3)
            throw IoError("'" + path + "': expected 3 columns per row");
        s.points.push_back(detail::parse_double(cols[0], path));
        s.values.emplace_back(detail::parse_double(cols[1], path),
                              detail::parse_double(cols[2], path));
    }
    for (std::size_t j = 1; j < s.points.size(); ++j)
        if (!(s.points[j] > s.points[j - 1]))
            throw IoError("'" + path + "': points must be strictly increasing");
    return s;
}

/// ZakField CSV: rows `t,omega,re,im`.
inline void write_zak_csv(const std::string& path, const ZakField& z)
{
    std::string out = "t,omega,re,im\n";
    for (std::size_t ti = 0; ti < z.tgrid.count; ++ti) {
        for (std::size_t wj = 0; wj < z.wgrid.count; ++wj) {
            const Complex v = z.at(ti, wj);
            out += detail::format_sig17(z.tgrid.point(ti));
            out += ',';
            out += detail::format_sig17(z.wgrid.point(wj));
            out += ',';
            out += detail::format_sig17(v.real());
            out += ',';
            out += detail::format_sig17(v.imag());
            out += '\n';
        }
    }
    atomic_write_text(path, out);
}

struct LoadedParams {
    ParamSet A;
    bool c_filled = false; // c was absent and filled from (ad - 1)/b
};

/// Parameter JSON: object with keys a, b, c, d, p, q. A missing c is filled
/// from the determinant constraint and flagged; p and q default to 0.
inline LoadedParams load_params(const std::string& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::exception& e) {
        throw IoError("'" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
        throw IoError("'" + path + "': parameter object needs at least a, b, d");

    LoadedParams r;
    try {
        r.A.a = j.at("a").get<double>();
        r.A.b = j.at("b").get<double>();
        r.A.d = j.at("d").get<double>();
        r.A.p = j.value("p", 0.0);
        r.A.q = j.value("q", 0.0);
        if (j.contains("c")) {
            r.A.c = j.at("c").get<double>();
        } else {
            if (std::abs(r.A.b) <= zero_b_tolerance)
                throw IoError("'" + path + "': cannot fill c with b = 0");
            r.A.c = (r.A.a * r.A.d - 1.0) / r.A.b;
            r.c_filled = true;
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("'" + path + "': " + e.what());
    }
    validate_params(r.A);
    return r;
}

inline nlohmann::json params_json(const ParamSet& A)
{
    return nlohmann::json{{"a", A.a}, {"b", A.b}, {"c", A.c},
                          {"d", A.d}, {"p", A.p}, {"q", A.q}};
}

inline void save_params(const std::string& path, const ParamSet& A)
{
    atomic_write_text(path, params_json(A).dump(2) + "\n");
}

/// Discrete measure JSON: [{"x": loc, "re": w_re, "im": w_im}, ...].
inline DiscreteMeasure load_measure(const std::string& path)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::exception& e) {
        throw IoError("'" + path + "': " + e.what());
    }
    if (!j.is_array()) throw IoError("'" + path + "': expected an array of atoms");
    DiscreteMeasure mu;
    for (const auto& item : j) {
        try {
            mu.atoms.push_back({item.at("x").get<double>(),
                                Complex(item.at("re").get<double>(),
                                        item.value("im", 0.0))});
        } catch (const nlohmann::json::exception& e) {
            throw IoError("'" + path + "': " + e.what());
        }
    }
    return mu;
}

inline void save_measure(const std::string& path, const DiscreteMeasure& mu)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& atom : mu.atoms)
        j.push_back({{"x", atom.location},
                     {"re", atom.weight.real()},
                     {"im", atom.weight.imag()}});
    atomic_write_text(path, j.dump(2) + "\n");
}

inline nlohmann::json grid_json(const UniformGrid& g)
{
    return nlohmann::json{{"start", g.start}, {"step", g.step}, {"count", g.count}};
}

inline nlohmann::json complex_json(const Complex& v)
{
    return nlohmann::json{v.real(), v.imag()};
}

inline nlohmann::json classification_json(const SystemClassification& cls)
{
    nlohmann::json mask = nlohmann::json::array();
    for (auto b : cls.e_mask) mask.push_back(b != 0);
    return nlohmann::json{{"verdict", to_string(cls.verdict)},
                          {"m", cls.m},
                          {"M", cls.M},
                          {"w_min", cls.w_min},
                          {"w_max", cls.w_max},
                          {"E_phi_mask", mask},
                          {"grid", grid_json(cls.grid)}};
}

inline nlohmann::json sampling_report_json(const SamplingReport& rep,
                                           const ParamSet& A,
                                           const std::string& generator_name)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Complex& c : rep.coefficients) coeffs.push_back(complex_json(c));
    nlohmann::json j{
        {"coefficients", coeffs},
        {"k_min", rep.k_min},
        {"residual_max", rep.residual_max},
        {"residual_l2", rep.residual_l2},
        {"singular_values", rep.singular_values},
        {"rank", rep.rank},
        {"structural_columns", rep.structural_columns},
        {"config",
         {{"params", params_json(A)},
          {"generator", generator_name},
          {"interval", {rep.interval_lo, rep.interval_hi}},
          {"M", rep.M},
          {"N", rep.coefficients.size()},
          {"#X", rep.sample_count}}}};
    if (rep.truth_error_max) j["truth_error_max"] = *rep.truth_error_max;
    if (rep.truth_error_l2) j["truth_error_l2"] = *rep.truth_error_l2;
    return j;
}

inline void write_json(const std::string& path, const nlohmann::json& j)
{
    atomic_write_text(path, j.dump(2) + "\n");
}

} // namespace saft

#endif // SAFT_IO_HPP
