// Copyright 2026 The slopes Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// slopes: analyze | verify | generate | render | case
//
// Exit status:
//   0  success (verify: every input certified)
//   1  verify: at least one input refuted
//   2  usage, parse or input error
//   3  case: precondition refusal (n < 7, not general or convex position)

#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "slopes.hpp"

namespace {

using namespace slopes;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;
constexpr int kExitRefused = 3;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonFlags {
  std::string backend;  // "", "rational", "float"
  double eps = kDefaultEps;
  bool json = false;
};

std::optional<Backend> forced_backend(const CommonFlags& f) {
  if (f.backend == "rational") return Backend::kExactRational;
  if (f.backend == "float") return Backend::kApproxReal;
  return std::nullopt;
}

// Report envelope. `timing` is the only field that varies between runs;
// report_digest covers everything else.
Json make_report(const std::string& command, const AnyConfiguration& cfg, double eps,
                 const std::string& input, Json result, double elapsed_ms) {
  const bool exact = std::holds_alternative<Configuration<Rational>>(cfg);
  Json r{{"command", command},
         {"backend", exact ? "rational" : "float"},
         {"input", {{"digest", "sha256:" + sha256_hex(input)},
                    {"points", std::visit([](const auto& c) { return c.size(); }, cfg)}}},
         {"result", std::move(result)}};
  r["eps"] = exact ? Json(nullptr) : Json(eps);
  r["report_digest"] = "sha256:" + sha256_hex(r.dump());
  r["timing"] = {{"elapsed_ms", elapsed_ms}};
  return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void print_error(const Error& e, bool json) {
  if (json) {
    std::cout << Json{{"error", error_kind_name(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << e.what() << "\n";
  }
}

template <ScalarType S>
std::string class_table_text(const SlopeSpectrum<S>& spectrum) {
  std::ostringstream os;
  for (std::size_t k = 0; k < spectrum.count(); ++k) {
    os << "  [" << k << "] " << spectrum[k].direction.str() << " :";
    for (const auto& [i, j] : spectrum[k].pairs) os << " " << i << "-" << j;
    os << "\n";
  }
  return os.str();
}

int cmd_analyze(const std::string& path, const CommonFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string input = read_file(path);
  const AnyConfiguration cfg = parse_point_file(input, forced_backend(f), f.eps);
  return std::visit(
      [&](const auto& c) {
        const auto spectrum = slope_spectrum(c);
        Json result = spectrum_json(spectrum);
        result["general_position"] = c.size() >= 3 && c.is_general_position();
        std::optional<CriticalityReport> crit;
        try {
          crit = classify_criticality(c);
          result["criticality"] = to_json(*crit);
        } catch (const Error& e) {
          result["criticality"] = {{"kind", "Unavailable"}, {"reason", e.what()}};
        }
        if (f.json) {
          std::cout << make_report("analyze", cfg, f.eps, input, result, ms_since(t0)).dump(2)
                    << "\n";
        } else {
          std::cout << "points: " << c.size() << "\n"
                    << "slopes: " << spectrum.count() << "\n"
                    << "classes:\n"
                    << class_table_text(spectrum) << "forbidden:\n";
          const auto table = forbidden_slope_table(spectrum);
          for (std::size_t i = 0; i < table.size(); ++i) {
            std::cout << "  " << i << ":";
            for (auto k : table[i]) std::cout << " [" << k << "]";
            std::cout << "\n";
          }
          if (crit)
            std::cout << "criticality: " << criticality_name(crit->kind)
                      << (crit->general_position ? " (general position)" : "") << "\n";
        }
        return kExitOk;
      },
      cfg);
}

struct VerifyOutcome {
  Json report;
  std::string text;
  int code = kExitOk;
};

VerifyOutcome verify_one(const std::string& path, const CommonFlags& f) {
  VerifyOutcome out;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string input = read_file(path);
    const AnyConfiguration cfg = parse_point_file(input, forced_backend(f), f.eps);
    std::visit(
        [&](const auto& c) {
          const auto verdict = verify_theorem(c);
          const Json result = to_json(verdict);
          out.report = make_report("verify", cfg, f.eps, input, result, ms_since(t0));
          std::ostringstream os;
          os << path << ": ";
          if (const auto* r = std::get_if<Refutation>(&verdict)) {
            out.code = kExitRefuted;
            os << "Refutation at " << stage_name(r->stage) << ": " << r->reason;
            if (r->count) os << " (count " << *r->count << ")";
          } else {
            const auto& cert = std::get<0>(verdict);
            os << "Certificate: n=" << c.size() << ", missing vertex (" << to_string(cert.missing_vertex.x)
               << ", " << to_string(cert.missing_vertex.y) << ") after convex position " << cert.gap;
          }
          out.text = os.str();
        },
        cfg);
  } catch (const Error& e) {
    out.code = kExitError;
    out.report = {{"error", error_kind_name(e.kind())}, {"message", e.what()}, {"file", path}};
    out.text = path + ": error: " + e.what();
  }
  return out;
}

int cmd_verify(const std::vector<std::string>& paths, const CommonFlags& f, unsigned jobs) {
  std::vector<VerifyOutcome> outcomes(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < paths.size();) outcomes[i] = verify_one(paths[i], f);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  for (const auto& o : outcomes) code = std::max(code, o.code);
  if (f.json) {
    if (outcomes.size() == 1) {
      std::cout << outcomes[0].report.dump(2) << "\n";
    } else {
      Json arr = Json::array();
      for (auto& o : outcomes) arr.push_back(o.report);
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (const auto& o : outcomes) (o.code == kExitError ? std::cerr : std::cout) << o.text << "\n";
  }
  return code;
}

// "a,b,c" -> tokens
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::variant<Rational, Approx> parse_number(const std::string& t, double eps) {
  std::string s = t;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  static const std::regex exact(R"(-?[0-9]+(/[0-9]*[1-9][0-9]*)?)");
  static const std::regex decimal(R"(-?([0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)([eE][+-]?[0-9]+)?)");
  if (std::regex_match(s, exact)) return Rational(s);
  if (std::regex_match(s, decimal)) return Approx(std::strtod(s.c_str(), nullptr), eps);
  throw Error(ErrorKind::kInvalidSpec, "bad number '" + t + "'");
}

struct GenerateFlags {
  long long polygon = 0;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
  std::int64_t max_den = 1000;
  std::string del;
  std::string affine;
  std::string perturb;
  double eps = kDefaultEps;
};

int cmd_generate(const GenerateFlags& g) {
  GeneratorSpec spec;
  if ((g.polygon > 0) == (g.random > 0))
    throw Error(ErrorKind::kInvalidSpec, "give exactly one of --polygon or --random");
  if (g.polygon > 0) spec.steps.push_back(RegularPolygonStep{g.polygon});
  if (g.random > 0) spec.steps.push_back(RandomGeneralPositionStep{g.random, g.seed, g.bound, g.max_den});
  if (!g.del.empty()) {
    DeleteVerticesStep d;
    for (const auto& t : split_commas(g.del)) {
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(ErrorKind::kInvalidSpec, "bad vertex index '" + t + "'");
      d.indices.push_back(std::stoull(t));
    }
    spec.steps.push_back(d);
  }
  if (!g.affine.empty()) {
    const auto t = split_commas(g.affine);
    if (t.size() != 6) throw Error(ErrorKind::kInvalidSpec, "--affine takes a,b,c,d,e,f");
    std::vector<std::variant<Rational, Approx>> v;
    bool all_exact = true;
    for (const auto& s : t) {
      v.push_back(parse_number(s, g.eps));
      all_exact = all_exact && std::holds_alternative<Rational>(v.back());
    }
    if (all_exact) {
      const auto& r = [&](int i) { return std::get<Rational>(v[i]); };
      spec.steps.push_back(AffineImageStep{AffineMap<Rational>::make(r(0), r(1), r(2), r(3), r(4), r(5))});
    } else {
      auto a = [&](int i) {
        return std::visit([&](const auto& x) { return Approx(to_double(x), g.eps); }, v[i]);
      };
      spec.steps.push_back(AffineImageStep{AffineMap<Approx>::make(a(0), a(1), a(2), a(3), a(4), a(5))});
    }
  }
  if (!g.perturb.empty()) spec.steps.push_back(PerturbStep{parse_number(g.perturb, g.eps), g.seed});
  std::cout << format_point_file(run_generator(spec, g.eps));
  return kExitOk;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& highlight,
               const CommonFlags& f) {
  const AnyConfiguration cfg = parse_point_file(read_file(path), forced_backend(f), f.eps);
  const RenderOptions opt = parse_highlight(highlight);
  const std::string svg = std::visit([&](const auto& c) { return render_svg(c, opt); }, cfg);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error(ErrorKind::kInvalidSpec, "cannot write '" + out + "'");
    os << svg;
  }
  return kExitOk;
}

int cmd_case(const std::string& path, const CommonFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string input = read_file(path);
  const AnyConfiguration cfg = parse_point_file(input, forced_backend(f), f.eps);
  return std::visit(
      [&](const auto& c) {
        Json result;
        int code = kExitOk;
        std::string text;
        try {
          const ProofCase pc = classify_proof_case(c);
          result = to_json(pc);
          text = std::string(proof_case_name(pc.tag)) + " (rotation " + std::to_string(pc.rotation) +
                 (pc.reflected ? ", reflected)" : ")");
        } catch (const Error& e) {
          code = kExitRefused;
          result = {{"refused", error_kind_name(e.kind())}, {"reason", e.what()}};
          text = std::string("refused: ") + e.what();
        }
        if (f.json) {
          std::cout << make_report("case", cfg, f.eps, input, result, ms_since(t0)).dump(2) << "\n";
        } else {
          std::cout << text << "\n";
        }
        return code;
      },
      cfg);
}

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--backend", f.backend, "Force the scalar backend")
      ->check(CLI::IsMember({"rational", "float"}));
  app->add_option("--eps", f.eps, "Relative tolerance for the float backend")
      ->check(CLI::PositiveNumber);
  app->add_flag("--json", f.json, "Emit a JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope spectra, conic group law and n+1-slope verification"};
  app.require_subcommand(1);

  double default_eps = kDefaultEps;
  if (const char* env = std::getenv("SLOPES_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) default_eps = v;
  }

  CommonFlags flags;
  flags.eps = default_eps;
  std::string file;
  std::vector<std::string> files;
  unsigned jobs = 1;
  std::string out, highlight;
  GenerateFlags gen;
  gen.eps = default_eps;

  auto* analyze = app.add_subcommand("analyze", "Slope spectrum, forbidden slopes, criticality");
  analyze->add_option("file", file, "Point file")->required();
  add_common(analyze, flags);

  auto* verify = app.add_subcommand("verify", "Certify or refute n points with n+1 slopes");
  verify->add_option("files", files, "Point files")->required();
  verify->add_option("--jobs", jobs, "Verify files in parallel")->check(CLI::Range(1u, 256u));
  add_common(verify, flags);

  auto* generate = app.add_subcommand("generate", "Write a generated configuration");
  generate->add_option("--polygon", gen.polygon, "Regular m-gon source");
  generate->add_option("--random", gen.random, "Random rational general-position source");
  generate->add_option("--seed", gen.seed, "Seed for --random and --perturb");
  generate->add_option("--bound", gen.bound, "Coordinate bound for --random");
  generate->add_option("--max-den", gen.max_den, "Denominator bound for --random");
  generate->add_option("--delete", gen.del, "Delete vertices i,j,...");
  generate->add_option("--affine", gen.affine, "Affine image a,b,c,d,e,f");
  generate->add_option("--perturb", gen.perturb, "Perturb every coordinate by up to delta");
  generate->add_option("--eps", gen.eps, "Tolerance for float output")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Draw an SVG figure");
  render->add_option("file", file, "Point file")->required();
  render->add_option("--out", out, "SVG path (stdout when omitted)");
  render->add_option("--highlight", highlight,
                     "none | conic | forbidden i | parallel [dx,dy]");
  add_common(render, flags);

  auto* kase = app.add_subcommand("case", "Proof case of a configuration");
  kase->add_option("file", file, "Point file")->required();
  add_common(kase, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (*analyze) return cmd_analyze(file, flags);
    if (*verify) return cmd_verify(files, flags, jobs);
    if (*generate) return cmd_generate(gen);
    if (*render) return cmd_render(file, out, highlight, flags);
    if (*kase) return cmd_case(file, flags);
  } catch (const Error& e) {
    print_error(e, flags.json);
    return kExitError;
  }
  return kExitError;
}
