#include "qclass/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qclass/natrep.hpp"
#include "qclass/singular.hpp"
#include "qclass/spectra.hpp"
#include "qclass/tensor.hpp"

namespace qclass {

namespace {

using Task = std::function<std::vector<Outcome>()>;

struct NamedTask {
  std::string id;  // used to name resource failures
  Task run;
};

Outcome from_check(const std::string& id, const std::string& anchor, const CheckResult& c) {
  return {id, anchor, pass_if(c.pass), c.detail};
}

std::vector<Outcome> prefixed(const std::string& prefix, std::vector<Outcome> os) {
  for (auto& o : os) o.id = prefix + o.id;
  return os;
}

void rmatrix_tasks(const SuiteConfig& cfg, std::vector<NamedTask>& tasks) {
  const OrthoRank rank = cfg.cls.rank();
  tasks.push_back({"rmatrix.defining_relations", [rank] {
                     std::vector<Outcome> out;
                     for (const auto& c : check_defining_relations(build_natrep(rank)))
                       out.push_back(from_check("rmatrix.relations." + c.name,
                                                "natural representation satisfies the defining relations", c));
                     return out;
                   }});
  tasks.push_back({"rmatrix.qybe", [rank] {
                     return std::vector<Outcome>{from_check("rmatrix.qybe", "R_12 R_13 R_23 = R_23 R_13 R_12 exactly",
                                                            check_qybe(rank))};
                   }});
  tasks.push_back({"rmatrix.reflection", [rank] {
                     std::vector<Outcome> out;
                     for (const auto& c : check_reflection_relations(rank))
                       out.push_back(from_check("rmatrix.reflection." + c.name,
                                                "reflection equation identities and A_2 S_12 A_2 kappa = q^{1-N} kappa", c));
                     return out;
                   }});
  tasks.push_back({"rmatrix.s_spectrum", [rank] {
                     return std::vector<Outcome>{from_check(
                         "rmatrix.s_spectrum", "S has exactly the three eigenvalues q, -q^-1, q^{1-N}", check_s_spectrum(rank))};
                   }});
  tasks.push_back({"rmatrix.kappa", [rank] {
                     return std::vector<Outcome>{
                         from_check("rmatrix.kappa", "kappa is an idempotent of rank one", check_kappa(rank))};
                   }});
  tasks.push_back({"rmatrix.s_invariance", [rank] {
                     return std::vector<Outcome>{from_check("rmatrix.s_invariance",
                                                            "S commutes with the coproduct of every generator",
                                                            check_s_invariance(build_natrep(rank)))};
                   }});
}

void verma_tasks(const SuiteConfig& cfg, std::vector<NamedTask>& tasks) {
  const ClassData cls = cfg.cls;
  const ParamMode mode = cfg.mode;
  tasks.push_back({"verma.dimensions", [cls, mode] {
                     std::vector<Outcome> out;
                     ParabolicVerma M(cls, ParamAssignment::make(cls, mode));
                     const Beta delta = delta_coords(cls);
                     {
                       Outcome o{"verma.dim_delta", "dim of the weight space lambda - delta equals the Kostant count", Status::Fail, ""};
                       const int d = M.dim(delta);
                       const long k = kostant_dim(cls, delta);
                       bool ok = d == k;
                       if (cls.symmetric()) ok = ok && d == cls.N - 3;
                       o.status = pass_if(ok);
                       o.witness = "dim = " + std::to_string(d) + ", Kostant count = " + std::to_string(k) +
                                   (cls.symmetric() ? ", N - 3 = " + std::to_string(cls.N - 3) : "");
                       out.push_back(o);
                     }
                     {
                       Outcome o{"verma.kostant_box", "dimensions below lambda - delta match the Kostant count", Status::Fail, ""};
                       int checked = 0, bad = 0;
                       Beta b(delta.size(), 0);
                       while (true) {
                         ++checked;
                         if (M.dim(b) != kostant_dim(cls, b)) ++bad;
                         std::size_t i = 0;
                         while (i < b.size() && b[i] == delta[i]) b[i++] = 0;
                         if (i == b.size()) break;
                         ++b[i];
                       }
                       o.status = pass_if(bad == 0);
                       o.witness = std::to_string(checked) + " weights, " + std::to_string(bad) + " mismatches";
                       out.push_back(o);
                     }
                     {
                       Outcome o{"verma.brute_oracle", "recursive weight space agrees with the all-words quotient", Status::Fail, ""};
                       const BruteSpace bs = brute_space(cls.rank(), cls.levi_simple_indices(), delta);
                       o.status = pass_if(bs.dim() == M.dim(delta));
                       o.witness = std::to_string(bs.words.size()) + " words, brute dim " + std::to_string(bs.dim());
                       out.push_back(o);
                     }
                     {
                       Outcome o{"verma.ker_e1", "ker e_{alpha_1} at lambda - delta has dimension n - 1", Status::Fail, ""};
                       const ConstructionSet cs = build_constructions(cls);
                       const auto ker = M.common_kernel(delta, {cs.letter(1) - 1});
                       o.status = pass_if(static_cast<int>(ker.size()) == cs.rank_prime - 1);
                       o.witness = "dim = " + std::to_string(ker.size()) + ", n - 1 = " + std::to_string(cs.rank_prime - 1);
                       out.push_back(o);
                     }
                     {
                       Outcome o{"verma.commutators", "e_i f_j - f_j e_i acts as delta_ij [h_i] at lambda - delta", Status::Fail, ""};
                       const int n = cls.n();
                       const HighestWeight& hw = M.highest_weight();
                       bool ok = true;
                       const int d = M.dim(delta);
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j) {
                           Beta up = delta, down = delta;
                           up[i] -= 1;
                           down[j] += 1;
                           for (int c = 0; c < d; ++c) {
                             const SparseVec x = SparseVec::unit(c);
                             SparseVec v = M.apply_e(i, down, M.apply_f(j, delta, x));
                             if (up[i] >= 0) v -= M.apply_f(j, up, M.apply_e(i, delta, x));
                             if (i == j) v -= x.scaled(gauss_bracket(hw.cartan(i, delta)));
                             ok = ok && v.is_zero();
                           }
                         }
                       o.status = pass_if(ok);
                       o.witness = ok ? "all pairs" : "mismatch";
                       out.push_back(o);
                     }
                     return out;
                   }});
  tasks.push_back({"verma.quotient_dim", [cls, mode] {
                     Outcome o{"verma.quotient_dim", "dim [M_lambda]_{lambda-delta} = dim [M-hat_lambda]_{lambda-delta} - 1",
                               Status::Skipped, ""};
                     if (mode == ParamMode::Generic) {
                       o.witness = "generic mode has no singular vector";
                       return std::vector<Outcome>{o};
                     }
                     auto base = std::make_shared<ParabolicVerma>(cls, ParamAssignment::make(cls, mode));
                     auto Q = make_quotient(cls, base);
                     const Beta delta = delta_coords(cls);
                     const int a = base->dim(delta), b = Q->dim(delta);
                     o.status = pass_if(b == a - 1);
                     o.witness = "hat " + std::to_string(a) + ", quotient " + std::to_string(b);
                     return std::vector<Outcome>{o};
                   }});
}

void singular_tasks(const SuiteConfig& cfg, std::vector<NamedTask>& tasks) {
  const ClassData cls = cfg.cls;
  const ParamMode mode = cfg.mode;
  for (const auto& name : lemma_names()) {
    tasks.push_back({"singular.lemma." + name, [cls, mode, name] {
                       const ConstructionSet cs = build_constructions(cls);
                       ParabolicVerma M(cls, ParamAssignment::make(cls, mode));
                       Outcome o = verify_lemma(name, cs, M);
                       if (name == "almost_singular" && mode == ParamMode::Generic) {
                         o.status = Status::Skipped;
                         o.witness = "generic mode; " + o.witness;
                       }
                       o.id = "singular.lemma." + o.id;
                       return std::vector<Outcome>{o};
                     }});
  }
  tasks.push_back({"singular.vector", [cls, mode] { return prefixed("singular.", verify_singular(cls, mode)); }});
}

void tensor_tasks(const SuiteConfig& cfg, std::vector<NamedTask>& tasks) {
  const ClassData cls = cfg.cls;
  const ParamMode mode = cfg.mode;
  tasks.push_back({"tensor.filtration", [cls, mode] { return prefixed("tensor.", verify_filtration(cls, mode)); }});
  tasks.push_back({"tensor.span", [cls, mode] { return prefixed("tensor.", verify_span(cls, mode)); }});
  tasks.push_back({"tensor.u_nu2", [cls, mode] {
                     if (cls.ell() != 0) {
                       return std::vector<Outcome>{{"tensor.u_nu2_congruence",
                                                    "u_{nu_2} = q^{-m} [(alpha,lambda)+m] w_{m+1} (x) v_lambda modulo V_1",
                                                    Status::Skipped, "the explicit u_{nu_2} is given for l = 0 only"}};
                     }
                     return prefixed("tensor.", verify_u_nu2_congruence(cls, mode));
                   }});
}

void spectra_tasks(const SuiteConfig& cfg, std::vector<NamedTask>& tasks) {
  const ClassData cls = cfg.cls;
  const ParamMode mode = cfg.mode;
  tasks.push_back({"spectra", [cls, mode] { return prefixed("spectra.", verify_spectra(cls, mode)); }});
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.outcome.status == Status::Fail) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rmatrix", "verma", "singular", "tensor", "spectra", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_suite(const SuiteConfig& config) {
  if (!is_suite(config.suite)) throw ConfigError("unknown suite " + config.suite);
  std::vector<NamedTask> tasks;
  const bool all = config.suite == "all";
  if (all || config.suite == "rmatrix") rmatrix_tasks(config, tasks);
  if (all || config.suite == "verma") verma_tasks(config, tasks);
  if (all || config.suite == "singular") singular_tasks(config, tasks);
  if (all || config.suite == "tensor") tensor_tasks(config, tasks);
  if (all || config.suite == "spectra") spectra_tasks(config, tasks);

  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks.size();) {
      const auto start = std::chrono::steady_clock::now();
      try {
        auto outs = tasks[t].run();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (auto& o : outs) results[t].push_back({std::move(o), ms / static_cast<double>(std::max<std::size_t>(outs.size(), 1))});
      } catch (const ResourceError& e) {
        errors[t] = std::make_exception_ptr(ResourceError(tasks[t].id + ": " + e.what()));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report r;
  r.config = config;
  for (auto& rs : results)
    for (auto& c : rs) r.checks.push_back(std::move(c));
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.outcome.id < b.outcome.id; });
  return r;
}

std::string report_json(const Report& r, bool timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.config.suite;
  j["class"] = {{"N", r.config.cls.N}, {"gl_blocks", r.config.cls.gl_blocks}, {"m", r.config.cls.m}, {"p", r.config.cls.p}};
  j["mode"] = mode_name(r.config.mode);
  j["status"] = r.passed() ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.outcome.id;
    e["anchor"] = c.outcome.anchor;
    e["status"] = status_name(c.outcome.status);
    e["witness"] = c.outcome.witness;
    if (timing) e["wall_time_ms"] = std::round(c.wall_time_ms * 1000.0) / 1000.0;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r, bool timing) {
  std::ostringstream os;
  os << "suite " << r.config.suite << " on " << r.config.cls.str() << " (" << mode_name(r.config.mode) << ")\n";
  for (const auto& c : r.checks) {
    os << "[" << status_name(c.outcome.status) << "] " << c.outcome.id << "\n";
    os << "    claim:   " << c.outcome.anchor << "\n";
    os << "    witness: " << c.outcome.witness << "\n";
    if (timing) os << "    time:    " << std::fixed << std::setprecision(1) << c.wall_time_ms << " ms\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

ParamMode parse_mode(const std::string& s) {
  if (s == "generic") return ParamMode::Generic;
  if (s == "specialized") return ParamMode::Specialized;
  throw ConfigError("mode must be generic or specialized, got " + s);
}

SuiteConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig cfg;
  try {
    const auto& c = j.contains("class") ? j.at("class") : j;
    const int N = c.at("N").get<int>();
    const auto blocks = c.value("gl_blocks", std::vector<int>{});
    const int m = c.at("m").get<int>();
    const int p = c.at("p").get<int>();
    cfg.cls = ClassData::make(N, blocks, m, p);
    if (j.contains("mode")) cfg.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("suite")) cfg.suite = j.at("suite").get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    if (j.contains("caps")) {
      const auto& caps = j.at("caps");
      cfg.word_length_cap = caps.value("word_length", 0);
      cfg.window_cap = caps.value("window", 0);
      if (cfg.word_length_cap < 0 || cfg.window_cap < 0 || (caps.contains("word_length") && cfg.word_length_cap == 0) ||
          (caps.contains("window") && cfg.window_cap == 0))
        throw ConfigError("caps must be positive");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  } catch (const ClassDataError& e) {
    throw ConfigError(std::string("invalid class: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid class: ") + e.what());
  }
  if (cfg.cls.N > 9) throw ConfigError("N must be at most 9");
  if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
  return cfg;
}

}  // namespace qclass
